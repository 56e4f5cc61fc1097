#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "secoal/graph.hpp"

namespace secoal {

/// Largest order enumerate_trees accepts (n^(n-2) Prüfer sequences).
inline constexpr int kTreeEnumerationCap = 10;

/// Labeled tree on n = sequence.size() + 2 vertices with the given Prüfer
/// sequence. Entries must lie in 0..n-1.
Graph decode_prufer(std::span<const int> sequence);

/// Prüfer sequence of a labeled tree (inverse of decode_prufer).
std::vector<int> encode_prufer(const Graph& tree);

/// Isomorphism-invariant key of a tree: the AHU parenthesis code rooted at
/// the centre (or both halves of the central edge). Two trees of the same
/// order are isomorphic iff their keys are equal. Order must be <= 30.
std::uint64_t tree_canonical_key(const Graph& tree);

/// One representative per isomorphism class of trees of order n, in order
/// of first appearance among lexicographically enumerated Prüfer sequences.
/// Throws CapExceeded above kTreeEnumerationCap.
std::vector<Graph> enumerate_trees(int n);

}  // namespace secoal
