#pragma once

#include <string_view>
#include <vector>

#include "secoal/coalition.hpp"
#include "secoal/graph.hpp"
#include "secoal/partition.hpp"

namespace secoal {

/// Structural classes of graphs with SEC(G) = n.
///
/// F1..F4 are recognised around a minimum-degree vertex v with P = N(v) and
/// Q = V - N[v], where Q is non-empty and induces a clique:
///   F4  P is a clique and some P-Q edge exists.
///   F3  P is not a clique and every P-Q pair is adjacent.
///   F2  P is not a clique and every vertex of P with a non-neighbour in Q
///       is adjacent to all of P.
///   F1  P is not a clique and splits into cliques B1, B2 with B1 fully
///       joined to Q.
/// Kn marks a complete graph and KpUnionKq a union of exactly two cliques.
enum class FamilyTag { F1, F2, F3, F4, Kn, KpUnionKq };

std::string_view family_tag_name(FamilyTag tag);

struct FamilyWitness {
    FamilyTag tag = FamilyTag::Kn;
    /// Minimum-degree vertex the F-label was found around.
    Vertex pivot = 0;
    /// Clique split of N(pivot); F1 only.
    VertexSet clique_joined_to_q;
    VertexSet clique_rest;
};

/// Every matching label with the first witness found for it. An empty label
/// list means "None".
struct FamilyLabel {
    std::vector<FamilyTag> labels;
    std::vector<FamilyWitness> witnesses;

    bool none() const { return labels.empty(); }
    bool has(FamilyTag tag) const;
    bool has_f_label() const;
    std::string to_string() const;
};

/// Tests every minimum-degree vertex (and for F1 every clique split of its
/// neighbourhood); a label is reported if any choice works.
FamilyLabel classify_family(const Graph& g);

/// Connected: an F-label or Kn. Disconnected: KpUnionKq.
bool predict_sec_equals_n(const Graph& g);

enum class TreeCategory {
    SecEqualsN,         ///< P_1 .. P_4
    SecEqualsNMinus1,   ///< S_4 and P_5
    SecAtMostNMinus2,   ///< every other tree
};

std::string_view tree_category_name(TreeCategory category);

/// Predicted SEC category of a tree from its shape alone.
TreeCategory predict_tree_category(const Graph& tree);

struct TreeVerdict {
    TreeCategory predicted = TreeCategory::SecAtMostNMinus2;
    int n = 0;
    int sec = 0;
    Partition witness;
    bool agrees = false;
};

/// Throws InvalidArgument for a non-tree and CapExceeded above `cap`.
TreeVerdict tree_sec_profile(const Graph& tree, int cap = kDefaultTreeSearchCap);

}  // namespace secoal
