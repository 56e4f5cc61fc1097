#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "secoal/errors.hpp"

namespace secoal {

using Vertex = int;
using Mask = std::uint64_t;

/// Default order limit for parsed and generated graphs (one machine word of
/// 32 vertices per adjacency row). Can be raised per call up to kMaxVertexCap.
inline constexpr int kDefaultVertexCap = 32;
inline constexpr int kMaxVertexCap = 64;

/// Largest order accepted by is_isomorphic.
inline constexpr int kIsomorphismCap = 10;

constexpr Mask vertex_bit(Vertex v) noexcept { return Mask{1} << v; }

constexpr Mask low_mask(int n) noexcept
{
    return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}

/// A subset of the vertices 0..63 of some graph, stored as a bitmask.
class VertexSet {
public:
    class iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = Vertex;
        using difference_type = std::ptrdiff_t;
        using pointer = const Vertex*;
        using reference = Vertex;

        constexpr iterator() = default;
        constexpr explicit iterator(Mask rest) : rest_(rest) {}

        constexpr Vertex operator*() const { return std::countr_zero(rest_); }
        constexpr iterator& operator++()
        {
            rest_ &= rest_ - 1;
            return *this;
        }
        constexpr iterator operator++(int)
        {
            iterator old = *this;
            ++*this;
            return old;
        }
        constexpr bool operator==(const iterator&) const = default;

    private:
        Mask rest_ = 0;
    };

    constexpr VertexSet() = default;
    constexpr explicit VertexSet(Mask bits) : bits_(bits) {}
    constexpr VertexSet(std::initializer_list<Vertex> vertices)
    {
        for (Vertex v : vertices) bits_ |= vertex_bit(v);
    }

    static constexpr VertexSet single(Vertex v) { return VertexSet(vertex_bit(v)); }
    static constexpr VertexSet first_n(int n) { return VertexSet(low_mask(n)); }
    static VertexSet from_vertices(std::span<const Vertex> vertices);

    constexpr Mask bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool contains(Vertex v) const { return (bits_ >> v) & 1U; }
    constexpr bool subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
    constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }
    /// Smallest member; the set must be non-empty.
    constexpr Vertex front() const { return std::countr_zero(bits_); }

    constexpr VertexSet with(Vertex v) const { return VertexSet(bits_ | vertex_bit(v)); }
    constexpr VertexSet without(Vertex v) const { return VertexSet(bits_ & ~vertex_bit(v)); }

    constexpr iterator begin() const { return iterator(bits_); }
    constexpr iterator end() const { return iterator(0); }

    std::vector<Vertex> to_vector() const;

    friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
    friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
    friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
    constexpr VertexSet& operator|=(VertexSet o)
    {
        bits_ |= o.bits_;
        return *this;
    }
    constexpr VertexSet& operator-=(VertexSet o)
    {
        bits_ &= ~o.bits_;
        return *this;
    }
    friend constexpr bool operator==(VertexSet, VertexSet) = default;
    friend constexpr auto operator<=>(VertexSet, VertexSet) = default;

private:
    Mask bits_ = 0;
};

using Edge = std::pair<Vertex, Vertex>;

/// Immutable simple undirected graph on vertices 0..n-1 with one adjacency
/// bitmask per vertex. Construction rejects loops and asymmetric rows.
class Graph {
public:
    /// Throws InvalidArgument unless 1 <= n <= kMaxVertexCap, adj has n rows
    /// inside 0..n-1, rows are symmetric and no vertex is its own neighbour.
    Graph(int n, std::vector<Mask> adj, std::string label = {});

    static Graph edgeless(int n, std::string label = {});
    static Graph from_edges(int n, std::span<const Edge> edges, std::string label = {});

    int order() const { return static_cast<int>(adj_.size()); }
    int size() const;

    VertexSet vertices() const { return VertexSet::first_n(order()); }
    VertexSet neighbors(Vertex v) const { return VertexSet(adj_[v]); }
    VertexSet closed_neighbors(Vertex v) const { return VertexSet(adj_[v] | vertex_bit(v)); }
    Mask row(Vertex v) const { return adj_[v]; }
    std::span<const Mask> rows() const { return adj_; }
    bool adjacent(Vertex u, Vertex v) const { return (adj_[u] >> v) & 1U; }
    int degree(Vertex v) const { return std::popcount(adj_[v]); }
    int min_degree() const;
    int max_degree() const;
    std::vector<int> degree_sequence() const;
    std::vector<Edge> edges() const;

    bool is_complete() const { return min_degree() == order() - 1; }
    bool is_edgeless() const { return max_degree() == 0; }
    bool is_clique(VertexSet s) const;
    VertexSet isolated_vertices() const;
    VertexSet full_vertices() const;

    const std::string& label() const { return label_; }
    Graph with_label(std::string label) const;

    /// Labeled equality: identical order and adjacency rows. Labels are ignored.
    friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

private:
    std::vector<Mask> adj_;
    std::string label_;
};

enum class Family { Path, Cycle, Star, Complete, Empty };

/// Parses "path", "cycle", "star", "complete" or "empty".
Family parse_family(std::string_view name);
std::string_view family_name(Family family);

/// Standard labeled member of a family. Paths run 0-1-...-(n-1); the star
/// K_{1,n-1} has centre 0. Cycles need n >= 3, everything else n >= 1.
Graph generate(Family family, int n, int max_order = kDefaultVertexCap);

/// Second graph's vertices are shifted by the first graph's order.
Graph disjoint_union(const Graph& a, const Graph& b, int max_order = kDefaultVertexCap);

Graph complement(const Graph& g);

/// Subgraph induced by `keep`, with vertices renumbered in increasing order.
Graph induced_subgraph(const Graph& g, VertexSet keep);

/// Connected components ordered by their smallest vertex.
std::vector<VertexSet> components(const Graph& g);
bool is_connected(const Graph& g);
bool is_tree(const Graph& g);

/// Exact isomorphism test by backtracking over degree-compatible bijections.
/// Throws CapExceeded when either order exceeds kIsomorphismCap.
bool is_isomorphic(const Graph& a, const Graph& b);

}  // namespace secoal
