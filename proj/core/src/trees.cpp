#include "secoal/trees.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <unordered_set>

namespace secoal {

namespace {

constexpr int kCanonicalKeyOrderLimit = 30;

struct Code {
    std::uint64_t bits = 0;
    int length = 0;

    friend bool operator<(const Code& a, const Code& b)
    {
        return a.length != b.length ? a.length < b.length : a.bits < b.bits;
    }
};

// AHU code: 1, children's codes in sorted order, 0.
Code rooted_code(std::span<const Mask> adj, Vertex v, Vertex parent)
{
    std::array<Code, kCanonicalKeyOrderLimit> children{};
    int count = 0;
    Mask rest = adj[v];
    if (parent >= 0) rest &= ~vertex_bit(parent);
    for (Vertex w : VertexSet(rest)) children[count++] = rooted_code(adj, w, v);
    std::sort(children.begin(), children.begin() + count);
    Code out{1, 1};
    for (int i = 0; i < count; ++i) {
        out.bits = (out.bits << children[i].length) | children[i].bits;
        out.length += children[i].length;
    }
    out.bits <<= 1;
    out.length += 1;
    return out;
}

std::uint64_t canonical_key(std::span<const Mask> adj)
{
    const int n = static_cast<int>(adj.size());
    Mask remaining = low_mask(n);
    while (std::popcount(remaining) > 2) {
        Mask leaves = 0;
        for (Vertex v : VertexSet(remaining)) {
            if (std::popcount(adj[v] & remaining) <= 1) leaves |= vertex_bit(v);
        }
        remaining &= ~leaves;
    }
    const Vertex c1 = std::countr_zero(remaining);
    if (std::popcount(remaining) == 1) return rooted_code(adj, c1, -1).bits;
    const Vertex c2 = std::countr_zero(remaining & ~vertex_bit(c1));
    Code a = rooted_code(adj, c1, c2);
    Code b = rooted_code(adj, c2, c1);
    if (b < a) std::swap(a, b);
    return (std::uint64_t{1} << 61) | (a.bits << b.length) | b.bits;
}

// Prüfer decoding into adjacency rows; `adj` must hold n zeroed rows.
void decode_into(std::span<const int> sequence, std::span<Mask> adj)
{
    const int n = static_cast<int>(adj.size());
    std::array<int, kMaxVertexCap> remaining_degree{};
    for (int v = 0; v < n; ++v) remaining_degree[v] = 1;
    for (int a : sequence) ++remaining_degree[a];
    Mask leaves = 0;
    for (int v = 0; v < n; ++v) {
        if (remaining_degree[v] == 1) leaves |= vertex_bit(v);
    }
    for (int a : sequence) {
        const Vertex leaf = std::countr_zero(leaves);
        leaves &= ~vertex_bit(leaf);
        adj[leaf] |= vertex_bit(a);
        adj[a] |= vertex_bit(leaf);
        if (--remaining_degree[a] == 1) leaves |= vertex_bit(a);
    }
    const Vertex u = std::countr_zero(leaves);
    const Vertex w = std::countr_zero(leaves & ~vertex_bit(u));
    adj[u] |= vertex_bit(w);
    adj[w] |= vertex_bit(u);
}

}  // namespace

Graph decode_prufer(std::span<const int> sequence)
{
    const int n = static_cast<int>(sequence.size()) + 2;
    if (n > kMaxVertexCap) throw CapExceeded("Prüfer sequence too long");
    for (int a : sequence) {
        if (a < 0 || a >= n) throw InvalidArgument("Prüfer entry " + std::to_string(a) + " out of range");
    }
    std::vector<Mask> adj(static_cast<std::size_t>(n), 0);
    decode_into(sequence, adj);
    return Graph(n, std::move(adj));
}

std::vector<int> encode_prufer(const Graph& tree)
{
    if (!is_tree(tree)) throw InvalidArgument("Prüfer encoding needs a tree");
    const int n = tree.order();
    if (n < 2) throw InvalidArgument("Prüfer encoding needs at least two vertices");
    std::vector<Mask> adj(tree.rows().begin(), tree.rows().end());
    std::vector<int> out;
    Mask alive = low_mask(n);
    for (int step = 0; step < n - 2; ++step) {
        Vertex leaf = -1;
        for (Vertex v : VertexSet(alive)) {
            if (std::popcount(adj[v]) == 1) {
                leaf = v;
                break;
            }
        }
        const Vertex parent = std::countr_zero(adj[leaf]);
        out.push_back(parent);
        adj[parent] &= ~vertex_bit(leaf);
        adj[leaf] = 0;
        alive &= ~vertex_bit(leaf);
    }
    return out;
}

std::uint64_t tree_canonical_key(const Graph& tree)
{
    if (!is_tree(tree)) throw InvalidArgument("canonical key needs a tree");
    if (tree.order() > kCanonicalKeyOrderLimit) {
        throw CapExceeded("tree canonical key is limited to order " + std::to_string(kCanonicalKeyOrderLimit));
    }
    return canonical_key(tree.rows());
}

std::vector<Graph> enumerate_trees(int n)
{
    if (n < 1) throw InvalidArgument("tree order must be at least 1");
    if (n > kTreeEnumerationCap) {
        throw CapExceeded("tree enumeration is limited to order " + std::to_string(kTreeEnumerationCap));
    }
    if (n == 1) return {Graph::edgeless(1)};

    std::vector<Graph> out;
    std::unordered_set<std::uint64_t> seen;
    std::vector<int> sequence(static_cast<std::size_t>(n - 2), 0);
    std::vector<Mask> adj(static_cast<std::size_t>(n));
    while (true) {
        std::fill(adj.begin(), adj.end(), 0);
        decode_into(sequence, adj);
        if (seen.insert(canonical_key(adj)).second) out.emplace_back(n, adj);

        int i = n - 3;
        while (i >= 0 && sequence[static_cast<std::size_t>(i)] == n - 1) {
            sequence[static_cast<std::size_t>(i)] = 0;
            --i;
        }
        if (i < 0) break;
        ++sequence[static_cast<std::size_t>(i)];
    }
    return out;
}

}  // namespace secoal
