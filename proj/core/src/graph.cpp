#include "secoal/graph.hpp"

#include <algorithm>
#include <string>

namespace secoal {

VertexSet VertexSet::from_vertices(std::span<const Vertex> vertices)
{
    VertexSet s;
    for (Vertex v : vertices) {
        if (v < 0 || v >= kMaxVertexCap) {
            throw InvalidArgument("vertex index " + std::to_string(v) + " out of range");
        }
        s = s.with(v);
    }
    return s;
}

std::vector<Vertex> VertexSet::to_vector() const
{
    return {begin(), end()};
}

Graph::Graph(int n, std::vector<Mask> adj, std::string label)
    : adj_(std::move(adj)), label_(std::move(label))
{
    if (n < 1 || n > kMaxVertexCap) {
        throw InvalidArgument("graph order " + std::to_string(n) + " outside 1.." +
                              std::to_string(kMaxVertexCap));
    }
    if (static_cast<int>(adj_.size()) != n) {
        throw InvalidArgument("adjacency has " + std::to_string(adj_.size()) + " rows, expected " +
                              std::to_string(n));
    }
    const Mask inside = low_mask(n);
    for (Vertex i = 0; i < n; ++i) {
        if (adj_[i] & ~inside) throw InvalidArgument("adjacency row references a vertex >= n");
        if (adj_[i] & vertex_bit(i)) {
            throw InvalidArgument("self-loop at vertex " + std::to_string(i));
        }
        for (Vertex j : VertexSet(adj_[i])) {
            if (!(adj_[j] & vertex_bit(i))) {
                throw InvalidArgument("asymmetric adjacency between " + std::to_string(i) + " and " +
                                      std::to_string(j));
            }
        }
    }
}

Graph Graph::edgeless(int n, std::string label)
{
    return Graph(n, std::vector<Mask>(static_cast<std::size_t>(std::max(n, 0)), 0), std::move(label));
}

Graph Graph::from_edges(int n, std::span<const Edge> edges, std::string label)
{
    if (n < 1 || n > kMaxVertexCap) {
        throw InvalidArgument("graph order " + std::to_string(n) + " outside 1.." +
                              std::to_string(kMaxVertexCap));
    }
    std::vector<Mask> adj(static_cast<std::size_t>(n), 0);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n) {
            throw InvalidArgument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                  ") out of range");
        }
        if (u == v) throw InvalidArgument("self-loop at vertex " + std::to_string(u));
        adj[u] |= vertex_bit(v);
        adj[v] |= vertex_bit(u);
    }
    return Graph(n, std::move(adj), std::move(label));
}

int Graph::size() const
{
    int twice = 0;
    for (Mask r : adj_) twice += std::popcount(r);
    return twice / 2;
}

int Graph::min_degree() const
{
    int best = order();
    for (Mask r : adj_) best = std::min(best, std::popcount(r));
    return best;
}

int Graph::max_degree() const
{
    int best = 0;
    for (Mask r : adj_) best = std::max(best, std::popcount(r));
    return best;
}

std::vector<int> Graph::degree_sequence() const
{
    std::vector<int> d;
    d.reserve(adj_.size());
    for (Mask r : adj_) d.push_back(std::popcount(r));
    return d;
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    for (Vertex u = 0; u < order(); ++u) {
        for (Vertex v : VertexSet(adj_[u] & ~low_mask(u + 1))) out.emplace_back(u, v);
    }
    return out;
}

bool Graph::is_clique(VertexSet s) const
{
    for (Vertex v : s) {
        if (!(s.without(v)).subset_of(neighbors(v))) return false;
    }
    return true;
}

VertexSet Graph::isolated_vertices() const
{
    VertexSet out;
    for (Vertex v = 0; v < order(); ++v) {
        if (adj_[v] == 0) out = out.with(v);
    }
    return out;
}

VertexSet Graph::full_vertices() const
{
    VertexSet out;
    for (Vertex v = 0; v < order(); ++v) {
        if (degree(v) == order() - 1) out = out.with(v);
    }
    return out;
}

Graph Graph::with_label(std::string label) const
{
    Graph copy = *this;
    copy.label_ = std::move(label);
    return copy;
}

Family parse_family(std::string_view name)
{
    if (name == "path") return Family::Path;
    if (name == "cycle") return Family::Cycle;
    if (name == "star") return Family::Star;
    if (name == "complete") return Family::Complete;
    if (name == "empty") return Family::Empty;
    throw ParseError("unknown graph family '" + std::string(name) + "'");
}

std::string_view family_name(Family family)
{
    switch (family) {
    case Family::Path: return "path";
    case Family::Cycle: return "cycle";
    case Family::Star: return "star";
    case Family::Complete: return "complete";
    case Family::Empty: return "empty";
    }
    return "?";
}

namespace {

void check_order(int n, int max_order)
{
    if (max_order > kMaxVertexCap) {
        throw InvalidArgument("vertex cap cannot exceed " + std::to_string(kMaxVertexCap));
    }
    if (n > max_order) {
        throw CapExceeded("order " + std::to_string(n) + " exceeds the vertex cap " +
                          std::to_string(max_order));
    }
}

}  // namespace

Graph generate(Family family, int n, int max_order)
{
    const int minimum = family == Family::Cycle ? 3 : 1;
    if (n < minimum) {
        throw InvalidArgument(std::string(family_name(family)) + " needs at least " +
                              std::to_string(minimum) + " vertices");
    }
    check_order(n, max_order);

    std::vector<Edge> edges;
    switch (family) {
    case Family::Path:
        for (Vertex i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
        break;
    case Family::Cycle:
        for (Vertex i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
        break;
    case Family::Star:
        for (Vertex i = 1; i < n; ++i) edges.emplace_back(0, i);
        break;
    case Family::Complete:
        for (Vertex i = 0; i < n; ++i)
            for (Vertex j = i + 1; j < n; ++j) edges.emplace_back(i, j);
        break;
    case Family::Empty:
        break;
    }
    return Graph::from_edges(n, edges, std::string(family_name(family)) + ":" + std::to_string(n));
}

Graph disjoint_union(const Graph& a, const Graph& b, int max_order)
{
    const int n = a.order() + b.order();
    check_order(n, max_order);
    std::vector<Mask> adj(a.rows().begin(), a.rows().end());
    for (Mask r : b.rows()) adj.push_back(r << a.order());
    return Graph(n, std::move(adj));
}

Graph complement(const Graph& g)
{
    const Mask all = low_mask(g.order());
    std::vector<Mask> adj;
    adj.reserve(static_cast<std::size_t>(g.order()));
    for (Vertex v = 0; v < g.order(); ++v) adj.push_back(all & ~g.row(v) & ~vertex_bit(v));
    return Graph(g.order(), std::move(adj));
}

Graph induced_subgraph(const Graph& g, VertexSet keep)
{
    if (keep.empty()) throw InvalidArgument("induced subgraph on an empty vertex set");
    std::vector<Vertex> order = keep.to_vector();
    std::vector<int> index(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < order.size(); ++i) index[order[i]] = static_cast<int>(i);
    std::vector<Mask> adj(order.size(), 0);
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (Vertex w : g.neighbors(order[i]) & keep) adj[i] |= vertex_bit(index[w]);
    }
    return Graph(static_cast<int>(order.size()), std::move(adj));
}

std::vector<VertexSet> components(const Graph& g)
{
    std::vector<VertexSet> out;
    VertexSet unseen = g.vertices();
    while (!unseen.empty()) {
        VertexSet comp = VertexSet::single(unseen.front());
        VertexSet frontier = comp;
        while (!frontier.empty()) {
            VertexSet next;
            for (Vertex v : frontier) next |= g.neighbors(v);
            frontier = next - comp;
            comp |= next;
        }
        out.push_back(comp);
        unseen -= comp;
    }
    return out;
}

bool is_connected(const Graph& g)
{
    return components(g).size() == 1;
}

bool is_tree(const Graph& g)
{
    return g.size() == g.order() - 1 && is_connected(g);
}

}  // namespace secoal
