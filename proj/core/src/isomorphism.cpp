#include <algorithm>
#include <array>
#include <string>

#include "secoal/graph.hpp"

namespace secoal {

namespace {

// Maps vertices of `a` to vertices of `b` in index order. Candidates must
// have the same degree and agree on adjacency with every vertex mapped so far.
class IsoSearch {
public:
    IsoSearch(const Graph& a, const Graph& b) : a_(a), b_(b) {}

    bool run() { return extend(0); }

private:
    bool extend(Vertex v)
    {
        const int n = a_.order();
        if (v == n) return true;
        for (Vertex w = 0; w < n; ++w) {
            if (used_.contains(w) || a_.degree(v) != b_.degree(w)) continue;
            bool consistent = true;
            for (Vertex u = 0; u < v && consistent; ++u) {
                consistent = a_.adjacent(u, v) == b_.adjacent(image_[u], w);
            }
            if (!consistent) continue;
            image_[v] = w;
            used_ = used_.with(w);
            if (extend(v + 1)) return true;
            used_ = used_.without(w);
        }
        return false;
    }

    const Graph& a_;
    const Graph& b_;
    std::array<Vertex, kIsomorphismCap> image_{};
    VertexSet used_;
};

}  // namespace

bool is_isomorphic(const Graph& a, const Graph& b)
{
    if (a.order() > kIsomorphismCap || b.order() > kIsomorphismCap) {
        throw CapExceeded("isomorphism test is limited to order " + std::to_string(kIsomorphismCap));
    }
    if (a.order() != b.order() || a.size() != b.size()) return false;
    auto da = a.degree_sequence();
    auto db = b.degree_sequence();
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    return IsoSearch(a, b).run();
}

}  // namespace secoal
