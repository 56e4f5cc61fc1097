#include "secoal/domination.hpp"

namespace secoal {

VertexSet dominated_by(const Graph& g, VertexSet s)
{
    Mask covered = s.bits();
    for (Vertex v : s) covered |= g.row(v);
    return VertexSet(covered);
}

bool is_dominating(const Graph& g, VertexSet s)
{
    return dominated_by(g, s) == g.vertices();
}

namespace {

// Smallest neighbour v of u in s whose swap (s - v) + u still dominates.
std::optional<Vertex> find_defender(const Graph& g, VertexSet s, Vertex u)
{
    for (Vertex v : s & g.neighbors(u)) {
        if (is_dominating(g, s.without(v).with(u))) return v;
    }
    return std::nullopt;
}

}  // namespace

bool is_secure_dominating(const Graph& g, VertexSet s)
{
    if (!is_dominating(g, s)) return false;
    for (Vertex u : g.vertices() - s) {
        if (!find_defender(g, s, u)) return false;
    }
    return true;
}

SecureCertificate certify_secure_domination(const Graph& g, VertexSet s)
{
    SecureCertificate cert;
    const VertexSet missed = g.vertices() - dominated_by(g, s);
    if (!missed.empty()) {
        cert.witness = missed.front();
        return cert;
    }
    cert.dominating = true;
    for (Vertex u : g.vertices() - s) {
        const auto defender = find_defender(g, s, u);
        if (!defender) {
            cert.defenders.clear();
            cert.witness = u;
            return cert;
        }
        cert.defenders.emplace_back(u, *defender);
    }
    cert.secure = true;
    return cert;
}

bool replay_certificate(const Graph& g, VertexSet s, const SecureCertificate& cert)
{
    if (!s.subset_of(g.vertices())) return false;
    if (cert.secure) {
        if (!is_dominating(g, s)) return false;
        VertexSet defended;
        for (auto [u, v] : cert.defenders) {
            if (s.contains(u) || !s.contains(v) || !g.adjacent(u, v)) return false;
            if (!is_dominating(g, s.without(v).with(u))) return false;
            defended = defended.with(u);
        }
        return defended == g.vertices() - s;
    }
    if (!cert.witness) return false;
    const Vertex u = *cert.witness;
    if (u < 0 || u >= g.order()) return false;
    if (!cert.dominating) return !dominated_by(g, s).contains(u);
    if (s.contains(u) || !is_dominating(g, s)) return false;
    for (Vertex v : s & g.neighbors(u)) {
        if (is_dominating(g, s.without(v).with(u))) return false;
    }
    return true;
}

namespace {

template <typename Predicate>
DominationResult smallest_set(const Graph& g, Predicate&& accept)
{
    const int n = g.order();
    for (int k = 1; k <= n; ++k) {
        DominationResult result;
        const bool found = for_each_k_subset(n, k, [&](VertexSet s) {
            if (!accept(s)) return false;
            result = {k, s};
            return true;
        });
        if (found) return result;
    }
    // V itself always qualifies, so this is unreachable for n >= 1.
    throw InternalInconsistency("no qualifying vertex set found");
}

}  // namespace

DominationResult domination_number(const Graph& g)
{
    return smallest_set(g, [&](VertexSet s) { return is_dominating(g, s); });
}

DominationResult secure_domination_number(const Graph& g)
{
    return smallest_set(g, [&](VertexSet s) { return is_secure_dominating(g, s); });
}

SecureDominationCache::SecureDominationCache(const Graph& g) : graph_(g)
{
    if (g.order() <= kDenseLimit) dense_.assign(std::size_t{1} << g.order(), -1);
}

bool SecureDominationCache::operator()(VertexSet s)
{
    if (!dense_.empty()) {
        signed char& slot = dense_[s.bits()];
        if (slot < 0) {
            ++evaluations_;
            slot = is_secure_dominating(graph_, s) ? 1 : 0;
        }
        return slot == 1;
    }
    auto [it, inserted] = sparse_.try_emplace(s.bits(), false);
    if (inserted) {
        ++evaluations_;
        it->second = is_secure_dominating(graph_, s);
    }
    return it->second;
}

std::optional<MonotonicityCounterexample> find_superset_monotonicity_counterexample(const Graph& g)
{
    const int n = g.order();
    if (n > 20) throw CapExceeded("monotonicity scan is limited to order 20");
    SecureDominationCache secure(g);
    for (Mask bits = 1; bits <= low_mask(n); ++bits) {
        const VertexSet s(bits);
        if (!secure(s)) continue;
        for (Vertex v : g.vertices() - s) {
            if (!secure(s.with(v))) return MonotonicityCounterexample{s, v};
        }
    }
    return std::nullopt;
}

}  // namespace secoal
