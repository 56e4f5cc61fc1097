#pragma once

#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "secoal/graph.hpp"

namespace secoal {

/// Calls `visit(VertexSet)` for every k-subset of {0..n-1} in increasing
/// bitmask order. Stops early when `visit` returns true; returns whether it did.
template <typename Visit>
bool for_each_k_subset(int n, int k, Visit&& visit)
{
    if (k < 0 || k > n) return false;
    if (k == 0) return visit(VertexSet{});
    const Mask last = low_mask(k) << (n - k);
    Mask s = low_mask(k);
    while (true) {
        if (visit(VertexSet(s))) return true;
        if (s == last) return false;
        const Mask c = s & (~s + 1);
        const Mask r = s + c;
        s = (((r ^ s) >> 2) / c) | r;
    }
}

/// Vertices covered by the closed neighbourhoods of `s`.
VertexSet dominated_by(const Graph& g, VertexSet s);

bool is_dominating(const Graph& g, VertexSet s);

/// Secure domination without a certificate.
bool is_secure_dominating(const Graph& g, VertexSet s);

/// Result of checking the secure-domination swap condition for one set.
///
/// On success `defenders` lists, for every vertex u outside the set, the
/// smallest-index neighbour v inside the set such that (S - v) + u still
/// dominates. On failure `witness` names a vertex that breaks the condition:
/// either an undominated vertex (`dominating` is false) or an outside vertex
/// none of whose neighbours in S can be swapped for it.
struct SecureCertificate {
    bool secure = false;
    bool dominating = false;
    std::vector<std::pair<Vertex, Vertex>> defenders;
    std::optional<Vertex> witness;
};

SecureCertificate certify_secure_domination(const Graph& g, VertexSet s);

/// Re-checks a certificate against the graph without trusting it.
bool replay_certificate(const Graph& g, VertexSet s, const SecureCertificate& cert);

struct DominationResult {
    int count = 0;
    VertexSet witness;
};

/// gamma(G) by subset enumeration in increasing cardinality. The witness is
/// the numerically smallest minimum dominating set.
DominationResult domination_number(const Graph& g);

/// gamma_s(G), same enumeration order as domination_number.
DominationResult secure_domination_number(const Graph& g);

/// Memoised is_secure_dominating for a single graph, used inside solver
/// loops. Confined to one thread and one solver invocation.
class SecureDominationCache {
public:
    explicit SecureDominationCache(const Graph& g);

    bool operator()(VertexSet s);

    const Graph& graph() const { return graph_; }
    std::size_t evaluations() const { return evaluations_; }

private:
    static constexpr int kDenseLimit = 22;

    const Graph& graph_;
    std::vector<signed char> dense_;
    std::unordered_map<Mask, bool> sparse_;
    std::size_t evaluations_ = 0;
};

/// A secure dominating set S and a vertex v outside S such that S + v is not
/// secure dominating, if one exists. Searches every subset, so n must be small.
struct MonotonicityCounterexample {
    VertexSet set;
    Vertex added = 0;
};
std::optional<MonotonicityCounterexample> find_superset_monotonicity_counterexample(const Graph& g);

}  // namespace secoal
