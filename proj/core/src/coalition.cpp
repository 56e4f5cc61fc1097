#include "secoal/coalition.hpp"

#include <algorithm>
#include <string>

namespace secoal {

namespace {

void require_disjoint_nonempty(VertexSet a, VertexSet b)
{
    if (a.empty() || b.empty()) throw InvalidArgument("coalition sets must be non-empty");
    if (a.intersects(b)) throw InvalidArgument("coalition sets must be disjoint");
}

// Shared shape of c-partitions and sec-partitions: a part with the property
// must be a singleton, every other part needs a partner without the property
// whose union with it has the property.
template <typename Property>
bool blocks_are_coalition_partition(std::span<const VertexSet> blocks, Property&& has_property)
{
    const std::size_t k = blocks.size();
    std::vector<char> has(k);
    for (std::size_t i = 0; i < k; ++i) {
        has[i] = has_property(blocks[i]) ? 1 : 0;
        if (has[i] && blocks[i].size() != 1) return false;
    }
    for (std::size_t i = 0; i < k; ++i) {
        if (has[i]) continue;
        bool partnered = false;
        for (std::size_t j = 0; j < k && !partnered; ++j) {
            partnered = j != i && !has[j] && has_property(blocks[i] | blocks[j]);
        }
        if (!partnered) return false;
    }
    return true;
}

template <typename Property>
PartitionResult search_largest(const Graph& g, int upper, Property&& has_property)
{
    const int n = g.order();
    for (int k = std::min(upper, n); k >= 1; --k) {
        SetPartitionEnumerator partitions(n, k);
        while (partitions.next()) {
            if (blocks_are_coalition_partition(partitions.blocks(), has_property)) {
                return {k, partitions.partition()};
            }
        }
    }
    throw InternalInconsistency("no coalition partition exists for graph " + g.label());
}

void check_cap(const Graph& g, int cap)
{
    if (g.order() > cap) {
        throw CapExceeded("order " + std::to_string(g.order()) + " exceeds the search cap " +
                          std::to_string(cap));
    }
}

}  // namespace

bool forms_secure_coalition(const Graph& g, VertexSet a, VertexSet b)
{
    require_disjoint_nonempty(a, b);
    return !is_secure_dominating(g, a) && !is_secure_dominating(g, b) && is_secure_dominating(g, a | b);
}

bool forms_coalition(const Graph& g, VertexSet a, VertexSet b)
{
    require_disjoint_nonempty(a, b);
    return !is_dominating(g, a) && !is_dominating(g, b) && is_dominating(g, a | b);
}

PartitionVerdict verify_sec_partition(const Graph& g, const Partition& p)
{
    p.validate(g.order());
    const std::size_t k = p.size();
    std::vector<char> secure(k);
    for (std::size_t i = 0; i < k; ++i) secure[i] = is_secure_dominating(g, p[i]) ? 1 : 0;

    PartitionVerdict verdict;
    verdict.valid = true;
    verdict.parts.resize(k);
    for (std::size_t i = 0; i < k; ++i) {
        PartVerdict& part = verdict.parts[i];
        if (secure[i]) {
            if (p[i].size() == 1 && g.degree(p[i].front()) == g.order() - 1) {
                part.status = PartStatus::FullDegreeSingleton;
            } else {
                part.status = PartStatus::Invalid;
                part.reason = InvalidReason::IsSecureDominatingButNotFullSingleton;
                part.own_certificate = certify_secure_domination(g, p[i]);
                verdict.valid = false;
            }
            continue;
        }
        for (std::size_t j = 0; j < k; ++j) {
            if (j == i) continue;
            if (secure[j]) {
                part.failures.push_back({j, PairFailure::Kind::PartnerSecureDominating, std::nullopt});
                continue;
            }
            auto cert = certify_secure_domination(g, p[i] | p[j]);
            if (cert.secure) {
                part.partners.push_back(j);
            } else {
                part.failures.push_back({j, PairFailure::Kind::UnionNotSecureDominating, std::move(cert)});
            }
        }
        if (part.partners.empty()) {
            part.status = PartStatus::Invalid;
            part.reason = InvalidReason::NoCoalitionPartner;
            verdict.valid = false;
        } else {
            part.status = PartStatus::Coalition;
            part.failures.clear();
        }
    }
    return verdict;
}

bool is_sec_partition(const Graph& g, const Partition& p)
{
    p.validate(g.order());
    return blocks_are_coalition_partition(p.parts(), [&](VertexSet s) { return is_secure_dominating(g, s); });
}

bool is_c_partition(const Graph& g, const Partition& p)
{
    p.validate(g.order());
    return blocks_are_coalition_partition(p.parts(), [&](VertexSet s) { return is_dominating(g, s); });
}

PartitionResult sec_number(const Graph& g, const SearchOptions& options)
{
    check_cap(g, options.cap);
    int upper = g.order();
    if (options.use_secure_domination_bound) {
        upper = std::min(upper, g.order() - secure_domination_number(g).count + 2);
    }
    SecureDominationCache secure(g);
    return search_largest(g, upper, secure);
}

PartitionResult coalition_number(const Graph& g, const SearchOptions& options)
{
    check_cap(g, options.cap);
    return search_largest(g, g.order(), [&](VertexSet s) { return is_dominating(g, s); });
}

Partition min_degree_partition(const Graph& g, Vertex pivot)
{
    const VertexSet isolated = g.isolated_vertices();
    std::vector<VertexSet> parts{VertexSet::single(pivot)};
    for (Vertex w : g.neighbors(pivot)) parts.push_back(VertexSet::single(w));
    const VertexSet rest = (g.vertices() - isolated - g.closed_neighbors(pivot)) | isolated.without(pivot);
    if (!rest.empty()) parts.push_back(rest);
    return Partition(std::move(parts));
}

ConstructedPartition construct_sec_partition(const Graph& g, int fallback_cap)
{
    const int n = g.order();
    if (g.is_complete()) {
        return {Partition::singletons(n), ConstructionMethod::CompleteSingletons, std::nullopt, 0};
    }
    if (g.is_edgeless()) {
        Partition p({g.vertices().without(0), VertexSet::single(0)});
        if (!is_sec_partition(g, p)) {
            throw InternalInconsistency("edgeless construction failed verification");
        }
        return {std::move(p), ConstructionMethod::EdgelessPair, std::nullopt, 0};
    }

    const VertexSet isolated = g.isolated_vertices();
    const VertexSet active = g.vertices() - isolated;
    int delta = n;
    for (Vertex v : active) delta = std::min(delta, g.degree(v));
    const auto method = isolated.empty() ? ConstructionMethod::MinDegree : ConstructionMethod::IsolatesMinDegree;

    int attempts = 0;
    for (Vertex pivot : active) {
        if (g.degree(pivot) != delta) continue;
        ++attempts;
        Partition p = min_degree_partition(g, pivot);
        if (is_sec_partition(g, p)) return {std::move(p), method, pivot, attempts};
    }

    if (n <= fallback_cap) {
        return {sec_number(g, {.cap = fallback_cap}).witness, ConstructionMethod::SearchFallback, std::nullopt,
                attempts};
    }
    throw InternalInconsistency("minimum-degree construction did not verify for any pivot and order " +
                                std::to_string(n) + " is above the search cap");
}

std::vector<int> coalition_counts(const Graph& g, const Partition& p)
{
    const auto verdict = verify_sec_partition(g, p);
    if (!verdict.valid) throw InvalidArgument("coalition counts need a valid sec-partition");
    std::vector<int> counts;
    counts.reserve(verdict.parts.size());
    for (const auto& part : verdict.parts) counts.push_back(static_cast<int>(part.partners.size()));
    return counts;
}

int coalition_count_bound(const Graph& g, int gamma)
{
    return std::max(g.max_degree() + 1, g.order() - gamma);
}

BoundReport check_bounds(const Graph& g, int cap)
{
    check_cap(g, cap);
    BoundReport r;
    r.n = g.order();
    r.m = g.size();
    r.delta = g.min_degree();
    r.max_degree = g.max_degree();
    r.gamma = domination_number(g).count;
    r.gamma_s = secure_domination_number(g).count;
    auto sec = sec_number(g, {.cap = cap, .use_secure_domination_bound = false});
    auto c = coalition_number(g, {.cap = cap});
    r.sec = sec.count;
    r.c = c.count;
    r.sec_witness = std::move(sec.witness);
    r.c_witness = std::move(c.witness);

    auto note = [&](bool holds, const std::string& what) {
        if (!holds) r.violations.push_back(what);
        return holds;
    };

    r.sec_in_range = note(1 <= r.sec && r.sec <= r.n, "1 <= SEC <= n");
    r.sec_le_c = note(r.sec <= r.c, "SEC <= C");
    r.sec_le_n_minus_gamma_s_plus_2 = note(r.sec <= r.n - r.gamma_s + 2, "SEC <= n - gamma_s + 2");

    const bool complete = g.is_complete();
    const bool edgeless = g.is_edgeless();
    const VertexSet isolated = g.isolated_vertices();
    if (isolated.empty() && !complete) {
        r.sec_ge_delta_plus_2 = note(r.sec >= r.delta + 2, "SEC >= delta + 2");
    }
    if (!isolated.empty() && !edgeless) {
        const Graph reduced = induced_subgraph(g, g.vertices() - isolated);
        r.sec_ge_reduced_delta_plus_2 =
            note(r.sec >= reduced.min_degree() + 2, "SEC >= delta(G - isolates) + 2");
    }
    if (!complete && !edgeless) r.sec_at_least_3 = note(r.sec >= 3, "SEC >= 3");

    const bool is_k1 = r.n == 1;
    const bool is_k2 = r.n == 2 && r.m == 1;
    const bool empty_graph = r.n >= 2 && edgeless;
    r.sec_small_values_characterized =
        note((r.sec == 1) == is_k1 && (r.sec == 2) == (is_k2 || empty_graph), "SEC in {1,2} characterization");

    r.coalition_count_limit = coalition_count_bound(g, r.gamma);
    for (int count : coalition_counts(g, r.sec_witness)) r.max_coalition_count = std::max(r.max_coalition_count, count);
    r.coalition_counts_bounded =
        note(r.max_coalition_count <= r.coalition_count_limit, "coalition count <= max{Delta+1, n-gamma}");
    return r;
}

}  // namespace secoal
