#include "secoal/scg.hpp"

#include <nlohmann/json.hpp>

#include "secoal/graph_io.hpp"
#include "secoal/json.hpp"

namespace secoal {

Graph build_scg(const Graph& g, const Partition& p)
{
    const auto verdict = verify_sec_partition(g, p);
    if (!verdict.valid) throw InvalidArgument("SCG needs a valid sec-partition");
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < verdict.parts.size(); ++i) {
        for (std::size_t j : verdict.parts[i].partners) {
            if (i < j) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
        }
    }
    return Graph::from_edges(static_cast<int>(p.size()), edges);
}

std::string_view host_construction_name(HostConstruction c)
{
    switch (c) {
    case HostConstruction::Generic: return "generic";
    case HostConstruction::EdgelessPair: return "k2-edgeless-host";
    case HostConstruction::CompleteHost: return "complete-host";
    }
    return "?";
}

int expected_host_order(const Graph& target)
{
    const int n = target.order();
    const int non_edges = n * (n - 1) / 2 - target.size();
    return 2 * n + non_edges;
}

int expected_host_size(const Graph& target)
{
    const int n = target.order();
    const int non_edges = n * (n - 1) / 2 - target.size();
    return n * (n - 1) / 2 + n * (n - 1) + 2 * non_edges * (n - 2);
}

bool is_scg_realizable(const Graph& g)
{
    return !(g.min_degree() == 0 && g.size() > 0);
}

namespace {

// Host edges only; the partition comes from a placement.
struct GenericHost {
    Graph host;
    std::vector<Edge> non_edges;
    std::vector<std::vector<Vertex>> allowed;  ///< parts each y-vertex may join
};

GenericHost generic_host(const Graph& target, int max_host_order)
{
    const int n = target.order();
    auto non_edges = complement(target).edges();
    const int order = 2 * n + static_cast<int>(non_edges.size());
    if (order > max_host_order) {
        throw CapExceeded("realization host order " + std::to_string(order) + " exceeds the vertex cap " +
                          std::to_string(max_host_order));
    }
    auto u = [n](Vertex i) { return n + i; };

    std::vector<Edge> edges;
    for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    }
    for (Vertex i = 0; i < n; ++i) {
        for (Vertex b = 0; b < n; ++b) {
            if (b != i) edges.emplace_back(u(i), b);
        }
    }
    std::vector<std::vector<Vertex>> allowed;
    for (std::size_t t = 0; t < non_edges.size(); ++t) {
        const auto [j, k] = non_edges[t];
        const Vertex y = 2 * n + static_cast<Vertex>(t);
        allowed.emplace_back();
        for (Vertex b = 0; b < n; ++b) {
            if (b == j || b == k) continue;
            edges.emplace_back(y, b);
            edges.emplace_back(y, u(b));
            allowed.back().push_back(b);
        }
    }
    return {Graph::from_edges(order, edges), std::move(non_edges), std::move(allowed)};
}

Realization place(const Graph& target, const GenericHost& h, const std::vector<Vertex>& placement)
{
    const int n = target.order();
    std::vector<VertexSet> parts(static_cast<std::size_t>(n));
    for (Vertex i = 0; i < n; ++i) parts[i] = VertexSet{i, n + i};
    for (std::size_t t = 0; t < placement.size(); ++t) {
        parts[placement[t]] = parts[placement[t]].with(2 * n + static_cast<Vertex>(t));
    }
    Realization r{.target = target, .host = h.host, .partition = Partition(std::move(parts))};
    r.base_map.resize(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < r.base_map.size(); ++i) r.base_map[i] = i;
    r.placement = placement;
    return r;
}

Realization special_host(const Graph& target, HostConstruction kind)
{
    const int n = target.order();
    Graph host = kind == HostConstruction::CompleteHost ? generate(Family::Complete, n, kMaxVertexCap)
                                                        : Graph::edgeless(2);
    Realization r{.target = target, .host = std::move(host), .partition = Partition::singletons(n), .construction = kind};
    r.base_map.resize(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < r.base_map.size(); ++i) r.base_map[i] = i;
    return r;
}

}  // namespace

std::optional<ConstructionGap> verify_realization(const Realization& r)
{
    const Graph& host = r.host;
    if (auto defect = r.partition.defect(host.order()); !defect.empty()) {
        return ConstructionGap{"partition is malformed: " + defect, {}, std::nullopt};
    }
    if (r.base_map.size() != static_cast<std::size_t>(r.target.order()) || r.partition.size() != r.base_map.size()) {
        return ConstructionGap{"base map does not match the target order", {}, std::nullopt};
    }
    const auto verdict = verify_sec_partition(host, r.partition);
    for (std::size_t i = 0; i < verdict.parts.size(); ++i) {
        const PartVerdict& part = verdict.parts[i];
        if (part.status != PartStatus::Invalid) continue;
        if (part.reason == InvalidReason::IsSecureDominatingButNotFullSingleton) {
            return ConstructionGap{"part " + std::to_string(i) + " is secure dominating in the host", r.partition[i],
                                   part.own_certificate};
        }
        for (const PairFailure& f : part.failures) {
            if (f.union_certificate) {
                return ConstructionGap{"part " + std::to_string(i) + " has no secure coalition partner; union with part " +
                                           std::to_string(f.partner) + " fails",
                                       r.partition[i] | r.partition[f.partner], f.union_certificate};
            }
        }
        return ConstructionGap{"part " + std::to_string(i) + " has no secure coalition partner", r.partition[i],
                               std::nullopt};
    }
    const Graph scg = build_scg(host, r.partition);
    for (std::size_t a = 0; a < r.base_map.size(); ++a) {
        for (std::size_t b = a + 1; b < r.base_map.size(); ++b) {
            const auto pa = r.base_map[a];
            const auto pb = r.base_map[b];
            const bool want = r.target.adjacent(static_cast<Vertex>(a), static_cast<Vertex>(b));
            const bool got = scg.adjacent(static_cast<Vertex>(pa), static_cast<Vertex>(pb));
            if (want == got) continue;
            const VertexSet joint = r.partition[pa] | r.partition[pb];
            return ConstructionGap{"target pair (" + std::to_string(a) + "," + std::to_string(b) + ") is " +
                                       (want ? "an edge" : "a non-edge") + " but the parts " +
                                       (got ? "form" : "do not form") + " a secure coalition",
                                   joint, certify_secure_domination(host, joint)};
        }
    }
    return std::nullopt;
}

RealizeResult realize_as_scg(const Graph& target, int max_host_order, long placement_budget)
{
    RealizeResult result;
    if (!is_scg_realizable(target)) {
        result.status = RealizeStatus::Unrealizable;
        result.message = "target has an isolated vertex and at least one edge";
        return result;
    }
    auto finish = [&](Realization r) {
        r.host_order = r.host.order();
        r.host_size = r.host.size();
        r.verified = !result.gap.has_value();
        result.status = r.verified ? RealizeStatus::Verified : RealizeStatus::ConstructionGap;
        result.message = r.verified ? "verified" : result.gap->reason;
        result.realization = std::move(r);
        return result;
    };
    if (target.is_edgeless() || target.order() == 2) {
        Realization r = special_host(target, target.is_edgeless() ? HostConstruction::CompleteHost
                                                                  : HostConstruction::EdgelessPair);
        result.gap = verify_realization(r);
        return finish(std::move(r));
    }

    const GenericHost h = generic_host(target, max_host_order);
    std::vector<Vertex> placement(h.allowed.size());
    // Round-robin, keeping y-vertices out of the parts of full target
    // vertices whenever another part is allowed: such a part dominates H
    // already and extra y-vertices make it secure dominating.
    const VertexSet full = target.full_vertices();
    for (std::size_t t = 0; t < placement.size(); ++t) {
        std::vector<Vertex> preferred;
        for (Vertex b : h.allowed[t]) {
            if (!full.contains(b)) preferred.push_back(b);
        }
        const auto& pool = preferred.empty() ? h.allowed[t] : preferred;
        placement[t] = pool[t % pool.size()];
    }
    Realization first = place(target, h, placement);
    first.placements_tried = 1;
    result.gap = verify_realization(first);
    if (!result.gap) return finish(std::move(first));
    result.round_robin_gap = result.gap;
    result.round_robin_partition = first.partition;

    // Walk every placement as a mixed-radix counter.
    const std::vector<Vertex> round_robin = placement;
    std::vector<std::size_t> digit(h.allowed.size(), 0);
    long tried = 1;
    while (tried < placement_budget) {
        std::size_t t = 0;
        while (t < digit.size() && ++digit[t] == h.allowed[t].size()) digit[t++] = 0;
        if (t == digit.size()) break;
        for (std::size_t i = 0; i < digit.size(); ++i) placement[i] = h.allowed[i][digit[i]];
        if (placement == round_robin) continue;
        ++tried;
        Realization r = place(target, h, placement);
        if (!verify_realization(r)) {
            r.placements_tried = tried;
            result.gap.reset();
            return finish(std::move(r));
        }
    }
    first.placements_tried = tried;
    result.gap->reason += "; no placement verified among " + std::to_string(tried) + " tried";
    return finish(std::move(first));
}

ScgClaimReport check_scg_claim(const Graph& g, const Partition& p, const Graph& claimed)
{
    ScgClaimReport report;
    report.verdict = verify_sec_partition(g, p);
    if (!report.verdict.valid) {
        report.summary = "partition " + p.to_string() + " is not a sec-partition, so no SCG exists";
        return report;
    }
    report.scg = build_scg(g, p);
    report.order_matches = report.scg->order() == claimed.order();
    report.claim_holds = report.order_matches && is_isomorphic(*report.scg, claimed);
    report.summary = "SCG has " + std::to_string(report.scg->order()) + " vertices and edges " +
                     write_edge_list(*report.scg) + (report.claim_holds ? "; matches" : "; does not match") +
                     " the claimed graph";
    return report;
}

std::string realization_json(const RealizeResult& result, const Graph& target)
{
    nlohmann::ordered_json j;
    j["target_graph6"] = write_graph6(target);
    j["status"] = result.status == RealizeStatus::Verified         ? "verified"
                  : result.status == RealizeStatus::Unrealizable ? "unrealizable"
                                                                 : "construction_gap";
    if (result.realization) {
        const Realization& r = *result.realization;
        j["host_graph6"] = write_graph6(r.host);
        j["partition"] = r.partition.to_lists();
        j["base_map"] = r.base_map;
        j["n_H"] = r.host_order;
        j["m_H"] = r.host_size;
        j["construction"] = host_construction_name(r.construction);
        j["placement"] = r.placement;
        j["placements_tried"] = r.placements_tried;
        j["verified"] = r.verified;
    } else {
        j["host_graph6"] = nullptr;
        j["partition"] = nullptr;
        j["base_map"] = nullptr;
        j["n_H"] = nullptr;
        j["m_H"] = nullptr;
        j["verified"] = false;
    }
    if (result.gap) {
        j["gap"] = {{"reason", result.gap->reason}, {"set", result.gap->set.to_vector()}};
        if (result.gap->certificate) j["gap"]["certificate"] = certificate_to_json(*result.gap->certificate);
    }
    if (result.round_robin_gap && result.status == RealizeStatus::Verified) {
        j["round_robin_gap"] = {{"reason", result.round_robin_gap->reason},
                                {"set", result.round_robin_gap->set.to_vector()}};
    }
    j["message"] = result.message;
    return j.dump();
}

}  // namespace secoal
