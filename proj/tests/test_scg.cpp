#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include "secoal/errors.hpp"
#include "secoal/graph_io.hpp"
#include "secoal/scg.hpp"
#include "secoal/sweep.hpp"
#include "support.hpp"

using namespace secoal;

namespace {

Graph k1_union_k2()
{
    return disjoint_union(Graph::edgeless(1), generate(Family::Complete, 2));
}

Graph relabel_scg(const Graph& scg, const std::vector<std::size_t>& base_map)
{
    // Part base_map[i] stands for target vertex i.
    std::vector<int> back(base_map.size());
    for (std::size_t i = 0; i < base_map.size(); ++i) back[base_map[i]] = static_cast<int>(i);
    return testing_support::relabel(scg, back);
}

}  // namespace

TEST(BuildScg, Examples)
{
    for (int n = 1; n <= 6; ++n) {
        EXPECT_EQ(build_scg(generate(Family::Complete, n), Partition::singletons(n)), Graph::edgeless(n));
    }
    EXPECT_EQ(build_scg(generate(Family::Cycle, 4), Partition::singletons(4)), generate(Family::Complete, 4));

    const Graph p6 = generate(Family::Path, 6);
    const Partition pi1 = Partition::parse("0,2;3,5;4;1");
    const Graph scg = build_scg(p6, pi1);
    ASSERT_EQ(scg.order(), 4);
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            EXPECT_EQ(scg.adjacent(i, j), forms_secure_coalition(p6, pi1[i], pi1[j])) << i << j;
        }
    }
    EXPECT_THROW(build_scg(p6, Partition::parse("0,5;1;2;3;4")), InvalidArgument);
}

TEST(BuildScg, FullDegreeSingletonsAreIsolated)
{
    for (const Graph& g : testing_support::graphs_up_to(5)) {
        const VertexSet full = g.full_vertices();
        if (full.empty()) continue;
        SetPartitionEnumerator e(g.order());
        while (e.next()) {
            const Partition p = e.partition();
            const auto verdict = verify_sec_partition(g, p);
            if (!verdict.valid) continue;
            const Graph scg = build_scg(g, p);
            for (std::size_t i = 0; i < p.size(); ++i) {
                if (verdict.parts[i].status == PartStatus::FullDegreeSingleton) {
                    EXPECT_EQ(scg.degree(static_cast<Vertex>(i)), 0) << write_graph6(g) << " " << p.to_string();
                }
            }
        }
    }
}

TEST(Realize, PathOfThree)
{
    const Graph p3 = generate(Family::Path, 3);
    const auto r = realize_as_scg(p3);
    ASSERT_EQ(r.status, RealizeStatus::Verified);
    const Realization& real = *r.realization;
    EXPECT_EQ(real.construction, HostConstruction::Generic);
    EXPECT_EQ(real.host_order, 7);
    EXPECT_EQ(real.host_size, 11);
    EXPECT_EQ(real.host.order(), 7);
    EXPECT_EQ(real.host.size(), 11);
    EXPECT_TRUE(real.verified);
    EXPECT_EQ(relabel_scg(build_scg(real.host, real.partition), real.base_map), p3);
}

TEST(Realize, TriangleAndSpecialCases)
{
    const auto k3 = realize_as_scg(generate(Family::Complete, 3));
    ASSERT_EQ(k3.status, RealizeStatus::Verified);
    EXPECT_EQ(k3.realization->host.order(), 6);
    EXPECT_EQ(k3.realization->host.size(), 9);

    const auto k2 = realize_as_scg(generate(Family::Complete, 2));
    ASSERT_EQ(k2.status, RealizeStatus::Verified);
    EXPECT_EQ(k2.realization->construction, HostConstruction::EdgelessPair);
    EXPECT_EQ(k2.realization->host, Graph::edgeless(2));

    const auto e5 = realize_as_scg(Graph::edgeless(5));
    ASSERT_EQ(e5.status, RealizeStatus::Verified);
    EXPECT_EQ(e5.realization->construction, HostConstruction::CompleteHost);
    EXPECT_EQ(e5.realization->host, generate(Family::Complete, 5));

    const auto bad = realize_as_scg(k1_union_k2());
    EXPECT_EQ(bad.status, RealizeStatus::Unrealizable);
    EXPECT_FALSE(bad.realization.has_value());
}

TEST(Realize, GenericConstructionFailsForK2)
{
    // With only the generic host, K_2's part {v_1, u_1} is secure dominating.
    const Graph host = generate(Family::Path, 4);
    // Layout: base 0,1 adjacent; u_0 = 2 ~ 1; u_1 = 3 ~ 0. As a path: 2-1-0-3.
    const std::vector<Edge> e{{0, 1}, {1, 2}, {0, 3}};
    const Graph generic = Graph::from_edges(4, e);
    EXPECT_TRUE(is_isomorphic(generic, host));
    EXPECT_TRUE(is_secure_dominating(generic, VertexSet{0, 2}));
    EXPECT_FALSE(is_sec_partition(generic, Partition::parse("0,2;1,3")));
}

TEST(Realize, Realizability)
{
    EXPECT_FALSE(is_scg_realizable(k1_union_k2()));
    EXPECT_TRUE(is_scg_realizable(Graph::edgeless(5)));
    EXPECT_TRUE(is_scg_realizable(generate(Family::Cycle, 6)));
    EXPECT_TRUE(is_scg_realizable(Graph::edgeless(1)));
}

TEST(Realize, RoundTripOnAllSmallGraphs)
{
    for (const Graph& g : testing_support::graphs_up_to(5)) {
        const auto r = realize_as_scg(g);
        if (!is_scg_realizable(g)) {
            EXPECT_EQ(r.status, RealizeStatus::Unrealizable) << write_graph6(g);
            continue;
        }
        ASSERT_EQ(r.status, RealizeStatus::Verified) << write_graph6(g) << " " << r.message;
        const Realization& real = *r.realization;
        EXPECT_FALSE(verify_realization(real).has_value());
        EXPECT_EQ(relabel_scg(build_scg(real.host, real.partition), real.base_map), g) << write_graph6(g);
        if (real.construction != HostConstruction::Generic) continue;
        EXPECT_EQ(real.host.order(), expected_host_order(g));
        EXPECT_EQ(real.host.size(), expected_host_size(g));
    }
}

TEST(Realize, PartsMissSomeNonEdgeVertex)
{
    for (const Graph& g : testing_support::graphs_up_to(6)) {
        if (g.min_degree() == 0 || g.order() < 3) continue;
        const auto r = realize_as_scg(g);
        ASSERT_EQ(r.status, RealizeStatus::Verified) << write_graph6(g);
        const Realization& real = *r.realization;
        ASSERT_EQ(real.construction, HostConstruction::Generic);
        const int n = g.order();
        const VertexSet y_vertices = real.host.vertices() - VertexSet::first_n(2 * n);
        const VertexSet full = g.full_vertices();
        for (Vertex j = 0; j < n; ++j) {
            if (full.contains(j)) continue;
            const VertexSet part = real.partition[real.base_map[j]];
            EXPECT_FALSE(y_vertices.subset_of(dominated_by(real.host, part))) << write_graph6(g) << " " << j;
        }
    }
}

TEST(Realize, RoundRobinPlacementVerifiesUpToSeven)
{
    for (const Graph& g : testing_support::graphs_up_to(7)) {
        if (g.min_degree() == 0 || g.order() < 3) continue;
        const auto r = realize_as_scg(g);
        ASSERT_EQ(r.status, RealizeStatus::Verified) << write_graph6(g);
        EXPECT_FALSE(r.round_robin_gap.has_value()) << write_graph6(g);
        EXPECT_EQ(r.realization->placements_tried, 1);
    }
}

TEST(Realize, JsonExport)
{
    const auto r = realize_as_scg(generate(Family::Path, 3));
    const auto j = nlohmann::json::parse(realization_json(r, generate(Family::Path, 3)));
    EXPECT_EQ(j["target_graph6"], write_graph6(generate(Family::Path, 3)));
    EXPECT_EQ(j["n_H"], 7);
    EXPECT_EQ(j["m_H"], 11);
    EXPECT_EQ(j["verified"], true);
    EXPECT_EQ(j["partition"].size(), 3u);
    EXPECT_EQ(parse_graph6(j["host_graph6"].get<std::string>()), r.realization->host);

    const auto bad = nlohmann::json::parse(realization_json(realize_as_scg(k1_union_k2()), k1_union_k2()));
    EXPECT_EQ(bad["status"], "unrealizable");
    EXPECT_EQ(bad["verified"], false);
}

TEST(Realize, UnrealizableTargetsHaveNoSmallHost)
{
    // Every host of order <= 6 and every 3-part sec-partition: the SCG is
    // never K_1 + K_2 (up to the order of parts).
    const Graph target = k1_union_k2();
    ASSERT_FALSE(is_scg_realizable(target));
    for (const Graph& host : testing_support::graphs_up_to(6)) {
        if (host.order() < 3) continue;
        SetPartitionEnumerator e(host.order(), 3);
        while (e.next()) {
            const Partition p = e.partition();
            if (!is_sec_partition(host, p)) continue;
            EXPECT_FALSE(is_isomorphic(build_scg(host, p), target)) << write_graph6(host) << " " << p.to_string();
        }
    }
}

TEST(ScgClaims, CycleOfFive)
{
    const auto findings = adjudicate_c5_scg_claims();
    ASSERT_EQ(findings.size(), 2u);
    const Graph c5 = generate(Family::Cycle, 5);

    EXPECT_EQ(findings[0].check, "c5_singleton_scg");
    EXPECT_EQ(findings[0].witnesses[0]["sec_partition_valid"], false);
    EXPECT_EQ(findings[0].witnesses[0]["claim_holds"], false);
    EXPECT_FALSE(is_sec_partition(c5, Partition::singletons(5)));

    EXPECT_EQ(findings[1].check, "c5_pi2_scg");
    const Json& w = findings[1].witnesses[0];
    EXPECT_EQ(w["sec_partition_valid"], true);
    EXPECT_EQ(w["claim_holds"], false);
    const Graph scg = parse_graph6(w["scg_graph6"].get<std::string>());
    EXPECT_TRUE(is_isomorphic(scg, generate(Family::Star, 4)));

    for (const Finding& f : findings) EXPECT_TRUE(replay_finding(c5, f));

    const auto direct = check_scg_claim(c5, Partition::parse("0,4;2;1;3"), generate(Family::Star, 4));
    EXPECT_TRUE(direct.claim_holds);
}
