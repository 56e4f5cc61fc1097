#include <gtest/gtest.h>

#include <random>

#include "oracle/naive.hpp"
#include "secoal/domination.hpp"
#include "secoal/graph_io.hpp"
#include "support.hpp"

using namespace secoal;

namespace {

std::set<int> to_set(VertexSet s)
{
    std::set<int> out;
    for (Vertex v : s) out.insert(v);
    return out;
}

}  // namespace

TEST(Domination, Examples)
{
    const Graph c4 = generate(Family::Cycle, 4);
    const Graph c5 = generate(Family::Cycle, 5);
    EXPECT_TRUE(is_dominating(c4, VertexSet{0, 1}));
    EXPECT_FALSE(is_dominating(c5, VertexSet{0, 1}));
    EXPECT_FALSE(dominated_by(c5, VertexSet{0, 1}).contains(3));
    EXPECT_TRUE(is_dominating(c5, c5.vertices()));
    EXPECT_FALSE(is_dominating(c5, VertexSet{}));
}

TEST(SecureDomination, Examples)
{
    const Graph p3 = generate(Family::Path, 3);
    const auto cert = certify_secure_domination(p3, VertexSet{1});
    EXPECT_FALSE(cert.secure);
    EXPECT_TRUE(cert.dominating);
    EXPECT_EQ(cert.witness, 0);

    const Graph k5 = generate(Family::Complete, 5);
    for (Vertex v = 0; v < 5; ++v) EXPECT_TRUE(is_secure_dominating(k5, VertexSet::single(v)));

    const Graph c5 = generate(Family::Cycle, 5);
    EXPECT_TRUE(is_secure_dominating(c5, c5.vertices()));
    const auto c5cert = certify_secure_domination(c5, VertexSet{0, 2});
    EXPECT_FALSE(c5cert.secure);
    EXPECT_EQ(c5cert.witness, 1);
    EXPECT_FALSE(is_secure_dominating(c5, VertexSet{}));
}

TEST(SecureDomination, DefendersAreMinimumIndex)
{
    // C_4 with S = {0, 2}: vertex 1 is defended by 0 (and 2), vertex 3 by 0.
    const auto cert = certify_secure_domination(generate(Family::Cycle, 4), VertexSet{0, 2});
    ASSERT_TRUE(cert.secure);
    EXPECT_EQ(cert.defenders, (std::vector<std::pair<Vertex, Vertex>>{{1, 0}, {3, 0}}));
}

TEST(DominationNumbers, Examples)
{
    EXPECT_EQ(domination_number(generate(Family::Complete, 6)).count, 1);
    EXPECT_EQ(domination_number(generate(Family::Cycle, 5)).count, 2);
    EXPECT_EQ(domination_number(Graph::edgeless(4)).count, 4);
    EXPECT_EQ(secure_domination_number(generate(Family::Path, 3)).count, 2);
    EXPECT_EQ(secure_domination_number(generate(Family::Complete, 6)).count, 1);
    EXPECT_EQ(secure_domination_number(generate(Family::Cycle, 5)).count, 3);
    const auto r = secure_domination_number(generate(Family::Cycle, 5));
    EXPECT_TRUE(is_secure_dominating(generate(Family::Cycle, 5), r.witness));
}

TEST(DominationNumbers, MatchNaiveOracleUpToSix)
{
    for (const Graph& g : testing_support::graphs_up_to(6)) {
        const auto d = domination_number(g);
        const auto s = secure_domination_number(g);
        EXPECT_EQ(d.count, naive::gamma(g)) << write_graph6(g);
        EXPECT_EQ(s.count, naive::gamma_s(g)) << write_graph6(g);
        EXPECT_EQ(d.witness.size(), d.count);
        EXPECT_TRUE(is_dominating(g, d.witness));
        EXPECT_TRUE(is_secure_dominating(g, s.witness));
        EXPECT_LE(d.count, s.count);
    }
}

TEST(SecureDomination, PredicatesMatchNaiveOnEverySubset)
{
    for (const Graph& g : testing_support::graphs_up_to(6)) {
        const auto a = naive::matrix(g);
        for (Mask m = 0; m < (Mask{1} << g.order()); ++m) {
            const VertexSet s(m);
            EXPECT_EQ(is_dominating(g, s), naive::dominating(a, to_set(s)));
            EXPECT_EQ(is_secure_dominating(g, s), naive::secure_dominating(a, to_set(s)));
        }
    }
}

TEST(SecureDomination, SecureImpliesDominatingAndDominationIsMonotone)
{
    for (const Graph& g : testing_support::graphs_up_to(7)) {
        const Mask all = low_mask(g.order());
        for (Mask m = 0; m <= all; ++m) {
            const VertexSet s(m);
            const bool dom = is_dominating(g, s);
            if (is_secure_dominating(g, s)) EXPECT_TRUE(dom);
            if (!dom) continue;
            for (Vertex v : g.vertices() - s) EXPECT_TRUE(is_dominating(g, s.with(v)));
        }
    }
}

TEST(SecureDomination, CertificatesReplay)
{
    for (const Graph& g : testing_support::graphs_up_to(6)) {
        for (Mask m = 0; m < (Mask{1} << g.order()); ++m) {
            const VertexSet s(m);
            const auto cert = certify_secure_domination(g, s);
            EXPECT_EQ(cert.secure, is_secure_dominating(g, s));
            EXPECT_TRUE(replay_certificate(g, s, cert)) << write_graph6(g) << " " << m;
            if (cert.secure) {
                EXPECT_EQ(cert.defenders.size(), static_cast<std::size_t>(g.order()) - s.size());
                for (const auto& [u, v] : cert.defenders) {
                    EXPECT_TRUE(g.adjacent(u, v));
                    EXPECT_TRUE(s.contains(v));
                    EXPECT_TRUE(is_dominating(g, s.without(v).with(u)));
                    for (Vertex w : s & g.neighbors(u)) {
                        if (w >= v) break;
                        EXPECT_FALSE(is_dominating(g, s.without(w).with(u)));
                    }
                }
            } else {
                ASSERT_TRUE(cert.witness.has_value());
            }
        }
    }
}

TEST(SecureDomination, TamperedCertificatesAreRejected)
{
    const Graph c4 = generate(Family::Cycle, 4);
    auto cert = certify_secure_domination(c4, VertexSet{0, 2});
    cert.defenders[0].second = 2;  // still valid: 2 also defends 1
    EXPECT_TRUE(replay_certificate(c4, VertexSet{0, 2}, cert));
    cert.defenders[0].second = 3;  // 3 is not in S
    EXPECT_FALSE(replay_certificate(c4, VertexSet{0, 2}, cert));

    const Graph p3 = generate(Family::Path, 3);
    auto bad = certify_secure_domination(p3, VertexSet{1});
    bad.witness = 2;  // 2 is also undefendable: still a correct failure witness
    EXPECT_TRUE(replay_certificate(p3, VertexSet{1}, bad));
    bad.secure = true;
    EXPECT_FALSE(replay_certificate(p3, VertexSet{1}, bad));
    auto wrong = certify_secure_domination(p3, VertexSet{0, 1});
    ASSERT_TRUE(wrong.secure);
    wrong.secure = false;
    wrong.witness = 2;
    EXPECT_FALSE(replay_certificate(p3, VertexSet{0, 1}, wrong));
}

TEST(SecureDominationCache, AgreesWithDirectPredicate)
{
    std::mt19937_64 rng(5);
    for (int n : {6, 10, 23, 26}) {
        const Graph g = testing_support::random_graph(n, rng);
        SecureDominationCache cache(g);
        std::uniform_int_distribution<Mask> pick(0, low_mask(n));
        for (int i = 0; i < 500; ++i) {
            const VertexSet s(pick(rng));
            EXPECT_EQ(cache(s), is_secure_dominating(g, s));
            EXPECT_EQ(cache(s), is_secure_dominating(g, s));
        }
        EXPECT_LE(cache.evaluations(), 500u);
    }
}

TEST(SubsetEnumeration, VisitsEveryKSubsetInOrder)
{
    for (int n = 0; n <= 8; ++n) {
        for (int k = 0; k <= n; ++k) {
            std::vector<Mask> seen;
            for_each_k_subset(n, k, [&](VertexSet s) {
                seen.push_back(s.bits());
                return false;
            });
            std::vector<Mask> expected;
            for (Mask m = 0; m < (Mask{1} << n); ++m) {
                if (std::popcount(m) == k) expected.push_back(m);
            }
            EXPECT_EQ(seen, expected) << n << " " << k;
        }
    }
    EXPECT_FALSE(for_each_k_subset(3, 4, [](VertexSet) { return true; }));
}

TEST(SupersetMonotonicity, NoCounterexampleOnSmallGraphs)
{
    // Adding a vertex v to a secure dominating S: v's old defender still
    // works, and every other defender swap keeps v. So none are expected.
    for (const Graph& g : testing_support::graphs_up_to(7)) {
        EXPECT_FALSE(find_superset_monotonicity_counterexample(g).has_value()) << write_graph6(g);
    }
}
