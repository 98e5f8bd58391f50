#include <gtest/gtest.h>

#include <random>

#include "ms2c/coloring.hpp"
#include "ms2c/dcc.hpp"
#include "ms2c/exact.hpp"
#include "oracles.hpp"

using namespace ms2c;

TEST(Cocluster, Examples) {
    EXPECT_TRUE(is_cocluster(StaticGraph(3, {{1, 2}, {2, 3}})).cocluster);
    auto p4 = is_cocluster(StaticGraph(4, {{1, 2}, {2, 3}, {3, 4}}));
    EXPECT_FALSE(p4.cocluster);
    EXPECT_EQ(p4.witness, (std::array<Vertex, 3>{1, 2, 4}));
    EXPECT_TRUE(is_cocluster(StaticGraph(4, {})).cocluster);
    EXPECT_TRUE(is_cocluster(StaticGraph(4, {{1, 3}, {1, 4}, {2, 3}, {2, 4}})).cocluster);
}

TEST(Cocluster, WitnessIsLeastTriple) {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 200; ++i) {
        auto g = oracle::random_instance(rng, 6, 1, 0.5).layer_graph(1);
        auto r = is_cocluster(g);
        EXPECT_EQ(r.cocluster, oracle::cocluster_after(g, 0));
        if (r.cocluster) continue;
        // brute force: first sorted triple with exactly one edge
        std::array<Vertex, 3> first{};
        bool found = false;
        for (int a = 1; a <= 6 && !found; ++a)
            for (int b = a + 1; b <= 6 && !found; ++b)
                for (int c = b + 1; c <= 6 && !found; ++c)
                    if (oracle::has_edge(g, a, b) + oracle::has_edge(g, a, c) + oracle::has_edge(g, b, c) == 1) {
                        first = {a, b, c};
                        found = true;
                    }
        EXPECT_EQ(r.witness, first);
    }
}

TEST(DccModulator, Examples) {
    EXPECT_EQ(*dcc_modulator(StaticGraph(3, {{1, 2}, {2, 3}}), 3), std::vector<Vertex>{});
    auto p4 = StaticGraph(4, {{1, 2}, {2, 3}, {3, 4}});
    auto x = dcc_modulator(p4, 3);
    ASSERT_TRUE(x.has_value());
    EXPECT_EQ(x->size(), 1u);
    EXPECT_EQ(oracle::min_dcc(p4), 1);
    EXPECT_TRUE(oracle::cocluster_after(p4, 1U << ((*x)[0] - 1)));
}

TEST(DccModulator, TwoDisjointEdgesNeedTwoDeletions) {
    // deleting one endpoint leaves an edge plus an isolated vertex, itself a K2+K1
    auto g = StaticGraph(4, {{1, 2}, {3, 4}});
    EXPECT_EQ(oracle::min_dcc(g), 2);
    auto x = dcc_modulator(g, 3);
    ASSERT_TRUE(x.has_value());
    EXPECT_EQ(x->size(), 2u);
    EXPECT_FALSE(dcc_modulator(g, 1).has_value());
}

TEST(DccModulator, MatchesSubsetMinimum) {
    std::mt19937_64 rng(8);
    for (int i = 0; i < 150; ++i) {
        const int n = 1 + static_cast<int>(rng() % 8);
        auto g = oracle::random_instance(rng, n, 1, (i % 2) ? 0.3 : 0.6).layer_graph(1);
        auto x = dcc_modulator(g, n);
        ASSERT_TRUE(x.has_value());
        EXPECT_EQ(static_cast<int>(x->size()), oracle::min_dcc(g)) << "sample " << i;
        std::uint32_t mask = 0;
        for (Vertex v : *x) mask |= 1U << (v - 1);
        EXPECT_TRUE(oracle::cocluster_after(g, mask));
    }
}

TEST(DccModulator, TagsFollowResidualEdges) {
    std::mt19937_64 rng(12);
    for (int i = 0; i < 100; ++i) {
        auto g = oracle::random_bipartite_instance(rng, 6, 3, 0.4);
        auto m = cocluster_modulators(g, 6);
        for (int t = 1; t <= 3; ++t) {
            std::vector<bool> removed(7, false);
            std::uint32_t mask = 0;
            for (Vertex v : m.sets[t - 1]) {
                removed[v] = true;
                mask |= 1U << (v - 1);
            }
            auto rest = g.layer_graph(t).without(removed);
            EXPECT_TRUE(oracle::cocluster_after(g.layer_graph(t), mask));
            if (m.tags[t - 1] == CoclusterTag::Minus) EXPECT_EQ(rest.edge_count(), 0u);
            else {
                // a co-cluster with an edge is connected on its non-deleted vertices
                auto c = connected_components(rest);
                int with_vertices = 0;
                for (int k = 0; k < c.count; ++k)
                    if (!removed[c.root[k]]) ++with_vertices;
                EXPECT_EQ(with_vertices, 1);
            }
        }
    }
}

TEST(DccSum, Examples) {
    // every layer already a co-cluster
    auto g = TemporalGraph(4, {{{1, 3}, {1, 4}, {2, 3}, {2, 4}}, {{1, 2}}});
    for (std::int64_t d = 0; d <= 3; ++d) EXPECT_EQ(solve_dcc_sum(g, d).yes, solve_bruteforce_local(g, d).yes);
    EXPECT_FALSE(solve_dcc_sum(TemporalGraph(3, {{{1, 2}, {2, 3}, {1, 3}}}), 2).yes);
    auto flip = TemporalGraph(3, {{{1, 2}, {2, 3}}, {{1, 3}}});
    EXPECT_FALSE(solve_dcc_sum(flip, 0).yes);
    EXPECT_TRUE(solve_dcc_sum(flip, 1).yes);
}

TEST(DccSum, AgreesWithBruteForce) {
    std::mt19937_64 rng(555);
    SolverConfig big;
    big.bruteforce_bits = 28;
    for (int i = 0; i < 300; ++i) {
        const int n = 1 + static_cast<int>(rng() % 7);
        const int tau = 1 + static_cast<int>(rng() % 3);
        const std::int64_t d = static_cast<std::int64_t>(rng() % 3);
        auto g = (i % 3 == 0) ? oracle::random_instance(rng, n, tau, 0.3)
                              : oracle::random_bipartite_instance(rng, n, tau, (i % 2) ? 0.6 : 0.3);
        auto bf = solve_bruteforce_local(g, d, big);
        auto r = solve_dcc_sum(g, d);
        ASSERT_EQ(r.yes, bf.yes) << "sample " << i;
        if (r.yes) EXPECT_TRUE(verify_solution(g, *r.witness, Budget::local(d)).ok);
    }
}

TEST(DccSum, CapIsExplicit) {
    SolverConfig c;
    c.dcc_bits = 1;
    EXPECT_THROW(solve_dcc_sum(TemporalGraph(4, {{{1, 2}, {3, 4}}}), 1, c), CapExceeded);
}
