#include <gtest/gtest.h>

#include <random>

#include "ms2c/coloring.hpp"
#include "ms2c/exact.hpp"
#include "ms2c/global.hpp"
#include "oracles.hpp"

using namespace ms2c;

namespace {

// layers 1 and 3 force 1,3 equal, layer 2 forces them apart
TemporalGraph forced_one_one() { return TemporalGraph(3, {{{1, 2}, {2, 3}}, {{1, 3}}, {{1, 2}, {2, 3}}}); }

std::int64_t edge_total(const TemporalGraph& g) {
    std::int64_t m = 0;
    for (int t = 1; t <= g.lifetime(); ++t) m += static_cast<std::int64_t>(g.layer(t).size());
    return m;
}

}  // namespace

TEST(BruteForceGlobal, Examples) {
    auto g = forced_one_one();
    EXPECT_FALSE(solve_bruteforce_global(g, 1).yes);
    auto r = solve_bruteforce_global(g, 2);
    ASSERT_TRUE(r.yes);
    EXPECT_TRUE(verify_solution(g, *r.witness, Budget::global(2)).ok);
    EXPECT_EQ(oracle::min_global_cost(g), 2);

    auto same = TemporalGraph(4, {{{1, 2}, {3, 4}}, {{1, 2}, {3, 4}}, {{1, 2}, {3, 4}}});
    EXPECT_TRUE(solve_bruteforce_global(same, 0).yes);

    SolverConfig tiny;
    tiny.bruteforce_bits = 3;
    EXPECT_THROW(solve_bruteforce_global(g, 2, tiny), CapExceeded);
}

TEST(BruteForceGlobal, TwoLayersMatchLocal) {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 100; ++i) {
        auto g = oracle::random_bipartite_instance(rng, 1 + static_cast<int>(rng() % 6), 2, 0.4);
        const std::int64_t D = static_cast<std::int64_t>(rng() % 4);
        EXPECT_EQ(solve_bruteforce_global(g, D).yes, solve_bruteforce_local(g, D).yes);
    }
}

TEST(Reduction, Counts) {
    auto g = TemporalGraph(2, {{{1, 2}}, {{1, 2}}});
    auto f = reduce_to_almost_2sat(g, 1);
    EXPECT_EQ(f.variables, 4);
    EXPECT_EQ(f.hard_count(), 8);
    EXPECT_EQ(f.soft_count(), 4);

    auto f0 = reduce_to_almost_2sat(g, 0);
    EXPECT_EQ(f0.hard_count(), 4);
    EXPECT_TRUE(solve_2sat(f0).satisfiable);

    auto edgeless = TemporalGraph(3, std::vector<std::vector<Edge>>(4));
    auto fe = reduce_to_almost_2sat(edgeless, 2);
    EXPECT_EQ(fe.hard_count(), 0);
    EXPECT_EQ(fe.soft_count(), 2 * 3 * 3);
    auto r = solve_almost_2sat(fe, 0);
    EXPECT_TRUE(r.yes);
    EXPECT_TRUE(r.deleted.empty());
}

TEST(Reduction, CountFormulaOnRandomInstances) {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 50; ++i) {
        const int n = 1 + static_cast<int>(rng() % 6), tau = 1 + static_cast<int>(rng() % 4);
        auto g = oracle::random_instance(rng, n, tau, 0.4);
        const std::int64_t D = static_cast<std::int64_t>(rng() % 4);
        auto f = reduce_to_almost_2sat(g, D);
        EXPECT_EQ(f.hard_count(), 2 * (D + 1) * edge_total(g));
        EXPECT_EQ(f.soft_count(), 2 * n * (tau - 1));
    }
}

TEST(TwoSat, Basics) {
    TwoCnf f;
    f.variables = 2;
    f.clauses = {{1, 2, true, 1}, {-1, 2, true, 1}, {1, -2, true, 1}};
    auto r = solve_2sat(f);
    ASSERT_TRUE(r.satisfiable);
    EXPECT_TRUE(r.assignment[1]);
    EXPECT_TRUE(r.assignment[2]);
    f.clauses.push_back({-1, -2, true, 1});
    EXPECT_FALSE(solve_2sat(f).satisfiable);
    EXPECT_TRUE(solve_2sat(f, {false, false, false, true}).satisfiable);
}

TEST(Almost2Sat, Examples) {
    TwoCnf sat;
    sat.variables = 1;
    sat.clauses = {{1, -1, true, 1}};
    auto r = solve_almost_2sat(sat, 0);
    EXPECT_TRUE(r.yes);
    EXPECT_TRUE(r.deleted.empty());

    TwoCnf contra;
    contra.variables = 1;
    contra.clauses = {{1, 1, true, 1}, {-1, -1, true, 1}};
    EXPECT_FALSE(solve_almost_2sat(contra, 0, DeletionMode::AllSoft).yes);
    auto y = solve_almost_2sat(contra, 1, DeletionMode::AllSoft);
    ASSERT_TRUE(y.yes);
    EXPECT_EQ(y.deleted.size(), 1u);
    // hard clauses are never deleted in the default mode
    EXPECT_FALSE(solve_almost_2sat(contra, 1).yes);
}

TEST(Almost2Sat, NodeCapIsExplicit) {
    auto f = reduce_to_almost_2sat(forced_one_one(), 2);
    EXPECT_THROW(solve_almost_2sat(f, 2, DeletionMode::SoftOnly, 1), CapExceeded);
}

TEST(Almost2Sat, AllSoftMatchesSubsetMinimum) {
    std::mt19937_64 rng(71);
    for (int i = 0; i < 150; ++i) {
        TwoCnf f;
        f.variables = 1 + static_cast<int>(rng() % 3);
        const int m = 1 + static_cast<int>(rng() % 7);
        auto lit = [&] {
            const int v = 1 + static_cast<int>(rng() % f.variables);
            return (rng() & 1) ? v : -v;
        };
        for (int c = 0; c < m; ++c) f.clauses.push_back({lit(), lit(), true, 1});
        // fewest deletions by enumerating assignments
        int best = m;
        for (int a = 0; a < (1 << f.variables); ++a) {
            auto val = [&](Literal l) { return (((a >> (std::abs(l) - 1)) & 1) != 0) == (l > 0); };
            int bad = 0;
            for (const auto& c : f.clauses) bad += !(val(c.a) || val(c.b));
            best = std::min(best, bad);
        }
        for (int k = 0; k <= 2; ++k) {
            auto r = solve_almost_2sat(f, k, DeletionMode::AllSoft);
            ASSERT_EQ(r.yes, best <= k) << "sample " << i;
            if (!r.yes) continue;
            std::vector<bool> del(f.clauses.size(), false);
            for (auto c : r.deleted) del[c] = true;
            EXPECT_TRUE(solve_2sat(f, del).satisfiable);
        }
    }
}

TEST(SolveGlobal, Examples) {
    auto g = forced_one_one();
    EXPECT_FALSE(solve_global(g, 1).yes);
    auto r = solve_global(g, 2);
    ASSERT_TRUE(r.yes);
    EXPECT_EQ(r.algorithm, "a2sat");
    EXPECT_TRUE(verify_solution(g, *r.witness, Budget::global(2)).ok);
    EXPECT_FALSE(solve_global(TemporalGraph(3, {{{1, 2}, {2, 3}, {1, 3}}}), 5).yes);
}

TEST(SolveGlobal, LargeBudgetAlwaysSuffices) {
    std::mt19937_64 rng(29);
    for (int i = 0; i < 40; ++i) {
        const int n = 1 + static_cast<int>(rng() % 5), tau = 1 + static_cast<int>(rng() % 3);
        auto g = oracle::random_bipartite_instance(rng, n, tau, 0.5);
        EXPECT_TRUE(solve_global(g, static_cast<std::int64_t>(n) * (tau - 1)).yes);
    }
}

TEST(SolveGlobal, TwoLayersMatchLocal) {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 100; ++i) {
        auto g = oracle::random_bipartite_instance(rng, 1 + static_cast<int>(rng() % 6), 2, 0.4);
        const std::int64_t D = static_cast<std::int64_t>(rng() % 4);
        EXPECT_EQ(solve_global(g, D).yes, solve_bruteforce_local(g, D).yes);
    }
}

TEST(SolveGlobal, AgreesWithOracle) {
    std::mt19937_64 rng(404);
    for (int i = 0; i < 250; ++i) {
        const int n = 1 + static_cast<int>(rng() % 6), tau = 1 + static_cast<int>(rng() % 3);
        const std::int64_t D = static_cast<std::int64_t>(rng() % 4);
        auto g = (i % 4 == 0) ? oracle::random_instance(rng, n, tau, 0.3)
                              : oracle::random_bipartite_instance(rng, n, tau, (i % 2) ? 0.6 : 0.3);
        const auto best = oracle::min_global_cost(g);
        const bool truth = best.has_value() && *best <= D;
        auto f = reduce_to_almost_2sat(g, D);
        auto a = solve_almost_2sat(f, D);
        ASSERT_EQ(a.yes, truth) << "sample " << i;
        for (auto c : a.deleted) EXPECT_FALSE(f.clauses[c].hard);
        auto r = solve_global(g, D);
        ASSERT_EQ(r.yes, truth) << "sample " << i;
        EXPECT_EQ(solve_bruteforce_global(g, D).yes, truth);
        if (r.yes) EXPECT_TRUE(verify_solution(g, *r.witness, Budget::global(D)).ok);
    }
}

TEST(Ms2sat, ReductionShape) {
    Ms2satInstance inst;
    inst.variables = 2;
    inst.stages = 2;
    inst.budget = 1;
    inst.clauses = {{{1, 2}}, {{-1, -2}, {1, 1}}};
    auto f = reduce_ms2sat_to_almost_2sat(inst);
    EXPECT_EQ(f.variables, 4);
    EXPECT_EQ(f.hard_count(), 3 * 2);
    EXPECT_EQ(f.soft_count(), 4);
    EXPECT_EQ(f.clauses[1], (TwoClause{-3, -4, true, 2}));
    // stage 1 can be (1,1); stage 2 needs x1 and not x2: one flip
    EXPECT_TRUE(solve_almost_2sat(f, 1).yes);
    inst.budget = 0;
    EXPECT_TRUE(solve_almost_2sat(reduce_ms2sat_to_almost_2sat(inst), 0).yes);
    inst.clauses[0].push_back({2, 2});
    EXPECT_FALSE(solve_almost_2sat(reduce_ms2sat_to_almost_2sat(inst), 0).yes);
    inst.budget = 1;
    EXPECT_TRUE(solve_almost_2sat(reduce_ms2sat_to_almost_2sat(inst), 1).yes);
}

TEST(Wcnf, RoundTrip) {
    auto f = reduce_to_almost_2sat(forced_one_one(), 2);
    const auto text = write_wcnf(f, 2);
    EXPECT_NE(text.find("p wcnf 9 "), std::string::npos);
    EXPECT_NE(text.find("c k = 2"), std::string::npos);
    auto [back, k] = parse_wcnf(text);
    EXPECT_EQ(k, 2);
    EXPECT_EQ(back, f);
    EXPECT_THROW(parse_wcnf("3 1 2 0\n"), InvalidInstance);
    EXPECT_THROW(parse_wcnf("p wcnf 2 2 3\n3 1 2 0\n"), InvalidInstance);
}
