// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "ms2c/coloring.hpp"
#include "ms2c/dcc.hpp"
#include "ms2c/exact.hpp"
#include "ms2c/generators.hpp"
#include "ms2c/global.hpp"
#include "ms2c/io.hpp"
#include "ms2c/ms2ce.hpp"
#include "ms2c/params.hpp"
#include "ms2c/treewidth.hpp"
#include "oracles.hpp"

using namespace ms2c;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
    std::vector<std::string> failures;

    void expect(bool cond, const std::string& what) {
        if (cond) return;
        ok = false;
        if (failures.size() < 5) failures.push_back(what);
    }
};

using Clock = std::chrono::steady_clock;

bool valid_witness(const TemporalGraph& g, const SolveOutcome& r, const Budget& b) {
    return r.witness && verify_solution(g, *r.witness, b).ok;
}

Outcome local_oracle() {
    Outcome o;
    std::mt19937_64 rng(20260101);
    SolverConfig cfg;
    cfg.bruteforce_bits = 28;
    int samples = 0, tw_skipped = 0;
    for (int i = 0; i < 240; ++i) {
        const int n = 1 + static_cast<int>(rng() % 7);
        const int tau = 1 + static_cast<int>(rng() % 4);
        const double p = (i % 3 == 0) ? 0.15 : (i % 3 == 1 ? 0.35 : 0.6);
        const auto g = (i % 2) ? oracle::random_bipartite_instance(rng, n, tau, p) : oracle::random_instance(rng, n, tau, p);
        const std::int64_t d = static_cast<std::int64_t>(rng() % 4);
        const auto b = Budget::local(d);
        const auto bf = solve_bruteforce_local(g, d, cfg);
        const std::string tag = "sample " + std::to_string(i);
        if (bf.yes) o.expect(valid_witness(g, bf, b), tag + ": bruteforce witness");
        const std::vector<std::pair<std::string, std::function<SolveOutcome()>>> solvers{
            {"layered", [&] { return solve_layered_dag(g, d); }},
            {"orientation", [&] { return solve_component_orientation(g, d); }},
            {"dcc", [&] { return solve_dcc_sum(g, d); }},
            {"treewidth", [&] { return solve_treewidth_dp(g, d); }},
        };
        for (const auto& [name, solve] : solvers) {
            SolveOutcome r;
            try {
                r = solve();
            } catch (const CapExceeded&) {
                o.expect(name == "treewidth", tag + ": " + name + " hit its cap");
                ++tw_skipped;
                continue;
            }
            o.expect(r.yes == bf.yes, tag + ": " + name + " verdict differs");
            if (r.yes) o.expect(valid_witness(g, r, b), tag + ": " + name + " witness");
        }
        ++samples;
    }
    o.detail = std::to_string(samples) + " instances, 4 solvers, treewidth skipped " + std::to_string(tw_skipped);
    return o;
}

Outcome global_oracle() {
    Outcome o;
    std::mt19937_64 rng(20260202);
    int samples = 0, yes = 0;
    for (int i = 0; i < 240; ++i) {
        const int n = 1 + static_cast<int>(rng() % 6);
        const int tau = 1 + static_cast<int>(rng() % 3);
        const double p = (i % 3 == 0) ? 0.2 : (i % 3 == 1 ? 0.4 : 0.6);
        const auto g = (i % 2) ? oracle::random_bipartite_instance(rng, n, tau, p) : oracle::random_instance(rng, n, tau, p);
        const std::int64_t D = static_cast<std::int64_t>(rng() % 4);
        const auto bf = solve_bruteforce_global(g, D);
        const auto a2 = solve_global(g, D, {}, false);
        const std::string tag = "sample " + std::to_string(i);
        o.expect(a2.yes == bf.yes, tag + ": verdict differs");
        if (a2.yes) o.expect(valid_witness(g, a2, Budget::global(D)), tag + ": a2sat witness");
        yes += bf.yes;
        ++samples;
    }
    o.detail = std::to_string(samples) + " instances, " + std::to_string(yes) + " yes";
    return o;
}

Outcome round_trips() {
    Outcome o;
    int x13 = 0, bip = 0, clq = 0, few = 0, andc = 0;

    for (int nv = 1; nv <= 3; ++nv) {
        std::vector<int> lits;
        for (int i = 1; i <= nv; ++i) lits.insert(lits.end(), {i, -i});
        std::vector<std::array<int, 3>> clauses;
        for (std::size_t a = 0; a < lits.size(); ++a)
            for (std::size_t b = a; b < lits.size(); ++b)
                for (std::size_t c = b; c < lits.size(); ++c) clauses.push_back({lits[a], lits[b], lits[c]});
        auto check = [&](const Formula3& f) {
            std::vector<oracle::Clause> plain;
            for (const auto& c : f.clauses) plain.push_back({c[0], c[1], c[2]});
            const auto r = gen_x13sat(f);
            o.expect(solve_layered_dag(r.graph, r.budget.value).yes == oracle::x13sat_satisfiable(nv, plain),
                     "x13sat formula " + std::to_string(x13));
            ++x13;
        };
        for (std::size_t i = 0; i < clauses.size(); ++i) {
            check({nv, {clauses[i]}});
            for (std::size_t j = i; j < clauses.size(); ++j) check({nv, {clauses[i], clauses[j]}});
        }
    }

    std::mt19937_64 rng(20260303);
    for (int i = 0; i < 60; ++i, ++bip) {
        const int n = 2 + static_cast<int>(rng() % 5);
        const auto g = oracle::random_graph(rng, n, 0.6, 9);
        const std::int64_t k = static_cast<std::int64_t>(rng() % 4);
        const auto r = gen_edge_bipartization(g, k);
        o.expect(solve_auto(r.graph, r.budget.value).yes == (oracle::min_edge_bipartization(g) <= k),
                 "edgebip sample " + std::to_string(i));
    }

    SolverConfig wide;
    wide.treewidth_cells = std::uint64_t{1} << 30;
    for (int i = 0; i < 60; ++i, ++clq) {
        const int n = 3 + static_cast<int>(rng() % 4);
        const auto g = oracle::random_graph(rng, n, (i % 2) ? 0.5 : 0.7);
        const auto r = gen_clique(g, 3);
        o.expect(solve_treewidth_dp(r.graph, r.budget.value, wide).yes == oracle::has_k_clique(g, 3),
                 "clique sample " + std::to_string(i));
    }

    for (int i = 0; i < 60; ++i, ++few) {
        const int n = 2 + static_cast<int>(rng() % 3);
        const int tau = 1 + static_cast<int>(rng() % 2);
        const auto inner = oracle::random_instance(rng, n, tau, (i % 2) ? 0.5 : 0.8);
        const auto r = gen_few_edges(inner);
        o.expect(solve_auto(r.graph, r.budget.value).yes == oracle::local_feasible(inner, 1),
                 "fewedges sample " + std::to_string(i));
    }

    for (int i = 0; i < 60; ++i, ++andc) {
        const int n = 2 + static_cast<int>(rng() % 3), tau = 1 + static_cast<int>(rng() % 3);
        const int p = 1 + static_cast<int>(rng() % 3);
        std::vector<TemporalGraph> parts;
        bool all = true;
        for (int q = 0; q < p; ++q) {
            parts.push_back(oracle::random_instance(rng, n, tau, 0.5));
            all = all && oracle::local_feasible(parts.back(), 1);
        }
        o.expect(solve_auto(and_compose(parts), 1).yes == all, "andcompose sample " + std::to_string(i));
    }
    o.detail = "x13sat " + std::to_string(x13) + ", edgebip " + std::to_string(bip) + ", clique " + std::to_string(clq) +
               ", fewedges " + std::to_string(few) + ", andcompose " + std::to_string(andc);
    return o;
}

int max_degree(const std::vector<Edge>& layer, int n) {
    std::vector<int> deg(static_cast<std::size_t>(n) + 1, 0);
    int best = 0;
    for (const auto& e : layer) best = std::max({best, ++deg[e.u], ++deg[e.v]});
    return best;
}

Outcome structural() {
    Outcome o;
    std::mt19937_64 rng(20260404);
    int checked = 0;
    for (int i = 0; i < 40; ++i, ++checked) {
        const int nv = 1 + static_cast<int>(rng() % 5), m = 1 + static_cast<int>(rng() % 5);
        Formula3 f{nv, {}};
        for (int j = 0; j < m; ++j) {
            std::array<int, 3> c{};
            for (int& l : c) l = (1 + static_cast<int>(rng() % nv)) * ((rng() & 1) ? 1 : -1);
            f.clauses.push_back(c);
        }
        const auto r = gen_x13sat(f);
        o.expect(r.graph.lifetime() == 6 * m, "x13sat tau");
        o.expect(r.graph.vertex_count() == 5 + 2 * nv, "x13sat |V|");
    }
    for (int i = 0; i < 40; ++i, ++checked) {
        const int n = 2 + static_cast<int>(rng() % 6);
        const auto g = oracle::random_graph(rng, n, 0.5);
        const auto r = gen_edge_bipartization(g, 1);
        o.expect(r.graph.vertex_count() == n + 2 * static_cast<int>(g.edge_count()), "edgebip |V'|");
        o.expect(r.graph.lifetime() == 2, "edgebip tau");
    }
    for (int i = 0; i < 40; ++i, ++checked) {
        const int n = 3 + static_cast<int>(rng() % 6);
        const int k = 3 + static_cast<int>(rng() % 2);
        const auto g = oracle::random_graph(rng, n, 0.6);
        const auto pad = clique_padding(g, k);
        if (pad.trivial_no) continue;
        const auto r = gen_clique(g, k);
        const std::int64_t ck2 = k * (k - 1) / 2;
        o.expect(r.budget.value == pad.edges - ck2, "clique d");
        o.expect(r.graph.lifetime() == 3, "clique tau");
        o.expect(pad.ell * k == pad.edges - ck2 && pad.ell >= 1, "clique ell");
    }
    for (int i = 0; i < 40; ++i, ++checked) {
        const int n = 2 + static_cast<int>(rng() % 4), tau = 1 + static_cast<int>(rng() % 3);
        const auto inner = oracle::random_instance(rng, n, tau, 0.5);
        const auto r = gen_few_edges(inner);
        o.expect(r.graph.lifetime() == tau * few_edges_layer_size(inner), "fewedges tau");
        for (const auto& l : r.graph.layers()) {
            o.expect(l.size() == 3, "fewedges layer size");
            o.expect(max_degree(l, r.graph.vertex_count()) == 1, "fewedges degree");
        }
    }
    for (int i = 0; i < 12; ++i, ++checked) {
        const int k = 2 + i % 2, size = 2 + static_cast<int>(rng() % 2);
        McCliqueSource src;
        std::vector<Edge> e;
        for (int c = 0; c < k; ++c) {
            src.classes.emplace_back();
            for (int j = 1; j <= size; ++j) src.classes.back().push_back(c * size + j);
        }
        for (int u = 1; u <= k * size; ++u)
            for (int v = u + 1; v <= k * size; ++v)
                if ((u - 1) / size != (v - 1) / size && rng() % 4 != 0) e.emplace_back(u, v);
        src.graph = StaticGraph(k * size, e);
        if (static_cast<int>(e.size()) < size) continue;
        const auto r = gen_multicolored_clique(src);
        o.expect(r.graph.lifetime() == 2 * k * (k - 1) + 3, "mcclique tau");
        o.expect(param_fes(underlying_graph(r.graph)) <= 2, "mcclique fes");
    }
    for (int i = 0; i < 40; ++i, ++checked) {
        const int n = 1 + static_cast<int>(rng() % 4), tau = 1 + static_cast<int>(rng() % 3);
        const int p = 1 + static_cast<int>(rng() % 4);
        std::vector<TemporalGraph> parts;
        for (int q = 0; q < p; ++q) parts.push_back(oracle::random_instance(rng, n, tau, 0.5));
        const auto g = and_compose(parts);
        o.expect(g.lifetime() == p * tau + (p - 1) * n, "andcompose lifetime");
        for (int q = 1; q < p; ++q)
            for (int s = 1; s <= n; ++s) o.expect(g.layer(q * tau + (q - 1) * n + s).empty(), "andcompose separator");
    }
    o.detail = std::to_string(checked) + " samples drawn";
    return o;
}

Outcome greedy_large_d() {
    Outcome o;
    std::mt19937_64 rng(20260505);
    for (int i = 0; i < 150; ++i) {
        const int n = 1 + static_cast<int>(rng() % 10);
        const int tau = 1 + static_cast<int>(rng() % 6);
        const auto g = oracle::random_bipartite_instance(rng, n, tau, 0.2 + 0.2 * (i % 4));
        const std::int64_t d = (n + 1) / 2 + static_cast<std::int64_t>(rng() % 2);
        const auto r = solve_greedy_large_d(g, d);
        const std::string tag = "sample " + std::to_string(i);
        o.expect(r.yes, tag + ": answered no");
        if (!r.yes) continue;
        o.expect(valid_witness(g, r, Budget::local(d)), tag + ": witness rejected");
        for (auto delta : transition_deltas(*r.witness)) o.expect(delta <= d, tag + ": delta above d");
    }
    o.detail = "150 bipartite instances with 2d >= n";
    return o;
}

Outcome coloring_count() {
    Outcome o;
    std::mt19937_64 rng(20260606);
    for (int i = 0; i < 150; ++i) {
        const int n = 1 + static_cast<int>(rng() % 8);
        const auto tg = oracle::random_bipartite_instance(rng, n, 1, 0.15 + 0.15 * (i % 4));
        const auto g = tg.layer_graph(1);
        std::set<Coloring> truth;
        for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
            if (!oracle::proper_mask(g.edges(), mask)) continue;
            Coloring c(static_cast<std::size_t>(n));
            for (int v = 0; v < n; ++v) c[v] = ((mask >> v) & 1U) ? 2 : 1;
            truth.insert(c);
        }
        const ProperColorings pc(g);
        std::set<Coloring> produced;
        for (std::uint64_t m = 0; m < pc.count(); ++m) produced.insert(pc.coloring(m));
        const std::string tag = "sample " + std::to_string(i);
        o.expect(pc.count() == (std::uint64_t{1} << param_ncc(g)), tag + ": count is not 2^ncc");
        o.expect(produced.size() == pc.count(), tag + ": duplicate colorings");
        o.expect(produced == truth, tag + ": colorings differ from enumeration");
    }
    o.detail = "150 bipartite graphs, n <= 8";
    return o;
}

// Brute-force slot assignment over a bitmask of used slots (slots 1..63).
bool schedule_exists_small(const std::vector<std::pair<std::int64_t, std::int64_t>>& jobs, std::size_t i,
                           std::uint64_t used) {
    if (i == jobs.size()) return true;
    for (std::int64_t s = jobs[i].first; s <= jobs[i].second; ++s) {
        const std::uint64_t bit = std::uint64_t{1} << s;
        if (!(used & bit) && schedule_exists_small(jobs, i + 1, used | bit)) return true;
    }
    return false;
}

// Every multiset of at most six windows (t1, t2) over a lifetime tau with
// d * (tau - 1) <= 8 slots, realized as pins on one vertex per job.
Outcome edd_exhaustive() {
    Outcome o;
    std::int64_t sets = 0, feasible = 0;
    for (std::int64_t d = 1; d <= 8; ++d) {
        const int tau = static_cast<int>(8 / d) + 1;
        std::vector<std::pair<int, int>> windows;
        for (int a = 1; a <= tau; ++a)
            for (int b = a + 1; b <= tau; ++b) windows.emplace_back(a, b);
        PartialColoringSequence pins(6, tau);
        std::vector<std::size_t> pick;
        auto visit = [&] {
            const auto forced = extract_forced_recolorings(pins);
            const auto jobs = build_jobset(forced, d, tau);
            std::vector<std::pair<std::int64_t, std::int64_t>> plain;
            for (const auto& j : jobs.jobs) plain.emplace_back(j.release, j.due);
            const bool truth = schedule_exists_small(plain, 0, 0);
            const bool got = edd_feasible(jobs).feasible;
            o.expect(forced.size() == pick.size(), "forced recolorings lost");
            o.expect(got == truth, "d=" + std::to_string(d) + " set " + std::to_string(sets));
            ++sets;
            feasible += truth;
        };
        auto rec = [&](auto&& self, std::size_t from) -> void {
            visit();
            if (pick.size() == 6) return;
            const Vertex v = static_cast<Vertex>(pick.size()) + 1;
            for (std::size_t w = from; w < windows.size(); ++w) {
                pins.set(v, windows[w].first, 1);
                pins.set(v, windows[w].second, 2);
                pick.push_back(w);
                self(self, w);
                pick.pop_back();
                pins.clear(v, windows[w].first);
                pins.clear(v, windows[w].second);
            }
        };
        rec(rec, 0);
    }
    o.detail = std::to_string(sets) + " job sets, " + std::to_string(feasible) + " feasible";
    return o;
}

Outcome lift_inequalities() {
    Outcome o;
    std::mt19937_64 rng(20260707);
    for (int i = 0; i < 120; ++i) {
        const int n = 1 + static_cast<int>(rng() % 8);
        const int tau = 1 + static_cast<int>(rng() % 4);
        const auto g = gen_random(n, tau, 0.1 + 0.1 * (i % 5), 0.5, rng());
        for (const auto& name : parameter_names()) {
            const auto r = lift(name, g);
            const auto c = check_lift(r, tau);
            o.expect(c.ok, "sample " + std::to_string(i) + ": " + (c.notes.empty() ? name : c.notes.front()));
        }
    }
    o.detail = "120 temporal graphs, " + std::to_string(parameter_names().size()) + " parameters";
    return o;
}

Outcome ms2sat_counts() {
    Outcome o;
    std::mt19937_64 rng(20260808);
    for (int i = 0; i < 80; ++i) {
        const int n = 1 + static_cast<int>(rng() % 9);
        const int tau = 1 + static_cast<int>(rng() % 4);
        const auto g = oracle::random_instance(rng, n, tau, 0.4);
        const std::int64_t d = static_cast<std::int64_t>(rng() % 5);
        const auto text = emit_ms2sat(g, d);
        std::istringstream in(text);
        std::string p, kind;
        int vars = -1, stages = -1;
        std::int64_t budget = -1;
        in >> p >> kind >> vars >> stages >> budget;
        const std::string tag = "sample " + std::to_string(i);
        o.expect(vars == n && stages == tau && budget == d, tag + ": header");
        std::size_t clause_lines = 0, line_no = 0;
        std::string line;
        std::istringstream lines(text);
        std::set<int> used;
        while (std::getline(lines, line)) {
            if (++line_no == 1 || line.rfind("l ", 0) == 0) continue;
            ++clause_lines;
            std::istringstream ls(line);
            int lit;
            while (ls >> lit && lit != 0) used.insert(std::abs(lit));
        }
        o.expect(clause_lines == 2 * g.time_edge_count(), tag + ": clause count");
        o.expect(used.empty() || *used.rbegin() <= n, tag + ": variable out of range");
    }
    o.detail = "80 instances";
    return o;
}

struct Criterion {
    int id;
    const char* name;
    double seconds_limit;  // 0 = none
    std::function<Outcome()> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "local oracle equivalence", 60, local_oracle},
        {2, "global oracle equivalence", 60, global_oracle},
        {3, "reduction round trips", 120, round_trips},
        {4, "structural formulas", 0, structural},
        {5, "greedy for large budgets", 0, greedy_large_d},
        {6, "proper coloring count", 0, coloring_count},
        {7, "EDD against brute-force scheduling", 10, edd_exhaustive},
        {8, "parameter lift inequalities", 0, lift_inequalities},
        {9, "ms2sat emission counts", 0, ms2sat_counts},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = Clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.ok = false;
            o.failures.push_back(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(Clock::now() - start).count();
        if (c.seconds_limit > 0 && secs > c.seconds_limit) {
            o.ok = false;
            o.failures.push_back("over time limit " + std::to_string(static_cast<int>(c.seconds_limit)) + " s");
        }
        std::printf("%s [%d] %s: %s (%.2f s)\n", o.ok ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(), secs);
        for (const auto& f : o.failures) std::printf("       %s\n", f.c_str());
        failed += !o.ok;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
