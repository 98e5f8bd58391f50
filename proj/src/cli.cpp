#include "ms2c/cli.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "ms2c/coloring.hpp"
#include "ms2c/dcc.hpp"
#include "ms2c/exact.hpp"
#include "ms2c/generators.hpp"
#include "ms2c/global.hpp"
#include "ms2c/io.hpp"
#include "ms2c/ms2ce.hpp"
#include "ms2c/params.hpp"
#include "ms2c/treewidth.hpp"

namespace ms2c {

namespace {

// Usage problems detected after option parsing.
class UsageError : public Error {
public:
    using Error::Error;
};

struct Common {
    int threads = 1;
};

SolverConfig make_config(const Common& c) {
    SolverConfig cfg;
    cfg.apply_environment();
    cfg.threads = c.threads;
    return cfg;
}

void emit(std::ostream& out, const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") out << text;
    else write_file(path, text);
}

void print_stats(std::ostream& err, const SolveOutcome& r) {
    err << "c algorithm=" << r.algorithm << '\n';
    for (const auto& [k, v] : r.stats) err << "c stat " << k << '=' << v << '\n';
}

std::int64_t budget_value(const InstanceFile& f, std::optional<std::int64_t> flag, BudgetKind kind, const char* name) {
    if (flag) {
        if (*flag < 0) throw UsageError(std::string("--") + name + " must be nonnegative");
        return *flag;
    }
    if (!f.budget) throw UsageError(std::string("no budget: pass --") + name + " or add a 'b' line to the instance");
    if (f.budget->kind != kind)
        throw UsageError(std::string("instance carries a ") + (f.budget->kind == BudgetKind::Local ? "local" : "global") +
                         " budget; pass --" + name + " explicitly");
    return f.budget->value;
}

StaticGraph parse_edge_list(int n, const std::string& spec) {
    std::vector<Edge> edges;
    std::string item;
    std::istringstream in(spec);
    while (std::getline(in, item, ',')) {
        if (item.find_first_not_of(' ') == std::string::npos) continue;
        const auto dash = item.find('-');
        if (dash == std::string::npos) throw UsageError("edge '" + item + "' is not of the form u-v");
        try {
            edges.emplace_back(std::stoi(item.substr(0, dash)), std::stoi(item.substr(dash + 1)));
        } catch (const std::exception&) {
            throw UsageError("edge '" + item + "' is not of the form u-v");
        }
    }
    return StaticGraph(n, edges);
}

Formula3 parse_formula(const std::string& spec, int vars) {
    Formula3 f;
    std::string clause;
    std::istringstream in(spec);
    int highest = 0;
    while (std::getline(in, clause, ',')) {
        std::istringstream cs(clause);
        std::vector<int> lits;
        int x;
        while (cs >> x) lits.push_back(x);
        if (cs.fail() && !cs.eof()) throw UsageError("clause '" + clause + "' is not a list of integers");
        if (lits.empty()) continue;
        if (lits.size() != 3) throw UsageError("clause '" + clause + "' needs exactly three literals");
        for (int l : lits) highest = std::max(highest, std::abs(l));
        f.clauses.push_back({lits[0], lits[1], lits[2]});
    }
    f.variables = vars > 0 ? vars : highest;
    return f;
}

std::string describe(const std::vector<std::string>& args) {
    std::string s = " generated by: ms2col";
    for (const auto& a : args) s += ' ' + a;
    return s;
}

struct BenchRow {
    std::string instance, algo, verdict;
    std::int64_t micros = 0, states = 0;
};

std::int64_t state_count(const SolveOutcome& r) {
    for (const char* key : {"states", "nodes", "entries", "branches", "bits"}) {
        auto it = r.stats.find(key);
        if (it != r.stats.end()) return it->second;
    }
    return 0;
}

BenchRow run_bench(const std::string& name, const std::string& algo, const std::function<SolveOutcome()>& solve) {
    BenchRow row{name, algo, "", 0, 0};
    const auto start = std::chrono::steady_clock::now();
    try {
        auto r = solve();
        row.verdict = r.yes ? "yes" : "no";
        row.states = state_count(r);
    } catch (const Timeout&) {
        row.verdict = "timeout";
    } catch (const CapExceeded&) {
        row.verdict = "cap";
    } catch (const PreconditionError&) {
        row.verdict = "n/a";
    }
    row.micros = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start).count();
    return row;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Multistage 2-coloring solvers, generators and checks", "ms2col"};
    app.require_subcommand(1);
    Common common;
    app.add_option("--threads", common.threads, "worker threads for branching solvers")->check(CLI::PositiveNumber);

    // solve
    std::string solve_file, solve_algo = "auto", witness_path;
    std::optional<std::int64_t> opt_d, opt_D;
    bool stats = false, dense = false;
    std::string td_path;
    auto* solve = app.add_subcommand("solve", "decide an instance under a per-step budget");
    solve->add_option("instance", solve_file, "instance file")->required();
    solve->add_option("--algo", solve_algo, "solver")
        ->check(CLI::IsMember({"auto", "bruteforce", "layered", "orientation", "dcc", "treewidth"}));
    solve->add_option("--d", opt_d, "per-step budget, overrides the file");
    solve->add_option("--witness", witness_path, "write the solution file here ('-' for stdout)");
    solve->add_flag("--stats", stats, "print solver statistics to stderr");
    solve->add_flag("--dense", dense, "treewidth: dense tables");
    solve->add_option("--td", td_path, "treewidth: PACE .td decomposition of the underlying graph");

    // solve-global
    std::string global_file, global_algo = "auto";
    auto* solve_g = app.add_subcommand("solve-global", "decide an instance under a total budget");
    solve_g->add_option("instance", global_file, "instance file")->required();
    solve_g->add_option("--algo", global_algo, "solver")->check(CLI::IsMember({"auto", "bruteforce", "a2sat"}));
    solve_g->add_option("--D", opt_D, "total budget, overrides the file");
    solve_g->add_option("--witness", witness_path, "write the solution file here ('-' for stdout)");
    solve_g->add_flag("--stats", stats, "print solver statistics to stderr");

    // verify
    std::string verify_instance, verify_solution_path;
    auto* verify = app.add_subcommand("verify", "check a solution file against an instance");
    verify->add_option("instance", verify_instance, "instance file")->required();
    verify->add_option("solution", verify_solution_path, "solution file")->required();
    auto* vd = verify->add_option("--d", opt_d, "per-step budget");
    verify->add_option("--D", opt_D, "total budget")->excludes(vd);

    // reduce
    std::string reduce_file, reduce_to, out_path;
    auto* reduce = app.add_subcommand("reduce", "emit the multistage 2-SAT or Almost 2-SAT form");
    reduce->add_option("instance", reduce_file, "instance file")->required();
    reduce->add_option("--to", reduce_to, "target format")->required()->check(CLI::IsMember({"ms2sat", "a2sat"}));
    auto* rd = reduce->add_option("--d", opt_d, "per-step budget (ms2sat)");
    reduce->add_option("--D", opt_D, "total budget (a2sat)")->excludes(rd);
    reduce->add_option("-o,--output", out_path, "output file, default stdout");

    // gen
    auto* gen = app.add_subcommand("gen", "generate instances");
    gen->require_subcommand(1);
    std::string labels_path, formula, edges_spec, inner_path;
    std::vector<std::string> parts;
    int vars = 0, clauses = 0, gn = 0, gk = 3, tau = 1;
    double prob = 0.5, persistence = 0.5;
    std::uint64_t seed = 1;
    std::optional<std::int64_t> gen_budget;
    auto common_gen = [&](CLI::App* s) {
        s->add_option("-o,--output", out_path, "output file, default stdout");
        s->add_option("--labels", labels_path, "write a JSON vertex label map here");
        s->add_option("--seed", seed, "random seed");
    };
    auto graph_flags = [&](CLI::App* s) {
        s->add_option("--n", gn, "source vertex count")->required();
        s->add_option("--edges", edges_spec, "source edges as u-v,u-v,...; random if absent");
        s->add_option("--p", prob, "edge probability for a random source");
    };
    auto* g_x13 = gen->add_subcommand("x13sat", "from an Exact 1-in-3 SAT formula");
    g_x13->add_option("--formula", formula, "clauses separated by ',', literals as signed integers");
    g_x13->add_option("--vars", vars, "variable count");
    g_x13->add_option("--clauses", clauses, "random formula with this many clauses");
    common_gen(g_x13);
    auto* g_bip = gen->add_subcommand("edgebip", "from an Edge Bipartization instance");
    graph_flags(g_bip);
    g_bip->add_option("--k", gk, "deletion bound")->required();
    common_gen(g_bip);
    auto* g_clq = gen->add_subcommand("clique", "from a Clique instance");
    graph_flags(g_clq);
    g_clq->add_option("--k", gk, "clique size (>= 3)");
    common_gen(g_clq);
    auto* g_mc = gen->add_subcommand("mcclique", "from a Multicolored Clique instance; classes are blocks of n vertices");
    g_mc->add_option("--k", gk, "number of classes")->required();
    g_mc->add_option("--n", gn, "class size")->required();
    g_mc->add_option("--edges", edges_spec, "edges as u-v,...; random between classes if absent");
    g_mc->add_option("--p", prob, "edge probability for a random source");
    common_gen(g_mc);
    auto* g_few = gen->add_subcommand("fewedges", "spread a d=1 instance over three-edge layers");
    g_few->add_option("--inner", inner_path, "instance file")->required();
    common_gen(g_few);
    auto* g_rand = gen->add_subcommand("random", "random temporal graph");
    g_rand->add_option("--n", gn, "vertices")->required();
    g_rand->add_option("--tau", tau, "layers")->required();
    g_rand->add_option("--p", prob, "edge probability");
    g_rand->add_option("--persistence", persistence, "probability that an edge survives to the next layer");
    g_rand->add_option("--d", gen_budget, "write a local budget line");
    common_gen(g_rand);
    auto* g_and = gen->add_subcommand("andcompose", "concatenate instances with empty separator layers");
    g_and->add_option("instances", parts, "instance files over the same vertex count")->required();
    common_gen(g_and);

    // params
    std::string params_file, param_name = "all";
    bool kv = false;
    auto* params = app.add_subcommand("params", "structural parameters and their temporal lifts");
    params->add_option("instance", params_file, "instance file")->required();
    params->add_option("--param", param_name, "ncc, delta, fes, vc, dcc, tw or all");
    params->add_flag("--kv", kv, "key=value lines instead of a table");

    // bench
    std::string suite;
    int timeout_ms = 10000, count = 20;
    auto* bench = app.add_subcommand("bench", "run a benchmark suite, CSV on stdout");
    bench->add_option("--suite", suite, "local, global or gadgets")->required()->check(
        CLI::IsMember({"local", "global", "gadgets"}));
    bench->add_option("--timeout-ms", timeout_ms, "per-run time limit")->check(CLI::PositiveNumber);
    bench->add_option("--count", count, "instances in the suite")->check(CLI::PositiveNumber);
    bench->add_option("--seed", seed, "random seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitYes : kExitUsage;
    }

    std::vector<std::string> raw(argv + 1, argv + argc);
    try {
        auto cfg = make_config(common);

        if (*solve) {
            auto f = parse_instance(read_file(solve_file));
            const auto d = budget_value(f, opt_d, BudgetKind::Local, "d");
            SolveOutcome r;
            if (solve_algo == "auto") r = solve_auto(f.graph, d, cfg);
            else if (solve_algo == "bruteforce") r = solve_bruteforce_local(f.graph, d, cfg);
            else if (solve_algo == "layered") r = solve_layered_dag(f.graph, d, cfg);
            else if (solve_algo == "orientation") r = solve_component_orientation(f.graph, d, cfg);
            else if (solve_algo == "dcc") r = solve_dcc_sum(f.graph, d, cfg);
            else {
                TreewidthOptions opt;
                opt.dense = dense;
                if (!td_path.empty()) opt.decomposition = parse_pace_td(read_file(td_path));
                r = solve_treewidth_dp(f.graph, d, cfg, opt);
            }
            out << (r.yes ? "s yes\n" : "s no\n");
            if (!witness_path.empty()) emit(out, witness_path == "-" ? "" : witness_path, serialize_solution(r));
            if (stats) print_stats(err, r);
            return r.yes ? kExitYes : kExitNo;
        }

        if (*solve_g) {
            auto f = parse_instance(read_file(global_file));
            const auto D = budget_value(f, opt_D, BudgetKind::Global, "D");
            SolveOutcome r = global_algo == "bruteforce" ? solve_bruteforce_global(f.graph, D, cfg)
                                                         : solve_global(f.graph, D, cfg, global_algo == "auto");
            out << (r.yes ? "s yes\n" : "s no\n");
            if (!witness_path.empty()) emit(out, witness_path == "-" ? "" : witness_path, serialize_solution(r));
            if (stats) print_stats(err, r);
            return r.yes ? kExitYes : kExitNo;
        }

        if (*verify) {
            auto f = parse_instance(read_file(verify_instance));
            auto s = parse_solution(read_file(verify_solution_path));
            Budget b;
            if (opt_d) b = Budget::local(*opt_d);
            else if (opt_D) b = Budget::global(*opt_D);
            else if (f.budget) b = *f.budget;
            else throw UsageError("no budget: pass --d or --D or add a 'b' line to the instance");
            if (!s.yes || !s.coloring) {
                err << "invalid: solution carries no coloring\n";
                return kExitNo;
            }
            auto v = verify_solution(f.graph, *s.coloring, b);
            if (!v.ok) {
                err << "invalid: " << v.message << '\n';
                return kExitNo;
            }
            out << "ok\n";
            return kExitYes;
        }

        if (*reduce) {
            auto f = parse_instance(read_file(reduce_file));
            if (reduce_to == "ms2sat") {
                const auto d = budget_value(f, opt_d, BudgetKind::Local, "d");
                emit(out, out_path, emit_ms2sat(f.graph, d));
            } else {
                const auto D = budget_value(f, opt_D, BudgetKind::Global, "D");
                emit(out, out_path, write_wcnf(reduce_to_almost_2sat(f.graph, D), D));
            }
            return kExitYes;
        }

        if (*gen) {
            GeneratedInstance g;
            std::mt19937_64 rng(seed);
            auto source_graph = [&](int n) {
                if (!edges_spec.empty()) return parse_edge_list(n, edges_spec);
                return gen_random(n, 1, prob, 0, seed).layer_graph(1);
            };
            if (*g_x13) {
                Formula3 f;
                if (!formula.empty()) {
                    f = parse_formula(formula, vars);
                } else {
                    if (vars < 1 || clauses < 1) throw UsageError("x13sat needs --formula or both --vars and --clauses");
                    f.variables = vars;
                    for (int j = 0; j < clauses; ++j) {
                        std::array<int, 3> c{};
                        for (int& l : c) {
                            l = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(vars));
                            if (rng() & 1) l = -l;
                        }
                        f.clauses.push_back(c);
                    }
                }
                g = gen_x13sat(f);
            } else if (*g_bip) {
                g = gen_edge_bipartization(source_graph(gn), gk);
            } else if (*g_clq) {
                g = gen_clique(source_graph(gn), gk);
            } else if (*g_mc) {
                McCliqueSource src;
                src.classes.resize(static_cast<std::size_t>(gk));
                for (int v = 1; v <= gk * gn; ++v) src.classes[(v - 1) / gn].push_back(v);
                if (!edges_spec.empty()) {
                    src.graph = parse_edge_list(gk * gn, edges_spec);
                } else {
                    std::vector<Edge> e;
                    for (const auto& x : gen_random(gk * gn, 1, prob, 0, seed).layer(1))
                        if ((x.u - 1) / gn != (x.v - 1) / gn) e.push_back(x);
                    src.graph = StaticGraph(gk * gn, e);
                }
                g = gen_multicolored_clique(src);
            } else if (*g_few) {
                auto inner = parse_instance(read_file(inner_path));
                g = gen_few_edges(inner.graph);
            } else if (*g_rand) {
                auto graph = gen_random(gn, tau, prob, persistence, seed);
                g = {graph, Budget::local(gen_budget.value_or(0)), {}};
                for (int v = 1; v <= gn; ++v) g.labels.push_back("v" + std::to_string(v));
            } else {
                std::vector<TemporalGraph> graphs;
                for (const auto& p : parts) graphs.push_back(parse_instance(read_file(p)).graph);
                g = {and_compose(graphs), Budget::local(1), {}};
            }
            InstanceFile file{g.graph, g.budget, {describe(raw)}};
            if (*g_rand && !gen_budget) file.budget.reset();
            emit(out, out_path, serialize_instance(file));
            if (!labels_path.empty() && !g.labels.empty()) write_file(labels_path, labels_json(g.labels));
            return kExitYes;
        }

        if (*params) {
            auto f = parse_instance(read_file(params_file));
            std::vector<std::string> names;
            if (param_name == "all") names = parameter_names();
            else names.push_back(param_name);
            std::vector<ParamReport> reports;
            for (const auto& n : names) {
                reports.push_back(lift(n, f.graph));
                for (const auto& note : check_lift(reports.back(), f.graph.lifetime()).notes) err << "c note: " << note << '\n';
            }
            out << (kv ? format_param_kv(reports) : format_param_table(reports));
            return kExitYes;
        }

        if (*bench) {
            out << "instance,algo,verdict,micros,states\n";
            auto timed = [&] {
                SolverConfig c = cfg;
                c.deadline = std::chrono::steady_clock::now() + std::chrono::milliseconds(timeout_ms);
                return c;
            };
            auto print = [&](const BenchRow& r) {
                out << r.instance << ',' << r.algo << ',' << r.verdict << ',' << r.micros << ',' << r.states << '\n';
            };
            std::mt19937_64 rng(seed);
            for (int i = 0; i < count; ++i) {
                const std::string name = suite + "-" + std::to_string(i + 1);
                if (suite == "gadgets") {
                    Formula3 f{3, {}};
                    const int m = 1 + i % 2;
                    for (int j = 0; j < m; ++j) {
                        std::array<int, 3> c{};
                        for (int& l : c) l = (1 + static_cast<int>(rng() % 3)) * ((rng() & 1) ? 1 : -1);
                        f.clauses.push_back(c);
                    }
                    const auto g = gen_x13sat(f).graph;
                    print(run_bench(name, "layered", [&] { return solve_layered_dag(g, 1, timed()); }));
                    print(run_bench(name, "treewidth", [&] { return solve_treewidth_dp(g, 1, timed()); }));
                    print(run_bench(name, "auto", [&] { return solve_auto(g, 1, timed()); }));
                    continue;
                }
                const int n = 3 + static_cast<int>(rng() % 5);
                const int t = 2 + static_cast<int>(rng() % 3);
                const auto g = gen_random(n, t, 0.2 + 0.1 * static_cast<double>(rng() % 4), 0.5, rng());
                const std::int64_t budget = static_cast<std::int64_t>(rng() % 3);
                if (suite == "local") {
                    print(run_bench(name, "bruteforce", [&] { return solve_bruteforce_local(g, budget, timed()); }));
                    print(run_bench(name, "layered", [&] { return solve_layered_dag(g, budget, timed()); }));
                    print(run_bench(name, "orientation", [&] { return solve_component_orientation(g, budget, timed()); }));
                    print(run_bench(name, "dcc", [&] { return solve_dcc_sum(g, budget, timed()); }));
                    print(run_bench(name, "treewidth", [&] { return solve_treewidth_dp(g, budget, timed()); }));
                } else {
                    print(run_bench(name, "bruteforce", [&] { return solve_bruteforce_global(g, budget, timed()); }));
                    print(run_bench(name, "a2sat", [&] { return solve_global(g, budget, timed(), false); }));
                }
            }
            return kExitYes;
        }
    } catch (const CapExceeded& e) {
        err << "error: " << e.what() << '\n';
        return kExitCap;
    } catch (const Timeout& e) {
        err << "error: " << e.what() << '\n';
        return kExitCap;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv{"ms2col"};
    for (const auto& a : args) argv.push_back(a.c_str());
    return cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace ms2c
