#include "ms2c/global.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <queue>
#include <set>
#include <sstream>

#include "ms2c/coloring.hpp"

namespace ms2c {

std::int64_t TwoCnf::hard_count() const {
    std::int64_t c = 0;
    for (const auto& cl : clauses)
        if (cl.hard) c += cl.multiplicity;
    return c;
}

std::int64_t TwoCnf::soft_count() const {
    std::int64_t c = 0;
    for (const auto& cl : clauses)
        if (!cl.hard) c += cl.multiplicity;
    return c;
}

SolveOutcome solve_bruteforce_global(const TemporalGraph& g, std::int64_t D, const SolverConfig& config) {
    const int n = g.vertex_count();
    const int tau = g.lifetime();
    const std::int64_t bits = static_cast<std::int64_t>(n) * tau;
    if (bits > config.bruteforce_bits || n > 30)
        throw CapExceeded("instance too large for oracle: n*tau = " + std::to_string(bits) +
                          " state bits exceeds cap " + std::to_string(config.bruteforce_bits));
    const std::uint32_t total = std::uint32_t{1} << n;
    constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;
    auto proper = [&](int t, std::uint32_t a) {
        for (const auto& e : g.layer(t))
            if (((a >> (e.u - 1)) & 1U) == ((a >> (e.v - 1)) & 1U)) return false;
        return true;
    };
    std::vector<std::vector<std::int64_t>> cost(static_cast<std::size_t>(tau), std::vector<std::int64_t>(total, kInf));
    std::vector<std::vector<std::uint32_t>> parent(static_cast<std::size_t>(tau), std::vector<std::uint32_t>(total, 0));
    std::vector<std::vector<std::uint32_t>> proper_list(static_cast<std::size_t>(tau));
    for (int t = 1; t <= tau; ++t)
        for (std::uint32_t a = 0; a < total; ++a)
            if (proper(t, a)) proper_list[t - 1].push_back(a);
    std::int64_t states = 0;
    for (std::uint32_t a : proper_list[0]) cost[0][a] = 0;
    for (int t = 1; t < tau; ++t) {
        config.check_deadline();
        for (std::uint32_t b : proper_list[t])
            for (std::uint32_t a : proper_list[t - 1]) {
                ++states;
                if (cost[t - 1][a] >= kInf) continue;
                const std::int64_t c = cost[t - 1][a] + std::popcount(a ^ b);
                if (c < cost[t][b]) {
                    cost[t][b] = c;
                    parent[t][b] = a;
                }
            }
    }
    std::int64_t best = kInf;
    std::uint32_t end = 0;
    for (std::uint32_t a : proper_list[tau - 1])
        if (cost[tau - 1][a] < best) {
            best = cost[tau - 1][a];
            end = a;
        }
    SolveOutcome out = SolveOutcome::no("bruteforce-global");
    if (best <= D) {
        ColoringSequence w(static_cast<std::size_t>(tau), Coloring(static_cast<std::size_t>(n)));
        std::uint32_t a = end;
        for (int t = tau - 1; t >= 0; --t) {
            for (int v = 0; v < n; ++v) w[t][v] = ((a >> v) & 1U) ? 2 : 1;
            a = parent[t][a];
        }
        out = SolveOutcome::with_witness("bruteforce-global", std::move(w));
    }
    if (best < kInf) out.stats["min_cost"] = best;
    out.stats["states"] = states;
    return out;
}

namespace {

void add_persistence(TwoCnf& f, int n, int tau) {
    for (int t = 1; t < tau; ++t)
        for (int v = 1; v <= n; ++v) {
            const Literal now = (t - 1) * n + v, next = t * n + v;
            f.clauses.push_back({-now, next, false, 1});
            f.clauses.push_back({now, -next, false, 1});
        }
}

}  // namespace

TwoCnf reduce_to_almost_2sat(const TemporalGraph& g, std::int64_t D) {
    if (D < 0) throw PreconditionError("budget must be nonnegative");
    const int n = g.vertex_count();
    TwoCnf f;
    f.variables = n * g.lifetime();
    for (int t = 1; t <= g.lifetime(); ++t)
        for (const auto& e : g.layer(t)) {
            const Literal u = (t - 1) * n + e.u, v = (t - 1) * n + e.v;
            f.clauses.push_back({u, v, true, D + 1});
            f.clauses.push_back({-u, -v, true, D + 1});
        }
    add_persistence(f, n, g.lifetime());
    return f;
}

TwoCnf reduce_ms2sat_to_almost_2sat(const Ms2satInstance& inst) {
    if (inst.budget < 0) throw PreconditionError("budget must be nonnegative");
    if (static_cast<int>(inst.clauses.size()) != inst.stages)
        throw PreconditionError("clause blocks do not match the stage count");
    const int n = inst.variables;
    TwoCnf f;
    f.variables = n * inst.stages;
    for (int t = 1; t <= inst.stages; ++t)
        for (auto [a, b] : inst.clauses[t - 1]) {
            if (a == 0 || b == 0 || std::abs(a) > n || std::abs(b) > n)
                throw PreconditionError("literal out of range in stage " + std::to_string(t));
            auto shift = [&](Literal l) { return l > 0 ? l + (t - 1) * n : l - (t - 1) * n; };
            f.clauses.push_back({shift(a), shift(b), true, inst.budget + 1});
        }
    add_persistence(f, n, inst.stages);
    return f;
}

namespace {

// literal node: 2(v-1) for v, 2(v-1)+1 for -v
int node_of(Literal l) { return l > 0 ? 2 * (l - 1) : 2 * (-l - 1) + 1; }

struct Arc {
    int to;
    std::size_t clause;
};

struct ImplicationGraph {
    std::vector<std::vector<Arc>> out;

    ImplicationGraph(const TwoCnf& f, const std::vector<bool>& deleted)
        : out(static_cast<std::size_t>(2 * f.variables)) {
        for (std::size_t i = 0; i < f.clauses.size(); ++i) {
            if (!deleted.empty() && deleted[i]) continue;
            const auto& c = f.clauses[i];
            out[node_of(-c.a)].push_back({node_of(c.b), i});
            out[node_of(-c.b)].push_back({node_of(c.a), i});
        }
    }

    // Kosaraju; component ids come out in topological order of the condensation
    std::vector<int> components() const {
        const int N = static_cast<int>(out.size());
        std::vector<std::vector<int>> rev(static_cast<std::size_t>(N));
        for (int u = 0; u < N; ++u)
            for (const auto& a : out[u]) rev[a.to].push_back(u);
        std::vector<int> order;
        std::vector<bool> seen(static_cast<std::size_t>(N), false);
        for (int s = 0; s < N; ++s) {
            if (seen[s]) continue;
            std::vector<std::pair<int, std::size_t>> stack{{s, 0}};
            seen[s] = true;
            while (!stack.empty()) {
                auto& [u, i] = stack.back();
                if (i < out[u].size()) {
                    const int w = out[u][i++].to;
                    if (!seen[w]) {
                        seen[w] = true;
                        stack.emplace_back(w, 0);
                    }
                } else {
                    order.push_back(u);
                    stack.pop_back();
                }
            }
        }
        std::vector<int> comp(static_cast<std::size_t>(N), -1);
        int c = 0;
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            if (comp[*it] >= 0) continue;
            std::vector<int> stack{*it};
            comp[*it] = c;
            while (!stack.empty()) {
                const int u = stack.back();
                stack.pop_back();
                for (int w : rev[u])
                    if (comp[w] < 0) {
                        comp[w] = c;
                        stack.push_back(w);
                    }
            }
            ++c;
        }
        return comp;
    }

    // shortest path by BFS, arcs tried in clause-index order; returns clause indices
    std::vector<std::size_t> path(int from, int to) const {
        std::vector<std::pair<int, std::size_t>> parent(out.size(), {-1, 0});
        std::vector<bool> seen(out.size(), false);
        std::queue<int> q;
        q.push(from);
        seen[from] = true;
        while (!q.empty()) {
            const int u = q.front();
            q.pop();
            auto arcs = out[u];
            std::sort(arcs.begin(), arcs.end(), [](const Arc& a, const Arc& b) { return a.clause < b.clause; });
            for (const auto& a : arcs) {
                if (seen[a.to]) continue;
                seen[a.to] = true;
                parent[a.to] = {u, a.clause};
                if (a.to == to) {
                    std::vector<std::size_t> clauses;
                    for (int x = to; x != from; x = parent[x].first) clauses.push_back(parent[x].second);
                    std::reverse(clauses.begin(), clauses.end());
                    return clauses;
                }
                q.push(a.to);
            }
        }
        return {};
    }
};

}  // namespace

TwoSatResult solve_2sat(const TwoCnf& f, const std::vector<bool>& deleted) {
    ImplicationGraph ig(f, deleted);
    const auto comp = ig.components();
    TwoSatResult r;
    r.assignment.assign(static_cast<std::size_t>(f.variables) + 1, false);
    for (int v = 1; v <= f.variables; ++v) {
        const int p = comp[node_of(v)], q = comp[node_of(-v)];
        if (p == q) return r;
        r.assignment[v] = p > q;
    }
    r.satisfiable = true;
    return r;
}

Almost2SatResult solve_almost_2sat(const TwoCnf& f, std::int64_t k, DeletionMode mode, std::uint64_t max_nodes) {
    Almost2SatResult result;
    std::vector<bool> deleted(f.clauses.size(), false);
    std::set<std::vector<std::size_t>> explored;
    std::vector<std::size_t> current;

    auto deletable = [&](std::size_t i) { return mode == DeletionMode::AllSoft || !f.clauses[i].hard; };

    auto search = [&](auto&& self, std::int64_t budget) -> bool {
        if (static_cast<std::uint64_t>(++result.nodes) > max_nodes)
            throw CapExceeded("Almost 2-SAT branching exceeded " + std::to_string(max_nodes) + " nodes");
        ImplicationGraph ig(f, deleted);
        const auto comp = ig.components();
        int bad = 0;
        for (int v = 1; v <= f.variables && bad == 0; ++v)
            if (comp[node_of(v)] == comp[node_of(-v)]) bad = v;
        if (bad == 0) {
            result.assignment.assign(static_cast<std::size_t>(f.variables) + 1, false);
            for (int v = 1; v <= f.variables; ++v) result.assignment[v] = comp[node_of(v)] > comp[node_of(-v)];
            result.deleted = current;
            std::sort(result.deleted.begin(), result.deleted.end());
            return true;
        }
        if (budget <= 0) return false;
        auto walk = ig.path(node_of(bad), node_of(-bad));
        const auto back = ig.path(node_of(-bad), node_of(bad));
        walk.insert(walk.end(), back.begin(), back.end());
        std::sort(walk.begin(), walk.end());
        walk.erase(std::unique(walk.begin(), walk.end()), walk.end());
        for (std::size_t c : walk) {
            if (!deletable(c) || f.clauses[c].multiplicity > budget) continue;
            auto key = current;
            key.push_back(c);
            std::sort(key.begin(), key.end());
            if (!explored.insert(key).second) continue;
            deleted[c] = true;
            current.push_back(c);
            if (self(self, budget - f.clauses[c].multiplicity)) return true;
            current.pop_back();
            deleted[c] = false;
        }
        return false;
    };
    result.yes = search(search, k);
    return result;
}

SolveOutcome solve_global(const TemporalGraph& g, std::int64_t D, const SolverConfig& config, bool fallback) {
    const auto f = reduce_to_almost_2sat(g, D);
    Almost2SatResult r;
    try {
        r = solve_almost_2sat(f, D, DeletionMode::SoftOnly, config.a2sat_nodes);
    } catch (const CapExceeded&) {
        if (!fallback) throw;
        auto out = solve_bruteforce_global(g, D, config);
        out.stats["a2sat_fallback"] = 1;
        return out;
    }
    SolveOutcome out = SolveOutcome::no("a2sat");
    if (r.yes) {
        const int n = g.vertex_count();
        ColoringSequence w(static_cast<std::size_t>(g.lifetime()), Coloring(static_cast<std::size_t>(n)));
        for (int t = 1; t <= g.lifetime(); ++t)
            for (int v = 1; v <= n; ++v) w[t - 1][v - 1] = r.assignment[(t - 1) * n + v] ? 1 : 2;
        out = SolveOutcome::with_witness("a2sat", std::move(w));
        out.stats["deleted"] = static_cast<std::int64_t>(r.deleted.size());
    }
    out.stats["nodes"] = r.nodes;
    out.stats["hard_clauses"] = f.hard_count();
    out.stats["soft_clauses"] = f.soft_count();
    return out;
}

std::string write_wcnf(const TwoCnf& f, std::int64_t k) {
    const std::int64_t top = k + 1;
    std::ostringstream os;
    os << "c k = " << k << '\n';
    os << "p wcnf " << f.variables << ' ' << f.hard_count() + f.soft_count() << ' ' << top << '\n';
    for (const auto& c : f.clauses)
        for (std::int64_t i = 0; i < c.multiplicity; ++i)
            os << (c.hard ? top : 1) << ' ' << c.a << ' ' << c.b << " 0\n";
    return os.str();
}

std::pair<TwoCnf, std::int64_t> parse_wcnf(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    TwoCnf f;
    std::int64_t k = -1, top = -1, declared = -1, seen = 0;
    int line_no = 0;
    auto fail = [&](const std::string& m) { throw InvalidInstance("line " + std::to_string(line_no) + ": " + m); };
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head)) continue;
        if (head == "c") {
            std::string key, eq;
            std::int64_t value;
            if (ls >> key >> eq >> value && key == "k" && eq == "=") k = value;
            continue;
        }
        if (head == "p") {
            std::string kind;
            if (!(ls >> kind >> f.variables >> declared >> top) || kind != "wcnf") fail("expected 'p wcnf'");
            continue;
        }
        if (top < 0) fail("clause before header");
        std::int64_t w = 0;
        Literal a = 0, b = 0, z = 1;
        try {
            w = std::stoll(head);
        } catch (const std::exception&) {
            fail("bad weight");
        }
        if (!(ls >> a >> b >> z) || z != 0 || a == 0 || b == 0) fail("expected '<weight> <lit> <lit> 0'");
        if (std::abs(a) > f.variables || std::abs(b) > f.variables) fail("literal out of range");
        const bool hard = w >= top;
        if (!hard && w != 1) fail("soft clauses must have weight 1");
        ++seen;
        if (hard && !f.clauses.empty()) {
            auto& last = f.clauses.back();
            if (last.hard && last.a == a && last.b == b) {
                ++last.multiplicity;
                continue;
            }
        }
        f.clauses.push_back({a, b, hard, 1});
    }
    if (top < 0) throw InvalidInstance("missing 'p wcnf' header");
    if (seen != declared) throw InvalidInstance("header declares " + std::to_string(declared) + " clauses, found " +
                                                std::to_string(seen));
    if (k < 0) k = top - 1;
    return {f, k};
}

}  // namespace ms2c
