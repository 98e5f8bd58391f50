#include "ms2c/params.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "ms2c/coloring.hpp"
#include "ms2c/dcc.hpp"
#include "ms2c/treewidth.hpp"

namespace ms2c {

int param_ncc(const StaticGraph& g) { return connected_components(g).count; }

int param_max_degree(const StaticGraph& g) {
    std::vector<int> deg(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
    int best = 0;
    for (const auto& e : g.edges()) best = std::max({best, ++deg[e.u], ++deg[e.v]});
    return best;
}

std::int64_t param_fes(const StaticGraph& g) {
    return static_cast<std::int64_t>(g.edge_count()) - g.vertex_count() + param_ncc(g);
}

namespace {

// Can the edges among non-removed vertices be covered with k more vertices?
bool cover(const std::vector<std::vector<Vertex>>& adj, std::vector<bool>& removed, int k) {
    Vertex best = 0;
    int best_deg = 0;
    for (Vertex v = 1; v < static_cast<Vertex>(adj.size()); ++v) {
        if (removed[v]) continue;
        int deg = 0;
        for (Vertex w : adj[v]) deg += !removed[w];
        if (deg > best_deg) {
            best = v;
            best_deg = deg;
        }
    }
    if (best == 0) return true;
    if (k == 0) return false;
    removed[best] = true;
    const bool with_v = cover(adj, removed, k - 1);
    removed[best] = false;
    if (with_v) return true;
    if (best_deg > k) return false;
    std::vector<Vertex> taken;
    for (Vertex w : adj[best])
        if (!removed[w]) taken.push_back(w);
    for (Vertex w : taken) removed[w] = true;
    const bool with_nbrs = cover(adj, removed, k - best_deg);
    for (Vertex w : taken) removed[w] = false;
    return with_nbrs;
}

}  // namespace

std::optional<int> param_vc(const StaticGraph& g, int bound) {
    const auto adj = g.adjacency();
    std::vector<bool> removed(adj.size(), false);
    for (int k = 0; k <= bound; ++k)
        if (cover(adj, removed, k)) return k;
    return std::nullopt;
}

std::optional<int> param_dcc(const StaticGraph& g, int bound) {
    auto x = dcc_modulator(g, bound);
    if (!x) return std::nullopt;
    return static_cast<int>(x->size());
}

int param_tw_upper(const StaticGraph& g) {
    return decomposition_from_ordering(g, min_fill_ordering(g)).width();
}

const std::vector<std::string>& parameter_names() {
    static const std::vector<std::string> names{"ncc", "delta", "fes", "vc", "dcc", "tw"};
    return names;
}

namespace {

std::int64_t evaluate(const std::string& name, const StaticGraph& g) {
    const int n = g.vertex_count();
    if (name == "ncc") return param_ncc(g);
    if (name == "delta") return param_max_degree(g);
    if (name == "fes") return param_fes(g);
    if (name == "vc") return *param_vc(g, n);
    if (name == "dcc") return *param_dcc(g, n);
    if (name == "tw") return param_tw_upper(g);
    throw PreconditionError("unknown parameter '" + name + "' (expected ncc, delta, fes, vc, dcc or tw)");
}

}  // namespace

ParamReport lift(const std::string& name, const TemporalGraph& g) {
    ParamReport r;
    r.name = name;
    r.exact = name != "tw";
    r.underlying = evaluate(name, underlying_graph(g));
    for (int t = 1; t <= g.lifetime(); ++t) {
        const auto v = evaluate(name, g.layer_graph(t));
        r.per_layer.push_back(v);
        r.p_inf = std::max(r.p_inf, v);
        r.p_sum += std::max<std::int64_t>(1, v);
    }
    r.p_ut = r.underlying + g.lifetime();
    return r;
}

LiftCheck check_lift(const ParamReport& r, int tau) {
    LiftCheck c;
    auto fail = [&](const std::string& what) {
        c.ok = false;
        c.notes.push_back(r.name + ": " + what);
    };
    if (r.p_inf > r.p_sum) fail("p_inf " + std::to_string(r.p_inf) + " > p_sum " + std::to_string(r.p_sum));
    const bool increasing = r.name == "vc" || r.name == "fes" || r.name == "delta" || r.name == "tw";
    if (increasing) {
        const bool non_monotone = std::any_of(r.per_layer.begin(), r.per_layer.end(),
                                              [&](std::int64_t v) { return v > r.underlying; });
        if (r.name == "tw" && non_monotone) {
            c.notes.push_back("tw: heuristic bound larger on a layer than on the underlying graph, p_sum <= p_ut^2 not checked");
        } else if (r.p_sum > r.p_ut * r.p_ut) {
            fail("p_sum " + std::to_string(r.p_sum) + " > p_ut^2 " + std::to_string(r.p_ut * r.p_ut));
        }
    }
    if (r.name == "ncc" && tau >= 2 && r.underlying >= 2 && r.p_sum < r.p_ut)
        fail("p_sum " + std::to_string(r.p_sum) + " < p_ut " + std::to_string(r.p_ut));
    return c;
}

std::string format_param_table(const std::vector<ParamReport>& reports) {
    std::ostringstream os;
    os << std::left << std::setw(7) << "param" << std::right << std::setw(8) << "p_inf" << std::setw(8) << "p_sum"
       << std::setw(8) << "p_U+tau" << "  kind    layers\n";
    for (const auto& r : reports) {
        os << std::left << std::setw(7) << r.name << std::right << std::setw(8) << r.p_inf << std::setw(8) << r.p_sum
           << std::setw(8) << r.p_ut << "  " << std::left << std::setw(8) << (r.exact ? "exact" : "upper");
        for (std::size_t i = 0; i < r.per_layer.size(); ++i) os << (i ? "," : "") << r.per_layer[i];
        os << '\n';
    }
    return os.str();
}

std::string format_param_kv(const std::vector<ParamReport>& reports) {
    std::ostringstream os;
    for (const auto& r : reports) {
        os << r.name << ".p_inf=" << r.p_inf << '\n'
           << r.name << ".p_sum=" << r.p_sum << '\n'
           << r.name << ".p_ut=" << r.p_ut << '\n'
           << r.name << ".underlying=" << r.underlying << '\n'
           << r.name << ".exact=" << (r.exact ? "exact" : "upper-bound") << '\n'
           << r.name << ".layers=";
        for (std::size_t i = 0; i < r.per_layer.size(); ++i) os << (i ? "," : "") << r.per_layer[i];
        os << '\n';
    }
    return os.str();
}

}  // namespace ms2c
