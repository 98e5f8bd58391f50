#include "ms2c/dcc.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <stdexcept>

#include "ms2c/coloring.hpp"
#include "ms2c/ms2ce.hpp"
#include "ms2c/parallel.hpp"

namespace ms2c {

namespace {

class AdjMatrix {
public:
    explicit AdjMatrix(const StaticGraph& g) : n_(g.vertex_count()), bits_(static_cast<std::size_t>((n_ + 1) * (n_ + 1))) {
        for (const auto& e : g.edges()) {
            bits_[idx(e.u, e.v)] = true;
            bits_[idx(e.v, e.u)] = true;
        }
    }
    bool operator()(Vertex a, Vertex b) const { return bits_[idx(a, b)]; }
    int n() const { return n_; }

private:
    std::size_t idx(Vertex a, Vertex b) const { return static_cast<std::size_t>(a * (n_ + 1) + b); }
    int n_;
    std::vector<bool> bits_;
};

std::optional<std::array<Vertex, 3>> find_witness(const AdjMatrix& adj, const std::vector<bool>& removed) {
    const int n = adj.n();
    for (Vertex a = 1; a <= n; ++a) {
        if (removed[a]) continue;
        for (Vertex b = a + 1; b <= n; ++b) {
            if (removed[b]) continue;
            const int ab = adj(a, b);
            for (Vertex c = b + 1; c <= n; ++c) {
                if (removed[c]) continue;
                if (ab + adj(a, c) + adj(b, c) == 1) return std::array<Vertex, 3>{a, b, c};
            }
        }
    }
    return std::nullopt;
}

}  // namespace

CoclusterCheck is_cocluster(const StaticGraph& g) {
    AdjMatrix adj(g);
    std::vector<bool> removed(static_cast<std::size_t>(g.vertex_count()) + 1, false);
    CoclusterCheck r;
    if (auto w = find_witness(adj, removed)) {
        r.cocluster = false;
        r.witness = *w;
    }
    return r;
}

std::optional<std::vector<Vertex>> dcc_modulator(const StaticGraph& g, int k_max) {
    AdjMatrix adj(g);
    std::vector<bool> removed(static_cast<std::size_t>(g.vertex_count()) + 1, false);
    for (int k = 0; k <= k_max; ++k) {
        std::optional<std::vector<Vertex>> best;
        std::vector<Vertex> chosen;
        std::function<void(int)> branch = [&](int budget) {
            auto w = find_witness(adj, removed);
            if (!w) {
                auto s = chosen;
                std::sort(s.begin(), s.end());
                if (!best || s < *best) best = std::move(s);
                return;
            }
            if (budget == 0) return;
            for (Vertex v : *w) {
                removed[v] = true;
                chosen.push_back(v);
                branch(budget - 1);
                chosen.pop_back();
                removed[v] = false;
            }
        };
        branch(k);
        if (best) return best;
    }
    return std::nullopt;
}

CoclusterModulator cocluster_modulators(const TemporalGraph& g, int k_max) {
    CoclusterModulator m;
    for (int t = 1; t <= g.lifetime(); ++t) {
        const auto lg = g.layer_graph(t);
        auto x = dcc_modulator(lg, k_max);
        if (!x)
            throw CapExceeded("layer " + std::to_string(t) + " needs a co-cluster modulator larger than " +
                              std::to_string(k_max));
        std::vector<bool> removed(static_cast<std::size_t>(g.vertex_count()) + 1, false);
        for (Vertex v : *x) removed[v] = true;
        m.tags.push_back(lg.without(removed).edge_count() > 0 ? CoclusterTag::Plus : CoclusterTag::Minus);
        m.sets.push_back(std::move(*x));
    }
    return m;
}

namespace {

// Colors uncolored endpoints of edges with a colored endpoint until nothing changes.
// Returns false on a monochromatic edge.
bool propagate(const std::vector<std::vector<Vertex>>& adj, std::vector<Color>& f) {
    std::vector<Vertex> queue;
    for (Vertex v = 1; v < static_cast<Vertex>(adj.size()); ++v)
        if (f[v - 1] != kUncolored) queue.push_back(v);
    for (std::size_t h = 0; h < queue.size(); ++h) {
        const Vertex u = queue[h];
        for (Vertex w : adj[u]) {
            if (f[w - 1] == kUncolored) {
                f[w - 1] = flip(f[u - 1]);
                queue.push_back(w);
            } else if (f[w - 1] == f[u - 1]) {
                return false;
            }
        }
    }
    return true;
}

struct LayerContext {
    std::vector<std::vector<Vertex>> adj;
    std::vector<bool> in_x;
    CoclusterTag tag;
};

// All partial layer colorings Algorithm 1 derives from the modulator coloring in f.
std::vector<std::vector<Color>> layer_options(const LayerContext& L, std::vector<Color> f) {
    std::vector<std::vector<Color>> out;
    const int n = static_cast<int>(f.size());
    if (L.tag == CoclusterTag::Minus) {
        // residual is edgeless: each residual vertex with an edge takes the opposite of its neighbors
        for (Vertex v = 1; v <= n; ++v) {
            if (L.in_x[v] || L.adj[v].empty()) continue;
            Color c = kUncolored;
            for (Vertex w : L.adj[v]) {
                const Color need = flip(f[w - 1]);
                if (c != kUncolored && c != need) return out;
                c = need;
            }
            f[v - 1] = c;
        }
        for (Vertex v = 1; v <= n; ++v)
            for (Vertex w : L.adj[v])
                if (f[v - 1] == f[w - 1]) return out;
        out.push_back(std::move(f));
        return out;
    }
    if (!propagate(L.adj, f)) return out;
    std::function<void(std::vector<Color>&)> expand = [&](std::vector<Color>& cur) {
        Vertex seed = 0;
        for (Vertex v = 1; v <= n && seed == 0; ++v)
            if (cur[v - 1] == kUncolored && !L.adj[v].empty()) seed = v;
        if (seed == 0) {
            out.push_back(cur);
            return;
        }
        for (Color c : {Color{1}, Color{2}}) {
            auto next = cur;
            next[seed - 1] = c;
            if (propagate(L.adj, next)) expand(next);
        }
    };
    expand(f);
    return out;
}

}  // namespace

SolveOutcome solve_dcc_sum(const TemporalGraph& g, std::int64_t d, const SolverConfig& config) {
    const auto report = layer_bipartite_check(g);
    if (!report.all_bipartite()) {
        auto out = SolveOutcome::no("dcc");
        out.stats["nonbipartite_layer"] = report.first_failure;
        return out;
    }
    const int n = g.vertex_count();
    const int tau = g.lifetime();
    const auto mods = cocluster_modulators(g, config.dcc_bits);
    std::int64_t sum = 0;
    for (const auto& x : mods.sets) sum += std::max<std::int64_t>(1, static_cast<std::int64_t>(x.size()));
    if (sum > config.dcc_bits || sum > 62)
        throw CapExceeded("co-cluster branching needs " + std::to_string(sum) + " bits, cap is " +
                          std::to_string(config.dcc_bits));

    std::vector<LayerContext> layers;
    std::vector<std::pair<int, Vertex>> branch_vertices;  // (layer, vertex), sorted
    for (int t = 1; t <= tau; ++t) {
        LayerContext L;
        L.adj = g.layer_graph(t).adjacency();
        L.in_x.assign(static_cast<std::size_t>(n) + 1, false);
        for (Vertex v : mods.sets[t - 1]) {
            L.in_x[v] = true;
            branch_vertices.emplace_back(t, v);
        }
        L.tag = mods.tags[t - 1];
        layers.push_back(std::move(L));
    }
    const int bits = static_cast<int>(branch_vertices.size());

    std::atomic<std::int64_t> leaves{0};
    auto try_mask = [&](std::uint64_t mask, ColoringSequence* witness) {
        std::vector<std::vector<Color>> base(static_cast<std::size_t>(tau),
                                             std::vector<Color>(static_cast<std::size_t>(n), kUncolored));
        for (int i = 0; i < bits; ++i)
            base[branch_vertices[i].first - 1][branch_vertices[i].second - 1] = ((mask >> i) & 1U) ? 2 : 1;
        std::vector<std::vector<std::vector<Color>>> options;
        for (int t = 1; t <= tau; ++t) {
            options.push_back(layer_options(layers[t - 1], base[t - 1]));
            if (options.back().empty()) return false;
        }
        const TemporalGraph* reduced = nullptr;
        std::optional<TemporalGraph> reduced_storage;
        PartialColoringSequence p(n, tau);
        std::vector<std::size_t> pick(static_cast<std::size_t>(tau), 0);
        while (true) {
            ++leaves;
            for (int t = 1; t <= tau; ++t) {
                const auto& f = options[t - 1][pick[t - 1]];
                for (Vertex v = 1; v <= n; ++v) p.set(v, t, f[v - 1]);
            }
            reduced_storage = apply_reduction_rule_colored_edge(g, p);
            reduced = &*reduced_storage;
            if (reduced->time_edge_count() != 0)
                throw std::logic_error("co-cluster branch left an edge with an uncolored endpoint");
            auto r = solve_ms2ce_edgeless(*reduced, p, d, config);
            if (r.yes && (r.witness || !witness)) {
                if (witness) *witness = std::move(*r.witness);
                return true;
            }
            int t = 0;
            while (t < tau && ++pick[t] == options[t].size()) pick[t++] = 0;
            if (t == tau) return false;
        }
    };

    const std::uint64_t count = std::uint64_t{1} << bits;
    auto hit = first_success(count, config.threads, config.deterministic, [&](std::uint64_t mask) {
        if ((mask & 0xFF) == 0) config.check_deadline();
        return try_mask(mask, nullptr);
    });
    SolveOutcome out = SolveOutcome::no("dcc");
    if (hit) {
        ColoringSequence w;
        if (try_mask(*hit, &w)) {
            out = SolveOutcome::with_witness("dcc", std::move(w));
        } else {
            out.yes = true;
            out.stats["unverified_yes"] = 1;
        }
    }
    out.stats["modulator_sum"] = sum;
    out.stats["branches"] = leaves.load();
    return out;
}

}  // namespace ms2c
