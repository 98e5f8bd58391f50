#include "ms2c/coloring.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace ms2c {

StaticGraph underlying_graph(const TemporalGraph& g) {
    std::set<Edge> all;
    for (const auto& layer : g.layers()) all.insert(layer.begin(), layer.end());
    return StaticGraph(g.vertex_count(), std::vector<Edge>(all.begin(), all.end()));
}

Components connected_components(const StaticGraph& g) {
    const int n = g.vertex_count();
    // union-find; component ids assigned by smallest vertex afterwards
    std::vector<int> parent(static_cast<std::size_t>(n) + 1);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (const auto& e : g.edges()) {
        int a = find(e.u), b = find(e.v);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    Components c;
    c.comp.assign(static_cast<std::size_t>(n) + 1, -1);
    std::vector<int> id_of_root(static_cast<std::size_t>(n) + 1, -1);
    for (Vertex v = 1; v <= n; ++v) {
        int r = find(v);
        if (id_of_root[r] < 0) {
            id_of_root[r] = c.count++;
            c.root.push_back(v);
        }
        c.comp[v] = id_of_root[r];
    }
    return c;
}

bool is_proper_coloring(std::span<const Edge> edges, std::span<const Color> coloring) {
    for (const auto& e : edges)
        if (coloring[e.u - 1] == coloring[e.v - 1]) return false;
    return true;
}

std::int64_t delta(std::span<const Color> f, std::span<const Color> g) {
    std::int64_t d = 0;
    for (std::size_t i = 0; i < f.size(); ++i) d += f[i] != g[i];
    return d;
}

BipartiteResult check_bipartite(const StaticGraph& g) {
    const int n = g.vertex_count();
    const auto adj = g.adjacency();
    BipartiteResult r;
    r.coloring.assign(static_cast<std::size_t>(n), kUncolored);
    std::vector<Vertex> parent(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> depth(static_cast<std::size_t>(n) + 1, 0);

    for (Vertex s = 1; s <= n; ++s) {
        if (r.coloring[s - 1] != kUncolored) continue;
        r.coloring[s - 1] = 1;
        std::queue<Vertex> q;
        q.push(s);
        while (!q.empty()) {
            Vertex x = q.front();
            q.pop();
            for (Vertex y : adj[x]) {
                if (r.coloring[y - 1] == kUncolored) {
                    r.coloring[y - 1] = flip(r.coloring[x - 1]);
                    parent[y] = x;
                    depth[y] = depth[x] + 1;
                    q.push(y);
                } else if (r.coloring[y - 1] == r.coloring[x - 1]) {
                    // BFS tree paths x -> lca <- y plus edge {x,y} close an odd walk
                    std::vector<Vertex> up_x{x}, up_y{y};
                    Vertex a = x, b = y;
                    while (depth[a] > depth[b]) up_x.push_back(a = parent[a]);
                    while (depth[b] > depth[a]) up_y.push_back(b = parent[b]);
                    while (a != b) {
                        up_x.push_back(a = parent[a]);
                        up_y.push_back(b = parent[b]);
                    }
                    up_y.pop_back();  // lca already in up_x
                    r.odd_cycle = std::move(up_x);
                    r.odd_cycle.insert(r.odd_cycle.end(), up_y.rbegin(), up_y.rend());
                    r.bipartite = false;
                    r.coloring.clear();
                    return r;
                }
            }
        }
    }
    return r;
}

LayerBipartiteReport layer_bipartite_check(const TemporalGraph& g) {
    LayerBipartiteReport rep;
    for (int t = 1; t <= g.lifetime(); ++t) {
        rep.layers.push_back(check_bipartite(g.layer_graph(t)));
        if (!rep.layers.back().bipartite && rep.first_failure == 0) rep.first_failure = t;
    }
    return rep;
}

ProperColorings::ProperColorings(const StaticGraph& g) : graph_(g), components_(connected_components(g)) {
    auto b = check_bipartite(g);
    if (!b.bipartite) throw PreconditionError("cannot enumerate colorings of a non-bipartite graph");
    if (components_.count > 63)
        throw CapExceeded("graph has " + std::to_string(components_.count) + " components; enumeration limited to 63");
    base_ = std::move(b.coloring);
}

void ProperColorings::materialize(std::uint64_t mask, Coloring& out) const {
    out.resize(base_.size());
    for (std::size_t i = 0; i < base_.size(); ++i) {
        const int c = components_.comp[i + 1];
        out[i] = ((mask >> c) & 1U) ? flip(base_[i]) : base_[i];
    }
}

Coloring ProperColorings::coloring(std::uint64_t mask) const {
    Coloring c;
    materialize(mask, c);
    return c;
}

std::optional<std::uint64_t> ProperColorings::mask_of(std::span<const Color> c) const {
    if (!is_proper_coloring(graph_.edges(), c)) return std::nullopt;
    std::uint64_t mask = 0;
    for (int i = 0; i < components_.count; ++i) {
        const Vertex r = components_.root[i];
        if (c[r - 1] != base_[r - 1]) mask |= std::uint64_t{1} << i;
    }
    return mask;
}

void ProperColorings::for_each(const std::function<void(const Coloring&)>& fn) const {
    Coloring c;
    for (std::uint64_t m = 0; m < count(); ++m) {
        materialize(m, c);
        fn(c);
    }
}

VerifyResult verify_solution(const TemporalGraph& g, const ColoringSequence& s, const Budget& b) {
    VerifyResult r;
    auto fail = [&](std::string msg, int layer, int transition) {
        r.ok = false;
        r.message = std::move(msg);
        r.layer = layer;
        r.transition = transition;
        return r;
    };
    if (static_cast<int>(s.size()) != g.lifetime())
        return fail("solution has " + std::to_string(s.size()) + " layers, instance has " +
                        std::to_string(g.lifetime()),
                    0, 0);
    for (int t = 1; t <= g.lifetime(); ++t) {
        const auto& f = s[t - 1];
        if (static_cast<int>(f.size()) != g.vertex_count())
            return fail("layer " + std::to_string(t) + " colors " + std::to_string(f.size()) +
                            " vertices, instance has " + std::to_string(g.vertex_count()),
                        t, 0);
        for (Color c : f)
            if (c != 1 && c != 2) return fail("layer " + std::to_string(t) + " uses a color outside {1,2}", t, 0);
        for (const auto& e : g.layer(t))
            if (f[e.u - 1] == f[e.v - 1]) {
                std::ostringstream os;
                os << "layer " << t << ": edge {" << e.u << "," << e.v << "} is monochromatic";
                return fail(os.str(), t, 0);
            }
    }
    std::int64_t total = 0;
    for (int t = 1; t < g.lifetime(); ++t) {
        const auto dt = delta(s[t - 1], s[t]);
        total += dt;
        if (b.kind == BudgetKind::Local && dt > b.value) {
            std::ostringstream os;
            os << "transition " << t << "->" << t + 1 << " recolors " << dt << " vertices, budget d=" << b.value;
            return fail(os.str(), 0, t);
        }
        if (b.kind == BudgetKind::Global && total > b.value) {
            std::ostringstream os;
            os << "cumulative recolorings reach " << total << " at transition " << t << "->" << t + 1
               << ", budget D=" << b.value;
            return fail(os.str(), 0, t);
        }
    }
    return r;
}

std::vector<std::int64_t> transition_deltas(const ColoringSequence& s) {
    std::vector<std::int64_t> out;
    for (std::size_t t = 1; t < s.size(); ++t) out.push_back(delta(s[t - 1], s[t]));
    return out;
}

}  // namespace ms2c
