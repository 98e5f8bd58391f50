#include "ms2c/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include <nlohmann/json.hpp>

namespace ms2c {

namespace {

std::int64_t choose2(std::int64_t k) { return k * (k - 1) / 2; }

// Layers under construction; vertices are appended with a label.
struct Builder {
    std::vector<std::set<Edge>> layers;
    std::vector<std::string> labels;

    explicit Builder(int tau) : layers(static_cast<std::size_t>(tau)) {}

    Vertex add(std::string label) {
        labels.push_back(std::move(label));
        return static_cast<Vertex>(labels.size());
    }
    void edge(Vertex a, Vertex b, int layer) { layers[layer - 1].insert(Edge(a, b)); }
    void edge_all(Vertex a, Vertex b) {
        for (int t = 1; t <= static_cast<int>(layers.size()); ++t) edge(a, b, t);
    }

    TemporalGraph graph() const {
        std::vector<std::vector<Edge>> out;
        for (const auto& l : layers) out.emplace_back(l.begin(), l.end());
        return TemporalGraph(static_cast<int>(labels.size()), std::move(out));
    }
};

GeneratedInstance triangle_no_instance() {
    return {TemporalGraph(3, {{{1, 2}, {1, 3}, {2, 3}}}), Budget::local(0), {"a", "b", "c"}};
}

}  // namespace

GeneratedInstance gen_x13sat(const Formula3& f) {
    if (f.variables < 0) throw PreconditionError("negative variable count");
    if (f.clauses.empty()) throw PreconditionError("formula needs at least one clause");
    for (std::size_t j = 0; j < f.clauses.size(); ++j)
        for (int lit : f.clauses[j])
            if (lit == 0 || std::abs(lit) > f.variables)
                throw PreconditionError("clause " + std::to_string(j + 1) + ": literal " + std::to_string(lit) +
                                        " outside x_1..x_" + std::to_string(f.variables));
    const int m = static_cast<int>(f.clauses.size());
    Builder b(6 * m);
    const Vertex u1 = b.add("u1"), u2 = b.add("u2");
    const std::array<Vertex, 3> v{b.add("v1"), b.add("v2"), b.add("v3")};
    std::vector<Vertex> w(static_cast<std::size_t>(f.variables) + 1), wbar(w.size());
    for (int i = 1; i <= f.variables; ++i) {
        w[i] = b.add("w_" + std::to_string(i));
        wbar[i] = b.add("wbar_" + std::to_string(i));
    }
    for (int j = 1; j <= m; ++j) {
        std::array<Vertex, 3> lit{};
        for (int r = 0; r < 3; ++r) {
            const int l = f.clauses[j - 1][r];
            lit[r] = l > 0 ? w[l] : wbar[-l];
        }
        // E_{6j-3}, shared by the last four layers of the block
        for (int t = 6 * j - 5; t <= 6 * j; ++t) {
            b.edge(u1, u2, t);
            for (int i = 1; i <= f.variables; ++i) b.edge(w[i], wbar[i], t);
        }
        for (int r = 0; r < 3; ++r) {
            b.edge(u1, v[r], 6 * j - 5);
            b.edge(v[r], lit[r], 6 * j - 4);
            b.edge(u2, v[r], 6 * j - 2);
        }
    }
    return {b.graph(), Budget::local(1), std::move(b.labels)};
}

GeneratedInstance gen_edge_bipartization(const StaticGraph& g, std::int64_t k) {
    if (k < 0) throw PreconditionError("k must be nonnegative");
    const int n = g.vertex_count();
    Builder b(2);
    for (int i = 1; i <= n; ++i) b.add("v_" + std::to_string(i));
    for (const auto& e : g.edges()) {
        const std::string tag = "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}";
        const Vertex near_u = b.add("u^" + tag + "_" + std::to_string(e.u));
        const Vertex near_v = b.add("u^" + tag + "_" + std::to_string(e.v));
        b.edge(e.u, near_u, 1);
        b.edge(e.v, near_v, 1);
        b.edge(near_u, near_v, 2);
    }
    return {b.graph(), Budget::local(k), std::move(b.labels)};
}

CliquePadding clique_padding(const StaticGraph& g, int k) {
    if (k < 3) throw PreconditionError("clique reduction needs k >= 3");
    CliquePadding p;
    p.vertices = g.vertex_count();
    p.edges = static_cast<std::int64_t>(g.edge_count());
    const std::int64_t base = choose2(k);
    if (p.edges < base) {
        p.trivial_no = true;
        return p;
    }
    const std::int64_t rest = (p.edges - base) % k;
    // surplus 0 would leave the vertex paths empty, so pad a full round then
    if (rest != 0) p.star_leaves = static_cast<int>(k - rest);
    else if (p.edges == base) p.star_leaves = k;
    if (p.star_leaves > 0) {
        p.vertices += p.star_leaves + 1;
        p.edges += p.star_leaves;
    }
    p.ell = (p.edges - base) / k;
    return p;
}

GeneratedInstance gen_clique(const StaticGraph& g, int k) {
    const auto pad = clique_padding(g, k);
    if (pad.trivial_no) return triangle_no_instance();
    std::vector<Edge> edges = g.edges();
    const int center = g.vertex_count() + 1;
    for (int i = 1; i <= pad.star_leaves; ++i) edges.emplace_back(center, center + i);
    std::sort(edges.begin(), edges.end());
    const int n = pad.vertices;
    const std::int64_t ell = pad.ell, d = pad.edges - choose2(k);

    Builder b(3);
    for (int v = 1; v <= n; ++v)
        for (std::int64_t i = 1; i <= ell; ++i) b.add("u^" + std::to_string(v) + "_" + std::to_string(i));
    for (const auto& e : edges)
        for (int i = 1; i <= 3; ++i)
            b.add("w^{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}_" + std::to_string(i));
    for (std::int64_t i = 1; i <= d + 1; ++i) b.add("r_" + std::to_string(i));

    auto u = [&](int v, std::int64_t i) { return static_cast<Vertex>((v - 1) * ell + i); };
    auto w = [&](std::size_t e, int i) { return static_cast<Vertex>(ell * n + 3 * static_cast<std::int64_t>(e) + i); };
    auto r = [&](std::int64_t i) { return static_cast<Vertex>(ell * n + 3 * static_cast<std::int64_t>(edges.size()) + i); };

    for (int v = 1; v <= n; ++v)
        for (std::int64_t i = 1; i < ell; ++i) b.edge_all(u(v, i), u(v, i + 1));
    for (std::int64_t i = 1; i <= d; ++i) b.edge_all(r(i), r(i + 1));
    for (std::size_t e = 0; e < edges.size(); ++e) {
        b.edge(r(1), w(e, 2), 1);
        b.edge(r(1), w(e, 2), 2);
        b.edge(u(edges[e].u, 1), w(e, 1), 2);
        b.edge(u(edges[e].v, 1), w(e, 3), 2);
        b.edge(w(e, 1), w(e, 2), 3);
        b.edge(w(e, 2), w(e, 3), 3);
    }
    for (int v = 1; v <= n; ++v) b.edge(r(2), u(v, 1), 1);
    return {b.graph(), Budget::local(d), std::move(b.labels)};
}

std::int64_t few_edges_layer_size(const TemporalGraph& inner) {
    std::int64_t m = 4;
    for (const auto& l : inner.layers()) m = std::max<std::int64_t>(m, static_cast<std::int64_t>(l.size()));
    while (m % 3 != 1) ++m;
    return m;
}

GeneratedInstance gen_few_edges(const TemporalGraph& inner) {
    const int n = inner.vertex_count();
    const std::int64_t m = few_edges_layer_size(inner);
    // the star must be able to fill the sparsest layer
    const std::int64_t q = std::max<std::int64_t>(choose2(n), m);
    const int tau = inner.lifetime();
    Builder b(static_cast<int>(tau * m));
    for (int v = 1; v <= n; ++v) b.add("v" + std::to_string(v));
    const Vertex center = b.add("star_center");
    for (std::int64_t i = 1; i <= q; ++i) b.add("star_leaf_" + std::to_string(i));
    std::array<Vertex, 3> x{}, y{};
    for (int i = 0; i < 3; ++i) x[i] = b.add("u" + std::to_string(i + 1));
    for (int i = 0; i < 3; ++i) y[i] = b.add("u" + std::to_string(i + 1) + "'");
    // E^+_1, E^+_2, E^+_3 as index pairs into the triangles
    const std::array<std::pair<int, int>, 3> plus{{{0, 1}, {0, 2}, {1, 2}}};
    for (int p = 1; p <= tau; ++p) {
        std::vector<Edge> layer = inner.layer(p);
        for (std::int64_t i = 1; static_cast<std::int64_t>(layer.size()) < m; ++i)
            layer.emplace_back(center, center + static_cast<Vertex>(i));
        for (std::int64_t k = 1; k <= m; ++k) {
            const int t = static_cast<int>((p - 1) * m + k);
            const auto& e = layer[k - 1];
            b.edge(e.u, e.v, t);
            const auto [a, c] = plus[(k - 1) % 3];
            b.edge(x[a], x[c], t);
            b.edge(y[a], y[c], t);
        }
    }
    return {b.graph(), Budget::local(1), std::move(b.labels)};
}

int mc_clique_step(int k, int c, int rank, bool second_half) {
    return 2 * (c - 1) * (k - 1) + rank + (second_half ? k - 1 : 0);
}

namespace {

struct McEdge {
    int c, j, c2, j2;  // classes c < c2, indices within the classes
};

struct McNormalized {
    int k = 0;
    int n = 0;  // padded class size
    std::vector<int> class_of, index_of;
    std::vector<McEdge> edges;
};

McNormalized normalize(const McCliqueSource& src) {
    McNormalized out;
    out.k = static_cast<int>(src.classes.size());
    if (out.k < 2) throw PreconditionError("multicolored clique reduction needs k >= 2");
    const int nv = src.graph.vertex_count();
    out.class_of.assign(static_cast<std::size_t>(nv) + 1, 0);
    out.index_of.assign(static_cast<std::size_t>(nv) + 1, 0);
    for (int c = 1; c <= out.k; ++c) {
        auto cls = src.classes[c - 1];
        std::sort(cls.begin(), cls.end());
        out.n = std::max(out.n, static_cast<int>(cls.size()));
        for (std::size_t i = 0; i < cls.size(); ++i) {
            const Vertex v = cls[i];
            if (v < 1 || v > nv || out.class_of[v] != 0)
                throw PreconditionError("color classes must partition the vertex set");
            out.class_of[v] = c;
            out.index_of[v] = static_cast<int>(i);
        }
    }
    for (int v = 1; v <= nv; ++v)
        if (out.class_of[v] == 0) throw PreconditionError("vertex " + std::to_string(v) + " has no color class");
    for (const auto& e : src.graph.edges()) {
        int a = e.u, b = e.v;
        if (out.class_of[a] == out.class_of[b]) continue;
        if (out.class_of[a] > out.class_of[b]) std::swap(a, b);
        out.edges.push_back({out.class_of[a], out.index_of[a], out.class_of[b], out.index_of[b]});
    }
    return out;
}

struct McBuild {
    GeneratedInstance instance;
    ColoringSequence witness;
};

// Builds the instance; when selection is given (index per class) also the
// coloring sequence the clique induces.
McBuild build_mc(const McCliqueSource& src, const std::vector<int>* selection) {
    const auto s = normalize(src);
    const int k = s.k, n = s.n;
    const std::int64_t m = static_cast<std::int64_t>(s.edges.size());
    if (m < choose2(k)) return {triangle_no_instance(), {}};
    if (m < n) throw PreconditionError("construction needs at least n = " + std::to_string(n) + " edges, got " +
                                       std::to_string(m));
    const std::int64_t d = m;
    const int tau = 2 * k * (k - 1) + 3;
    Builder b(tau);

    std::vector<Color> init{0};
    std::vector<std::vector<int>> flips{{}};
    std::vector<std::vector<int>> free_steps{{}};  // steps where the vertex is not blocked
    auto add = [&](std::string label, Color c, std::vector<int> fl, std::vector<int> fr) {
        init.push_back(c);
        flips.push_back(std::move(fl));
        free_steps.push_back(std::move(fr));
        return b.add(std::move(label));
    };
    auto step = [&](int c, int partner, bool second) {
        return mc_clique_step(k, c, partner < c ? partner : partner - 1, second);
    };
    auto sel = [&](int c) { return selection ? (*selection)[c - 1] : -1; };
    std::vector<int> all_steps(static_cast<std::size_t>(tau - 1));
    std::iota(all_steps.begin(), all_steps.end(), 1);

    const Vertex x1 = add("x1", 1, {}, {}), x2 = add("x2", 2, {}, {}), x3 = add("x3", 1, {1}, all_steps);
    b.edge_all(x1, x2);
    b.edge(x2, x3, 1);
    for (int t = 2; t <= tau; ++t) b.edge(x1, x3, t);

    for (int c = 1; c <= k; ++c) {
        const int last = mc_clique_step(k, c, k - 1, true);
        const int next = c < k ? mc_clique_step(k, c + 1, 1, false) : tau;
        std::vector<Vertex> row_prev;
        for (int i = 1; i <= n - 1; ++i) {
            Vertex prev = 0;
            for (int j = 1; j <= k - 1; ++j) {
                const int early = mc_clique_step(k, c, j, false), late = mc_clique_step(k, c, j, true);
                const Vertex w = add("w^" + std::to_string(c) + "_{" + std::to_string(i) + "," + std::to_string(j) + "}",
                                     static_cast<Color>(1 + j % 2), {i <= sel(c) ? early : late}, {early, late});
                if (j == 1) {
                    b.edge(x3, w, 1);
                    for (int t = last + 1; t <= tau; ++t) b.edge(x3, w, t);
                } else {
                    // prev is w^c_{i,j-1}
                    b.edge(prev, w, 1);
                    b.edge(prev, w, tau);
                    for (int t = early + 1; t <= mc_clique_step(k, c, 1, true); ++t) b.edge(prev, w, t);
                    for (int t = late + 1; t <= next; ++t) b.edge(prev, w, t);
                }
                prev = w;
            }
        }
    }

    for (const auto& e : s.edges) {
        const bool chosen = sel(e.c) == e.j && sel(e.c2) == e.j2;
        const std::string tag = "{" + std::to_string(e.c) + ":" + std::to_string(e.j) + "," + std::to_string(e.c2) +
                                ":" + std::to_string(e.j2) + "}";
        std::vector<int> root_flips{tau - 2};
        if (!chosen) root_flips.push_back(tau - 1);
        const Vertex root = add("u^" + tag + "_0", 2, root_flips, {tau - 2, tau - 1});
        b.edge(root, x3, 1);
        b.edge(root, x3, tau - 1);
        const std::array<std::pair<int, int>, 4> paths{{{n - 1 - e.j, step(e.c, e.c2, false)},
                                                        {e.j, step(e.c, e.c2, true)},
                                                        {n - 1 - e.j2, step(e.c2, e.c, false)},
                                                        {e.j2, step(e.c2, e.c, true)}}};
        for (int pi = 0; pi < 4; ++pi) {
            const auto [len, st] = paths[pi];
            Vertex prev = root;
            for (int p = 1; p <= len; ++p) {
                const Vertex y = add("y^" + tag + "_" + std::to_string(pi + 1) + "," + std::to_string(p),
                                     static_cast<Color>(1 + (p + 1) % 2), chosen ? std::vector<int>{st}
                                                                                 : std::vector<int>{},
                                     {st});
                if (p == 1) {
                    b.edge(root, y, 1);
                    b.edge(root, y, tau);
                } else {
                    b.edge_all(prev, y);
                }
                prev = y;
            }
        }
    }

    for (int i = 2; i <= tau; ++i) {
        if (i == tau - 1) continue;
        const std::int64_t len = i == 2 ? d - n : (i == tau ? choose2(k) : d - (n - 1));
        Vertex prev = 0;
        for (std::int64_t p = 1; p <= len; ++p) {
            const Vertex y = add("P_" + std::to_string(i) + "," + std::to_string(p),
                                 static_cast<Color>(1 + p % 2), {i - 1}, {i - 1});
            if (p == 1) {
                b.edge(x3, y, 1);
                b.edge(x3, y, i);
            } else {
                b.edge_all(prev, y);
            }
            prev = y;
        }
    }

    const Vertex core = static_cast<Vertex>(b.labels.size());
    auto color_at = [&](Vertex v, int layer) {
        Color c = init[v];
        for (int f : flips[v])
            if (f < layer) c = flip(c);
        return c;
    };
    std::vector<Color> blocker_color;
    for (Vertex v = 1; v <= core; ++v)
        for (int st = 1; st < tau; ++st) {
            if (std::find(free_steps[v].begin(), free_steps[v].end(), st) != free_steps[v].end()) continue;
            for (std::int64_t i = 1; i <= d; ++i) {
                const Vertex z = b.add("block^" + std::to_string(v) + "_" + std::to_string(st) + "," + std::to_string(i));
                b.edge(v, z, st);
                b.edge(v, z, st + 1);
                blocker_color.push_back(flip(color_at(v, st)));
            }
        }

    McBuild out{{b.graph(), Budget::local(d), std::move(b.labels)}, {}};
    if (selection) {
        const int total = out.instance.graph.vertex_count();
        out.witness.assign(static_cast<std::size_t>(tau), Coloring(static_cast<std::size_t>(total)));
        for (int t = 1; t <= tau; ++t) {
            for (Vertex v = 1; v <= core; ++v) out.witness[t - 1][v - 1] = color_at(v, t);
            for (std::size_t z = 0; z < blocker_color.size(); ++z) out.witness[t - 1][core + z] = blocker_color[z];
        }
    }
    return out;
}

}  // namespace

GeneratedInstance gen_multicolored_clique(const McCliqueSource& src) { return build_mc(src, nullptr).instance; }

ColoringSequence mc_clique_certificate(const McCliqueSource& src, const std::vector<Vertex>& clique) {
    const auto s = normalize(src);
    if (static_cast<int>(clique.size()) != s.k) throw PreconditionError("need one clique vertex per class");
    std::vector<int> selection(static_cast<std::size_t>(s.k));
    for (int c = 1; c <= s.k; ++c) {
        const Vertex v = clique[c - 1];
        if (v < 1 || v > src.graph.vertex_count() || s.class_of[v] != c)
            throw PreconditionError("clique vertex " + std::to_string(c) + " is not in class " + std::to_string(c));
        selection[c - 1] = s.index_of[v];
    }
    for (int a = 0; a < s.k; ++a)
        for (int c = a + 1; c < s.k; ++c) {
            const Edge e(clique[a], clique[c]);
            const auto& E = src.graph.edges();
            if (!std::binary_search(E.begin(), E.end(), e))
                throw PreconditionError("selected vertices are not pairwise adjacent");
        }
    return build_mc(src, &selection).witness;
}

TemporalGraph and_compose(const std::vector<TemporalGraph>& parts) {
    if (parts.empty()) throw PreconditionError("and_compose needs at least one instance");
    const int n = parts.front().vertex_count();
    std::vector<std::vector<Edge>> layers;
    for (std::size_t q = 0; q < parts.size(); ++q) {
        if (parts[q].vertex_count() != n)
            throw PreconditionError("instance " + std::to_string(q + 1) + " has " +
                                    std::to_string(parts[q].vertex_count()) + " vertices, expected " +
                                    std::to_string(n));
        if (q > 0) layers.resize(layers.size() + static_cast<std::size_t>(n));
        layers.insert(layers.end(), parts[q].layers().begin(), parts[q].layers().end());
    }
    return TemporalGraph(n, std::move(layers));
}

TemporalGraph gen_random(int n, int tau, double edge_prob, double persistence, std::uint64_t seed) {
    if (n < 0 || tau < 1) throw PreconditionError("need n >= 0 and tau >= 1");
    if (!(edge_prob >= 0 && edge_prob <= 1 && persistence >= 0 && persistence <= 1))
        throw PreconditionError("probabilities must lie in [0,1]");
    std::mt19937_64 rng(seed);
    // 53 random bits; identical on every platform, unlike the std distributions
    auto uniform = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
    const double add = edge_prob * (1 - persistence);
    std::vector<std::vector<Edge>> layers(static_cast<std::size_t>(tau));
    std::vector<bool> present(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), false);
    for (int t = 1; t <= tau; ++t)
        for (int u = 1; u <= n; ++u)
            for (int v = u + 1; v <= n; ++v) {
                auto slot = present[static_cast<std::size_t>(u - 1) * n + (v - 1)];
                const double x = uniform();
                if (t == 1) slot = x < edge_prob;
                else slot = slot ? x < persistence : x < add;
                if (slot) layers[t - 1].emplace_back(u, v);
            }
    return TemporalGraph(n, std::move(layers));
}

std::string labels_json(const std::vector<std::string>& labels) {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < labels.size(); ++i) j[std::to_string(i + 1)] = labels[i];
    return j.dump(2) + "\n";
}

}  // namespace ms2c
