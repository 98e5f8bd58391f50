#include "ms2c/exact.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <limits>

#include "ms2c/coloring.hpp"

namespace ms2c {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t micros_since(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start).count();
}

Coloring unpack(std::uint32_t bits, int n) {
    Coloring c(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) c[i] = ((bits >> i) & 1U) ? 2 : 1;
    return c;
}

bool proper_bits(const std::vector<Edge>& edges, std::uint32_t bits) {
    for (const auto& e : edges)
        if (((bits >> (e.u - 1)) & 1U) == ((bits >> (e.v - 1)) & 1U)) return false;
    return true;
}

// Depth-first search over sequences of raw assignments with a per-layer dead set.
class BruteForceLocal {
public:
    BruteForceLocal(const TemporalGraph& g, std::int64_t d, const SolverConfig& config)
        : g_(g), d_(d), config_(config), n_(g.vertex_count()), tau_(g.lifetime()) {
        const std::uint32_t total = std::uint32_t{1} << n_;
        proper_.resize(static_cast<std::size_t>(tau_));
        dead_.resize(static_cast<std::size_t>(tau_));
        for (int t = 1; t <= tau_; ++t) {
            for (std::uint32_t a = 0; a < total; ++a)
                if (proper_bits(g.layer(t), a)) proper_[t - 1].push_back(a);
            dead_[t - 1].assign(total, false);
        }
    }

    bool run() {
        for (std::uint32_t a : proper_[0])
            if (dfs(1, a)) return true;
        return false;
    }

    ColoringSequence witness() const {
        ColoringSequence s;
        for (std::uint32_t a : path_) s.push_back(unpack(a, n_));
        return s;
    }

    std::int64_t states() const { return states_; }

private:
    bool dfs(int t, std::uint32_t a) {
        ++states_;
        if ((states_ & 0xFFFF) == 0) config_.check_deadline();
        path_.push_back(a);
        if (t == tau_) return true;
        for (std::uint32_t b : proper_[t]) {
            if (dead_[t][b]) continue;
            if (std::popcount(a ^ b) > d_) continue;
            if (dfs(t + 1, b)) return true;
            dead_[t][b] = true;
        }
        path_.pop_back();
        return false;
    }

    const TemporalGraph& g_;
    std::int64_t d_;
    const SolverConfig& config_;
    int n_, tau_;
    std::vector<std::vector<std::uint32_t>> proper_;
    std::vector<std::vector<bool>> dead_;
    std::vector<std::uint32_t> path_;
    std::int64_t states_ = 0;
};

// Packed coloring: bit set means color 2.
struct PackedColorings {
    std::size_t words = 0;
    std::vector<std::uint64_t> data;

    explicit PackedColorings(int n) : words((static_cast<std::size_t>(n) + 63) / 64) {}

    void push(const Coloring& c) {
        const std::size_t base = data.size();
        data.resize(base + words, 0);
        for (std::size_t i = 0; i < c.size(); ++i)
            if (c[i] == 2) data[base + i / 64] |= std::uint64_t{1} << (i % 64);
    }
    std::size_t size() const { return words ? data.size() / words : 0; }
    const std::uint64_t* at(std::size_t i) const { return data.data() + i * words; }
};

std::int64_t packed_delta(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
    std::int64_t d = 0;
    for (std::size_t w = 0; w < words; ++w) d += std::popcount(a[w] ^ b[w]);
    return d;
}

// Number of colorings within Hamming distance d of a fixed one, saturating.
std::uint64_t ball_size(int n, std::int64_t d) {
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max() / 4;
    std::uint64_t total = 0, term = 1;
    for (std::int64_t i = 0; i <= std::min<std::int64_t>(d, n); ++i) {
        total += term;
        if (total > kMax) return kMax;
        if (term > kMax / static_cast<std::uint64_t>(n + 1)) return kMax;
        term = term * static_cast<std::uint64_t>(n - i) / static_cast<std::uint64_t>(i + 1);
    }
    return total;
}

// Calls fn on every coloring within distance d of c (c itself included).
template <typename Fn>
void for_each_in_ball(Coloring& c, std::int64_t d, Fn&& fn) {
    const int n = static_cast<int>(c.size());
    std::vector<int> idx;
    auto rec = [&](auto&& self, int start) -> void {
        fn(c);
        if (static_cast<std::int64_t>(idx.size()) == d) return;
        for (int i = start; i < n; ++i) {
            c[i] = flip(c[i]);
            idx.push_back(i);
            self(self, i + 1);
            idx.pop_back();
            c[i] = flip(c[i]);
        }
    };
    rec(rec, 0);
}

}  // namespace

SolveOutcome solve_bruteforce_local(const TemporalGraph& g, std::int64_t d, const SolverConfig& config) {
    const auto start = Clock::now();
    const std::int64_t bits = static_cast<std::int64_t>(g.vertex_count()) * g.lifetime();
    if (bits > config.bruteforce_bits || g.vertex_count() > 30)
        throw CapExceeded("instance too large for oracle: n*tau = " + std::to_string(bits) + " state bits exceeds cap " +
                          std::to_string(config.bruteforce_bits));
    BruteForceLocal search(g, d, config);
    const bool yes = search.run();
    SolveOutcome out = yes ? SolveOutcome::with_witness("bruteforce", search.witness()) : SolveOutcome::no("bruteforce");
    out.stats["states"] = search.states();
    out.stats["micros"] = micros_since(start);
    return out;
}

std::uint64_t layered_dag_node_estimate(const TemporalGraph& g) {
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max() / 2;
    std::uint64_t total = 0;
    for (int t = 1; t <= g.lifetime(); ++t) {
        const int c = connected_components(g.layer_graph(t)).count;
        if (c >= 62) return kMax;
        total += std::uint64_t{1} << c;
        if (total > kMax) return kMax;
    }
    return total;
}

SolveOutcome solve_layered_dag(const TemporalGraph& g, std::int64_t d, const SolverConfig& config) {
    const auto start = Clock::now();
    const auto report = layer_bipartite_check(g);
    if (!report.all_bipartite()) {
        auto out = SolveOutcome::no("layered");
        out.stats["nonbipartite_layer"] = report.first_failure;
        return out;
    }
    const auto estimate = layered_dag_node_estimate(g);
    if (estimate > config.dag_nodes)
        throw CapExceeded("layered DAG needs " + std::to_string(estimate) + " nodes, cap is " +
                          std::to_string(config.dag_nodes) + "; try --algo orientation or treewidth");

    const int n = g.vertex_count();
    const int tau = g.lifetime();
    constexpr std::uint32_t kUnreached = std::numeric_limits<std::uint32_t>::max();
    constexpr std::uint32_t kSource = kUnreached - 1;

    std::vector<ProperColorings> layers;
    layers.reserve(static_cast<std::size_t>(tau));
    for (int t = 1; t <= tau; ++t) layers.emplace_back(g.layer_graph(t));

    // parent[t][mask] = mask of the predecessor at layer t-1
    std::vector<std::vector<std::uint32_t>> parent(static_cast<std::size_t>(tau));
    parent[0].assign(layers[0].count(), kSource);
    std::vector<std::uint64_t> frontier(layers[0].count());
    for (std::uint64_t m = 0; m < frontier.size(); ++m) frontier[m] = m;

    std::int64_t nodes = static_cast<std::int64_t>(layers[0].count());
    std::int64_t arc_tests = 0;
    const std::uint64_t ball = ball_size(n, d);
    Coloring c;

    for (int t = 1; t < tau; ++t) {
        config.check_deadline();
        const auto& next = layers[t];
        parent[t].assign(next.count(), kUnreached);
        std::vector<std::uint64_t> reached;

        if (ball < next.count()) {
            // enumerate the Hamming ball around each reachable coloring
            for (std::uint64_t src : frontier) {
                layers[t - 1].materialize(src, c);
                for_each_in_ball(c, d, [&](const Coloring& cand) {
                    ++arc_tests;
                    auto m = next.mask_of(cand);
                    if (m && parent[t][*m] == kUnreached) {
                        parent[t][*m] = static_cast<std::uint32_t>(src);
                        reached.push_back(*m);
                    }
                });
            }
            nodes += static_cast<std::int64_t>(reached.size());
            std::sort(reached.begin(), reached.end());
        } else {
            PackedColorings prev(n);
            for (std::uint64_t src : frontier) {
                layers[t - 1].materialize(src, c);
                prev.push(c);
            }
            for (std::uint64_t m = 0; m < next.count(); ++m) {
                next.materialize(m, c);
                PackedColorings cur(n);
                cur.push(c);
                const std::uint64_t* cm = cur.at(0);
                ++nodes;
                for (std::size_t i = 0; i < frontier.size(); ++i) {
                    ++arc_tests;
                    if (packed_delta(prev.at(i), cm, prev.words) <= d) {
                        parent[t][m] = static_cast<std::uint32_t>(frontier[i]);
                        reached.push_back(m);
                        break;
                    }
                }
            }
        }
        frontier = std::move(reached);
        if (frontier.empty()) {
            auto out = SolveOutcome::no("layered");
            out.stats["nodes"] = nodes;
            out.stats["arc_tests"] = arc_tests;
            out.stats["dead_layer"] = t + 1;
            out.stats["micros"] = micros_since(start);
            return out;
        }
    }

    ColoringSequence w(static_cast<std::size_t>(tau));
    std::uint64_t m = frontier.front();
    for (int t = tau - 1; t >= 0; --t) {
        w[t] = layers[t].coloring(m);
        m = parent[t][m];
    }
    auto out = SolveOutcome::with_witness("layered", std::move(w));
    out.stats["nodes"] = nodes;
    out.stats["arc_tests"] = arc_tests;
    out.stats["micros"] = micros_since(start);
    return out;
}

SolveOutcome solve_greedy_large_d(const TemporalGraph& g, std::int64_t d) {
    const int n = g.vertex_count();
    if (2 * d < n)
        throw PreconditionError("greedy requires 2d >= n (d=" + std::to_string(d) + ", n=" + std::to_string(n) + ")");
    const auto report = layer_bipartite_check(g);
    if (!report.all_bipartite()) {
        auto out = SolveOutcome::no("greedy");
        out.stats["nonbipartite_layer"] = report.first_failure;
        return out;
    }
    ColoringSequence w;
    std::int64_t flips = 0;
    for (int t = 1; t <= g.lifetime(); ++t) {
        Coloring f = report.layers[t - 1].coloring;
        if (!w.empty() && 2 * delta(f, w.back()) > n) {
            for (auto& c : f) c = flip(c);
            ++flips;
        }
        w.push_back(std::move(f));
    }
    auto out = SolveOutcome::with_witness("greedy", std::move(w));
    out.stats["flipped_layers"] = flips;
    return out;
}

SolveOutcome solve_d_zero(const TemporalGraph& g) {
    auto b = check_bipartite(underlying_graph(g));
    if (!b.bipartite) return SolveOutcome::no("d-zero");
    return SolveOutcome::with_witness("d-zero", ColoringSequence(static_cast<std::size_t>(g.lifetime()), b.coloring));
}

}  // namespace ms2c
