#include <algorithm>
#include <chrono>
#include <limits>
#include <stdexcept>
#include <unordered_map>

#include "ms2c/coloring.hpp"
#include "ms2c/treewidth.hpp"

namespace ms2c {

std::uint64_t treewidth_cell_estimate(int tau, std::int64_t d, int width) {
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max() / 2;
    const std::int64_t bits = static_cast<std::int64_t>(tau) * (width + 1);
    if (bits >= 62) return kMax;
    std::uint64_t cells = std::uint64_t{1} << bits;
    for (int t = 1; t < tau; ++t) {
        if (cells > kMax / static_cast<std::uint64_t>(d + 1)) return kMax;
        cells *= static_cast<std::uint64_t>(d + 1);
    }
    return cells;
}

namespace {

using Key = std::uint64_t;
using Cost = std::vector<int>;

// Pareto-minimal achievable cost vectors.
using Frontier = std::vector<Cost>;

bool leq(const Cost& a, const Cost& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

void insert_pareto(Frontier& f, Cost c) {
    for (const auto& x : f)
        if (leq(x, c)) return;
    std::erase_if(f, [&](const Cost& x) { return leq(c, x); });
    f.push_back(std::move(c));
}

class TreewidthDp {
public:
    TreewidthDp(const TemporalGraph& g, std::int64_t d, const NiceTreeDecomposition& td, const TreewidthOptions& opt,
                const SolverConfig& config)
        : g_(g),
          td_(td),
          opt_(opt),
          config_(config),
          tau_(g.lifetime()),
          d_(static_cast<int>(std::min<std::int64_t>(d, g.vertex_count()))),
          vmask_((Key{1} << tau_) - 1) {
        adj_.resize(static_cast<std::size_t>(tau_));
        for (int t = 1; t <= tau_; ++t) adj_[t - 1] = g.layer_graph(t).adjacency();
        cells_per_key_ = 1;
        for (int t = 1; t < tau_; ++t) cells_per_key_ *= static_cast<std::size_t>(d_ + 1);
        sparse_.resize(td.nodes.size());
        dense_.resize(td.nodes.size());
    }

    bool run() {
        for (std::size_t s = 0; s < td_.nodes.size(); ++s) {
            config_.check_deadline();
            if (opt_.dense) fill_dense(static_cast<int>(s));
            else fill_sparse(static_cast<int>(s));
        }
        return query(td_.root, 0, Cost(static_cast<std::size_t>(tau_ - 1), d_));
    }

    ColoringSequence witness() {
        assignment_.assign(static_cast<std::size_t>(g_.vertex_count()) + 1, 0);
        backtrack(td_.root, 0, Cost(static_cast<std::size_t>(tau_ - 1), d_));
        ColoringSequence w(static_cast<std::size_t>(tau_), Coloring(static_cast<std::size_t>(g_.vertex_count()), 1));
        for (Vertex v = 1; v <= g_.vertex_count(); ++v)
            for (int t = 1; t <= tau_; ++t) w[t - 1][v - 1] = ((assignment_[v] >> (t - 1)) & 1U) ? 2 : 1;
        return w;
    }

    std::int64_t entries() const {
        std::int64_t total = 0;
        for (const auto& table : sparse_)
            for (const auto& [k, f] : table) total += static_cast<std::int64_t>(f.size());
        for (const auto& table : dense_) total += static_cast<std::int64_t>(table.size() * cells_per_key_);
        return total;
    }

private:
    // bit (pos * tau + t - 1) of a key is set iff the vertex at bag position pos has color 2 in layer t
    Key block(Key key, int pos) const { return (key >> (pos * tau_)) & vmask_; }
    Key insert_block(Key key, int pos, Key x) const {
        const int shift = pos * tau_;
        const Key low = shift ? key & ((Key{1} << shift) - 1) : 0;
        const Key high = shift < 64 ? key >> shift : 0;
        return low | (x << shift) | (high << (shift + tau_));
    }
    Key remove_block(Key key, int pos) const {
        const int shift = pos * tau_;
        const Key low = shift ? key & ((Key{1} << shift) - 1) : 0;
        const Key high = key >> (shift + tau_);
        return low | (high << shift);
    }
    int flip_at(Key x, int t) const { return static_cast<int>(((x >> (t - 1)) ^ (x >> t)) & 1U); }
    Cost flips(Key x) const {
        Cost c(static_cast<std::size_t>(tau_ - 1));
        for (int t = 1; t < tau_; ++t) c[t - 1] = flip_at(x, t);
        return c;
    }
    Cost bag_cost(int s, Key key) const {
        Cost c(static_cast<std::size_t>(tau_ - 1), 0);
        for (std::size_t p = 0; p < td_.nodes[s].bag.size(); ++p) {
            const Key x = block(key, static_cast<int>(p));
            for (int t = 1; t < tau_; ++t) c[t - 1] += flip_at(x, t);
        }
        return c;
    }
    int pos_of(int s, Vertex v) const {
        const auto& bag = td_.nodes[s].bag;
        return static_cast<int>(std::lower_bound(bag.begin(), bag.end(), v) - bag.begin());
    }
    // introduced vertex v with vector x is properly colored against the rest of the bag
    bool proper_with(int s, Vertex v, Key key_with_v) const {
        const auto& bag = td_.nodes[s].bag;
        const Key x = block(key_with_v, pos_of(s, v));
        for (int t = 1; t <= tau_; ++t) {
            const auto& nb = adj_[t - 1][v];
            for (std::size_t p = 0; p < bag.size(); ++p) {
                if (bag[p] == v || !std::binary_search(nb.begin(), nb.end(), bag[p])) continue;
                if (((block(key_with_v, static_cast<int>(p)) ^ x) >> (t - 1) & 1U) == 0) return false;
            }
        }
        return true;
    }
    std::vector<Key> forget_vectors() const {
        if (opt_.forget == ForgetRule::TwoExtensions) return {0, vmask_};
        std::vector<Key> all;
        for (Key x = 0; x <= vmask_; ++x) all.push_back(x);
        return all;
    }

    // ----- sparse -----
    void fill_sparse(int s) {
        const auto& nd = td_.nodes[s];
        auto& out = sparse_[s];
        switch (nd.kind) {
            case NiceKind::Leaf:
                if (nd.bag.empty()) {
                    out[0].push_back(Cost(static_cast<std::size_t>(tau_ - 1), 0));
                    break;
                }
                for (Key x = 0; x <= vmask_; ++x) {
                    Cost c = flips(x);
                    if (within(c)) insert_pareto(out[x], std::move(c));
                }
                break;
            case NiceKind::Introduce: {
                const int p = pos_of(s, nd.vertex);
                for (const auto& [key, fr] : sparse_[nd.children[0]])
                    for (Key x = 0; x <= vmask_; ++x) {
                        const Key k = insert_block(key, p, x);
                        if (!proper_with(s, nd.vertex, k)) continue;
                        const Cost fx = flips(x);
                        for (const auto& c : fr) {
                            Cost n = c;
                            for (int t = 0; t < tau_ - 1; ++t) n[t] += fx[t];
                            if (within(n)) insert_pareto(out[k], std::move(n));
                        }
                    }
                break;
            }
            case NiceKind::Forget: {
                const auto& child = td_.nodes[nd.children[0]];
                const int p = static_cast<int>(std::lower_bound(child.bag.begin(), child.bag.end(), nd.vertex) -
                                               child.bag.begin());
                for (const auto& [key, fr] : sparse_[nd.children[0]]) {
                    const Key x = block(key, p);
                    if (opt_.forget == ForgetRule::TwoExtensions && x != 0 && x != vmask_) continue;
                    auto& dst = out[remove_block(key, p)];
                    for (const auto& c : fr) insert_pareto(dst, c);
                }
                break;
            }
            case NiceKind::Join: {
                const auto& right = sparse_[nd.children[1]];
                for (const auto& [key, left_fr] : sparse_[nd.children[0]]) {
                    auto it = right.find(key);
                    if (it == right.end()) continue;
                    const Cost bag = bag_cost(s, key);
                    for (const auto& a : left_fr)
                        for (const auto& b : it->second) {
                            Cost n(a.size());
                            for (std::size_t t = 0; t < a.size(); ++t) n[t] = a[t] + b[t] - bag[t];
                            if (within(n)) insert_pareto(out[key], std::move(n));
                        }
                }
                break;
            }
        }
        std::erase_if(out, [](const auto& kv) { return kv.second.empty(); });
    }
    bool within(const Cost& c) const {
        return std::all_of(c.begin(), c.end(), [&](int x) { return x <= d_; });
    }

    // ----- dense -----
    std::size_t index_of(const Cost& c) const {
        std::size_t i = 0;
        for (int t = tau_ - 2; t >= 0; --t) i = i * static_cast<std::size_t>(d_ + 1) + static_cast<std::size_t>(c[t]);
        return i;
    }
    Cost cost_of(std::size_t i) const {
        Cost c(static_cast<std::size_t>(tau_ - 1));
        for (int t = 0; t < tau_ - 1; ++t) {
            c[t] = static_cast<int>(i % static_cast<std::size_t>(d_ + 1));
            i /= static_cast<std::size_t>(d_ + 1);
        }
        return c;
    }
    void fill_dense(int s) {
        const auto& nd = td_.nodes[s];
        auto& out = dense_[s];
        auto row = [&](Key k) -> std::vector<std::uint8_t>& {
            auto& r = out[k];
            if (r.empty()) r.assign(cells_per_key_, 0);
            return r;
        };
        switch (nd.kind) {
            case NiceKind::Leaf:
                if (nd.bag.empty()) {
                    row(0).assign(cells_per_key_, 1);
                    break;
                }
                for (Key x = 0; x <= vmask_; ++x) {
                    const Cost fx = flips(x);
                    auto& r = row(x);
                    for (std::size_t i = 0; i < cells_per_key_; ++i) r[i] = leq(fx, cost_of(i));
                }
                break;
            case NiceKind::Introduce: {
                const int p = pos_of(s, nd.vertex);
                for (const auto& [key, child] : dense_[nd.children[0]])
                    for (Key x = 0; x <= vmask_; ++x) {
                        const Key k = insert_block(key, p, x);
                        if (!proper_with(s, nd.vertex, k)) continue;
                        const Cost fx = flips(x);
                        auto& r = row(k);
                        for (std::size_t i = 0; i < cells_per_key_; ++i) {
                            Cost c = cost_of(i);
                            bool ok = true;
                            for (int t = 0; t < tau_ - 1 && ok; ++t) ok = (c[t] -= fx[t]) >= 0;
                            r[i] = ok && child[index_of(c)];
                        }
                    }
                break;
            }
            case NiceKind::Forget: {
                const auto& cn = td_.nodes[nd.children[0]];
                const int p = static_cast<int>(std::lower_bound(cn.bag.begin(), cn.bag.end(), nd.vertex) -
                                               cn.bag.begin());
                for (const auto& [key, child] : dense_[nd.children[0]]) {
                    const Key x = block(key, p);
                    if (opt_.forget == ForgetRule::TwoExtensions && x != 0 && x != vmask_) continue;
                    auto& r = row(remove_block(key, p));
                    for (std::size_t i = 0; i < cells_per_key_; ++i) r[i] = r[i] || child[i];
                }
                break;
            }
            case NiceKind::Join: {
                const auto& right = dense_[nd.children[1]];
                for (const auto& [key, left] : dense_[nd.children[0]]) {
                    auto it = right.find(key);
                    if (it == right.end()) continue;
                    const Cost bag = bag_cost(s, key);
                    auto& r = row(key);
                    for (std::size_t i = 0; i < cells_per_key_; ++i)
                        r[i] = join_split(left, it->second, bag, cost_of(i)).has_value();
                }
                break;
            }
        }
        for (const auto& [key, r] : out) check_monotone(r);
    }
    // delta' and delta'' with delta' + delta'' - bag <= delta; delta'' taken as large as allowed
    std::optional<std::pair<Cost, Cost>> join_split(const std::vector<std::uint8_t>& left,
                                                    const std::vector<std::uint8_t>& right, const Cost& bag,
                                                    const Cost& delta) const {
        for (std::size_t j = 0; j < cells_per_key_; ++j) {
            if (!left[j]) continue;
            const Cost a = cost_of(j);
            Cost b(a.size());
            bool ok = true;
            for (std::size_t t = 0; t < a.size() && ok; ++t) {
                b[t] = std::min(d_, delta[t] + bag[t] - a[t]);
                ok = b[t] >= 0;
            }
            if (ok && right[index_of(b)]) return std::make_pair(a, b);
        }
        return std::nullopt;
    }
    void check_monotone(const std::vector<std::uint8_t>& r) const {
        for (std::size_t i = 0; i < cells_per_key_; ++i) {
            if (!r[i]) continue;
            Cost c = cost_of(i);
            for (int t = 0; t < tau_ - 1; ++t) {
                if (c[t] == d_) continue;
                ++c[t];
                if (!r[index_of(c)]) throw std::logic_error("treewidth table not monotone in the budget vector");
                --c[t];
            }
        }
    }

    // ----- queries and backtracking -----
    bool query(int s, Key key, const Cost& delta) const {
        if (opt_.dense) {
            auto it = dense_[s].find(key);
            return it != dense_[s].end() && it->second[index_of(delta)];
        }
        auto it = sparse_[s].find(key);
        if (it == sparse_[s].end()) return false;
        return std::any_of(it->second.begin(), it->second.end(), [&](const Cost& c) { return leq(c, delta); });
    }

    void backtrack(int s, Key key, const Cost& delta) {
        const auto& nd = td_.nodes[s];
        switch (nd.kind) {
            case NiceKind::Leaf:
                if (!nd.bag.empty()) assignment_[nd.vertex] = key;
                return;
            case NiceKind::Introduce: {
                const Key x = block(key, pos_of(s, nd.vertex));
                Cost c = delta;
                const Cost fx = flips(x);
                for (int t = 0; t < tau_ - 1; ++t) c[t] -= fx[t];
                backtrack(nd.children[0], remove_block(key, pos_of(s, nd.vertex)), c);
                return;
            }
            case NiceKind::Forget: {
                const auto& cn = td_.nodes[nd.children[0]];
                const int p = static_cast<int>(std::lower_bound(cn.bag.begin(), cn.bag.end(), nd.vertex) -
                                               cn.bag.begin());
                for (Key x : forget_vectors()) {
                    const Key k = insert_block(key, p, x);
                    if (!query(nd.children[0], k, delta)) continue;
                    assignment_[nd.vertex] = x;
                    backtrack(nd.children[0], k, delta);
                    return;
                }
                throw std::logic_error("treewidth backtracking lost its forget extension");
            }
            case NiceKind::Join: {
                const Cost bag = bag_cost(s, key);
                if (opt_.dense) {
                    auto split = join_split(dense_[nd.children[0]].at(key), dense_[nd.children[1]].at(key), bag, delta);
                    if (!split) throw std::logic_error("treewidth backtracking lost its join split");
                    backtrack(nd.children[0], key, split->first);
                    backtrack(nd.children[1], key, split->second);
                    return;
                }
                for (const auto& a : sparse_[nd.children[0]].at(key))
                    for (const auto& b : sparse_[nd.children[1]].at(key)) {
                        bool ok = true;
                        for (int t = 0; t < tau_ - 1 && ok; ++t) ok = a[t] + b[t] - bag[t] <= delta[t];
                        if (!ok) continue;
                        backtrack(nd.children[0], key, a);
                        backtrack(nd.children[1], key, b);
                        return;
                    }
                throw std::logic_error("treewidth backtracking lost its join split");
            }
        }
    }

    const TemporalGraph& g_;
    const NiceTreeDecomposition& td_;
    const TreewidthOptions& opt_;
    const SolverConfig& config_;
    int tau_;
    int d_;
    Key vmask_;
    std::size_t cells_per_key_ = 1;
    std::vector<std::vector<std::vector<Vertex>>> adj_;
    std::vector<std::unordered_map<Key, Frontier>> sparse_;
    std::vector<std::unordered_map<Key, std::vector<std::uint8_t>>> dense_;
    std::vector<Key> assignment_;
};

}  // namespace

SolveOutcome solve_treewidth_dp(const TemporalGraph& g, std::int64_t d, const SolverConfig& config,
                                const TreewidthOptions& options) {
    const auto start = std::chrono::steady_clock::now();
    const auto report = layer_bipartite_check(g);
    if (!report.all_bipartite()) {
        auto out = SolveOutcome::no("treewidth");
        out.stats["nonbipartite_layer"] = report.first_failure;
        return out;
    }
    const StaticGraph under = underlying_graph(g);
    TreeDecomposition td = options.decomposition
                               ? *options.decomposition
                               : decomposition_from_ordering(under, min_fill_ordering(under));
    if (auto chk = validate_tree_decomposition(under, td); !chk.ok)
        throw PreconditionError("invalid tree decomposition: " + chk.message);
    const NiceTreeDecomposition nice = make_nice(td, g.vertex_count());
    if (auto chk = validate_nice_tree_decomposition(under, nice); !chk.ok)
        throw std::logic_error("nice decomposition failed validation: " + chk.message);

    const int width = std::max(0, nice.width());
    const std::int64_t d_eff = std::min<std::int64_t>(d, g.vertex_count());
    const auto cells = treewidth_cell_estimate(g.lifetime(), d_eff, width);
    if (cells > config.treewidth_cells)
        throw CapExceeded("treewidth DP needs about " + std::to_string(cells) + " cells (width " +
                          std::to_string(width) + "), cap is " + std::to_string(config.treewidth_cells));

    TreewidthDp dp(g, d, nice, options, config);
    const bool yes = dp.run();
    SolveOutcome out = SolveOutcome::no("treewidth");
    if (yes) out = SolveOutcome::with_witness("treewidth", dp.witness());
    out.stats["width"] = width;
    out.stats["nice_nodes"] = static_cast<std::int64_t>(nice.nodes.size());
    out.stats["entries"] = dp.entries();
    out.stats["micros"] = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() -
                                                                                start)
                              .count();
    return out;
}

}  // namespace ms2c
