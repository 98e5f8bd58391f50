#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ms2c/config.hpp"
#include "ms2c/core.hpp"

namespace ms2c {

struct TreeDecomposition {
    std::vector<std::vector<Vertex>> bags;      // sorted vertex lists
    std::vector<std::pair<int, int>> tree_edges;  // 0-based bag indices
    int width() const;
};

enum class NiceKind { Leaf, Introduce, Forget, Join };

struct NiceNode {
    NiceKind kind = NiceKind::Leaf;
    std::vector<Vertex> bag;  // sorted
    Vertex vertex = 0;        // introduced / forgotten / leaf vertex
    std::vector<int> children;
};

/// Rooted at root; the root bag is empty. Children precede parents in nodes.
struct NiceTreeDecomposition {
    std::vector<NiceNode> nodes;
    int root = -1;
    int width() const;
    TreeDecomposition as_tree_decomposition() const;
};

struct TdCheck {
    bool ok = true;
    std::string message;
};

/// Vertex coverage, edge coverage and connectedness of every vertex's bags.
TdCheck validate_tree_decomposition(const StaticGraph& g, const TreeDecomposition& td);
/// The above plus the node-kind rules of a nice decomposition.
TdCheck validate_nice_tree_decomposition(const StaticGraph& g, const NiceTreeDecomposition& td);

/// Greedy min-fill elimination order (ties: fewest neighbors, then smallest id).
std::vector<Vertex> min_fill_ordering(const StaticGraph& g);
TreeDecomposition decomposition_from_ordering(const StaticGraph& g, const std::vector<Vertex>& order);
NiceTreeDecomposition make_nice(const TreeDecomposition& td, int n);
NiceTreeDecomposition build_nice_tree_decomposition(const StaticGraph& g);

/// PACE .td text format.
TreeDecomposition parse_pace_td(std::string_view text);
std::string write_pace_td(const TreeDecomposition& td, int n);

enum class ForgetRule {
    /// Minimum over all 2^tau per-layer color vectors of the forgotten vertex.
    AllLayerVectors,
    /// Only the two constant vectors; kept for comparison, unsound in general.
    TwoExtensions,
};

struct TreewidthOptions {
    /// Dense (d+1)^(tau-1) boolean tables instead of Pareto frontiers.
    bool dense = false;
    ForgetRule forget = ForgetRule::AllLayerVectors;
    /// Use this decomposition of the underlying graph instead of min-fill.
    std::optional<TreeDecomposition> decomposition;
};

/// 2^(tau*(width+1)) * (d+1)^(tau-1), saturating.
std::uint64_t treewidth_cell_estimate(int tau, std::int64_t d, int width);

SolveOutcome solve_treewidth_dp(const TemporalGraph& g, std::int64_t d, const SolverConfig& config = {},
                                const TreewidthOptions& options = {});

}  // namespace ms2c
