#pragma once

#include <array>
#include <optional>
#include <vector>

#include "ms2c/config.hpp"
#include "ms2c/core.hpp"

namespace ms2c {

struct CoclusterCheck {
    bool cocluster = true;
    /// Lexicographically least sorted triple inducing exactly one edge.
    std::array<Vertex, 3> witness{};
};

/// Co-cluster = complete multipartite = no induced K2+K1.
CoclusterCheck is_cocluster(const StaticGraph& g);

/// Minimum vertex set whose removal leaves a co-cluster, or nullopt if every
/// such set is larger than k_max. Among minimum sets the lexicographically
/// least one reached by the branching is returned (sorted ascending).
std::optional<std::vector<Vertex>> dcc_modulator(const StaticGraph& g, int k_max);

enum class CoclusterTag { Plus, Minus };

struct CoclusterModulator {
    std::vector<std::vector<Vertex>> sets;  // X_t, t = 1..tau
    std::vector<CoclusterTag> tags;          // Plus iff G_t - X_t has an edge
};

/// Minimum modulator per layer. Throws CapExceeded if some layer needs more than k_max.
CoclusterModulator cocluster_modulators(const TemporalGraph& g, int k_max);

/// Branches over colorings of the per-layer co-cluster modulators, propagates,
/// reduces to edgeless coloring extension and schedules.
SolveOutcome solve_dcc_sum(const TemporalGraph& g, std::int64_t d, const SolverConfig& config = {});

}  // namespace ms2c
