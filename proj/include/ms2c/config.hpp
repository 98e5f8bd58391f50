#pragma once

#include <chrono>
#include <cstdint>
#include <optional>

#include "ms2c/core.hpp"

namespace ms2c {

/// Thrown when a solve call runs past SolverConfig::deadline.
class Timeout : public Error {
public:
    using Error::Error;
};

/// Resource caps shared by all solvers. Defaults are desk-scale.
struct SolverConfig {
    /// Brute force: n * tau total state bits.
    int bruteforce_bits = 24;
    /// Layered DAG: total node count summed over layers.
    std::uint64_t dag_nodes = std::uint64_t{1} << 22;
    /// Component orientation: total edged components summed over layers.
    int orientation_bits = 24;
    /// Co-cluster modulator solver: sum over layers of max(1, |X_t|).
    int dcc_bits = 24;
    /// Treewidth DP: 2^(tau*(width+1)) * (d+1)^(tau-1).
    std::uint64_t treewidth_cells = std::uint64_t{1} << 24;
    /// Almost 2-SAT branching nodes.
    std::uint64_t a2sat_nodes = std::uint64_t{1} << 20;

    /// Worker threads for branch enumeration. 1 keeps everything sequential.
    int threads = 1;
    /// With several threads, report the least successful branch (otherwise first found).
    bool deterministic = true;

    /// Use the literal due date d*t2 when scheduling forced recolorings.
    bool paper_due_dates = false;

    std::optional<std::chrono::steady_clock::time_point> deadline;

    void check_deadline() const {
        if (deadline && std::chrono::steady_clock::now() > *deadline) throw Timeout("solver deadline exceeded");
    }

    /// Applies MS2COL_CAP_STATES if set: count caps become N, bit caps floor(log2 N).
    void apply_environment();
};

}  // namespace ms2c
