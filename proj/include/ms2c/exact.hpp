#pragma once

#include <cstdint>

#include "ms2c/config.hpp"
#include "ms2c/core.hpp"

namespace ms2c {

/// Exhaustive search over raw vertex assignments of every layer (no component
/// structure is used). Ground truth for the other local-budget solvers.
/// Throws CapExceeded if n * tau exceeds config.bruteforce_bits.
SolveOutcome solve_bruteforce_local(const TemporalGraph& g, std::int64_t d, const SolverConfig& config = {});

/// Source-to-sink reachability in the layered graph whose nodes are the proper
/// colorings of each layer and whose arcs join colorings at distance <= d.
/// The graph is explored forward one layer at a time; only reachable nodes are
/// materialized.
SolveOutcome solve_layered_dag(const TemporalGraph& g, std::int64_t d, const SolverConfig& config = {});

/// Flip-greedy for 2d >= n. Throws PreconditionError if 2d < n.
SolveOutcome solve_greedy_large_d(const TemporalGraph& g, std::int64_t d);

/// d = 0: yes iff the underlying graph is bipartite.
SolveOutcome solve_d_zero(const TemporalGraph& g);

/// Algorithm portfolio; see README for the dispatch order. Throws CapExceeded
/// listing per-algorithm estimates when nothing applies.
SolveOutcome solve_auto(const TemporalGraph& g, std::int64_t d, const SolverConfig& config = {});

/// Sum over layers of 2^ncc(G_t), saturating.
std::uint64_t layered_dag_node_estimate(const TemporalGraph& g);

}  // namespace ms2c
