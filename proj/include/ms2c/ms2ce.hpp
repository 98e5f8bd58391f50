#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ms2c/config.hpp"
#include "ms2c/core.hpp"

namespace ms2c {

/// Removes every edge whose endpoints are both pinned in that edge's layer.
/// Throws PreconditionError if such an edge is monochromatic.
TemporalGraph apply_reduction_rule_colored_edge(const TemporalGraph& g, const PartialColoringSequence& p);

/// Vertex v is pinned at t1 and t2 > t1 with different colors and nowhere in between.
struct ForcedRecoloring {
    Vertex vertex = 0;
    int t1 = 0;
    int t2 = 0;
    Color target = 0;

    auto operator<=>(const ForcedRecoloring&) const = default;
};

/// Sorted by (vertex, t1).
std::vector<ForcedRecoloring> extract_forced_recolorings(const PartialColoringSequence& p);

/// Unit job; slots are 1-based. Transition t owns slots d(t-1)+1 .. dt.
struct Job {
    std::int64_t release = 1;
    std::int64_t due = 0;
    Vertex vertex = 0;
    int t1 = 0;
};

struct JobSet {
    std::vector<Job> jobs;
    std::int64_t slots_per_transition = 0;
    int transition_count = 0;
};

/// release d(t1-1)+1; due d(t2-1), or d*t2 when paper_due_dates is set.
JobSet build_jobset(const std::vector<ForcedRecoloring>& forced, std::int64_t d, int tau, bool paper_due_dates = false);

struct ScheduleResult {
    bool feasible = false;
    /// slot[i] for jobs[i] when feasible.
    std::vector<std::int64_t> slot;
};

/// Horn's earliest-due-date rule: at each slot run the released job with the
/// smallest due date, ties by (vertex, t1). Feasible iff no job finishes late.
ScheduleResult edd_feasible(const JobSet& jobs);

/// Coloring extension for an edgeless temporal graph with pins p.
/// Throws PreconditionError if some layer has an edge.
SolveOutcome solve_ms2ce_edgeless(const TemporalGraph& g, const PartialColoringSequence& p, std::int64_t d,
                                  const SolverConfig& config = {});

/// Number of components with at least one edge, summed over layers.
int orientation_bit_count(const TemporalGraph& g);

/// Enumerates the orientation of every edged component of every layer, pins the
/// non-isolated vertices accordingly and decides the rest by scheduling.
SolveOutcome solve_component_orientation(const TemporalGraph& g, std::int64_t d, const SolverConfig& config = {});

}  // namespace ms2c
