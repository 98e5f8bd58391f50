#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ms2c/config.hpp"
#include "ms2c/core.hpp"

namespace ms2c {

/// Signed 1-based variable index, DIMACS style.
using Literal = int;

struct TwoClause {
    Literal a = 0;
    Literal b = 0;
    bool hard = false;
    /// Number of identical copies this entry stands for.
    std::int64_t multiplicity = 1;

    bool operator==(const TwoClause&) const = default;
};

struct TwoCnf {
    int variables = 0;
    std::vector<TwoClause> clauses;

    /// Copies counted with multiplicity.
    std::int64_t hard_count() const;
    std::int64_t soft_count() const;

    bool operator==(const TwoCnf&) const = default;
};

/// Exhaustive search over coloring sequences minimizing total recolorings.
/// Throws CapExceeded if n * tau exceeds config.bruteforce_bits.
SolveOutcome solve_bruteforce_global(const TemporalGraph& g, std::int64_t D, const SolverConfig& config = {});

/// Variable x^v_t has index (t-1)n + v and is true iff f_t(v) = 1. Edge clauses
/// are hard with multiplicity D+1, persistence clauses soft. k = D.
TwoCnf reduce_to_almost_2sat(const TemporalGraph& g, std::int64_t D);

/// Multistage 2-SAT with a global budget: one variable set, one clause set per
/// stage, at most D variable flips in total.
struct Ms2satInstance {
    int variables = 0;
    int stages = 1;
    std::int64_t budget = 0;
    std::vector<std::vector<std::pair<Literal, Literal>>> clauses;  // per stage

    bool operator==(const Ms2satInstance&) const = default;
};

/// Same encoding as reduce_to_almost_2sat for a general multistage formula.
TwoCnf reduce_ms2sat_to_almost_2sat(const Ms2satInstance& inst);

struct TwoSatResult {
    bool satisfiable = false;
    std::vector<bool> assignment;  // index 1..variables
};

/// Implication-graph SCC 2-SAT over the clauses not marked in deleted.
TwoSatResult solve_2sat(const TwoCnf& f, const std::vector<bool>& deleted = {});

enum class DeletionMode {
    /// Only soft clauses may be deleted (reduction images).
    SoftOnly,
    /// Every clause is deletable; a clause costs its multiplicity.
    AllSoft,
};

struct Almost2SatResult {
    bool yes = false;
    std::vector<std::size_t> deleted;  // clause indices, ascending
    std::vector<bool> assignment;
    std::int64_t nodes = 0;
};

/// Depth-bounded branching on the clauses of a shortest contradiction walk
/// x => ~x => x. Throws CapExceeded past max_nodes search nodes.
Almost2SatResult solve_almost_2sat(const TwoCnf& f, std::int64_t k, DeletionMode mode = DeletionMode::SoftOnly,
                                   std::uint64_t max_nodes = std::uint64_t{1} << 20);

/// Reduction + Almost 2-SAT + decoding; falls back to brute force when the
/// branching exceeds config.a2sat_nodes, or throws CapExceeded without fallback.
SolveOutcome solve_global(const TemporalGraph& g, std::int64_t D, const SolverConfig& config = {},
                          bool fallback = true);

/// "p wcnf <vars> <clauses> <top>" with top = k+1, "c k = <k>", hard clauses
/// written once per copy.
std::string write_wcnf(const TwoCnf& f, std::int64_t k);
/// Inverse of write_wcnf; consecutive identical hard clauses are merged.
std::pair<TwoCnf, std::int64_t> parse_wcnf(std::string_view text);

}  // namespace ms2c
