#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ms2c/core.hpp"

namespace ms2c {

int param_ncc(const StaticGraph& g);
int param_max_degree(const StaticGraph& g);
/// m - n + ncc.
std::int64_t param_fes(const StaticGraph& g);
/// Minimum vertex cover size, or nullopt if it exceeds bound.
std::optional<int> param_vc(const StaticGraph& g, int bound);
/// Minimum co-cluster modulator size, or nullopt if it exceeds bound.
std::optional<int> param_dcc(const StaticGraph& g, int bound);
/// Width of the min-fill decomposition; an upper bound on treewidth.
int param_tw_upper(const StaticGraph& g);

/// Accepted names: ncc, delta, fes, vc, dcc, tw.
const std::vector<std::string>& parameter_names();

struct ParamReport {
    std::string name;
    std::vector<std::int64_t> per_layer;
    std::int64_t underlying = 0;
    std::int64_t p_inf = 0;  // max over layers
    std::int64_t p_sum = 0;  // sum of max(1, layer value)
    std::int64_t p_ut = 0;   // underlying value + tau
    /// false for heuristic values, which are upper bounds only
    bool exact = true;
};

/// Throws PreconditionError on an unknown name.
ParamReport lift(const std::string& name, const TemporalGraph& g);

struct LiftCheck {
    bool ok = true;
    /// Failed inequalities and skipped checks, one line each.
    std::vector<std::string> notes;
};

/// p_inf <= p_sum for every parameter; p_sum <= p_ut^2 for vc, fes, delta and
/// tw (tw skipped when some layer bound exceeds the underlying bound);
/// p_sum >= p_ut for ncc when tau >= 2 and ncc(G_U) >= 2.
LiftCheck check_lift(const ParamReport& r, int tau);

std::string format_param_table(const std::vector<ParamReport>& reports);
/// "<name>.<field>=<value>" lines.
std::string format_param_kv(const std::vector<ParamReport>& reports);

}  // namespace ms2c
