#include <sstream>

#include "ms2c/coloring.hpp"
#include "ms2c/exact.hpp"
#include "ms2c/ms2ce.hpp"
#include "ms2c/treewidth.hpp"

namespace ms2c {

SolveOutcome solve_auto(const TemporalGraph& g, std::int64_t d, const SolverConfig& config) {
    const auto report = layer_bipartite_check(g);
    if (!report.all_bipartite()) {
        auto out = SolveOutcome::no("nonbipartite-layer");
        out.stats["nonbipartite_layer"] = report.first_failure;
        return out;
    }
    if (d == 0) return solve_d_zero(g);
    if (2 * d >= g.vertex_count()) return solve_greedy_large_d(g, d);

    const auto dag = layered_dag_node_estimate(g);
    if (dag <= config.dag_nodes) return solve_layered_dag(g, d, config);

    const int orientation = orientation_bit_count(g);
    if (orientation <= config.orientation_bits) return solve_component_orientation(g, d, config);

    const StaticGraph under = underlying_graph(g);
    const int width = std::max(0, decomposition_from_ordering(under, min_fill_ordering(under)).width());
    const auto cells = treewidth_cell_estimate(g.lifetime(), std::min<std::int64_t>(d, g.vertex_count()), width);
    if (cells <= config.treewidth_cells) return solve_treewidth_dp(g, d, config);

    const std::int64_t bits = static_cast<std::int64_t>(g.vertex_count()) * g.lifetime();
    if (bits <= config.bruteforce_bits) return solve_bruteforce_local(g, d, config);

    std::ostringstream os;
    os << "no applicable exact algorithm at configured caps: layered nodes " << dag << " (cap " << config.dag_nodes
       << "), orientation bits " << orientation << " (cap " << config.orientation_bits << "), treewidth cells " << cells
       << " at width " << width << " (cap " << config.treewidth_cells << "), brute-force bits " << bits << " (cap "
       << config.bruteforce_bits << ")";
    throw CapExceeded(os.str());
}

}  // namespace ms2c
