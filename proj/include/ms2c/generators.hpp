#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "ms2c/core.hpp"

namespace ms2c {

/// Output of every generator. labels[v-1] names vertex v after its gadget role.
struct GeneratedInstance {
    TemporalGraph graph;
    Budget budget;
    std::vector<std::string> labels;
};

/// 3-CNF over x_1..x_variables; literal i means x_i, -i means its negation.
struct Formula3 {
    int variables = 0;
    std::vector<std::array<int, 3>> clauses;
};

/// Exact 1-in-3 SAT to MS2C with d = 1, six layers per clause.
GeneratedInstance gen_x13sat(const Formula3& f);

/// Edge Bipartization to MS2C with tau = 2 and d = k; every edge subdivided twice.
GeneratedInstance gen_edge_bipartization(const StaticGraph& g, std::int64_t k);

/// Clique to MS2C with three layers. Needs k >= 3. A graph with fewer than
/// C(k,2) edges maps to a single triangle layer (a no-instance).
GeneratedInstance gen_clique(const StaticGraph& g, int k);

/// Side quantities of gen_clique after padding.
struct CliquePadding {
    int vertices = 0;           // n after the padding star
    std::int64_t edges = 0;     // m after the padding star
    int star_leaves = 0;        // 0 when no star was added
    std::int64_t ell = 0;       // (m - C(k,2)) / k
    bool trivial_no = false;
};
CliquePadding clique_padding(const StaticGraph& g, int k);

/// Spreads each layer of a d = 1 instance over single-edge layers plus a
/// budget-absorbing gadget on six new vertices. Output layers have three
/// edges and maximum degree one.
GeneratedInstance gen_few_edges(const TemporalGraph& inner);

/// Common per-layer edge count the few-edges construction normalizes to.
std::int64_t few_edges_layer_size(const TemporalGraph& inner);

/// Multicolored Clique to MS2C with tau = 2k(k-1)+3 and d = |E|.
/// classes partitions V; edges inside a class are dropped. Needs k >= 2 and,
/// when |E| >= C(k,2), |E| >= n for the padded class size n.
struct McCliqueSource {
    StaticGraph graph;
    std::vector<std::vector<Vertex>> classes;
};
GeneratedInstance gen_multicolored_clique(const McCliqueSource& src);

/// Step s is the transition from layer s to layer s+1. rank in 1..k-1 is the
/// position of the partner class among the classes other than c.
int mc_clique_step(int k, int c, int rank, bool second_half);

/// Coloring sequence of the generated instance that encodes the given
/// multicolored clique (one vertex per class, in class order).
ColoringSequence mc_clique_certificate(const McCliqueSource& src, const std::vector<Vertex>& clique);

/// Concatenation with n empty separator layers between consecutive instances.
TemporalGraph and_compose(const std::vector<TemporalGraph>& parts);

/// Layer 1 has independent edges with probability edge_prob; each later layer
/// keeps an edge with probability persistence and adds an absent one with
/// probability edge_prob * (1 - persistence).
TemporalGraph gen_random(int n, int tau, double edge_prob, double persistence, std::uint64_t seed);

/// JSON object mapping vertex id to label.
std::string labels_json(const std::vector<std::string>& labels);

}  // namespace ms2c
