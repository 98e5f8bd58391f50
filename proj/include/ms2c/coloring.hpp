#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ms2c/core.hpp"

namespace ms2c {

StaticGraph underlying_graph(const TemporalGraph& g);

/// Connected components, numbered 0.. in order of their smallest vertex.
/// comp[v] for v in 1..n (index 0 unused).
struct Components {
    int count = 0;
    std::vector<int> comp;
    std::vector<Vertex> root;  // smallest vertex of each component
};

Components connected_components(const StaticGraph& g);

bool is_proper_coloring(std::span<const Edge> edges, std::span<const Color> coloring);

/// Hamming distance. Linear in n.
std::int64_t delta(std::span<const Color> f, std::span<const Color> g);

struct BipartiteResult {
    bool bipartite = true;
    /// On success: the lexicographically-least proper coloring (component roots colored 1).
    Coloring coloring;
    /// On failure: an odd closed walk v0 v1 ... vk with vk adjacent to v0, k+1 odd.
    std::vector<Vertex> odd_cycle;
};

BipartiteResult check_bipartite(const StaticGraph& g);

/// Per-layer result; first failing layer (1-based) or 0.
struct LayerBipartiteReport {
    std::vector<BipartiteResult> layers;
    int first_failure = 0;
    bool all_bipartite() const { return first_failure == 0; }
};

LayerBipartiteReport layer_bipartite_check(const TemporalGraph& g);

/// All proper 2-colorings of a bipartite graph, indexed by a component orientation
/// mask: bit i set flips component i relative to the root-colored-1 base coloring.
/// Mask 0 is the lexicographically-least coloring; masks run as a binary counter.
class ProperColorings {
public:
    /// Throws PreconditionError if g is not bipartite, CapExceeded if it has more
    /// than 63 components.
    explicit ProperColorings(const StaticGraph& g);

    int component_count() const { return components_.count; }
    std::uint64_t count() const { return std::uint64_t{1} << components_.count; }
    const Components& components() const { return components_; }
    const Coloring& base() const { return base_; }

    Coloring coloring(std::uint64_t mask) const;
    void materialize(std::uint64_t mask, Coloring& out) const;

    /// Orientation mask of a proper coloring of this graph, or nullopt if c is not proper.
    std::optional<std::uint64_t> mask_of(std::span<const Color> c) const;

    void for_each(const std::function<void(const Coloring&)>& fn) const;

private:
    StaticGraph graph_;
    Components components_;
    Coloring base_;
};

struct VerifyResult {
    bool ok = true;
    std::string message;
    int layer = 0;       // failing layer, 1-based, 0 if none
    int transition = 0;  // failing transition t (between t and t+1), 0 if none
};

VerifyResult verify_solution(const TemporalGraph& g, const ColoringSequence& s, const Budget& b);

/// Per-transition deltas of a coloring sequence (size tau-1).
std::vector<std::int64_t> transition_deltas(const ColoringSequence& s);

}  // namespace ms2c
