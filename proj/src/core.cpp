#include "ms2c/core.hpp"

#include <algorithm>
#include <sstream>

namespace ms2c {

namespace {

std::vector<Edge> canonical_edges(int n, std::vector<Edge> edges, const char* where) {
    for (auto& e : edges) {
        if (e.u == e.v) {
            std::ostringstream os;
            os << where << ": self-loop at vertex " << e.u;
            throw InvalidInstance(os.str());
        }
        e = Edge(e.u, e.v);
        if (e.u < 1 || e.v > n) {
            std::ostringstream os;
            os << where << ": edge {" << e.u << "," << e.v << "} has an endpoint outside 1.." << n;
            throw InvalidInstance(os.str());
        }
    }
    std::sort(edges.begin(), edges.end());
    auto dup = std::adjacent_find(edges.begin(), edges.end());
    if (dup != edges.end()) {
        std::ostringstream os;
        os << where << ": duplicate edge {" << dup->u << "," << dup->v << "}";
        throw InvalidInstance(os.str());
    }
    return edges;
}

}  // namespace

StaticGraph::StaticGraph(int n, std::vector<Edge> edges) : n_(n) {
    if (n < 0) throw InvalidInstance("negative vertex count");
    edges_ = canonical_edges(n, std::move(edges), "graph");
}

std::vector<std::vector<Vertex>> StaticGraph::adjacency() const {
    std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(n_) + 1);
    for (const auto& e : edges_) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    for (auto& a : adj) std::sort(a.begin(), a.end());
    return adj;
}

StaticGraph StaticGraph::without(const std::vector<bool>& removed) const {
    std::vector<Edge> kept;
    for (const auto& e : edges_)
        if (!removed[e.u] && !removed[e.v]) kept.push_back(e);
    StaticGraph h;
    h.n_ = n_;
    h.edges_ = std::move(kept);
    return h;
}

TemporalGraph::TemporalGraph(int n, std::vector<std::vector<Edge>> layers) : n_(n) {
    if (n < 0) throw InvalidInstance("negative vertex count");
    if (layers.empty()) throw InvalidInstance("temporal graph needs at least one layer");
    layers_.reserve(layers.size());
    for (std::size_t t = 0; t < layers.size(); ++t) {
        std::string where = "layer " + std::to_string(t + 1);
        layers_.push_back(canonical_edges(n, std::move(layers[t]), where.c_str()));
    }
}

std::size_t TemporalGraph::time_edge_count() const {
    std::size_t m = 0;
    for (const auto& l : layers_) m += l.size();
    return m;
}

}  // namespace ms2c
