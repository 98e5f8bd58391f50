#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ms2c {

// Vertices are dense 1-based integers.
using Vertex = int;
using Color = std::uint8_t;

inline constexpr Color kUncolored = 0;

inline constexpr Color flip(Color c) { return static_cast<Color>(3 - c); }

// Undirected edge stored canonically with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    Edge() = default;
    Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

    auto operator<=>(const Edge&) const = default;
};

/// Base class of everything the library throws.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input violates an operation's precondition (caller bug or wrong algorithm choice).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// A configured resource cap would be exceeded. Never a silent wrong answer.
class CapExceeded : public Error {
public:
    using Error::Error;
};

/// Malformed instance data (bad endpoints, duplicate edges, ...).
class InvalidInstance : public Error {
public:
    using Error::Error;
};

class StaticGraph {
public:
    StaticGraph() = default;
    /// Canonicalizes edges; throws InvalidInstance on self-loops, out-of-range
    /// endpoints or duplicates.
    StaticGraph(int n, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::size_t edge_count() const { return edges_.size(); }

    /// Adjacency lists indexed by vertex (index 0 unused), neighbors sorted.
    std::vector<std::vector<Vertex>> adjacency() const;

    /// Same vertex set with every edge touching a removed vertex dropped.
    /// removed is indexed by vertex (size n+1).
    StaticGraph without(const std::vector<bool>& removed) const;

    bool operator==(const StaticGraph&) const = default;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
};

class TemporalGraph {
public:
    TemporalGraph() = default;
    /// Throws InvalidInstance unless every layer is a valid simple edge set on 1..n
    /// and there is at least one layer.
    TemporalGraph(int n, std::vector<std::vector<Edge>> layers);

    int vertex_count() const { return n_; }
    int lifetime() const { return static_cast<int>(layers_.size()); }
    /// Edges of layer t, 1-based.
    const std::vector<Edge>& layer(int t) const { return layers_.at(t - 1); }
    const std::vector<std::vector<Edge>>& layers() const { return layers_; }
    StaticGraph layer_graph(int t) const { return StaticGraph(n_, layer(t)); }
    std::size_t time_edge_count() const;

    bool operator==(const TemporalGraph&) const = default;

private:
    int n_ = 0;
    std::vector<std::vector<Edge>> layers_;
};

/// A total 2-coloring; colors[v-1] in {1,2}.
using Coloring = std::vector<Color>;
/// One total coloring per layer.
using ColoringSequence = std::vector<Coloring>;

/// Per-layer partial colorings; kUncolored marks an undefined entry.
class PartialColoringSequence {
public:
    PartialColoringSequence() = default;
    PartialColoringSequence(int n, int tau)
        : n_(n), colors_(static_cast<std::size_t>(tau), std::vector<Color>(static_cast<std::size_t>(n), kUncolored)) {}

    int vertex_count() const { return n_; }
    int lifetime() const { return static_cast<int>(colors_.size()); }

    Color get(Vertex v, int t) const { return colors_[t - 1][v - 1]; }
    bool defined(Vertex v, int t) const { return get(v, t) != kUncolored; }
    void set(Vertex v, int t, Color c) { colors_[t - 1][v - 1] = c; }
    void clear(Vertex v, int t) { set(v, t, kUncolored); }
    const std::vector<Color>& layer(int t) const { return colors_[t - 1]; }

    bool operator==(const PartialColoringSequence&) const = default;

private:
    int n_ = 0;
    std::vector<std::vector<Color>> colors_;
};

enum class BudgetKind { Local, Global };

struct Budget {
    BudgetKind kind = BudgetKind::Local;
    std::int64_t value = 0;

    static Budget local(std::int64_t d) { return {BudgetKind::Local, d}; }
    static Budget global(std::int64_t d) { return {BudgetKind::Global, d}; }

    bool operator==(const Budget&) const = default;
};

struct SolveOutcome {
    bool yes = false;
    std::optional<ColoringSequence> witness;
    std::string algorithm;
    std::map<std::string, std::int64_t> stats;

    static SolveOutcome no(std::string algo) { return {false, std::nullopt, std::move(algo), {}}; }
    static SolveOutcome with_witness(std::string algo, ColoringSequence w) {
        return {true, std::move(w), std::move(algo), {}};
    }
};

}  // namespace ms2c
