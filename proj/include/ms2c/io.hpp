#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ms2c/core.hpp"
#include "ms2c/global.hpp"

namespace ms2c {

/// Parse failure; what() carries "line L, column C: ..." when a position is known.
class ParseError : public InvalidInstance {
public:
    ParseError(int line, int column, const std::string& message);
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

struct InstanceFile {
    TemporalGraph graph;
    std::optional<Budget> budget;
    /// Comment lines without the leading '#', in file order.
    std::vector<std::string> comments;

    bool operator==(const InstanceFile&) const = default;
};

/// "p ms2c <n> <tau>", optional "b local <d>" / "b global <D>", then per layer
/// "l <t> <m_t>" and m_t lines "e <u> <v>" with u < v. '#' starts a comment line.
InstanceFile parse_instance(std::string_view text);
std::string serialize_instance(const InstanceFile& f);

struct SolutionFile {
    bool yes = false;
    std::optional<ColoringSequence> coloring;

    bool operator==(const SolutionFile&) const = default;
};

/// "s yes|no", then on yes one "c <t> <colors>" line per layer.
std::string serialize_solution(const SolveOutcome& outcome);
std::string serialize_solution(const SolutionFile& s);
SolutionFile parse_solution(std::string_view text);

/// One variable per vertex shared by all layers, two clauses per time-edge:
/// "p ms2sat <n> <tau> <d>", then "l <t> <count>" and "<a> <b> 0" lines.
std::string emit_ms2sat(const TemporalGraph& g, std::int64_t d);
Ms2satInstance parse_ms2sat(std::string_view text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view text);

}  // namespace ms2c
