#include "ms2c/io.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace ms2c {

ParseError::ParseError(int line, int column, const std::string& message)
    : InvalidInstance(column > 0 ? "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message
                                 : "line " + std::to_string(line) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

struct Token {
    std::string_view text;
    int column;
};

struct Line {
    int number;
    std::string_view text;
    std::vector<Token> tokens;
};

class LineReader {
public:
    explicit LineReader(std::string_view text) : text_(text) {}

    // Next line, tokens split on blanks; nullopt at end of input.
    std::optional<Line> next() {
        if (pos_ >= text_.size()) return std::nullopt;
        auto end = text_.find('\n', pos_);
        if (end == std::string_view::npos) end = text_.size();
        std::string_view raw = text_.substr(pos_, end - pos_);
        pos_ = end + 1;
        if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
        Line l{++number_, raw, {}};
        for (std::size_t i = 0; i < raw.size();) {
            if (raw[i] == ' ' || raw[i] == '\t') {
                ++i;
                continue;
            }
            std::size_t j = i;
            while (j < raw.size() && raw[j] != ' ' && raw[j] != '\t') ++j;
            l.tokens.push_back({raw.substr(i, j - i), static_cast<int>(i) + 1});
            i = j;
        }
        return l;
    }

    int line_number() const { return number_; }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
    int number_ = 0;
};

std::int64_t number(const Line& l, std::size_t i, const char* what) {
    if (i >= l.tokens.size()) throw ParseError(l.number, static_cast<int>(l.text.size()) + 1, std::string("missing ") + what);
    const auto& t = l.tokens[i];
    std::int64_t v = 0;
    auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    if (ec != std::errc() || p != t.text.data() + t.text.size())
        throw ParseError(l.number, t.column, std::string("expected integer ") + what + ", found '" + std::string(t.text) + "'");
    return v;
}

void expect_keyword(const Line& l, std::size_t i, std::string_view word, const std::string& context) {
    if (i >= l.tokens.size() || l.tokens[i].text != word)
        throw ParseError(l.number, i < l.tokens.size() ? l.tokens[i].column : static_cast<int>(l.text.size()) + 1,
                         "expected " + context);
}

void expect_end(const Line& l, std::size_t count) {
    if (l.tokens.size() > count)
        throw ParseError(l.number, l.tokens[count].column, "unexpected token '" + std::string(l.tokens[count].text) + "'");
}

bool is_comment(const Line& l) { return !l.tokens.empty() && l.tokens[0].text.front() == '#'; }

}  // namespace

InstanceFile parse_instance(std::string_view text) {
    LineReader in(text);
    InstanceFile f;
    int n = -1, tau = -1;
    std::vector<std::vector<Edge>> layers;
    int layer = 0;            // layer whose edges are being read
    std::int64_t pending = 0; // edges still expected in that layer
    std::set<Edge> seen;
    while (auto l = in.next()) {
        if (l->tokens.empty()) continue;
        if (is_comment(*l)) {
            const auto at = l->text.find('#');
            f.comments.emplace_back(l->text.substr(at + 1));
            continue;
        }
        const auto head = l->tokens[0].text;
        if (n < 0) {
            expect_keyword(*l, 0, "p", "header 'p ms2c <n> <tau>'");
            expect_keyword(*l, 1, "ms2c", "format name 'ms2c'");
            const auto nn = number(*l, 2, "vertex count"), tt = number(*l, 3, "lifetime");
            expect_end(*l, 4);
            if (nn < 0) throw ParseError(l->number, l->tokens[2].column, "vertex count must be nonnegative");
            if (tt < 1) throw ParseError(l->number, l->tokens[3].column, "lifetime must be at least 1");
            n = static_cast<int>(nn);
            tau = static_cast<int>(tt);
            continue;
        }
        if (head == "b") {
            if (!layers.empty() || f.budget)
                throw ParseError(l->number, 1, "budget line must directly follow the header");
            if (l->tokens.size() < 2 || (l->tokens[1].text != "local" && l->tokens[1].text != "global"))
                throw ParseError(l->number, l->tokens.size() < 2 ? 2 : l->tokens[1].column, "expected 'local' or 'global'");
            const auto v = number(*l, 2, "budget");
            expect_end(*l, 3);
            if (v < 0) throw ParseError(l->number, l->tokens[2].column, "budget must be nonnegative");
            f.budget = l->tokens[1].text == "local" ? Budget::local(v) : Budget::global(v);
            continue;
        }
        if (pending > 0) {
            expect_keyword(*l, 0, "e",
                           "edge line 'e <u> <v>' (" + std::to_string(pending) + " more in layer " + std::to_string(layer) + ")");
            const auto u = number(*l, 1, "endpoint"), v = number(*l, 2, "endpoint");
            expect_end(*l, 3);
            for (std::size_t i : {1u, 2u}) {
                const auto x = i == 1 ? u : v;
                if (x < 1 || x > n)
                    throw ParseError(l->number, l->tokens[i].column,
                                     "endpoint " + std::to_string(x) + " out of range 1.." + std::to_string(n));
            }
            if (u >= v) throw ParseError(l->number, l->tokens[1].column, "expected u < v");
            const Edge e(static_cast<Vertex>(u), static_cast<Vertex>(v));
            if (!seen.insert(e).second)
                throw ParseError(l->number, 1, "duplicate edge {" + std::to_string(u) + "," + std::to_string(v) +
                                                   "} in layer " + std::to_string(layer));
            layers.back().push_back(e);
            --pending;
            continue;
        }
        if (layer == tau)
            throw ParseError(l->number, 1, "unexpected content after layer " + std::to_string(tau) + " of " + std::to_string(tau));
        expect_keyword(*l, 0, "l", "layer " + std::to_string(layer + 1) + " of " + std::to_string(tau));
        const auto t = number(*l, 1, "layer index");
        if (t != layer + 1)
            throw ParseError(l->number, l->tokens[1].column,
                             "expected layer " + std::to_string(layer + 1) + " of " + std::to_string(tau) + ", found " +
                                 std::to_string(t));
        pending = number(*l, 2, "edge count");
        expect_end(*l, 3);
        if (pending < 0) throw ParseError(l->number, l->tokens[2].column, "edge count must be nonnegative");
        ++layer;
        layers.emplace_back();
        seen.clear();
    }
    const int end = in.line_number() + 1;
    if (n < 0) throw ParseError(end, 0, "missing header 'p ms2c <n> <tau>'");
    if (pending > 0)
        throw ParseError(end, 0, "expected " + std::to_string(pending) + " more edges in layer " + std::to_string(layer));
    if (layer < tau)
        throw ParseError(end, 0, "expected layer " + std::to_string(layer + 1) + " of " + std::to_string(tau));
    f.graph = TemporalGraph(n, std::move(layers));
    return f;
}

std::string serialize_instance(const InstanceFile& f) {
    std::ostringstream os;
    for (const auto& c : f.comments) os << '#' << c << '\n';
    os << "p ms2c " << f.graph.vertex_count() << ' ' << f.graph.lifetime() << '\n';
    if (f.budget) os << "b " << (f.budget->kind == BudgetKind::Local ? "local " : "global ") << f.budget->value << '\n';
    for (int t = 1; t <= f.graph.lifetime(); ++t) {
        os << "l " << t << ' ' << f.graph.layer(t).size() << '\n';
        for (const auto& e : f.graph.layer(t)) os << "e " << e.u << ' ' << e.v << '\n';
    }
    return os.str();
}

std::string serialize_solution(const SolutionFile& s) {
    std::string out = s.yes ? "s yes\n" : "s no\n";
    if (s.yes && s.coloring)
        for (std::size_t t = 0; t < s.coloring->size(); ++t) {
            out += "c " + std::to_string(t + 1) + ' ';
            for (Color c : (*s.coloring)[t]) out += static_cast<char>('0' + c);
            out += '\n';
        }
    return out;
}

std::string serialize_solution(const SolveOutcome& outcome) {
    return serialize_solution(SolutionFile{outcome.yes, outcome.yes ? outcome.witness : std::nullopt});
}

SolutionFile parse_solution(std::string_view text) {
    LineReader in(text);
    SolutionFile s;
    bool header = false;
    ColoringSequence colors;
    while (auto l = in.next()) {
        if (l->tokens.empty() || is_comment(*l)) continue;
        if (!header) {
            expect_keyword(*l, 0, "s", "verdict line 's yes' or 's no'");
            if (l->tokens.size() < 2 || (l->tokens[1].text != "yes" && l->tokens[1].text != "no"))
                throw ParseError(l->number, l->tokens.size() < 2 ? 2 : l->tokens[1].column, "expected 'yes' or 'no'");
            expect_end(*l, 2);
            s.yes = l->tokens[1].text == "yes";
            header = true;
            continue;
        }
        if (!s.yes) throw ParseError(l->number, 1, "no coloring lines allowed after 's no'");
        expect_keyword(*l, 0, "c", "coloring line 'c <t> <colors>'");
        const auto t = number(*l, 1, "layer index");
        if (t != static_cast<std::int64_t>(colors.size()) + 1)
            throw ParseError(l->number, l->tokens[1].column, "expected coloring of layer " + std::to_string(colors.size() + 1));
        if (l->tokens.size() < 3) throw ParseError(l->number, static_cast<int>(l->text.size()) + 1, "missing colors");
        expect_end(*l, 3);
        const auto& tok = l->tokens[2];
        Coloring c;
        for (std::size_t i = 0; i < tok.text.size(); ++i) {
            if (tok.text[i] != '1' && tok.text[i] != '2')
                throw ParseError(l->number, tok.column + static_cast<int>(i), "colors must be '1' or '2'");
            c.push_back(static_cast<Color>(tok.text[i] - '0'));
        }
        if (!colors.empty() && c.size() != colors.front().size())
            throw ParseError(l->number, tok.column, "expected " + std::to_string(colors.front().size()) + " colors");
        colors.push_back(std::move(c));
    }
    if (!header) throw ParseError(in.line_number() + 1, 0, "missing verdict line");
    if (!colors.empty()) s.coloring = std::move(colors);
    return s;
}

std::string emit_ms2sat(const TemporalGraph& g, std::int64_t d) {
    std::ostringstream os;
    os << "p ms2sat " << g.vertex_count() << ' ' << g.lifetime() << ' ' << d << '\n';
    for (int t = 1; t <= g.lifetime(); ++t) {
        os << "l " << t << ' ' << 2 * g.layer(t).size() << '\n';
        for (const auto& e : g.layer(t)) {
            os << e.u << ' ' << e.v << " 0\n";
            os << -e.u << ' ' << -e.v << " 0\n";
        }
    }
    return os.str();
}

Ms2satInstance parse_ms2sat(std::string_view text) {
    LineReader in(text);
    Ms2satInstance inst;
    bool header = false;
    std::int64_t pending = 0;
    while (auto l = in.next()) {
        if (l->tokens.empty() || is_comment(*l) || l->tokens[0].text == "c") continue;
        if (!header) {
            expect_keyword(*l, 0, "p", "header 'p ms2sat <n> <tau> <d>'");
            expect_keyword(*l, 1, "ms2sat", "format name 'ms2sat'");
            inst.variables = static_cast<int>(number(*l, 2, "variable count"));
            inst.stages = static_cast<int>(number(*l, 3, "stage count"));
            inst.budget = number(*l, 4, "budget");
            expect_end(*l, 5);
            if (inst.variables < 0 || inst.stages < 1 || inst.budget < 0)
                throw ParseError(l->number, l->tokens[2].column, "header values out of range");
            header = true;
            continue;
        }
        if (pending == 0) {
            const int expected = static_cast<int>(inst.clauses.size()) + 1;
            if (expected > inst.stages) throw ParseError(l->number, 1, "unexpected content after the last stage");
            expect_keyword(*l, 0, "l", "stage " + std::to_string(expected) + " of " + std::to_string(inst.stages));
            if (number(*l, 1, "stage index") != expected)
                throw ParseError(l->number, l->tokens[1].column, "expected stage " + std::to_string(expected));
            pending = number(*l, 2, "clause count");
            expect_end(*l, 3);
            if (pending < 0) throw ParseError(l->number, l->tokens[2].column, "clause count must be nonnegative");
            inst.clauses.emplace_back();
            continue;
        }
        const auto a = number(*l, 0, "literal"), b = number(*l, 1, "literal"), z = number(*l, 2, "terminating 0");
        expect_end(*l, 3);
        for (std::size_t i : {0u, 1u}) {
            const auto x = i == 0 ? a : b;
            if (x == 0 || x > inst.variables || -x > inst.variables)
                throw ParseError(l->number, l->tokens[i].column, "literal " + std::to_string(x) + " out of range");
        }
        if (z != 0) throw ParseError(l->number, l->tokens[2].column, "clause must end with 0");
        inst.clauses.back().emplace_back(static_cast<Literal>(a), static_cast<Literal>(b));
        --pending;
    }
    const int end = in.line_number() + 1;
    if (!header) throw ParseError(end, 0, "missing header 'p ms2sat <n> <tau> <d>'");
    if (pending > 0 || static_cast<int>(inst.clauses.size()) < inst.stages)
        throw ParseError(end, 0, "expected stage " + std::to_string(inst.clauses.size() + (pending > 0 ? 0 : 1)) + " of " +
                                     std::to_string(inst.stages) + " to be complete");
    return inst;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write '" + path + "'");
    out << text;
}

}  // namespace ms2c
