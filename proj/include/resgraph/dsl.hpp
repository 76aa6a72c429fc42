#pragma once

#include "resgraph/error.hpp"
#include "resgraph/graph.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace resgraph {

/// A parsed graph description. Explicit documents are vertex/edge lines;
/// chain and star documents are single-line shorthands.
struct GraphDocument {
    enum class Form { Explicit, Chain, Star };
    std::string source;
    Form form = Form::Explicit;
    WeightedDualGraph graph = WeightedDualGraph::build({{"_", 1}}, {});
};

namespace detail {

struct Token {
    std::string text;
    int column;  // 1-based
};

inline std::vector<Token> tokenize_line(const std::string& line, int line_no) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        if (line[i] == '#') break;
        if (line[i] == '[' || line[i] == ']' || line[i] == ':') {
            tokens.push_back({std::string(1, line[i]), static_cast<int>(i) + 1});
            ++i;
            continue;
        }
        std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) &&
               line[i] != '[' && line[i] != ']' && line[i] != ':' && line[i] != '#')
            ++i;
        tokens.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
    }
    (void)line_no;
    return tokens;
}

inline std::string at(int line, int col) {
    return "line " + std::to_string(line) + ", col " + std::to_string(col) + ": ";
}

inline bool is_integer(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

/// Self-intersection token: a negative integer; the weight is its negation.
inline long long parse_selfint(const Token& t, int line) {
    if (!is_integer(t.text))
        throw Error(ErrorCode::SyntaxError,
                    at(line, t.column) + "expected a self-intersection, got '" + t.text + "'");
    long long v = std::stoll(t.text);
    if (v >= 0)
        throw Error(ErrorCode::NonPositiveWeight,
                    at(line, t.column) + "self-intersection " + t.text + " must be negative");
    return -v;
}

inline void check_id(const Token& t, int line) {
    for (char c : t.text)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '.' && c != '-')
            throw Error(ErrorCode::SyntaxError,
                        at(line, t.column) + "bad vertex id '" + t.text + "'");
    if (t.text[0] == '-' || is_integer(t.text))
        throw Error(ErrorCode::SyntaxError,
                    at(line, t.column) + "vertex id '" + t.text + "' looks like a number");
}

}  // namespace detail

/// Parse the line-oriented graph DSL:
///
///   # comment
///   vertex <id> <selfint>          selfint is the negative integer E^2
///   edge <id> <id>
///   chain <selfint> ...            whole-document shorthand, ids v1..vn
///   star <selfint> : [<selfint> ...] ...   center e0, arms a<i>_<j>
///
/// A document is either vertex/edge lines or exactly one shorthand line.
inline GraphDocument parse_graph_document(const std::string& text) {
    using detail::at;
    GraphDocument doc;
    doc.source = text;

    std::vector<std::pair<std::string, long long>> vertices;
    std::vector<std::pair<std::string, std::string>> edges;
    std::map<std::string, int> vertex_line;
    std::map<std::pair<std::string, std::string>, int> edge_line;
    std::optional<GraphDocument::Form> shorthand;
    bool has_explicit = false;

    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto tokens = detail::tokenize_line(line, line_no);
        if (tokens.empty()) continue;
        const std::string& head = tokens[0].text;

        if (head == "vertex" || head == "edge") {
            if (shorthand)
                throw Error(ErrorCode::SyntaxError,
                            at(line_no, tokens[0].column) +
                                "vertex/edge lines cannot follow a chain/star shorthand");
            has_explicit = true;
            if (head == "vertex") {
                if (tokens.size() != 3)
                    throw Error(ErrorCode::SyntaxError,
                                at(line_no, tokens[0].column) + "expected: vertex <id> <selfint>");
                detail::check_id(tokens[1], line_no);
                long long w = detail::parse_selfint(tokens[2], line_no);
                if (vertex_line.count(tokens[1].text))
                    throw Error(ErrorCode::DuplicateVertex,
                                at(line_no, tokens[1].column) + "vertex '" + tokens[1].text +
                                    "' already declared on line " +
                                    std::to_string(vertex_line[tokens[1].text]));
                vertex_line[tokens[1].text] = line_no;
                vertices.emplace_back(tokens[1].text, w);
            } else {
                if (tokens.size() != 3)
                    throw Error(ErrorCode::SyntaxError,
                                at(line_no, tokens[0].column) + "expected: edge <id> <id>");
                detail::check_id(tokens[1], line_no);
                detail::check_id(tokens[2], line_no);
                if (tokens[1].text == tokens[2].text)
                    throw Error(ErrorCode::SelfLoop, at(line_no, tokens[1].column) +
                                                         "self-loop at '" + tokens[1].text + "'");
                auto key = std::minmax(tokens[1].text, tokens[2].text);
                if (edge_line.count(key))
                    throw Error(ErrorCode::DuplicateEdge,
                                at(line_no, tokens[1].column) + "edge {" + tokens[1].text + ", " +
                                    tokens[2].text + "} already declared on line " +
                                    std::to_string(edge_line[key]));
                edge_line[key] = line_no;
                edges.emplace_back(tokens[1].text, tokens[2].text);
            }
        } else if (head == "chain" || head == "star") {
            if (shorthand || has_explicit)
                throw Error(ErrorCode::SyntaxError,
                            at(line_no, tokens[0].column) +
                                "a document holds a single chain/star line or vertex/edge lines");
            if (head == "chain") {
                shorthand = GraphDocument::Form::Chain;
                if (tokens.size() < 2)
                    throw Error(ErrorCode::SyntaxError,
                                at(line_no, tokens[0].column) + "chain needs at least one weight");
                for (std::size_t t = 1; t < tokens.size(); ++t) {
                    long long w = detail::parse_selfint(tokens[t], line_no);
                    std::string id = "v" + std::to_string(t);
                    vertices.emplace_back(id, w);
                    if (t > 1) edges.emplace_back("v" + std::to_string(t - 1), id);
                }
            } else {
                shorthand = GraphDocument::Form::Star;
                std::size_t t = 1;
                if (t >= tokens.size())
                    throw Error(ErrorCode::SyntaxError,
                                at(line_no, tokens[0].column) + "star needs a center weight");
                vertices.emplace_back("e0", detail::parse_selfint(tokens[t++], line_no));
                if (t >= tokens.size() || tokens[t].text != ":")
                    throw Error(ErrorCode::SyntaxError,
                                at(line_no, tokens[t - 1].column) + "expected ':' after the center");
                ++t;
                int arm = 0;
                while (t < tokens.size()) {
                    if (tokens[t].text != "[")
                        throw Error(ErrorCode::SyntaxError,
                                    at(line_no, tokens[t].column) + "expected '[' to open an arm");
                    ++t;
                    ++arm;
                    std::string prev = "e0";
                    int j = 0;
                    while (t < tokens.size() && tokens[t].text != "]") {
                        long long w = detail::parse_selfint(tokens[t], line_no);
                        std::string id =
                            "a" + std::to_string(arm) + "_" + std::to_string(++j);
                        vertices.emplace_back(id, w);
                        edges.emplace_back(prev, id);
                        prev = id;
                        ++t;
                    }
                    if (t == tokens.size())
                        throw Error(ErrorCode::SyntaxError,
                                    at(line_no, tokens[t - 1].column) + "unclosed '['");
                    if (j == 0)
                        throw Error(ErrorCode::SyntaxError,
                                    at(line_no, tokens[t].column) + "empty arm");
                    ++t;  // ']'
                }
                if (arm == 0)
                    throw Error(ErrorCode::SyntaxError,
                                at(line_no, tokens[0].column) + "star needs at least one arm");
            }
        } else {
            throw Error(ErrorCode::SyntaxError,
                        at(line_no, tokens[0].column) + "unknown directive '" + head + "'");
        }
    }

    if (vertices.empty())
        throw Error(ErrorCode::SyntaxError, "document declares no vertices");
    // edges may reference vertices declared later; resolve them now so the
    // error still carries the offending line
    for (const auto& [ab, ln] : edge_line) {
        for (const std::string& endpoint : {ab.first, ab.second})
            if (!vertex_line.count(endpoint))
                throw Error(ErrorCode::UnknownEndpoint,
                            "line " + std::to_string(ln) + ": edge endpoint '" + endpoint +
                                "' is not a declared vertex");
    }
    doc.form = shorthand.value_or(GraphDocument::Form::Explicit);
    doc.graph = WeightedDualGraph::build(vertices, edges);
    return doc;
}

inline WeightedDualGraph parse_graph(const std::string& text) {
    return parse_graph_document(text).graph;
}

/// Canonical explicit form; parse(emit(g)) reproduces g up to nothing at all
/// (ids, order and weights are preserved verbatim).
inline std::string emit(const WeightedDualGraph& g) {
    std::ostringstream out;
    for (int i = 0; i < g.size(); ++i)
        out << "vertex " << g.id(i) << " " << -g.weight(i) << "\n";
    for (auto [u, v] : g.edges()) out << "edge " << g.id(u) << " " << g.id(v) << "\n";
    return out.str();
}

}  // namespace resgraph
