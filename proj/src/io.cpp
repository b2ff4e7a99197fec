#include "rainbow/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

#include "rainbow/error.hpp"

namespace rainbow {

namespace {

struct Line {
    int number = 0; // physical, 1-based
    std::vector<std::string> tokens;
};

// Strips comments and whitespace, keeping only lines that still carry tokens.
// Also reports the total physical line count so end-of-input errors can point
// past the last line.
std::pair<std::vector<Line>, int> tokenize(const std::string& text) {
    std::vector<Line> lines;
    int number = 0;
    std::istringstream stream(text);
    std::string raw;
    while (std::getline(stream, raw)) {
        ++number;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        Line line{number, {}};
        std::istringstream words(raw);
        std::string token;
        while (words >> token) line.tokens.push_back(std::move(token));
        if (!line.tokens.empty()) lines.push_back(std::move(line));
    }
    return {std::move(lines), number};
}

std::optional<long long> to_integer(const std::string& token) {
    long long value = 0;
    const char* begin = token.data();
    const char* end = begin + token.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end) return std::nullopt;
    return value;
}

int parse_count(const Line& header, std::size_t index, const std::string& what) {
    auto value = to_integer(header.tokens[index]);
    if (!value || *value < 0)
        throw ParseError(header.number, what + " must be a nonnegative integer, got '" +
                                            header.tokens[index] + "'");
    if (*value > 10'000'000) throw ParseError(header.number, what + " is implausibly large");
    return static_cast<int>(*value);
}

std::pair<int, int> parse_endpoint_pair(const Line& line, int n) {
    if (line.tokens.size() != 2)
        throw ParseError(line.number, "expected two vertex indices");
    int pair[2];
    for (int i = 0; i < 2; ++i) {
        auto value = to_integer(line.tokens[i]);
        if (!value) throw ParseError(line.number, "'" + line.tokens[i] + "' is not an integer");
        if (*value < 0 || *value >= n)
            throw ParseError(line.number, "vertex index " + std::to_string(*value) +
                                              " out of range for " + std::to_string(n) +
                                              " vertices");
        pair[i] = static_cast<int>(*value);
    }
    if (pair[0] == pair[1])
        throw ParseError(line.number, "self-loop at vertex " + std::to_string(pair[0]));
    return {pair[0], pair[1]};
}

const Line& header_of(const std::vector<Line>& lines) {
    if (lines.empty()) throw ParseError(1, "empty input: expected a header line");
    return lines.front();
}

UndirectedGraph parse_undirected_body(const std::vector<Line>& lines) {
    const Line& header = header_of(lines);
    int n = parse_count(header, 1, "vertex count");
    std::vector<std::pair<int, int>> edges;
    std::set<std::pair<int, int>> seen;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        auto [u, v] = parse_endpoint_pair(lines[i], n);
        auto key = std::minmax(u, v);
        if (!seen.insert(key).second)
            throw ParseError(lines[i].number, "duplicate edge " + std::to_string(key.first) +
                                                  " " + std::to_string(key.second));
        edges.emplace_back(u, v);
    }
    return UndirectedGraph::from_edges(n, edges);
}

OrientedGraph parse_oriented_body(const std::vector<Line>& lines) {
    const Line& header = header_of(lines);
    int n = parse_count(header, 1, "vertex count");
    std::vector<std::pair<int, int>> arcs;
    std::set<std::pair<int, int>> seen;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        auto [u, v] = parse_endpoint_pair(lines[i], n);
        if (seen.count({v, u}))
            throw ParseError(lines[i].number, "arcs " + std::to_string(v) + " " +
                                                  std::to_string(u) + " and " + std::to_string(u) +
                                                  " " + std::to_string(v) + " form a 2-cycle");
        if (!seen.insert({u, v}).second)
            throw ParseError(lines[i].number,
                             "duplicate arc " + std::to_string(u) + " " + std::to_string(v));
        arcs.emplace_back(u, v);
    }
    return OrientedGraph::from_arcs(n, arcs);
}

} // namespace

ParsedGraph parse_graph(const std::string& text) {
    auto [lines, total] = tokenize(text);
    (void)total;
    const Line& header = header_of(lines);
    const std::string& kind = header.tokens.front();
    if (kind == "graph") {
        if (header.tokens.size() != 2)
            throw ParseError(header.number, "graph header takes exactly one vertex count");
        return parse_undirected_body(lines);
    }
    if (kind == "digraph") {
        if (header.tokens.size() != 2)
            throw ParseError(header.number, "digraph header takes exactly one vertex count");
        return parse_oriented_body(lines);
    }
    throw ParseError(header.number, "expected header 'graph' or 'digraph', got '" + kind + "'");
}

UndirectedGraph parse_undirected(const std::string& text) {
    auto parsed = parse_graph(text);
    if (auto* g = std::get_if<UndirectedGraph>(&parsed)) return std::move(*g);
    throw ParseError(1, "expected an undirected graph, got a digraph");
}

OrientedGraph parse_oriented(const std::string& text) {
    auto parsed = parse_graph(text);
    if (auto* d = std::get_if<OrientedGraph>(&parsed)) return std::move(*d);
    throw ParseError(1, "expected a digraph, got an undirected graph");
}

RootedOrientedTree parse_tree(const std::string& text) {
    auto [lines, total] = tokenize(text);
    (void)total;
    const Line& header = header_of(lines);
    if (header.tokens.front() != "tree")
        throw ParseError(header.number,
                         "expected header 'tree', got '" + header.tokens.front() + "'");
    if (header.tokens.size() != 4 || header.tokens[2] != "root")
        throw ParseError(header.number, "tree header is 'tree <count> root <vertex>'");
    int n = parse_count(header, 1, "vertex count");
    int root = parse_count(header, 3, "root");
    if (root >= n)
        throw ParseError(header.number, "root " + std::to_string(root) + " out of range for " +
                                            std::to_string(n) + " vertices");
    std::vector<std::pair<int, int>> arcs;
    std::set<std::pair<int, int>> seen;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        auto [u, v] = parse_endpoint_pair(lines[i], n);
        if (!seen.insert({u, v}).second)
            throw ParseError(lines[i].number,
                             "duplicate arc " + std::to_string(u) + " " + std::to_string(v));
        arcs.emplace_back(u, v);
    }
    try {
        return RootedOrientedTree(n, std::move(arcs), root);
    } catch (const Error& e) {
        // Arc-count, connectivity, and digon problems are properties of the
        // whole arc set, so they blame the header.
        throw ParseError(header.number, e.what());
    }
}

Coloring parse_coloring(const std::string& text, int vertex_count) {
    if (vertex_count < 0) throw Error("negative vertex count");
    auto [lines, total] = tokenize(text);
    std::vector<int> color_of(vertex_count, 0);
    std::vector<bool> assigned(vertex_count, false);
    for (const Line& line : lines) {
        if (line.tokens.size() != 2)
            throw ParseError(line.number, "expected 'vertex color'");
        auto vertex = to_integer(line.tokens[0]);
        auto color = to_integer(line.tokens[1]);
        if (!vertex || !color)
            throw ParseError(line.number, "expected 'vertex color' as two integers");
        if (*vertex < 0 || *vertex >= vertex_count)
            throw ParseError(line.number, "vertex " + std::to_string(*vertex) +
                                              " out of range for " +
                                              std::to_string(vertex_count) + " vertices");
        if (*color < 1)
            throw ParseError(line.number, "color must be positive, got " + std::to_string(*color));
        if (*color > 10'000'000) throw ParseError(line.number, "color is implausibly large");
        int v = static_cast<int>(*vertex);
        if (assigned[v])
            throw ParseError(line.number, "vertex " + std::to_string(v) + " assigned twice");
        assigned[v] = true;
        color_of[v] = static_cast<int>(*color);
    }
    for (int v = 0; v < vertex_count; ++v)
        if (!assigned[v])
            throw ParseError(std::max(total, 1) + 1,
                             "vertex " + std::to_string(v) + " has no color assignment");
    return Coloring(std::move(color_of));
}

namespace {

void append_pairs(std::string& out, const std::vector<std::pair<int, int>>& pairs) {
    for (auto [u, v] : pairs) {
        out += std::to_string(u);
        out += ' ';
        out += std::to_string(v);
        out += '\n';
    }
}

} // namespace

std::string serialize_graph(const UndirectedGraph& g) {
    std::string out = "graph " + std::to_string(g.vertex_count()) + "\n";
    append_pairs(out, g.edges());
    return out;
}

std::string serialize_graph(const OrientedGraph& d) {
    std::string out = "digraph " + std::to_string(d.vertex_count()) + "\n";
    append_pairs(out, d.arcs());
    return out;
}

std::string serialize_tree(const RootedOrientedTree& t) {
    std::string out = "tree " + std::to_string(t.vertex_count()) + " root " +
                      std::to_string(t.root()) + "\n";
    append_pairs(out, t.arcs());
    return out;
}

std::string serialize_coloring(const Coloring& c) {
    std::string out;
    for (int v = 0; v < c.vertex_count(); ++v) {
        out += std::to_string(v);
        out += ' ';
        out += std::to_string(c.color_of(v));
        out += '\n';
    }
    return out;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open file for reading: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) throw Error("read failed: " + path);
    return buffer.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot open file for writing: " + path);
    out << content;
    out.flush();
    if (!out) throw Error("write failed: " + path);
}

} // namespace rainbow
