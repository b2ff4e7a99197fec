#pragma once

#include <string>
#include <variant>

#include "rainbow/coloring.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/tree.hpp"

namespace rainbow {

// Plain-text formats. Every file starts with a header line naming the kind
// and the vertex count; each following line holds one edge or arc as two
// 0-based indices. `#` starts a comment anywhere on a line; blank lines are
// skipped. All indices below refer to physical 1-based line numbers, which is
// what ParseError carries.
//
//   graph 3        undirected; edges in either endpoint order
//   0 1
//   1 2
//
//   digraph 2      oriented; a 2-cycle (both 0 1 and 1 0) is rejected
//   0 1
//
//   tree 3 root 0  rooted oriented tree; arcs may point either way
//   0 1
//   1 2
//
// Colorings have no header: one `vertex color` line per vertex, colors
// positive, every vertex of the host assigned exactly once. Parsed colorings
// get the numeric color order.
//
// Per-line problems (malformed tokens, out-of-range indices, self-loops,
// duplicates, 2-cycles) point at the offending line. Structural tree problems
// (wrong arc count, disconnected arcs, root out of range) point at the header
// line, and a missing color assignment points at the end of the input.

using ParsedGraph = std::variant<UndirectedGraph, OrientedGraph>;

// Dispatches on the header token (`graph` or `digraph`).
ParsedGraph parse_graph(const std::string& text);

// Single-kind variants; a header of the other kind is a ParseError.
UndirectedGraph parse_undirected(const std::string& text);
OrientedGraph parse_oriented(const std::string& text);

RootedOrientedTree parse_tree(const std::string& text);
Coloring parse_coloring(const std::string& text, int vertex_count);

// Serialized output is canonical: sorted edge/arc lists, one trailing
// newline, no comments. parse(serialize(x)) == x holds for graphs and trees;
// for colorings it holds when the color order is the numeric one, since the
// format stores assignments only.
std::string serialize_graph(const UndirectedGraph& g);
std::string serialize_graph(const OrientedGraph& d);
std::string serialize_tree(const RootedOrientedTree& t);
std::string serialize_coloring(const Coloring& c);

// Whole-file helpers; failures throw Error with the path in the message.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

} // namespace rainbow
