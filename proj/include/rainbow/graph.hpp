#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace rainbow {

// Undirected simple graph on vertices 0..n-1, sorted adjacency lists.
class UndirectedGraph {
public:
    UndirectedGraph() = default;
    explicit UndirectedGraph(int n) : adj_(n) {}

    // Validates: endpoints in range, no self-loops, no duplicate edges.
    static UndirectedGraph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    std::size_t edge_count() const { return edge_count_; }
    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const;
    bool has_edge(int u, int v) const;
    std::vector<std::pair<int, int>> edges() const; // u < v, lexicographic

    bool operator==(const UndirectedGraph& other) const = default;

private:
    std::vector<std::vector<int>> adj_;
    std::size_t edge_count_ = 0;
};

// Oriented graph: directed, no self-loops, no 2-cycles (at most one arc per
// vertex pair). Vertices 0..n-1, sorted out/in adjacency lists.
class OrientedGraph {
public:
    OrientedGraph() = default;
    explicit OrientedGraph(int n) : out_(n), in_(n) {}

    // Validates: endpoints in range, no self-loops, no duplicate arcs, no 2-cycles.
    static OrientedGraph from_arcs(int n, const std::vector<std::pair<int, int>>& arcs);

    int vertex_count() const { return static_cast<int>(out_.size()); }
    std::size_t arc_count() const { return arc_count_; }
    const std::vector<int>& out_neighbors(int v) const;
    const std::vector<int>& in_neighbors(int v) const;
    int out_degree(int v) const;
    int in_degree(int v) const;
    bool has_arc(int u, int v) const;
    bool adjacent(int u, int v) const; // either direction
    std::vector<std::pair<int, int>> arcs() const; // sorted lexicographic

    UndirectedGraph underlying() const;

    bool operator==(const OrientedGraph& other) const = default;

private:
    std::vector<std::vector<int>> out_;
    std::vector<std::vector<int>> in_;
    std::size_t arc_count_ = 0;
};

} // namespace rainbow
