#include "rainbow/graph.hpp"

#include <algorithm>
#include <string>

#include "rainbow/error.hpp"

namespace rainbow {

namespace {

void check_vertex(int v, int n, const char* what) {
    if (v < 0 || v >= n)
        throw Error(std::string(what) + " out of range: " + std::to_string(v));
}

} // namespace

UndirectedGraph UndirectedGraph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw Error("negative vertex count");
    UndirectedGraph g(n);
    for (auto [u, v] : edges) {
        check_vertex(u, n, "edge endpoint");
        check_vertex(v, n, "edge endpoint");
        if (u == v) throw Error("self-loop at vertex " + std::to_string(u));
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (int v = 0; v < n; ++v) {
        auto& nb = g.adj_[v];
        std::sort(nb.begin(), nb.end());
        if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
            throw Error("duplicate edge at vertex " + std::to_string(v));
    }
    g.edge_count_ = edges.size();
    return g;
}

const std::vector<int>& UndirectedGraph::neighbors(int v) const {
    check_vertex(v, vertex_count(), "vertex");
    return adj_[v];
}

int UndirectedGraph::degree(int v) const { return static_cast<int>(neighbors(v).size()); }

bool UndirectedGraph::has_edge(int u, int v) const {
    check_vertex(u, vertex_count(), "vertex");
    check_vertex(v, vertex_count(), "vertex");
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::pair<int, int>> UndirectedGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edge_count_);
    for (int u = 0; u < vertex_count(); ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

OrientedGraph OrientedGraph::from_arcs(int n, const std::vector<std::pair<int, int>>& arcs) {
    if (n < 0) throw Error("negative vertex count");
    OrientedGraph d(n);
    for (auto [u, v] : arcs) {
        check_vertex(u, n, "arc endpoint");
        check_vertex(v, n, "arc endpoint");
        if (u == v) throw Error("self-loop at vertex " + std::to_string(u));
        d.out_[u].push_back(v);
        d.in_[v].push_back(u);
    }
    for (int v = 0; v < n; ++v) {
        std::sort(d.out_[v].begin(), d.out_[v].end());
        std::sort(d.in_[v].begin(), d.in_[v].end());
        if (std::adjacent_find(d.out_[v].begin(), d.out_[v].end()) != d.out_[v].end())
            throw Error("duplicate arc from vertex " + std::to_string(v));
    }
    d.arc_count_ = arcs.size();
    for (auto [u, v] : arcs)
        if (d.has_arc(v, u))
            throw Error("2-cycle between " + std::to_string(u) + " and " + std::to_string(v));
    return d;
}

const std::vector<int>& OrientedGraph::out_neighbors(int v) const {
    check_vertex(v, vertex_count(), "vertex");
    return out_[v];
}

const std::vector<int>& OrientedGraph::in_neighbors(int v) const {
    check_vertex(v, vertex_count(), "vertex");
    return in_[v];
}

int OrientedGraph::out_degree(int v) const { return static_cast<int>(out_neighbors(v).size()); }
int OrientedGraph::in_degree(int v) const { return static_cast<int>(in_neighbors(v).size()); }

bool OrientedGraph::has_arc(int u, int v) const {
    check_vertex(u, vertex_count(), "vertex");
    check_vertex(v, vertex_count(), "vertex");
    const auto& nb = out_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

bool OrientedGraph::adjacent(int u, int v) const { return has_arc(u, v) || has_arc(v, u); }

std::vector<std::pair<int, int>> OrientedGraph::arcs() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(arc_count_);
    for (int u = 0; u < vertex_count(); ++u)
        for (int v : out_[u]) out.emplace_back(u, v);
    return out;
}

UndirectedGraph OrientedGraph::underlying() const {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(arc_count_);
    for (int u = 0; u < vertex_count(); ++u)
        for (int v : out_[u]) edges.emplace_back(std::min(u, v), std::max(u, v));
    return UndirectedGraph::from_edges(vertex_count(), edges);
}

} // namespace rainbow
