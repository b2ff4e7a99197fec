#include "rainbow/coloring_ops.hpp"

#include <algorithm>
#include <string>

#include "rainbow/error.hpp"

namespace rainbow {

RefinementResult greedy_refinement(const UndirectedGraph& g, const Coloring& beta) {
    if (!is_proper(g, beta)) throw Error("refinement requires a proper input coloring");
    const int n = g.vertex_count();
    std::vector<int> by_rank(n);
    for (int v = 0; v < n; ++v) by_rank[v] = beta.rank_of(beta.color_of(v));
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return by_rank[a] < by_rank[b]; });

    std::vector<int> alpha(n, 0);
    std::vector<char> taken(n + 2, 0);
    for (int v : order) {
        for (int u : g.neighbors(v))
            if (alpha[u]) taken[alpha[u]] = 1;
        int c = 1;
        while (taken[c]) ++c;
        alpha[v] = c;
        for (int u : g.neighbors(v))
            if (alpha[u]) taken[alpha[u]] = 0;
    }
    RefinementResult result{Coloring(std::move(alpha)), beta.color_count(), 0};
    result.color_count_after = result.alpha.color_count();
    return result;
}

OrientedGraph natural_orientation(const UndirectedGraph& g, const Coloring& c) {
    if (!is_proper(g, c)) throw Error("natural orientation requires a proper coloring");
    std::vector<std::pair<int, int>> arcs;
    arcs.reserve(g.edge_count());
    for (auto [u, v] : g.edges()) {
        if (c.rank_of(c.color_of(u)) > c.rank_of(c.color_of(v)))
            arcs.emplace_back(u, v);
        else
            arcs.emplace_back(v, u);
    }
    return OrientedGraph::from_arcs(g.vertex_count(), arcs);
}

CheckResult check_outtree_coloring(const OrientedGraph& d, const Coloring& c) {
    if (!is_proper(d.underlying(), c)) throw Error("out-tree check requires a proper coloring");
    const auto& order = c.order();
    const int n = d.vertex_count();
    for (int v = 0; v < n; ++v) {
        int rank = c.rank_of(c.color_of(v));
        std::vector<char> present(rank, 0);
        for (int u : d.out_neighbors(v)) {
            int ur = c.rank_of(c.color_of(u));
            if (ur < rank) present[ur] = 1;
        }
        for (int p = 0; p < rank; ++p)
            if (!present[p]) return {false, v, order[p]};
    }
    return {};
}

CheckResult check_parity_coloring(const OrientedGraph& d, const Coloring& c) {
    if (!is_proper(d.underlying(), c)) throw Error("parity check requires a proper coloring");
    const int n = d.vertex_count();
    for (int v = 0; v < n; ++v) {
        int own = c.color_of(v);
        std::vector<char> present(own, 0);
        for (int u : d.out_neighbors(v)) {
            int cu = c.color_of(u);
            if (cu < own && cu % 2 == 0) present[cu] = 1;
        }
        for (int u : d.in_neighbors(v)) {
            int cu = c.color_of(u);
            if (cu < own && cu % 2 == 1) present[cu] = 1;
        }
        for (int col = 1; col < own; ++col)
            if (!present[col]) return {false, v, col};
    }
    return {};
}

Coloring level_coloring(const OrientedGraph& d) {
    if (!is_acyclic(d)) throw Error("level coloring requires an acyclic digraph");
    const int n = d.vertex_count();
    std::vector<int> remaining_out(n), level(n, 0);
    std::vector<int> frontier;
    for (int v = 0; v < n; ++v) {
        remaining_out[v] = d.out_degree(v);
        if (remaining_out[v] == 0) {
            level[v] = 1;
            frontier.push_back(v);
        }
    }
    // Peel one sink layer at a time; a vertex joins layer i+1 once its last
    // out-neighbor left in some layer <= i.
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int v : frontier)
            for (int u : d.in_neighbors(v))
                if (--remaining_out[u] == 0) next.push_back(u);
        for (int u : next) {
            int deepest = 0;
            for (int w : d.out_neighbors(u)) deepest = std::max(deepest, level[w]);
            level[u] = deepest + 1;
        }
        frontier = std::move(next);
    }
    return Coloring(std::move(level));
}

bool is_kernel(const OrientedGraph& d, const std::vector<int>& s, KernelKind kind) {
    const int n = d.vertex_count();
    std::vector<char> in_s(n, 0);
    for (int v : s) {
        if (v < 0 || v >= n) return false;
        in_s[v] = 1;
    }
    for (int v : s)
        for (int u : d.out_neighbors(v))
            if (in_s[u]) return false;
    for (int v = 0; v < n; ++v) {
        if (in_s[v]) continue;
        bool reached = false;
        const auto& probe =
            kind == KernelKind::Kernel ? d.out_neighbors(v) : d.in_neighbors(v);
        for (int u : probe)
            if (in_s[u]) reached = true;
        if (!reached) return false;
    }
    return true;
}

namespace {

std::optional<std::vector<int>> kernel_dag_greedy(const OrientedGraph& d) {
    auto topo = topological_order(d);
    if (!topo) throw Error("greedy kernel computation requires an acyclic digraph");
    const int n = d.vertex_count();
    std::vector<char> chosen(n, 0);
    for (auto it = topo->rbegin(); it != topo->rend(); ++it) {
        int v = *it;
        bool blocked = false;
        for (int u : d.out_neighbors(v))
            if (chosen[u]) blocked = true;
        if (!blocked) chosen[v] = 1;
    }
    std::vector<int> s;
    for (int v = 0; v < n; ++v)
        if (chosen[v]) s.push_back(v);
    return s;
}

// Decide membership vertex by vertex. A vertex may stay out only while it
// can still gain an out-neighbor in S among later vertices or already has
// one; S stays independent throughout.
struct KernelBacktrack {
    const OrientedGraph& d;
    std::vector<char> in_s;
    std::vector<int> picked;

    explicit KernelBacktrack(const OrientedGraph& dd)
        : d(dd), in_s(dd.vertex_count(), 0) {}

    bool feasible_out(int v, int decided_up_to) const {
        for (int u : d.out_neighbors(v)) {
            if (u <= decided_up_to && in_s[u]) return true;
            if (u > decided_up_to) return true;
        }
        return false;
    }

    bool solve(int v) {
        const int n = d.vertex_count();
        if (v == n) {
            std::vector<int> s;
            for (int w = 0; w < n; ++w)
                if (in_s[w]) s.push_back(w);
            return is_kernel(d, s, KernelKind::Kernel);
        }
        bool independent = true;
        for (int u : d.out_neighbors(v))
            if (u < v && in_s[u]) independent = false;
        for (int u : d.in_neighbors(v))
            if (u < v && in_s[u]) independent = false;
        if (independent) {
            in_s[v] = 1;
            if (solve(v + 1)) return true;
            in_s[v] = 0;
        }
        if (feasible_out(v, v)) {
            if (solve(v + 1)) return true;
        }
        return false;
    }
};

std::optional<std::vector<int>> kernel_backtracking(const OrientedGraph& d, int guard_n) {
    if (d.vertex_count() > guard_n)
        throw Error("kernel backtracking guarded to " + std::to_string(guard_n) + " vertices");
    KernelBacktrack search(d);
    if (!search.solve(0)) return std::nullopt;
    std::vector<int> s;
    for (int v = 0; v < d.vertex_count(); ++v)
        if (search.in_s[v]) s.push_back(v);
    return s;
}

} // namespace

std::optional<std::vector<int>> kernel_set(const OrientedGraph& d, KernelKind kind,
                                           KernelMethod method, int guard_n) {
    const OrientedGraph* target = &d;
    OrientedGraph reversed = OrientedGraph::from_arcs(0, {});
    if (kind == KernelKind::Antikernel) {
        reversed = reverse(d);
        target = &reversed;
    }
    if (method == KernelMethod::DagGreedy) return kernel_dag_greedy(*target);
    return kernel_backtracking(*target, guard_n);
}

ParityColoringResult parity_coloring(const OrientedGraph& d, int guard_n) {
    const int n = d.vertex_count();
    const bool acyclic = is_acyclic(d);
    std::vector<int> gamma(n, 0);
    PeelLayers layers;
    layers.kind = PeelLayers::Kind::KernelAlternation;

    std::vector<int> alive(n);
    for (int v = 0; v < n; ++v) alive[v] = v;
    int layer_index = 0;
    while (!alive.empty()) {
        ++layer_index;
        auto residual = induced_subgraph(d, alive);
        KernelKind kind = layer_index % 2 == 1 ? KernelKind::Antikernel : KernelKind::Kernel;
        auto s = kernel_set(residual.graph, kind,
                            acyclic ? KernelMethod::DagGreedy : KernelMethod::Backtracking,
                            guard_n);
        if (!s || s->empty())
            throw Error("no " +
                        std::string(kind == KernelKind::Kernel ? "kernel" : "antikernel") +
                        " in the residual digraph at layer " + std::to_string(layer_index));
        std::vector<int> layer;
        std::vector<char> remove(alive.size(), 0);
        for (int local : *s) {
            layer.push_back(residual.original_of[local]);
            remove[local] = 1;
        }
        std::sort(layer.begin(), layer.end());
        for (int v : layer) gamma[v] = layer_index;
        layers.layers.push_back(std::move(layer));
        std::vector<int> next;
        for (std::size_t i = 0; i < alive.size(); ++i)
            if (!remove[i]) next.push_back(alive[i]);
        alive = std::move(next);
    }
    return {Coloring(std::move(gamma)), std::move(layers)};
}

} // namespace rainbow
