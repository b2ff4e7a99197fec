#include "rainbow/graph_ops.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <string>

#include "rainbow/error.hpp"

namespace rainbow {

namespace {

// Intersection of two sorted vectors.
std::vector<int> common_sorted(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

} // namespace

std::optional<int> girth(const UndirectedGraph& g) {
    const int n = g.vertex_count();
    int best = -1;
    std::vector<int> dist(n), parent(n);
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        dist[s] = 0;
        std::deque<int> queue{s};
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int v : g.neighbors(u)) {
                if (dist[v] == -1) {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    queue.push_back(v);
                } else if (v != parent[u]) {
                    int cycle = dist[u] + dist[v] + 1;
                    if (best == -1 || cycle < best) best = cycle;
                }
            }
        }
    }
    if (best == -1) return std::nullopt;
    return best;
}

std::optional<int> girth(const OrientedGraph& d) { return girth(d.underlying()); }

std::optional<K2rWitness> find_k2r(const UndirectedGraph& g, int r) {
    if (r < 2) throw Error("witness patterns require r >= 2");
    const int n = g.vertex_count();
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            auto shared = common_sorted(g.neighbors(a), g.neighbors(b));
            std::erase_if(shared, [&](int x) { return x == a || x == b; });
            if (static_cast<int>(shared.size()) >= r) {
                shared.resize(r);
                return K2rWitness{a, b, std::move(shared)};
            }
        }
    }
    return std::nullopt;
}

std::optional<K2rWitness> find_k2r(const OrientedGraph& d, int r) {
    return find_k2r(d.underlying(), r);
}

std::optional<BrWitness> find_br(const OrientedGraph& d, int r) {
    if (r < 2) throw Error("witness patterns require r >= 2");
    const int n = d.vertex_count();
    std::vector<int> nb;
    for (int a = 0; a < n; ++a) {
        const auto& outs = d.out_neighbors(a);
        if (static_cast<int>(outs.size()) < r) continue;
        for (int b = 0; b < n; ++b) {
            if (b == a) continue;
            nb.clear();
            std::merge(d.out_neighbors(b).begin(), d.out_neighbors(b).end(),
                       d.in_neighbors(b).begin(), d.in_neighbors(b).end(),
                       std::back_inserter(nb));
            auto middles = common_sorted(outs, nb);
            std::erase_if(middles, [&](int x) { return x == b; });
            if (static_cast<int>(middles.size()) >= r) {
                middles.resize(r);
                return BrWitness{a, b, std::move(middles)};
            }
        }
    }
    return std::nullopt;
}

bool is_proper(const UndirectedGraph& g, const Coloring& c) {
    if (c.vertex_count() != g.vertex_count()) return false;
    for (auto [u, v] : g.edges())
        if (c.color_of(u) == c.color_of(v)) return false;
    return true;
}

Coloring greedy_coloring(const UndirectedGraph& g, const std::vector<int>& vertex_order) {
    const int n = g.vertex_count();
    if (static_cast<int>(vertex_order.size()) != n)
        throw Error("vertex order must cover every vertex exactly once");
    std::vector<char> seen(n, 0);
    for (int v : vertex_order) {
        if (v < 0 || v >= n || seen[v]) throw Error("vertex order must be a permutation");
        seen[v] = 1;
    }
    std::vector<int> color(n, 0);
    std::vector<char> taken(n + 2, 0);
    for (int v : vertex_order) {
        for (int u : g.neighbors(v)) taken[color[u]] = 1;
        int c = 1;
        while (taken[c]) ++c;
        color[v] = c;
        for (int u : g.neighbors(v)) taken[color[u]] = 0;
    }
    return Coloring(std::move(color));
}

namespace {

// Greedy clique: grow from each vertex, always adding the candidate with the
// most remaining candidates as neighbors. A cheap but useful lower bound.
int greedy_clique_size(const UndirectedGraph& g) {
    const int n = g.vertex_count();
    int best = n > 0 ? 1 : 0;
    for (int s = 0; s < n; ++s) {
        std::vector<int> cand;
        for (int v : g.neighbors(s)) cand.push_back(v);
        int size = 1;
        while (!cand.empty()) {
            int pick = -1, pick_score = -1;
            for (int v : cand) {
                int score = 0;
                for (int w : cand)
                    if (w != v && g.has_edge(v, w)) ++score;
                if (score > pick_score) {
                    pick_score = score;
                    pick = v;
                }
            }
            ++size;
            std::vector<int> next;
            for (int w : cand)
                if (w != pick && g.has_edge(pick, w)) next.push_back(w);
            cand = std::move(next);
        }
        best = std::max(best, size);
    }
    return best;
}

// DSATUR-ordered backtracking search for a proper k-coloring. The color
// permutation hook lets callers randomize branch order without touching
// completeness; tie-breaking among saturation/degree ties is by the shuffled
// vertex list, so different seeds explore genuinely different colorings.
struct KColorSearch {
    const UndirectedGraph& g;
    int k;
    std::vector<int> color;                 // 1..k, 0 = unset
    std::vector<int> vertex_pref;           // tie-break order
    std::vector<std::vector<int>> color_pref; // per-vertex candidate order
    bool randomized = false;

    explicit KColorSearch(const UndirectedGraph& graph, int kk) : g(graph), k(kk) {
        const int n = g.vertex_count();
        color.assign(n, 0);
        vertex_pref.resize(n);
        for (int i = 0; i < n; ++i) vertex_pref[i] = i;
    }

    void shuffle(std::uint64_t seed) {
        randomized = true;
        std::mt19937_64 rng(seed);
        const int n = g.vertex_count();
        for (int i = n - 1; i > 0; --i)
            std::swap(vertex_pref[i], vertex_pref[static_cast<int>(rng() % (i + 1))]);
        color_pref.assign(n, {});
        for (int v = 0; v < n; ++v) {
            auto& pref = color_pref[v];
            pref.resize(k);
            for (int c = 0; c < k; ++c) pref[c] = c + 1;
            for (int i = k - 1; i > 0; --i)
                std::swap(pref[i], pref[static_cast<int>(rng() % (i + 1))]);
        }
    }

    int saturation(int v) const {
        std::vector<char> seen(k + 1, 0);
        int sat = 0;
        for (int u : g.neighbors(v))
            if (color[u] && !seen[color[u]]) {
                seen[color[u]] = 1;
                ++sat;
            }
        return sat;
    }

    int pick_vertex() const {
        int best = -1, best_sat = -1, best_deg = -1;
        for (int v : vertex_pref) {
            if (color[v]) continue;
            int sat = saturation(v);
            int deg = g.degree(v);
            if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
                best = v;
                best_sat = sat;
                best_deg = deg;
            }
        }
        return best;
    }

    bool solve(int colored, int max_used) {
        const int n = g.vertex_count();
        if (colored == n) return true;
        int v = pick_vertex();
        std::vector<char> forbidden(k + 1, 0);
        for (int u : g.neighbors(v))
            if (color[u]) forbidden[color[u]] = 1;
        // Without randomization, cap fresh colors at max_used+1 to break the
        // color-permutation symmetry; with it, allow any of the k colors so
        // seeds can reach every proper coloring.
        int cap = randomized ? k : std::min(k, max_used + 1);
        if (!randomized) {
            for (int c = 1; c <= cap; ++c) {
                if (forbidden[c]) continue;
                color[v] = c;
                if (solve(colored + 1, std::max(max_used, c))) return true;
                color[v] = 0;
            }
        } else {
            for (int c : color_pref[v]) {
                if (c > cap || forbidden[c]) continue;
                color[v] = c;
                if (solve(colored + 1, std::max(max_used, c))) return true;
                color[v] = 0;
            }
        }
        return false;
    }
};

Coloring dsatur_greedy(const UndirectedGraph& g) {
    const int n = g.vertex_count();
    std::vector<int> color(n, 0);
    for (int step = 0; step < n; ++step) {
        int best = -1, best_sat = -1, best_deg = -1;
        for (int v = 0; v < n; ++v) {
            if (color[v]) continue;
            std::vector<char> seen(n + 2, 0);
            int sat = 0;
            for (int u : g.neighbors(v))
                if (color[u] && !seen[color[u]]) {
                    seen[color[u]] = 1;
                    ++sat;
                }
            if (sat > best_sat || (sat == best_sat && g.degree(v) > best_deg)) {
                best = v;
                best_sat = sat;
                best_deg = g.degree(v);
            }
        }
        std::vector<char> taken(n + 2, 0);
        for (int u : g.neighbors(best))
            if (color[u]) taken[color[u]] = 1;
        int c = 1;
        while (taken[c]) ++c;
        color[best] = c;
    }
    return Coloring(std::move(color));
}

} // namespace

ChromaticResult chromatic_number_exact(const UndirectedGraph& g, int guard_n) {
    const int n = g.vertex_count();
    if (n > guard_n)
        throw Error("exact chromatic number guarded to " + std::to_string(guard_n) +
                    " vertices, got " + std::to_string(n));
    if (n == 0) return {0, Coloring(std::vector<int>{})};
    Coloring greedy = dsatur_greedy(g);
    int ub = greedy.color_count();
    int lb = greedy_clique_size(g);
    for (int k = lb; k < ub; ++k) {
        KColorSearch search(g, k);
        if (search.solve(0, 0)) return {k, Coloring(std::move(search.color))};
    }
    return {ub, std::move(greedy)};
}

Coloring sample_k_coloring(const UndirectedGraph& g, int k, std::uint64_t seed, int guard_n) {
    const int n = g.vertex_count();
    if (n > guard_n)
        throw Error("k-coloring search guarded to " + std::to_string(guard_n) + " vertices");
    if (k < 1) throw Error("k must be positive");
    KColorSearch search(g, k);
    search.shuffle(seed);
    if (!search.solve(0, 0))
        throw Error("graph admits no proper " + std::to_string(k) + "-coloring");
    return Coloring(std::move(search.color));
}

OrientedGraph reverse(const OrientedGraph& d) {
    std::vector<std::pair<int, int>> flipped;
    flipped.reserve(d.arc_count());
    for (auto [u, v] : d.arcs()) flipped.emplace_back(v, u);
    return OrientedGraph::from_arcs(d.vertex_count(), flipped);
}

namespace {

std::vector<int> relabel_map(int n, const std::vector<int>& verts) {
    std::vector<int> new_of(n, -1);
    for (int i = 0; i < static_cast<int>(verts.size()); ++i) {
        int v = verts[i];
        if (v < 0 || v >= n) throw Error("induce: vertex out of range");
        if (new_of[v] != -1) throw Error("induce: repeated vertex");
        new_of[v] = i;
    }
    return new_of;
}

} // namespace

InducedUndirected induced_subgraph(const UndirectedGraph& g, const std::vector<int>& verts) {
    auto new_of = relabel_map(g.vertex_count(), verts);
    std::vector<std::pair<int, int>> edges;
    for (int v : verts)
        for (int u : g.neighbors(v))
            if (v < u && new_of[u] != -1) edges.emplace_back(new_of[v], new_of[u]);
    return {UndirectedGraph::from_edges(static_cast<int>(verts.size()), edges), verts};
}

InducedOriented induced_subgraph(const OrientedGraph& d, const std::vector<int>& verts) {
    auto new_of = relabel_map(d.vertex_count(), verts);
    std::vector<std::pair<int, int>> arcs;
    for (int v : verts)
        for (int u : d.out_neighbors(v))
            if (new_of[u] != -1) arcs.emplace_back(new_of[v], new_of[u]);
    return {OrientedGraph::from_arcs(static_cast<int>(verts.size()), arcs), verts};
}

std::optional<std::vector<int>> topological_order(const OrientedGraph& d) {
    const int n = d.vertex_count();
    std::vector<int> indeg(n);
    for (int v = 0; v < n; ++v) indeg[v] = d.in_degree(v);
    std::vector<int> order;
    order.reserve(n);
    for (int v = 0; v < n; ++v)
        if (indeg[v] == 0) order.push_back(v);
    for (std::size_t head = 0; head < order.size(); ++head)
        for (int u : d.out_neighbors(order[head]))
            if (--indeg[u] == 0) order.push_back(u);
    if (static_cast<int>(order.size()) != n) return std::nullopt;
    return order;
}

bool is_acyclic(const OrientedGraph& d) { return topological_order(d).has_value(); }

namespace {

void check_image(int host_n, const RootedOrientedTree& tree, const std::vector<int>& image) {
    if (static_cast<int>(image.size()) != tree.vertex_count())
        throw Error("image size does not match the tree");
    std::vector<char> used(host_n, 0);
    for (int h : image) {
        if (h < 0 || h >= host_n) throw Error("image vertex out of range");
        if (used[h]) throw Error("image is not injective");
        used[h] = 1;
    }
}

std::optional<bool> color_flags(const RootedOrientedTree& tree, const std::vector<int>& image,
                                const Coloring* coloring, std::optional<bool>* decreasing) {
    if (!coloring) {
        *decreasing = std::nullopt;
        return std::nullopt;
    }
    bool rainbow = true;
    std::vector<int> seen;
    for (int h : image) {
        int c = coloring->color_of(h);
        if (std::find(seen.begin(), seen.end(), c) != seen.end()) rainbow = false;
        seen.push_back(c);
    }
    bool decr = true;
    for (int v = 0; v < tree.vertex_count(); ++v) {
        int p = tree.parent_of(v);
        if (p == -1) continue;
        if (coloring->rank_of(coloring->color_of(image[p])) <=
            coloring->rank_of(coloring->color_of(image[v])))
            decr = false;
    }
    *decreasing = decr;
    return rainbow;
}

} // namespace

Verdict verify_embedding(const UndirectedGraph& host, const RootedOrientedTree& tree,
                         const std::vector<int>& image, const Coloring* coloring) {
    check_image(host.vertex_count(), tree, image);
    Verdict verdict;
    verdict.induced = true;
    const int s = tree.vertex_count();
    for (int i = 0; i < s && verdict.induced; ++i)
        for (int j = i + 1; j < s; ++j)
            if (host.has_edge(image[i], image[j]) != tree.adjacent(i, j)) {
                verdict.induced = false;
                break;
            }
    verdict.direction_exact = std::nullopt;
    verdict.rainbow = color_flags(tree, image, coloring, &verdict.decreasing);
    return verdict;
}

Verdict verify_embedding(const OrientedGraph& host, const RootedOrientedTree& tree,
                         const std::vector<int>& image, const Coloring* coloring) {
    check_image(host.vertex_count(), tree, image);
    Verdict verdict;
    verdict.induced = true;
    const int s = tree.vertex_count();
    for (int i = 0; i < s && verdict.induced; ++i)
        for (int j = i + 1; j < s; ++j)
            if (host.adjacent(image[i], image[j]) != tree.adjacent(i, j)) {
                verdict.induced = false;
                break;
            }
    bool exact = true;
    for (auto [u, v] : tree.arcs())
        if (!host.has_arc(image[u], image[v])) exact = false;
    verdict.direction_exact = exact;
    verdict.rainbow = color_flags(tree, image, coloring, &verdict.decreasing);
    return verdict;
}

} // namespace rainbow
