#include "rainbow/oracle.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "rainbow/error.hpp"

namespace rainbow {

namespace {

void check_enumeration_guards(const UndirectedGraph& g, const Coloring& c, int s, int guard_n,
                              int guard_s) {
    if (g.vertex_count() > guard_n)
        throw Error("path enumeration guard: graph has " + std::to_string(g.vertex_count()) +
                    " vertices, limit is " + std::to_string(guard_n));
    if (s < 1) throw Error("path enumeration needs a positive vertex count, got " +
                           std::to_string(s));
    if (s > guard_s)
        throw Error("path enumeration guard: length " + std::to_string(s) + " exceeds limit " +
                    std::to_string(guard_s));
    if (c.vertex_count() != g.vertex_count())
        throw Error("coloring covers " + std::to_string(c.vertex_count()) +
                    " vertices but the graph has " + std::to_string(g.vertex_count()));
    if (!is_proper(g, c)) throw Error("enumeration requires a proper coloring");
}

} // namespace

std::vector<CanonicalPath> enumerate_induced_rainbow_paths(const UndirectedGraph& g,
                                                           const Coloring& c, int s, int guard_n,
                                                           int guard_s) {
    check_enumeration_guards(g, c, s, guard_n, guard_s);
    const int n = g.vertex_count();
    std::set<std::vector<int>> found;
    if (s == 1) {
        for (int v = 0; v < n; ++v) found.insert({v});
    } else {
        std::vector<int> path;
        std::vector<char> on_path(n, 0);
        std::vector<char> rank_used(c.color_count(), 0);
        std::function<void()> extend = [&]() {
            if (static_cast<int>(path.size()) == s) {
                if (path.front() < path.back())
                    found.insert(path);
                else
                    found.emplace(path.rbegin(), path.rend());
                return;
            }
            for (int u : g.neighbors(path.back())) {
                if (on_path[u]) continue;
                int rank = c.rank_of(c.color_of(u));
                if (rank_used[rank]) continue;
                bool induced = true;
                for (std::size_t j = 0; j + 1 < path.size(); ++j)
                    if (g.has_edge(u, path[j])) {
                        induced = false;
                        break;
                    }
                if (!induced) continue;
                path.push_back(u);
                on_path[u] = 1;
                rank_used[rank] = 1;
                extend();
                rank_used[rank] = 0;
                on_path[u] = 0;
                path.pop_back();
            }
        };
        for (int v = 0; v < n; ++v) {
            path.assign(1, v);
            on_path[v] = 1;
            rank_used[c.rank_of(c.color_of(v))] = 1;
            extend();
            rank_used[c.rank_of(c.color_of(v))] = 0;
            on_path[v] = 0;
        }
    }
    std::vector<CanonicalPath> out;
    out.reserve(found.size());
    for (const auto& p : found) out.push_back(CanonicalPath{p});
    return out;
}

int mu(const UndirectedGraph& g, const Coloring& c, int guard_n, int guard_s) {
    if (g.vertex_count() == 0) throw Error("mu is undefined for a graph with no vertices");
    const int cap = std::min(g.vertex_count(), c.color_count());
    int best = 0;
    for (int s = 1; s <= cap; ++s) {
        if (s > guard_s)
            throw Error("mu scan would enumerate paths on " + std::to_string(s) +
                        " vertices, beyond the guard of " + std::to_string(guard_s));
        if (enumerate_induced_rainbow_paths(g, c, s, guard_n, guard_s).empty()) break;
        best = s;
    }
    return best;
}

namespace {

// Tree relation matrix: 0 = non-adjacent, 1 = arc row->col, 2 = arc col->row.
std::vector<std::vector<int>> tree_relation(const RootedOrientedTree& t) {
    const int s = t.vertex_count();
    std::vector<std::vector<int>> rel(s, std::vector<int>(s, 0));
    for (auto [a, b] : t.arcs()) {
        rel[a][b] = 1;
        rel[b][a] = 2;
    }
    return rel;
}

struct CopySearch {
    const RootedOrientedTree& pattern;
    std::vector<int> order;                 // pattern vertices, parent before child
    std::vector<std::vector<int>> rel;      // tree relation matrix
    std::vector<int> image;                 // pattern vertex -> host vertex or -1
    std::vector<char> used;
    // Host accessors; the undirected overload treats both arc senses alike.
    std::function<const std::vector<int>&(int, int)> candidates; // (host of parent, relation)
    std::function<bool(int, int, int)> pair_ok;                  // (relation, host a, host b)

    explicit CopySearch(const RootedOrientedTree& t)
        : pattern(t), order(t.dfs_order()), rel(tree_relation(t)),
          image(t.vertex_count(), -1) {}

    bool place(int idx, int host_n) {
        if (idx == static_cast<int>(order.size())) return true;
        const int tv = order[idx];
        auto try_host = [&](int h) {
            if (used[h]) return false;
            for (int j = 0; j < idx; ++j) {
                int placed = order[j];
                if (!pair_ok(rel[tv][placed], h, image[placed])) return false;
            }
            image[tv] = h;
            used[h] = 1;
            if (place(idx + 1, host_n)) return true;
            used[h] = 0;
            image[tv] = -1;
            return false;
        };
        if (idx == 0) {
            for (int h = 0; h < host_n; ++h)
                if (try_host(h)) return true;
        } else {
            int parent = pattern.parent_of(tv);
            for (int h : candidates(image[parent], rel[parent][tv]))
                if (try_host(h)) return true;
        }
        return false;
    }
};

void check_copy_guard(int host_n, int guard_n) {
    if (host_n > guard_n)
        throw Error("induced-copy guard: host has " + std::to_string(host_n) +
                    " vertices, limit is " + std::to_string(guard_n));
}

} // namespace

std::optional<std::vector<int>> contains_induced_copy(const UndirectedGraph& host,
                                                      const RootedOrientedTree& pattern,
                                                      int guard_n) {
    check_copy_guard(host.vertex_count(), guard_n);
    if (pattern.vertex_count() > host.vertex_count()) return std::nullopt;
    CopySearch search(pattern);
    search.used.assign(host.vertex_count(), 0);
    search.candidates = [&host](int h, int) -> const std::vector<int>& {
        return host.neighbors(h);
    };
    search.pair_ok = [&host](int relation, int a, int b) {
        return host.has_edge(a, b) == (relation != 0);
    };
    if (search.place(0, host.vertex_count())) return search.image;
    return std::nullopt;
}

std::optional<std::vector<int>> contains_induced_copy(const OrientedGraph& host,
                                                      const RootedOrientedTree& pattern,
                                                      int guard_n) {
    check_copy_guard(host.vertex_count(), guard_n);
    if (pattern.vertex_count() > host.vertex_count()) return std::nullopt;
    CopySearch search(pattern);
    search.used.assign(host.vertex_count(), 0);
    search.candidates = [&host](int h, int relation) -> const std::vector<int>& {
        // relation is rel[parent][child]: 1 = arc parent->child in the tree.
        return relation == 1 ? host.out_neighbors(h) : host.in_neighbors(h);
    };
    search.pair_ok = [&host](int relation, int a, int b) {
        // a plays the row role, so relation 1 demands the host arc a->b.
        bool fwd = false, rev = false;
        for (int w : host.out_neighbors(a))
            if (w == b) fwd = true;
        for (int w : host.in_neighbors(a))
            if (w == b) rev = true;
        if (relation == 0) return !fwd && !rev;
        if (relation == 1) return fwd && !rev;
        return rev && !fwd;
    };
    if (search.place(0, host.vertex_count())) return search.image;
    return std::nullopt;
}

AravindReport aravind_scan(const std::vector<UndirectedGraph>& corpus, int colorings_per_graph,
                           unsigned long long seed, int guard_chi_n, int guard_path_n,
                           int guard_path_s) {
    if (colorings_per_graph < 1) throw Error("the scan needs at least one coloring per graph");
    AravindReport report;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const auto& g = corpus[i];
        auto cycle = girth(g);
        if (g.vertex_count() == 0 || (cycle.has_value() && *cycle == 3)) {
            report.skipped.push_back(static_cast<int>(i));
            continue;
        }
        const int chi = chromatic_number_exact(g, guard_chi_n).chi;
        for (int t = 0; t < colorings_per_graph; ++t) {
            unsigned long long derived = seed + 1000003ull * i + static_cast<unsigned long long>(t);
            Coloring c = sample_k_coloring(g, chi, derived);
            auto paths = enumerate_induced_rainbow_paths(g, c, chi, guard_path_n, guard_path_s);
            ++report.instances_checked;
            if (paths.empty())
                report.counterexamples.push_back({static_cast<int>(i), std::move(c)});
        }
    }
    return report;
}

} // namespace rainbow
