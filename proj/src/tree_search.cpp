#include "rainbow/tree_search.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "rainbow/coloring_ops.hpp"
#include "rainbow/error.hpp"

namespace rainbow {

namespace {

// Color rank in 1..k under the coloring's declared order.
int rank1(const Coloring& c, int v) { return c.rank_of(c.color_of(v)) + 1; }

// Least-index out-neighbor of u in d carrying rank t. Frozen by index order,
// so replaying a search reproduces the same representatives.
int representative(const OrientedGraph& d, const Coloring& alpha, int u, int t) {
    for (int w : d.out_neighbors(u))
        if (rank1(alpha, w) == t) return w;
    return -1;
}

} // namespace

SearchOutcome good_tree_search(const OrientedGraph& adjacency_host, const OrientedGraph& arc_host,
                               const Coloring& alpha, const RootedOrientedTree& pattern) {
    const int n = arc_host.vertex_count();
    if (adjacency_host.vertex_count() != n)
        throw Error("the two hosts must share one vertex set");
    if (n == 0) throw Error("the host graph is empty");
    for (auto [u, v] : arc_host.arcs())
        if (!adjacency_host.has_arc(u, v))
            throw Error("arc host is not a subgraph of the adjacency host");
    auto coloring_check = check_outtree_coloring(arc_host, alpha);
    if (!coloring_check.ok)
        throw Error("not an out-tree coloring: vertex " + std::to_string(coloring_check.vertex) +
                    " lacks color " + std::to_string(coloring_check.missing_color) +
                    " among its out-neighbors");
    if (!pattern.is_out_tree()) throw Error("pattern must be an out-tree");

    SearchTrace trace{adjacency_host, arc_host,        alpha, pattern,
                      pattern.topo_order(), std::vector<int>{}, false, -1};
    const auto& order = trace.pattern_order;
    const int k = alpha.color_count();
    const int s = pattern.vertex_count();
    std::vector<int> image(s, -1);

    int start = -1;
    for (int v = 0; v < n && start < 0; ++v)
        if (rank1(alpha, v) == k) start = v;
    if (start < 0) throw Error("no vertex carries the top color");
    image[order[0]] = start;
    trace.placed.push_back(start);

    for (int j = 1; j < s; ++j) {
        const int parent_host = image[pattern.parent_of(order[j])];
        const int scan_top = rank1(alpha, trace.placed.back()) - 1;
        int chosen = -1;
        for (int t = scan_top; t >= 1 && chosen < 0; --t) {
            int x = representative(arc_host, alpha, parent_host, t);
            if (x < 0) continue;
            bool blocked = false;
            for (int y : trace.placed) {
                if (y == parent_host) continue;
                if (adjacency_host.adjacent(x, y)) {
                    blocked = true;
                    break;
                }
            }
            if (!blocked) chosen = x;
        }
        if (chosen < 0) {
            trace.stuck_order_position = j;
            return SearchOutcome{std::nullopt, std::move(trace)};
        }
        image[order[j]] = chosen;
        trace.placed.push_back(chosen);
    }

    Embedding result{pattern, Host{adjacency_host}, image,
                     verify_embedding(adjacency_host, pattern, image, &alpha)};
    return SearchOutcome{std::move(result), std::move(trace)};
}

namespace {

// The same underlying tree with every edge pointed away from the root, so
// the core search can treat an arbitrarily rooted pattern as an out-tree.
RootedOrientedTree away_from_root(const RootedOrientedTree& pattern) {
    std::vector<std::pair<int, int>> arcs;
    for (int v = 0; v < pattern.vertex_count(); ++v)
        if (v != pattern.root()) arcs.emplace_back(pattern.parent_of(v), v);
    return RootedOrientedTree(pattern.vertex_count(), arcs, pattern.root());
}

} // namespace

SearchOutcome decreasing_tree_search(const UndirectedGraph& g, const Coloring& beta,
                                     const RootedOrientedTree& pattern) {
    Coloring alpha = greedy_refinement(g, beta).alpha;
    OrientedGraph oriented = natural_orientation(g, alpha);
    std::vector<std::pair<int, int>> kept;
    for (auto [u, v] : oriented.arcs())
        if (beta.rank_of(beta.color_of(u)) > beta.rank_of(beta.color_of(v)))
            kept.emplace_back(u, v);
    OrientedGraph decreasing = OrientedGraph::from_arcs(g.vertex_count(), kept);

    RootedOrientedTree out_pattern = away_from_root(pattern);
    SearchOutcome inner = good_tree_search(oriented, decreasing, alpha, out_pattern);
    if (!inner.success()) return inner;
    Embedding result{out_pattern, Host{g}, inner.embedding->image,
                     verify_embedding(g, out_pattern, inner.embedding->image, &beta)};
    return SearchOutcome{std::move(result), std::move(inner.trace)};
}

RainbowPathsResult rainbow_paths_harness(const UndirectedGraph& g, const Coloring& beta, int s,
                                         const OrderingPlan& plan, int guard_k) {
    if (s < 1) throw Error("path pattern needs at least one vertex");
    if (!is_proper(g, beta)) throw Error("harness requires a proper coloring");

    std::vector<std::pair<int, int>> arcs;
    for (int i = 0; i + 1 < s; ++i) arcs.emplace_back(i, i + 1);
    RootedOrientedTree chain(s, arcs, 0);

    std::vector<std::vector<int>> orderings;
    std::vector<int> colors = beta.order();
    if (plan.kind == OrderingPlan::Kind::All) {
        if (beta.color_count() > guard_k)
            throw Error("all-orderings guard: " + std::to_string(beta.color_count()) +
                        " colors exceed the limit of " + std::to_string(guard_k));
        std::sort(colors.begin(), colors.end());
        do
            orderings.push_back(colors);
        while (std::next_permutation(colors.begin(), colors.end()));
    } else {
        if (plan.sample_count < 1) throw Error("sample count must be positive");
        std::mt19937_64 rng(plan.seed);
        for (int i = 0; i < plan.sample_count; ++i) {
            for (int j = static_cast<int>(colors.size()) - 1; j > 0; --j)
                std::swap(colors[j], colors[rng() % static_cast<unsigned long long>(j + 1)]);
            orderings.push_back(colors);
        }
    }

    RainbowPathsResult result;
    std::set<std::vector<int>> canonical;
    for (const auto& ord : orderings) {
        ++result.orderings_tried;
        Coloring reordered = beta.with_order(ord);
        SearchOutcome outcome = decreasing_tree_search(g, reordered, chain);
        if (!outcome.success()) continue;
        ++result.successes;
        const Verdict& verdict = outcome.embedding->verdict;
        if (!verdict.induced || verdict.rainbow != std::optional<bool>(true) ||
            verdict.decreasing != std::optional<bool>(true))
            throw Error("internal: a produced path failed re-verification");
        std::vector<int> path = outcome.embedding->image;
        if (s >= 2 && path.front() > path.back()) std::reverse(path.begin(), path.end());
        canonical.insert(std::move(path));
    }
    for (const auto& p : canonical) result.paths.push_back(CanonicalPath{p});
    return result;
}

SearchOutcome dag_tree_embedding(const OrientedGraph& d, const RootedOrientedTree& pattern,
                                 const Coloring* supplied_coloring) {
    if (!is_acyclic(d)) throw Error("host must be acyclic");
    if (pattern.is_out_tree()) {
        Coloring alpha;
        if (supplied_coloring) {
            auto check = check_outtree_coloring(d, *supplied_coloring);
            if (!check.ok)
                throw Error("supplied coloring fails the out-tree check: vertex " +
                            std::to_string(check.vertex) + " lacks color " +
                            std::to_string(check.missing_color));
            alpha = *supplied_coloring;
        } else {
            alpha = greedy_refinement(d.underlying(), level_coloring(d)).alpha;
            auto check = check_outtree_coloring(d, alpha);
            if (!check.ok) throw Error("internal: refined level coloring failed the check");
        }
        return good_tree_search(d, d, alpha, pattern);
    }
    if (pattern.is_in_tree()) {
        if (supplied_coloring)
            throw Error("a supplied coloring applies only to out-tree patterns");
        SearchOutcome inner = dag_tree_embedding(reverse(d), pattern.reversed(), nullptr);
        if (!inner.success()) return inner;
        Embedding result{pattern, Host{d}, inner.embedding->image,
                         verify_embedding(d, pattern, inner.embedding->image, nullptr)};
        return SearchOutcome{std::move(result), std::move(inner.trace)};
    }
    throw Error("pattern must be an out-tree or an in-tree");
}

SearchOutcome parity_tree_search(const OrientedGraph& d, const Coloring& gamma,
                                 const RootedOrientedTree& pattern) {
    auto parity_check = check_parity_coloring(d, gamma);
    if (!parity_check.ok)
        throw Error("coloring fails the parity check: vertex " +
                    std::to_string(parity_check.vertex) + " lacks color " +
                    std::to_string(parity_check.missing_color) +
                    " on the required side");
    const int n = d.vertex_count();
    if (n == 0) throw Error("the host graph is empty");

    // Colors are read as literal numbers here; the declared order is not used.
    int top = 0;
    for (int v = 0; v < n; ++v) top = std::max(top, gamma.color_of(v));

    SearchTrace trace{d, d, gamma, pattern, pattern.dfs_order(), std::vector<int>{}, true, -1};
    const auto& order = trace.pattern_order;
    const int s = pattern.vertex_count();

    // arc_to_child[w]: the tree arc between w and its parent points at w.
    std::vector<char> arc_to_child(s, 0);
    for (auto [a, b] : pattern.arcs())
        if (pattern.parent_of(b) == a)
            arc_to_child[b] = 1;

    auto rep_side = [&](int u, int t, bool from_out) {
        const auto& side = from_out ? d.out_neighbors(u) : d.in_neighbors(u);
        for (int w : side)
            if (gamma.color_of(w) == t) return w;
        return -1;
    };

    std::vector<int> image(s, -1);
    int start = -1;
    for (int v = 0; v < n && start < 0; ++v)
        if (gamma.color_of(v) == top) start = v;
    image[order[0]] = start;
    trace.placed.push_back(start);

    for (int j = 1; j < s; ++j) {
        const int w = order[j];
        const int parent_host = image[pattern.parent_of(w)];
        const bool need_even = arc_to_child[w] != 0; // parent->child arcs consume even colors
        const int scan_top = gamma.color_of(trace.placed.back()) - 1;
        int chosen = -1;
        for (int t = scan_top; t >= 1 && chosen < 0; --t) {
            if ((t % 2 == 0) != need_even) continue;
            int x = rep_side(parent_host, t, need_even);
            if (x < 0) continue;
            bool blocked = false;
            for (int y : trace.placed) {
                if (y == parent_host) continue;
                if (d.adjacent(x, y)) {
                    blocked = true;
                    break;
                }
            }
            if (!blocked) chosen = x;
        }
        if (chosen < 0) {
            trace.stuck_order_position = j;
            return SearchOutcome{std::nullopt, std::move(trace)};
        }
        image[w] = chosen;
        trace.placed.push_back(chosen);
    }

    Embedding result{pattern, Host{d}, image, verify_embedding(d, pattern, image, &gamma)};
    return SearchOutcome{std::move(result), std::move(trace)};
}

SearchOutcome bikernel_tree_embedding(const OrientedGraph& d, const RootedOrientedTree& pattern,
                                      int kernel_guard_n) {
    ParityColoringResult layered = parity_coloring(d, kernel_guard_n);
    return parity_tree_search(d, layered.gamma, pattern);
}

namespace {

struct PlanBranch {
    int value = 0;
    std::vector<StPlanStep> steps;
};

// Minimizing branch of the leaf-stripping recursion over the alive subtree.
PlanBranch strip_branch(const RootedOrientedTree& tree, std::vector<char>& alive,
                        int alive_count) {
    if (alive_count == 1) return {};
    const int s = tree.vertex_count();
    std::vector<int> indeg(s, 0), outdeg(s, 0);
    for (auto [u, v] : tree.arcs())
        if (alive[u] && alive[v]) {
            ++outdeg[u];
            ++indeg[v];
        }
    std::vector<int> out_leaves, in_leaves;
    for (int v = 0; v < s; ++v) {
        if (!alive[v]) continue;
        if (indeg[v] == 1 && outdeg[v] == 0) out_leaves.push_back(v);
        if (outdeg[v] == 1 && indeg[v] == 0) in_leaves.push_back(v);
    }

    auto descend = [&](const std::vector<int>& removed, bool out_side) {
        for (int v : removed) alive[v] = 0;
        PlanBranch sub = strip_branch(tree, alive, alive_count - static_cast<int>(removed.size()));
        for (int v : removed) alive[v] = 1;
        PlanBranch branch;
        branch.value = 1 + sub.value;
        branch.steps.push_back(StPlanStep{out_side, removed});
        branch.steps.insert(branch.steps.end(), sub.steps.begin(), sub.steps.end());
        return branch;
    };

    std::optional<PlanBranch> best;
    if (!out_leaves.empty()) best = descend(out_leaves, true);
    if (!in_leaves.empty()) {
        PlanBranch alt = descend(in_leaves, false);
        if (!best || alt.value < best->value) best = std::move(alt);
    }
    return *best; // a tree on >= 2 vertices always has a leaf on some side
}

} // namespace

StPlan st_plan(const RootedOrientedTree& tree) {
    std::vector<char> alive(tree.vertex_count(), 1);
    PlanBranch branch = strip_branch(tree, alive, tree.vertex_count());
    return StPlan{branch.value, std::move(branch.steps)};
}

BrOutcome br_tree_embedding(const OrientedGraph& d, const RootedOrientedTree& pattern, int r) {
    if (r < 2) throw Error("fan parameter must be at least 2");
    const int n = d.vertex_count();
    const int s = pattern.vertex_count();
    StPlan plan = st_plan(pattern);

    BrOutcome out;
    out.partial_image.assign(s, -1);

    // Forward pass: peel the host once per plan step, remembering each level's
    // active set for the attachment scans of the unwinding pass.
    std::vector<char> active(n, 1);
    std::vector<std::vector<char>> active_before;
    std::vector<char> tree_alive(s, 1);
    std::vector<std::vector<char>> tree_alive_before;
    int tree_size = s;
    for (const auto& step : plan.peel) {
        BrLevel level;
        level.out_side = step.out_side;
        level.leaves = step.removed;
        level.tree_size_before = tree_size;
        level.threshold =
            (r - 1) * (tree_size - 2) + static_cast<int>(step.removed.size());
        active_before.push_back(active);
        tree_alive_before.push_back(tree_alive);
        for (int v = 0; v < n; ++v) {
            if (!active[v]) continue;
            const auto& side = step.out_side ? d.out_neighbors(v) : d.in_neighbors(v);
            int degree = 0;
            for (int w : side)
                if (active[w]) ++degree;
            if (degree <= level.threshold) level.peeled.push_back(v);
        }
        for (int v : level.peeled) active[v] = 0;
        for (int v : step.removed) tree_alive[v] = 0;
        tree_size -= static_cast<int>(step.removed.size());
        out.levels.push_back(std::move(level));
    }

    int survivor = -1;
    for (int v = 0; v < s; ++v)
        if (tree_alive[v]) survivor = v;
    int base_host = -1;
    for (int v = 0; v < n && base_host < 0; ++v)
        if (active[v]) base_host = v;
    if (base_host < 0) {
        out.stuck_level = static_cast<int>(out.levels.size());
        return out;
    }
    out.partial_image[survivor] = base_host;

    std::vector<char> used(n, 0);
    used[base_host] = 1;
    std::vector<int> embedded_hosts{base_host};

    std::vector<std::vector<int>> tree_neighbors(s);
    for (auto [u, v] : pattern.arcs()) {
        tree_neighbors[u].push_back(v);
        tree_neighbors[v].push_back(u);
    }

    for (int li = static_cast<int>(out.levels.size()) - 1; li >= 0; --li) {
        const BrLevel& level = out.levels[li];
        const std::vector<char>& act = active_before[li];
        const std::vector<char>& alive = tree_alive_before[li];
        for (int leaf : level.leaves) {
            // The unique tree neighbor of this leaf inside the level's subtree.
            int anchor = -1;
            for (int w : tree_neighbors[leaf])
                if (alive[w] && out.partial_image[w] >= 0) anchor = w;
            const int anchor_host = out.partial_image[anchor];
            const auto& side =
                level.out_side ? d.out_neighbors(anchor_host) : d.in_neighbors(anchor_host);
            int pick = -1;
            for (int x : side) {
                if (!act[x] || used[x]) continue;
                bool clean = true;
                for (int y : embedded_hosts) {
                    if (y == anchor_host) continue;
                    if (d.adjacent(x, y)) {
                        clean = false;
                        break;
                    }
                }
                if (clean) {
                    pick = x;
                    break;
                }
            }
            if (pick < 0) {
                out.stuck_level = li;
                return out;
            }
            out.partial_image[leaf] = pick;
            used[pick] = 1;
            embedded_hosts.push_back(pick);
        }
    }

    Embedding result{pattern, Host{d}, out.partial_image,
                     verify_embedding(d, pattern, out.partial_image, nullptr)};
    out.embedding = std::move(result);
    return out;
}

Embedding extract_from_rainbow_ary_tree(const UndirectedGraph& g, const Embedding& ary_image,
                                        const Coloring& coloring,
                                        const RootedOrientedTree& pattern, int r) {
    if (r < 2) throw Error("fan parameter must be at least 2");
    const RootedOrientedTree& ary = ary_image.tree;
    if (!ary.is_out_tree()) throw Error("the ary tree must be an out-tree");
    const int an = ary.vertex_count();

    std::vector<std::vector<int>> children(an);
    for (int v = 0; v < an; ++v)
        if (v != ary.root()) children[ary.parent_of(v)].push_back(v);
    for (auto& list : children) std::sort(list.begin(), list.end());

    std::vector<int> depth(an, 0);
    int levels = 1;
    for (int v : ary.topo_order())
        if (v != ary.root()) {
            depth[v] = depth[ary.parent_of(v)] + 1;
            levels = std::max(levels, depth[v] + 1);
        }
    const int arity = static_cast<int>(children[ary.root()].size());
    if (arity != r * levels)
        throw Error("ary tree arity " + std::to_string(arity) + " does not equal " +
                    std::to_string(r) + " times the level count " + std::to_string(levels));
    for (int v = 0; v < an; ++v)
        if (depth[v] < levels - 1 && static_cast<int>(children[v].size()) != arity)
            throw Error("ary tree is not complete");
    if (pattern.vertex_count() > levels)
        throw Error("pattern has more vertices than the ary tree has levels");
    if (find_k2r(g, r).has_value())
        throw Error("host contains a forbidden complete bipartite witness");

    const auto& ary_hosts = ary_image.image;
    if (static_cast<int>(ary_hosts.size()) != an)
        throw Error("ary image does not cover the ary tree");
    std::set<int> seen;
    for (int h : ary_hosts) {
        if (h < 0 || h >= g.vertex_count()) throw Error("ary image leaves the host");
        if (!seen.insert(h).second) throw Error("ary image is not injective");
    }
    for (auto [a, b] : ary.arcs())
        if (!g.has_edge(ary_hosts[a], ary_hosts[b]))
            throw Error("ary image is not a subgraph copy");
    std::set<int> palette;
    for (int h : ary_hosts) palette.insert(coloring.color_of(h));
    if (static_cast<int>(palette.size()) != an) throw Error("ary image is not rainbow");

    // Strip the pattern to one vertex, largest-index leaf first.
    const int h = pattern.vertex_count();
    std::vector<std::vector<int>> neighbors(h);
    for (auto [a, b] : pattern.arcs()) {
        neighbors[a].push_back(b);
        neighbors[b].push_back(a);
    }
    std::vector<char> alive(h, 1);
    std::vector<int> removal;
    for (int step = 0; step + 1 < h; ++step) {
        int leaf = -1;
        for (int v = h - 1; v >= 0 && leaf < 0; --v) {
            if (!alive[v]) continue;
            int degree = 0;
            for (int w : neighbors[v])
                if (alive[w]) ++degree;
            if (degree == 1) leaf = v;
        }
        removal.push_back(leaf);
        alive[leaf] = 0;
    }
    int survivor = -1;
    for (int v = 0; v < h; ++v)
        if (alive[v]) survivor = v;

    // Rebuild, mapping into ary-tree vertices: the survivor sits at the root
    // and every stripped leaf takes an unused child of its neighbor's image.
    std::vector<int> place(h, -1);
    place[survivor] = ary.root();
    std::vector<char> used(an, 0);
    used[ary.root()] = 1;
    std::vector<int> embedded{survivor};
    for (int idx = static_cast<int>(removal.size()) - 1; idx >= 0; --idx) {
        const int u = removal[idx];
        int anchor = -1;
        for (int w : neighbors[u])
            if (place[w] >= 0) anchor = w;
        int pick = -1;
        for (int child : children[place[anchor]]) {
            if (used[child]) continue;
            const int candidate_host = ary_hosts[child];
            bool clean = true;
            for (int w : embedded) {
                if (w == anchor) continue;
                if (g.has_edge(candidate_host, ary_hosts[place[w]])) {
                    clean = false;
                    break;
                }
            }
            if (clean) {
                pick = child;
                break;
            }
        }
        if (pick < 0)
            throw Error("child scan found no candidate: counting violation "
                        "(host-contract breach)");
        place[u] = pick;
        used[pick] = 1;
        embedded.push_back(u);
    }

    std::vector<int> image(h);
    for (int v = 0; v < h; ++v) image[v] = ary_hosts[place[v]];
    return Embedding{pattern, Host{g}, image, verify_embedding(g, pattern, image, &coloring)};
}

StuckStateReport stuck_state_diagnostic(const SearchTrace& trace, int girth_parameter) {
    if (trace.parity) throw Error("diagnostic applies to plain good-tree traces only");
    if (!trace.failed()) throw Error("trace is not a failure");
    if (girth_parameter < 5) throw Error("girth parameter must be at least 5");
    const int i = static_cast<int>(trace.placed.size());
    if (i < girth_parameter)
        throw Error("diagnostic requires at least " + std::to_string(girth_parameter) +
                    " placed vertices, trace has " + std::to_string(i));
    const auto& order = trace.pattern_order;
    if (static_cast<int>(order.size()) != trace.pattern.vertex_count() ||
        trace.stuck_order_position != i || i >= static_cast<int>(order.size()))
        throw Error("trace is malformed");

    const Coloring& alpha = trace.alpha;
    const int k = alpha.color_count();

    StuckStateReport report;
    report.placed_count = i;
    report.color_count = k;

    std::vector<int> image(trace.pattern.vertex_count(), -1);
    std::vector<int> position(trace.adjacency_host.vertex_count(), -1);
    for (int j = 0; j < i; ++j) {
        image[order[j]] = trace.placed[j];
        position[trace.placed[j]] = j;
    }
    std::vector<int> prefix_sorted; // ascending host index, grown per step

    bool consistent = true;
    bool second_clean = true;
    std::set<int> blocked_set;
    std::set<std::pair<int, int>> aux_edges;

    auto blocker_of = [&](int x, int parent_host, int prefix_len) {
        // Least-index adjacency_host neighbor of x among the first prefix_len
        // placed vertices, the parent excluded.
        for (int y : prefix_sorted) {
            if (position[y] >= prefix_len) continue;
            if (y == parent_host) continue;
            if (trace.adjacency_host.adjacent(x, y)) return y;
        }
        return -1;
    };

    prefix_sorted.push_back(trace.placed[0]);
    for (int j = 1; j <= i; ++j) {
        const int parent_host = image[trace.pattern.parent_of(order[j])];
        if (parent_host < 0) throw Error("trace is malformed");
        const int scan_top = rank1(alpha, trace.placed[j - 1]) - 1;
        const int scan_bottom = (j < i) ? rank1(alpha, trace.placed[j]) + 1 : 1;
        for (int t = scan_top; t >= scan_bottom; --t) {
            int x = representative(trace.arc_host, alpha, parent_host, t);
            if (x < 0) {
                consistent = false;
                continue;
            }
            int y = blocker_of(x, parent_host, j);
            if (y < 0) {
                consistent = false; // trace skipped a viable representative
                continue;
            }
            blocked_set.insert(x);
            if (j == 1) second_clean = false;
            int a = position[parent_host], b = position[y];
            aux_edges.insert({std::min(a, b), std::max(a, b)});
        }
        if (j < i) {
            const int t = rank1(alpha, trace.placed[j]);
            if (representative(trace.arc_host, alpha, parent_host, t) != trace.placed[j] ||
                blocker_of(trace.placed[j], parent_host, j) >= 0)
                consistent = false; // accepted vertex was not the free representative
            int a = position[parent_host];
            aux_edges.insert({std::min(a, j), std::max(a, j)});
            auto spot = std::lower_bound(prefix_sorted.begin(), prefix_sorted.end(),
                                         trace.placed[j]);
            prefix_sorted.insert(spot, trace.placed[j]);
        }
    }

    report.blocked.assign(blocked_set.begin(), blocked_set.end());
    report.color_accounting_ok = (k == i + static_cast<int>(blocked_set.size()));
    report.second_step_clean = second_clean;
    report.reconstruction_ok = consistent;

    std::vector<std::pair<int, int>> edges(aux_edges.begin(), aux_edges.end());
    UndirectedGraph auxiliary = UndirectedGraph::from_edges(i, edges);
    report.auxiliary_girth = girth(auxiliary);
    report.girth_ok =
        !report.auxiliary_girth || *report.auxiliary_girth >= (girth_parameter + 1) / 2;
    report.auxiliary_edges = static_cast<int>(edges.size());
    report.edge_bound =
        (std::pow(static_cast<double>(i), 1.0 + 4.0 / (girth_parameter - 4)) + i) / 2.0;
    report.edge_bound_ok = report.auxiliary_edges < report.edge_bound;
    return report;
}

} // namespace rainbow
