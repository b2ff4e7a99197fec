#include "rainbow/generators.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <random>
#include <set>

#include "rainbow/error.hpp"

namespace rainbow {

namespace {

std::uint64_t below(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

double unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * (1.0 / 9007199254740992.0);
}

template <typename T>
void shuffle_vec(std::mt19937_64& rng, std::vector<T>& v) {
    for (int i = static_cast<int>(v.size()) - 1; i > 0; --i)
        std::swap(v[i], v[static_cast<int>(below(rng, i + 1))]);
}

std::vector<int> parse_args(const std::string& spec, std::size_t colon) {
    std::vector<int> args;
    std::size_t pos = colon + 1;
    while (pos <= spec.size()) {
        std::size_t comma = spec.find(',', pos);
        std::string token = spec.substr(pos, comma == std::string::npos ? comma : comma - pos);
        try {
            std::size_t used = 0;
            args.push_back(std::stoi(token, &used));
            if (used != token.size()) throw std::invalid_argument(token);
        } catch (const std::exception&) {
            throw Error("bad parameter '" + token + "' in graph name '" + spec + "'");
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return args;
}

UndirectedGraph petersen() {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);
        edges.emplace_back(i, 5 + i);
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    return UndirectedGraph::from_edges(10, edges);
}

UndirectedGraph grotzsch() {
    // Outer 5-cycle 0..4, mirrors 5..9 (mirror i sees the cycle neighbors of
    // i), hub 10 adjacent to every mirror.
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);
        edges.emplace_back(5 + i, (i + 1) % 5);
        edges.emplace_back(5 + i, (i + 4) % 5);
        edges.emplace_back(5 + i, 10);
    }
    return UndirectedGraph::from_edges(11, edges);
}

UndirectedGraph brinkmann() {
    // Three rings of 7: outer o_i = i (step 1), middle m_i = 7+i (ringless),
    // inner n_i = 14+i (step 2); each middle vertex picks up two outer and
    // two inner spokes.
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 7; ++i) {
        edges.emplace_back(i, (i + 1) % 7);
        edges.emplace_back(14 + i, 14 + (i + 2) % 7);
        edges.emplace_back(7 + i, i);
        edges.emplace_back(7 + i, (i + 3) % 7);
        edges.emplace_back(7 + i, 14 + i);
        edges.emplace_back(7 + i, 14 + (i + 1) % 7);
    }
    return UndirectedGraph::from_edges(21, edges);
}

UndirectedGraph kneser(int n, int k) {
    if (k < 1 || n < k) throw Error("kneser parameters require n >= k >= 1");
    std::vector<std::vector<int>> subsets;
    std::vector<int> current;
    // Lexicographic k-subsets of {0..n-1}.
    auto generate = [&](auto&& self, int start) -> void {
        if (static_cast<int>(current.size()) == k) {
            subsets.push_back(current);
            return;
        }
        for (int x = start; x < n; ++x) {
            current.push_back(x);
            self(self, x + 1);
            current.pop_back();
        }
    };
    generate(generate, 0);
    std::vector<std::pair<int, int>> edges;
    for (std::size_t a = 0; a < subsets.size(); ++a)
        for (std::size_t b = a + 1; b < subsets.size(); ++b) {
            bool disjoint = true;
            for (int x : subsets[a])
                if (std::find(subsets[b].begin(), subsets[b].end(), x) != subsets[b].end())
                    disjoint = false;
            if (disjoint) edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
        }
    return UndirectedGraph::from_edges(static_cast<int>(subsets.size()), edges);
}

} // namespace

UndirectedGraph named_graph(const std::string& spec) {
    std::size_t colon = spec.find(':');
    std::string name = spec.substr(0, colon);
    std::vector<int> args;
    if (colon != std::string::npos) args = parse_args(spec, colon);

    auto want_args = [&](std::size_t count) {
        if (args.size() != count)
            throw Error("graph name '" + name + "' takes " + std::to_string(count) +
                        " parameter(s)");
    };
    if (name == "petersen") {
        want_args(0);
        return petersen();
    }
    if (name == "grotzsch") {
        want_args(0);
        return grotzsch();
    }
    if (name == "brinkmann") {
        want_args(0);
        return brinkmann();
    }
    if (name == "cycle") {
        want_args(1);
        int n = args[0];
        if (n < 3) throw Error("cycle needs at least 3 vertices");
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
        return UndirectedGraph::from_edges(n, edges);
    }
    if (name == "path") {
        want_args(1);
        int n = args[0];
        if (n < 1) throw Error("path needs at least 1 vertex");
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
        return UndirectedGraph::from_edges(n, edges);
    }
    if (name == "complete") {
        want_args(1);
        int n = args[0];
        if (n < 1) throw Error("complete needs at least 1 vertex");
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
        return UndirectedGraph::from_edges(n, edges);
    }
    if (name == "kneser") {
        want_args(2);
        return kneser(args[0], args[1]);
    }
    throw Error("unknown graph name '" + name + "'");
}

UndirectedGraph mycielski(const UndirectedGraph& g, int levels) {
    if (levels < 1) throw Error("mycielski needs at least one level");
    UndirectedGraph current = g;
    for (int step = 0; step < levels; ++step) {
        const int n = current.vertex_count();
        std::vector<std::pair<int, int>> edges = current.edges();
        for (auto [u, v] : current.edges()) {
            edges.emplace_back(u, n + v);
            edges.emplace_back(v, n + u);
        }
        for (int i = 0; i < n; ++i) edges.emplace_back(n + i, 2 * n);
        current = UndirectedGraph::from_edges(2 * n + 1, edges);
    }
    return current;
}

namespace {

bool passes_filter(const UndirectedGraph& g, GraphFilter filter, int girth_bound) {
    if (filter == GraphFilter::None) return true;
    auto gth = girth(g);
    if (!gth) return true;
    return filter == GraphFilter::TriangleFree ? *gth > 3 : *gth >= girth_bound;
}

} // namespace

UndirectedGraph random_graph(int n, double p, std::uint64_t seed, GraphFilter filter,
                             int girth_bound, int retry_budget) {
    if (n < 0 || p < 0.0 || p > 1.0) throw Error("random_graph needs n >= 0 and p in [0,1]");
    if (filter == GraphFilter::GirthAtLeast && girth_bound < 3)
        throw Error("girth filter needs a bound of at least 3");
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < std::max(1, retry_budget); ++attempt) {
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (unit(rng) < p) edges.emplace_back(u, v);
        auto g = UndirectedGraph::from_edges(n, edges);
        if (passes_filter(g, filter, girth_bound)) return g;
    }
    throw Error("random_graph filter retry budget exhausted");
}

OrientedGraph random_dag(int n, double p, std::uint64_t seed) {
    if (n < 0 || p < 0.0 || p > 1.0) throw Error("random_dag needs n >= 0 and p in [0,1]");
    std::mt19937_64 rng(seed);
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    shuffle_vec(rng, order);
    std::vector<std::pair<int, int>> arcs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (unit(rng) < p) arcs.emplace_back(order[i], order[j]);
    return OrientedGraph::from_arcs(n, arcs);
}

std::vector<int> default_class_sizes(int k) {
    if (k < 1) throw Error("class sizes need k >= 1");
    std::vector<int> sizes(k);
    sizes[k - 1] = 1;
    for (int c = k - 2; c >= 0; --c) sizes[c] = (sizes[c + 1] * 31 + 19) / 20;
    return sizes;
}

namespace {

// Incremental adjacency bookkeeping for the synthesizer: sorted neighbor
// vectors, arcs only ever added.
struct GrowingDigraph {
    std::vector<std::vector<int>> out, in;

    explicit GrowingDigraph(int n) : out(n), in(n) {}

    static void insert_sorted(std::vector<int>& v, int x) {
        v.insert(std::lower_bound(v.begin(), v.end(), x), x);
    }
    static void erase_sorted(std::vector<int>& v, int x) {
        v.erase(std::lower_bound(v.begin(), v.end(), x));
    }
    static bool contains(const std::vector<int>& v, int x) {
        return std::binary_search(v.begin(), v.end(), x);
    }

    void add(int u, int v) {
        insert_sorted(out[u], v);
        insert_sorted(in[v], u);
    }
    void remove(int u, int v) {
        erase_sorted(out[u], v);
        erase_sorted(in[v], u);
    }
    bool adjacent(int u, int v) const {
        return contains(out[u], v) || contains(in[u], v);
    }
    std::vector<int> neighbors(int v) const {
        std::vector<int> all;
        std::merge(out[v].begin(), out[v].end(), in[v].begin(), in[v].end(),
                   std::back_inserter(all));
        return all;
    }
};

// Would the digraph, with arc x->y freshly added, contain a two-fan pattern
// (tail with r out-arcs to middles all touching one other vertex)? Only
// patterns using the new arc can be new, and the new arc is either the
// tail->middle arc or the middle-to-other adjacency.
bool creates_br(const GrowingDigraph& d, int x, int y, int r) {
    auto count_middles = [&](int tail, int other) {
        int count = 0;
        for (int m : d.out[tail])
            if (m != other && d.adjacent(m, other)) ++count;
        return count;
    };
    for (int b : d.neighbors(y))
        if (b != x && count_middles(x, b) >= r) return true;
    for (int t : d.in[x])
        if (t != y && count_middles(t, y) >= r) return true;
    for (int t : d.in[y])
        if (t != x && count_middles(t, x) >= r) return true;
    return false;
}

// Would adding edge x-y close a cycle shorter than girth_bound? True iff y
// is reachable from x within girth_bound - 2 steps in the underlying graph.
bool creates_short_cycle(const GrowingDigraph& d, int x, int y, int girth_bound) {
    std::vector<int> dist(d.out.size(), -1);
    dist[x] = 0;
    std::deque<int> queue{x};
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        if (dist[u] >= girth_bound - 2) continue;
        for (int w : d.neighbors(u)) {
            if (dist[w] != -1) continue;
            if (w == y) return true;
            dist[w] = dist[u] + 1;
            queue.push_back(w);
        }
    }
    return false;
}

// Try to add x->y under the constraint; on success the arc stays in.
bool try_add_arc(GrowingDigraph& d, int x, int y, const SynthConstraint& constraint) {
    switch (constraint.kind) {
        case SynthConstraint::Kind::None:
            d.add(x, y);
            return true;
        case SynthConstraint::Kind::GirthAtLeast:
            if (creates_short_cycle(d, x, y, constraint.value)) return false;
            d.add(x, y);
            return true;
        case SynthConstraint::Kind::BrFree:
            d.add(x, y);
            if (creates_br(d, x, y, constraint.value)) {
                d.remove(x, y);
                return false;
            }
            return true;
    }
    return false;
}

} // namespace

SynthInstance synth_outtree_colored(int k, const std::vector<int>& class_sizes,
                                    SynthConstraint constraint, double extra_arc_prob,
                                    std::uint64_t seed, int retry_budget) {
    if (k < 1) throw Error("synthesis needs k >= 1");
    if (static_cast<int>(class_sizes.size()) != k)
        throw Error("synthesis needs exactly k class sizes");
    for (int s : class_sizes)
        if (s < 1) throw Error("every class needs at least one vertex");
    if (constraint.kind == SynthConstraint::Kind::BrFree && constraint.value < 2)
        throw Error("freeness constraint needs r >= 2");
    if (constraint.kind == SynthConstraint::Kind::GirthAtLeast && constraint.value < 3)
        throw Error("girth constraint needs a bound of at least 3");

    int n = 0;
    std::vector<std::vector<int>> members(k);
    std::vector<int> color;
    for (int c = 0; c < k; ++c)
        for (int i = 0; i < class_sizes[c]; ++i) {
            members[c].push_back(n++);
            color.push_back(c + 1);
        }

    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < std::max(1, retry_budget); ++attempt) {
        GrowingDigraph d(n);
        bool stuck = false;
        for (int c = 1; c < k && !stuck; ++c) {
            for (int v : members[c]) {
                for (int lower = 0; lower < c && !stuck; ++lower) {
                    auto targets = members[lower];
                    shuffle_vec(rng, targets);
                    bool placed = false;
                    for (int u : targets)
                        if (try_add_arc(d, v, u, constraint)) {
                            placed = true;
                            break;
                        }
                    if (!placed) stuck = true;
                }
                if (stuck) break;
            }
        }
        if (stuck) continue;

        if (extra_arc_prob > 0.0) {
            for (int c = 1; c < k; ++c)
                for (int v : members[c])
                    for (int lower = 0; lower < c; ++lower)
                        for (int u : members[lower]) {
                            if (GrowingDigraph::contains(d.out[v], u)) continue;
                            if (unit(rng) < extra_arc_prob) try_add_arc(d, v, u, constraint);
                        }
        }

        std::vector<std::pair<int, int>> arcs;
        for (int v = 0; v < n; ++v)
            for (int u : d.out[v]) arcs.emplace_back(v, u);
        return SynthInstance{OrientedGraph::from_arcs(n, arcs), Coloring(color), constraint,
                             seed};
    }
    throw Error("synthesis retry budget exhausted; parameters look infeasible");
}

namespace {

// Canonical bracket encoding of an oriented tree: per root, each child edge
// contributes 'i' (arc toward the parent) or 'o' (arc away from it) plus the
// child's encoding, children sorted; the tree's form is the minimum over
// roots. 'i' sorts first, which settles canonical roots deterministically.
struct OrientedTreeEncoder {
    int n;
    std::vector<std::vector<std::pair<int, char>>> adj; // (neighbor, tag seen from here)

    OrientedTreeEncoder(int vertex_count, const std::vector<std::pair<int, int>>& arcs)
        : n(vertex_count), adj(vertex_count) {
        for (auto [u, v] : arcs) {
            adj[u].emplace_back(v, 'o');
            adj[v].emplace_back(u, 'i');
        }
    }

    std::string encode(int v, int parent) const {
        std::vector<std::string> parts;
        for (auto [u, tag] : adj[v]) {
            if (u == parent) continue;
            parts.push_back(tag + encode(u, v));
        }
        std::sort(parts.begin(), parts.end());
        std::string out = "(";
        for (const auto& part : parts) out += part;
        out += ")";
        return out;
    }

    std::string canonical() const {
        std::string best;
        for (int v = 0; v < n; ++v) {
            std::string candidate = encode(v, -1);
            if (best.empty() || candidate < best) best = candidate;
        }
        return best;
    }
};

RootedOrientedTree tree_from_encoding(const std::string& enc) {
    std::vector<std::pair<int, int>> arcs;
    int next_id = 0;
    std::size_t pos = 0;
    auto parse = [&](auto&& self) -> int {
        int my_id = next_id++;
        ++pos; // consume '('
        while (pos < enc.size() && (enc[pos] == 'i' || enc[pos] == 'o')) {
            char tag = enc[pos++];
            int child = self(self);
            if (tag == 'o')
                arcs.emplace_back(my_id, child);
            else
                arcs.emplace_back(child, my_id);
        }
        ++pos; // consume ')'
        return my_id;
    };
    parse(parse);
    return RootedOrientedTree(next_id, arcs, 0);
}

std::vector<std::pair<int, int>> prufer_decode(const std::vector<int>& seq, int s) {
    std::vector<int> degree(s, 1);
    for (int x : seq) ++degree[x];
    std::vector<std::pair<int, int>> edges;
    std::set<int> leaves;
    for (int v = 0; v < s; ++v)
        if (degree[v] == 1) leaves.insert(v);
    std::vector<int> rest = seq;
    for (int x : rest) {
        int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        edges.emplace_back(leaf, x);
        if (--degree[x] == 1) leaves.insert(x);
    }
    int a = *leaves.begin();
    int b = *std::next(leaves.begin());
    edges.emplace_back(a, b);
    return edges;
}

} // namespace

TreeCatalog oriented_trees(int s, int guard_s) {
    if (s < 1) throw Error("tree catalog needs s >= 1");
    if (s > guard_s)
        throw Error("tree catalog guarded to " + std::to_string(guard_s) + " vertices");
    TreeCatalog catalog;
    if (s == 1) {
        catalog.all.emplace_back(1, std::vector<std::pair<int, int>>{}, 0);
        catalog.out_trees = catalog.all;
        catalog.in_trees = catalog.all;
        return catalog;
    }

    std::set<std::string> forms;
    std::vector<int> seq(std::max(0, s - 2), 0);
    bool done = false;
    while (!done) {
        auto edges = prufer_decode(seq, s);
        for (unsigned mask = 0; mask < (1u << (s - 1)); ++mask) {
            std::vector<std::pair<int, int>> arcs;
            for (int e = 0; e < s - 1; ++e) {
                auto [u, v] = edges[e];
                if (mask >> e & 1)
                    arcs.emplace_back(v, u);
                else
                    arcs.emplace_back(u, v);
            }
            forms.insert(OrientedTreeEncoder(s, arcs).canonical());
        }
        done = true;
        for (int i = static_cast<int>(seq.size()) - 1; i >= 0; --i) {
            if (++seq[i] < s) {
                done = false;
                break;
            }
            seq[i] = 0;
        }
        if (seq.empty()) done = true;
    }

    for (const auto& form : forms) {
        auto tree = tree_from_encoding(form);
        // Out-trees have a unique source and in-degree one everywhere else;
        // in-trees are the mirror image.
        int sources = 0, sinks = 0, source = -1, sink = -1;
        bool out_shape = true, in_shape = true;
        for (int v = 0; v < tree.vertex_count(); ++v) {
            if (tree.in_degree(v) == 0) {
                ++sources;
                source = v;
            } else if (tree.in_degree(v) != 1) {
                out_shape = false;
            }
            if (tree.out_degree(v) == 0) {
                ++sinks;
                sink = v;
            } else if (tree.out_degree(v) != 1) {
                in_shape = false;
            }
        }
        if (out_shape && sources == 1) catalog.out_trees.push_back(tree.rerooted(source));
        if (in_shape && sinks == 1) catalog.in_trees.push_back(tree.rerooted(sink));
        catalog.all.push_back(std::move(tree));
    }
    return catalog;
}

RootedOrientedTree complete_ary_tree(int arity, int levels) {
    if (arity < 1 || levels < 1) throw Error("ary tree needs arity >= 1 and levels >= 1");
    std::vector<std::pair<int, int>> arcs;
    std::vector<int> frontier{0};
    int next_id = 1;
    for (int level = 1; level < levels; ++level) {
        std::vector<int> next;
        for (int parent : frontier)
            for (int c = 0; c < arity; ++c) {
                arcs.emplace_back(parent, next_id);
                next.push_back(next_id++);
            }
        frontier = std::move(next);
    }
    return RootedOrientedTree(next_id, arcs, 0);
}

UndirectedGraph projective_plane_incidence(int q) {
    if (q < 2) throw Error("projective plane order must be at least 2");
    for (int f = 2; f * f <= q; ++f)
        if (q % f == 0) throw Error("projective plane order must be prime here");

    // Canonical projective points: (1,a,b), (0,1,c), (0,0,1).
    std::vector<std::array<int, 3>> points;
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) points.push_back({1, a, b});
    for (int c = 0; c < q; ++c) points.push_back({0, 1, c});
    points.push_back({0, 0, 1});

    const int m = static_cast<int>(points.size());
    std::vector<std::pair<int, int>> edges;
    for (int p = 0; p < m; ++p)
        for (int l = 0; l < m; ++l) {
            int dot = 0;
            for (int i = 0; i < 3; ++i) dot += points[p][i] * points[l][i];
            if (dot % q == 0) edges.emplace_back(p, m + l);
        }
    return UndirectedGraph::from_edges(2 * m, edges);
}

OrientedGraph balanced_orientation(const UndirectedGraph& g, std::uint64_t seed) {
    const int n = g.vertex_count();
    for (int v = 0; v < n; ++v)
        if (g.degree(v) % 2 != 0)
            throw Error("balanced orientation needs all degrees even");

    // Edge ids for used-marking.
    std::map<std::pair<int, int>, int> edge_id;
    auto edges = g.edges();
    for (int e = 0; e < static_cast<int>(edges.size()); ++e) edge_id[edges[e]] = e;
    auto id_of = [&](int u, int v) {
        return edge_id[{std::min(u, v), std::max(u, v)}];
    };

    std::mt19937_64 rng(seed);
    std::vector<std::vector<int>> adj(n);
    for (int v = 0; v < n; ++v) {
        adj[v] = g.neighbors(v);
        shuffle_vec(rng, adj[v]);
    }
    std::vector<std::size_t> cursor(n, 0);
    std::vector<char> used(edges.size(), 0);
    std::vector<std::pair<int, int>> arcs;

    // Hierholzer per connected component with edges.
    for (int start = 0; start < n; ++start) {
        if (g.degree(start) == 0 || cursor[start] >= adj[start].size()) continue;
        std::vector<int> stack{start};
        std::vector<int> circuit;
        while (!stack.empty()) {
            int v = stack.back();
            while (cursor[v] < adj[v].size() && used[id_of(v, adj[v][cursor[v]])]) ++cursor[v];
            if (cursor[v] == adj[v].size()) {
                circuit.push_back(v);
                stack.pop_back();
            } else {
                int u = adj[v][cursor[v]];
                used[id_of(v, u)] = 1;
                stack.push_back(u);
            }
        }
        for (std::size_t i = 0; i + 1 < circuit.size(); ++i)
            arcs.emplace_back(circuit[i + 1], circuit[i]);
    }
    return OrientedGraph::from_arcs(n, arcs);
}

} // namespace rainbow
