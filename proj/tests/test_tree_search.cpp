#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "oracles.hpp"
#include "rainbow/coloring.hpp"
#include "rainbow/coloring_ops.hpp"
#include "rainbow/error.hpp"
#include "rainbow/generators.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/graph_ops.hpp"
#include "rainbow/oracle.hpp"
#include "rainbow/tree.hpp"
#include "rainbow/tree_search.hpp"

using rainbow::Coloring;
using rainbow::Embedding;
using rainbow::Error;
using rainbow::OrderingPlan;
using rainbow::OrientedGraph;
using rainbow::RootedOrientedTree;
using rainbow::SearchOutcome;
using rainbow::SearchTrace;
using rainbow::SynthConstraint;
using rainbow::UndirectedGraph;

namespace {

RootedOrientedTree out_chain(int s) {
    std::vector<std::pair<int, int>> arcs;
    for (int i = 0; i + 1 < s; ++i) arcs.emplace_back(i, i + 1);
    return RootedOrientedTree(s, arcs, 0);
}

bool flag_true(const std::optional<bool>& f) { return f.has_value() && *f; }

bool verdict_exact(const Embedding& e) {
    return e.verdict.induced && flag_true(e.verdict.direction_exact);
}

// Hosts small enough for the exhaustive oracle get their embeddings
// double-checked for existence through the independent search.
void confirm_with_oracle(const OrientedGraph& host, const RootedOrientedTree& pattern) {
    if (host.vertex_count() <= 14) CHECK(rainbow::contains_induced_copy(host, pattern).has_value());
}

} // namespace

TEST_CASE("core search follows the pinned hand trace") {
    OrientedGraph host = OrientedGraph::from_arcs(4, {{0, 1}, {0, 3}, {1, 2}});
    Coloring alpha({3, 2, 1, 1});
    REQUIRE(rainbow::check_outtree_coloring(host, alpha).ok);

    SUBCASE("single vertex lands on the least-index top-color vertex") {
        RootedOrientedTree one(1, {}, 0);
        auto out = rainbow::good_tree_search(host, host, alpha, one);
        REQUIRE(out.success());
        CHECK(out.embedding->image == std::vector<int>{0});
        CHECK(out.trace.placed == std::vector<int>{0});
        CHECK_FALSE(out.trace.failed());
        CHECK_FALSE(out.trace.parity);
    }

    SUBCASE("two-vertex chain") {
        auto out = rainbow::good_tree_search(host, host, alpha, out_chain(2));
        REQUIRE(out.success());
        CHECK(out.embedding->image == std::vector<int>{0, 1});
        CHECK(verdict_exact(*out.embedding));
        CHECK(flag_true(out.embedding->verdict.rainbow));
        CHECK(flag_true(out.embedding->verdict.decreasing));
    }

    SUBCASE("three-vertex chain walks down the colors") {
        auto out = rainbow::good_tree_search(host, host, alpha, out_chain(3));
        REQUIRE(out.success());
        CHECK(out.embedding->image == std::vector<int>{0, 1, 2});
        CHECK(out.trace.placed == std::vector<int>{0, 1, 2});
        CHECK(verdict_exact(*out.embedding));
    }

    SUBCASE("two-leaf star avoids the placed conflict") {
        RootedOrientedTree star(3, {{0, 1}, {0, 2}}, 0);
        auto out = rainbow::good_tree_search(host, host, alpha, star);
        REQUIRE(out.success());
        CHECK(out.embedding->image == std::vector<int>{0, 1, 3});
        CHECK(verdict_exact(*out.embedding));
    }

    SUBCASE("trace carries the full replay state") {
        auto out = rainbow::good_tree_search(host, host, alpha, out_chain(3));
        CHECK(out.trace.pattern_order == out_chain(3).topo_order());
        CHECK(out.trace.alpha == alpha);
        CHECK(out.trace.adjacency_host.vertex_count() == 4);
        CHECK(out.trace.stuck_order_position == -1);
    }
}

TEST_CASE("adjacency host blocks what the arc host offers") {
    // Same representatives, but the adjacency host carries one extra arc
    // (0 -> 2) that makes the chain's last step conflict with vertex 0.
    OrientedGraph full = OrientedGraph::from_arcs(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}});
    OrientedGraph sparse = OrientedGraph::from_arcs(4, {{0, 1}, {0, 3}, {1, 2}});
    Coloring alpha({3, 2, 1, 1});

    auto blocked = rainbow::good_tree_search(full, sparse, alpha, out_chain(3));
    CHECK_FALSE(blocked.success());
    CHECK(blocked.trace.failed());
    CHECK(blocked.trace.stuck_order_position == 2);
    CHECK(blocked.trace.placed == std::vector<int>{0, 1});

    RootedOrientedTree star(3, {{0, 1}, {0, 2}}, 0);
    auto fine = rainbow::good_tree_search(full, sparse, alpha, star);
    REQUIRE(fine.success());
    CHECK(fine.embedding->image == std::vector<int>{0, 1, 3});
}

TEST_CASE("tournament-shaped host gets stuck and says where") {
    OrientedGraph host = OrientedGraph::from_arcs(3, {{0, 1}, {0, 2}, {1, 2}});
    Coloring alpha({3, 2, 1});
    auto out = rainbow::good_tree_search(host, host, alpha, out_chain(3));
    CHECK_FALSE(out.success());
    CHECK(out.trace.stuck_order_position == 2);
    CHECK(out.trace.placed == std::vector<int>{0, 1});
}

TEST_CASE("core search validates its inputs") {
    OrientedGraph host = OrientedGraph::from_arcs(4, {{0, 1}, {0, 3}, {1, 2}});
    Coloring alpha({3, 2, 1, 1});

    CHECK_THROWS_AS(rainbow::good_tree_search(OrientedGraph(0), OrientedGraph(0),
                                              Coloring(std::vector<int>{}), out_chain(2)),
                    Error);
    CHECK_THROWS_AS(
        rainbow::good_tree_search(OrientedGraph(5), host, alpha, out_chain(2)), Error);

    OrientedGraph wider = OrientedGraph::from_arcs(4, {{0, 1}, {0, 3}, {1, 2}, {2, 3}});
    CHECK_THROWS_AS(rainbow::good_tree_search(host, wider, alpha, out_chain(2)), Error);

    OrientedGraph path3 = OrientedGraph::from_arcs(3, {{0, 1}, {1, 2}});
    CHECK_THROWS_AS(
        rainbow::good_tree_search(path3, path3, Coloring({3, 2, 1}), out_chain(2)), Error);

    RootedOrientedTree in_star(3, {{1, 0}, {2, 0}}, 0);
    CHECK_THROWS_AS(rainbow::good_tree_search(host, host, alpha, in_star), Error);
}

TEST_CASE("decreasing search embeds a descending edge") {
    UndirectedGraph k2 = UndirectedGraph::from_edges(2, {{0, 1}});
    Coloring beta({2, 1});
    auto out = rainbow::decreasing_tree_search(k2, beta, out_chain(2));
    REQUIRE(out.success());
    CHECK(out.embedding->image == std::vector<int>{0, 1});
    CHECK(out.embedding->verdict.induced);
    CHECK(flag_true(out.embedding->verdict.rainbow));
    CHECK(flag_true(out.embedding->verdict.decreasing));
}

TEST_CASE("every color ordering of the five-cycle yields its rainbow paths") {
    UndirectedGraph c5 =
        UndirectedGraph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    Coloring beta({1, 2, 1, 2, 3});

    SUBCASE("edges appear under all six orderings") {
        auto res = rainbow::rainbow_paths_harness(c5, beta, 2, OrderingPlan::all());
        CHECK(res.orderings_tried == 6);
        CHECK(res.successes == 6);
        auto reference = rainbow::enumerate_induced_rainbow_paths(c5, beta, 2);
        for (const auto& p : res.paths) {
            CHECK(std::find(reference.begin(), reference.end(), p) != reference.end());
            CHECK(p.vertices.front() < p.vertices.back());
        }
        CHECK(res.paths.size() == 4);
    }

    SUBCASE("three-vertex paths cover the whole census") {
        auto res = rainbow::rainbow_paths_harness(c5, beta, 3, OrderingPlan::all());
        CHECK(res.orderings_tried == 6);
        CHECK(res.successes == 6);
        auto reference = rainbow::enumerate_induced_rainbow_paths(c5, beta, 3);
        REQUIRE(reference.size() == 3);
        CHECK(res.paths == reference);
        // at least s!/2 distinct paths once the color count reaches s
        CHECK(static_cast<int>(res.paths.size()) >= 3);
    }

    SUBCASE("sampled orderings stay deterministic") {
        auto a = rainbow::rainbow_paths_harness(c5, beta, 2, OrderingPlan::sample(5, 7));
        auto b = rainbow::rainbow_paths_harness(c5, beta, 2, OrderingPlan::sample(5, 7));
        CHECK(a.orderings_tried == 5);
        CHECK(a.successes == 5);
        CHECK(a.paths == b.paths);
        CHECK(a.paths.size() == 3);
    }

    SUBCASE("one-vertex paths pick the top of the reshuffled order") {
        auto res = rainbow::rainbow_paths_harness(c5, beta, 1, OrderingPlan::sample(1, 3));
        CHECK(res.orderings_tried == 1);
        CHECK(res.successes == 1);
        REQUIRE(res.paths.size() == 1);
        CHECK(res.paths[0].vertices.size() == 1);
    }
}

TEST_CASE("ordering harness guards its inputs") {
    UndirectedGraph c5 =
        UndirectedGraph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    Coloring beta({1, 2, 1, 2, 3});

    CHECK_THROWS_AS(rainbow::rainbow_paths_harness(c5, beta, 0, OrderingPlan::all()), Error);
    CHECK_THROWS_AS(
        rainbow::rainbow_paths_harness(c5, Coloring({1, 1, 2, 2, 3}), 2, OrderingPlan::all()),
        Error);
    CHECK_THROWS_AS(rainbow::rainbow_paths_harness(c5, beta, 2, OrderingPlan::sample(0, 1)),
                    Error);
    CHECK_THROWS_AS(rainbow::rainbow_paths_harness(c5, beta, 2, OrderingPlan::all(), 2), Error);

    std::vector<int> rainbow_colors(9);
    std::vector<std::pair<int, int>> k9_edges;
    for (int v = 0; v < 9; ++v) {
        rainbow_colors[v] = v + 1;
        for (int u = 0; u < v; ++u) k9_edges.emplace_back(u, v);
    }
    UndirectedGraph k9 = UndirectedGraph::from_edges(9, k9_edges);
    CHECK_THROWS_AS(
        rainbow::rainbow_paths_harness(k9, Coloring(rainbow_colors), 2, OrderingPlan::all()),
        Error);
}

TEST_CASE("dag embedding handles both tree kinds") {
    OrientedGraph host = OrientedGraph::from_arcs(4, {{0, 1}, {0, 3}, {1, 2}});
    Coloring alpha({3, 2, 1, 1});

    SUBCASE("out-tree with a supplied coloring reuses the core search") {
        auto out = rainbow::dag_tree_embedding(host, out_chain(3), &alpha);
        REQUIRE(out.success());
        CHECK(out.embedding->image == std::vector<int>{0, 1, 2});
        confirm_with_oracle(host, out_chain(3));
    }

    SUBCASE("out-tree without a coloring derives one from the levels") {
        auto out = rainbow::dag_tree_embedding(host, out_chain(3));
        REQUIRE(out.success());
        CHECK(verdict_exact(*out.embedding));
    }

    SUBCASE("in-tree runs on the reversal and maps back") {
        OrientedGraph funnel = OrientedGraph::from_arcs(4, {{1, 0}, {3, 0}, {2, 1}});
        RootedOrientedTree in_chain(3, {{2, 1}, {1, 0}}, 0);
        REQUIRE(in_chain.is_in_tree());
        auto out = rainbow::dag_tree_embedding(funnel, in_chain);
        REQUIRE(out.success());
        CHECK(out.embedding->image == std::vector<int>{0, 1, 2});
        CHECK(verdict_exact(*out.embedding));
        // the image realizes each tree arc as a host arc in the same direction
        const auto& im = out.embedding->image;
        for (auto [a, b] : in_chain.arcs()) {
            const auto& outs = funnel.out_neighbors(im[a]);
            CHECK(std::binary_search(outs.begin(), outs.end(), im[b]));
        }
        confirm_with_oracle(funnel, in_chain);
    }

    SUBCASE("a collapsing reversal coloring is an honest miss, not an error") {
        // Reversing this host levels it as (1,2,3,2), which the refinement
        // collapses to two colors; the greedy route then cannot seat a
        // three-vertex chain even though the oracle finds a copy. Failure
        // comes back as a value with the trace attached.
        RootedOrientedTree in_chain(3, {{2, 1}, {1, 0}}, 0);
        auto out = rainbow::dag_tree_embedding(host, in_chain);
        CHECK_FALSE(out.success());
        CHECK(out.trace.failed());
        CHECK(rainbow::contains_induced_copy(host, in_chain).has_value());
    }

    SUBCASE("induced chains cannot exist in a transitive triangle") {
        OrientedGraph tri = OrientedGraph::from_arcs(3, {{0, 1}, {0, 2}, {1, 2}});
        auto out = rainbow::dag_tree_embedding(tri, out_chain(3));
        CHECK_FALSE(out.success());
        CHECK(out.trace.failed());
    }

    SUBCASE("rejects bad inputs") {
        OrientedGraph cyc = OrientedGraph::from_arcs(3, {{0, 1}, {1, 2}, {2, 0}});
        CHECK_THROWS_AS(rainbow::dag_tree_embedding(cyc, out_chain(2)), Error);

        OrientedGraph path3 = OrientedGraph::from_arcs(3, {{0, 1}, {1, 2}});
        Coloring bad({3, 2, 1});
        CHECK_THROWS_AS(rainbow::dag_tree_embedding(path3, out_chain(2), &bad), Error);

        RootedOrientedTree in_chain(3, {{2, 1}, {1, 0}}, 0);
        CHECK_THROWS_AS(rainbow::dag_tree_embedding(host, in_chain, &alpha), Error);

        RootedOrientedTree mixed(3, {{1, 0}, {0, 2}}, 0);
        REQUIRE_FALSE(mixed.is_out_tree());
        REQUIRE_FALSE(mixed.is_in_tree());
        CHECK_THROWS_AS(rainbow::dag_tree_embedding(host, mixed), Error);
    }
}

TEST_CASE("dag embedding round-trips through reversal on synthesized hosts") {
    for (unsigned long long seed : {1ull, 2ull, 3ull}) {
        auto inst = rainbow::synth_outtree_colored(10, rainbow::default_class_sizes(10),
                                                   SynthConstraint::br_free(2), 0.15, seed, 500);
        const OrientedGraph& d = inst.digraph;
        OrientedGraph rev = rainbow::reverse(d);
        for (int s = 2; s <= 4; ++s) {
            auto catalog = rainbow::oriented_trees(s);
            for (const auto& t : catalog.out_trees) {
                auto out = rainbow::dag_tree_embedding(d, t, &inst.alpha);
                REQUIRE(out.success());
                CHECK(verdict_exact(*out.embedding));
                CHECK(flag_true(out.embedding->verdict.decreasing));
                // placement colors strictly decrease along the search
                const auto& placed = out.trace.placed;
                for (size_t i = 1; i < placed.size(); ++i)
                    CHECK(inst.alpha.rank_of(inst.alpha.color_of(placed[i])) <
                          inst.alpha.rank_of(inst.alpha.color_of(placed[i - 1])));
                CHECK(inst.alpha.rank_of(inst.alpha.color_of(placed[0])) ==
                      inst.alpha.color_count() - 1);
            }
            for (const auto& t : catalog.in_trees) {
                auto out = rainbow::dag_tree_embedding(d, t);
                REQUIRE(out.success());
                CHECK(verdict_exact(*out.embedding));
                // the reversal round trip is exact
                auto mirror = rainbow::dag_tree_embedding(rev, t.reversed());
                REQUIRE(mirror.success());
                CHECK(mirror.embedding->image == out.embedding->image);
            }
        }
    }
}

TEST_CASE("parity search follows the pinned hand trace") {
    OrientedGraph host = OrientedGraph::from_arcs(2, {{0, 1}});
    Coloring gamma({1, 2});
    RootedOrientedTree in_arc(2, {{1, 0}}, 0);
    auto out = rainbow::parity_tree_search(host, gamma, in_arc);
    REQUIRE(out.success());
    CHECK(out.embedding->image == std::vector<int>{1, 0});
    CHECK(out.trace.parity);
    CHECK(out.trace.placed == std::vector<int>{1, 0});
    CHECK(verdict_exact(*out.embedding));

    // an out-rooted arc from a color-2 start has no even color to step to
    RootedOrientedTree out_arc(2, {{0, 1}}, 0);
    auto stuck = rainbow::parity_tree_search(host, gamma, out_arc);
    CHECK_FALSE(stuck.success());
    CHECK(stuck.trace.failed());
    CHECK(stuck.trace.placed == std::vector<int>{1});

    CHECK_THROWS_AS(rainbow::parity_tree_search(host, Coloring({2, 1}), in_arc), Error);
}

TEST_CASE("bikernel embedding works on random dags") {
    int checked = 0;
    for (unsigned long long seed = 1; seed <= 8; ++seed) {
        OrientedGraph d = rainbow::random_dag(8, 0.35, seed);
        if (d.arcs().empty()) continue;
        ++checked;
        Coloring gamma = rainbow::parity_coloring(d).gamma;
        int top = 0;
        for (int v = 0; v < d.vertex_count(); ++v) top = std::max(top, gamma.color_of(v));
        REQUIRE(top >= 2);

        RootedOrientedTree one(1, {}, 0);
        auto single = rainbow::bikernel_tree_embedding(d, one);
        REQUIRE(single.success());
        CHECK(gamma.color_of(single.embedding->image[0]) == top);

        // the catalog's two-vertex tree is rooted at the head, which a
        // layered coloring can always serve
        for (const auto& t : rainbow::oriented_trees(2).all) {
            auto out = rainbow::bikernel_tree_embedding(d, t);
            REQUIRE(out.success());
            CHECK(verdict_exact(*out.embedding));
        }

        for (const auto& t : rainbow::oriented_trees(3).all) {
            auto out = rainbow::bikernel_tree_embedding(d, t);
            CHECK(out.trace.parity);
            if (out.success()) {
                CHECK(verdict_exact(*out.embedding));
                CHECK(rainbow::contains_induced_copy(d, t).has_value());
                const auto& placed = out.trace.placed;
                for (size_t i = 1; i < placed.size(); ++i)
                    CHECK(gamma.color_of(placed[i]) < gamma.color_of(placed[i - 1]));
            } else {
                CHECK(out.trace.failed());
            }
        }
    }
    CHECK(checked >= 6);
}

TEST_CASE("leaf stripping plans match the oracle") {
    SUBCASE("pinned small plans") {
        RootedOrientedTree one(1, {}, 0);
        auto p1 = rainbow::st_plan(one);
        CHECK(p1.st_value == 0);
        CHECK(p1.peel.empty());

        RootedOrientedTree arc(2, {{0, 1}}, 0);
        auto p2 = rainbow::st_plan(arc);
        CHECK(p2.st_value == 1);
        REQUIRE(p2.peel.size() == 1);
        CHECK(p2.peel[0].out_side); // a tie prefers the out side
        CHECK(p2.peel[0].removed == std::vector<int>{1});

        RootedOrientedTree star(3, {{0, 1}, {0, 2}}, 0);
        auto p3 = rainbow::st_plan(star);
        CHECK(p3.st_value == 1);
        CHECK(p3.peel[0].removed == std::vector<int>{1, 2});

        auto p4 = rainbow::st_plan(out_chain(3));
        CHECK(p4.st_value == 2);

        RootedOrientedTree fork(3, {{0, 1}, {2, 1}}, 1);
        auto p5 = rainbow::st_plan(fork);
        CHECK(p5.st_value == 1);
        REQUIRE(p5.peel.size() == 1);
        CHECK_FALSE(p5.peel[0].out_side);
        CHECK(p5.peel[0].removed == std::vector<int>{0, 2});
    }

    SUBCASE("catalog agreement and peel consistency") {
        for (int s = 1; s <= 6; ++s) {
            for (const auto& t : rainbow::oriented_trees(s).all) {
                auto plan = rainbow::st_plan(t);
                CHECK(plan.st_value == oracles::st_value(t));
                CHECK(plan.st_value == static_cast<int>(plan.peel.size()));

                // replay the peel: each step removes exactly the current
                // leaves of its side, and one vertex survives
                std::vector<char> alive(t.vertex_count(), 1);
                int alive_count = t.vertex_count();
                for (const auto& step : plan.peel) {
                    std::vector<int> indeg(t.vertex_count(), 0), outdeg(t.vertex_count(), 0);
                    for (auto [u, v] : t.arcs())
                        if (alive[u] && alive[v]) {
                            ++outdeg[u];
                            ++indeg[v];
                        }
                    for (int v : step.removed) {
                        REQUIRE(alive[v]);
                        if (step.out_side)
                            CHECK((indeg[v] == 1 && outdeg[v] == 0));
                        else
                            CHECK((outdeg[v] == 1 && indeg[v] == 0));
                        alive[v] = 0;
                        --alive_count;
                    }
                }
                CHECK(alive_count == 1);
            }
        }
    }
}

TEST_CASE("fan-free embedding attaches leaves around a surviving core") {
    SUBCASE("rejects degenerate fan parameters") {
        OrientedGraph d = OrientedGraph::from_arcs(2, {{0, 1}});
        CHECK_THROWS_AS(rainbow::br_tree_embedding(d, out_chain(2), 1), Error);
        CHECK_THROWS_AS(rainbow::br_tree_embedding(d, out_chain(2), 0), Error);
    }

    SUBCASE("a star host keeps its center through the peel") {
        OrientedGraph d = OrientedGraph::from_arcs(4, {{0, 1}, {0, 2}, {0, 3}});
        auto out = rainbow::br_tree_embedding(d, out_chain(2), 2);
        REQUIRE(out.success());
        CHECK(out.embedding->image == std::vector<int>{0, 1});
        REQUIRE(out.levels.size() == 1);
        CHECK(out.levels[0].out_side);
        CHECK(out.levels[0].leaves == std::vector<int>{1});
        CHECK(out.levels[0].tree_size_before == 2);
        CHECK(out.levels[0].threshold == 1);
        CHECK(out.levels[0].peeled == std::vector<int>{1, 2, 3});
        CHECK(out.stuck_level == -1);
    }

    SUBCASE("a path host peels away completely") {
        OrientedGraph d = OrientedGraph::from_arcs(3, {{0, 1}, {1, 2}});
        auto out = rainbow::br_tree_embedding(d, out_chain(2), 2);
        CHECK_FALSE(out.success());
        CHECK(out.stuck_level == static_cast<int>(out.levels.size()));
        CHECK(out.partial_image == std::vector<int>(2, -1));
    }

    SUBCASE("an acyclic tournament admits no induced chain") {
        OrientedGraph d = rainbow::random_dag(5, 1.0, 3);
        auto out = rainbow::br_tree_embedding(d, out_chain(3), 2);
        CHECK_FALSE(out.success());
        CHECK(out.stuck_level >= 0);
        CHECK(out.partial_image.size() == 3);
    }

    SUBCASE("peeled layers stay colorable within twice the threshold") {
        for (unsigned long long seed : {1ull, 2ull, 3ull}) {
            OrientedGraph d = rainbow::random_dag(20, 0.3, seed);
            auto out = rainbow::br_tree_embedding(d, out_chain(3), 2);
            for (const auto& level : out.levels) {
                if (level.peeled.empty()) continue;
                auto sub = rainbow::induced_subgraph(d, level.peeled);
                auto chi = rainbow::chromatic_number_exact(sub.graph.underlying());
                CHECK(chi.chi <= 2 * level.threshold);
            }
        }
    }

    SUBCASE("a balanced projective-plane orientation hosts small trees") {
        UndirectedGraph pg = rainbow::projective_plane_incidence(11);
        OrientedGraph d = rainbow::balanced_orientation(pg, 5);
        RootedOrientedTree star(3, {{0, 1}, {0, 2}}, 0);
        auto out = rainbow::br_tree_embedding(d, star, 2);
        REQUIRE(out.success());
        CHECK(verdict_exact(*out.embedding));

        RootedOrientedTree in_arc(2, {{1, 0}}, 0);
        auto out2 = rainbow::br_tree_embedding(d, in_arc, 2);
        REQUIRE(out2.success());
        CHECK(verdict_exact(*out2.embedding));
    }
}

namespace {

// The (r*s)-ary tree used as its own host: underlying edges, identity
// image, each vertex colored by its index.
struct SelfHost {
    RootedOrientedTree tree;
    UndirectedGraph graph;
    Embedding image;
    Coloring coloring;
};

SelfHost self_host(int arity, int levels) {
    RootedOrientedTree tree = rainbow::complete_ary_tree(arity, levels);
    const int n = tree.vertex_count();
    UndirectedGraph graph = UndirectedGraph::from_edges(n, tree.arcs());
    std::vector<int> identity(n), colors(n);
    for (int v = 0; v < n; ++v) {
        identity[v] = v;
        colors[v] = v + 1;
    }
    Embedding image{tree, rainbow::Host{graph}, identity, rainbow::Verdict{}};
    return SelfHost{std::move(tree), std::move(graph), std::move(image), Coloring(colors)};
}

} // namespace

TEST_CASE("ary tree extraction produces induced rainbow copies") {
    SelfHost host = self_host(6, 3);
    REQUIRE(host.tree.vertex_count() == 43);

    SUBCASE("a chain hugs the leftmost branch") {
        auto emb = rainbow::extract_from_rainbow_ary_tree(host.graph, host.image, host.coloring,
                                                          out_chain(3), 2);
        CHECK(emb.image == std::vector<int>{0, 1, 7});
        CHECK(emb.verdict.induced);
        CHECK(flag_true(emb.verdict.rainbow));
        CHECK(rainbow::contains_induced_copy(host.graph, out_chain(3), 50).has_value());
    }

    SUBCASE("a star takes sibling children") {
        RootedOrientedTree star(3, {{0, 1}, {0, 2}}, 0);
        auto emb = rainbow::extract_from_rainbow_ary_tree(host.graph, host.image, host.coloring,
                                                          star, 2);
        CHECK(emb.image == std::vector<int>{0, 1, 2});
        CHECK(emb.verdict.induced);
        CHECK(flag_true(emb.verdict.rainbow));
    }

    SUBCASE("every two- and three-vertex pattern extracts") {
        for (int s = 2; s <= 3; ++s)
            for (const auto& t : rainbow::oriented_trees(s).all) {
                auto emb = rainbow::extract_from_rainbow_ary_tree(host.graph, host.image,
                                                                  host.coloring, t, 2);
                CHECK(emb.verdict.induced);
                CHECK(flag_true(emb.verdict.rainbow));
            }
    }

    SUBCASE("the four-level host handles four-vertex patterns") {
        SelfHost big = self_host(8, 4);
        REQUIRE(big.tree.vertex_count() == 585);
        for (const auto& t : rainbow::oriented_trees(4).all) {
            auto emb = rainbow::extract_from_rainbow_ary_tree(big.graph, big.image, big.coloring,
                                                              t, 2);
            CHECK(emb.verdict.induced);
            CHECK(flag_true(emb.verdict.rainbow));
        }
    }

    SUBCASE("rejects hosts and images that break the contract") {
        CHECK_THROWS_AS(rainbow::extract_from_rainbow_ary_tree(host.graph, host.image,
                                                               host.coloring, out_chain(3), 1),
                        Error);
        CHECK_THROWS_AS(rainbow::extract_from_rainbow_ary_tree(host.graph, host.image,
                                                               host.coloring, out_chain(4), 2),
                        Error);

        SelfHost narrow = self_host(5, 3);
        CHECK_THROWS_AS(rainbow::extract_from_rainbow_ary_tree(narrow.graph, narrow.image,
                                                               narrow.coloring, out_chain(3), 2),
                        Error);

        // adding a second common neighbor pair plants a forbidden fan
        auto edges = host.tree.arcs();
        edges.emplace_back(7, 40);
        edges.emplace_back(7, 41);
        edges.emplace_back(8, 40);
        edges.emplace_back(8, 41);
        UndirectedGraph tainted = UndirectedGraph::from_edges(43, edges);
        Embedding tainted_image{host.tree, rainbow::Host{tainted}, host.image.image,
                                rainbow::Verdict{}};
        CHECK_THROWS_AS(rainbow::extract_from_rainbow_ary_tree(tainted, tainted_image,
                                                               host.coloring, out_chain(3), 2),
                        Error);

        // repeated colors break the rainbow requirement
        std::vector<int> repeated(43, 1);
        for (int v = 0; v < 43; ++v) repeated[v] = (v == 42) ? 1 : v + 1;
        CHECK_THROWS_AS(rainbow::extract_from_rainbow_ary_tree(host.graph, host.image,
                                                               Coloring(repeated), out_chain(3),
                                                               2),
                        Error);

        // a non-injective image is rejected before any scan
        auto squashed = host.image.image;
        squashed[42] = 0;
        Embedding bad_image{host.tree, rainbow::Host{host.graph}, squashed, rainbow::Verdict{}};
        CHECK_THROWS_AS(rainbow::extract_from_rainbow_ary_tree(host.graph, bad_image,
                                                               host.coloring, out_chain(3), 2),
                        Error);
    }
}

namespace {

SearchTrace fabricated_stuck_trace() {
    OrientedGraph host = OrientedGraph::from_arcs(
        8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 4}});
    Coloring alpha({8, 7, 6, 5, 4, 3, 2, 1});
    RootedOrientedTree chain = out_chain(8);
    std::vector<int> order(chain.topo_order());
    return SearchTrace{host,  host, alpha, chain, order, {0, 1, 2, 3, 4, 5, 6},
                       false, 7};
}

} // namespace

TEST_CASE("stuck diagnostic accepts genuine dead ends") {
    std::vector<int> sizes = {500, 300, 180, 100, 60, 36, 20, 10, 1};
    int usable = 0, with_blockers = 0;
    for (unsigned long long seed = 1; seed <= 4; ++seed) {
        auto inst = rainbow::synth_outtree_colored(9, sizes,
                                                   SynthConstraint::girth_at_least(7), 0.05,
                                                   seed, 500);
        auto g = rainbow::girth(inst.digraph.underlying());
        REQUIRE((!g.has_value() || *g >= 7));
        auto out = rainbow::good_tree_search(inst.digraph, inst.digraph, inst.alpha,
                                             out_chain(10));
        REQUIRE_FALSE(out.success()); // ten ranks cannot fit into nine colors
        const int placed = static_cast<int>(out.trace.placed.size());
        if (placed < 7) continue;
        ++usable;
        auto report = rainbow::stuck_state_diagnostic(out.trace, 7);
        CHECK(report.placed_count == placed);
        CHECK(report.color_count == 9);
        CHECK(report.color_accounting_ok);
        CHECK(report.second_step_clean);
        CHECK(report.girth_ok);
        CHECK(report.edge_bound_ok);
        CHECK(report.reconstruction_ok);
        CHECK(report.all_hold());
        if (!report.blocked.empty()) ++with_blockers;
    }
    CHECK(usable >= 3);
    CHECK(with_blockers >= 1);
}

TEST_CASE("stuck diagnostic flags a fabricated trace") {
    SearchTrace trace = fabricated_stuck_trace();
    auto report = rainbow::stuck_state_diagnostic(trace, 7);
    // the accounting, replay, and sparsity all hold, but the chord between
    // the two last placements closes a short cycle in the auxiliary graph
    CHECK(report.placed_count == 7);
    CHECK(report.color_count == 8);
    CHECK(report.blocked == std::vector<int>{7});
    CHECK(report.color_accounting_ok);
    CHECK(report.second_step_clean);
    CHECK(report.reconstruction_ok);
    REQUIRE(report.auxiliary_girth.has_value());
    CHECK(*report.auxiliary_girth == 3);
    CHECK_FALSE(report.girth_ok);
    CHECK(report.auxiliary_edges == 7);
    CHECK(report.edge_bound_ok);
    CHECK_FALSE(report.all_hold());
}

TEST_CASE("stuck diagnostic validates its inputs") {
    SearchTrace trace = fabricated_stuck_trace();
    CHECK_THROWS_AS(rainbow::stuck_state_diagnostic(trace, 4), Error);
    CHECK_THROWS_AS(rainbow::stuck_state_diagnostic(trace, 9), Error); // needs i >= girth

    SearchTrace malformed = fabricated_stuck_trace();
    malformed.stuck_order_position = 6;
    CHECK_THROWS_AS(rainbow::stuck_state_diagnostic(malformed, 7), Error);

    OrientedGraph host = OrientedGraph::from_arcs(4, {{0, 1}, {0, 3}, {1, 2}});
    Coloring alpha({3, 2, 1, 1});
    auto success = rainbow::good_tree_search(host, host, alpha, out_chain(3));
    REQUIRE(success.success());
    CHECK_THROWS_AS(rainbow::stuck_state_diagnostic(success.trace, 5), Error);

    OrientedGraph arc = OrientedGraph::from_arcs(2, {{0, 1}});
    auto parity = rainbow::parity_tree_search(arc, Coloring({1, 2}),
                                              RootedOrientedTree(2, {{0, 1}}, 0));
    REQUIRE(parity.trace.failed());
    CHECK_THROWS_AS(rainbow::stuck_state_diagnostic(parity.trace, 5), Error);
}
