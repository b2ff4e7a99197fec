#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "oracles.hpp"
#include "rainbow/coloring.hpp"
#include "rainbow/error.hpp"
#include "rainbow/generators.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/graph_ops.hpp"
#include "rainbow/oracle.hpp"
#include "rainbow/tree.hpp"

using rainbow::CanonicalPath;
using rainbow::Coloring;
using rainbow::Error;
using rainbow::OrientedGraph;
using rainbow::RootedOrientedTree;
using rainbow::UndirectedGraph;

namespace {

std::vector<std::vector<int>> raw(const std::vector<CanonicalPath>& paths) {
    std::vector<std::vector<int>> out;
    for (const auto& p : paths) out.push_back(p.vertices);
    return out;
}

// Subset-first reference enumeration: pick every s-subset, try every ordering
// of it, keep the induced rainbow paths. Structurally unlike the library's
// incremental DFS.
std::set<std::vector<int>> subset_first_paths(const UndirectedGraph& g, const Coloring& c, int s) {
    const int n = g.vertex_count();
    std::set<std::vector<int>> found;
    std::vector<int> pick;
    auto consider = [&]() {
        std::vector<int> seq = pick;
        std::sort(seq.begin(), seq.end());
        do {
            if (s >= 2 && seq.front() > seq.back()) continue;
            bool ok = true;
            for (int i = 0; i < s && ok; ++i)
                for (int j = i + 1; j < s && ok; ++j) {
                    bool want = (j == i + 1);
                    if (g.has_edge(seq[i], seq[j]) != want) ok = false;
                    if (c.color_of(seq[i]) == c.color_of(seq[j])) ok = false;
                }
            if (ok) found.insert(seq);
        } while (std::next_permutation(seq.begin(), seq.end()));
    };
    std::function<void(int)> choose = [&](int from) {
        if (static_cast<int>(pick.size()) == s) {
            consider();
            return;
        }
        for (int v = from; v < n; ++v) {
            pick.push_back(v);
            choose(v + 1);
            pick.pop_back();
        }
    };
    choose(0);
    return found;
}

// Reference induced-copy decision: every injective map from pattern vertices
// to a host subset, checked pairwise against the tree's relation.
bool subset_first_copy(const OrientedGraph* dhost, const UndirectedGraph* uhost,
                       const RootedOrientedTree& pattern) {
    const int n = dhost ? dhost->vertex_count() : uhost->vertex_count();
    const int s = pattern.vertex_count();
    if (s > n) return false;
    std::vector<std::vector<int>> rel(s, std::vector<int>(s, 0));
    for (auto [a, b] : pattern.arcs()) {
        rel[a][b] = 1;
        rel[b][a] = 2;
    }
    auto host_rel = [&](int a, int b) {
        if (uhost) return uhost->has_edge(a, b) ? 1 : 0;
        for (int w : dhost->out_neighbors(a))
            if (w == b) return 1;
        for (int w : dhost->in_neighbors(a))
            if (w == b) return 2;
        return 0;
    };
    std::vector<int> pick;
    bool hit = false;
    auto consider = [&]() {
        std::vector<int> seq = pick;
        std::sort(seq.begin(), seq.end());
        do {
            bool ok = true;
            for (int i = 0; i < s && ok; ++i)
                for (int j = i + 1; j < s && ok; ++j) {
                    int want = rel[i][j];
                    int have = host_rel(seq[i], seq[j]);
                    if (uhost ? ((want != 0) != (have != 0)) : (want != have)) ok = false;
                }
            if (ok) hit = true;
        } while (!hit && std::next_permutation(seq.begin(), seq.end()));
    };
    std::function<void(int)> choose = [&](int from) {
        if (hit) return;
        if (static_cast<int>(pick.size()) == s) {
            consider();
            return;
        }
        for (int v = from; v < n && !hit; ++v) {
            pick.push_back(v);
            choose(v + 1);
            pick.pop_back();
        }
    };
    choose(0);
    return hit;
}

Coloring numeric(std::vector<int> colors) { return Coloring(std::move(colors)); }

} // namespace

TEST_CASE("path enumeration: pinned small cases") {
    auto c3 = rainbow::named_graph("cycle:3");
    CHECK(rainbow::enumerate_induced_rainbow_paths(c3, numeric({1, 2, 3}), 3).empty());

    auto c5 = rainbow::named_graph("cycle:5");
    Coloring beta = numeric({1, 2, 1, 2, 3});

    auto singles = rainbow::enumerate_induced_rainbow_paths(c5, beta, 1);
    CHECK(raw(singles) == std::vector<std::vector<int>>{{0}, {1}, {2}, {3}, {4}});

    auto pairs = rainbow::enumerate_induced_rainbow_paths(c5, beta, 2);
    CHECK(raw(pairs) ==
          std::vector<std::vector<int>>{{0, 1}, {0, 4}, {1, 2}, {2, 3}, {3, 4}});

    auto triples = rainbow::enumerate_induced_rainbow_paths(c5, beta, 3);
    CHECK(raw(triples) == std::vector<std::vector<int>>{{0, 4, 3}, {1, 0, 4}, {2, 3, 4}});

    CHECK(rainbow::enumerate_induced_rainbow_paths(c5, beta, 4).empty());
}

TEST_CASE("path enumeration: guard and precondition failures") {
    auto c5 = rainbow::named_graph("cycle:5");
    CHECK_THROWS_AS(rainbow::enumerate_induced_rainbow_paths(c5, numeric({1, 1, 2, 2, 3}), 3),
                    Error); // improper
    CHECK_THROWS_AS(rainbow::enumerate_induced_rainbow_paths(c5, numeric({1, 2, 3}), 2),
                    Error); // wrong cover
    CHECK_THROWS_AS(rainbow::enumerate_induced_rainbow_paths(c5, numeric({1, 2, 1, 2, 3}), 0),
                    Error);
    CHECK_THROWS_AS(rainbow::enumerate_induced_rainbow_paths(c5, numeric({1, 2, 1, 2, 3}), 11),
                    Error);
    CHECK_THROWS_AS(
        rainbow::enumerate_induced_rainbow_paths(c5, numeric({1, 2, 1, 2, 3}), 3, 40, 2),
        Error); // tightened length guard

    auto big = UndirectedGraph::from_edges(41, {});
    CHECK_THROWS_AS(
        rainbow::enumerate_induced_rainbow_paths(big, numeric(std::vector<int>(41, 1)), 1),
        Error); // vertex guard
}

TEST_CASE("mu: pinned values and guard behavior") {
    auto c5 = rainbow::named_graph("cycle:5");
    CHECK(rainbow::mu(c5, numeric({1, 2, 1, 2, 3})) == 3);

    auto k2 = rainbow::named_graph("complete:2");
    CHECK(rainbow::mu(k2, numeric({1, 2})) == 2);

    auto edgeless = UndirectedGraph::from_edges(3, {});
    CHECK(rainbow::mu(edgeless, numeric({1, 2, 3})) == 1);

    auto p4 = rainbow::named_graph("path:4");
    CHECK(rainbow::mu(p4, numeric({1, 2, 3, 4})) == 4);

    auto empty = UndirectedGraph::from_edges(0, {});
    CHECK_THROWS_AS(rainbow::mu(empty, numeric({})), Error);

    // A rainbow 10-path cannot be measured with the length guard pinned at 5.
    auto p10 = rainbow::named_graph("path:10");
    std::vector<int> rainbow_colors(10);
    std::iota(rainbow_colors.begin(), rainbow_colors.end(), 1);
    CHECK_THROWS_AS(rainbow::mu(p10, numeric(rainbow_colors), 40, 5), Error);
    CHECK(rainbow::mu(p10, numeric(rainbow_colors)) == 10);
}

TEST_CASE("path enumeration agrees with a subset-first reference") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 4 + static_cast<int>(rng() % 7);
        double p = 0.3 + 0.05 * static_cast<double>(rng() % 5);
        auto g = rainbow::random_graph(n, p, rng());
        std::vector<int> order(n);
        std::iota(order.begin(), order.end(), 0);
        Coloring c = rainbow::greedy_coloring(g, order);
        for (int s = 2; s <= 4; ++s) {
            auto got = rainbow::enumerate_induced_rainbow_paths(g, c, s);
            auto want = subset_first_paths(g, c, s);
            REQUIRE(got.size() == want.size());
            for (const auto& path : got) {
                CHECK(want.count(path.vertices) == 1);
                CHECK(path.length() == s);
                CHECK(path.vertices.front() < path.vertices.back());
            }
        }
    }
}

TEST_CASE("induced copy: pinned hosts") {
    RootedOrientedTree path3(3, {{0, 1}, {1, 2}}, 0);

    auto c3 = rainbow::named_graph("cycle:3");
    CHECK(!rainbow::contains_induced_copy(c3, path3).has_value());

    auto dpath = OrientedGraph::from_arcs(3, {{0, 1}, {1, 2}});
    auto hit = rainbow::contains_induced_copy(dpath, path3);
    REQUIRE(hit.has_value());
    CHECK(*hit == std::vector<int>{0, 1, 2});
    auto verdict = rainbow::verify_embedding(dpath, path3, *hit);
    CHECK(verdict.induced);
    CHECK(verdict.direction_exact == true);

    auto dtriangle = OrientedGraph::from_arcs(3, {{0, 1}, {1, 2}, {2, 0}});
    CHECK(!rainbow::contains_induced_copy(dtriangle, path3).has_value());

    auto c5 = rainbow::named_graph("cycle:5");
    auto undirected_hit = rainbow::contains_induced_copy(c5, path3);
    REQUIRE(undirected_hit.has_value());
    CHECK(rainbow::verify_embedding(c5, path3, *undirected_hit).induced);

    // Alternating orientation of C5: only vertices 2 and 4 have two
    // out-neighbors, and 2 is found first.
    auto alt = OrientedGraph::from_arcs(5, {{0, 1}, {2, 1}, {2, 3}, {4, 3}, {4, 0}});
    RootedOrientedTree outstar(3, {{0, 1}, {0, 2}}, 0);
    auto star_hit = rainbow::contains_induced_copy(alt, outstar);
    REQUIRE(star_hit.has_value());
    CHECK(*star_hit == std::vector<int>{2, 1, 3});

    RootedOrientedTree single(1, {}, 0);
    auto single_hit = rainbow::contains_induced_copy(c3, single);
    REQUIRE(single_hit.has_value());
    CHECK(*single_hit == std::vector<int>{0});

    RootedOrientedTree path4(4, {{0, 1}, {1, 2}, {2, 3}}, 0);
    CHECK(!rainbow::contains_induced_copy(c3, path4).has_value());

    auto big = UndirectedGraph::from_edges(15, {});
    CHECK_THROWS_AS(rainbow::contains_induced_copy(big, single), Error);
}

TEST_CASE("induced copy agrees with a subset-first reference on both host kinds") {
    std::mt19937_64 rng(515);
    auto catalog3 = rainbow::oriented_trees(3);
    auto catalog4 = rainbow::oriented_trees(4);
    std::vector<RootedOrientedTree> patterns = catalog3.all;
    patterns.insert(patterns.end(), catalog4.all.begin(), catalog4.all.end());

    for (int trial = 0; trial < 15; ++trial) {
        int n = 5 + static_cast<int>(rng() % 4);
        auto u = rainbow::random_graph(n, 0.4, rng());
        auto d = rainbow::random_dag(n, 0.4, rng());
        for (const auto& t : patterns) {
            auto u_hit = rainbow::contains_induced_copy(u, t);
            CHECK(u_hit.has_value() == subset_first_copy(nullptr, &u, t));
            if (u_hit) {
                auto verdict = rainbow::verify_embedding(u, t, *u_hit);
                CHECK(verdict.induced);
            }
            auto d_hit = rainbow::contains_induced_copy(d, t);
            CHECK(d_hit.has_value() == subset_first_copy(&d, nullptr, t));
            if (d_hit) {
                auto verdict = rainbow::verify_embedding(d, t, *d_hit);
                CHECK(verdict.induced);
                CHECK(verdict.direction_exact == true);
            }
        }
    }
}

TEST_CASE("induced copy is invariant under host relabeling") {
    std::mt19937_64 rng(99);
    auto catalog = rainbow::oriented_trees(4);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 6 + static_cast<int>(rng() % 3);
        auto d = rainbow::random_dag(n, 0.35, rng());
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        for (int i = n - 1; i > 0; --i)
            std::swap(perm[i], perm[rng() % static_cast<unsigned>(i + 1)]);
        std::vector<std::pair<int, int>> arcs;
        for (auto [a, b] : d.arcs()) arcs.emplace_back(perm[a], perm[b]);
        auto relabeled = OrientedGraph::from_arcs(n, arcs);
        const auto& t = catalog.all[trial % catalog.all.size()];
        CHECK(rainbow::contains_induced_copy(d, t).has_value() ==
              rainbow::contains_induced_copy(relabeled, t).has_value());
    }
}

TEST_CASE("conjecture scan: clean corpora come back clean") {
    std::vector<UndirectedGraph> corpus{rainbow::named_graph("cycle:5")};
    auto report = rainbow::aravind_scan(corpus, 6, 1);
    CHECK(report.instances_checked == 6);
    CHECK(report.skipped.empty());
    CHECK(report.counterexamples.empty());

    std::vector<UndirectedGraph> mixed{rainbow::named_graph("complete:3"),
                                       rainbow::named_graph("cycle:5"),
                                       UndirectedGraph::from_edges(0, {})};
    auto mixed_report = rainbow::aravind_scan(mixed, 3, 2);
    CHECK(mixed_report.instances_checked == 3);
    CHECK(mixed_report.skipped == std::vector<int>{0, 2});
    CHECK(mixed_report.counterexamples.empty());

    CHECK_THROWS_AS(rainbow::aravind_scan(corpus, 0, 1), Error);
}

TEST_CASE("conjecture scan: grotzsch under many exact colorings") {
    std::vector<UndirectedGraph> corpus{rainbow::named_graph("grotzsch")};
    auto report = rainbow::aravind_scan(corpus, 200, 7);
    CHECK(report.instances_checked == 200);
    CHECK(report.skipped.empty());
    CHECK(report.counterexamples.empty());
}

TEST_CASE("conjecture scan: random triangle-free corpus") {
    std::vector<UndirectedGraph> corpus;
    for (unsigned long long seed = 1; seed <= 25; ++seed)
        corpus.push_back(rainbow::random_graph(10, 0.25, seed, rainbow::GraphFilter::TriangleFree));
    auto report = rainbow::aravind_scan(corpus, 4, 3);
    CHECK(report.instances_checked == 100);
    CHECK(report.skipped.empty());
    CHECK(report.counterexamples.empty());

    auto again = rainbow::aravind_scan(corpus, 4, 3);
    CHECK(again.instances_checked == report.instances_checked);
    CHECK(again.skipped == report.skipped);
    CHECK(again.counterexamples.size() == report.counterexamples.size());
}
