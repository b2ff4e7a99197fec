#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rainbow/coloring.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/graph_ops.hpp"
#include "rainbow/tree.hpp"

namespace rainbow {

// Catalog graphs by name: "petersen", "grotzsch", "brinkmann", "cycle:N",
// "path:N", "complete:N", "kneser:N,K".
UndirectedGraph named_graph(const std::string& spec);

// Iterated Mycielskian. Adds one to the chromatic number per level while
// preserving triangle-freeness.
UndirectedGraph mycielski(const UndirectedGraph& g, int levels);

enum class GraphFilter { None, TriangleFree, GirthAtLeast };

// G(n,p) sample; filtered variants resample until the filter passes or the
// retry budget runs out.
UndirectedGraph random_graph(int n, double p, std::uint64_t seed,
                             GraphFilter filter = GraphFilter::None, int girth_bound = 0,
                             int retry_budget = 200);

// Random acyclic orientation sample: a random vertex order with each forward
// pair included independently with probability p.
OrientedGraph random_dag(int n, double p, std::uint64_t seed);

struct SynthConstraint {
    enum class Kind { None, BrFree, GirthAtLeast };
    Kind kind = Kind::None;
    int value = 0;

    static SynthConstraint none() { return {}; }
    static SynthConstraint br_free(int r) { return {Kind::BrFree, r}; }
    static SynthConstraint girth_at_least(int g) { return {Kind::GirthAtLeast, g}; }
};

struct SynthInstance {
    OrientedGraph digraph;
    Coloring alpha; // guaranteed to pass the out-tree coloring check
    SynthConstraint constraint;
    std::uint64_t seed = 0;
};

// Class sizes growing geometrically toward low colors, ending at one vertex
// for the top color. Low colors need the most room because every vertex of a
// higher color keeps an arc into each of them.
std::vector<int> default_class_sizes(int k);

// Build a digraph with independent color classes C_1..C_k where every vertex
// of class c has at least one arc into each lower class, all arcs run from
// higher class to lower, and every added arc respects the declared
// constraint. Restarts from scratch (at most retry_budget times) when the
// randomized target choice paints itself into a corner.
SynthInstance synth_outtree_colored(int k, const std::vector<int>& class_sizes,
                                    SynthConstraint constraint, double extra_arc_prob,
                                    std::uint64_t seed, int retry_budget = 200);

struct TreeCatalog {
    std::vector<RootedOrientedTree> all;       // canonical roots and numbering
    std::vector<RootedOrientedTree> out_trees; // re-rooted at the unique source
    std::vector<RootedOrientedTree> in_trees;  // re-rooted at the unique sink
};

// Every oriented tree on s vertices up to isomorphism.
TreeCatalog oriented_trees(int s, int guard_s = guards::kTreeCatalog);

// Out-tree where every internal vertex has exactly `arity` children and the
// root-to-leaf distance is `levels` - 1.
RootedOrientedTree complete_ary_tree(int arity, int levels);

// Point-line incidence graph of the projective plane over F_q (q prime):
// bipartite, (q+1)-regular, girth 6, so in particular K_{2,2}-free.
UndirectedGraph projective_plane_incidence(int q);

// Orient every edge along a seeded Euler circuit, so each vertex ends up
// with in-degree equal to out-degree. Requires all degrees even.
OrientedGraph balanced_orientation(const UndirectedGraph& g, std::uint64_t seed);

} // namespace rainbow
