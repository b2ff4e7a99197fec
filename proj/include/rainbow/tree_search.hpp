// Extension searches that place an oriented tree vertex by vertex inside a
// colored host, always moving to strictly smaller colors. A failed search is
// a value, not an exception: the trace it returns describes the maximal
// partial placement, and stuck_state_diagnostic can rebuild the blocked
// representatives from it and check the counting facts that a genuine dead
// end must satisfy.
#pragma once

#include <optional>
#include <vector>

#include "rainbow/coloring.hpp"
#include "rainbow/embedding.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/graph_ops.hpp"
#include "rainbow/oracle.hpp"
#include "rainbow/tree.hpp"

namespace rainbow {

// Everything needed to replay a search step by step. adjacency_host (F)
// supplies the conflict constraints, arc_host (G, arcs a subset of F's)
// supplies the representatives; plain searches run with the two equal.
struct SearchTrace {
    OrientedGraph adjacency_host;
    OrientedGraph arc_host;
    Coloring alpha;
    RootedOrientedTree pattern;
    std::vector<int> pattern_order; // traversal order used (parent before child)
    std::vector<int> placed;        // host vertices, in placement order
    bool parity = false;            // placed by the parity rule (colors read numerically)
    int stuck_order_position = -1;  // index into pattern_order that could not be placed

    bool failed() const { return stuck_order_position >= 0; }
};

struct SearchOutcome {
    std::optional<Embedding> embedding; // set on success
    SearchTrace trace;                  // always populated

    bool success() const { return embedding.has_value(); }
};

// Core extension search. Requires alpha to be an out-tree coloring of
// arc_host and pattern to be an out-tree. Starts from the least-index vertex
// of the top color; every later vertex is the representative out-neighbor of
// its parent's image at the largest color below the previous placement that
// has no adjacency_host neighbor among the other placed vertices.
SearchOutcome good_tree_search(const OrientedGraph& adjacency_host, const OrientedGraph& arc_host,
                               const Coloring& alpha, const RootedOrientedTree& pattern);

// Undirected pipeline: refine beta, orient along the refined colors, keep
// the arcs on which beta strictly decreases, and run the core search with
// the pattern read as an out-tree from its root. A successful embedding is
// induced in g and beta-decreasing along every root-to-leaf path.
SearchOutcome decreasing_tree_search(const UndirectedGraph& g, const Coloring& beta,
                                     const RootedOrientedTree& pattern);

struct OrderingPlan {
    enum class Kind { All, Sample };
    Kind kind = Kind::All;
    int sample_count = 0;
    unsigned long long seed = 0;

    static OrderingPlan all() { return {}; }
    static OrderingPlan sample(int count, unsigned long long seed) {
        return {Kind::Sample, count, seed};
    }
};

struct RainbowPathsResult {
    std::vector<CanonicalPath> paths; // distinct canonical paths, sorted
    int orderings_tried = 0;
    int successes = 0;
};

// Runs decreasing_tree_search with an s-vertex path pattern once per color
// ordering of beta and collects the distinct canonical paths. Every path is
// re-verified induced, rainbow, and decreasing under the reordered beta
// before it is admitted. Enumerating all orderings is guarded by color count.
RainbowPathsResult rainbow_paths_harness(const UndirectedGraph& g, const Coloring& beta, int s,
                                         const OrderingPlan& plan,
                                         int guard_k = guards::kAllOrderingsColors);

// Embeds an out-tree or in-tree in a DAG. Out-trees run the core search with
// the supplied coloring (validated) or the refinement of the level coloring;
// in-trees recurse on the reversed DAG and reversed tree, recomputing the
// coloring there, and map the result back.
SearchOutcome dag_tree_embedding(const OrientedGraph& d, const RootedOrientedTree& pattern,
                                 const Coloring* supplied_coloring = nullptr);

// Extension search under a parity coloring (colors read as literal numbers):
// a tree arc parent->child consumes an even color from the parent's
// out-neighbors, an arc child->parent an odd color from its in-neighbors.
// The pattern may be any oriented tree; traversal follows its DFS order.
SearchOutcome parity_tree_search(const OrientedGraph& d, const Coloring& gamma,
                                 const RootedOrientedTree& pattern);

// parity_coloring composed with parity_tree_search.
SearchOutcome bikernel_tree_embedding(const OrientedGraph& d, const RootedOrientedTree& pattern,
                                      int kernel_guard_n = guards::kKernelBacktrack);

struct StPlanStep {
    bool out_side = true;     // true: removed every out-leaf; false: every in-leaf
    std::vector<int> removed; // tree vertex ids, ascending
};

// Leaf-stripping schedule: st_value steps take the tree down to one vertex,
// each removing all leaves of one side, following a minimizing branch of the
// recursion (ties prefer the out-leaf side).
struct StPlan {
    int st_value = 0;
    std::vector<StPlanStep> peel; // first entry peels the full tree
};

StPlan st_plan(const RootedOrientedTree& tree);

struct BrLevel {
    bool out_side = true;
    std::vector<int> leaves;  // tree ids attached at this level, ascending
    int tree_size_before = 0; // tree size before this peel step
    int threshold = 0;        // (r-1)(tree_size_before-2) + |leaves|
    std::vector<int> peeled;  // host vertices whose degree fell at or below the threshold
};

struct BrOutcome {
    std::optional<Embedding> embedding;
    std::vector<BrLevel> levels;    // outermost first, one per peel step
    int stuck_level = -1;           // level whose attachment failed; levels.size() when
                                    // the innermost core was empty; -1 on success
    std::vector<int> partial_image; // tree vertex -> host vertex or -1

    bool success() const { return embedding.has_value(); }
};

// Recursive embedding for hosts without an r-fan: peel low-degree vertices
// level by level following st_plan, embed the single surviving tree vertex
// in the surviving host core, then reattach each level's leaves by scanning
// the parent image's neighbors on the appropriate side.
BrOutcome br_tree_embedding(const OrientedGraph& d, const RootedOrientedTree& pattern, int r);

// Induction step of the ary-tree argument: given a rainbow (not necessarily
// induced) copy of the complete (r*s)-ary tree with s levels inside a
// K_{2,r}-free graph, extracts any tree pattern on at most s vertices as an
// induced rainbow copy. A failed child scan would witness a forbidden
// K_{2,r} and is reported as a host-contract breach.
Embedding extract_from_rainbow_ary_tree(const UndirectedGraph& g, const Embedding& ary_image,
                                        const Coloring& coloring,
                                        const RootedOrientedTree& pattern, int r);

// Facts a genuine dead end of good_tree_search must satisfy on a host of
// girth at least girth_parameter, rebuilt from the trace: color accounting
// (every color is placed or blocked), a clean second step, and sparsity of
// the auxiliary graph linking parents to blockers.
struct StuckStateReport {
    int placed_count = 0;                  // i
    int color_count = 0;                   // k
    std::vector<int> blocked;              // X: blocked representatives, sorted
    bool color_accounting_ok = false;      // k == i + |X|
    bool second_step_clean = false;        // no blocked colors at step 2
    std::optional<int> auxiliary_girth;    // girth of H (empty when acyclic)
    bool girth_ok = false;                 // girth(H) >= ceil(g/2), acyclic passes
    int auxiliary_edges = 0;               // |E(H)|
    double edge_bound = 0.0;               // (i^(1+4/(g-4)) + i) / 2
    bool edge_bound_ok = false;            // |E(H)| < edge_bound
    bool reconstruction_ok = false;        // replay matched the trace exactly

    bool all_hold() const {
        return color_accounting_ok && second_step_clean && girth_ok && edge_bound_ok &&
               reconstruction_ok;
    }
};

StuckStateReport stuck_state_diagnostic(const SearchTrace& trace, int girth_parameter);

} // namespace rainbow
