// Brute-force ground truth: exhaustive enumeration of induced rainbow paths,
// the largest-rainbow-path statistic mu, an induced-copy decision procedure
// for oriented trees, and a conjecture scanner that samples exact colorings.
// Everything here favors obviousness over speed and is guarded accordingly.
#pragma once

#include <optional>
#include <vector>

#include "rainbow/coloring.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/graph_ops.hpp"
#include "rainbow/tree.hpp"

namespace rainbow {

// An induced path listed once: for two or more vertices the smaller endpoint
// comes first, so a path and its reversal collapse to the same entry.
struct CanonicalPath {
    std::vector<int> vertices;

    int length() const { return static_cast<int>(vertices.size()); }
    bool operator==(const CanonicalPath&) const = default;
    bool operator<(const CanonicalPath& other) const { return vertices < other.vertices; }
};

// All induced s-vertex paths of g whose colors are pairwise distinct, in
// sorted canonical order. Requires a proper coloring and modest sizes.
std::vector<CanonicalPath> enumerate_induced_rainbow_paths(
    const UndirectedGraph& g, const Coloring& c, int s,
    int guard_n = guards::kEnumPathsVertices, int guard_s = guards::kEnumPathsLength);

// Number of vertices in the largest induced rainbow path of (g, c). At least
// 1 for any nonempty graph and at least 2 whenever g has an edge. Throws if
// the answer cannot be decided without enumerating beyond guard_s.
int mu(const UndirectedGraph& g, const Coloring& c, int guard_n = guards::kEnumPathsVertices,
       int guard_s = guards::kEnumPathsLength);

// Does the host contain an induced copy of the oriented tree? The undirected
// overload matches the tree's underlying shape; the oriented overload also
// requires every arc direction to be reproduced exactly. Returns one witness
// image (indexed by tree vertex) or nothing.
std::optional<std::vector<int>> contains_induced_copy(
    const UndirectedGraph& host, const RootedOrientedTree& pattern,
    int guard_n = guards::kInducedCopyVertices);
std::optional<std::vector<int>> contains_induced_copy(
    const OrientedGraph& host, const RootedOrientedTree& pattern,
    int guard_n = guards::kInducedCopyVertices);

struct AravindCounterexample {
    int graph_index = -1;
    Coloring coloring;
};

struct AravindReport {
    int instances_checked = 0;                        // (graph, coloring) pairs tested
    std::vector<int> skipped;                         // corpus indices that were not triangle-free
    std::vector<AravindCounterexample> counterexamples;
};

// For each triangle-free corpus graph, sample proper colorings that use
// exactly the chromatic number of colors and test whether an induced rainbow
// path on that many vertices exists. Graphs with a triangle are skipped and
// noted rather than rejected.
AravindReport aravind_scan(const std::vector<UndirectedGraph>& corpus, int colorings_per_graph,
                           unsigned long long seed, int guard_chi_n = guards::kExactChromatic,
                           int guard_path_n = guards::kEnumPathsVertices,
                           int guard_path_s = guards::kEnumPathsLength);

} // namespace rainbow
