#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "rainbow/coloring.hpp"
#include "rainbow/embedding.hpp"
#include "rainbow/graph.hpp"

namespace rainbow {

namespace guards {
// Default size guards for the expensive exact procedures. Overridable per
// call; the CLI reads RAINBOW_GUARD_N as a process-wide default.
inline constexpr int kExactChromatic = 40;
inline constexpr int kKernelBacktrack = 30;
inline constexpr int kEnumPathsVertices = 40;
inline constexpr int kEnumPathsLength = 10;
inline constexpr int kInducedCopyVertices = 14;
inline constexpr int kAllOrderingsColors = 8;
inline constexpr int kTreeCatalog = 7;
} // namespace guards

// Shortest cycle length of the underlying graph; empty when there is none.
std::optional<int> girth(const UndirectedGraph& g);
std::optional<int> girth(const OrientedGraph& d);

// K_{2,r} subgraph witness: a pair of vertices with r common neighbors.
// Scans pairs in lexicographic order and returns the first hit.
struct K2rWitness {
    int a, b;
    std::vector<int> common; // r common neighbors, ascending
};
std::optional<K2rWitness> find_k2r(const UndirectedGraph& g, int r);
std::optional<K2rWitness> find_k2r(const OrientedGraph& d, int r);

// B_r witness: tail with r out-neighbors all adjacent to a second vertex,
// i.e. an orientation of K_{2,r} with one vertex of out-degree r.
struct BrWitness {
    int tail, other;
    std::vector<int> middles; // ascending
};
std::optional<BrWitness> find_br(const OrientedGraph& d, int r);

bool is_proper(const UndirectedGraph& g, const Coloring& c);

struct ChromaticResult {
    int chi;
    Coloring coloring; // witness using colors 1..chi
};

// Exact chromatic number via branch and bound (greedy clique lower bound,
// DSATUR upper bound, then per-k backtracking). Guarded by vertex count.
ChromaticResult chromatic_number_exact(const UndirectedGraph& g,
                                       int guard_n = guards::kExactChromatic);

// Greedy coloring along the supplied vertex order (least missing color).
Coloring greedy_coloring(const UndirectedGraph& g, const std::vector<int>& vertex_order);

// A proper k-coloring found by the exact engine with seeded branch ordering;
// used to sample different optimal colorings of the same graph.
Coloring sample_k_coloring(const UndirectedGraph& g, int k, std::uint64_t seed,
                           int guard_n = guards::kExactChromatic);

// Transforms. Induced subgraphs compact to 0..|verts|-1 and report the
// original index of each new vertex.
OrientedGraph reverse(const OrientedGraph& d);

struct InducedUndirected {
    UndirectedGraph graph;
    std::vector<int> original_of;
};
struct InducedOriented {
    OrientedGraph graph;
    std::vector<int> original_of;
};
InducedUndirected induced_subgraph(const UndirectedGraph& g, const std::vector<int>& verts);
InducedOriented induced_subgraph(const OrientedGraph& d, const std::vector<int>& verts);

std::optional<std::vector<int>> topological_order(const OrientedGraph& d);
bool is_acyclic(const OrientedGraph& d);

// Checks an image against the host: induced means host adjacency between
// image vertices is exactly the tree adjacency; direction_exact (oriented
// hosts) means every tree arc maps onto a host arc the same way; rainbow and
// decreasing are computed when a coloring is supplied, decreasing meaning
// colors strictly drop along every root-to-leaf arc under the color order.
Verdict verify_embedding(const UndirectedGraph& host, const RootedOrientedTree& tree,
                         const std::vector<int>& image, const Coloring* coloring = nullptr);
Verdict verify_embedding(const OrientedGraph& host, const RootedOrientedTree& tree,
                         const std::vector<int>& image, const Coloring* coloring = nullptr);

} // namespace rainbow
