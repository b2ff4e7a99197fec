#pragma once

#include <optional>
#include <vector>

#include "rainbow/coloring.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/graph_ops.hpp"

namespace rainbow {

struct RefinementResult {
    Coloring alpha; // numeric order
    int color_count_before = 0;
    int color_count_after = 0;
};

// Recolor each vertex with the least positive integer unused on its already
// processed neighbors, processing color classes of beta in beta-order and
// vertices inside a class in ascending index. Never increases the number of
// colors, and every vertex of new color c has neighbors of new colors
// 1..c-1 in strictly lower beta classes.
RefinementResult greedy_refinement(const UndirectedGraph& g, const Coloring& beta);

// Orient every edge from its higher-ranked endpoint to its lower-ranked one.
// Acyclic by construction; colors strictly decrease along directed paths.
OrientedGraph natural_orientation(const UndirectedGraph& g, const Coloring& c);

struct CheckResult {
    bool ok = true;
    int vertex = -1;       // first violating vertex when not ok
    int missing_color = 0; // the color absent from that vertex's neighborhood
};

// Does every vertex see, among its out-neighbors, each used color ranked
// below its own? This is the property the extension searches rely on.
CheckResult check_outtree_coloring(const OrientedGraph& d, const Coloring& c);

// Does every vertex have out-neighbors of every even color below its own and
// in-neighbors of every odd color below its own? Numeric color order.
CheckResult check_parity_coloring(const OrientedGraph& d, const Coloring& c);

// Color a DAG by repeatedly peeling the sink set: color i goes to vertices
// whose out-degree drops to zero once the first i-1 layers are gone.
Coloring level_coloring(const OrientedGraph& d);

enum class KernelKind { Kernel, Antikernel };
enum class KernelMethod { DagGreedy, Backtracking };

// An independent set that dominates the rest of the digraph via out-arcs
// (kernel) or in-arcs (antikernel). DagGreedy requires acyclic input and
// always succeeds; Backtracking works on any digraph up to the size guard
// and returns nullopt when no such set exists.
std::optional<std::vector<int>> kernel_set(const OrientedGraph& d, KernelKind kind,
                                           KernelMethod method,
                                           int guard_n = guards::kKernelBacktrack);

// Definitional predicate behind kernel_set.
bool is_kernel(const OrientedGraph& d, const std::vector<int>& s, KernelKind kind);

struct PeelLayers {
    enum class Kind { OutDegreePeel, KernelAlternation };
    Kind kind = Kind::OutDegreePeel;
    std::vector<std::vector<int>> layers; // disjoint, covering, nonempty
};

struct ParityColoringResult {
    Coloring gamma;
    PeelLayers layers;
};

// Peel alternating antikernels (odd layers) and kernels (even layers) off the
// residual digraph; gamma maps each vertex to its layer index. Throws when a
// residual has no kernel within the backtracking guard.
ParityColoringResult parity_coloring(const OrientedGraph& d,
                                     int guard_n = guards::kKernelBacktrack);

} // namespace rainbow
