#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "rainbow/coloring.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/tree.hpp"

namespace rainbow {

using Host = std::variant<UndirectedGraph, OrientedGraph>;

// Flags recomputed from the host and image by verify_embedding. Optional
// flags stay empty when the question does not apply (direction on an
// undirected host, color flags without a coloring).
struct Verdict {
    bool induced = false;
    std::optional<bool> direction_exact;
    std::optional<bool> rainbow;
    std::optional<bool> decreasing;

    bool operator==(const Verdict& other) const = default;
};

// An injective placement of a pattern tree into a host graph. Carries copies
// of both endpoints so the verdict can be revalidated later.
struct Embedding {
    RootedOrientedTree tree;
    Host host;
    std::vector<int> image; // tree vertex -> host vertex
    Verdict verdict;
};

} // namespace rainbow
