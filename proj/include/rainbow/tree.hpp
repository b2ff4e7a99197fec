#pragma once

#include <utility>
#include <vector>

namespace rainbow {

enum class TreeKind { OutTree, InTree, General };

// Oriented tree with a distinguished root. Arcs may point either way relative
// to the root; kind() reports whether all arcs lead away from it (out-tree),
// toward it (in-tree), or mix. Stored orders both list parents before
// children: topo_order() is a BFS layering, dfs_order() a preorder walk with
// children visited in ascending index.
class RootedOrientedTree {
public:
    RootedOrientedTree(int n, std::vector<std::pair<int, int>> arcs, int root);

    int vertex_count() const { return n_; }
    int root() const { return root_; }
    int parent_of(int v) const; // -1 at the root
    const std::vector<std::pair<int, int>>& arcs() const { return arcs_; }
    const std::vector<int>& neighbors(int v) const; // underlying, sorted
    int out_degree(int v) const;
    int in_degree(int v) const;
    bool has_arc(int u, int v) const;
    bool adjacent(int u, int v) const;
    const std::vector<int>& topo_order() const { return topo_; }
    const std::vector<int>& dfs_order() const { return dfs_; }

    TreeKind kind() const { return kind_; }
    bool is_out_tree() const;
    bool is_in_tree() const;

    // Leaf sides as used by the peeling recursion: an out-leaf has in-degree 1
    // and out-degree 0, an in-leaf out-degree 1 and in-degree 0.
    std::vector<int> out_leaves() const;
    std::vector<int> in_leaves() const;

    RootedOrientedTree reversed() const; // arcs flipped, same root
    RootedOrientedTree rerooted(int new_root) const;

    bool operator==(const RootedOrientedTree& other) const {
        return n_ == other.n_ && root_ == other.root_ && arcs_ == other.arcs_;
    }

private:
    void build_orders();

    int n_ = 0;
    int root_ = 0;
    std::vector<std::pair<int, int>> arcs_; // sorted lexicographic
    std::vector<std::vector<int>> adj_;
    std::vector<int> out_deg_, in_deg_;
    std::vector<int> parent_, topo_, dfs_;
    TreeKind kind_ = TreeKind::General;
};

} // namespace rainbow
