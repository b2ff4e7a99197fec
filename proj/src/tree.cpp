#include "rainbow/tree.hpp"

#include <algorithm>
#include <string>

#include "rainbow/error.hpp"

namespace rainbow {

RootedOrientedTree::RootedOrientedTree(int n, std::vector<std::pair<int, int>> arcs, int root)
    : n_(n), root_(root), arcs_(std::move(arcs)) {
    if (n < 1) throw Error("tree needs at least one vertex");
    if (root < 0 || root >= n) throw Error("root out of range: " + std::to_string(root));
    if (static_cast<int>(arcs_.size()) != n - 1)
        throw Error("tree on " + std::to_string(n) + " vertices needs " + std::to_string(n - 1) +
                    " arcs, got " + std::to_string(arcs_.size()));
    adj_.assign(n, {});
    out_deg_.assign(n, 0);
    in_deg_.assign(n, 0);
    for (auto [u, v] : arcs_) {
        if (u < 0 || u >= n || v < 0 || v >= n) throw Error("arc endpoint out of range");
        if (u == v) throw Error("self-loop at vertex " + std::to_string(u));
        adj_[u].push_back(v);
        adj_[v].push_back(u);
        ++out_deg_[u];
        ++in_deg_[v];
    }
    std::sort(arcs_.begin(), arcs_.end());
    if (std::adjacent_find(arcs_.begin(), arcs_.end()) != arcs_.end())
        throw Error("duplicate arc");
    for (auto& nb : adj_) {
        std::sort(nb.begin(), nb.end());
        if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
            throw Error("parallel arcs between a vertex pair");
    }
    build_orders();
}

void RootedOrientedTree::build_orders() {
    parent_.assign(n_, -2);
    parent_[root_] = -1;
    topo_.clear();
    topo_.reserve(n_);
    topo_.push_back(root_);
    for (std::size_t head = 0; head < topo_.size(); ++head) {
        int u = topo_[head];
        for (int v : adj_[u])
            if (parent_[v] == -2) {
                parent_[v] = u;
                topo_.push_back(v);
            }
    }
    if (static_cast<int>(topo_.size()) != n_)
        throw Error("arcs do not form a connected tree");

    dfs_.clear();
    dfs_.reserve(n_);
    std::vector<int> stack{root_};
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        dfs_.push_back(u);
        // push children in descending index so they pop ascending
        for (auto it = adj_[u].rbegin(); it != adj_[u].rend(); ++it)
            if (*it != parent_[u]) stack.push_back(*it);
    }

    bool all_away = true, all_toward = true;
    for (int v = 0; v < n_; ++v) {
        if (v == root_) continue;
        if (has_arc(parent_[v], v)) all_toward = false;
        else all_away = false;
    }
    if (n_ == 1 || all_away) kind_ = TreeKind::OutTree;
    else if (all_toward) kind_ = TreeKind::InTree;
    else kind_ = TreeKind::General;
}

int RootedOrientedTree::parent_of(int v) const {
    if (v < 0 || v >= n_) throw Error("vertex out of range: " + std::to_string(v));
    return parent_[v];
}

const std::vector<int>& RootedOrientedTree::neighbors(int v) const {
    if (v < 0 || v >= n_) throw Error("vertex out of range: " + std::to_string(v));
    return adj_[v];
}

int RootedOrientedTree::out_degree(int v) const {
    if (v < 0 || v >= n_) throw Error("vertex out of range: " + std::to_string(v));
    return out_deg_[v];
}

int RootedOrientedTree::in_degree(int v) const {
    if (v < 0 || v >= n_) throw Error("vertex out of range: " + std::to_string(v));
    return in_deg_[v];
}

bool RootedOrientedTree::has_arc(int u, int v) const {
    return std::binary_search(arcs_.begin(), arcs_.end(), std::make_pair(u, v));
}

bool RootedOrientedTree::adjacent(int u, int v) const { return has_arc(u, v) || has_arc(v, u); }

bool RootedOrientedTree::is_out_tree() const {
    return n_ == 1 || kind_ == TreeKind::OutTree;
}

bool RootedOrientedTree::is_in_tree() const {
    return n_ == 1 || kind_ == TreeKind::InTree;
}

std::vector<int> RootedOrientedTree::out_leaves() const {
    std::vector<int> out;
    for (int v = 0; v < n_; ++v)
        if (in_deg_[v] == 1 && out_deg_[v] == 0) out.push_back(v);
    return out;
}

std::vector<int> RootedOrientedTree::in_leaves() const {
    std::vector<int> out;
    for (int v = 0; v < n_; ++v)
        if (out_deg_[v] == 1 && in_deg_[v] == 0) out.push_back(v);
    return out;
}

RootedOrientedTree RootedOrientedTree::reversed() const {
    std::vector<std::pair<int, int>> flipped;
    flipped.reserve(arcs_.size());
    for (auto [u, v] : arcs_) flipped.emplace_back(v, u);
    return RootedOrientedTree(n_, std::move(flipped), root_);
}

RootedOrientedTree RootedOrientedTree::rerooted(int new_root) const {
    return RootedOrientedTree(n_, arcs_, new_root);
}

} // namespace rainbow
