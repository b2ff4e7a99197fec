#include "rainbow/coloring.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "rainbow/error.hpp"

namespace rainbow {

Coloring::Coloring(std::vector<int> color_of) : color_of_(std::move(color_of)) {
    std::set<int> used;
    for (int c : color_of_) {
        if (c < 1) throw Error("colors must be positive, got " + std::to_string(c));
        used.insert(c);
    }
    order_.assign(used.begin(), used.end());
    index_order();
}

Coloring::Coloring(std::vector<int> color_of, std::vector<int> order)
    : color_of_(std::move(color_of)), order_(std::move(order)) {
    std::set<int> used;
    for (int c : color_of_) {
        if (c < 1) throw Error("colors must be positive, got " + std::to_string(c));
        used.insert(c);
    }
    std::set<int> ordered(order_.begin(), order_.end());
    if (ordered.size() != order_.size()) throw Error("color order contains a repeat");
    if (ordered != used) throw Error("color order must be a permutation of the used colors");
    index_order();
}

void Coloring::index_order() {
    rank_.clear();
    for (int i = 0; i < static_cast<int>(order_.size()); ++i) rank_[order_[i]] = i;
}

int Coloring::color_of(int v) const {
    if (v < 0 || v >= vertex_count())
        throw Error("vertex out of range: " + std::to_string(v));
    return color_of_[v];
}

int Coloring::rank_of(int color) const {
    auto it = rank_.find(color);
    if (it == rank_.end()) throw Error("color not in use: " + std::to_string(color));
    return it->second;
}

int Coloring::top_color() const {
    if (order_.empty()) throw Error("empty coloring has no top color");
    return order_.back();
}

Coloring Coloring::rank_normalized() const {
    std::vector<int> ranked(color_of_.size());
    for (int v = 0; v < vertex_count(); ++v) ranked[v] = rank_of(color_of_[v]) + 1;
    return Coloring(std::move(ranked));
}

Coloring Coloring::with_order(std::vector<int> order) const {
    return Coloring(color_of_, std::move(order));
}

} // namespace rainbow
