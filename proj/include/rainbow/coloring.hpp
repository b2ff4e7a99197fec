#pragma once

#include <unordered_map>
#include <vector>

namespace rainbow {

// Vertex coloring with positive integer colors plus an explicit total order on
// the colors in use. The order is a permutation of the used color set; most
// constructions use the numeric order, but every color-sensitive operation
// consults the order, not the raw values.
class Coloring {
public:
    Coloring() = default;

    // Numeric ascending order over the used colors.
    explicit Coloring(std::vector<int> color_of);
    // Explicit order; must be a permutation of the used color set.
    Coloring(std::vector<int> color_of, std::vector<int> order);

    int vertex_count() const { return static_cast<int>(color_of_.size()); }
    int color_of(int v) const;
    const std::vector<int>& assignments() const { return color_of_; }
    const std::vector<int>& order() const { return order_; }
    int color_count() const { return static_cast<int>(order_.size()); }

    // 0-based position of a color in the order. Throws for unused colors.
    int rank_of(int color) const;
    // Highest color under the order. Throws on an empty coloring.
    int top_color() const;
    bool uses_color(int color) const { return rank_.count(color) > 0; }

    // Same assignment re-ranked: vertex v gets color rank_of(old) + 1, with
    // numeric order. Searches run on this form; results map back by rank.
    Coloring rank_normalized() const;

    Coloring with_order(std::vector<int> order) const;

    bool operator==(const Coloring& other) const {
        return color_of_ == other.color_of_ && order_ == other.order_;
    }

private:
    void index_order();

    std::vector<int> color_of_;
    std::vector<int> order_;
    std::unordered_map<int, int> rank_;
};

} // namespace rainbow
