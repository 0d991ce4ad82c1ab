#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ohr/hypergraph.hpp"

namespace ohr {

enum class Color { Red, Blue };

inline Color other(Color c) { return c == Color::Red ? Color::Blue : Color::Red; }

/// Red/blue 2-coloring of all k-subsets of {0..N-1}, bit-packed over colex
/// ranks. Bit 1 = blue, 0 = red.
class HyperedgeColoring {
public:
    HyperedgeColoring(int k, int N, Color fill = Color::Red);

    int k() const { return k_; }
    int N() const { return N_; }
    std::uint64_t subset_count() const { return count_; }

    Color get(const std::vector<int>& subset) const;
    Color get_rank(std::uint64_t rank) const;
    void set(const std::vector<int>& subset, Color c);
    void set_rank(std::uint64_t rank, Color c);

    bool operator==(const HyperedgeColoring&) const = default;

    // File format: header "ORC k N", then lowercase hex of the bit array in
    // colex order, most-significant bit first within each byte.
    std::string serialize() const;
    static HyperedgeColoring parse(const std::string& text);

private:
    int k_;
    int N_;
    std::uint64_t count_;
    std::vector<std::uint8_t> bytes_;  // bit r lives in bytes_[r/8], MSB first
};

/// The ordered hypergraph formed by the subsets of one color. Cheap view,
/// never materializes the edge list.
class ColorView {
public:
    ColorView(const HyperedgeColoring& coloring, Color color)
        : coloring_(&coloring), color_(color) {}

    int k() const { return coloring_->k(); }
    int n() const { return coloring_->N(); }
    bool has_edge(const std::vector<int>& e) const { return coloring_->get(e) == color_; }
    std::size_t edge_count() const;

    const HyperedgeColoring& coloring() const { return *coloring_; }
    Color color() const { return color_; }

    OrderedHypergraph materialize() const;

private:
    const HyperedgeColoring* coloring_;
    Color color_;
};

/// Map from 2-subsets of {0..N-1} to labels in {1..R}, colex-indexed.
class EdgeLabeling {
public:
    EdgeLabeling(int N, int R);

    int N() const { return N_; }
    int R() const { return R_; }

    int get(int u, int v) const;
    void set(int u, int v, int label);

    bool operator==(const EdgeLabeling&) const = default;

    // File format: header "ORL N R", then whitespace-separated labels in
    // colex order.
    std::string serialize() const;
    static EdgeLabeling parse(const std::string& text);

private:
    int N_;
    int R_;
    std::vector<int> labels_;
};

}  // namespace ohr
