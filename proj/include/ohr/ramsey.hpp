#pragma once

#include <optional>

#include "ohr/containment.hpp"

namespace ohr {

struct RamseyOptions {
    // DFS decision-bit cap: C(N,k) above this is rejected rather than run
    std::uint64_t max_decision_bits = 40;
    int threads = 0;   // 0 = OpenMP default
    int split_bits = 0;  // parallel subtree split on the first B bits; 0 = serial
};

// A coloring of K^(k)_N with no blue copy of `blue` and no red copy of
// `red`, or nullopt when the exhaustive DFS proves none exists. Subsets are
// decided in colex order; after each decision only copies closed by that
// subset are checked.
std::optional<HyperedgeColoring> find_avoiding_coloring(const OrderedHypergraph& blue,
                                                        const OrderedHypergraph& red, int N,
                                                        const RamseyOptions& opts = {});

struct RamseyResult {
    bool closed = false;  // true: value is exact; false: only a lower bound
    int value = 0;        // the Ramsey number, or N_cap when not closed
    // avoiding coloring at value-1 (resp. N_cap), absent for trivial values
    std::optional<HyperedgeColoring> certificate;
};

// Least N <= N_cap admitting no avoiding coloring; when every probed N has
// one, reports the lower bound "> N_cap" with its certificate.
RamseyResult ordered_ramsey_exact(const OrderedHypergraph& blue, const OrderedHypergraph& red,
                                  int N_cap, const RamseyOptions& opts = {});

}  // namespace ohr
