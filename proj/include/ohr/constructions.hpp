#pragma once

#include <optional>

#include "ohr/bounds.hpp"
#include "ohr/coloring.hpp"
#include "ohr/hypergraph.hpp"

namespace ohr {

/// Derived parameter block of the step-up construction: m = ceil(n/4),
/// l = ceil(n/2), with the validity hypothesis 2n < R^alpha.
struct StepUpParams {
    long t = 0;
    long n = 0;
    long m = 0;
    long l = 0;
    long R = 0;
    Rational alpha;

    static StepUpParams derive(long t, long n, long R, const Rational& alpha);
};

// chi(u,v,w) = chi1(chi2(u,v), chi2(u,w)) when the labels differ, red
// otherwise; chi1 is a 2-coloring of K_R whose vertices are indexed by the
// labels 1..R. Parallelizes over colex-rank ranges.
HyperedgeColoring stepup_coloring(const HyperedgeColoring& chi1, const EdgeLabeling& chi2);

// Single-threaded reference kept for tests and the benchmark.
HyperedgeColoring stepup_coloring_serial(const HyperedgeColoring& chi1, const EdgeLabeling& chi2);

// Exhaustive scan of all (t+1)-subsets for an all-blue clique; nullopt means
// clean, otherwise the offending vertex set is returned.
std::optional<std::vector<int>> verify_no_blue_clique(const HyperedgeColoring& coloring,
                                                      int t_plus_1);

std::optional<std::vector<int>> verify_no_blue_clique_serial(const HyperedgeColoring& coloring,
                                                             int t_plus_1);

// Uniform labels in {1..R}; the label at colex rank r is a pure function of
// (seed, r), so the result is independent of generation order.
EdgeLabeling random_labeling(int N, int R, std::uint64_t seed);

// log2 of the proof's upper bound on the expected number of red blown-up
// tripartite copies: N^{3n} * 2 * (eR/h)^{nh} * (h/R)^{2n^2} with h = n+l-1.
// This is the bound chain, not the true expectation.
Log2Value expected_red_copies_log2(const Float& log2_N, long R, long n, long m, long l);

// log2 of the terminal chain value (N^3 (e^4 R^(alpha-1))^(n/2+1))^n; equals
// 0 exactly when log2 N = ((n+2)/6)((1-alpha) log2 R - 4 log2 e).
Log2Value expected_red_terminal_log2(const Float& log2_N, const Float& log2_R, long n,
                                     const Rational& alpha);

struct MajorityAuxiliary {
    OrderedHypergraph auxiliary;  // chi-uniform, edges = majority-color monochromatic subsets
    Color majority;
    BigInt majority_count;
    BigInt minority_count;
};

// Auxiliary hypergraph of the majority-color reduction: a chi-subset is an
// edge iff all its k-subsets share the majority color. Red wins ties.
MajorityAuxiliary majority_auxiliary(const HyperedgeColoring& coloring, int chi);

}  // namespace ohr
