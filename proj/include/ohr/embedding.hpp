#pragma once

#include <map>
#include <optional>

#include "ohr/density.hpp"

namespace ohr {

struct EmbeddingParams {
    Rational rho;                  // in (0,1)
    int d = 0;                     // max degree of the pattern; 0 = compute
    std::optional<Rational> eps;   // default 2^-6 * rho^(15 d^2) / d^3
    bool enforce_size_guarantee = false;
};

enum class EmbedMode { Exact, Sampled };

enum class EmbedFailure { WEmpty, AllCandidatesFiltered, SizeGuaranteeViolated };

struct EmbedStepTrace {
    int step = 0;                     // pattern vertex being embedded
    std::size_t u_size = 0;           // |U^i_{i+1}|
    std::size_t w_size = 0;           // |W_{i+1}| after the neighborhood rule
    std::map<std::pair<int, int>, std::size_t> filtered;  // |W^{i+1}_{j,k}| per pattern edge
    int chosen = -1;                  // host vertex, -1 on failure
};

struct EmbedReport {
    std::optional<Embedding> embedding;
    std::optional<EmbedFailure> failure;
    int failure_step = -1;
    std::vector<EmbedStepTrace> trace;

    bool success() const { return embedding.has_value(); }
};

// Parameter schedules of the inductive invariant, exposed for auditing:
// C^i_j, eps^i_j and rho^i_{j,k} as exact rationals. Vertices are 0-indexed,
// i is the number of already-embedded vertices.
Rational schedule_C(const OrderedHypergraph& pattern, int d, const Rational& rho, int i, int j);
Rational schedule_eps(const OrderedHypergraph& pattern, int d, const Rational& rho, int i, int j);
Rational schedule_rho_pair(const OrderedHypergraph& pattern, const Rational& rho, int i, int j,
                           int k);

// The inductive greedy embedding: splits the host into t consecutive
// intervals, then at each step keeps the candidates with large enough
// neighborhoods, drops those whose link graphs fail the scheduled
// bi-density, and embeds the smallest survivor.
EmbedReport greedy_embed(const OrderedHypergraph& pattern, const HostRef& host,
                         const EmbeddingParams& params, EmbedMode mode, std::uint64_t seed = 0,
                         int sample_trials = 64, std::size_t exact_cap = 16);

}  // namespace ohr
