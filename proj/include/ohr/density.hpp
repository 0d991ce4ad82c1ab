#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "ohr/containment.hpp"

namespace ohr {

/// Bipartite graph between two sets of host vertices, left wholly before
/// right when built from intervals. Adjacency is kept as bitrows per left
/// vertex.
class BipartiteGraph {
public:
    BipartiteGraph(std::vector<int> left, std::vector<int> right);

    static BipartiteGraph complete(std::vector<int> left, std::vector<int> right);

    std::size_t nl() const { return left_.size(); }
    std::size_t nr() const { return right_.size(); }
    const std::vector<int>& left() const { return left_; }
    const std::vector<int>& right() const { return right_; }
    bool consecutive() const { return consecutive_; }

    bool edge(std::size_t li, std::size_t ri) const {
        return (rows_[li][ri >> 6] >> (ri & 63)) & 1;
    }
    void set_edge(std::size_t li, std::size_t ri, bool present = true);
    const std::vector<std::uint64_t>& row(std::size_t li) const { return rows_[li]; }

    std::size_t degree(std::size_t li) const;
    std::size_t edge_count() const;
    bool is_complete() const;
    bool is_empty() const;

    // Induced subgraph on index subsets of the two sides.
    BipartiteGraph induced(const std::vector<std::size_t>& left_idx,
                           const std::vector<std::size_t>& right_idx) const;

    // Right-side indices adjacent to left vertex li.
    std::vector<std::size_t> neighborhood(std::size_t li) const;

private:
    std::vector<int> left_;
    std::vector<int> right_;
    std::vector<std::vector<std::uint64_t>> rows_;
    bool consecutive_;
};

/// Subset pair certifying a bi-density violation: indices into the graph's
/// sides plus the exact offending density.
struct DensityWitness {
    std::vector<std::size_t> xs;
    std::vector<std::size_t> ys;
    Rational density;
};

struct BiDenseResult {
    bool dense = false;
    std::optional<DensityWitness> witness;
};

// Exact rational edge density between index subsets X and Y.
Rational pair_density(const BipartiteGraph& g, const std::vector<std::size_t>& xs,
                      const std::vector<std::size_t>& ys);

// Exhaustive bi-(eps1,eps2,rho)-density check over all qualifying subset
// pairs; the size thresholds use ceilings. Throws CapExceeded when a side is
// larger than `cap`.
BiDenseResult is_bi_dense(const BipartiteGraph& g, const Rational& eps1, const Rational& eps2,
                          const Rational& rho, std::size_t cap = 16);

// Exact where trivially decidable at any size (complete, empty, or vacuous
// thresholds), otherwise defers to the exhaustive check.
BiDenseResult bi_dense_exact_or_trivial(const BipartiteGraph& g, const Rational& eps1,
                                        const Rational& eps2, const Rational& rho,
                                        std::size_t cap = 16);

// One-sided randomized falsifier; a clean run is not a proof of density.
BiDenseResult sample_bi_dense(const BipartiteGraph& g, const Rational& eps1,
                              const Rational& eps2, const Rational& rho, int trials,
                              std::uint64_t seed);

// Triangles (a,b,c) in V1 x V2 x V3 with ab in g12, ac in g13, bc in g23.
// The three graphs must agree on their shared sides.
BigInt count_triangles(const BipartiteGraph& g12, const BipartiteGraph& g13,
                       const BipartiteGraph& g23);

/// Consecutive triple of vertex sets plus pair graphs, certifying (or
/// failing to certify) a tri-density violation.
struct TriWitness {
    BipartiteGraph g12;
    BipartiteGraph g13;
    BipartiteGraph g23;
    BigInt triangles = 0;
    BigInt hyperedge_triangles = 0;
};

enum class TriVerdict { Violation, Compliant, Inapplicable };

enum class TriStrategy { ExhaustiveTiny, Induced, Random };

// Recounts both triangle totals from raw data and classifies the witness
// against tri-(eps,rho,m)-density.
TriVerdict check_tri_witness(const HostRef& host, TriWitness& w, const Rational& eps,
                             const Rational& rho, long m);

std::optional<TriWitness> falsify_tri_density(const HostRef& host, const Rational& eps,
                                              const Rational& rho, long m,
                                              TriStrategy strategy, std::uint64_t budget,
                                              std::uint64_t seed);

// Link graph of w inside g: keeps the edges {x,y} of g for which {w,x,y} is
// a host hyperedge, restricted to the given index subsets of g's sides.
BipartiteGraph link_graph(const HostRef& host, int w, const BipartiteGraph& g,
                          const std::vector<std::size_t>& left_idx,
                          const std::vector<std::size_t>& right_idx);

}  // namespace ohr
