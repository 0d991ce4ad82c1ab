#pragma once

#include <optional>
#include <vector>

#include "ohr/coloring.hpp"
#include "ohr/hypergraph.hpp"

namespace ohr {

/// Non-owning handle over either an explicit hypergraph or one color class
/// of a coloring.
class HostRef {
public:
    HostRef(const OrderedHypergraph& h)  // NOLINT: implicit by design
        : k_(h.k()), n_(h.n()), hg_(&h) {}
    HostRef(const ColorView& v)  // NOLINT
        : k_(v.k()), n_(v.n()), col_(&v.coloring()), color_(v.color()) {}

    int k() const { return k_; }
    int n() const { return n_; }
    bool has_edge(const std::vector<int>& e) const {
        return hg_ ? hg_->has_edge(e) : col_->get(e) == color_;
    }

private:
    int k_;
    int n_;
    const OrderedHypergraph* hg_ = nullptr;
    const HyperedgeColoring* col_ = nullptr;
    Color color_ = Color::Red;
};

/// Order-preserving edge-preserving injection; map[p] is the host image of
/// pattern vertex p and the entries are strictly increasing.
using Embedding = std::vector<int>;

// Lexicographically least embedding, if any.
std::optional<Embedding> find_embedding(const HostRef& host, const OrderedHypergraph& pattern);

// Number of order-preserving edge-preserving injections. Parallelizes over
// the image of pattern vertex 0.
BigInt count_embeddings(const HostRef& host, const OrderedHypergraph& pattern);

// Plain single-threaded backtracking, kept as the reference for tests and
// the benchmark.
BigInt count_embeddings_serial(const HostRef& host, const OrderedHypergraph& pattern);

bool verify_embedding(const HostRef& host, const OrderedHypergraph& pattern,
                      const Embedding& emb);

}  // namespace ohr
