#pragma once

#include <map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "ohr/util.hpp"

namespace ohr {

/// k-uniform hypergraph on vertices {0..n-1} under the natural integer order.
/// Edges are stored deduplicated as strictly increasing k-tuples. Membership
/// queries go through a colex-rank bitset when C(n,k) is small enough,
/// otherwise through a hash set of packed tuples.
class OrderedHypergraph {
public:
    OrderedHypergraph(int k, int n);
    OrderedHypergraph(int k, int n, std::vector<std::vector<int>> edges);

    int k() const { return k_; }
    int n() const { return n_; }
    const std::vector<std::vector<int>>& edges() const { return edges_; }
    std::size_t edge_count() const { return edges_.size(); }

    // e must be a strictly increasing k-tuple with entries in [0, n)
    bool has_edge(const std::vector<int>& e) const;

    // validates, sorts and deduplicates
    void add_edge(std::vector<int> e);

    OrderedHypergraph reversed() const;

private:
    void index_edge(const std::vector<int>& e);

    int k_;
    int n_;
    std::vector<std::vector<int>> edges_;
    bool use_bitset_;
    std::vector<std::uint64_t> bits_;           // colex-indexed membership
    std::unordered_set<std::uint64_t> packed_;  // fallback, 8 bits per vertex
};

// Order-aware prefix degree statistics of an embedding pattern.
// Entries are defined for 0-indexed vertices j, k >= i.
struct PrefixDegreeTable {
    int i = 0;
    std::map<int, int> single;                 // j -> weighted prefix degree
    std::map<std::pair<int, int>, int> pair;   // (j,k), j<k -> prefix pair degree
};

OrderedHypergraph complete_hypergraph(int k, int N);
OrderedHypergraph complete_multipartite(int k, int chi, int n);
OrderedHypergraph monotone_hyperpath(int k, int n);

int max_degree(const OrderedHypergraph& h);

// deg over the prefix of the first i vertices (vertices 0..i-1)
PrefixDegreeTable prefix_degrees(const OrderedHypergraph& h, int i);

int interval_chromatic_number(const OrderedHypergraph& h);

}  // namespace ohr
