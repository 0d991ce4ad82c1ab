#include "ohr/hypergraph.hpp"

#include <algorithm>

namespace ohr {

namespace {

constexpr std::uint64_t kBitsetCap = 1ULL << 28;

std::uint64_t pack_edge(const std::vector<int>& e) {
    // 8 bits per vertex up to k = 8; fallback hypergraphs keep n <= 255
    std::uint64_t key = 0;
    for (int v : e) key = (key << 8) | static_cast<std::uint64_t>(v);
    return key;
}

}  // namespace

OrderedHypergraph::OrderedHypergraph(int k, int n) : k_(k), n_(n) {
    if (k < 2) throw InvalidParameter("uniformity k must be at least 2");
    if (n < 0) throw InvalidParameter("vertex count must be nonnegative");
    std::uint64_t total = binom64(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(k));
    use_bitset_ = total <= kBitsetCap;
    if (use_bitset_)
        bits_.assign((total + 63) / 64, 0);
    else if (n > 255 || k > 8)
        throw InvalidParameter("hypergraph too large for membership index");
}

OrderedHypergraph::OrderedHypergraph(int k, int n, std::vector<std::vector<int>> edges)
    : OrderedHypergraph(k, n) {
    for (auto& e : edges) add_edge(std::move(e));
}

void OrderedHypergraph::add_edge(std::vector<int> e) {
    if (static_cast<int>(e.size()) != k_)
        throw InvalidParameter("edge arity does not match uniformity");
    std::sort(e.begin(), e.end());
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] < 0 || e[i] >= n_) throw InvalidParameter("edge vertex out of range");
        if (i > 0 && e[i] == e[i - 1]) throw InvalidParameter("edge has repeated vertex");
    }
    if (has_edge(e)) return;
    index_edge(e);
    edges_.push_back(std::move(e));
}

void OrderedHypergraph::index_edge(const std::vector<int>& e) {
    if (use_bitset_) {
        std::uint64_t r = colex_rank(e);
        bits_[r >> 6] |= 1ULL << (r & 63);
    } else {
        packed_.insert(pack_edge(e));
    }
}

bool OrderedHypergraph::has_edge(const std::vector<int>& e) const {
    if (use_bitset_) {
        std::uint64_t r = colex_rank(e);
        return (bits_[r >> 6] >> (r & 63)) & 1;
    }
    return packed_.count(pack_edge(e)) != 0;
}

OrderedHypergraph OrderedHypergraph::reversed() const {
    OrderedHypergraph out(k_, n_);
    for (const auto& e : edges_) {
        std::vector<int> r(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) r[i] = n_ - 1 - e[i];
        out.add_edge(std::move(r));
    }
    return out;
}

OrderedHypergraph complete_hypergraph(int k, int N) {
    if (k < 2 || k > N) throw InvalidParameter("complete hypergraph requires 2 <= k <= N");
    OrderedHypergraph h(k, N);
    std::vector<int> e(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) e[static_cast<std::size_t>(i)] = i;
    while (true) {
        h.add_edge(e);
        // next k-subset in colex order
        int i = 0;
        while (i + 1 < k && e[static_cast<std::size_t>(i)] + 1 == e[static_cast<std::size_t>(i + 1)]) ++i;
        if (e[static_cast<std::size_t>(i)] + 1 >= N) break;
        ++e[static_cast<std::size_t>(i)];
        for (int j = 0; j < i; ++j) e[static_cast<std::size_t>(j)] = j;
    }
    return h;
}

OrderedHypergraph complete_multipartite(int k, int chi, int n) {
    if (k < 2 || chi < k) throw InvalidParameter("multipartite requires chi >= k >= 2");
    if (n < 1) throw InvalidParameter("class size must be positive");
    OrderedHypergraph h(k, chi * n);
    // choose k of the chi classes, then one vertex per chosen class
    std::vector<int> classes(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) classes[static_cast<std::size_t>(i)] = i;
    std::vector<int> pick(static_cast<std::size_t>(k), 0);
    while (true) {
        std::fill(pick.begin(), pick.end(), 0);
        while (true) {
            std::vector<int> e(static_cast<std::size_t>(k));
            for (int i = 0; i < k; ++i)
                e[static_cast<std::size_t>(i)] =
                    classes[static_cast<std::size_t>(i)] * n + pick[static_cast<std::size_t>(i)];
            h.add_edge(std::move(e));
            int i = k - 1;
            while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - 1) --i;
            if (i < 0) break;
            ++pick[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k; ++j) pick[static_cast<std::size_t>(j)] = 0;
        }
        int i = k - 1;
        while (i >= 0 && classes[static_cast<std::size_t>(i)] == chi - k + i) --i;
        if (i < 0) break;
        ++classes[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            classes[static_cast<std::size_t>(j)] = classes[static_cast<std::size_t>(j - 1)] + 1;
    }
    return h;
}

OrderedHypergraph monotone_hyperpath(int k, int n) {
    if (k < 2 || n < k) throw InvalidParameter("hyperpath requires n >= k >= 2");
    OrderedHypergraph h(k, n);
    for (int i = 0; i + k <= n; ++i) {
        std::vector<int> e(static_cast<std::size_t>(k));
        for (int j = 0; j < k; ++j) e[static_cast<std::size_t>(j)] = i + j;
        h.add_edge(std::move(e));
    }
    return h;
}

int max_degree(const OrderedHypergraph& h) {
    std::vector<int> deg(static_cast<std::size_t>(h.n()), 0);
    for (const auto& e : h.edges())
        for (int v : e) ++deg[static_cast<std::size_t>(v)];
    int m = 0;
    for (int d : deg) m = std::max(m, d);
    return m;
}

PrefixDegreeTable prefix_degrees(const OrderedHypergraph& h, int i) {
    if (i < 0 || i > h.n()) throw InvalidParameter("prefix length out of range");
    PrefixDegreeTable t;
    t.i = i;
    for (const auto& e : h.edges()) {
        int in_prefix = 0;
        for (int v : e)
            if (v < i) ++in_prefix;
        if (in_prefix == 0) continue;
        std::vector<int> rest;
        for (int v : e)
            if (v >= i) rest.push_back(v);
        for (int v : rest) t.single[v] += in_prefix;
        for (std::size_t a = 0; a < rest.size(); ++a)
            for (std::size_t b = a + 1; b < rest.size(); ++b)
                t.pair[{rest[a], rest[b]}] += 1;
    }
    return t;
}

int interval_chromatic_number(const OrderedHypergraph& h) {
    if (h.n() == 0) return 0;
    // pred[v] = largest vertex below v sharing an edge with v
    std::vector<int> pred(static_cast<std::size_t>(h.n()), -1);
    for (const auto& e : h.edges())
        for (std::size_t i = 1; i < e.size(); ++i)
            pred[static_cast<std::size_t>(e[i])] =
                std::max(pred[static_cast<std::size_t>(e[i])], e[i - 1]);
    // greedy left-to-right: a new interval starts exactly when keeping v would
    // put two vertices of some edge inside the current interval
    int count = 1, start = 0;
    for (int v = 1; v < h.n(); ++v) {
        if (pred[static_cast<std::size_t>(v)] >= start) {
            ++count;
            start = v;
        }
    }
    return count;
}

}  // namespace ohr
