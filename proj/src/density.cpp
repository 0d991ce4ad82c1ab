#include "ohr/density.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>

namespace ohr {

namespace {

struct CtrRng {
    std::uint64_t seed;
    std::uint64_t ctr;
    std::uint64_t next() { return ctr_rand(seed, ctr++); }
    // unbiased enough at the scales used here (range << 2^64)
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }
};

std::vector<std::size_t> random_subset(CtrRng& rng, std::size_t universe, std::size_t size) {
    std::vector<std::size_t> idx(universe);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    for (std::size_t i = 0; i < size; ++i) {
        std::size_t j = i + rng.below(universe - i);
        std::swap(idx[i], idx[j]);
    }
    idx.resize(size);
    std::sort(idx.begin(), idx.end());
    return idx;
}

}  // namespace

BipartiteGraph::BipartiteGraph(std::vector<int> left, std::vector<int> right)
    : left_(std::move(left)), right_(std::move(right)) {
    rows_.assign(left_.size(), std::vector<std::uint64_t>((right_.size() + 63) / 64, 0));
    consecutive_ = !left_.empty() && !right_.empty() &&
                   std::is_sorted(left_.begin(), left_.end()) &&
                   std::is_sorted(right_.begin(), right_.end()) &&
                   left_.back() < right_.front();
}

BipartiteGraph BipartiteGraph::complete(std::vector<int> left, std::vector<int> right) {
    BipartiteGraph g(std::move(left), std::move(right));
    for (std::size_t li = 0; li < g.nl(); ++li)
        for (std::size_t ri = 0; ri < g.nr(); ++ri) g.set_edge(li, ri);
    return g;
}

void BipartiteGraph::set_edge(std::size_t li, std::size_t ri, bool present) {
    if (present)
        rows_[li][ri >> 6] |= 1ULL << (ri & 63);
    else
        rows_[li][ri >> 6] &= ~(1ULL << (ri & 63));
}

std::size_t BipartiteGraph::degree(std::size_t li) const {
    std::size_t d = 0;
    for (std::uint64_t w : rows_[li]) d += static_cast<std::size_t>(std::popcount(w));
    return d;
}

std::size_t BipartiteGraph::edge_count() const {
    std::size_t total = 0;
    for (std::size_t li = 0; li < nl(); ++li) total += degree(li);
    return total;
}

bool BipartiteGraph::is_complete() const { return edge_count() == nl() * nr(); }

bool BipartiteGraph::is_empty() const { return edge_count() == 0; }

BipartiteGraph BipartiteGraph::induced(const std::vector<std::size_t>& left_idx,
                                       const std::vector<std::size_t>& right_idx) const {
    std::vector<int> l, r;
    for (std::size_t li : left_idx) l.push_back(left_[li]);
    for (std::size_t ri : right_idx) r.push_back(right_[ri]);
    BipartiteGraph out(std::move(l), std::move(r));
    for (std::size_t a = 0; a < left_idx.size(); ++a)
        for (std::size_t b = 0; b < right_idx.size(); ++b)
            if (edge(left_idx[a], right_idx[b])) out.set_edge(a, b);
    return out;
}

std::vector<std::size_t> BipartiteGraph::neighborhood(std::size_t li) const {
    std::vector<std::size_t> out;
    for (std::size_t ri = 0; ri < nr(); ++ri)
        if (edge(li, ri)) out.push_back(ri);
    return out;
}

Rational pair_density(const BipartiteGraph& g, const std::vector<std::size_t>& xs,
                      const std::vector<std::size_t>& ys) {
    if (xs.empty() || ys.empty()) throw InvalidParameter("density of empty set pair");
    std::uint64_t e = 0;
    for (std::size_t li : xs)
        for (std::size_t ri : ys)
            if (g.edge(li, ri)) ++e;
    return Rational(e, static_cast<std::uint64_t>(xs.size()) * ys.size());
}

namespace {

// e(X,Y) < rho * |X| * |Y| on exact rationals
bool violates(const Rational& rho, std::uint64_t edges, std::uint64_t sx, std::uint64_t sy) {
    return BigInt(edges) * boost::multiprecision::denominator(rho) <
           boost::multiprecision::numerator(rho) * sx * sy;
}

// For a fixed X, the sparsest Y of each admissible size takes the right
// vertices with the fewest neighbors in X; a violating Y exists iff one of
// these prefix sets violates. Scans sizes ascending, tie-breaking by index,
// so the reported witness is deterministic.
std::optional<DensityWitness> worst_y_for_x(const BipartiteGraph& g,
                                            const std::vector<std::size_t>& xs,
                                            std::size_t qy, const Rational& rho) {
    std::vector<std::pair<std::size_t, std::size_t>> cnt;  // (neighbors in X, index)
    cnt.reserve(g.nr());
    for (std::size_t ri = 0; ri < g.nr(); ++ri) {
        std::size_t c = 0;
        for (std::size_t li : xs)
            if (g.edge(li, ri)) ++c;
        cnt.emplace_back(c, ri);
    }
    std::sort(cnt.begin(), cnt.end());
    std::uint64_t prefix = 0;
    for (std::size_t sy = 1; sy <= cnt.size(); ++sy) {
        prefix += cnt[sy - 1].first;
        if (sy < qy) continue;
        if (violates(rho, prefix, xs.size(), sy)) {
            DensityWitness w;
            w.xs = xs;
            for (std::size_t i = 0; i < sy; ++i) w.ys.push_back(cnt[i].second);
            std::sort(w.ys.begin(), w.ys.end());
            w.density = Rational(prefix, static_cast<std::uint64_t>(xs.size()) * sy);
            return w;
        }
    }
    return std::nullopt;
}

bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
    std::size_t k = c.size();
    std::size_t i = k;
    while (i > 0) {
        --i;
        if (c[i] + (k - i) < n) {
            ++c[i];
            for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace

BiDenseResult is_bi_dense(const BipartiteGraph& g, const Rational& eps1, const Rational& eps2,
                          const Rational& rho, std::size_t cap) {
    if (eps1 <= 0 || eps1 > 1 || eps2 <= 0 || eps2 > 1 || rho <= 0 || rho > 1)
        throw InvalidParameter("bi-density parameters must lie in (0,1]");
    if (g.nl() > cap || g.nr() > cap)
        throw CapExceeded("bi-density side exceeds exact-mode cap; use sampling mode");
    std::size_t qx = std::max<std::size_t>(
        1, static_cast<std::size_t>(ceil_mul(eps1, static_cast<long>(g.nl()))));
    std::size_t qy = std::max<std::size_t>(
        1, static_cast<std::size_t>(ceil_mul(eps2, static_cast<long>(g.nr()))));
    if (qx > g.nl() || qy > g.nr()) return {true, std::nullopt};  // no qualifying pair
    for (std::size_t sx = qx; sx <= g.nl(); ++sx) {
        std::vector<std::size_t> xs(sx);
        std::iota(xs.begin(), xs.end(), std::size_t{0});
        do {
            if (auto w = worst_y_for_x(g, xs, qy, rho)) return {false, std::move(w)};
        } while (next_combination(xs, g.nl()));
    }
    return {true, std::nullopt};
}

BiDenseResult bi_dense_exact_or_trivial(const BipartiteGraph& g, const Rational& eps1,
                                        const Rational& eps2, const Rational& rho,
                                        std::size_t cap) {
    if (eps1 <= 0 || eps1 > 1 || eps2 <= 0 || eps2 > 1 || rho <= 0 || rho > 1)
        throw InvalidParameter("bi-density parameters must lie in (0,1]");
    std::size_t qx = std::max<std::size_t>(
        1, static_cast<std::size_t>(ceil_mul(eps1, static_cast<long>(g.nl()))));
    std::size_t qy = std::max<std::size_t>(
        1, static_cast<std::size_t>(ceil_mul(eps2, static_cast<long>(g.nr()))));
    if (qx > g.nl() || qy > g.nr()) return {true, std::nullopt};
    if (g.is_complete()) return {true, std::nullopt};  // density 1 everywhere
    if (g.is_empty()) {
        DensityWitness w;
        for (std::size_t i = 0; i < qx; ++i) w.xs.push_back(i);
        for (std::size_t i = 0; i < qy; ++i) w.ys.push_back(i);
        w.density = 0;
        return {false, std::move(w)};
    }
    return is_bi_dense(g, eps1, eps2, rho, cap);
}

BiDenseResult sample_bi_dense(const BipartiteGraph& g, const Rational& eps1,
                              const Rational& eps2, const Rational& rho, int trials,
                              std::uint64_t seed) {
    if (trials < 1) throw InvalidParameter("sample_bi_dense requires trials >= 1");
    std::size_t qx = std::max<std::size_t>(
        1, static_cast<std::size_t>(ceil_mul(eps1, static_cast<long>(g.nl()))));
    std::size_t qy = std::max<std::size_t>(
        1, static_cast<std::size_t>(ceil_mul(eps2, static_cast<long>(g.nr()))));
    if (qx > g.nl() || qy > g.nr()) return {true, std::nullopt};
    for (int t = 0; t < trials; ++t) {
        // a fresh counter block per trial keeps the stream schedule-independent
        CtrRng rng{seed, static_cast<std::uint64_t>(t) << 32};
        std::size_t sx = qx + rng.below(g.nl() - qx + 1);
        std::size_t sy = qy + rng.below(g.nr() - qy + 1);
        auto xs = random_subset(rng, g.nl(), sx);
        auto ys = random_subset(rng, g.nr(), sy);
        Rational d = pair_density(g, xs, ys);
        if (d < rho) return {false, DensityWitness{std::move(xs), std::move(ys), std::move(d)}};
    }
    return {true, std::nullopt};
}

BigInt count_triangles(const BipartiteGraph& g12, const BipartiteGraph& g13,
                       const BipartiteGraph& g23) {
    if (g12.left() != g13.left() || g12.right() != g23.left() || g13.right() != g23.right())
        throw InvalidParameter("triangle counting: inconsistent vertex sets");
    BigInt total = 0;
    for (std::size_t a = 0; a < g12.nl(); ++a) {
        for (std::size_t b = 0; b < g12.nr(); ++b) {
            if (!g12.edge(a, b)) continue;
            std::uint64_t common = 0;
            const auto& ra = g13.row(a);
            const auto& rb = g23.row(b);
            for (std::size_t wi = 0; wi < ra.size(); ++wi)
                common += static_cast<std::uint64_t>(std::popcount(ra[wi] & rb[wi]));
            total += common;
        }
    }
    return total;
}

namespace {

BigInt count_hyperedge_triangles(const HostRef& host, const BipartiteGraph& g12,
                                 const BipartiteGraph& g13, const BipartiteGraph& g23) {
    BigInt total = 0;
    std::vector<int> e(3);
    for (std::size_t a = 0; a < g12.nl(); ++a) {
        for (std::size_t b = 0; b < g12.nr(); ++b) {
            if (!g12.edge(a, b)) continue;
            for (std::size_t c = 0; c < g13.nr(); ++c) {
                if (!g13.edge(a, c) || !g23.edge(b, c)) continue;
                e = {g12.left()[a], g12.right()[b], g13.right()[c]};
                std::sort(e.begin(), e.end());
                if (e[0] == e[1] || e[1] == e[2]) continue;
                if (host.has_edge(e)) ++total;
            }
        }
    }
    return total;
}

bool consecutive_sets(const std::vector<int>& a, const std::vector<int>& b) {
    return *std::max_element(a.begin(), a.end()) < *std::min_element(b.begin(), b.end());
}

}  // namespace

TriVerdict check_tri_witness(const HostRef& host, TriWitness& w, const Rational& eps,
                             const Rational& rho, long m) {
    const auto& v1 = w.g12.left();
    const auto& v2 = w.g12.right();
    const auto& v3 = w.g13.right();
    if (w.g13.left() != v1 || w.g23.left() != v2 || w.g23.right() != v3)
        throw InvalidParameter("tri-witness: inconsistent vertex sets");
    if (!consecutive_sets(v1, v2) || !consecutive_sets(v2, v3))
        throw InvalidParameter("tri-witness: V1, V2, V3 must be consecutive");
    if (static_cast<long>(v1.size()) > m || static_cast<long>(v2.size()) > m ||
        static_cast<long>(v3.size()) > m)
        throw InvalidParameter("tri-witness: set larger than m");
    w.triangles = count_triangles(w.g12, w.g13, w.g23);
    w.hyperedge_triangles = count_hyperedge_triangles(host, w.g12, w.g13, w.g23);
    // triangles < eps * m^3  =>  inapplicable
    BigInt m3 = BigInt(m) * m * m;
    if (w.triangles * boost::multiprecision::denominator(eps) <
        boost::multiprecision::numerator(eps) * m3)
        return TriVerdict::Inapplicable;
    // hyperedge_triangles < rho * triangles  =>  violation
    if (w.hyperedge_triangles * boost::multiprecision::denominator(rho) <
        boost::multiprecision::numerator(rho) * w.triangles)
        return TriVerdict::Violation;
    return TriVerdict::Compliant;
}

BipartiteGraph link_graph(const HostRef& host, int w, const BipartiteGraph& g,
                          const std::vector<std::size_t>& left_idx,
                          const std::vector<std::size_t>& right_idx) {
    BipartiteGraph out = g.induced(left_idx, right_idx);
    std::vector<int> e(3);
    for (std::size_t a = 0; a < out.nl(); ++a) {
        for (std::size_t b = 0; b < out.nr(); ++b) {
            if (!out.edge(a, b)) continue;
            int x = out.left()[a], y = out.right()[b];
            if (w == x || w == y) {
                out.set_edge(a, b, false);
                continue;
            }
            e = {w, x, y};
            std::sort(e.begin(), e.end());
            if (!host.has_edge(e)) out.set_edge(a, b, false);
        }
    }
    return out;
}

namespace {

std::optional<TriWitness> try_tri_candidate(const HostRef& host, BipartiteGraph g12,
                                            BipartiteGraph g13, BipartiteGraph g23,
                                            const Rational& eps, const Rational& rho, long m) {
    TriWitness w{std::move(g12), std::move(g13), std::move(g23)};
    if (check_tri_witness(host, w, eps, rho, m) == TriVerdict::Violation) return w;
    return std::nullopt;
}

// every subset triple (V1,V2,V3), each nonempty of size <= m, with V1 wholly
// before V2 wholly before V3
void enumerate_set_triples(int n, long m,
                           const std::function<bool(const std::vector<int>&, const std::vector<int>&,
                                                    const std::vector<int>&)>& visit);

std::vector<int> bits_to_set(std::uint32_t mask, int offset) {
    std::vector<int> out;
    for (int i = 0; mask; ++i, mask >>= 1)
        if (mask & 1) out.push_back(offset + i);
    return out;
}

void enumerate_set_triples(int n, long m,
                           const std::function<bool(const std::vector<int>&, const std::vector<int>&,
                                                    const std::vector<int>&)>& visit) {
    for (std::uint32_t m1 = 1; m1 < (1u << n); ++m1) {
        if (std::popcount(m1) > m) continue;
        auto v1 = bits_to_set(m1, 0);
        int lo2 = v1.back() + 1;
        if (lo2 >= n - 1) continue;
        int rem2 = n - lo2;
        for (std::uint32_t m2 = 1; m2 < (1u << rem2); ++m2) {
            if (std::popcount(m2) > m) continue;
            auto v2 = bits_to_set(m2, lo2);
            int lo3 = v2.back() + 1;
            if (lo3 >= n) continue;
            int rem3 = n - lo3;
            for (std::uint32_t m3 = 1; m3 < (1u << rem3); ++m3) {
                if (std::popcount(m3) > m) continue;
                auto v3 = bits_to_set(m3, lo3);
                if (!visit(v1, v2, v3)) return;
            }
        }
    }
}

BipartiteGraph graph_from_mask(const std::vector<int>& l, const std::vector<int>& r,
                               std::uint64_t mask) {
    BipartiteGraph g{l, r};
    for (std::size_t a = 0; a < l.size(); ++a)
        for (std::size_t b = 0; b < r.size(); ++b)
            if ((mask >> (a * r.size() + b)) & 1) g.set_edge(a, b);
    return g;
}

}  // namespace

std::optional<TriWitness> falsify_tri_density(const HostRef& host, const Rational& eps,
                                              const Rational& rho, long m,
                                              TriStrategy strategy, std::uint64_t budget,
                                              std::uint64_t seed) {
    if (m < 1) throw InvalidParameter("tri-density: m must be positive");
    const int n = host.n();
    std::optional<TriWitness> found;

    if (strategy == TriStrategy::ExhaustiveTiny) {
        if (m > 5 || n > 12)
            throw InvalidParameter("exhaustive-tiny requires m <= 5 and host n <= 12");
        std::uint64_t left = budget;
        enumerate_set_triples(n, m, [&](const std::vector<int>& v1, const std::vector<int>& v2,
                                        const std::vector<int>& v3) {
            std::uint64_t e12 = 1ULL << (v1.size() * v2.size());
            std::uint64_t e13 = 1ULL << (v1.size() * v3.size());
            std::uint64_t e23 = 1ULL << (v2.size() * v3.size());
            for (std::uint64_t a = 0; a < e12; ++a)
                for (std::uint64_t b = 0; b < e13; ++b)
                    for (std::uint64_t c = 0; c < e23; ++c) {
                        if (left == 0) return false;
                        --left;
                        found = try_tri_candidate(host, graph_from_mask(v1, v2, a),
                                                  graph_from_mask(v1, v3, b),
                                                  graph_from_mask(v2, v3, c), eps, rho, m);
                        if (found) return false;
                    }
            return true;
        });
        return found;
    }

    long s = std::min<long>(m, n / 3);
    if (s < 1) throw InvalidParameter("host too small for interval triples");
    auto interval = [](int lo, long size) {
        std::vector<int> v(static_cast<std::size_t>(size));
        std::iota(v.begin(), v.end(), lo);
        return v;
    };

    if (strategy == TriStrategy::Induced) {
        // per pair: the complete graph plus every link graph of a host vertex
        std::uint64_t left = budget;
        for (int a = 0; a + 3 * s <= n; ++a) {
            for (int b = a + static_cast<int>(s); b + 2 * s <= n; ++b) {
                for (int c = b + static_cast<int>(s); c + s <= n; ++c) {
                    auto v1 = interval(a, s), v2 = interval(b, s), v3 = interval(c, s);
                    auto candidates = [&](const std::vector<int>& l, const std::vector<int>& r,
                                          int w) -> BipartiteGraph {
                        BipartiteGraph complete = BipartiteGraph::complete(l, r);
                        if (w < 0) return complete;
                        std::vector<std::size_t> all_l(l.size()), all_r(r.size());
                        std::iota(all_l.begin(), all_l.end(), std::size_t{0});
                        std::iota(all_r.begin(), all_r.end(), std::size_t{0});
                        return link_graph(host, w, complete, all_l, all_r);
                    };
                    for (int w12 = -1; w12 < n; ++w12)
                        for (int w13 = -1; w13 < n; ++w13)
                            for (int w23 = -1; w23 < n; ++w23) {
                                if (left == 0) return std::nullopt;
                                --left;
                                found = try_tri_candidate(
                                    host, candidates(v1, v2, w12), candidates(v1, v3, w13),
                                    candidates(v2, v3, w23), eps, rho, m);
                                if (found) return found;
                            }
                }
            }
        }
        return std::nullopt;
    }

    // TriStrategy::Random
    for (std::uint64_t t = 0; t < budget; ++t) {
        CtrRng rng{seed, t << 32};
        int a = static_cast<int>(rng.below(static_cast<std::uint64_t>(n - 3 * s + 1)));
        int b = a + static_cast<int>(s) +
                static_cast<int>(rng.below(static_cast<std::uint64_t>(n - 2 * s - a + 1 - s)));
        int c = b + static_cast<int>(s) +
                static_cast<int>(rng.below(static_cast<std::uint64_t>(n - s - b + 1 - s)));
        auto v1 = interval(a, s), v2 = interval(b, s), v3 = interval(c, s);
        auto random_graph = [&](const std::vector<int>& l, const std::vector<int>& r) {
            BipartiteGraph g{l, r};
            for (std::size_t li = 0; li < l.size(); ++li)
                for (std::size_t ri = 0; ri < r.size(); ++ri)
                    if (rng.next() & 1) g.set_edge(li, ri);
            return g;
        };
        auto g12 = random_graph(v1, v2);
        auto g13 = random_graph(v1, v3);
        auto g23 = random_graph(v2, v3);
        found = try_tri_candidate(host, std::move(g12), std::move(g13), std::move(g23), eps,
                                  rho, m);
        if (found) return found;
    }
    return std::nullopt;
}

}  // namespace ohr
