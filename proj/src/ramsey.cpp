#include "ohr/ramsey.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>

namespace ohr {

namespace {

// Copy-closure test: is there an order-preserving copy of `pattern` in color
// `c` whose colex-maximal edge image is exactly `last`? Only edges at ranks
// <= rank(last) are inspected, so partial colorings are safe.
struct ClosureChecker {
    const OrderedHypergraph& pattern;
    std::vector<int> max_edge;                       // colex-max pattern edge
    std::vector<std::vector<const std::vector<int>*>> by_max;  // pattern edges per max vertex
    std::vector<int> pin;                            // pattern vertex -> forced host image, -1 free

    explicit ClosureChecker(const OrderedHypergraph& p) : pattern(p) {
        by_max.resize(static_cast<std::size_t>(p.n()));
        for (const auto& e : p.edges()) {
            by_max[static_cast<std::size_t>(e.back())].push_back(&e);
            if (max_edge.empty() || colex_rank(e) > colex_rank(max_edge)) max_edge = e;
        }
        pin.assign(static_cast<std::size_t>(p.n()), -1);
    }

    bool closed_at(const HyperedgeColoring& col, const std::vector<int>& last, Color c) {
        for (std::size_t q = 0; q < max_edge.size(); ++q)
            pin[static_cast<std::size_t>(max_edge[q])] = last[q];
        std::vector<int> map(static_cast<std::size_t>(pattern.n()), -1);
        bool hit = search(col, c, map, 0, 0);
        for (int v : max_edge) pin[static_cast<std::size_t>(v)] = -1;
        return hit;
    }

private:
    bool edges_mono(const HyperedgeColoring& col, Color c, const std::vector<int>& map,
                    int p) const {
        std::vector<int> image;
        for (const auto* e : by_max[static_cast<std::size_t>(p)]) {
            image.clear();
            for (int pv : *e) image.push_back(map[static_cast<std::size_t>(pv)]);
            if (col.get(image) != c) return false;
        }
        return true;
    }

    bool search(const HyperedgeColoring& col, Color c, std::vector<int>& map, int p,
                int min_host) const {
        if (p == pattern.n()) return true;
        int forced = pin[static_cast<std::size_t>(p)];
        if (forced >= 0) {
            if (forced < min_host) return false;
            map[static_cast<std::size_t>(p)] = forced;
            return edges_mono(col, c, map, p) && search(col, c, map, p + 1, forced + 1);
        }
        int last = col.N() - (pattern.n() - p);
        for (int v = min_host; v <= last; ++v) {
            if (std::find(pin.begin() + p, pin.end(), v) != pin.end()) continue;
            map[static_cast<std::size_t>(p)] = v;
            if (edges_mono(col, c, map, p) && search(col, c, map, p + 1, v + 1)) return true;
        }
        return false;
    }
};

struct Dfs {
    HyperedgeColoring col;
    ClosureChecker blue_check;
    ClosureChecker red_check;
    std::uint64_t total;
    std::vector<std::vector<int>> subsets;  // unranked once up front

    Dfs(const OrderedHypergraph& blue, const OrderedHypergraph& red, int N)
        : col(blue.k(), N), blue_check(blue), red_check(red),
          total(col.subset_count()) {
        subsets.reserve(total);
        for (std::uint64_t r = 0; r < total; ++r) subsets.push_back(colex_unrank(r, blue.k()));
    }

    bool admissible(std::uint64_t r, Color c) {
        col.set_rank(r, c);
        ClosureChecker& chk = c == Color::Blue ? blue_check : red_check;
        return !chk.closed_at(col, subsets[r], c);
    }

    bool run(std::uint64_t r, bool fix_first_red) {
        if (r == total) return true;
        for (Color c : {Color::Red, Color::Blue}) {
            if (r == 0 && fix_first_red && c == Color::Blue) break;
            if (admissible(r, c) && run(r + 1, fix_first_red)) return true;
        }
        return false;
    }
};

bool same_pattern(const OrderedHypergraph& a, const OrderedHypergraph& b) {
    return a.k() == b.k() && a.n() == b.n() && a.edges() == b.edges();
}

}  // namespace

std::optional<HyperedgeColoring> find_avoiding_coloring(const OrderedHypergraph& blue,
                                                        const OrderedHypergraph& red, int N,
                                                        const RamseyOptions& opts) {
    if (blue.k() != red.k()) throw InvalidParameter("patterns must share uniformity");
    const int k = blue.k();
    if (N < 0) throw InvalidParameter("N must be nonnegative");
    // an edgeless pattern that fits is present in every coloring
    if (blue.edge_count() == 0 && blue.n() <= N) return std::nullopt;
    if (red.edge_count() == 0 && red.n() <= N) return std::nullopt;
    std::uint64_t total = binom64(static_cast<std::uint64_t>(N), static_cast<std::uint64_t>(k));
    if (total == 0) return HyperedgeColoring(k, N);  // nothing to color, nothing to contain
    if (total > opts.max_decision_bits)
        throw CapExceeded("ramsey search: decision bits exceed configured cap");

    const bool diagonal = same_pattern(blue, red);
    int split = opts.split_bits;
    if (split <= 0 || static_cast<std::uint64_t>(split) >= total) {
        Dfs dfs(blue, red, N);
        if (dfs.run(0, diagonal)) return dfs.col;
        return std::nullopt;
    }

    // parallel subtree split over the first `split` decisions; the winner is
    // the success with the smallest prefix, which matches the serial DFS
    const std::uint64_t prefixes = 1ULL << split;
    std::atomic<std::uint64_t> best{prefixes};
    std::vector<std::optional<HyperedgeColoring>> results(prefixes);
#pragma omp parallel for schedule(dynamic) num_threads(opts.threads > 0 ? opts.threads : omp_get_max_threads())
    for (std::uint64_t p = 0; p < prefixes; ++p) {
        if (p >= best.load(std::memory_order_relaxed)) continue;
        if (diagonal && (p >> (split - 1)) != 0) continue;  // first decision fixed red
        Dfs dfs(blue, red, N);
        bool ok = true;
        for (int i = 0; i < split && ok; ++i) {
            Color c = ((p >> (split - 1 - i)) & 1) ? Color::Blue : Color::Red;
            ok = dfs.admissible(static_cast<std::uint64_t>(i), c);
        }
        if (ok && dfs.run(static_cast<std::uint64_t>(split), false)) {
            results[p] = dfs.col;
            std::uint64_t cur = best.load(std::memory_order_relaxed);
            while (p < cur && !best.compare_exchange_weak(cur, p, std::memory_order_relaxed)) {
            }
        }
    }
    for (const auto& r : results)
        if (r) return r;
    return std::nullopt;
}

RamseyResult ordered_ramsey_exact(const OrderedHypergraph& blue, const OrderedHypergraph& red,
                                  int N_cap, const RamseyOptions& opts) {
    RamseyResult out;
    std::optional<HyperedgeColoring> prev;
    for (int N = 1; N <= N_cap; ++N) {
        auto avoid = find_avoiding_coloring(blue, red, N, opts);
        if (!avoid) {
            out.closed = true;
            out.value = N;
            out.certificate = std::move(prev);
            return out;
        }
        prev = std::move(avoid);
    }
    out.closed = false;
    out.value = N_cap;
    out.certificate = std::move(prev);
    return out;
}

}  // namespace ohr
