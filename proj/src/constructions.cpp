#include "ohr/constructions.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>

namespace ohr {

StepUpParams StepUpParams::derive(long t, long n, long R, const Rational& alpha) {
    if (t < 1 || n < 1 || R < 2) throw InvalidParameter("step-up parameters out of range");
    if (alpha <= 0 || alpha > 1) throw InvalidParameter("step-up alpha must be in (0,1]");
    StepUpParams p;
    p.t = t;
    p.n = n;
    p.m = (n + 3) / 4;
    p.l = (n + 1) / 2;
    p.R = R;
    p.alpha = alpha;
    if (p.l < 2 * p.m - 1)
        throw InvalidParameter("step-up parameters violate l >= 2m-1");
    return p;
}

namespace {

Color stepup_color_of(const HyperedgeColoring& chi1, const EdgeLabeling& chi2,
                      const std::vector<int>& triple) {
    int a = chi2.get(triple[0], triple[1]);
    int b = chi2.get(triple[0], triple[2]);
    if (a == b) return Color::Red;
    return chi1.get({std::min(a, b) - 1, std::max(a, b) - 1});
}

void check_stepup_inputs(const HyperedgeColoring& chi1, const EdgeLabeling& chi2) {
    if (chi1.k() != 2) throw InvalidParameter("stepup: chi1 must be a graph coloring");
    if (chi2.R() > chi1.N())
        throw InvalidParameter("stepup: labels must index chi1's vertices (R <= chi1.N)");
}

}  // namespace

HyperedgeColoring stepup_coloring_serial(const HyperedgeColoring& chi1,
                                         const EdgeLabeling& chi2) {
    check_stepup_inputs(chi1, chi2);
    HyperedgeColoring out(3, chi2.N());
    for (std::uint64_t r = 0; r < out.subset_count(); ++r)
        out.set_rank(r, stepup_color_of(chi1, chi2, colex_unrank(r, 3)));
    return out;
}

HyperedgeColoring stepup_coloring(const HyperedgeColoring& chi1, const EdgeLabeling& chi2) {
    check_stepup_inputs(chi1, chi2);
    HyperedgeColoring out(3, chi2.N());
    const std::uint64_t total = out.subset_count();
    // byte-granular ranges so no two threads touch the same byte
    const std::uint64_t bytes = (total + 7) / 8;
#pragma omp parallel for schedule(static)
    for (std::uint64_t byte = 0; byte < bytes; ++byte) {
        std::uint64_t lo = byte * 8;
        std::uint64_t hi = std::min(lo + 8, total);
        for (std::uint64_t r = lo; r < hi; ++r)
            out.set_rank(r, stepup_color_of(chi1, chi2, colex_unrank(r, 3)));
    }
    return out;
}

namespace {

std::optional<std::vector<int>> blue_clique_from(const HyperedgeColoring& c, int first,
                                                 int t_plus_1) {
    // scan (t+1)-subsets whose smallest vertex is `first`, in lex order
    const int N = c.N();
    const int q = t_plus_1;
    std::vector<int> sub(static_cast<std::size_t>(q));
    sub[0] = first;
    for (int i = 1; i < q; ++i) sub[static_cast<std::size_t>(i)] = first + i;
    if (sub.back() >= N) return std::nullopt;
    auto all_blue = [&](const std::vector<int>& s) {
        std::vector<int> tri(3);
        for (int a = 0; a < q; ++a)
            for (int b = a + 1; b < q; ++b)
                for (int d = b + 1; d < q; ++d) {
                    tri = {s[static_cast<std::size_t>(a)], s[static_cast<std::size_t>(b)],
                           s[static_cast<std::size_t>(d)]};
                    if (c.get(tri) != Color::Blue) return false;
                }
        return true;
    };
    while (true) {
        if (all_blue(sub)) return sub;
        // next lex subset with fixed smallest element
        int i = q - 1;
        while (i >= 1 && sub[static_cast<std::size_t>(i)] == N - q + i) --i;
        if (i < 1) return std::nullopt;
        ++sub[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < q; ++j)
            sub[static_cast<std::size_t>(j)] = sub[static_cast<std::size_t>(j - 1)] + 1;
    }
}

}  // namespace

std::optional<std::vector<int>> verify_no_blue_clique_serial(const HyperedgeColoring& coloring,
                                                             int t_plus_1) {
    if (coloring.k() != 3) throw InvalidParameter("verify_no_blue_clique expects k = 3");
    if (t_plus_1 < 3 || t_plus_1 > coloring.N()) return std::nullopt;
    for (int first = 0; first + t_plus_1 <= coloring.N(); ++first)
        if (auto hit = blue_clique_from(coloring, first, t_plus_1)) return hit;
    return std::nullopt;
}

std::optional<std::vector<int>> verify_no_blue_clique(const HyperedgeColoring& coloring,
                                                      int t_plus_1) {
    if (coloring.k() != 3) throw InvalidParameter("verify_no_blue_clique expects k = 3");
    if (t_plus_1 < 3 || t_plus_1 > coloring.N()) return std::nullopt;
    const int firsts = coloring.N() - t_plus_1 + 1;
    // deterministic result: the counterexample with the smallest first vertex wins
    std::atomic<int> best_first{firsts};
    std::vector<std::optional<std::vector<int>>> hits(static_cast<std::size_t>(firsts));
#pragma omp parallel for schedule(dynamic)
    for (int first = 0; first < firsts; ++first) {
        if (first > best_first.load(std::memory_order_relaxed)) continue;
        if (auto hit = blue_clique_from(coloring, first, t_plus_1)) {
            hits[static_cast<std::size_t>(first)] = std::move(hit);
            int cur = best_first.load(std::memory_order_relaxed);
            while (first < cur &&
                   !best_first.compare_exchange_weak(cur, first, std::memory_order_relaxed)) {
            }
        }
    }
    for (const auto& h : hits)
        if (h) return h;
    return std::nullopt;
}

EdgeLabeling random_labeling(int N, int R, std::uint64_t seed) {
    if (N < 2 || R < 1) throw InvalidParameter("random_labeling requires N >= 2, R >= 1");
    EdgeLabeling lab(N, R);
    const std::uint64_t pairs = binom64(static_cast<std::uint64_t>(N), 2);
#pragma omp parallel for schedule(static)
    for (std::uint64_t r = 0; r < pairs; ++r) {
        auto pr = colex_unrank(r, 2);
        lab.set(pr[0], pr[1], 1 + static_cast<int>(ctr_rand(seed, r) % static_cast<std::uint64_t>(R)));
    }
    return lab;
}

Log2Value expected_red_copies_log2(const Float& log2_N, long R, long n, long m, long l) {
    if (R < 1 || n < 1 || m < 1 || l < 1)
        throw InvalidParameter("expected_red_copies_log2 requires positive parameters");
    if (l < 2 * m - 1) throw InvalidParameter("expected_red_copies_log2 requires l >= 2m-1");
    const Float h = Float(n + l - 1);
    const Float log2e = log2f50(boost::multiprecision::exp(Float(1)));
    Float t1 = Float(3 * n) * log2_N;
    Float t2 = 1;  // the factor 2
    Float t3 = Float(n) * h * (log2e + log2f50(Float(R)) - log2f50(h));
    Float t4 = Float(2) * Float(n) * Float(n) * (log2f50(h) - log2f50(Float(R)));
    Float v = t1 + t2 + t3 + t4;
    Float err = (boost::multiprecision::abs(t1) + boost::multiprecision::abs(t3) +
                 boost::multiprecision::abs(t4) + boost::multiprecision::abs(v)) *
                    Float("1e-45") +
                Float("1e-60");
    return {v, err, false};
}

Log2Value expected_red_terminal_log2(const Float& log2_N, const Float& log2_R, long n,
                                     const Rational& alpha) {
    const Float log2e = log2f50(boost::multiprecision::exp(Float(1)));
    Float inner = 3 * log2_N +
                  (Float(n) / 2 + 1) * (4 * log2e + (to_float(alpha) - 1) * log2_R);
    Float v = Float(n) * inner;
    Float err = (boost::multiprecision::abs(Float(n) * 3 * log2_N) +
                 boost::multiprecision::abs(v)) *
                    Float("1e-45") +
                Float("1e-40");
    return {v, err, false};
}

MajorityAuxiliary majority_auxiliary(const HyperedgeColoring& coloring, int chi) {
    const int k = coloring.k();
    const int N = coloring.N();
    if (chi < k || chi > N)
        throw InvalidParameter("majority_auxiliary requires k <= chi <= N");
    std::vector<std::vector<int>> red_sets, blue_sets;
    std::vector<int> sub(static_cast<std::size_t>(chi));
    for (int i = 0; i < chi; ++i) sub[static_cast<std::size_t>(i)] = i;
    std::vector<int> ksub(static_cast<std::size_t>(k));
    while (true) {
        // monochromatic iff all k-subsets of sub share one color
        bool any_red = false, any_blue = false;
        std::vector<int> pick(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = i;
        while (!(any_red && any_blue)) {
            for (int i = 0; i < k; ++i)
                ksub[static_cast<std::size_t>(i)] =
                    sub[static_cast<std::size_t>(pick[static_cast<std::size_t>(i)])];
            (coloring.get(ksub) == Color::Red ? any_red : any_blue) = true;
            int i = k - 1;
            while (i >= 0 && pick[static_cast<std::size_t>(i)] == chi - k + i) --i;
            if (i < 0) break;
            ++pick[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k; ++j)
                pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
        }
        if (any_red != any_blue) (any_red ? red_sets : blue_sets).push_back(sub);
        int i = chi - 1;
        while (i >= 0 && sub[static_cast<std::size_t>(i)] == N - chi + i) --i;
        if (i < 0) break;
        ++sub[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < chi; ++j)
            sub[static_cast<std::size_t>(j)] = sub[static_cast<std::size_t>(j - 1)] + 1;
    }
    MajorityAuxiliary out{OrderedHypergraph(chi, N), Color::Red, BigInt(red_sets.size()),
                          BigInt(blue_sets.size())};
    bool red_wins = red_sets.size() >= blue_sets.size();
    out.majority = red_wins ? Color::Red : Color::Blue;
    out.majority_count = red_wins ? red_sets.size() : blue_sets.size();
    out.minority_count = red_wins ? blue_sets.size() : red_sets.size();
    for (auto& e : (red_wins ? red_sets : blue_sets)) out.auxiliary.add_edge(std::move(e));
    return out;
}

}  // namespace ohr
