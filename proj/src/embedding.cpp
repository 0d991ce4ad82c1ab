#include "ohr/embedding.hpp"

#include <algorithm>
#include <numeric>

namespace ohr {

namespace {

int prefix_single(const PrefixDegreeTable& t, int j) {
    auto it = t.single.find(j);
    return it == t.single.end() ? 0 : it->second;
}

int prefix_pair(const PrefixDegreeTable& t, int j, int k) {
    if (j > k) std::swap(j, k);
    auto it = t.pair.find({j, k});
    return it == t.pair.end() ? 0 : it->second;
}

// pairs of pattern vertices sharing at least one edge
std::vector<std::vector<bool>> pair_adjacency(const OrderedHypergraph& p) {
    std::vector<std::vector<bool>> adj(static_cast<std::size_t>(p.n()),
                                       std::vector<bool>(static_cast<std::size_t>(p.n()), false));
    for (const auto& e : p.edges())
        for (std::size_t a = 0; a < e.size(); ++a)
            for (std::size_t b = a + 1; b < e.size(); ++b) {
                adj[static_cast<std::size_t>(e[a])][static_cast<std::size_t>(e[b])] = true;
                adj[static_cast<std::size_t>(e[b])][static_cast<std::size_t>(e[a])] = true;
            }
    return adj;
}

// nh >= q * total on exact rationals
bool meets_threshold(std::size_t nh, const Rational& q, std::size_t total) {
    return BigInt(nh) * boost::multiprecision::denominator(q) >=
           boost::multiprecision::numerator(q) * total;
}

}  // namespace

Rational schedule_C(const OrderedHypergraph& pattern, int d, const Rational& rho, int i, int j) {
    auto pd = prefix_degrees(pattern, i);
    return rational_pow(rho, static_cast<unsigned>(d * prefix_single(pd, j)));
}

Rational schedule_eps(const OrderedHypergraph& pattern, int d, const Rational& rho, int i,
                      int j) {
    auto pd = prefix_degrees(pattern, i);
    int e = 4 * d * d - d * prefix_single(pd, j);
    return rational_pow(rho, static_cast<unsigned>(e)) / (4 * d);
}

Rational schedule_rho_pair(const OrderedHypergraph& pattern, const Rational& rho, int i, int j,
                           int k) {
    auto pd = prefix_degrees(pattern, i);
    return rational_pow(rho, static_cast<unsigned>(prefix_pair(pd, j, k)));
}

EmbedReport greedy_embed(const OrderedHypergraph& pattern, const HostRef& host,
                         const EmbeddingParams& params, EmbedMode mode, std::uint64_t seed,
                         int sample_trials, std::size_t exact_cap) {
    if (pattern.k() != 3 || host.k() != 3)
        throw InvalidParameter("greedy_embed handles 3-uniform hypergraphs");
    if (params.rho <= 0 || params.rho >= 1)
        throw InvalidParameter("greedy_embed requires rho in (0,1)");
    const int t = pattern.n();
    const int n = host.n();
    if (t < 1) throw InvalidParameter("pattern must have at least one vertex");
    if (n < t) throw InvalidParameter("host must have at least t vertices");

    const int d = params.d > 0 ? params.d : std::max(1, max_degree(pattern));
    const Rational rho = params.rho;
    const Rational eps = params.eps
        ? *params.eps
        : rational_pow(rho, static_cast<unsigned>(15 * d * d)) / (64 * d * d * d);

    EmbedReport report;
    if (params.enforce_size_guarantee && Rational(n) * eps < t) {
        report.failure = EmbedFailure::SizeGuaranteeViolated;
        report.failure_step = 0;
        return report;
    }

    // consecutive intervals, remainder folded into the last one
    const int base = n / t;
    std::vector<std::vector<int>> U(static_cast<std::size_t>(t));
    for (int j = 0; j < t; ++j) {
        int lo = j * base;
        int hi = (j == t - 1) ? n : (j + 1) * base;
        U[static_cast<std::size_t>(j)].resize(static_cast<std::size_t>(hi - lo));
        std::iota(U[static_cast<std::size_t>(j)].begin(), U[static_cast<std::size_t>(j)].end(), lo);
    }
    std::map<std::pair<int, int>, BipartiteGraph> G;
    for (int j = 0; j < t; ++j)
        for (int k = j + 1; k < t; ++k)
            G.emplace(std::make_pair(j, k),
                      BipartiteGraph::complete(U[static_cast<std::size_t>(j)],
                                               U[static_cast<std::size_t>(k)]));

    const auto adj = pair_adjacency(pattern);
    // pattern edges {i,j,k} grouped by smallest vertex
    std::vector<std::vector<std::pair<int, int>>> edges_above(static_cast<std::size_t>(t));
    for (const auto& e : pattern.edges())
        edges_above[static_cast<std::size_t>(e[0])].emplace_back(e[1], e[2]);

    Embedding f(static_cast<std::size_t>(t), -1);

    for (int i = 0; i < t; ++i) {
        auto& ui = U[static_cast<std::size_t>(i)];
        EmbedStepTrace step;
        step.step = i;
        step.u_size = ui.size();

        // neighborhood-size rule for W_{i+1}
        std::vector<std::size_t> w_set;
        for (std::size_t wi = 0; wi < ui.size(); ++wi) {
            bool ok = true;
            for (int j = i + 1; j < t && ok; ++j) {
                if (!adj[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) continue;
                const auto& gij = G.at({i, j});
                Rational rp = schedule_rho_pair(pattern, rho, i, i, j);
                if (!meets_threshold(gij.degree(wi), rp, gij.nr())) ok = false;
            }
            if (ok) w_set.push_back(wi);
        }
        step.w_size = w_set.size();
        if (w_set.empty()) {
            report.trace.push_back(std::move(step));
            report.failure = EmbedFailure::WEmpty;
            report.failure_step = i;
            return report;
        }

        // link-graph bi-density filter per pattern edge {i,j,k}
        for (const auto& [j, k] : edges_above[static_cast<std::size_t>(i)]) step.filtered[{j, k}] = 0;
        std::optional<std::size_t> chosen;
        for (std::size_t wi : w_set) {
            int wlabel = ui[wi];
            bool pass = true;
            for (const auto& [j, k] : edges_above[static_cast<std::size_t>(i)]) {
                auto uj_w = G.at({i, j}).neighborhood(wi);
                auto uk_w = G.at({i, k}).neighborhood(wi);
                BipartiteGraph h = link_graph(host, wlabel, G.at({j, k}), uj_w, uk_w);
                Rational e1 = schedule_eps(pattern, d, rho, i + 1, j);
                Rational e2 = schedule_eps(pattern, d, rho, i + 1, k);
                Rational rp = schedule_rho_pair(pattern, rho, i + 1, j, k);
                BiDenseResult res;
                if (mode == EmbedMode::Exact) {
                    res = bi_dense_exact_or_trivial(h, e1, e2, rp, exact_cap);
                } else {
                    std::uint64_t sub = ctr_rand(
                        seed, ((static_cast<std::uint64_t>(i) * ui.size() + wi) * t + j) * t + k);
                    res = sample_bi_dense(h, e1, e2, rp, sample_trials, sub);
                }
                if (!res.dense) {
                    ++step.filtered[{j, k}];
                    pass = false;
                }
            }
            if (pass && !chosen) chosen = wi;  // smallest survivor; keep counting the rest
        }
        if (!chosen) {
            report.trace.push_back(std::move(step));
            report.failure = EmbedFailure::AllCandidatesFiltered;
            report.failure_step = i;
            return report;
        }
        int flabel = ui[*chosen];
        f[static_cast<std::size_t>(i)] = flabel;
        step.chosen = flabel;
        report.trace.push_back(std::move(step));

        // candidate-set and pair-graph updates
        std::vector<std::vector<std::size_t>> sel(static_cast<std::size_t>(t));
        for (int j = i + 1; j < t; ++j) {
            if (adj[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) {
                sel[static_cast<std::size_t>(j)] = G.at({i, j}).neighborhood(*chosen);
            } else {
                sel[static_cast<std::size_t>(j)].resize(U[static_cast<std::size_t>(j)].size());
                std::iota(sel[static_cast<std::size_t>(j)].begin(),
                          sel[static_cast<std::size_t>(j)].end(), std::size_t{0});
            }
        }
        std::map<std::pair<int, int>, BipartiteGraph> G_next;
        for (int j = i + 1; j < t; ++j) {
            for (int k = j + 1; k < t; ++k) {
                bool is_pattern_edge = false;
                for (const auto& [pj, pk] : edges_above[static_cast<std::size_t>(i)])
                    if (pj == j && pk == k) is_pattern_edge = true;
                if (is_pattern_edge)
                    G_next.emplace(std::make_pair(j, k),
                                   link_graph(host, flabel, G.at({j, k}),
                                              sel[static_cast<std::size_t>(j)],
                                              sel[static_cast<std::size_t>(k)]));
                else
                    G_next.emplace(std::make_pair(j, k),
                                   G.at({j, k}).induced(sel[static_cast<std::size_t>(j)],
                                                        sel[static_cast<std::size_t>(k)]));
            }
        }
        for (int j = i + 1; j < t; ++j) {
            std::vector<int> next;
            for (std::size_t idx : sel[static_cast<std::size_t>(j)])
                next.push_back(U[static_cast<std::size_t>(j)][idx]);
            U[static_cast<std::size_t>(j)] = std::move(next);
        }
        G = std::move(G_next);
    }

    if (!verify_embedding(host, pattern, f))
        throw std::logic_error("greedy_embed produced an invalid embedding");
    report.embedding = std::move(f);
    return report;
}

}  // namespace ohr
