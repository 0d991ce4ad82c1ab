#include <doctest.h>

#include "ohr/embedding.hpp"

using namespace ohr;

namespace {

OrderedHypergraph blowup_pattern(int t) { return complete_multipartite(3, t, 1); }

}  // namespace

TEST_CASE("parameter schedules match their closed forms") {
    auto p = monotone_hyperpath(3, 5);
    int d = max_degree(p);  // 3
    Rational rho(1, 2);
    // deg over the prefix {0,1} of vertex 2 is 3
    CHECK(schedule_C(p, d, rho, 2, 2) == rational_pow(rho, 3 * 3));
    CHECK(schedule_eps(p, d, rho, 2, 2) == rational_pow(rho, 4 * 9 - 9) / 12);
    CHECK(schedule_rho_pair(p, rho, 2, 2, 3) == rho);  // pair degree 1
    // untouched vertices keep the empty-prefix schedule
    CHECK(schedule_C(p, d, rho, 0, 4) == 1);
    CHECK(schedule_rho_pair(p, rho, 0, 3, 4) == 1);
}

TEST_CASE("schedule step identities") {
    // C^{i+1}_j = C^i_j without a shared pattern edge, and otherwise
    // rho^i_{i+1,j} * C^i_j >= C^{i+1}_j
    std::vector<OrderedHypergraph> patterns{monotone_hyperpath(3, 6), complete_hypergraph(3, 5),
                                            blowup_pattern(4)};
    for (const auto& p : patterns) {
        int d = max_degree(p);
        Rational rho(3, 4);
        std::vector<std::vector<bool>> share(static_cast<std::size_t>(p.n()),
                                             std::vector<bool>(static_cast<std::size_t>(p.n())));
        for (const auto& e : p.edges())
            for (std::size_t a = 0; a < e.size(); ++a)
                for (std::size_t b = 0; b < e.size(); ++b)
                    share[static_cast<std::size_t>(e[a])][static_cast<std::size_t>(e[b])] = true;
        for (int i = 0; i + 1 < p.n(); ++i) {
            for (int j = i + 1; j < p.n(); ++j) {
                Rational before = schedule_C(p, d, rho, i, j);
                Rational after = schedule_C(p, d, rho, i + 1, j);
                if (!share[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) {
                    CHECK(after == before);
                } else {
                    CHECK(schedule_rho_pair(p, rho, i, i, j) * before >= after);
                }
            }
        }
    }
}

TEST_CASE("single edge embeds into the complete host on three vertices") {
    OrderedHypergraph edge(3, 3, {{0, 1, 2}});
    EmbeddingParams params;
    params.rho = Rational(99, 100);
    auto r = greedy_embed(edge, complete_hypergraph(3, 3), params, EmbedMode::Exact);
    REQUIRE(r.success());
    CHECK(*r.embedding == Embedding{0, 1, 2});
}

TEST_CASE("hyperpath on the complete 160-vertex host") {
    auto host = complete_hypergraph(3, 160);
    EmbeddingParams params;
    params.rho = Rational(99, 100);
    auto r = greedy_embed(monotone_hyperpath(3, 4), host, params, EmbedMode::Exact);
    REQUIRE(r.success());
    CHECK(verify_embedding(host, monotone_hyperpath(3, 4), *r.embedding));
    CHECK(find_embedding(host, monotone_hyperpath(3, 4)).has_value());
    // trace covers every step and records the chosen vertices in order
    CHECK(r.trace.size() == 4);
    for (std::size_t i = 0; i < r.trace.size(); ++i) {
        CHECK(r.trace[i].step == static_cast<int>(i));
        CHECK(r.trace[i].chosen == (*r.embedding)[i]);
        CHECK(r.trace[i].w_size <= r.trace[i].u_size);
        CHECK(r.trace[i].w_size >= 1);
    }
}

TEST_CASE("success on complete hosts across patterns and densities") {
    std::vector<OrderedHypergraph> patterns{monotone_hyperpath(3, 4), monotone_hyperpath(3, 5),
                                            complete_hypergraph(3, 4), blowup_pattern(3),
                                            blowup_pattern(5), blowup_pattern(6)};
    for (const auto& p : patterns) {
        auto host = complete_hypergraph(3, 40 * p.n());
        for (const Rational& rho : {Rational(1, 2), Rational(3, 4), Rational(99, 100)}) {
            EmbeddingParams params;
            params.rho = rho;
            auto r = greedy_embed(p, host, params, EmbedMode::Exact);
            REQUIRE(r.success());
            CHECK(verify_embedding(host, p, *r.embedding));
        }
    }
}

TEST_CASE("edgeless hosts fail with a report, not a crash") {
    OrderedHypergraph host(3, 160);
    EmbeddingParams params;
    params.rho = Rational(1, 2);
    auto r = greedy_embed(monotone_hyperpath(3, 4), host, params, EmbedMode::Exact);
    CHECK(!r.success());
    REQUIRE(r.failure.has_value());
    CHECK((*r.failure == EmbedFailure::WEmpty ||
           *r.failure == EmbedFailure::AllCandidatesFiltered));
    CHECK(r.failure_step >= 0);
    CHECK(!r.trace.empty());
}

TEST_CASE("sampled mode is deterministic per seed and verifies on success") {
    auto host = complete_hypergraph(3, 120);
    auto p = monotone_hyperpath(3, 4);
    EmbeddingParams params;
    params.rho = Rational(9, 10);
    auto a = greedy_embed(p, host, params, EmbedMode::Sampled, 7, 16);
    auto b = greedy_embed(p, host, params, EmbedMode::Sampled, 7, 16);
    REQUIRE(a.success());
    CHECK(*a.embedding == *b.embedding);
    CHECK(verify_embedding(host, p, *a.embedding));
}

TEST_CASE("size guarantee gate") {
    EmbeddingParams params;
    params.rho = Rational(1, 2);
    params.enforce_size_guarantee = true;
    auto r = greedy_embed(monotone_hyperpath(3, 4), complete_hypergraph(3, 160), params,
                          EmbedMode::Exact);
    CHECK(!r.success());
    CHECK(*r.failure == EmbedFailure::SizeGuaranteeViolated);
}

TEST_CASE("precondition errors") {
    EmbeddingParams params;
    params.rho = Rational(1, 2);
    CHECK_THROWS_AS(greedy_embed(monotone_hyperpath(2, 4), complete_hypergraph(2, 40), params,
                                 EmbedMode::Exact),
                    InvalidParameter);
    params.rho = Rational(3, 2);
    CHECK_THROWS_AS(greedy_embed(monotone_hyperpath(3, 4), complete_hypergraph(3, 40), params,
                                 EmbedMode::Exact),
                    InvalidParameter);
    params.rho = Rational(1, 2);
    CHECK_THROWS_AS(greedy_embed(monotone_hyperpath(3, 4), complete_hypergraph(3, 3), params,
                                 EmbedMode::Exact),
                    InvalidParameter);
}

TEST_CASE("embedding through a color view host") {
    HyperedgeColoring col(3, 120, Color::Blue);
    ColorView blue(col, Color::Blue);
    EmbeddingParams params;
    params.rho = Rational(99, 100);
    auto r = greedy_embed(monotone_hyperpath(3, 4), blue, params, EmbedMode::Exact);
    REQUIRE(r.success());
    CHECK(verify_embedding(blue, monotone_hyperpath(3, 4), *r.embedding));
}
