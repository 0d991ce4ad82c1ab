#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>

#include "ohr/constructions.hpp"
#include "ohr/containment.hpp"
#include "ohr/ramsey.hpp"

using Clock = std::chrono::steady_clock;

namespace {

double time_ms(const std::function<void()>& f) {
    auto t0 = Clock::now();
    f();
    auto t1 = Clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void report(const char* name, double serial_ms, double parallel_ms) {
    std::printf("%-28s serial %9.2f ms   parallel %9.2f ms   speedup %5.2fx\n", name,
                serial_ms, parallel_ms, serial_ms / parallel_ms);
}

}  // namespace

int main(int argc, char** argv) {
    int N = argc > 1 ? std::atoi(argv[1]) : 140;
    std::printf("threads: %d, N = %d\n", omp_get_max_threads(), N);

    // step-up construction over all C(N,3) triples
    auto chi1 = ohr::HyperedgeColoring(2, 8);
    for (std::uint64_t r = 0; r < chi1.subset_count(); ++r)
        chi1.set_rank(r, (ohr::ctr_rand(7, r) & 1) ? ohr::Color::Blue : ohr::Color::Red);
    auto labels = ohr::random_labeling(N, 8, 1);
    ohr::HyperedgeColoring serial_col(3, 1), parallel_col(3, 1);
    double s1 = time_ms([&] { serial_col = ohr::stepup_coloring_serial(chi1, labels); });
    double p1 = time_ms([&] { parallel_col = ohr::stepup_coloring(chi1, labels); });
    if (!(serial_col == parallel_col)) {
        std::fprintf(stderr, "stepup mismatch between serial and parallel\n");
        return 1;
    }
    report("stepup_coloring", s1, p1);

    // clique scan over all C(N,5) 5-subsets
    std::optional<std::vector<int>> hs, hp;
    double s2 = time_ms([&] { hs = ohr::verify_no_blue_clique_serial(serial_col, 5); });
    double p2 = time_ms([&] { hp = ohr::verify_no_blue_clique(parallel_col, 5); });
    if (hs != hp) {
        std::fprintf(stderr, "clique scan mismatch between serial and parallel\n");
        return 1;
    }
    report("verify_no_blue_clique", s2, p2);

    // copy counting on a complete host
    auto host = ohr::complete_hypergraph(3, 42);
    auto pattern = ohr::monotone_hyperpath(3, 9);
    ohr::BigInt cs, cp;
    double s3 = time_ms([&] { cs = ohr::count_embeddings_serial(host, pattern); });
    double p3 = time_ms([&] { cp = ohr::count_embeddings(host, pattern); });
    if (cs != cp) {
        std::fprintf(stderr, "count mismatch between serial and parallel\n");
        return 1;
    }
    report("count_embeddings", s3, p3);
    return 0;
}
