// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. argv[1] is the path to the CLI binary (used by criterion 8).
#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "ohr/constructions.hpp"
#include "ohr/density.hpp"
#include "ohr/embedding.hpp"
#include "ohr/ramsey.hpp"

namespace fs = std::filesystem;
using namespace ohr;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

bool has_copy(const HyperedgeColoring& c, const OrderedHypergraph& pattern, Color color) {
    ColorView view(c, color);
    return find_embedding(view, pattern).has_value();
}

bool certificate_ok(const RamseyResult& r, const OrderedHypergraph& blue,
                    const OrderedHypergraph& red) {
    if (!r.certificate) return false;
    return !has_copy(*r.certificate, blue, Color::Blue) &&
           !has_copy(*r.certificate, red, Color::Red);
}

// ---------------------------------------------------------------- criterion 1

bool criterion1() {
    auto t0 = Clock::now();
    auto k3 = complete_hypergraph(2, 3);
    auto a = ordered_ramsey_exact(k3, k3, 7);
    if (!a.closed || a.value != 6 || !certificate_ok(a, k3, k3)) return false;
    if (seconds_since(t0) >= 60.0) return false;

    t0 = Clock::now();
    auto p3 = monotone_hyperpath(2, 3);
    auto b = ordered_ramsey_exact(p3, p3, 6);
    if (!b.closed || b.value != 5 || !certificate_ok(b, p3, p3)) return false;
    return seconds_since(t0) < 60.0;
}

// ---------------------------------------------------------------- criterion 2

bool criterion2() {
    auto t0 = Clock::now();
    auto k3 = complete_hypergraph(2, 3);
    auto k22 = complete_multipartite(2, 2, 2);
    RamseyOptions opts;
    opts.max_decision_bits = 60;
    auto r = ordered_ramsey_exact(k3, k22, 9, opts);
    if (!r.closed || r.value != 9) return false;

    // base coloring on R = value - 1 labels, free of blue triangles
    const int R = r.value - 1;
    auto chi1 = find_avoiding_coloring(k3, k22, R, opts);
    if (!chi1) return false;

    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto labels = random_labeling(100, R, seed);
        auto col = stepup_coloring(*chi1, labels);
        if (verify_no_blue_clique(col, 4).has_value()) return false;
    }
    return seconds_since(t0) < 300.0;
}

// ---------------------------------------------------------------- criterion 3

bool criterion3() {
    const Float log2e = log2f50(boost::multiprecision::exp(Float(1)));
    for (int i = 0; i < 10; ++i) {
        long n = 10 + 17 * i;
        Rational alpha(1 + i % 5, 7);
        Float log2R = Float(15) + Float(33) * i / 10;
        Float log2N = (Float(n) + 2) / 6 * ((1 - to_float(alpha)) * log2R - 4 * log2e);
        auto v = expected_red_terminal_log2(log2N, log2R, n, alpha);
        if (boost::multiprecision::abs(v.value) >= Float("1e-6")) return false;
    }
    return true;
}

// ---------------------------------------------------------------- criterion 4

bool criterion4() {
    std::vector<OrderedHypergraph> patterns{monotone_hyperpath(3, 4), monotone_hyperpath(3, 5),
                                            complete_hypergraph(3, 4)};
    for (int t = 3; t <= 6; ++t) patterns.push_back(complete_multipartite(3, t, 1));
    EmbeddingParams params;
    params.rho = Rational(99, 100);
    for (const auto& p : patterns) {
        // all-blue coloring as the complete host, no edge list materialized
        HyperedgeColoring all_blue(3, 40 * p.n(), Color::Blue);
        ColorView host(all_blue, Color::Blue);
        auto r = greedy_embed(p, host, params, EmbedMode::Exact);
        if (!r.success()) return false;
        if (!verify_embedding(host, p, *r.embedding)) return false;
    }
    // edgeless hosts must fail with a structured report, not a crash
    OrderedHypergraph empty_host(3, 160);
    auto bad = greedy_embed(monotone_hyperpath(3, 4), empty_host, params, EmbedMode::Exact);
    return !bad.success() && bad.failure.has_value() && bad.failure_step >= 0 &&
           !bad.trace.empty();
}

// ---------------------------------------------------------------- criterion 5

BipartiteGraph random_bipartite(std::uint64_t seed) {
    auto nl = static_cast<int>(1 + ctr_rand(seed, 0) % 8);
    auto nr = static_cast<int>(1 + ctr_rand(seed, 1) % 8);
    std::vector<int> left, right;
    for (int i = 0; i < nl; ++i) left.push_back(i);
    for (int i = 0; i < nr; ++i) right.push_back(nl + i);
    BipartiteGraph g(left, right);
    for (int li = 0; li < nl; ++li)
        for (int ri = 0; ri < nr; ++ri)
            if (ctr_rand(seed, 100 + static_cast<std::uint64_t>(li) * 8 +
                                   static_cast<std::uint64_t>(ri)) &
                1)
                g.set_edge(static_cast<std::size_t>(li), static_cast<std::size_t>(ri));
    return g;
}

bool naive_bi_dense(const BipartiteGraph& g, const Rational& eps1, const Rational& eps2,
                    const Rational& rho) {
    auto nl = g.nl(), nr = g.nr();
    long t1 = ceil_mul(eps1, static_cast<long>(nl));
    long t2 = ceil_mul(eps2, static_cast<long>(nr));
    for (std::uint64_t mx = 1; mx < (1ULL << nl); ++mx) {
        std::vector<std::size_t> xs;
        for (std::size_t i = 0; i < nl; ++i)
            if ((mx >> i) & 1) xs.push_back(i);
        if (static_cast<long>(xs.size()) < t1) continue;
        for (std::uint64_t my = 1; my < (1ULL << nr); ++my) {
            std::vector<std::size_t> ys;
            for (std::size_t i = 0; i < nr; ++i)
                if ((my >> i) & 1) ys.push_back(i);
            if (static_cast<long>(ys.size()) < t2) continue;
            if (pair_density(g, xs, ys) < rho) return false;
        }
    }
    return true;
}

bool criterion5() {
    const Rational epses[] = {Rational(1, 4), Rational(1, 3), Rational(1, 2)};
    const Rational rhos[] = {Rational(1, 4), Rational(1, 2), Rational(2, 3)};
    for (std::uint64_t s = 0; s < 100; ++s) {
        auto g = random_bipartite(1000 + s);
        const Rational& e1 = epses[s % 3];
        const Rational& e2 = epses[(s / 3) % 3];
        const Rational& rho = rhos[(s / 9) % 3];
        auto r = is_bi_dense(g, e1, e2, rho);
        if (r.dense != naive_bi_dense(g, e1, e2, rho)) return false;
        if (!r.dense) {
            if (!r.witness) return false;
            if (static_cast<long>(r.witness->xs.size()) <
                ceil_mul(e1, static_cast<long>(g.nl())))
                return false;
            if (static_cast<long>(r.witness->ys.size()) <
                ceil_mul(e2, static_cast<long>(g.nr())))
                return false;
            auto dens = pair_density(g, r.witness->xs, r.witness->ys);
            if (dens != r.witness->density || dens >= rho) return false;
        }
    }

    for (std::uint64_t s = 0; s < 200; ++s) {
        int n1 = static_cast<int>(1 + ctr_rand(s, 10) % 6);
        int n2 = static_cast<int>(1 + ctr_rand(s, 11) % 6);
        int n3 = static_cast<int>(1 + ctr_rand(s, 12) % 6);
        std::vector<int> v1, v2, v3;
        for (int i = 0; i < n1; ++i) v1.push_back(i);
        for (int i = 0; i < n2; ++i) v2.push_back(n1 + i);
        for (int i = 0; i < n3; ++i) v3.push_back(n1 + n2 + i);
        BipartiteGraph g12(v1, v2), g13(v1, v3), g23(v2, v3);
        std::uint64_t ctr = 0;
        for (int a = 0; a < n1; ++a)
            for (int b = 0; b < n2; ++b)
                if (ctr_rand(s, 1000 + ctr++) & 1)
                    g12.set_edge(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
        for (int a = 0; a < n1; ++a)
            for (int c = 0; c < n3; ++c)
                if (ctr_rand(s, 1000 + ctr++) & 1)
                    g13.set_edge(static_cast<std::size_t>(a), static_cast<std::size_t>(c));
        for (int b = 0; b < n2; ++b)
            for (int c = 0; c < n3; ++c)
                if (ctr_rand(s, 1000 + ctr++) & 1)
                    g23.set_edge(static_cast<std::size_t>(b), static_cast<std::size_t>(c));
        BigInt naive = 0;
        for (int a = 0; a < n1; ++a)
            for (int b = 0; b < n2; ++b)
                for (int c = 0; c < n3; ++c)
                    if (g12.edge(static_cast<std::size_t>(a), static_cast<std::size_t>(b)) &&
                        g13.edge(static_cast<std::size_t>(a), static_cast<std::size_t>(c)) &&
                        g23.edge(static_cast<std::size_t>(b), static_cast<std::size_t>(c)))
                        ++naive;
        if (count_triangles(g12, g13, g23) != naive) return false;
    }
    return true;
}

// ---------------------------------------------------------------- criterion 6

bool criterion6() {
    for (int d : {1, 2, 3}) {
        auto r = thm_main_upper_log2(5, d, Float(100));
        if (r.exponent != Rational(2) - Rational(1, 2 + 60L * d * d)) return false;
    }
    if (thm_main_upper_log2(5, 1, Float(100)).exponent != Rational(123, 62)) return false;

    for (int i = 0; i < 100; ++i) {
        Float log2s = Float(190) + Float(21) * i / 10;  // [190, 398]
        Float s = boost::multiprecision::pow(Float(2), log2s);
        auto r = thm_main_upper_log2(7, 1, s);
        if (r.below_threshold || r.direct.overflow || r.simplified.overflow) return false;
        if (boost::multiprecision::abs(r.direct.value - r.simplified.value) >
            r.direct.err + r.simplified.err)
            return false;
    }

    for (int d : {1, 2, 3})
        for (long s : {2L, 5L})
            for (const Rational& rho : {Rational(1, 10), Rational(1, 16)}) {
                auto split = thm_precise_term_split(d, s, rho);
                if (split.term_exp.value > split.target.value) return false;
                if (split.term_eta.value > split.target.value) return false;
                if (split.term_factor.value > split.target.value) return false;
            }
    return true;
}

// ---------------------------------------------------------------- criterion 7

bool criterion7() {
    for (std::uint64_t s = 0; s < 10; ++s) {
        int n = static_cast<int>(3 + s % 4);           // pattern vertices, 3..6
        int N = static_cast<int>(7 + s % 4);           // host vertices, <= 10
        OrderedHypergraph pattern(3, n);
        std::uint64_t total = binom64(static_cast<std::uint64_t>(n), 3);
        for (std::uint64_t r = 0; r < total; ++r)
            if (ctr_rand(7000 + s, r) & 1) pattern.add_edge(colex_unrank(r, 3));
        auto host = complete_hypergraph(3, N);
        if (count_embeddings(host, pattern) != binom_big(static_cast<unsigned>(N),
                                                         static_cast<unsigned>(n)))
            return false;
    }
    return true;
}

// ---------------------------------------------------------------- criterion 8

int run_cmd(const std::string& cmd) {
    int rc = std::system(cmd.c_str());
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string battery(const std::string& cli, int threads, const fs::path& dir) {
    auto p = [&](const char* name) { return (dir / name).string(); };
    std::vector<std::string> cmds{
        "gen --type complete --k 2 --N 3 --out " + p("blue.json"),
        "gen --type path --k 3 --n 4 --out " + p("pat.json"),
        "gen --type complete --k 3 --N 8 --out " + p("host.json"),
        "gen --type multipartite --k 3 --chi 3 --n 2",
        "contains --host " + p("host.json") + " --pattern " + p("pat.json"),
        "count --host " + p("host.json") + " --pattern " + p("pat.json"),
        "ramsey --blue " + p("blue.json") + " --red " + p("blue.json") +
            " --cap 6 --split-bits 3 --certificate " + p("cert.orc"),
        "stepup --chi1 " + p("cert.orc") + " --random-N 30 --random-R 5 --seed 3 --out " +
            p("su.orc"),
        "verify --coloring " + p("su.orc") + " --clique 4",
        "expected --log2-N 10 --R 1024 --n 20 --m 5 --l 10",
        "expected --log2-N 10 --log2-R 20 --n 20 --alpha 1/2",
        "density bi --graph " + p("bip.json") + " --eps1 1/3 --eps2 1/3 --rho 1/3",
        "density tri --host " + p("host.json") +
            " --eps 1/4 --rho 1/2 --m 1 --strategy exhaustive-tiny --budget 500 --seed 5",
        "embed --pattern " + p("pat.json") + " --coloring " + p("bighost.orc") +
            " --color blue --rho 99/100 --mode sampled --trials 16 --seed 7 --trace " +
            p("trace.json"),
        "bound thm-main --params t=10,d=1,log2_s=200",
        "bound stepup-lower --params n=100,log2_R=20,alpha=1/2",
        "bound lizang --params t=3,m=65536,c=1",
        "bound term-split --params d=1,s=3,rho=1/10",
        "bound tripartite-feasible --params delta=1/4,eta=1/10,s=3,m_log2=1000000",
    };

    std::ostringstream out;
    fs::path capture = dir / "out.txt";
    for (std::size_t i = 0; i < cmds.size(); ++i) {
        std::string full = cli + " " + cmds[i] + " --threads " + std::to_string(threads) +
                           " >" + capture.string() + " 2>&1";
        int code = run_cmd(full);
        out << "## command " << i << "\n" << slurp(capture) << "exit=" << code << "\n";
    }
    for (const char* name : {"blue.json", "pat.json", "cert.orc", "su.orc", "trace.json"})
        out << "## file " << name << "\n" << slurp(dir / name);
    return out.str();
}

bool criterion8(const std::string& cli) {
    fs::path dir = fs::temp_directory_path() / "ohr-acceptance";
    fs::create_directories(dir);
    std::ofstream(dir / "bip.json")
        << R"({"left":[0,1,2],"right":[3,4,5],"edges":[[0,3],[0,4],[1,4],[2,5]]})";
    std::ofstream(dir / "bighost.orc") << HyperedgeColoring(3, 160, Color::Blue).serialize();

    std::string base = battery(cli, 1, dir);
    if (base.find("exit=2") != std::string::npos) return false;  // usage/IO failures
    for (int threads : {1, 4})
        for (int rep = 0; rep < (threads == 1 ? 1 : 2); ++rep)
            if (battery(cli, threads, dir) != base) return false;
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: ohr-acceptance <path-to-cli>\n";
        return 2;
    }
    std::string cli = argv[1];

    struct Criterion {
        int id;
        bool ok;
    };
    std::vector<Criterion> results;
    results.push_back({1, criterion1()});
    results.push_back({2, criterion2()});
    results.push_back({3, criterion3()});
    results.push_back({4, criterion4()});
    results.push_back({5, criterion5()});
    results.push_back({6, criterion6()});
    results.push_back({7, criterion7()});
    results.push_back({8, criterion8(cli)});

    bool all = true;
    for (const auto& r : results) {
        std::cout << "criterion " << r.id << ": " << (r.ok ? "PASS" : "FAIL") << "\n";
        all = all && r.ok;
    }
    return all ? 0 : 1;
}
