#include <doctest.h>

#include <limits>
#include <set>

#include "ohr/util.hpp"

using namespace ohr;

TEST_CASE("binomial coefficients") {
    CHECK(binom64(5, 3) == 10);
    CHECK(binom64(10, 0) == 1);
    CHECK(binom64(0, 0) == 1);
    CHECK(binom64(3, 5) == 0);
    CHECK(binom64(100, 3) == 161700);
    CHECK(binom64(64, 32) == 1832624140942590534ULL);
    // above 64 bits the result saturates instead of wrapping
    CHECK(binom64(128, 64) == std::numeric_limits<std::uint64_t>::max());
    CHECK(binom_big(128, 64) == BigInt("23951146041928082866135587776380551750"));
}

TEST_CASE("binom_big matches binom64 in range") {
    for (unsigned n = 0; n <= 40; ++n)
        for (unsigned k = 0; k <= n; ++k)
            CHECK(binom_big(n, k) == BigInt(binom64(n, k)));
}

TEST_CASE("colex rank of small subsets") {
    CHECK(colex_rank({0, 1, 2}) == 0);
    CHECK(colex_rank({0, 1, 3}) == 1);
    CHECK(colex_rank({0, 2, 3}) == 2);
    CHECK(colex_rank({1, 2, 3}) == 3);
    CHECK(colex_rank({0, 1, 4}) == 4);
    CHECK(colex_rank({0, 1}) == 0);
    CHECK(colex_rank({1, 3}) == 4);
    CHECK(colex_rank({2, 3}) == 5);
}

TEST_CASE("colex rank/unrank round-trip") {
    for (int k = 2; k <= 4; ++k) {
        std::uint64_t total = binom64(12, static_cast<std::uint64_t>(k));
        std::set<std::vector<int>> seen;
        for (std::uint64_t r = 0; r < total; ++r) {
            auto s = colex_unrank(r, k);
            CHECK(colex_rank(s) == r);
            CHECK(static_cast<int>(s.size()) == k);
            for (std::size_t i = 1; i < s.size(); ++i) CHECK(s[i - 1] < s[i]);
            CHECK(seen.insert(s).second);
        }
    }
}

TEST_CASE("rational_pow and ceil_mul") {
    CHECK(rational_pow(Rational(1, 2), 10) == Rational(1, 1024));
    CHECK(rational_pow(Rational(3, 4), 0) == 1);
    CHECK(rational_pow(Rational(2), 5) == 32);
    CHECK(ceil_mul(Rational(1, 2), 5) == 3);
    CHECK(ceil_mul(Rational(1, 3), 6) == 2);
    CHECK(ceil_mul(Rational(1), 7) == 7);
    CHECK(ceil_mul(Rational(2, 3), 0) == 0);
}

TEST_CASE("ctr_rand is a pure function of seed and counter") {
    CHECK(ctr_rand(1, 0) == ctr_rand(1, 0));
    CHECK(ctr_rand(1, 0) != ctr_rand(2, 0));
    CHECK(ctr_rand(1, 0) != ctr_rand(1, 1));
    // crude equidistribution: 16 buckets over 16k draws stay within 25% of mean
    int buckets[16] = {};
    const int draws = 16384;
    for (int i = 0; i < draws; ++i) ++buckets[ctr_rand(42, static_cast<std::uint64_t>(i)) & 15];
    for (int b : buckets) {
        CHECK(b > draws / 16 * 3 / 4);
        CHECK(b < draws / 16 * 5 / 4);
    }
}
