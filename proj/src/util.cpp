#include "ohr/util.hpp"

#include <limits>

namespace ohr {

std::uint64_t binom64(std::uint64_t n, std::uint64_t k) noexcept {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
    unsigned __int128 r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;  // division exact at each step
        if (r > kMax) return kMax;  // saturate
    }
    return static_cast<std::uint64_t>(r);
}

BigInt binom_big(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (unsigned i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

std::uint64_t colex_rank(const std::vector<int>& subset) {
    std::uint64_t r = 0;
    for (std::size_t i = 0; i < subset.size(); ++i)
        r += binom64(static_cast<std::uint64_t>(subset[i]), i + 1);
    return r;
}

std::vector<int> colex_unrank(std::uint64_t rank, int k) {
    std::vector<int> out(static_cast<std::size_t>(k));
    for (int i = k; i >= 1; --i) {
        int a = i - 1;
        while (binom64(static_cast<std::uint64_t>(a + 1), static_cast<std::uint64_t>(i)) <= rank)
            ++a;
        out[static_cast<std::size_t>(i - 1)] = a;
        rank -= binom64(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(i));
    }
    return out;
}

Rational rational_pow(const Rational& rho, unsigned e) {
    Rational r = 1, base = rho;
    while (e) {
        if (e & 1u) r *= base;
        base *= base;
        e >>= 1u;
    }
    return r;
}

long ceil_mul(const Rational& q, long n) {
    BigInt num = boost::multiprecision::numerator(q) * n;
    BigInt den = boost::multiprecision::denominator(q);
    BigInt c = (num + den - 1) / den;
    return static_cast<long>(c);
}

std::uint64_t ctr_rand(std::uint64_t seed, std::uint64_t counter) noexcept {
    // splitmix64 finalizer over a seed/counter combination
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (counter + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace ohr
