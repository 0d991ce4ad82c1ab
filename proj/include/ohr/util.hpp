#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ohr {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// C(n,k) saturating at UINT64_MAX. Ranks that fit 64 bits are exact.
std::uint64_t binom64(std::uint64_t n, std::uint64_t k) noexcept;

BigInt binom_big(unsigned n, unsigned k);

// Colexicographic rank of a strictly increasing k-subset:
// rank({a_0 < ... < a_{k-1}}) = sum_i C(a_i, i+1).
std::uint64_t colex_rank(const std::vector<int>& subset);

// Inverse of colex_rank for fixed k.
std::vector<int> colex_unrank(std::uint64_t rank, int k);

// rho^e as an exact rational, e >= 0.
Rational rational_pow(const Rational& rho, unsigned e);

// ceil(q * n) for a nonnegative rational q and integer n >= 0.
long ceil_mul(const Rational& q, long n);

// Counter-mode 64-bit generator: value is a pure function of (seed, counter),
// so streams are order-independent and safe to evaluate in parallel.
std::uint64_t ctr_rand(std::uint64_t seed, std::uint64_t counter) noexcept;

struct InvalidParameter : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace ohr
