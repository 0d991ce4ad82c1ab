#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "ohr/util.hpp"

namespace ohr {

using Float = boost::multiprecision::cpp_bin_float_50;

/// log2 of a quantity far beyond native range, with a conservative absolute
/// error bound. Raw values are never materialized.
struct Log2Value {
    Float value = 0;
    Float err = 0;
    bool overflow = false;  // the log2 itself exceeded extended precision
};

Float to_float(const Rational& q);
Float log2f50(const Float& x);

// log2 of tow_h(x); tow_1(x) = x, tow_h(x) = 2^tow_{h-1}(x).
Log2Value tow(int h, const Float& x);

// Proof-level constants, overridable so sharpened values can be explored.
struct PreciseConstants {
    Float c_block = Float(1ULL << 28);  // coefficient of s^{3/2} rho^{-30d^2} d^6
    Float c_log = 12;                   // coefficient of s^2 log(1/(1-4rho))
};

// log2 of t * 2^(c_block * s^{3/2} rho^{-30 d^2} d^6 + c_log * s^2 log2(1/(1-4rho))),
// rho in (0, 1/8).
Log2Value thm_precise_upper_log2(long t, int d, long s, const Rational& rho,
                                 const PreciseConstants& consts = {});

struct ThmMainResult {
    Log2Value direct;      // rho = s^(-1/(2+60d^2)) substituted verbatim
    Log2Value simplified;  // s^{3/2} rho^{-30d^2} replaced by s^(2-1/(2+60d^2))
    Rational exponent;     // 2 - 1/(2+60d^2)
    bool below_threshold;  // s <= 8^(2+60d^2), flagged but not rejected
};

// s is a Float so the validity regime s > 8^(2+60d^2) is reachable; below
// the threshold rho = s^(-1/(2+60d^2)) >= 1/8 and the log term is undefined,
// reported via the overflow flag rather than NaN.
ThmMainResult thm_main_upper_log2(long t, int d, const Float& s);

enum class TripartiteVariant { Statement, Proof };

// Feasibility of the tripartite extraction inequality, evaluated in log2:
// exp(2^10 delta^-2 s^{3/2}) * (1-4 eta)^(-4 s^2) * F^(4s) <= m,
// F = delta/16 (statement) or 16/delta (proof).
bool lemma_tripartite_feasible(const Rational& delta, const Rational& eta, long s,
                               const Log2Value& m_log2,
                               TripartiteVariant variant = TripartiteVariant::Proof);

// The three per-term log2 estimates used to split log2(N/t) three ways, plus
// the split target; with eps = 2^-6 rho^(15d^2) d^-3 and N/t at the proof's
// bound each term stays below target.
struct TripartiteSplit {
    Log2Value term_exp;     // log2 of e^(2^10 eps^-2 s^{3/2})
    Log2Value term_eta;     // log2 of (1-4 rho)^(-4 s^2)
    Log2Value term_factor;  // log2 of (16/eps)^(4s)
    Log2Value target;       // log2(N/t) / 3
};

TripartiteSplit thm_precise_term_split(int d, long s, const Rational& rho);

struct StepUpBound {
    Log2Value log2_N;  // ((n+2)/6) * ((1-alpha) log2 R - 4 log2 e)
    bool valid;        // 2n < R^alpha
};

StepUpBound stepup_lowerbound_log2(long n, const Float& log2_R, const Rational& alpha);

enum class LogBase { Two, Natural };

// log2 of c * (m / log m)^((t+1)/2); the base of the inner log is a
// parameter, never silently fixed.
Log2Value lizang_lower_log2(long t, long m, const Rational& c, LogBase base = LogBase::Two);

// log2 N = R^(chi(chi-1)) * (4 chi n)^(chi-1), exact in integers.
Log2Value prop_upper_log2(int chi, int k, long n, long R);

// log2 bound = 2^(2 R_clique) * chi^2 * n^2.
Log2Value cor_upper_log2(int chi, long n, long R_clique);

}  // namespace ohr
