#include "ohr/bounds.hpp"

#include <boost/math/constants/constants.hpp>

namespace ohr {

namespace {

const Float kLog2E = Float(1) / boost::multiprecision::log(Float(2));

// conservative per-term absolute error for 50-digit arithmetic
Float term_err(const Float& v) {
    return boost::multiprecision::abs(v) * Float("1e-45") + Float("1e-60");
}

Float flog2(const Float& x) { return boost::multiprecision::log(x) * kLog2E; }

Float fpow(const Float& b, const Float& e) { return boost::multiprecision::pow(b, e); }

}  // namespace

Float to_float(const Rational& q) {
    return Float(boost::multiprecision::numerator(q).convert_to<Float>()) /
           boost::multiprecision::denominator(q).convert_to<Float>();
}

Float log2f50(const Float& x) { return flog2(x); }

Log2Value tow(int h, const Float& x) {
    if (h < 1) throw InvalidParameter("tow requires h >= 1");
    if (h == 1) {
        if (x <= 0) throw InvalidParameter("tow_1 log2 requires x > 0");
        Float v = flog2(x);
        return {v, term_err(v), false};
    }
    // log2 tow_h(x) = tow_{h-1}(x), built by h-2 exponentiations from tow_1 = x
    const Float cap = Float("1e600000");
    Float acc = x;
    for (int i = 2; i <= h - 1; ++i) {
        acc = fpow(Float(2), acc);
        if (acc > cap || boost::multiprecision::isinf(acc)) return {0, 0, true};
    }
    return {acc, term_err(acc) * (h - 1), false};
}

Log2Value thm_precise_upper_log2(long t, int d, long s, const Rational& rho,
                                 const PreciseConstants& consts) {
    if (rho <= 0 || rho >= Rational(1, 8))
        throw InvalidParameter("thm_precise_upper_log2 requires rho in (0, 1/8)");
    Float rf = to_float(rho);
    Float t1 = flog2(Float(t));
    Float t2 = consts.c_block * fpow(Float(s), Float(3) / 2) *
               fpow(rf, Float(-30 * d * d)) * fpow(Float(d), 6);
    Float t3 = consts.c_log * Float(s) * Float(s) * flog2(Float(1) / (1 - 4 * rf));
    Float v = t1 + t2 + t3;
    return {v, term_err(t1) + term_err(t2) + term_err(t3) + term_err(v), false};
}

ThmMainResult thm_main_upper_log2(long t, int d, const Float& s) {
    if (s < 1) throw InvalidParameter("thm_main_upper_log2 requires s >= 1");
    ThmMainResult out;
    long denom = 2 + 60L * d * d;
    out.exponent = Rational(2) - Rational(1, denom);
    // s > 8^(2+60d^2)  <=>  log2 s > 3 (2+60d^2)
    out.below_threshold = flog2(s) <= Float(3) * Float(denom);

    Float rho = fpow(s, Float(-1) / Float(denom));
    Float log2t = flog2(Float(t));
    // the log factor exists only for rho < 1/4; below that the whole bound is
    // outside the theorem's regime, flagged instead of returning NaN
    bool log_ok = 4 * rho < 1;
    Float log_term = log_ok ? Float(12) * s * s * flog2(Float(1) / (1 - 4 * rho)) : Float(0);

    Float direct_mid = Float(1ULL << 28) * fpow(s, Float(3) / 2) *
                       fpow(rho, Float(-30 * d * d)) * fpow(Float(d), 6);
    Float dv = log2t + direct_mid + log_term;
    out.direct = {dv, term_err(direct_mid) * 4 + term_err(log_term) + term_err(dv), !log_ok};

    Float simp_mid = Float(1ULL << 28) * fpow(s, to_float(out.exponent)) * fpow(Float(d), 6);
    Float sv = log2t + simp_mid + log_term;
    out.simplified = {sv, term_err(simp_mid) * 4 + term_err(log_term) + term_err(sv), !log_ok};
    return out;
}

bool lemma_tripartite_feasible(const Rational& delta, const Rational& eta, long s,
                               const Log2Value& m_log2, TripartiteVariant variant) {
    if (eta <= 0 || eta >= Rational(1, 8))
        throw InvalidParameter("lemma_tripartite_feasible requires eta in (0, 1/8)");
    if (delta <= 0) throw InvalidParameter("lemma_tripartite_feasible requires delta > 0");
    Float df = to_float(delta);
    Float ef = to_float(eta);
    Float lhs = kLog2E * Float(1 << 10) * fpow(df, -2) * fpow(Float(s), Float(3) / 2) +
                Float(4) * Float(s) * Float(s) * flog2(Float(1) / (1 - 4 * ef));
    Float factor = variant == TripartiteVariant::Statement ? flog2(df / 16) : flog2(16 / df);
    lhs += Float(4) * Float(s) * factor;
    return lhs <= m_log2.value;
}

TripartiteSplit thm_precise_term_split(int d, long s, const Rational& rho) {
    if (rho <= 0 || rho >= Rational(1, 8))
        throw InvalidParameter("term split requires rho in (0, 1/8)");
    Float rf = to_float(rho);
    Float eps = fpow(rf, Float(15 * d * d)) / (Float(64) * fpow(Float(d), 3));
    TripartiteSplit out;
    Float te = kLog2E * Float(1 << 10) * fpow(eps, -2) * fpow(Float(s), Float(3) / 2);
    out.term_exp = {te, term_err(te) * 4, false};
    Float tn = Float(4) * Float(s) * Float(s) * flog2(Float(1) / (1 - 4 * rf));
    out.term_eta = {tn, term_err(tn) * 2, false};
    Float tf = Float(4) * Float(s) * flog2(16 / eps);
    out.term_factor = {tf, term_err(tf) * 2, false};
    Float target = (Float(1ULL << 28) * fpow(Float(s), Float(3) / 2) *
                        fpow(rf, Float(-30 * d * d)) * fpow(Float(d), 6) +
                    Float(12) * Float(s) * Float(s) * flog2(Float(1) / (1 - 4 * rf))) /
                   3;
    out.target = {target, term_err(target) * 4, false};
    return out;
}

StepUpBound stepup_lowerbound_log2(long n, const Float& log2_R, const Rational& alpha) {
    if (alpha <= 0 || alpha > 1)
        throw InvalidParameter("stepup_lowerbound_log2 requires alpha in (0,1]");
    Float af = to_float(alpha);
    Float v = (Float(n) + 2) / 6 * ((1 - af) * log2_R - 4 * kLog2E);
    bool valid = flog2(Float(2 * n)) < af * log2_R;
    return {{v, term_err(v) * 3, false}, valid};
}

Log2Value lizang_lower_log2(long t, long m, const Rational& c, LogBase base) {
    if (m < 2) throw InvalidParameter("lizang_lower_log2 requires m >= 2");
    if (t < 3) throw InvalidParameter("lizang_lower_log2 requires t >= 3");
    if (c <= 0) throw InvalidParameter("lizang_lower_log2 requires c > 0");
    Float logm = base == LogBase::Two ? flog2(Float(m)) : boost::multiprecision::log(Float(m));
    Float v = flog2(to_float(c)) + (Float(t) + 1) / 2 * (flog2(Float(m)) - flog2(logm));
    return {v, term_err(v) * 3, false};
}

Log2Value prop_upper_log2(int chi, int k, long n, long R) {
    if (chi < k || k < 2) throw InvalidParameter("prop_upper_log2 requires chi >= k >= 2");
    BigInt exact = 1;
    for (int i = 0; i < chi * (chi - 1); ++i) exact *= R;
    BigInt base = BigInt(4) * chi * n;
    for (int i = 0; i < chi - 1; ++i) exact *= base;
    Float v = exact.convert_to<Float>();
    return {v, term_err(v), false};
}

Log2Value cor_upper_log2(int chi, long n, long R_clique) {
    if (chi < 3) throw InvalidParameter("cor_upper_log2 requires chi >= 3");
    Float v = fpow(Float(2), Float(2 * R_clique)) * Float(chi) * Float(chi) * Float(n) * Float(n);
    return {v, term_err(v) * 2, false};
}

}  // namespace ohr
