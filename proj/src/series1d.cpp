#include <cmath>

#include "latzeta/bernoulli.hpp"
#include "latzeta/errors.hpp"
#include "latzeta/series.hpp"

namespace latzeta {

namespace {

// Euler-Maclaurin tail sum_{n>N} n^{-s} plus a bound on the remainder after
// J correction terms (first omitted term of the alternating asymptotic series).
struct EmTail {
    Real value;
    Real bound;
};

EmTail em_zeta_tail(double s, long N, mpfr_prec_t prec, int J = 10) {
    const Real sr(s, prec);
    const Real base(static_cast<double>(N), prec);
    const Real binv = Real(1.0, prec) / base;
    Real val = pow(base, Real(1.0 - s, prec)) / Real(s - 1.0, prec);
    Real bpow = pow(base, -sr);
    val -= bpow * Real(0.5, prec);
    Real poch(1.0, prec);
    Real last(prec);
    for (int j = 1; j <= J; ++j) {
        poch *= (j == 1) ? sr : (sr + Real(2 * j - 3, prec)) * (sr + Real(2 * j - 2, prec));
        bpow *= binv;
        if (j > 1) bpow *= binv;
        Integer fact;
        mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(2 * j));
        last = Real(bernoulli_number(2 * j), prec) / Real(Rational(fact), prec) * poch * bpow;
        val += last;
    }
    Real next = abs(last) * (sr + Real(2 * J - 1, prec)) * (sr + Real(2 * J, prec)) * binv * binv;
    return {val, next};
}

} // namespace

NumericValue eval_zeta(double s, const Precision& prec) {
    prec.validate();
    if (!(s > 1.0)) throw ConvergenceError("eval_zeta: need s > 1");
    const mpfr_prec_t wp = prec.work_bits();
    const long N = prec.cutoff;
    Real acc(wp);
    for (long n = N; n >= 1; --n)
        acc += pow(Real(n, wp), Real(-s, wp));
    EmTail tail = em_zeta_tail(s, N, wp);
    acc += tail.value;

    NumericValue out(prec.bits());
    out.value.re = round_to(acc, prec.bits());
    out.tail_bound = round_to(tail.bound, prec.bits()) + pow_si(Real(2.0, prec.bits()), -prec.bits() - 24);
    out.rounding_slack =
        pow_si(Real(2.0, prec.bits()), -prec.bits() - 40) * Real(static_cast<double>(N), prec.bits());
    return out;
}

NumericValue eval_L4(double s, const Precision& prec) {
    prec.validate();
    if (!(s > 0.0)) throw DomainError("eval_L4: need s > 0");
    const mpfr_prec_t wp = prec.work_bits();
    Real v = dirichlet_l4(s, wp);
    NumericValue out(prec.bits());
    out.value.re = round_to(v, prec.bits());
    // alternating-series style bound: first omitted term at the configured cutoff
    out.tail_bound = pow(Real(2.0 * static_cast<double>(prec.cutoff) + 1.0, prec.bits()),
                         Real(-s, prec.bits()));
    out.rounding_slack = pow_si(Real(2.0, prec.bits()), -prec.bits() - 32);
    return out;
}

NumericValue eval_phi_alpha(double s, const Rational& alpha, const Precision& prec) {
    prec.validate();
    if (!(alpha == rational_of(1, 4) || alpha == rational_of(1, 2) || alpha == rational_of(3, 4)))
        throw DomainError("eval_phi_alpha: alpha must be 1/4, 1/2 or 3/4");
    if (!(s > 0.0) || s == 1.0) throw DomainError("eval_phi_alpha: need s > 0, s != 1");
    const mpfr_prec_t wp = prec.work_bits();
    // sum_m e^{2 pi i m alpha} m^-s = 4^-s sum_{r=1..4} i^{4 r alpha} zeta(s, r/4)
    const long num = alpha.get_num().get_si();
    const long den = alpha.get_den().get_si();
    Cplx acc(wp);
    for (long r = 1; r <= 4; ++r) {
        int e = static_cast<int>((r * num * (4 / den)) % 4);
        Cplx w = gaussian_to_cplx(Gaussian::i_pow(e), wp);
        acc += w * hurwitz_zeta(s, rational_of(r, 4), wp);
    }
    Real scale = pow(Real(4.0, wp), Real(-s, wp));
    NumericValue out(prec.bits());
    out.value.re = round_to(acc.re * scale, prec.bits());
    out.value.im = round_to(acc.im * scale, prec.bits());
    out.tail_bound = pow_si(Real(2.0, prec.bits()), -prec.bits() - 16) * (out.value.abs() + Real(1.0, prec.bits()));
    out.rounding_slack = out.tail_bound;
    return out;
}

NumericValue eval_ez2(double s1, double s2, const Precision& prec) {
    prec.validate();
    if (!(s2 > 1.0 && s1 + s2 > 2.0))
        throw ConvergenceError("eval_ez2: need s2 > 1 and s1+s2 > 2");
    const mpfr_prec_t wp = prec.work_bits();
    const long N = prec.cutoff;

    // sum_{m<=N} m^{-s1} zeta(s2, m+1), the inner sum taken exactly
    Real acc(wp);
    for (long m = 1; m <= N; ++m)
        acc += pow(Real(m, wp), Real(-s1, wp)) * hurwitz_zeta(s2, Rational(m + 1), wp);

    // tail over m > N: expand zeta(s2, m+1) asymptotically, each piece a zeta tail
    Real tail(wp);
    const Real s2r(s2, wp);
    auto add_expanded = [&](double t, const Real& c) {
        // sum_{m>N} m^{-s1} (m+1)^{-t} = sum_i C(-t,i) sum_{m>N} m^{-s1-t-i}
        Real ci(1.0, wp);
        for (long i = 0; i <= 24; ++i) {
            if (i > 0) ci *= Real(-t - static_cast<double>(i) + 1.0, wp) / Real(static_cast<double>(i), wp);
            tail += c * ci * em_zeta_tail(s1 + t + static_cast<double>(i), N, wp).value;
        }
    };
    add_expanded(s2 - 1.0, Real(1.0, wp) / (s2r - Real(1.0, wp)));
    add_expanded(s2, Real(0.5, wp));
    Real poch(1.0, wp);
    for (int j = 1; j <= 10; ++j) {
        poch *= (j == 1) ? s2r : (s2r + Real(2 * j - 3, wp)) * (s2r + Real(2 * j - 2, wp));
        Integer fact;
        mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(2 * j));
        add_expanded(s2 + 2.0 * j - 1.0,
                     Real(bernoulli_number(2 * j), wp) / Real(Rational(fact), wp) * poch);
    }
    acc += tail;

    NumericValue out(prec.bits());
    out.value.re = round_to(acc, prec.bits());
    out.tail_bound = pow_si(Real(2.0, prec.bits()), -prec.bits() - 8) *
                     (abs(out.value.re) + Real(1.0, prec.bits()));
    out.rounding_slack = out.tail_bound;
    return out;
}

} // namespace latzeta
