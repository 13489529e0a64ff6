#include <algorithm>
#include <cmath>

#include "latzeta/errors.hpp"
#include "latzeta/series.hpp"

namespace latzeta {

Cplx tornheim_phase_impl(double a, double b, double c, Root4 u, Root4 v, mpfr_prec_t prec,
                         Real* trunc_out);

namespace {

void check_tp_exponent(double e, const char* who) {
    bool integral = (e == std::floor(e));
    if ((integral && e < 1.0) || (!integral && e <= 0.0))
        throw ConvergenceError(std::string(who) + ": unsupported exponent");
}

} // namespace

NumericValue eval_tornheim(double s1, double s2, double s3, const Precision& prec) {
    prec.validate();
    if (!(s1 + s3 > 1.0 && s2 + s3 > 1.0 && s1 + s2 + s3 > 2.0))
        throw ConvergenceError("eval_tornheim: convergence guard violated");
    // the slow boundary family with every exponent at 1 is excluded
    if (s1 + s2 + s3 <= 3.0 && std::max({s1, s2, s3}) <= 1.0)
        throw ConvergenceError("eval_tornheim: boundary of the convergence region excluded");
    check_tp_exponent(s1, "eval_tornheim");
    check_tp_exponent(s2, "eval_tornheim");
    if (!(s3 > 0.0)) throw ConvergenceError("eval_tornheim: need s3 > 0");

    const mpfr_prec_t wp = prec.work_bits();
    Real trunc(wp);
    Cplx v = tornheim_phase_impl(s1, s2, s3, Root4(0), Root4(0), wp, &trunc);
    NumericValue out(prec.bits());
    out.value.re = round_to(v.re, prec.bits());
    out.value.im = round_to(v.im, prec.bits());
    out.tail_bound = round_to(abs(trunc), prec.bits());
    out.rounding_slack = pow_si(Real(2.0, prec.bits()), -prec.bits() - 16) *
                         (out.value.abs() + Real(1.0, prec.bits()));
    return out;
}

NumericValue eval_frakt(long p, double s, long q, Root4 x, Root4 y, const Precision& prec) {
    prec.validate();
    if (p < 1 || q < 1) throw DomainError("eval_frakt: need p, q >= 1");
    if (!(s > 1.0)) throw ConvergenceError("eval_frakt: need s > 1");

    const mpfr_prec_t wp = prec.work_bits();
    const double pd = static_cast<double>(p), qd = static_cast<double>(q);
    const Root4 xb = x.conj();
    const Root4 xby = xb * y;

    // split the two-sided l-sum by the sign of l and of l+m; each piece is an
    // absolutely convergent N^2 sum of phase Tornheim type:
    //   l >= 1                : TP(p, s, q; x, y)
    //   l = -k, m = k+n       : (-1)^p     TP(p, q, s; conj(x) y, y)
    //   l = -(m+n)            : (-1)^{p+q} TP(s, q, p; conj(x) y, conj(x))
    Real t1(wp), t2(wp), t3(wp);
    Cplx v = tornheim_phase_impl(pd, s, qd, x, y, wp, &t1);
    Cplx w2 = tornheim_phase_impl(pd, qd, s, xby, y, wp, &t2);
    Cplx w3 = tornheim_phase_impl(s, qd, pd, xby, xb, wp, &t3);
    if (p % 2 == 1) w2 = -w2;
    if ((p + q) % 2 == 1) w3 = -w3;
    v += w2;
    v += w3;

    NumericValue out(prec.bits());
    out.value.re = round_to(v.re, prec.bits());
    out.value.im = round_to(v.im, prec.bits());
    out.tail_bound = round_to(abs(t1) + abs(t2) + abs(t3), prec.bits());
    out.rounding_slack = pow_si(Real(2.0, prec.bits()), -prec.bits() - 16) *
                         (out.value.abs() + Real(1.0, prec.bits()));
    return out;
}

} // namespace latzeta
