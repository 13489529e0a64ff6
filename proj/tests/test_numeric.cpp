#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>

#include "latzeta/hurwitz.hpp"
#include "latzeta/series.hpp"

using namespace latzeta;

namespace {
const mpfr_prec_t wp = 192;

double dd(const Real& r) { return r.to_double(); }
} // namespace

TEST_CASE("riemann zeta at representative points") {
    Real pi = Real::pi(wp);
    CHECK(std::abs(dd(riemann_zeta(2.0, wp) - pi * pi / Real(6, wp))) < 1e-50);
    // exact values at nonpositive integers via Bernoulli polynomials
    CHECK(dd(riemann_zeta(0.0, wp)) == -0.5);
    CHECK(std::abs(dd(riemann_zeta(-3.0, wp)) - 1.0 / 120.0) < 1e-55);
    CHECK(dd(riemann_zeta(-2.0, wp)) == 0.0);
    // functional-equation range (reference: independent high-precision tables)
    CHECK(std::abs(dd(riemann_zeta(-2.5, wp)) - 0.00851692877785033) < 1e-15);
    CHECK(std::abs(dd(riemann_zeta(0.5, wp)) - (-1.4603545088095868)) < 1e-14);
}

TEST_CASE("hurwitz zeta at rational shifts") {
    CHECK(std::abs(dd(hurwitz_zeta(-2.5, rational_of(1, 4), wp)) - (-0.00803809608200384)) < 1e-15);
    CHECK(std::abs(dd(hurwitz_zeta(-1.3, rational_of(3, 4), wp)) - 0.0197335350739452) < 1e-14);
    // zeta(s, 1) = zeta(s)
    CHECK(std::abs(dd(hurwitz_zeta(3.5, Rational(1), wp) - riemann_zeta(3.5, wp))) < 1e-50);
}

TEST_CASE("dirichlet L4, including the s = 1 pole pair") {
    Real pi = Real::pi(wp);
    CHECK(std::abs(dd(dirichlet_l4(1.0, wp) - pi / Real(4, wp))) < 1e-50);
    CHECK(std::abs(dd(dirichlet_l4(3.0, wp) - pi * pi * pi / Real(32, wp))) < 1e-50);
    // Catalan's constant
    CHECK(std::abs(dd(dirichlet_l4(2.0, wp)) - 0.9159655941772190150546) < 1e-20);
}

TEST_CASE("polylog at fourth roots") {
    Real pi = Real::pi(wp);
    Cplx li2 = polylog_at_root(2.0, Root4(1), wp);
    CHECK(std::abs(dd(li2.re + pi * pi / Real(48, wp))) < 1e-50);
    CHECK(std::abs(dd(li2.im) - 0.9159655941772190150546) < 1e-20);
    Cplx li1 = polylog_at_root(1.0, Root4(2), wp);
    CHECK(std::abs(dd(li1.re) + std::log(2.0)) < 1e-15);
    Cplx li0 = polylog_at_root(0.0, Root4(1), wp);  // i/(1-i) = (-1+i)/2
    CHECK(dd(li0.re) == -0.5);
    CHECK(dd(li0.im) == 0.5);
    Cplx lin = polylog_at_root(-2.5, Root4(1), wp);
    CHECK(std::abs(dd(lin.re) - 0.496904417032815) < 1e-13);
    CHECK(std::abs(dd(lin.im) + 0.47477605327649) < 1e-13);
}

TEST_CASE("gauss-legendre rule integrates polynomials exactly") {
    const GaussRule& rule = gauss_legendre(12, wp);
    // int_{-1}^{1} x^k dx
    for (int k = 0; k <= 23; ++k) {
        Real acc(wp);
        for (size_t i = 0; i < rule.nodes.size(); ++i)
            acc += rule.weights[i] * pow_si(rule.nodes[i], k);
        double expect = (k % 2 == 1) ? 0.0 : 2.0 / (k + 1);
        CHECK(std::abs(dd(acc) - expect) < 1e-40);
    }
}

TEST_CASE("phase tornheim kernel against direct summation") {
    // absolutely convergent case, direct double sum as the oracle
    Cplx tp = tornheim_phase(2, 2, 2, Root4(0), Root4(0), wp);
    long double direct = 0;
    for (long m = 2000; m >= 1; --m)
        for (long n = 2000; n >= 1; --n)
            direct += 1.0L / ((long double)m * m * n * n * (m + n) * (m + n));
    CHECK(std::abs(dd(tp.re) - (double)direct) < 1e-8);
    CHECK(dd(tp.im) == 0.0);

    // phases: direct oracle with x = i, y = -1
    Cplx tpi = tornheim_phase(2, 2.5, 2, Root4(1), Root4(2), wp);
    std::complex<long double> di = 0;
    std::complex<long double> iu(0, 1);
    for (long m = 1; m <= 2000; ++m)
        for (long n = 1; n <= 2000; ++n) {
            std::complex<long double> ph = std::pow(iu, m % 4) * ((n % 2) ? -1.0L : 1.0L);
            di += ph / (powl(m, 2.0L) * powl(n, 2.5L) * powl(m + n, 2.0L));
        }
    CHECK(std::abs(dd(tpi.re) - (double)di.real()) < 1e-8);
    CHECK(std::abs(dd(tpi.im) - (double)di.imag()) < 1e-8);
}
