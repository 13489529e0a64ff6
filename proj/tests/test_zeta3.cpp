#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>

#include "latzeta/errors.hpp"
#include "latzeta/series.hpp"

using namespace latzeta;

namespace {

double dd(const Real& r) { return r.to_double(); }

std::complex<double> direct_sum(const LatticeSeriesSpec& sp, long N) {
    std::complex<double> acc = 0;
    const std::complex<double> iu(0, 1);
    for (long m1 = 1; m1 <= N; ++m1)
        for (long m2 = 1; m2 <= N; ++m2)
            for (long m3 = 1; m3 <= N; ++m3) {
                if (!lattice_member(sp.lattice, m1, m2, m3)) continue;
                double den = std::pow(m1, sp.exponents[0]) * std::pow(m2, sp.exponents[1]) *
                             std::pow(m3, sp.exponents[2]) * std::pow(m1 + m2, sp.exponents[3]) *
                             std::pow(m2 + m3, sp.exponents[4]) *
                             std::pow(m1 + m2 + m3, sp.exponents[5]);
                acc += std::pow(iu, twist_exponent(sp.twist, m1, m2, m3)) / den;
            }
    return acc;
}

std::complex<double> engine(const LatticeSeriesSpec& sp, const Precision& p) {
    NumericValue v = eval_zeta3(sp, p);
    return {dd(v.value.re), dd(v.value.im)};
}

} // namespace

TEST_CASE("engine agrees with direct summation on every twist and lattice") {
    Precision p;
    p.cutoff = 48;
    for (TwistLabel tw : {TwistLabel::Zero, TwistLabel::Lam1, TwistLabel::Lam2, TwistLabel::Lam3})
        for (LatticeLabel la : {LatticeLabel::P, LatticeLabel::L1, LatticeLabel::Q}) {
            LatticeSeriesSpec sp{{2, 2.5, 2, 2, 3, 2}, tw, la};
            CHECK(std::abs(engine(sp, p) - direct_sum(sp, 48)) < 1e-13);
        }
}

TEST_CASE("guard rejects non-convergent tuples") {
    Precision p;
    p.cutoff = 32;
    CHECK_THROWS_AS(eval_zeta3({{1, 1, 1, 1, 1, 0.5}, TwistLabel::Zero, LatticeLabel::P}, p),
                    ConvergenceError);
    CHECK_THROWS_AS(eval_zeta3({{1, 1, 1, 1, 1, 1}, TwistLabel::Zero, LatticeLabel::P}, p),
                    ConvergenceError);  // total weight 6 is on the guard boundary
    CHECK(zeta3_guard_ok({1, 1, 1, 1, 1, 2}));
}

TEST_CASE("doubled cutoff stays within the reported tail bound") {
    LatticeSeriesSpec sp{{2, 2, 2, 2, 2, 2}, TwistLabel::Zero, LatticeLabel::P};
    Precision p1;
    p1.cutoff = 64;
    Precision p2;
    p2.cutoff = 128;
    NumericValue a = eval_zeta3(sp, p1);
    NumericValue b = eval_zeta3(sp, p2);
    CHECK(std::abs(dd(a.value.re - b.value.re)) < dd(a.tail_bound));
}

TEST_CASE("zero-twist real tuples have exactly real values") {
    Precision p;
    p.cutoff = 40;
    for (LatticeLabel la : {LatticeLabel::P, LatticeLabel::L1, LatticeLabel::Q}) {
        NumericValue v = eval_zeta3({{2, 2, 3, 2, 2, 2}, TwistLabel::Zero, la}, p);
        CHECK(dd(v.value.im) == 0.0);
    }
}

TEST_CASE("memoized pass is bit-identical across calls") {
    LatticeSeriesSpec sp{{2, 3, 2, 2, 2, 3}, TwistLabel::Lam1, LatticeLabel::P};
    Precision p;
    p.cutoff = 56;
    NumericValue a = eval_zeta3(sp, p);
    NumericValue b = eval_zeta3(sp, p);
    CHECK(dd(a.value.re) == dd(b.value.re));
    CHECK(dd(a.value.im) == dd(b.value.im));
    clear_zeta3_cache();
    NumericValue c = eval_zeta3(sp, p);
    CHECK(dd(a.value.re) == dd(c.value.re));
    CHECK(dd(a.value.im) == dd(c.value.im));
}

TEST_CASE("generic high-precision path matches the fixed-point engine") {
    LatticeSeriesSpec sp{{2, 2, 2, 3, 2, 2}, TwistLabel::Lam2, LatticeLabel::L1};
    Precision fx;
    fx.cutoff = 24;
    Precision hp;
    hp.cutoff = 24;
    hp.significand_bits = 192;
    NumericValue a = eval_zeta3(sp, fx);
    NumericValue b = eval_zeta3(sp, hp);
    CHECK(std::abs(dd(a.value.re - b.value.re)) < 1e-30);
}

TEST_CASE("decomposition identities hold termwise") {
    Precision p;
    p.cutoff = 64;
    std::array<double, 6> e{2, 3, 2, 2, 2, 3};
    auto val = [&](TwistLabel t, LatticeLabel l) {
        return engine({e, t, l}, p);
    };
    auto P0 = val(TwistLabel::Zero, LatticeLabel::P);
    auto P1 = val(TwistLabel::Lam1, LatticeLabel::P);
    auto P2 = val(TwistLabel::Lam2, LatticeLabel::P);
    auto P3 = val(TwistLabel::Lam3, LatticeLabel::P);
    auto L = val(TwistLabel::Zero, LatticeLabel::L1);
    auto Q = val(TwistLabel::Zero, LatticeLabel::Q);
    CHECK(std::abs(L - 0.5 * (P0 + P2)) < 1e-15);
    CHECK(std::abs(Q - 0.25 * (P0 - P1 + P2 - P3)) < 1e-15);
}
