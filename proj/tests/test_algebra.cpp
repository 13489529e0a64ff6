#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "latzeta/algebra.hpp"
#include "latzeta/closed_forms.hpp"
#include "latzeta/errors.hpp"

using namespace latzeta;

namespace {
double dd(const Real& r) { return r.to_double(); }
Precision prec() { return Precision{}; }
} // namespace

TEST_CASE("phi reduction") {
    ShiftedCombination p0 = phi_reduce(0);  // (2u - 1) zeta(s)
    SymbolicCoefficient c0;
    c0.add_term(0, 1, Gaussian(Rational(2)));
    c0.add_term(0, 0, Gaussian(-1));
    CHECK(p0 == ShiftedCombination::single(Family::Zeta, 0, c0));

    ShiftedCombination p3 = phi_reduce(3);  // (u/4 - 1) zeta(s+3)
    SymbolicCoefficient c3;
    c3.add_term(0, 1, Gaussian(rational_of(1, 4)));
    c3.add_term(0, 0, Gaussian(-1));
    CHECK(p3 == ShiftedCombination::single(Family::Zeta, 3, c3));

    // phi(2) = -pi^2/12 through specialization
    ConstantExpression v = specialize(phi_reduce(0), 2);
    ConstMonomial pi2;
    pi2.pi_pow = 2;
    CHECK(v.equals_normalized(ConstantExpression::monomial(Gaussian(rational_of(-1, 12)), pi2)));
}

TEST_CASE("quarter phase reduction") {
    ShiftedCombination q = phi_quarter_reduce(0, +1);  // (2u^2 - u) zeta(s) + i L4(s)
    SymbolicCoefficient z;
    z.add_term(0, 2, Gaussian(Rational(2)));
    z.add_term(0, 1, Gaussian(-1));
    ShiftedCombination expect = ShiftedCombination::single(Family::Zeta, 0, z);
    expect.add_term(Family::L4, 0,
                    SymbolicCoefficient::constant(Gaussian(Rational(0), Rational(1))));
    CHECK(q == expect);
    CHECK(phi_quarter_reduce(0, -1) == q.conj_map());

    // specialized at s = 2: -pi^2/48 + i L(2,chi4), checked numerically
    NumericValue n = expr_eval_numeric(phi_quarter_reduce(0, +1), 2.0, prec());
    NumericValue direct = eval_phi_alpha(2.0, rational_of(1, 4), prec());
    CHECK(std::abs(dd(n.value.re - direct.value.re)) < 1e-30);
    CHECK(std::abs(dd(n.value.im - direct.value.im)) < 1e-30);
}

TEST_CASE("lambda values") {
    ConstMonomial pi2;
    pi2.pi_pow = 2;
    CHECK(lambda_value(2, +1).equals_normalized(
        ConstantExpression::monomial(Gaussian(rational_of(-1, 24)), pi2)));
    ConstMonomial pi1;
    pi1.pi_pow = 1;
    CHECK(lambda_value(1, +1).equals_normalized(ConstantExpression::monomial(
        Gaussian(Rational(0), rational_of(1, 2)), pi1)));
    CHECK(lambda_value(0, -1).equals_normalized(ConstantExpression::constant(Gaussian(-1))));
}

TEST_CASE("t_closed simplest case: T(1,s,1;1,1) = 2 zeta(s+2)") {
    ShiftedCombination t = t_closed(1, 0, 1, Root4(0), Root4(0));
    CHECK(t == ShiftedCombination::single(Family::Zeta, 2,
                                          SymbolicCoefficient::constant(Gaussian(Rational(2)))));
}

TEST_CASE("t_closed conjugation maps (x,y) to conjugate pair") {
    const std::array<std::pair<int, int>, 10> pairs{
        {{0, 0}, {2, 0}, {0, 2}, {2, 2}, {2, 1}, {3, 2}, {3, 1}, {2, 3}, {1, 2}, {1, 3}}};
    for (long p = 1; p <= 3; ++p)
        for (long q = 1; q <= 2; ++q)
            for (auto [xe, ye] : pairs) {
                ShiftedCombination a = t_closed(p, 0, q, Root4(xe), Root4(ye)).conj_map();
                ShiftedCombination b = t_closed(p, 0, q, Root4(-xe), Root4(-ye));
                CHECK(a == b);
            }
    CHECK_THROWS_AS(t_closed(1, 0, 1, Root4(0), Root4(1)), DomainError);
}

TEST_CASE("t_closed against the numeric evaluator (oracle subset)") {
    // the full grid runs in the verification suite; spot-check here
    for (auto [p, q, xe, ye] : {std::array<int, 4>{2, 3, 0, 0}, std::array<int, 4>{2, 2, 2, 2},
                                std::array<int, 4>{2, 3, 2, 1}, std::array<int, 4>{1, 1, 0, 0},
                                std::array<int, 4>{2, 3, 3, 1}}) {
        double s = 2.5;
        NumericValue lhs = expr_eval_numeric(t_closed(p, 0, q, Root4(xe), Root4(ye)), s, prec());
        NumericValue rhs = eval_frakt(p, s, q, Root4(xe), Root4(ye), prec());
        CHECK(dd((lhs.value - rhs.value).abs()) < 1e-8);
    }
}

TEST_CASE("normalization idempotence and basis restriction") {
    // build an expression with even-zeta and odd-L4 factors
    ConstMonomial m;
    m.pi_pow = 1;
    m.factors = {{Family::Zeta, 4}, {Family::Zeta, 5}, {Family::L4, 3}, {Family::L4, 4}};
    ConstantExpression e = ConstantExpression::monomial(Gaussian(rational_of(7, 3)), m);
    ConstantExpression n1 = e.normalized();
    ConstantExpression n2 = n1.normalized();
    CHECK(n1.terms == n2.terms);
    for (const auto& [mono, c] : n1.terms)
        for (const auto& [fam, arg] : mono.factors) {
            if (fam == Family::Zeta) CHECK(arg % 2 == 1);
            if (fam == Family::L4) CHECK(arg % 2 == 0);
        }
    // zeta(4) * L4(3) reduce: pi^4/90 * pi^3/32
    ConstMonomial expect;
    expect.pi_pow = 8;
    expect.factors = {{Family::Zeta, 5}, {Family::L4, 4}};
    Gaussian coeff = Gaussian(rational_of(7, 3) * zeta_even_rational(4) * l4_odd_rational(3));
    CHECK(n1.terms.size() == 1);
    CHECK(n1.terms.begin()->first == expect);
    CHECK(n1.terms.begin()->second == coeff);
}

TEST_CASE("zeta-even elimination matches the series evaluator") {
    for (long n = 2; n <= 16; n += 2) {
        NumericValue closed = expr_eval_numeric(zeta_even_closed(n), prec());
        NumericValue series = eval_zeta(static_cast<double>(n), prec());
        CHECK(std::abs(dd(closed.value.re - series.value.re)) < 1e-30);
    }
    for (long n = 1; n <= 7; n += 2) {
        NumericValue closed = expr_eval_numeric(l4_odd_closed(n), prec());
        NumericValue series = eval_L4(static_cast<double>(n), prec());
        CHECK(std::abs(dd(closed.value.re - series.value.re)) < 1e-30);
    }
}

TEST_CASE("specialize guards") {
    CHECK_THROWS_AS(specialize(phi_reduce(-1), 2), SingularityError);  // zeta(1)
    CHECK_THROWS_AS(specialize(phi_reduce(0), 1), SingularityError);
    // L4 at argument 1 is fine
    ShiftedCombination l = ShiftedCombination::single(
        Family::L4, 0, SymbolicCoefficient::constant(Gaussian(1)));
    ConstantExpression v = specialize(l, 1);
    ConstMonomial pi1;
    pi1.pi_pow = 1;
    CHECK(v.equals_normalized(ConstantExpression::monomial(Gaussian(rational_of(1, 4)), pi1)));
}

TEST_CASE("symbolic products of two series factors are representable") {
    // harmonic-product style degree-2 monomial zeta(3)*zeta(5)
    ConstMonomial m;
    m.factors = {{Family::Zeta, 5}, {Family::Zeta, 3}};
    ConstantExpression e = ConstantExpression::monomial(Gaussian(1), m);
    NumericValue v = expr_eval_numeric(e, prec());
    NumericValue a = eval_zeta(3.0, prec());
    NumericValue b = eval_zeta(5.0, prec());
    CHECK(std::abs(dd(v.value.re) - dd(a.value.re) * dd(b.value.re)) < 1e-25);
}
