#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "latzeta/bernoulli.hpp"
#include "latzeta/closed_forms.hpp"
#include "latzeta/errors.hpp"
#include "latzeta/rational.hpp"

using namespace latzeta;

namespace {

// Independent Bernoulli oracle (Worpitzky double sum); yields B1 = -1/2.
Rational bernoulli_worpitzky(long n) {
    Rational acc(0);
    for (long k = 0; k <= n; ++k) {
        Rational inner(0);
        for (long j = 0; j <= k; ++j) {
            Integer jp;
            mpz_ui_pow_ui(jp.get_mpz_t(), static_cast<unsigned long>(j),
                          static_cast<unsigned long>(n));
            if (n == 0) jp = 1;
            Rational t = Rational(binomial(k, j)) * Rational(jp);
            if (j % 2 == 1) t = -t;
            inner += t;
        }
        acc += inner / Rational(k + 1);
    }
    acc.canonicalize();
    return acc;
}

// Independent Euler-number oracle: Entringer triangle zigzag numbers,
// E_{2n} = (-1)^n Z(2n).
Integer euler_entringer(long n) {
    if (n % 2 == 1) return Integer(0);
    std::vector<Integer> row{Integer(1)};
    for (long r = 1; r <= n; ++r) {
        std::vector<Integer> next(static_cast<size_t>(r) + 1);
        next[0] = 0;
        for (long k = 1; k <= r; ++k)
            next[static_cast<size_t>(k)] =
                next[static_cast<size_t>(k - 1)] + row[static_cast<size_t>(r - k)];
        row = std::move(next);
    }
    Integer z = row.back();
    if ((n / 2) % 2 == 1) z = -z;
    return z;
}

} // namespace

TEST_CASE("bernoulli numbers: stated values and the independent oracle") {
    CHECK(bernoulli_number(0) == Rational(1));
    CHECK(bernoulli_number(1) == rational_of(-1, 2));
    CHECK(bernoulli_number(2) == rational_of(1, 6));
    CHECK(bernoulli_number(12) == rational_of(-691, 2730));
    for (long n = 0; n <= 14; ++n)
        CHECK(bernoulli_number(n) == bernoulli_worpitzky(n));
}

TEST_CASE("bernoulli recurrence invariant up to n = 40") {
    for (long n = 1; n <= 40; ++n) {
        Rational acc(0);
        for (long k = 0; k <= n; ++k)
            acc += Rational(binomial(n + 1, k)) * bernoulli_number(k);
        CHECK(acc == Rational(0));
    }
}

TEST_CASE("bernoulli polynomials") {
    CHECK(bernoulli_poly(0, rational_of(7, 3)) == Rational(1));
    CHECK(bernoulli_poly(1, rational_of(1, 2)) == Rational(0));
    CHECK(bernoulli_poly(2, rational_of(1, 4)) == rational_of(-1, 48));
    for (long n = 0; n <= 20; ++n) {
        Rational diff = bernoulli_poly(n, Rational(1)) - bernoulli_poly(n, Rational(0));
        CHECK(diff == (n == 1 ? Rational(1) : Rational(0)));
    }
}

TEST_CASE("euler numbers against the Entringer oracle") {
    CHECK(euler_number(0) == Integer(1));
    CHECK(euler_number(2) == Integer(-1));
    CHECK(euler_number(4) == Integer(5));
    CHECK(euler_number(6) == Integer(-61));
    CHECK(euler_number(3) == Integer(0));
    for (long n = 0; n <= 16; ++n)
        CHECK(euler_number(n) == euler_entringer(n));
}

TEST_CASE("zeta at even integers") {
    ConstantExpression z2 = zeta_even_closed(2);
    REQUIRE(z2.terms.size() == 1);
    CHECK(zeta_even_rational(2) == rational_of(1, 6));
    CHECK(zeta_even_rational(12) == rational_of(691, 638512875));
    CHECK(zeta_even_closed(0).terms.begin()->second == Gaussian(rational_of(-1, 2)));
    CHECK_THROWS_AS(zeta_even_closed(3), DomainError);
    CHECK_THROWS_AS(zeta_even_closed(-2), DomainError);
}

TEST_CASE("L(., chi4) at odd integers") {
    CHECK(l4_odd_rational(1) == rational_of(1, 4));
    CHECK(l4_odd_rational(3) == rational_of(1, 32));
    CHECK(l4_odd_rational(5) == rational_of(5, 1536));
    CHECK(l4_odd_rational(7) == rational_of(61, 184320));
    CHECK_THROWS_AS(l4_odd_closed(2), DomainError);
}

TEST_CASE("gaussian rational arithmetic") {
    std::mt19937 rng(0x5eed);
    std::uniform_int_distribution<long> d(-12, 12);
    for (int iter = 0; iter < 200; ++iter) {
        Gaussian a(rational_of(d(rng), 1 + std::abs(d(rng))), rational_of(d(rng), 1 + std::abs(d(rng))));
        Gaussian b(rational_of(d(rng), 1 + std::abs(d(rng))), rational_of(d(rng), 1 + std::abs(d(rng))));
        CHECK((a * b).conj() == a.conj() * b.conj());
        CHECK(a.conj().conj() == a);
    }
    CHECK(Gaussian::i_pow(6) == Gaussian(-1));
    CHECK(Gaussian::i_pow(-1) == Gaussian(Rational(0), Rational(-1)));
}

TEST_CASE("phi at even integers") {
    CHECK(phi_even_rational(0) == rational_of(-1, 2));
    // phi(2) = (2^{-1}-1) zeta(2) = -pi^2/12
    CHECK(phi_even_rational(2) == rational_of(-1, 12));
}
