#include "latzeta/closed_forms.hpp"

#include "latzeta/bernoulli.hpp"

namespace latzeta {

Rational zeta_even_rational(long n) {
    if (n < 2 || n % 2 != 0) throw DomainError("zeta_even_rational: need even n >= 2");
    long k = n / 2;
    Integer fact;
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(n));
    Rational r = bernoulli_number(n) * pow2(n) / (Rational(2) * Rational(fact));
    if (k % 2 == 0) r = -r;
    r.canonicalize();
    return r;
}

Rational l4_odd_rational(long n) {
    if (n < 1 || n % 2 != 1) throw DomainError("l4_odd_rational: need odd n >= 1");
    long k = (n - 1) / 2;
    Integer fact;
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(2 * k));
    Integer four_pow;
    mpz_ui_pow_ui(four_pow.get_mpz_t(), 4, static_cast<unsigned long>(k + 1));
    Rational r = Rational(euler_number(2 * k)) / (Rational(four_pow) * Rational(fact));
    if (k % 2 == 1) r = -r;
    r.canonicalize();
    return r;
}

Rational phi_even_rational(long n) {
    if (n < 0 || n % 2 != 0) throw DomainError("phi_even_rational: need even n >= 0");
    if (n == 0) return rational_of(-1, 2);
    Rational r = (pow2(1 - n) - 1) * zeta_even_rational(n);
    r.canonicalize();
    return r;
}

ConstantExpression zeta_even_closed(long n) {
    if (n < 0 || n % 2 != 0) throw DomainError("zeta_even_closed: need even n >= 0");
    if (n == 0) return ConstantExpression::constant(Gaussian(rational_of(-1, 2)));
    ConstMonomial m;
    m.pi_pow = static_cast<int>(n);
    return ConstantExpression::monomial(Gaussian(zeta_even_rational(n)), m);
}

ConstantExpression l4_odd_closed(long n) {
    if (n < 1 || n % 2 != 1) throw DomainError("l4_odd_closed: need odd n >= 1");
    ConstMonomial m;
    m.pi_pow = static_cast<int>(n);
    return ConstantExpression::monomial(Gaussian(l4_odd_rational(n)), m);
}

} // namespace latzeta
