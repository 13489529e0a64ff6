#include "latzeta/rational.hpp"

namespace latzeta {

Rational rational_from_string(const std::string& text) {
    Rational q;
    if (q.set_str(text, 10) != 0)
        throw DomainError("not a rational: '" + text + "'");
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) {
    return q.get_str();
}

Rational pow2(long e) {
    Rational q(1);
    if (e >= 0) {
        mpz_ui_pow_ui(q.get_num_mpz_t(), 2, static_cast<unsigned long>(e));
    } else {
        mpz_ui_pow_ui(q.get_den_mpz_t(), 2, static_cast<unsigned long>(-e));
    }
    return q;
}

Rational pow_rational(const Rational& base, unsigned long e) {
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), e);
    return r;
}

Integer binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return Integer(0);
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Rational falling_binomial(long a, long k) {
    if (k < 0) return Rational(0);
    Rational num(1);
    for (long j = 0; j < k; ++j) num *= Rational(a - j);
    Integer fact;
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(k));
    Rational r = num / Rational(fact);
    r.canonicalize();
    return r;
}

std::string to_string(const Gaussian& g) {
    if (g.im == 0) return to_string(g.re);
    std::string s;
    if (g.re != 0) s += to_string(g.re);
    if (sgn(g.im) >= 0 && !s.empty()) s += "+";
    if (g.im == 1) s += "i";
    else if (g.im == -1) s += "-i";
    else s += to_string(g.im) + "*i";
    return s;
}

} // namespace latzeta
