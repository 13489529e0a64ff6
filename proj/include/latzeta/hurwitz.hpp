#pragma once

#include <vector>

#include "latzeta/rational.hpp"
#include "latzeta/real.hpp"

namespace latzeta {

/**
 * Hurwitz zeta at real sigma != 1 and rational a = r/q with q in {1,2,4},
 * 0 < a <= 1.  Euler-Maclaurin for sigma > 0.5; exact Bernoulli polynomial
 * values at nonpositive integer sigma; the Hurwitz functional equation for
 * the remaining negative range.
 */
Real hurwitz_zeta(double sigma, const Rational& a, mpfr_prec_t prec);

Real riemann_zeta(double sigma, mpfr_prec_t prec);

// zeta(s, K + a1) - zeta(s, K + a2) summed as a pair; finite at s = 1.
// Used for Dirichlet and Lerch combinations whose pole parts cancel.
Real hurwitz_pair_diff(double s, const Rational& a1, const Rational& a2, mpfr_prec_t prec);

// L(s, chi4) for real s > 0 (finite at s = 1 via the paired form).
Real dirichlet_l4(double s, mpfr_prec_t prec);

// Fourth root of unity i^e.
struct Root4 {
    int e = 0;  // exponent of i, mod 4

    Root4() = default;
    explicit Root4(int exp) : e(((exp % 4) + 4) % 4) {}
    Root4 conj() const { return Root4(-e); }
    Root4 operator*(Root4 o) const { return Root4(e + o.e); }
    bool operator==(const Root4&) const = default;
    Gaussian gaussian() const { return Gaussian::i_pow(e); }
    bool is_one() const { return e == 0; }
};

// Li_nu(x) for a fourth root of unity x != 1 and any real nu (nu = 1 uses
// the logarithm closed form; integer nu <= 0 is exact).
Cplx polylog_at_root(double nu, Root4 x, mpfr_prec_t prec);

// Gauss-Legendre nodes/weights on [-1,1]; cached per (n, prec).
struct GaussRule {
    std::vector<Real> nodes;
    std::vector<Real> weights;
};
const GaussRule& gauss_legendre(int n, mpfr_prec_t prec);

} // namespace latzeta
