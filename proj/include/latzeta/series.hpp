#pragma once

#include <array>
#include <optional>

#include "latzeta/a3.hpp"
#include "latzeta/hurwitz.hpp"
#include "latzeta/real.hpp"

namespace latzeta {

struct Precision {
    long significand_bits = 128;
    long cutoff = 400;

    void validate() const {
        if (significand_bits < 64) throw DomainError("Precision: significand_bits >= 64 required");
        if (cutoff < 16) throw DomainError("Precision: cutoff >= 16 required");
    }
    mpfr_prec_t bits() const { return static_cast<mpfr_prec_t>(significand_bits); }
    // internal working precision (guard bits)
    mpfr_prec_t work_bits() const { return static_cast<mpfr_prec_t>(significand_bits + 64); }
};

/**
 * High-precision numeric result: value, a rigorous bound on the truncation
 * tail, and a heuristic bound on accumulated rounding.
 */
struct NumericValue {
    Cplx value;
    Real tail_bound;
    Real rounding_slack;

    explicit NumericValue(mpfr_prec_t prec = 128)
        : value(prec), tail_bound(prec), rounding_slack(prec) {}

    double total_error() const { return tail_bound.to_double() + rounding_slack.to_double(); }
};

// ---- one-dimensional series ----

// zeta(s), s > 1
NumericValue eval_zeta(double s, const Precision& prec);

// L(s, chi4), s > 0
NumericValue eval_L4(double s, const Precision& prec);

// Lerch phase series sum e^{2 pi i m alpha} m^{-s}, alpha in {1/4, 1/2, 3/4}; s > 0, s != 1
NumericValue eval_phi_alpha(double s, const Rational& alpha, const Precision& prec);

// ---- double series ----

// Euler-Zagier double sum: sum m1^{-s1} (m1+m2)^{-s2}; s2 > 1, s1+s2 > 2
NumericValue eval_ez2(double s1, double s2, const Precision& prec);

// Tornheim sum: sum m^{-s1} n^{-s2} (m+n)^{-s3}
NumericValue eval_tornheim(double s1, double s2, double s3, const Precision& prec);

// Two-sided sum T(p,s,q;x,y) = sum_{l!=0, m>=1, l+m!=0} x^l y^m / (l^p m^s (l+m)^q)
// with fourth-root-of-unity phases; p,q >= 1, s > 1.
NumericValue eval_frakt(long p, double s, long q, Root4 x, Root4 y, const Precision& prec);

// Phase Tornheim kernel sum_{j,n>=1} u^j v^n j^{-a} n^{-b} (j+n)^{-c}
// (exposed for tests; the frakt evaluator is built on three of these).
Cplx tornheim_phase(double a, double b, double c, Root4 u, Root4 v, mpfr_prec_t prec);

// ---- lattice triple series ----

struct LatticeSeriesSpec {
    std::array<double, 6> exponents;  // order: m1, m2, m3, m1+m2, m2+m3, m1+m2+m3
    TwistLabel twist = TwistLabel::Zero;
    LatticeLabel lattice = LatticeLabel::P;
};

// Absolute-convergence guard used by eval_zeta3.
bool zeta3_guard_ok(const std::array<double, 6>& e);

NumericValue eval_zeta3(const LatticeSeriesSpec& spec, const Precision& prec);

// One summation pass serves every twist/lattice; results are memoized per
// (exponents, cutoff, bits).  Clearing is only needed to bound memory in
// long batch runs.
void clear_zeta3_cache();

// ---- identity residual checker ----

enum class IdentityId { FourierPfrac, BernoulliFourier, DoubleRelation, Master };

struct IdentityParams {
    int p = 2, q = 2, a = 2, b = 2, c = 2;
    double s = 2.5;
    Root4 x{}, y{};
    int j = 2;                        // BernoulliFourier order
    Rational alpha = rational_of(1, 4);
};

// |LHS - RHS| with both sides summed at the configured cutoff.
double check_identity(IdentityId id, const IdentityParams& params, double theta,
                      const Precision& prec);

} // namespace latzeta
