#include "latzeta/hurwitz.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "latzeta/bernoulli.hpp"
#include "latzeta/errors.hpp"

namespace latzeta {

namespace {

bool is_integer(double x) {
    return x == std::floor(x) && std::abs(x) < 1e15;
}

// Euler-Maclaurin:
//   zeta(s,a) = sum_{k<K} (a+k)^-s + (a+K)^{1-s}/(s-1) + (a+K)^{-s}/2
//             + sum_j B_{2j}/(2j)! (s)_{2j-1} (a+K)^{-s-2j+1}
// Terms of the asymptotic part are added while they shrink.
Real hurwitz_em(double sigma, const Rational& a, mpfr_prec_t prec) {
    const long K = std::max<long>({64, static_cast<long>(0.75 * prec),
                                   static_cast<long>(std::abs(sigma)) + 8});
    const Real s(sigma, prec);
    Real acc(prec);
    for (long k = 0; k < K; ++k)
        acc += pow(Real(a + k, prec), -s);

    const Real base(a + K, prec);
    const Real binv = Real(1, prec) / base;
    acc += pow(base, Real(1 - sigma, prec)) / Real(sigma - 1, prec);
    Real bpow = pow(base, -s);
    acc += bpow * Real(0.5, prec);

    // asymptotic correction terms
    Real poch(1.0, prec);      // (s)(s+1)...(s+2j-2)
    Real prev_mag(prec);
    bool have_prev = false;
    for (long j = 1; j <= 64; ++j) {
        poch *= (j == 1) ? s : (s + Real(2 * j - 3, prec)) * (s + Real(2 * j - 2, prec));
        bpow *= binv;
        if (j > 1) bpow *= binv;
        Real coeff(bernoulli_number(2 * j), prec);
        Integer fact;
        mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(2 * j));
        Real term = coeff / Real(Rational(fact), prec) * poch * bpow;
        Real mag = abs(term);
        if (have_prev && mag > prev_mag) break;  // asymptotic tail started growing
        acc += term;
        prev_mag = mag;
        have_prev = true;
        Real scale = abs(acc) + Real(1.0, prec);
        if (mag < scale * pow_si(Real(2.0, prec), -(prec + 8))) break;
    }
    return acc;
}

// zeta(sigma, r/q) for sigma < 0.5 via the functional equation
//   zeta(1-s, r/q) = 2 Gamma(s)/(2 pi q)^s sum_h cos(pi s/2 - 2 pi r h/q) zeta(s, h/q)
Real hurwitz_fe(double sigma, const Rational& a, mpfr_prec_t prec) {
    const long q = a.get_den().get_si();
    const long r = a.get_num().get_si();
    const double s = 1.0 - sigma;
    const Real sr(s, prec);
    const Real pi = Real::pi(prec);
    Real front = Real(2, prec) * gamma(sr) / pow(Real(2 * q, prec) * pi, sr);
    Real acc(prec);
    for (long h = 1; h <= q; ++h) {
        Real angle = pi * sr * Real(0.5, prec) - pi * Real(rational_of(2 * r * h, q), prec);
        acc += cos(angle) * hurwitz_em(s, Rational(h, q), prec);
    }
    return front * acc;
}

} // namespace

Real hurwitz_zeta(double sigma, const Rational& a, mpfr_prec_t prec) {
    if (sigma == 1.0) throw DomainError("hurwitz_zeta: pole at sigma = 1");
    if (is_integer(sigma) && sigma <= 0) {
        long n = static_cast<long>(-sigma);
        Rational v = -bernoulli_poly(n + 1, a) / Rational(n + 1);
        return Real(v, prec);
    }
    if (sigma < 0.5) return hurwitz_fe(sigma, a, prec);
    return hurwitz_em(sigma, a, prec);
}

Real riemann_zeta(double sigma, mpfr_prec_t prec) {
    return hurwitz_zeta(sigma, Rational(1), prec);
}

Real hurwitz_pair_diff(double s, const Rational& a1, const Rational& a2, mpfr_prec_t prec) {
    const long K = std::max<long>(64, static_cast<long>(0.75 * prec));
    const Real sr(s, prec);
    Real acc(prec);
    for (long k = 0; k < K; ++k)
        acc += pow(Real(a1 + k, prec), -sr) - pow(Real(a2 + k, prec), -sr);

    const Real b1(a1 + K, prec), b2(a2 + K, prec);
    // ((K+a1)^{1-s} - (K+a2)^{1-s})/(s-1), finite at s = 1:
    //   = (K+a2)^{1-s} expm1((1-s) log(b1/b2)) / (s-1)
    Real lr = log(b1 / b2);
    if (s == 1.0) {
        acc += -lr;
    } else {
        Real t = Real(1 - s, prec) * lr;
        Real em(prec);
        mpfr_expm1(em.raw(), t.raw(), MPFR_RNDN);
        acc += pow(b2, Real(1 - s, prec)) * em / Real(s - 1, prec);
    }

    // remaining Euler-Maclaurin terms subtract cleanly; no pole involved
    Real p1 = pow(b1, -sr), p2 = pow(b2, -sr);
    acc += (p1 - p2) * Real(0.5, prec);
    Real i1 = Real(1, prec) / b1, i2 = Real(1, prec) / b2;
    Real poch(1.0, prec);
    for (long j = 1; j <= 48; ++j) {
        poch *= (j == 1) ? sr : (sr + Real(2 * j - 3, prec)) * (sr + Real(2 * j - 2, prec));
        p1 *= i1;
        p2 *= i2;
        if (j > 1) {
            p1 *= i1;
            p2 *= i2;
        }
        Integer fact;
        mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(2 * j));
        Real c = Real(bernoulli_number(2 * j), prec) / Real(Rational(fact), prec) * poch;
        Real term = c * (p1 - p2);
        acc += term;
        Real scale = abs(acc) + Real(1.0, prec);
        if (abs(term) < scale * pow_si(Real(2.0, prec), -(prec + 8))) break;
    }
    return acc;
}

Real dirichlet_l4(double s, mpfr_prec_t prec) {
    if (s <= 0) throw DomainError("dirichlet_l4: need s > 0");
    Real diff = hurwitz_pair_diff(s, rational_of(1, 4), rational_of(3, 4), prec);
    return diff * pow(Real(4, prec), Real(-s, prec));
}

Cplx polylog_at_root(double nu, Root4 x, mpfr_prec_t prec) {
    if (x.is_one()) throw DomainError("polylog_at_root: x = 1 not handled here");
    if (nu == 1.0) {
        // -log(1 - x)
        Real ln2 = Real::log2(prec);
        Real pi = Real::pi(prec);
        switch (x.e) {
            case 2: return Cplx(-ln2, Real(prec));                                   // x = -1
            case 1: return Cplx(-ln2 * Real(0.5, prec), pi * Real(0.25, prec));      // x = i
            default: return Cplx(-ln2 * Real(0.5, prec), -pi * Real(0.25, prec));    // x = -i
        }
    }
    // Li_nu(x) = 4^{-nu} sum_{r=1..4} x^r zeta(nu, r/4); pole parts cancel since
    // sum_r x^r = 0, but nu = 1 is excluded above anyway.
    Cplx acc(prec);
    if (is_integer(nu) && nu <= 0) {
        // exact values through Bernoulli polynomials
        long n = static_cast<long>(-nu);
        Gaussian g;
        for (long r = 1; r <= 4; ++r) {
            Rational z = -bernoulli_poly(n + 1, rational_of(r, 4)) / Rational(n + 1);
            g += Gaussian::i_pow(static_cast<int>(r) * x.e) * z;
        }
        Rational scale = pow_rational(Rational(4), static_cast<unsigned long>(n));
        g = g * scale;  // 4^{-nu} = 4^{n}
        return gaussian_to_cplx(g, prec);
    }
    for (long r = 1; r <= 4; ++r) {
        Cplx w = gaussian_to_cplx(Gaussian::i_pow(static_cast<int>(r) * x.e), prec);
        acc += w * hurwitz_zeta(nu, rational_of(r, 4), prec);
    }
    return acc * pow(Real(4, prec), Real(-nu, prec));
}

namespace {
std::mutex gauss_mu;
std::map<std::pair<int, mpfr_prec_t>, GaussRule> gauss_cache;
}

const GaussRule& gauss_legendre(int n, mpfr_prec_t prec) {
    std::lock_guard<std::mutex> lock(gauss_mu);
    auto key = std::make_pair(n, prec);
    auto it = gauss_cache.find(key);
    if (it != gauss_cache.end()) return it->second;

    GaussRule rule;
    const Real one(1.0, prec), two(2.0, prec);
    for (int i = 1; i <= n; ++i) {
        // Newton from the Chebyshev-like initial guess
        Real x(std::cos(M_PI * (i - 0.25) / (n + 0.5)), prec);
        Real dp(prec);
        for (int iter = 0; iter < 200; ++iter) {
            // Legendre recurrence for P_n(x), P'_n(x)
            Real p0(1.0, prec), p1 = x;
            for (int k = 2; k <= n; ++k) {
                Real pk = (Real(2 * k - 1, prec) * x * p1 - Real(k - 1, prec) * p0) / Real(k, prec);
                p0 = p1;
                p1 = pk;
            }
            dp = Real(n, prec) * (x * p1 - p0) / (x * x - one);
            Real dx = p1 / dp;
            x -= dx;
            if (abs(dx) < pow_si(Real(2.0, prec), -(prec + 2))) break;
        }
        rule.nodes.push_back(x);
        rule.weights.push_back(two / ((one - x * x) * dp * dp));
    }
    auto [ins, ok] = gauss_cache.emplace(key, std::move(rule));
    return ins->second;
}

} // namespace latzeta
