// Quadrature evaluation of phase Tornheim sums
//
//   TP(a,b,c;u,v) = sum_{j,n>=1} u^j v^n j^{-a} n^{-b} (j+n)^{-c}
//                 = (1/Gamma(c)) int_0^inf t^{c-1} Li_a(u e^-t) Li_b(v e^-t) dt,
//
// with u, v fourth roots of unity.  The integrand is handled in three zones:
// [0, 1/2] by exact termwise integration of the small-t expansions of the
// polylog factors, [1/2, 1] and unit panels [k, k+1] by Gauss-Legendre where
// the factors are evaluated by their geometric series.  This reaches full
// working precision uniformly in (a,b,c), including the slowly converging
// a = c = 1 cases where direct lattice summation stalls.

#include <cmath>
#include <map>
#include <mutex>
#include <vector>

#include "latzeta/bernoulli.hpp"
#include "latzeta/errors.hpp"
#include "latzeta/hurwitz.hpp"
#include "latzeta/series.hpp"

namespace latzeta {

namespace {

bool is_integer(double x) {
    return x == std::floor(x) && std::abs(x) < 1e15;
}

// one monomial coef * t^mu * (-ln t)^logpow of a small-t expansion
struct TMono {
    Cplx coef;
    Real mu;
    int logpow;
};

struct Expansion {
    std::vector<TMono> monos;
    // estimate of the first omitted regular term at t = 1/2, for the tail bound
    Real trunc_estimate;

    explicit Expansion(mpfr_prec_t prec) : trunc_estimate(prec) {}
};

long expansion_order(Root4 x, mpfr_prec_t prec) {
    // coefficient decay ratio at t = 1/2 is (1/2)/R with R the distance to
    // the nearest singularity of Li(x e^-t): R = 2pi for x=1, pi for -1,
    // pi/2 for +-i
    double lnratio;
    switch (x.e) {
        case 0: lnratio = std::log(4 * M_PI); break;
        case 2: lnratio = std::log(2 * M_PI); break;
        default: lnratio = std::log(M_PI); break;
    }
    return static_cast<long>(0.6932 * static_cast<double>(prec) / lnratio) + 12;
}

// Small-t expansion of Li_sigma(x e^-t) around t = 0.
Expansion small_t_expansion(double sigma, Root4 x, mpfr_prec_t prec) {
    Expansion ex(prec);
    const long K = expansion_order(x, prec);
    Real fact(1.0, prec);  // k!
    Real lastmag(prec);
    if (x.is_one()) {
        if (is_integer(sigma)) {
            const long p = static_cast<long>(sigma);
            if (p < 1) throw DomainError("small_t_expansion: integer sigma < 1 with x = 1");
            // Li_p(e^-t) = (-t)^{p-1}/(p-1)! (H_{p-1} - ln t) + sum_{k != p-1} zeta(p-k) (-t)^k/k!
            Rational h(0);
            for (long i = 1; i < p; ++i) h += rational_of(1, i);
            Integer pf;
            mpz_fac_ui(pf.get_mpz_t(), static_cast<unsigned long>(p - 1));
            Real lead = Real(h / Rational(pf), prec);
            if ((p - 1) % 2 == 1) lead = -lead;
            ex.monos.push_back({Cplx(lead), Real(static_cast<double>(p - 1), prec), 0});
            Real leadlog = Real(Rational(1) / Rational(pf), prec);
            if ((p - 1) % 2 == 1) leadlog = -leadlog;
            ex.monos.push_back({Cplx(leadlog), Real(static_cast<double>(p - 1), prec), 1});
            for (long k = 0; k <= K; ++k) {
                if (k > 0) fact *= Real(k, prec);
                if (k == p - 1) continue;
                double arg = static_cast<double>(p - k);
                Real z = (arg >= 2.0) ? riemann_zeta(arg, prec)
                                      : Real(-bernoulli_number(k - p + 1) / Rational(k - p + 1), prec);
                if (arg == 0.0) z = Real(-0.5, prec);
                Real c = z / fact;
                if (k % 2 == 1) c = -c;
                ex.monos.push_back({Cplx(c), Real(static_cast<double>(k), prec), 0});
                if (k == K) ex.trunc_estimate = abs(c) * pow_si(Real(0.5, prec), k);
            }
        } else {
            // Gamma(1-sigma) t^{sigma-1} + sum_k zeta(sigma-k) (-t)^k/k!
            ex.monos.push_back({Cplx(gamma(Real(1.0 - sigma, prec))), Real(sigma - 1.0, prec), 0});
            for (long k = 0; k <= K; ++k) {
                if (k > 0) fact *= Real(k, prec);
                Real c = riemann_zeta(sigma - static_cast<double>(k), prec) / fact;
                if (k % 2 == 1) c = -c;
                ex.monos.push_back({Cplx(c), Real(static_cast<double>(k), prec), 0});
                if (k == K) ex.trunc_estimate = abs(c) * pow_si(Real(0.5, prec), k);
            }
        }
    } else {
        // Li_sigma(x e^-t) = sum_k Li_{sigma-k}(x) (-t)^k / k!
        for (long k = 0; k <= K; ++k) {
            if (k > 0) fact *= Real(k, prec);
            Cplx li = polylog_at_root(sigma - static_cast<double>(k), x, prec);
            Cplx c = li * (Real(1.0, prec) / fact);
            if (k % 2 == 1) c = -c;
            ex.monos.push_back({c, Real(static_cast<double>(k), prec), 0});
            if (k == K) ex.trunc_estimate = c.abs() * pow_si(Real(0.5, prec), k);
        }
    }
    return ex;
}

std::mutex exp_mu;
std::map<std::tuple<double, int, mpfr_prec_t>, Expansion> exp_cache;

const Expansion& cached_expansion(double sigma, Root4 x, mpfr_prec_t prec) {
    std::lock_guard<std::mutex> lock(exp_mu);
    auto key = std::make_tuple(sigma, x.e, prec);
    auto it = exp_cache.find(key);
    if (it != exp_cache.end()) return it->second;
    auto [ins, ok] = exp_cache.emplace(key, small_t_expansion(sigma, x, prec));
    return ins->second;
}

// int_0^T t^{nu-1} (-ln t)^d dt for nu > 0, T <= 1
Real mono_integral(const Real& T, const Real& nu, int d, mpfr_prec_t prec) {
    Real Tnu = pow(T, nu);
    Real inv = Real(1.0, prec) / nu;
    Real LT = -log(T);
    switch (d) {
        case 0: return Tnu * inv;
        case 1: return Tnu * inv * (inv + LT);
        default: return Tnu * inv * (LT * LT + Real(2.0, prec) * inv * LT + Real(2.0, prec) * inv * inv);
    }
}

// Li_sigma(x e^-t) by direct series; t >= 1/2 so a few hundred terms suffice.
Cplx li_series(double sigma, Root4 x, const Real& t, mpfr_prec_t prec) {
    const long N = static_cast<long>((0.6932 * static_cast<double>(prec) + 30.0) / t.to_double()) + 4;
    Real q = exp(-t);
    Real qn(1.0, prec);
    Cplx acc(prec);
    for (long n = 1; n <= N; ++n) {
        qn *= q;
        Real term = qn * pow(Real(n, prec), Real(-sigma, prec));
        switch ((x.e * n) % 4) {
            case 0: acc.re += term; break;
            case 1: acc.im += term; break;
            case 2: acc.re -= term; break;
            default: acc.im -= term; break;
        }
    }
    return acc;
}

} // namespace

Cplx tornheim_phase_impl(double a, double b, double c, Root4 u, Root4 v, mpfr_prec_t prec,
                         Real* trunc_out) {
    if (c < 1.0) throw DomainError("tornheim_phase: need c >= 1");
    const Real one(1.0, prec);
    const Real T0(0.5, prec);
    const Real cr(c, prec);

    // analytic zone [0, 1/2]: termwise product of the two expansions
    const Expansion& ea = cached_expansion(a, u, prec);
    const Expansion& eb = cached_expansion(b, v, prec);
    Cplx zone0(prec);
    for (const auto& ma : ea.monos) {
        for (const auto& mb : eb.monos) {
            Real nu = cr + ma.mu + mb.mu;  // integrand exponent + 1
            Cplx coef = ma.coef * mb.coef;
            zone0 += coef * mono_integral(T0, nu, ma.logpow + mb.logpow, prec);
        }
    }

    // Gauss-Legendre zone: [1/2, 1] then unit panels until negligible
    const GaussRule& rule = gauss_legendre(48, prec);
    Cplx zoneq(prec);
    Real lo = T0, hi = one;
    const Real eps = pow_si(Real(2.0, prec), -(prec + 16));
    for (int panel = 0; panel < 300; ++panel) {
        Real half = (hi - lo) * Real(0.5, prec);
        Real mid = (hi + lo) * Real(0.5, prec);
        Cplx psum(prec);
        for (size_t i = 0; i < rule.nodes.size(); ++i) {
            Real t = mid + half * rule.nodes[i];
            Cplx f = li_series(a, u, t, prec) * li_series(b, v, t, prec);
            Real w = rule.weights[i] * pow(t, cr - one);
            psum += f * w;
        }
        psum = psum * half;
        zoneq += psum;
        Real scale = zoneq.abs() + zone0.abs() + one;
        if (psum.abs() < scale * eps && panel > 2) break;
        lo = hi;
        hi = lo + one;
    }

    Cplx total = zone0 + zoneq;
    Real g = gamma(cr);
    total = total * (one / g);
    if (trunc_out) *trunc_out = (ea.trunc_estimate * eb.trunc_estimate + eps) * Real(8.0, prec) / g;
    return total;
}

Cplx tornheim_phase(double a, double b, double c, Root4 u, Root4 v, mpfr_prec_t prec) {
    return tornheim_phase_impl(a, b, c, u, v, prec, nullptr);
}

} // namespace latzeta
