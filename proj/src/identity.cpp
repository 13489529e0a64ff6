// Residual checker for the Fourier / Bernoulli / double-polylog / master
// identities.  Left-hand sides are summed directly (symmetric partial sums,
// window-averaged to damp phase oscillation); right-hand sides reuse the
// series evaluators.  Residual tolerances here are 1e-6-scale, so the direct
// sums run in extended double.

#include <cmath>
#include <complex>
#include <map>
#include <thread>
#include <vector>

#include "latzeta/bernoulli.hpp"
#include "latzeta/errors.hpp"
#include "latzeta/series.hpp"

namespace latzeta {

namespace {

using C = std::complex<long double>;

constexpr long double kLongPi = 3.141592653589793238462643383279502884L;

constexpr int kWindow = 8;

long double phi_even_num(int n) {
    if (n == 0) return -0.5L;
    return static_cast<long double>(
        (std::pow(2.0, 1 - n) - 1.0) * riemann_zeta(static_cast<double>(n), 80).to_double());
}

// 2 sum_{j<=p} phi(p-j) eps_{p-j} (i theta)^j / j!
C pfrac_rhs(int p, long double theta) {
    C acc = 0;
    C it(0.0L, theta);
    C pw = 1;
    long double fact = 1;
    for (int j = 0; j <= p; ++j) {
        if (j > 0) {
            pw *= it;
            fact *= j;
        }
        if ((p - j) % 2 == 0) acc += phi_even_num(p - j) * pw / fact;
    }
    return 2.0L * acc;
}

// symmetric partial sums of sum_{l != 0} (-1)^l e^{i l theta} / l^p,
// window-averaged over the last kWindow values
C pfrac_lhs(int p, long double theta, long L) {
    C acc = 0;
    C avg = 0;
    for (long l = 1; l <= L + kWindow; ++l) {
        long double mag = std::pow(static_cast<long double>(l), static_cast<long double>(-p));
        C ph = std::polar(1.0L, l * theta);
        long double sg = (l % 2 == 0) ? 1.0L : -1.0L;
        C pair = sg * (ph * mag + std::conj(ph) * mag * ((p % 2 == 0) ? 1.0L : -1.0L));
        acc += pair;
        if (l > L) avg += acc;
    }
    return avg / static_cast<long double>(kWindow);
}

double residual_fourier_pfrac(const IdentityParams& par, double theta, const Precision& prec) {
    long L = 10 * prec.cutoff;
    C lhs = pfrac_lhs(par.p, theta, L);
    C rhs = pfrac_rhs(par.p, theta);
    return static_cast<double>(std::abs(lhs - rhs));
}

double residual_bernoulli_fourier(const IdentityParams& par, const Precision& prec) {
    const int j = par.j;
    if (j < 1) throw DomainError("check_identity: bernoulli_fourier needs j >= 1");
    const long double alpha = static_cast<long double>(par.alpha.get_d());
    long L = 40 * prec.cutoff;
    C acc = 0, avg = 0;
    for (long k = 1; k <= L + kWindow; ++k) {
        long double mag = std::pow(static_cast<long double>(k), static_cast<long double>(-j));
        C ph = std::polar(1.0L, 2.0L * static_cast<long double>(kLongPi) * k * alpha);
        acc += ph * mag + std::conj(ph) * mag * ((j % 2 == 0) ? 1.0L : -1.0L);
        if (k > L) avg += acc;
    }
    avg /= kWindow;
    // -B_j(alpha) (2 pi i)^j / j!
    Rational bj = bernoulli_poly(j, par.alpha);
    C tp(0.0L, 2.0L * static_cast<long double>(kLongPi));
    C pw = 1;
    long double fact = 1;
    for (int i = 1; i <= j; ++i) {
        pw *= tp;
        fact *= i;
    }
    C rhs = -static_cast<long double>(bj.get_d()) * pw / fact;
    return static_cast<double>(std::abs(avg - rhs));
}

// Lemma double-polylog relation: three groups summing to zero
double residual_double_relation(const IdentityParams& par, double theta, const Precision& prec) {
    const int p = par.p, q = par.q;
    const double s = par.s;
    if (p < 1 || q < 1 || !(s > 1.0)) throw DomainError("check_identity: bad double_relation params");
    const long double th = static_cast<long double>(theta);
    const long M = 4 * prec.cutoff;
    const long L = 10 * prec.cutoff;

    std::vector<long double> ms(static_cast<size_t>(M) + 1);
    for (long m = 1; m <= M; ++m)
        ms[static_cast<size_t>(m)] = std::pow(static_cast<long double>(m), static_cast<long double>(-s));
    const long lim = std::max(L + kWindow + M + 2, M + 2);
    std::vector<long double> powq(static_cast<size_t>(lim) + 1, 0.0L);
    for (long v = 1; v <= lim; ++v)
        powq[static_cast<size_t>(v)] = std::pow(static_cast<long double>(v), static_cast<long double>(-q));

    std::vector<C> eim(static_cast<size_t>(M) + 1);
    const C eit = std::polar(1.0L, th);
    C run = 1;
    std::vector<C> xpow(4);
    for (int e = 0; e < 4; ++e)
        xpow[static_cast<size_t>(e)] = C(e == 0 ? 1 : (e == 2 ? -1 : 0), e == 1 ? 1 : (e == 3 ? -1 : 0));
    for (long m = 1; m <= M; ++m) {
        run *= eit;
        eim[static_cast<size_t>(m)] = run;
    }

    // group 1: two-sided l sum against the m series, window-averaged in l
    C acc = 0, avg = 0;
    C eil = 1;
    for (long l = 1; l <= L + kWindow; ++l) {
        eil *= eit;
        long double lp = std::pow(static_cast<long double>(l), static_cast<long double>(-p));
        long double sgl = (l % 2 == 0) ? 1.0L : -1.0L;
        C inner = 0;
        for (long m = 1; m <= M; ++m) {
            long double sgm = (m % 2 == 0) ? 1.0L : -1.0L;
            C xm = xpow[static_cast<size_t>((par.x.e * m) % 4)] * ms[static_cast<size_t>(m)] * sgm;
            // l positive
            inner += sgl * xm * eil * eim[static_cast<size_t>(m)] * lp * powq[static_cast<size_t>(l + m)];
            // l negative: l -> -l, skip l + m = 0
            if (m != l) {
                long d = m - l;
                long double dq = powq[static_cast<size_t>(std::abs(d))];
                if (d < 0 && q % 2 == 1) dq = -dq;
                long double lpn = (p % 2 == 0) ? lp : -lp;
                inner += sgl * xm * std::conj(eil) * eim[static_cast<size_t>(m)] * lpn * dq;
            }
        }
        acc += inner;
        if (l > L) avg += acc;
    }
    C group1 = avg / static_cast<long double>(kWindow);

    // groups 2 and 3: finite (j, xi) combinations of one-dimensional m series
    const long M2 = 16 * prec.cutoff;
    auto binom_ld = [](long n, long k) {
        return static_cast<long double>(binomial(n, k).get_d());
    };

    C it(0.0L, th);
    C group2 = 0;
    for (int j = 0; j <= p; ++j) {
        if ((p - j) % 2 != 0) continue;
        long double pe = phi_even_num(p - j);
        C pwxi = 1;
        long double fact = 1;
        for (int xi = 0; xi <= j; ++xi) {
            if (xi > 0) {
                pwxi *= it;
                fact *= xi;
            }
            long double cf = binom_ld(q - 1 + j - xi, q - 1) * (((j - xi) % 2 == 0) ? 1.0L : -1.0L);
            // sum_m (-1)^m x^m e^{im theta} / m^{s+q+j-xi}
            C ser = 0;
            C run2 = 1;
            for (long m = 1; m <= M2; ++m) {
                run2 *= eit;
                long double sgm = (m % 2 == 0) ? 1.0L : -1.0L;
                ser += sgm * xpow[static_cast<size_t>((par.x.e * m) % 4)] * run2 *
                       std::pow(static_cast<long double>(m),
                                static_cast<long double>(-(s + q + j - xi)));
            }
            group2 += pe * cf * ser * pwxi / fact;
        }
    }
    group2 *= 2.0L;

    C group3 = 0;
    for (int j = 0; j <= q; ++j) {
        if ((q - j) % 2 != 0) continue;
        long double pe = phi_even_num(q - j);
        C pwxi = 1;
        long double fact = 1;
        for (int xi = 0; xi <= j; ++xi) {
            if (xi > 0) {
                pwxi *= it;
                fact *= xi;
            }
            long double cf = binom_ld(p - 1 + j - xi, p - 1) * ((p % 2 == 1) ? 1.0L : -1.0L);
            C ser = 0;
            for (long m = 1; m <= M2; ++m)
                ser += xpow[static_cast<size_t>((par.x.e * m) % 4)] *
                       std::pow(static_cast<long double>(m),
                                static_cast<long double>(-(s + p + j - xi)));
            group3 += pe * cf * ser * pwxi / fact;
        }
    }
    group3 *= 2.0L;

    return static_cast<double>(std::abs(group1 - group2 + group3));
}

// master identity left-hand side: triple sum with two-sided l and m
C master_lhs(const IdentityParams& par, int tq, long N, int nthreads) {
    const int p = par.p, q = par.q, a = par.a, b = par.b, c = par.c;
    const double s = par.s;
    auto itab = [&](int e, long maxv) {
        std::vector<long double> t(static_cast<size_t>(maxv) + 1, 0.0L);
        for (long v = 1; v <= maxv; ++v)
            t[static_cast<size_t>(v)] = std::pow(static_cast<long double>(v), static_cast<long double>(-e));
        return t;
    };
    std::vector<long double> tp = itab(p, N), tq_ = itab(q, N), ta = itab(a, 2 * N),
                             tb = itab(b, 2 * N), tc = itab(c, 3 * N);
    std::vector<long double> ts(static_cast<size_t>(N) + 1, 0.0L);
    for (long v = 1; v <= N; ++v)
        ts[static_cast<size_t>(v)] = std::pow(static_cast<long double>(v), static_cast<long double>(-s));

    auto slice = [&](long l_lo, long l_hi, std::array<long double, 4>* out) {
        std::array<long double, 4> acc{0.0L, 0.0L, 0.0L, 0.0L};
        for (long labs = l_lo; labs < l_hi; ++labs) {
            for (int lsgn = 0; lsgn < 2; ++lsgn) {
                const long l = lsgn ? -labs : labs;
                for (long mabs = 1; mabs <= N; ++mabs) {
                    for (int msgn = 0; msgn < 2; ++msgn) {
                        const long m = msgn ? -mabs : mabs;
                        const long lm = l + m;
                        if (lm == 0) continue;
                        long double w2 = tp[static_cast<size_t>(labs)] *
                                         tq_[static_cast<size_t>(mabs)] *
                                         ta[static_cast<size_t>(std::abs(lm))];
                        int sgn = 0;
                        if (l < 0) sgn += p;
                        if (m < 0) sgn += q;
                        if (lm < 0) sgn += a;
                        int phase0 = (2 * (int)((lm % 4 + 4) % 4) + par.x.e * (int)((m % 4 + 4) % 4) +
                                      tq * (int)((lm % 4 + 4) % 4)) % 4;
                        for (long n = 1; n <= N; ++n) {
                            const long mn = m + n;
                            if (mn == 0) continue;
                            const long lmn = lm + n;
                            if (lmn == 0) continue;
                            long double t = w2 * ts[static_cast<size_t>(n)] *
                                            tb[static_cast<size_t>(std::abs(mn))] *
                                            tc[static_cast<size_t>(std::abs(lmn))];
                            int sg = sgn;
                            if (mn < 0) sg += b;
                            if (lmn < 0) sg += c;
                            int ph = (phase0 + par.y.e * (int)(n % 4)) % 4;
                            if (sg % 2) ph = (ph + 2) % 4;
                            acc[static_cast<size_t>(ph)] += t;
                        }
                    }
                }
            }
        }
        *out = acc;
    };

    std::array<long double, 4> total{0.0L, 0.0L, 0.0L, 0.0L};
    if (nthreads <= 1) {
        slice(1, N + 1, &total);
    } else {
        std::vector<std::array<long double, 4>> parts(static_cast<size_t>(nthreads));
        std::vector<std::thread> pool;
        long chunk = (N + nthreads - 1) / nthreads;
        for (int i = 0; i < nthreads; ++i) {
            long lo = 1 + i * chunk, hi = std::min<long>(N + 1, lo + chunk);
            if (lo >= hi) break;
            pool.emplace_back(slice, lo, hi, &parts[static_cast<size_t>(i)]);
        }
        for (auto& th : pool) th.join();
        for (const auto& part : parts)
            for (int e = 0; e < 4; ++e) total[static_cast<size_t>(e)] += part[static_cast<size_t>(e)];
    }
    return C(total[0] - total[2], total[1] - total[3]);
}

C master_rhs(const IdentityParams& par, int tq, const Precision& prec) {
    const int p = par.p, q = par.q, a = par.a, b = par.b, c = par.c;
    const double s = par.s;
    const long double th = static_cast<long double>(tq) * static_cast<long double>(kLongPi) / 2.0L;
    std::map<std::tuple<long, double, long, int, int>, C> frakt_memo;
    auto frakt = [&](long P, double S, long Q, Root4 X, Root4 Y) {
        auto key = std::make_tuple(P, S, Q, X.e, Y.e);
        auto it = frakt_memo.find(key);
        if (it != frakt_memo.end()) return it->second;
        NumericValue v = eval_frakt(P, S, Q, X, Y, prec);
        C r(static_cast<long double>(v.value.re.to_double()),
            static_cast<long double>(v.value.im.to_double()));
        frakt_memo.emplace(key, r);
        return r;
    };
    auto binom_ld = [](long n, long k) { return static_cast<long double>(binomial(n, k).get_d()); };
    const C it(0.0L, th);

    C g1 = 0, g2 = 0, g3 = 0, g4 = 0;
    for (int k = 0; k <= p; ++k) {
        if ((p - k) % 2 != 0) continue;
        long double pe = phi_even_num(p - k);
        C pwxi = 1;
        long double fact = 1;
        for (int xi = 0; xi <= k; ++xi) {
            if (xi > 0) {
                pwxi *= it;
                fact *= xi;
            }
            for (int om = 0; om <= k - xi; ++om) {
                long double co = binom_ld(om + a - 1, om) * binom_ld(k - xi - om + c - 1, k - xi - om);
                if ((om % 2) != 0) co = -co;
                if (((k - xi - om) % 2) != 0) co = -co;
                C T = frakt(q + a + om, s, b + c + k - xi - om, Root4(2 + par.x.e + tq), par.y);
                g1 += pe * co * T * pwxi / fact;
            }
        }
    }
    g1 *= 2.0L;

    for (int k = 0; k <= c; ++k) {
        if ((c - k) % 2 != 0) continue;
        long double pe = phi_even_num(c - k);
        C pwxi = 1;
        long double fact = 1;
        for (int xi = 0; xi <= k; ++xi) {
            if (xi > 0) {
                pwxi *= it;
                fact *= xi;
            }
            for (int om = 0; om <= k - xi; ++om) {
                long double co = binom_ld(om + a - 1, om) * binom_ld(k - xi - om + p - 1, p - 1);
                if ((om % 2) != 0) co = -co;
                if (((p - 1 + a + om) % 2) != 0) co = -co;
                C T = frakt(q, s + a + om, p + b + k - xi - om, par.x, Root4(2 + par.y.e - tq));
                g2 += pe * co * T * pwxi / fact;
            }
        }
    }
    g2 *= -2.0L;

    for (int k = 0; k <= a; ++k) {
        if ((a - k) % 2 != 0) continue;
        long double pe = phi_even_num(a - k);
        C pwxi = 1;
        long double fact = 1;
        for (int xi = 0; xi <= k; ++xi) {
            if (xi > 0) {
                pwxi *= it;
                fact *= xi;
            }
            for (int om = 0; om <= p - 1; ++om) {
                long double co = binom_ld(om + k - xi, om) * binom_ld(p + c - 2 - om, p - 1 - om);
                if ((om % 2) != 0) co = -co;
                if (((p - 1 - om) % 2) != 0) co = -co;
                C T = frakt(q + k - xi + om + 1, s, p + b + c - 1 - om, par.x, par.y);
                g3 += pe * co * T * pwxi / fact;
            }
        }
    }
    g3 *= -2.0L;

    for (int k = 0; k <= a; ++k) {
        if ((a - k) % 2 != 0) continue;
        long double pe = phi_even_num(a - k);
        C pwxi = 1;
        long double fact = 1;
        for (int xi = 0; xi <= k; ++xi) {
            if (xi > 0) {
                pwxi *= it;
                fact *= xi;
            }
            for (int om = 0; om <= c - 1; ++om) {
                long double co = binom_ld(om + k - xi, om) * binom_ld(p + c - 2 - om, p - 1);
                if ((om % 2) != 0) co = -co;
                if (((p + k - xi + om) % 2) != 0) co = -co;
                C T = frakt(q, s + k - xi + om + 1, p + b + c - 1 - om, par.x, par.y);
                g4 += pe * co * T * pwxi / fact;
            }
        }
    }
    g4 *= 2.0L;

    return g1 + g2 + g3 + g4;
}

double residual_master(const IdentityParams& par, double theta, const Precision& prec) {
    const double quarter = theta / (M_PI / 2.0);
    const int tq = static_cast<int>(std::lround(quarter));
    if (std::abs(theta - tq * (M_PI / 2.0)) > 1e-9)
        throw DomainError("check_identity: master theta must be a multiple of pi/2");
    int nthreads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    C lhs = master_lhs(par, ((tq % 4) + 4) % 4, prec.cutoff, std::min(nthreads, 16));
    C rhs = master_rhs(par, tq, prec);
    return static_cast<double>(std::abs(lhs - rhs));
}

} // namespace

double check_identity(IdentityId id, const IdentityParams& params, double theta,
                      const Precision& prec) {
    prec.validate();
    switch (id) {
        case IdentityId::FourierPfrac: return residual_fourier_pfrac(params, theta, prec);
        case IdentityId::BernoulliFourier: return residual_bernoulli_fourier(params, prec);
        case IdentityId::DoubleRelation: return residual_double_relation(params, theta, prec);
        case IdentityId::Master: return residual_master(params, theta, prec);
    }
    throw DomainError("check_identity: unknown identity id");
}

} // namespace latzeta
