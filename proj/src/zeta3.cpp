// Lattice triple-sum engine.
//
// One summation pass over the cutoff box accumulates 32 exact fixed-point
// partial sums keyed by (m1 mod 4, m2 mod 2, m3 mod 4).  Every twist phase
// and every sublattice membership predicate is a function of those residues,
// so a single pass serves all twelve (twist, lattice) combinations of one
// exponent tuple.  Terms are 126-bit fixed point; accumulation is exact
// integer arithmetic, hence associative and bit-reproducible for any thread
// count.

#include <cstring>
#include <map>
#include <mutex>
#include <thread>
#include <vector>

#include "latzeta/errors.hpp"
#include "latzeta/series.hpp"

namespace latzeta {

namespace {

using u128 = unsigned __int128;

constexpr int kFracBits = 126;

struct U256 {
    u128 lo = 0, hi = 0;
    void add(u128 t) {
        lo += t;
        hi += (lo < t);
    }
    void merge(const U256& o) {
        lo += o.lo;
        hi += (lo < o.lo);
        hi += o.hi;
    }
};

// top bits of the 256-bit product: (a*b) >> kFracBits
inline u128 mulfix(u128 a, u128 b) {
    const u128 mask = (u128(1) << 64) - 1;
    u128 a0 = a & mask, a1 = a >> 64;
    u128 b0 = b & mask, b1 = b >> 64;
    u128 lo = a0 * b0;
    u128 m1 = a1 * b0;
    u128 m2 = a0 * b1;
    u128 hi = a1 * b1;
    u128 mid = m1 + m2;
    u128 carry = (mid < m1) ? (u128(1) << 64) : 0;
    u128 sum_lo = lo + (mid << 64);
    u128 c2 = (sum_lo < lo);
    u128 sum_hi = hi + (mid >> 64) + carry + c2;
    return (sum_hi << (128 - kFracBits)) | (sum_lo >> kFracBits);
}

u128 to_fixed(const Real& x) {
    Real scaled(200);
    mpfr_mul_2si(scaled.raw(), x.raw(), kFracBits, MPFR_RNDN);
    Integer z;
    mpfr_get_z(z.get_mpz_t(), scaled.raw(), MPFR_RNDN);
    u128 r = 0;
    size_t count = 0;
    uint64_t limbs[2] = {0, 0};
    mpz_export(limbs, &count, -1, 8, 0, 0, z.get_mpz_t());
    r = (u128(limbs[1]) << 64) | limbs[0];
    return r;
}

std::vector<u128> build_table(double s, long maxm) {
    std::vector<u128> tab(static_cast<size_t>(maxm) + 1, 0);
    const mpfr_prec_t tp = 160;
    for (long m = 1; m <= maxm; ++m)
        tab[static_cast<size_t>(m)] = to_fixed(pow(Real(m, tp), Real(-s, tp)));
    return tab;
}

Real u256_to_real(const U256& v, mpfr_prec_t prec) {
    Real r(std::max<mpfr_prec_t>(prec, 280));
    mpfr_set_uj(r.raw(), static_cast<uintmax_t>(v.hi >> 64), MPFR_RNDN);
    Real part(64);
    auto add_limb = [&](uint64_t limb) {
        mpfr_mul_2si(r.raw(), r.raw(), 64, MPFR_RNDN);
        mpfr_set_uj(part.raw(), limb, MPFR_RNDN);
        mpfr_add(r.raw(), r.raw(), part.raw(), MPFR_RNDN);
    };
    add_limb(static_cast<uint64_t>(v.hi));
    add_limb(static_cast<uint64_t>(v.lo >> 64));
    add_limb(static_cast<uint64_t>(v.lo));
    mpfr_mul_2si(r.raw(), r.raw(), -kFracBits, MPFR_RNDN);
    return r;
}

struct PassResult {
    std::array<U256, 32> acc{};
};

struct PassKey {
    std::array<double, 6> e;
    long cutoff;
    bool operator<(const PassKey& o) const {
        if (cutoff != o.cutoff) return cutoff < o.cutoff;
        return e < o.e;
    }
};

std::mutex pass_mu;
std::map<PassKey, PassResult> pass_cache;

void run_slice(long N, long m1_lo, long m1_hi,
               const std::vector<u128>& t1, const std::vector<u128>& t2,
               const std::vector<u128>& t3, const std::vector<u128>& t4,
               const std::vector<u128>& t5, const std::vector<u128>& t6, PassResult* out) {
    for (long m1 = m1_lo; m1 < m1_hi; ++m1) {
        const u128 f1 = t1[static_cast<size_t>(m1)];
        if (f1 == 0) continue;
        const int i1 = static_cast<int>(m1 & 3) << 3;
        for (long m2 = 1; m2 <= N; ++m2) {
            u128 b = mulfix(f1, t2[static_cast<size_t>(m2)]);
            if (b == 0) continue;
            b = mulfix(b, t4[static_cast<size_t>(m1 + m2)]);
            if (b == 0) continue;
            const int i12 = i1 | (static_cast<int>(m2 & 1) << 2);
            const u128* row5 = t5.data() + m2;
            const u128* row6 = t6.data() + m1 + m2;
            for (long m3 = 1; m3 <= N; ++m3) {
                u128 t = mulfix(mulfix(b, t3[static_cast<size_t>(m3)]),
                                mulfix(row5[m3], row6[m3]));
                if (t == 0) {
                    // all later m3 terms in this row are at least as small in
                    // each factor only when exponents are positive; factors are
                    // monotone decreasing in m3, so the rest of the row is zero
                    break;
                }
                out->acc[static_cast<size_t>(i12 | (m3 & 3))].add(t);
            }
        }
    }
}

const PassResult& bucket_pass(const std::array<double, 6>& ex, long N) {
    PassKey key{ex, N};
    {
        std::lock_guard<std::mutex> lock(pass_mu);
        auto it = pass_cache.find(key);
        if (it != pass_cache.end()) return it->second;
    }

    std::vector<u128> t1 = build_table(ex[0], N);
    std::vector<u128> t2 = build_table(ex[1], N);
    std::vector<u128> t3 = build_table(ex[2], N);
    std::vector<u128> t4 = build_table(ex[3], 2 * N);
    std::vector<u128> t5 = build_table(ex[4], 2 * N);
    std::vector<u128> t6 = build_table(ex[5], 3 * N);

    unsigned nthreads = std::max(1u, std::thread::hardware_concurrency());
    nthreads = std::min<unsigned>(nthreads, 16);
    PassResult total;
    if (nthreads <= 1 || N < 64) {
        run_slice(N, 1, N + 1, t1, t2, t3, t4, t5, t6, &total);
    } else {
        std::vector<PassResult> parts(nthreads);
        std::vector<std::thread> pool;
        long chunk = (N + static_cast<long>(nthreads) - 1) / static_cast<long>(nthreads);
        for (unsigned i = 0; i < nthreads; ++i) {
            long lo = 1 + static_cast<long>(i) * chunk;
            long hi = std::min<long>(N + 1, lo + chunk);
            if (lo >= hi) break;
            pool.emplace_back(run_slice, N, lo, hi, std::cref(t1), std::cref(t2),
                              std::cref(t3), std::cref(t4), std::cref(t5), std::cref(t6),
                              &parts[i]);
        }
        for (auto& th : pool) th.join();
        for (const auto& part : parts)
            for (size_t i = 0; i < 32; ++i) total.acc[i].merge(part.acc[i]);
    }

    std::lock_guard<std::mutex> lock(pass_mu);
    auto [it, inserted] = pass_cache.emplace(key, total);
    return it->second;
}

// majorant tail bound: replace all phases by 1, split the cross factors by
// AM-GM, and bound each axis tail by integral comparison
Real zeta3_tail_bound(const std::array<double, 6>& s, long N, mpfr_prec_t prec) {
    const double e1 = s[0] + s[3] / 2 + s[5] / 3;
    const double e2 = s[1] + s[3] / 2 + s[4] / 2 + s[5] / 3;
    const double e3 = s[2] + s[4] / 2 + s[5] / 3;
    auto ztail = [&](double e) {
        return pow(Real(static_cast<double>(N), prec), Real(1.0 - e, prec)) / Real(e - 1.0, prec);
    };
    auto zfull = [&](double e) { return Real(e / (e - 1.0), prec); };
    Real t1 = ztail(e1) * zfull(e2) * zfull(e3);
    Real t2 = zfull(e1) * ztail(e2) * zfull(e3);
    Real t3 = zfull(e1) * zfull(e2) * ztail(e3);
    return t1 + t2 + t3;
}

} // namespace

bool zeta3_guard_ok(const std::array<double, 6>& e) {
    for (double v : e)
        if (!(v >= 1.0)) return false;
    double total = 0;
    for (double v : e) total += v;
    return e[0] + e[3] + e[5] > 3.0 && e[2] + e[4] + e[5] > 3.0 &&
           e[1] + e[3] + e[4] + e[5] > 3.0 && total > 6.0;
}

void clear_zeta3_cache() {
    std::lock_guard<std::mutex> lock(pass_mu);
    pass_cache.clear();
}

NumericValue eval_zeta3(const LatticeSeriesSpec& spec, const Precision& prec) {
    prec.validate();
    if (!zeta3_guard_ok(spec.exponents))
        throw ConvergenceError("eval_zeta3: absolute-convergence guard violated");
    const long N = prec.cutoff;
    const mpfr_prec_t outp = prec.bits();

    if (prec.significand_bits > kFracBits + 2) {
        // generic path above the fixed-point engine width: direct summation
        // in MPFR; considerably slower, intended for spot checks
        const mpfr_prec_t wp = prec.work_bits();
        auto tab = [&](double s, long maxm) {
            std::vector<Real> t;
            t.reserve(static_cast<size_t>(maxm) + 1);
            t.emplace_back(wp);
            for (long m = 1; m <= maxm; ++m) t.push_back(pow(Real(m, wp), Real(-s, wp)));
            return t;
        };
        auto t1 = tab(spec.exponents[0], N), t2 = tab(spec.exponents[1], N),
             t3 = tab(spec.exponents[2], N), t4 = tab(spec.exponents[3], 2 * N),
             t5 = tab(spec.exponents[4], 2 * N), t6 = tab(spec.exponents[5], 3 * N);
        std::array<Real, 4> comp{Real(wp), Real(wp), Real(wp), Real(wp)};
        for (long m1 = 1; m1 <= N; ++m1)
            for (long m2 = 1; m2 <= N; ++m2) {
                Real b = t1[m1] * t2[m2] * t4[m1 + m2];
                for (long m3 = 1; m3 <= N; ++m3) {
                    if (!lattice_member(spec.lattice, m1, m2, m3)) continue;
                    comp[twist_exponent(spec.twist, m1, m2, m3)] +=
                        b * t3[m3] * t5[m2 + m3] * t6[m1 + m2 + m3];
                }
            }
        NumericValue out(outp);
        out.value.re = round_to(comp[0] - comp[2], outp);
        out.value.im = round_to(comp[1] - comp[3], outp);
        out.tail_bound = zeta3_tail_bound(spec.exponents, N, 64);
        out.rounding_slack = Real(static_cast<double>(N), 64) * Real(static_cast<double>(N), 64) *
                             Real(static_cast<double>(N), 64) * Real(16.0, 64) *
                             pow_si(Real(2.0, 64), -static_cast<long>(wp));
        return out;
    }

    const PassResult& pass = bucket_pass(spec.exponents, N);

    // combine buckets: phase i^e and membership are functions of the residues
    std::array<U256, 4> comp{};
    for (int r1 = 0; r1 < 4; ++r1) {
        for (int r2 = 0; r2 < 2; ++r2) {
            for (int r3 = 0; r3 < 4; ++r3) {
                if (!lattice_member(spec.lattice, r1, r2, r3)) continue;
                int e = twist_exponent(spec.twist, r1, r2, r3);
                comp[static_cast<size_t>(e)].merge(
                    pass.acc[static_cast<size_t>((r1 << 3) | (r2 << 2) | r3)]);
            }
        }
    }

    NumericValue out(outp);
    Real re = u256_to_real(comp[0], outp) - u256_to_real(comp[2], outp);
    Real im = u256_to_real(comp[1], outp) - u256_to_real(comp[3], outp);
    out.value.re = round_to(re, outp);
    out.value.im = round_to(im, outp);
    out.tail_bound = zeta3_tail_bound(spec.exponents, N, 64);
    // 3 fixed multiplies and 6 table roundings per point, 1 ulp each
    Real pts = Real(static_cast<double>(N), 64) * Real(static_cast<double>(N), 64) *
               Real(static_cast<double>(N), 64);
    out.rounding_slack = pts * Real(9.0, 64) * pow_si(Real(2.0, 64), -kFracBits);
    return out;
}

} // namespace latzeta
