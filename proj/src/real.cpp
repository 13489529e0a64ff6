#include "latzeta/real.hpp"

#include <vector>

namespace latzeta {

std::string Real::to_string(int digits) const {
    if (digits <= 0)
        digits = static_cast<int>(static_cast<double>(prec()) * 0.30103) + 3;
    std::vector<char> buf(static_cast<size_t>(digits) + 32);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digits, v_);
    return std::string(buf.data());
}

Real abs(const Real& x) {
    Real r(x.prec());
    mpfr_abs(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

Real sqrt(const Real& x) {
    Real r(x.prec());
    mpfr_sqrt(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

Real exp(const Real& x) {
    Real r(x.prec());
    mpfr_exp(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

Real log(const Real& x) {
    Real r(x.prec());
    mpfr_log(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

Real sin(const Real& x) {
    Real r(x.prec());
    mpfr_sin(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

Real cos(const Real& x) {
    Real r(x.prec());
    mpfr_cos(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

Real gamma(const Real& x) {
    Real r(x.prec());
    mpfr_gamma(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

Real pow(const Real& base, const Real& expo) {
    Real r(std::max(base.prec(), expo.prec()));
    mpfr_pow(r.raw(), base.raw(), expo.raw(), MPFR_RNDN);
    return r;
}

Real pow_si(const Real& base, long e) {
    Real r(base.prec());
    mpfr_pow_si(r.raw(), base.raw(), e, MPFR_RNDN);
    return r;
}

Real gamma_inc(const Real& a, const Real& x) {
    Real r(std::max(a.prec(), x.prec()));
    mpfr_gamma_inc(r.raw(), a.raw(), x.raw(), MPFR_RNDN);
    return r;
}

void Cplx::rotate_i(int e) {
    switch (((e % 4) + 4) % 4) {
        case 0: return;
        case 1: {
            Real t = re;
            re = -im;
            im = t;
            return;
        }
        case 2:
            re = -re;
            im = -im;
            return;
        default: {
            Real t = re;
            re = im;
            im = -t;
            return;
        }
    }
}

Cplx gaussian_to_cplx(const Gaussian& g, mpfr_prec_t prec) {
    return Cplx(Real(g.re, prec), Real(g.im, prec));
}

} // namespace latzeta
