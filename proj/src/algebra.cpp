#include "latzeta/algebra.hpp"

#include "latzeta/bernoulli.hpp"
#include "latzeta/closed_forms.hpp"
#include "latzeta/errors.hpp"

namespace latzeta {

ShiftedCombination phi_reduce(int shift) {
    SymbolicCoefficient c;
    c.add_term(0, 1, Gaussian(pow2(1 - shift)));
    c.add_term(0, 0, Gaussian(-1));
    return ShiftedCombination::single(Family::Zeta, shift, c);
}

ShiftedCombination phi_quarter_reduce(int shift, int sign) {
    ShiftedCombination r;
    SymbolicCoefficient z;
    z.add_term(0, 2, Gaussian(pow2(1 - 2 * shift)));
    z.add_term(0, 1, Gaussian(-pow2(-shift)));
    r.add_term(Family::Zeta, shift, z);
    r.add_term(Family::L4, shift,
               SymbolicCoefficient::constant(Gaussian(Rational(0), Rational(sign))));
    return r;
}

ConstantExpression lambda_value(long l, int sign) {
    if (l < 0) throw DomainError("lambda_value: need l >= 0");
    if (l % 2 == 0) {
        long k = l / 2;
        Rational factor = pow2(1 - l) * (pow2(1 - l) - 1);
        if (k == 0) return ConstantExpression::constant(Gaussian(factor * rational_of(-1, 2)));
        return zeta_even_closed(l) * Gaussian(factor);
    }
    Gaussian two_i(Rational(0), Rational(2 * sign));
    return l4_odd_closed(l) * two_i;
}

namespace {

// constants phi(2k) (rational * pi^{2k}) and zeta(2k) as symbolic coefficients
SymbolicCoefficient phi_even_coeff(long k2) {
    return SymbolicCoefficient::term(Gaussian(phi_even_rational(k2)), static_cast<int>(k2), 0);
}

SymbolicCoefficient zeta_even_coeff(long k2) {
    if (k2 == 0) return SymbolicCoefficient::constant(Gaussian(rational_of(-1, 2)));
    return SymbolicCoefficient::term(Gaussian(zeta_even_rational(k2)), static_cast<int>(k2), 0);
}

SymbolicCoefficient lambda_coeff(long l, int sign) {
    ConstantExpression e = lambda_value(l, sign);
    SymbolicCoefficient c;
    for (const auto& [m, g] : e.terms) c.add_term(m.pi_pow, 0, g);
    return c;
}

// the even-weight closed forms (phases +-1): weight w(2k) against zeta or
// phi at the shifted argument
enum class SeriesKind { ZetaArg, PhiArg, PhiPlusQuarter, PhiMinusQuarter };

ShiftedCombination series_factor(SeriesKind kind, int shift) {
    switch (kind) {
        case SeriesKind::ZetaArg:
            return ShiftedCombination::single(Family::Zeta, shift,
                                              SymbolicCoefficient::constant(Gaussian(1)));
        case SeriesKind::PhiArg: return phi_reduce(shift);
        case SeriesKind::PhiPlusQuarter: return phi_quarter_reduce(shift, +1);
        default: return phi_quarter_reduce(shift, -1);
    }
}

struct EvenForm {
    bool phi_weight;  // zeta(2k) or phi(2k) weights
    SeriesKind first;
    SeriesKind second;
};

struct LambdaForm {
    int sign;  // Lambda(l; sign i)
    SeriesKind first;
    SeriesKind second;
};

// T(p, s+a, q; x, y) for the parity pairs (x, y in {1,-1}):
//   2 (-1)^p sum_{k<=[p/2]} w(2k) C(p+q-1-2k, q-1) F1(s + a+p+q-2k)
// + 2 (-1)^p sum_{k<=[q/2]} w(2k) C(p+q-1-2k, p-1) F2(s + a+p+q-2k)
ShiftedCombination t_closed_even(const EvenForm& form, long p, int a, long q) {
    ShiftedCombination acc;
    const Gaussian sgn((p % 2 == 0) ? Rational(2) : Rational(-2));
    for (long k = 0; 2 * k <= p; ++k) {
        SymbolicCoefficient w = form.phi_weight ? phi_even_coeff(2 * k) : zeta_even_coeff(2 * k);
        Gaussian bin(Rational(binomial(p + q - 1 - 2 * k, q - 1)));
        int shift = a + static_cast<int>(p + q - 2 * k);
        acc += (series_factor(form.first, shift) * w) * (bin * sgn);
    }
    for (long k = 0; 2 * k <= q; ++k) {
        SymbolicCoefficient w = form.phi_weight ? phi_even_coeff(2 * k) : zeta_even_coeff(2 * k);
        Gaussian bin(Rational(binomial(p + q - 1 - 2 * k, p - 1)));
        int shift = a + static_cast<int>(p + q - 2 * k);
        acc += (series_factor(form.second, shift) * w) * (bin * sgn);
    }
    return acc;
}

// T(p, s+a, q; x, y) for the Lambda pairs:
//   (-1)^p sum_{l<=p} Lambda(l; sign i) (-1)^l C(p+q-1-l, q-1) F1(s + a+p+q-l)
// + (-1)^p sum_{l<=q} Lambda(l; sign i)        C(p+q-1-l, p-1) F2(s + a+p+q-l)
ShiftedCombination t_closed_lambda(const LambdaForm& form, long p, int a, long q) {
    ShiftedCombination acc;
    const Gaussian sgn((p % 2 == 0) ? Rational(1) : Rational(-1));
    for (long l = 0; l <= p; ++l) {
        SymbolicCoefficient w = lambda_coeff(l, form.sign);
        Gaussian bin(Rational(binomial(p + q - 1 - l, q - 1)));
        if (l % 2 == 1) bin = -bin;
        int shift = a + static_cast<int>(p + q - l);
        acc += (series_factor(form.first, shift) * w) * (bin * sgn);
    }
    for (long l = 0; l <= q; ++l) {
        SymbolicCoefficient w = lambda_coeff(l, form.sign);
        Gaussian bin(Rational(binomial(p + q - 1 - l, p - 1)));
        int shift = a + static_cast<int>(p + q - l);
        acc += (series_factor(form.second, shift) * w) * (bin * sgn);
    }
    return acc;
}

} // namespace

ShiftedCombination t_closed(long p, int s_shift, long q, Root4 x, Root4 y) {
    if (p < 1 || q < 1) throw DomainError("t_closed: need p, q >= 1");
    const int key = x.e * 4 + y.e;
    switch (key) {
        case 0 * 4 + 0:  // (1, 1)
            return t_closed_even({false, SeriesKind::ZetaArg, SeriesKind::ZetaArg}, p, s_shift, q);
        case 2 * 4 + 0:  // (-1, 1)
            return t_closed_even({true, SeriesKind::ZetaArg, SeriesKind::PhiArg}, p, s_shift, q);
        case 0 * 4 + 2:  // (1, -1)
            return t_closed_even({false, SeriesKind::PhiArg, SeriesKind::PhiArg}, p, s_shift, q);
        case 2 * 4 + 2:  // (-1, -1)
            return t_closed_even({true, SeriesKind::PhiArg, SeriesKind::ZetaArg}, p, s_shift, q);
        case 2 * 4 + 1:  // (-1, i)
            return t_closed_even({true, SeriesKind::PhiPlusQuarter, SeriesKind::PhiMinusQuarter}, p,
                                 s_shift, q);
        case 2 * 4 + 3:  // (-1, -i)
            return t_closed_even({true, SeriesKind::PhiMinusQuarter, SeriesKind::PhiPlusQuarter}, p,
                                 s_shift, q);
        case 3 * 4 + 2:  // (-i, -1)
            return t_closed_lambda({-1, SeriesKind::PhiArg, SeriesKind::PhiMinusQuarter}, p, s_shift, q);
        case 3 * 4 + 1:  // (-i, i)
            return t_closed_lambda({-1, SeriesKind::PhiPlusQuarter, SeriesKind::PhiArg}, p, s_shift, q);
        case 1 * 4 + 2:  // (i, -1)
            return t_closed_lambda({+1, SeriesKind::PhiArg, SeriesKind::PhiPlusQuarter}, p, s_shift, q);
        case 1 * 4 + 3:  // (i, -i)
            return t_closed_lambda({+1, SeriesKind::PhiMinusQuarter, SeriesKind::PhiArg}, p, s_shift, q);
        default:
            throw DomainError("t_closed: unsupported phase pair");
    }
}

ConstantExpression specialize(const ShiftedCombination& c, long s0) {
    if (s0 < 1) throw DomainError("specialize: need s0 >= 1");
    ConstantExpression out;
    const Rational u = pow2(-s0);
    for (const auto& [key, coeff] : c.terms) {
        const auto [family, shift] = key;
        const long arg = s0 + shift;

        ConstantExpression factor;
        if (family == Family::Zeta) {
            if (arg <= 1) throw SingularityError("specialize: zeta argument at or below 1");
            if (arg % 2 == 0) {
                factor = zeta_even_closed(arg);
            } else {
                ConstMonomial m;
                m.factors = {{Family::Zeta, static_cast<int>(arg)}};
                factor = ConstantExpression::monomial(Gaussian(1), m);
            }
        } else {
            if (arg < 1) throw SingularityError("specialize: L4 argument below 1");
            if (arg % 2 == 1) {
                factor = l4_odd_closed(arg);
            } else {
                ConstMonomial m;
                m.factors = {{Family::L4, static_cast<int>(arg)}};
                factor = ConstantExpression::monomial(Gaussian(1), m);
            }
        }

        ConstantExpression coeff_value;
        for (const auto& [piu, g] : coeff.terms) {
            ConstMonomial m;
            m.pi_pow = piu.first;
            coeff_value += ConstantExpression::monomial(g * pow_rational(u, piu.second), m);
        }
        out += coeff_value * factor;
    }
    return out.normalized();
}

NumericValue expr_eval_numeric(const ConstantExpression& e, const Precision& prec) {
    const mpfr_prec_t wp = prec.work_bits();
    const Real pi = Real::pi(wp);
    Cplx acc(wp);
    Real errs(wp);
    for (const auto& [m, g] : e.terms) {
        Cplx term = gaussian_to_cplx(g, wp);
        Real mag = term.abs();
        term = term * pow_si(pi, m.pi_pow);
        mag *= pow_si(pi, m.pi_pow);
        for (const auto& [fam, arg] : m.factors) {
            NumericValue v = (fam == Family::Zeta) ? eval_zeta(static_cast<double>(arg), prec)
                                                   : eval_L4(static_cast<double>(arg), prec);
            term = term * v.value.re;
            errs += mag * (v.tail_bound + v.rounding_slack);
            mag *= abs(v.value.re);
        }
        acc += term;
    }
    NumericValue out(prec.bits());
    out.value.re = round_to(acc.re, prec.bits());
    out.value.im = round_to(acc.im, prec.bits());
    out.tail_bound = round_to(errs, prec.bits());
    out.rounding_slack = pow_si(Real(2.0, prec.bits()), -prec.bits() - 16) *
                         (out.value.abs() + Real(1.0, prec.bits()));
    return out;
}

NumericValue expr_eval_numeric(const ShiftedCombination& c, double s0, const Precision& prec) {
    const mpfr_prec_t wp = prec.work_bits();
    const Real pi = Real::pi(wp);
    const Real u = pow(Real(2.0, wp), Real(-s0, wp));
    Cplx acc(wp);
    Real errs(wp);
    for (const auto& [key, coeff] : c.terms) {
        const auto [family, shift] = key;
        const double arg = s0 + shift;
        if (family == Family::Zeta && !(arg > 1.0))
            throw ConvergenceError("expr_eval_numeric: zeta argument not above 1");
        if (family == Family::L4 && !(arg > 0.0))
            throw ConvergenceError("expr_eval_numeric: L4 argument not above 0");
        NumericValue v = (family == Family::Zeta) ? eval_zeta(arg, prec) : eval_L4(arg, prec);
        Cplx cf(wp);
        for (const auto& [piu, g] : coeff.terms) {
            Cplx t = gaussian_to_cplx(g, wp);
            t = t * pow_si(pi, piu.first) * pow_si(u, piu.second);
            cf += t;
        }
        acc += cf * v.value.re;
        errs += cf.abs() * (v.tail_bound + v.rounding_slack);
    }
    NumericValue out(prec.bits());
    out.value.re = round_to(acc.re, prec.bits());
    out.value.im = round_to(acc.im, prec.bits());
    out.tail_bound = round_to(errs, prec.bits());
    out.rounding_slack = pow_si(Real(2.0, prec.bits()), -prec.bits() - 16) *
                         (out.value.abs() + Real(1.0, prec.bits()));
    return out;
}

} // namespace latzeta
