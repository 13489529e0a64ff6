#include "latzeta/relations.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "latzeta/closed_forms.hpp"
#include "latzeta/errors.hpp"

namespace latzeta {

const char* theorem_name(TheoremId t) {
    switch (t) {
        case TheoremId::A3: return "A3";
        case TheoremId::SU4_lam2: return "SU4_lam2";
        case TheoremId::SO6: return "SO6";
        case TheoremId::SU4_lam1: return "SU4_lam1";
        case TheoremId::SU4_lam3: return "SU4_lam3";
        default: return "PU4";
    }
}

TheoremId theorem_from_name(const std::string& s) {
    if (s == "A3") return TheoremId::A3;
    if (s == "SU4_lam2") return TheoremId::SU4_lam2;
    if (s == "SO6") return TheoremId::SO6;
    if (s == "SU4_lam1") return TheoremId::SU4_lam1;
    if (s == "SU4_lam3") return TheoremId::SU4_lam3;
    if (s == "PU4") return TheoremId::PU4;
    throw DomainError("unknown theorem: '" + s + "'");
}

TwistLabel theorem_twist(TheoremId t) {
    switch (t) {
        case TheoremId::SU4_lam1: return TwistLabel::Lam1;
        case TheoremId::SU4_lam2: return TwistLabel::Lam2;
        case TheoremId::SU4_lam3: return TwistLabel::Lam3;
        default: return TwistLabel::Zero;
    }
}

LatticeLabel theorem_lattice(TheoremId t) {
    switch (t) {
        case TheoremId::SO6: return LatticeLabel::L1;
        case TheoremId::PU4: return LatticeLabel::Q;
        default: return LatticeLabel::P;
    }
}

std::string tuple_to_string(const Tuple6& t) {
    std::ostringstream out;
    out << "(";
    for (int i = 0; i < 6; ++i) {
        if (i) out << ",";
        if (t[static_cast<size_t>(i)].sym) out << "s";
        else out << t[static_cast<size_t>(i)].v;
    }
    out << ")";
    return out.str();
}

std::vector<SignedTuple> lhs_terms(const RelationParams& par) {
    const Slot p = Slot::num(par.p), q = Slot::num(par.q), a = Slot::num(par.a),
               b = Slot::num(par.b), c = Slot::num(par.c), s = Slot::s();
    auto sign_of = [](long e) { return (e % 2 == 0) ? 1 : -1; };
    const long P = par.p, Q = par.q, A = par.a, B = par.b, C = par.c;
    return {
        {1, {p, q, s, a, b, c}},
        {sign_of(P), {p, a, s, q, c, b}},
        {sign_of(P + A), {q, a, c, p, s, b}},
        {sign_of(P + A + C), {q, s, c, b, a, p}},
        {sign_of(Q), {a, q, b, p, s, c}},
        {sign_of(Q + B), {a, s, b, c, q, p}},
        {sign_of(Q + A), {a, p, b, q, c, s}},
        {sign_of(Q + A + B), {a, c, b, s, p, q}},
        {sign_of(Q + A + B + C), {s, c, p, a, b, q}},
        {sign_of(P + Q + A), {q, p, c, a, b, s}},
        {sign_of(P + Q + A + C), {q, b, c, s, p, a}},
        {sign_of(P + Q + A + B + C), {s, b, p, q, c, a}},
    };
}

Tuple6 substitute(const Tuple6& t, long s0) {
    Tuple6 r = t;
    for (auto& slot : r)
        if (slot.sym) slot = Slot::num(s0);
    return r;
}

namespace {

Tuple6 canonical_rep(const Tuple6& t, bool symmetric_context) {
    if (!symmetric_context) return t;
    Tuple6 image = sigma_permute(t);
    return std::min(t, image);
}

std::vector<MergedTerm> to_sorted_terms(const std::map<Tuple6, long>& acc) {
    std::vector<MergedTerm> out;
    for (const auto& [t, c] : acc)
        if (c != 0) out.push_back({c, t});
    return out;
}

} // namespace

std::vector<MergedTerm> merge_terms(const std::vector<SignedTuple>& terms, bool symmetric_context) {
    std::map<Tuple6, long> acc;
    for (const auto& st : terms)
        acc[canonical_rep(st.slots, symmetric_context)] += st.sign;
    return to_sorted_terms(acc);
}

namespace {

// the four additive slot triples (A, B, A+B), 0-based
constexpr std::array<std::array<int, 3>, 4> kTriples{{{0, 1, 3}, {1, 2, 4}, {0, 4, 5}, {2, 3, 5}}};

bool outside_equal(const Tuple6& u, const Tuple6& v, const std::array<int, 3>& tr) {
    for (int i = 0; i < 6; ++i) {
        if (i == tr[0] || i == tr[1] || i == tr[2]) continue;
        if (!(u[static_cast<size_t>(i)] == v[static_cast<size_t>(i)])) return false;
    }
    return true;
}

// matches t1 = (x, y-1, z), t2 = (x, y, z-1) on the ordered pair of non-sum
// slots (i, j) and the sum slot k; returns the collapsed tuple
std::optional<Tuple6> match_rule(const Tuple6& t1, const Tuple6& t2, int i, int j, int k) {
    const Slot &x1 = t1[static_cast<size_t>(i)], &y1 = t1[static_cast<size_t>(j)],
               &z1 = t1[static_cast<size_t>(k)];
    const Slot &x2 = t2[static_cast<size_t>(i)], &y2 = t2[static_cast<size_t>(j)],
               &z2 = t2[static_cast<size_t>(k)];
    if (x1.sym || y1.sym || z1.sym || x2.sym || y2.sym || z2.sym) return std::nullopt;
    if (!(x1 == x2)) return std::nullopt;
    if (y2.v != y1.v + 1) return std::nullopt;
    if (z2.v != z1.v - 1) return std::nullopt;
    Tuple6 result = t1;
    result[static_cast<size_t>(i)] = Slot::num(x1.v - 1);
    result[static_cast<size_t>(j)] = y2;
    result[static_cast<size_t>(k)] = z1;
    return result;
}

} // namespace

std::vector<MergedTerm> stuffle_collapse(std::vector<MergedTerm> terms, bool symmetric_context,
                                         std::vector<StuffleStep>* steps) {
    bool changed = true;
    while (changed) {
        changed = false;
        // re-merge under the symmetry first
        std::map<Tuple6, long> acc;
        for (const auto& t : terms) acc[canonical_rep(t.slots, symmetric_context)] += t.coeff;
        terms = to_sorted_terms(acc);

        for (size_t i = 0; i < terms.size() && !changed; ++i) {
            for (size_t j = 0; j < terms.size() && !changed; ++j) {
                if (i == j) continue;
                if (terms[i].coeff <= 0 || terms[j].coeff >= 0) continue;
                const long kappa = std::min(terms[i].coeff, -terms[j].coeff);
                for (const auto& tr : kTriples) {
                    if (!outside_equal(terms[i].slots, terms[j].slots, tr)) continue;
                    // both orientations of the two non-sum slots
                    for (int orient = 0; orient < 2 && !changed; ++orient) {
                        int aslot = orient ? tr[1] : tr[0];
                        int bslot = orient ? tr[0] : tr[1];
                        auto res = match_rule(terms[i].slots, terms[j].slots, aslot, bslot, tr[2]);
                        if (!res) continue;
                        if (steps)
                            steps->push_back(
                                {tr, terms[i].slots, terms[j].slots, *res, kappa});
                        terms[i].coeff -= kappa;
                        terms[j].coeff += kappa;
                        terms.push_back({-kappa, *res});
                        changed = true;
                    }
                    if (changed) break;
                }
            }
        }
    }
    return terms;
}

namespace {

SymbolicCoefficient zeta_even_weight(long j2) {
    if (j2 == 0) return SymbolicCoefficient::constant(Gaussian(rational_of(-1, 2)));
    return SymbolicCoefficient::term(Gaussian(zeta_even_rational(j2)), static_cast<int>(j2), 0);
}

SymbolicCoefficient phi_even_weight(long j2) {
    return SymbolicCoefficient::term(Gaussian(phi_even_rational(j2)), static_cast<int>(j2), 0);
}

SymbolicCoefficient lambda_weight(long l, int sign) {
    ConstantExpression e = lambda_value(l, sign);
    SymbolicCoefficient c;
    for (const auto& [m, g] : e.terms) c.add_term(m.pi_pow, 0, g);
    return c;
}

struct PartSpec {
    bool lambda;                     // Lambda weights vs zeta/phi weights
    int lambda_sign;                 // Lambda(.; sign i)
    bool phi_weight;                 // phi(2j) (vs zeta(2j)) for even parts
    std::array<Root4, 4> x, y;       // phase pair per group
};

PartSpec part_spec(RhsPart part) {
    switch (part) {
        case RhsPart::J0:
            return {false, 0, false,
                    {Root4(0), Root4(0), Root4(0), Root4(0)},
                    {Root4(0), Root4(0), Root4(0), Root4(0)}};
        case RhsPart::J2:
            return {false, 0, true,
                    {Root4(0), Root4(2), Root4(2), Root4(2)},
                    {Root4(2), Root4(0), Root4(2), Root4(2)}};
        case RhsPart::J1:
            return {true, -1, false,
                    {Root4(2), Root4(3), Root4(3), Root4(3)},
                    {Root4(1), Root4(2), Root4(1), Root4(1)}};
        default:  // J3
            return {true, +1, false,
                    {Root4(2), Root4(1), Root4(1), Root4(1)},
                    {Root4(3), Root4(2), Root4(3), Root4(3)}};
    }
}

} // namespace

ShiftedCombination rhs_part(RhsPart part, const RelationParams& par) {
    if (par.p < 1 || par.q < 1 || par.a < 1 || par.b < 1 || par.c < 1)
        throw DomainError("rhs_part: parameters must be >= 1");
    const PartSpec spec = part_spec(part);
    const long p = par.p, q = par.q, a = par.a, b = par.b, c = par.c;

    auto weight = [&](long j) {
        if (spec.lambda) {
            SymbolicCoefficient w = lambda_weight(j, spec.lambda_sign);
            return w;
        }
        return spec.phi_weight ? phi_even_weight(2 * j) : zeta_even_weight(2 * j);
    };
    // outer summation bound and the per-j decrement of the T arguments
    auto jmax = [&](long v) { return spec.lambda ? v : v / 2; };
    auto jdec = [&](long j) { return spec.lambda ? j : 2 * j; };

    const Gaussian base_even(Rational(spec.lambda ? 1 : 2));
    const Gaussian sgn_p = base_even * Rational((p % 2 == 0) ? 1 : -1);
    const Gaussian sgn_pa = base_even * Rational(((p + a) % 2 == 0) ? 1 : -1);

    ShiftedCombination acc;

    // group 1
    for (long j = 0; j <= jmax(p); ++j) {
        SymbolicCoefficient w = weight(j);
        if (w.is_zero()) continue;
        Gaussian wsign = sgn_p;
        if (spec.lambda && j % 2 == 1) wsign = -wsign;
        const long d = jdec(j);
        for (long om = 0; om <= p - d; ++om) {
            Gaussian coeff = wsign * Rational(binomial(om + a - 1, om)) *
                             Rational(binomial(p + c - d - om - 1, c - 1));
            if (coeff.is_zero()) continue;
            ShiftedCombination t = t_closed(q + a + om, 0, p + b + c - d - om, spec.x[0], spec.y[0]);
            acc += (t * w) * coeff;
        }
    }
    // group 2
    for (long j = 0; j <= jmax(c); ++j) {
        SymbolicCoefficient w = weight(j);
        if (w.is_zero()) continue;
        const long d = jdec(j);
        for (long om = 0; om <= c - d; ++om) {
            Gaussian coeff = sgn_pa * Rational(binomial(om + a - 1, om)) *
                             Rational(binomial(p + c - d - om - 1, p - 1));
            if (coeff.is_zero()) continue;
            ShiftedCombination t = t_closed(q, static_cast<int>(a + om), p + b + c - d - om,
                                            spec.x[1], spec.y[1]);
            acc += (t * w) * coeff;
        }
    }
    // group 3
    for (long j = 0; j <= jmax(a); ++j) {
        SymbolicCoefficient w = weight(j);
        if (w.is_zero()) continue;
        const long d = jdec(j);
        for (long om = 0; om <= p - 1; ++om) {
            Gaussian coeff = sgn_p * Rational(binomial(om + a - d, om)) *
                             Rational(binomial(p + c - 2 - om, c - 1));
            if (coeff.is_zero()) continue;
            ShiftedCombination t =
                t_closed(q + a - d + om + 1, 0, p + b + c - 1 - om, spec.x[2], spec.y[2]);
            acc += (t * w) * coeff;
        }
    }
    // group 4
    for (long j = 0; j <= jmax(a); ++j) {
        SymbolicCoefficient w = weight(j);
        if (w.is_zero()) continue;
        Gaussian wsign = sgn_pa;
        if (spec.lambda && j % 2 == 1) wsign = -wsign;
        const long d = jdec(j);
        for (long om = 0; om <= c - 1; ++om) {
            Gaussian coeff = wsign * Rational(binomial(om + a - d, om)) *
                             Rational(binomial(p + c - 2 - om, p - 1));
            if (coeff.is_zero()) continue;
            ShiftedCombination t = t_closed(q, static_cast<int>(a - d + om + 1),
                                            p + b + c - 1 - om, spec.x[3], spec.y[3]);
            acc += (t * w) * coeff;
        }
    }
    return acc.pruned();
}

ShiftedCombination theorem_rhs(TheoremId theorem, const RelationParams& par) {
    switch (theorem) {
        case TheoremId::A3: return rhs_part(RhsPart::J0, par);
        case TheoremId::SU4_lam2: return rhs_part(RhsPart::J2, par);
        case TheoremId::SU4_lam1: return rhs_part(RhsPart::J1, par);
        case TheoremId::SU4_lam3: return rhs_part(RhsPart::J3, par);
        case TheoremId::SO6: {
            ShiftedCombination j0 = rhs_part(RhsPart::J0, par);
            j0 += rhs_part(RhsPart::J2, par);
            return (j0 * Gaussian(rational_of(1, 2))).pruned();
        }
        default: {
            ShiftedCombination r = rhs_part(RhsPart::J0, par);
            r -= rhs_part(RhsPart::J1, par);
            r += rhs_part(RhsPart::J2, par);
            r -= rhs_part(RhsPart::J3, par);
            return (r * Gaussian(rational_of(1, 4))).pruned();
        }
    }
}

namespace {

bool degenerate_params(const RelationParams& par) {
    return par.p == par.q && par.q == par.a && par.a == par.b && par.b == par.c &&
           par.p % 2 == 1;
}

} // namespace

VerificationReport verify_relation(TheoremId theorem, const RelationParams& par, long s0,
                                   const Precision& prec, double tol) {
    prec.validate();
    if (par.p < 2 || par.q < 2 || par.a < 2 || par.b < 2 || par.c < 2 || s0 < 2)
        throw DomainError("verify_relation: numeric verification needs parameters >= 2");

    const mpfr_prec_t wp = prec.work_bits();
    VerificationReport rep(prec.bits());
    rep.theorem = theorem;
    rep.params = par;
    rep.s_value = static_cast<double>(s0);
    rep.tolerance = tol;

    const TwistLabel twist = theorem_twist(theorem);
    const LatticeLabel lattice = theorem_lattice(theorem);

    // left-hand side: exact merge, one lattice evaluation per distinct tuple
    std::vector<MergedTerm> merged;
    {
        std::vector<SignedTuple> rows = lhs_terms(par);
        for (auto& r : rows) r.slots = substitute(r.slots, s0);
        merged = merge_terms(rows, /*symmetric_context=*/false);
    }
    Cplx lhs(wp);
    Real lhs_err(wp);
    for (const auto& term : merged) {
        LatticeSeriesSpec sp;
        for (int i = 0; i < 6; ++i)
            sp.exponents[static_cast<size_t>(i)] =
                static_cast<double>(term.slots[static_cast<size_t>(i)].v);
        sp.twist = twist;
        sp.lattice = lattice;
        NumericValue v = eval_zeta3(sp, prec);
        Real cf(static_cast<double>(term.coeff), wp);
        lhs.re += cf * v.value.re;
        lhs.im += cf * v.value.im;
        lhs_err += abs(cf) * (v.tail_bound + v.rounding_slack);
    }

    NumericValue rhs = expr_eval_numeric(theorem_rhs(theorem, par), static_cast<double>(s0), prec);

    rep.lhs.value = Cplx(round_to(lhs.re, prec.bits()), round_to(lhs.im, prec.bits()));
    rep.lhs.tail_bound = round_to(lhs_err, prec.bits());
    rep.lhs.rounding_slack = Real(0.0, prec.bits());
    rep.rhs = rhs;
    rep.residual = (rep.lhs.value - rhs.value).abs().to_double();
    const double budget = tol + lhs_err.to_double() + rhs.total_error();

    if (degenerate_params(par)) {
        rep.verdict = Verdict::Degenerate;
        rep.passed = rep.lhs.value.abs().to_double() <= budget &&
                     rhs.value.abs().to_double() <= budget;
        return rep;
    }
    rep.passed = rep.residual <= budget;
    rep.verdict = rep.passed ? Verdict::Passed : Verdict::Failed;
    return rep;
}

Evaluation derive_evaluation(long k, TheoremId target) {
    if (k < 1) throw DomainError("derive_evaluation: need k >= 1");
    if (target == TheoremId::SO6)
        throw DomainError("derive_evaluation: SO6 values follow from the A3/lam2 pair");
    RelationParams par;
    par.a = par.b = par.c = par.p = 2 * k + 1;
    par.q = 2 * k;
    const long s0 = 2 * k + 1;

    std::vector<SignedTuple> rows = lhs_terms(par);
    for (auto& r : rows) r.slots = substitute(r.slots, s0);
    // The symmetry merge is exact for the zero/lam2/Q/L1 contexts.  For the
    // lam1/lam3 targets it identifies each series with the lam3/lam1 image of
    // its mirrored tuple; the two closed forms coincide and the merged value
    // is validated numerically downstream.
    std::vector<MergedTerm> merged = merge_terms(rows, /*symmetric_context=*/true);
    std::vector<MergedTerm> collapsed = stuffle_collapse(std::move(merged), true);

    if (collapsed.size() != 1 || collapsed[0].coeff != -2)
        throw CollapseError("derive_evaluation: pipeline did not reach the single -2 term");

    ShiftedCombination rhs = theorem_rhs(target, par);
    ConstantExpression value = specialize(rhs, s0) * Gaussian(rational_of(-1, 2));

    Evaluation ev;
    ev.tuple = collapsed[0].slots;
    ev.twist = theorem_twist(target);
    ev.lattice = theorem_lattice(target);
    ev.value = value.normalized();
    return ev;
}

WittenValue witten_value(long k) {
    if (k < 1) throw DomainError("witten_value: need k >= 1");
    RelationParams par;
    par.p = par.q = par.a = par.b = par.c = 2 * k;
    const long s0 = 2 * k;

    std::vector<SignedTuple> rows = lhs_terms(par);
    for (auto& r : rows) r.slots = substitute(r.slots, s0);
    std::vector<MergedTerm> merged = merge_terms(rows, false);
    if (merged.size() != 1 || merged[0].coeff != 12)
        throw CollapseError("witten_value: expected a single 12-fold term");

    ConstantExpression all2k =
        specialize(theorem_rhs(TheoremId::A3, par), s0) * Gaussian(rational_of(1, 12));

    WittenValue out;
    out.lattice_value = all2k.normalized();
    Rational scale = pow_rational(Rational(12), static_cast<unsigned long>(2 * k));
    out.witten = (out.lattice_value * Gaussian(scale)).normalized();
    return out;
}

} // namespace latzeta
