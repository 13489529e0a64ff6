#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <map>
#include <set>

#include "latzeta/golden.hpp"
#include "latzeta/relations.hpp"

using namespace latzeta;

namespace {

double dd(const Real& r) { return r.to_double(); }

Tuple6 nums(std::initializer_list<long> v) {
    Tuple6 t;
    size_t i = 0;
    for (long x : v) t[i++] = Slot::num(x);
    return t;
}

long total_multiplicity(const std::vector<MergedTerm>& terms) {
    long acc = 0;
    for (const auto& t : terms) acc += std::abs(t.coeff);
    return acc;
}

} // namespace

TEST_CASE("lhs rows: all-2 parameters merge to six double tuples") {
    RelationParams par;  // all 2
    std::vector<SignedTuple> rows = lhs_terms(par);
    REQUIRE(rows.size() == 12);
    for (const auto& r : rows) CHECK(r.sign == 1);
    std::vector<MergedTerm> merged = merge_terms(rows, false);
    CHECK(merged.size() == 6);
    for (const auto& m : merged) CHECK(m.coeff == 2);
    CHECK(total_multiplicity(merged) == 12);
}

TEST_CASE("lhs rows: sign parity at all-1 parameters") {
    RelationParams par{1, 1, 1, 1, 1};
    std::vector<SignedTuple> rows = lhs_terms(par);
    // signs follow the stated exponent sets; row 9 carries q+a+b+c (even here)
    const std::array<int, 12> expect{1, -1, 1, -1, -1, 1, 1, -1, 1, -1, 1, -1};
    for (size_t i = 0; i < 12; ++i) CHECK(rows[i].sign == expect[i]);
}

TEST_CASE("lhs rows 1-2 for the k-family parameters") {
    RelationParams par;
    par.p = 3;
    par.q = 2;
    par.a = par.b = par.c = 3;
    std::vector<SignedTuple> rows = lhs_terms(par);
    Tuple6 r1{Slot::num(3), Slot::num(2), Slot::s(), Slot::num(3), Slot::num(3), Slot::num(3)};
    Tuple6 r2{Slot::num(3), Slot::num(3), Slot::s(), Slot::num(2), Slot::num(3), Slot::num(3)};
    CHECK(rows[0].slots == r1);
    CHECK(rows[0].sign == 1);
    CHECK(rows[1].slots == r2);
    CHECK(rows[1].sign == -1);
}

TEST_CASE("symmetric merge at all-2 parameters gives the 2/4/4/2 pattern") {
    RelationParams par;
    std::vector<MergedTerm> merged = merge_terms(lhs_terms(par), true);
    REQUIRE(merged.size() == 4);
    std::multiset<long> coeffs;
    for (const auto& m : merged) coeffs.insert(m.coeff);
    CHECK(coeffs == std::multiset<long>{2, 2, 4, 4});
    CHECK(total_multiplicity(merged) == 12);
}

TEST_CASE("merge conserves total multiplicity for generic parameters") {
    RelationParams par{2, 3, 4, 5, 6};
    std::vector<MergedTerm> merged = merge_terms(lhs_terms(par), false);
    CHECK(total_multiplicity(merged) == 12);
}

TEST_CASE("stuffle rule collapses the paired difference") {
    std::vector<MergedTerm> terms{{2, nums({3, 2, 3, 3, 3, 3})}, {-2, nums({3, 3, 3, 2, 3, 3})}};
    std::vector<StuffleStep> steps;
    std::vector<MergedTerm> out = stuffle_collapse(terms, false, &steps);
    REQUIRE(out.size() == 1);
    CHECK(out[0].coeff == -2);
    CHECK(out[0].slots == nums({2, 3, 3, 3, 3, 3}));
    REQUIRE(steps.size() == 1);
    CHECK(steps[0].kappa == 2);

    // single term: unchanged
    std::vector<MergedTerm> single{{3, nums({2, 3, 2, 3, 2, 3})}};
    CHECK(stuffle_collapse(single, false).size() == 1);

    // mismatched outside slots: unchanged
    std::vector<MergedTerm> mismatch{{1, nums({3, 2, 3, 3, 3, 3})}, {-1, nums({3, 3, 4, 2, 3, 3})}};
    CHECK(stuffle_collapse(mismatch, false).size() == 2);
}

TEST_CASE("stuffle steps validate numerically against the series") {
    RelationParams par;
    par.p = 3;
    par.q = 2;
    par.a = par.b = par.c = 3;
    std::vector<SignedTuple> rows = lhs_terms(par);
    for (auto& r : rows) r.slots = substitute(r.slots, 3);
    std::vector<StuffleStep> steps;
    stuffle_collapse(merge_terms(rows, true), true, &steps);
    REQUIRE(!steps.empty());
    Precision p;
    p.cutoff = 100;
    for (const auto& st : steps) {
        auto eval = [&](const Tuple6& t) {
            LatticeSeriesSpec sp;
            for (size_t i = 0; i < 6; ++i) sp.exponents[i] = static_cast<double>(t[i].v);
            sp.twist = TwistLabel::Zero;
            sp.lattice = LatticeLabel::P;
            return dd(eval_zeta3(sp, p).value.re);
        };
        // S(term_plus) - S(term_minus) + S(result) = 0
        double r = eval(st.term_plus) - eval(st.term_minus) + eval(st.result);
        CHECK(std::abs(r) < 1e-8);
    }
}

TEST_CASE("J1 and J3 coincide on mirror-symmetric parameter sets") {
    for (RelationParams par : {RelationParams{2, 2, 2, 2, 2}, RelationParams{2, 3, 2, 3, 2},
                               RelationParams{3, 2, 3, 2, 3}}) {
        ShiftedCombination j1 = rhs_part(RhsPart::J1, par);
        ShiftedCombination j3 = rhs_part(RhsPart::J3, par);
        CHECK(j1 == j3);
        CHECK(j1 == j3.conj_map());  // coefficients are real here
    }
    // asymmetric parameters give complex-conjugate, not equal, sides
    RelationParams par{2, 3, 4, 3, 2};
    ShiftedCombination j1 = rhs_part(RhsPart::J1, par);
    ShiftedCombination j3 = rhs_part(RhsPart::J3, par);
    CHECK(j1 == j3.conj_map());
    CHECK(!(j1 == j3));
}

TEST_CASE("PU4 and SO6 right-hand sides have real coefficients") {
    for (RelationParams par : {RelationParams{2, 2, 2, 2, 2}, RelationParams{2, 3, 4, 3, 2},
                               RelationParams{3, 2, 3, 2, 3}}) {
        CHECK(theorem_rhs(TheoremId::PU4, par).all_real());
        CHECK(theorem_rhs(TheoremId::SO6, par).all_real());
    }
}

TEST_CASE("degenerate all-odd left side cancels and the right side vanishes") {
    RelationParams par{3, 3, 3, 3, 3};
    std::vector<SignedTuple> rows = lhs_terms(par);
    CHECK(merge_terms(rows, false).empty());
    NumericValue rhs = expr_eval_numeric(theorem_rhs(TheoremId::A3, par), 3.0, Precision{});
    CHECK(std::abs(dd(rhs.value.re)) < 1e-20);
}

TEST_CASE("derive_evaluation k=1 against the reference table") {
    Evaluation ev = derive_evaluation(1, TheoremId::A3);
    CHECK(ev.tuple == nums({2, 3, 3, 3, 3, 3}));
    CHECK(ev.twist == TwistLabel::Zero);
    CHECK(ev.lattice == LatticeLabel::P);
    CHECK(ev.value.equals_normalized(golden_value("a3_k1_evaluation")));

    Evaluation lam2 = derive_evaluation(1, TheoremId::SU4_lam2);
    CHECK(lam2.value.equals_normalized(golden_value("su4_lam2_k1_evaluation")));

    CHECK_THROWS_AS(derive_evaluation(1, TheoremId::SO6), DomainError);
}

TEST_CASE("derived value matches the series numerically (reduced cutoff)") {
    Evaluation ev = derive_evaluation(1, TheoremId::A3);
    Precision p;
    p.cutoff = 120;
    LatticeSeriesSpec sp{{2, 3, 3, 3, 3, 3}, TwistLabel::Zero, LatticeLabel::P};
    NumericValue series = eval_zeta3(sp, p);
    NumericValue exact = expr_eval_numeric(ev.value, p);
    CHECK(std::abs(dd(series.value.re - exact.value.re)) /
              std::abs(dd(exact.value.re)) < 1e-6);
}

TEST_CASE("verify_relation on a nonzero instance at reduced cutoff") {
    Precision p;
    p.cutoff = 120;
    for (TheoremId th : {TheoremId::A3, TheoremId::SU4_lam1, TheoremId::PU4}) {
        VerificationReport rep = verify_relation(th, RelationParams{2, 3, 2, 3, 2}, 3, p, 1e-6);
        CHECK(rep.passed);
        CHECK(rep.verdict == Verdict::Passed);
        CHECK(rep.residual < 1e-6);
    }
    VerificationReport deg = verify_relation(TheoremId::SU4_lam2, RelationParams{3, 3, 3, 3, 3},
                                             3, p, 1e-8);
    CHECK(deg.verdict == Verdict::Degenerate);
    CHECK(deg.passed);
    CHECK_THROWS_AS(
        verify_relation(TheoremId::A3, RelationParams{1, 2, 2, 2, 2}, 2, p, 1e-6), DomainError);
}

TEST_CASE("witten value at k=1") {
    WittenValue w = witten_value(1);
    CHECK(w.lattice_value.is_pure_pi_power());
    // scaling: dim rho for A3 is the product of the six forms over 12
    ConstantExpression scaled = w.lattice_value * Gaussian(Rational(144));
    CHECK(scaled.equals_normalized(w.witten));

    Precision p;
    p.cutoff = 120;
    NumericValue exact = expr_eval_numeric(w.lattice_value, p);
    NumericValue series = eval_zeta3({{2, 2, 2, 2, 2, 2}, TwistLabel::Zero, LatticeLabel::P}, p);
    CHECK(std::abs(dd(series.value.re - exact.value.re)) / std::abs(dd(exact.value.re)) < 1e-6);

    // consistency: (A3 value + lam2 value)/2 equals the L1 closed form
    RelationParams par;
    ConstantExpression lam2v =
        specialize(theorem_rhs(TheoremId::SU4_lam2, par), 2) * Gaussian(rational_of(1, 12));
    ConstantExpression so6 = (w.lattice_value + lam2v) * Gaussian(rational_of(1, 2));
    CHECK(so6.equals_normalized(golden_value("so6_all2_value")));
}
