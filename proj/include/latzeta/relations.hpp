#pragma once

#include <optional>
#include <string>
#include <vector>

#include "latzeta/algebra.hpp"

namespace latzeta {

struct RelationParams {
    long p = 2, q = 2, a = 2, b = 2, c = 2;
};

enum class TheoremId { A3, SU4_lam2, SO6, SU4_lam1, SU4_lam3, PU4 };

const char* theorem_name(TheoremId t);
TheoremId theorem_from_name(const std::string& s);
TwistLabel theorem_twist(TheoremId t);
LatticeLabel theorem_lattice(TheoremId t);

// One exponent slot: an integer or the symbolic variable s.
struct Slot {
    long v = 0;
    bool sym = false;

    static Slot s() { return Slot{0, true}; }
    static Slot num(long x) { return Slot{x, false}; }
    auto operator<=>(const Slot&) const = default;
};

using Tuple6 = std::array<Slot, 6>;

std::string tuple_to_string(const Tuple6& t);

struct SignedTuple {
    int sign = 1;  // +-1
    Tuple6 slots;
};

struct MergedTerm {
    long coeff = 0;
    Tuple6 slots;
};

// The canonical 12-row left-hand side of the functional relations.
std::vector<SignedTuple> lhs_terms(const RelationParams& params);

// Substitute a concrete value for the symbolic slot.
Tuple6 substitute(const Tuple6& t, long s0);

// Merge identical tuples; in symmetric twist contexts additionally merge each
// tuple with its symmetry image (canonical representative kept).
std::vector<MergedTerm> merge_terms(const std::vector<SignedTuple>& terms, bool symmetric_context);

// One applied instance of the partial-fraction collapse rule, for validation.
struct StuffleStep {
    std::array<int, 3> triple;  // 0-based slot indices (A, B, A+B)
    Tuple6 term_plus, term_minus, result;
    long kappa = 0;
};

// Repeatedly applies the rule: terms (x, y-1, z) and (x, y, z-1) on an additive
// slot triple with opposite equal coefficients combine into -(x-1, y, z).
// In symmetric contexts symmetry-merging is interleaved until a fixed point.
std::vector<MergedTerm> stuffle_collapse(std::vector<MergedTerm> terms, bool symmetric_context,
                                         std::vector<StuffleStep>* steps = nullptr);

enum class RhsPart { J0, J1, J2, J3 };

// The four right-hand-side building blocks; every T factor expanded through
// its closed form into the zeta/L4 basis.
ShiftedCombination rhs_part(RhsPart part, const RelationParams& params);

ShiftedCombination theorem_rhs(TheoremId theorem, const RelationParams& params);

enum class Verdict { Passed, Failed, Degenerate };

struct VerificationReport {
    TheoremId theorem;
    RelationParams params;
    double s_value = 0;
    NumericValue lhs;
    NumericValue rhs;
    double residual = 0;
    double tolerance = 0;
    bool passed = false;
    Verdict verdict = Verdict::Failed;

    explicit VerificationReport(mpfr_prec_t prec = 128) : lhs(prec), rhs(prec) {}
};

VerificationReport verify_relation(TheoremId theorem, const RelationParams& params, long s0,
                                   const Precision& prec, double tol);

struct Evaluation {
    Tuple6 tuple;
    TwistLabel twist;
    LatticeLabel lattice;
    ConstantExpression value;
};

// The parameter family (a,b,c,p,q,s) = (2k+1,...,2k,2k+1) collapsed to a
// single-series evaluation; target picks the twist/lattice.
Evaluation derive_evaluation(long k, TheoremId target);

struct WittenValue {
    ConstantExpression lattice_value;  // zeta3((2k)^6; A3)
    ConstantExpression witten;         // zeta_W(2k; su(4)) = 12^{2k} * lattice_value
};

WittenValue witten_value(long k);

} // namespace latzeta
