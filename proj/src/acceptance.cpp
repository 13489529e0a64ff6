#include "latzeta/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <complex>
#include <random>
#include <sstream>

#include "latzeta/golden.hpp"
#include "latzeta/json_io.hpp"
#include "latzeta/relations.hpp"

namespace latzeta {

namespace {

constexpr double kTol = 1e-6;
constexpr double kTightTol = 1e-8;

struct Ctx {
    Precision prec;  // defaults: 128 bits, cutoff 400
    std::ostringstream detail;
    bool ok = true;

    void expect(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            detail << (detail.str().empty() ? "" : "; ") << what;
        }
    }
};

double to_d(const Real& r) { return r.to_double(); }

LatticeSeriesSpec spec_of(const std::array<double, 6>& e, TwistLabel t, LatticeLabel l) {
    return LatticeSeriesSpec{e, t, l};
}

std::array<double, 6> tuple_to_exponents(const Tuple6& t) {
    std::array<double, 6> e{};
    for (size_t i = 0; i < 6; ++i) e[i] = static_cast<double>(t[i].v);
    return e;
}

double rel_diff(double a, double b) {
    return std::abs(a - b) / std::max(1e-300, std::abs(b));
}

// ---- criterion bodies ----

// exact all-2 special value of one theorem, divided by the merge multiplicity
ConstantExpression all2_value(Ctx& ctx, TheoremId th) {
    RelationParams par;  // all 2
    std::vector<SignedTuple> rows = lhs_terms(par);
    for (auto& r : rows) r.slots = substitute(r.slots, 2);
    std::vector<MergedTerm> merged = merge_terms(rows, false);
    ctx.expect(merged.size() == 1, "all-2 left side did not merge to one tuple");
    long mult = merged.empty() ? 1 : merged[0].coeff;
    return specialize(theorem_rhs(th, par), 2) *
           Gaussian(Rational(1) / Rational(mult));
}

void criterion_1(Ctx& ctx) {
    ConstantExpression v = all2_value(ctx, TheoremId::PU4);
    ctx.expect(v.equals_normalized(golden_value("pu4_all2_value")),
               "PU4 all-2 closed form mismatch: " + v.normalized().render());
    NumericValue series = eval_zeta3(spec_of({2, 2, 2, 2, 2, 2}, TwistLabel::Zero, LatticeLabel::Q),
                                     ctx.prec);
    NumericValue exact = expr_eval_numeric(v, ctx.prec);
    double rd = rel_diff(to_d(series.value.re), to_d(exact.value.re));
    ctx.expect(rd < kTol, "PU4 all-2 numeric rel diff " + std::to_string(rd));
    ctx.detail << "rel=" << rd;
}

void criterion_2(Ctx& ctx) {
    ConstantExpression v = all2_value(ctx, TheoremId::SO6);
    ctx.expect(v.equals_normalized(golden_value("so6_all2_value")),
               "SO6 all-2 closed form mismatch: " + v.normalized().render());
    NumericValue series = eval_zeta3(spec_of({2, 2, 2, 2, 2, 2}, TwistLabel::Zero, LatticeLabel::L1),
                                     ctx.prec);
    NumericValue exact = expr_eval_numeric(v, ctx.prec);
    double rd = rel_diff(to_d(series.value.re), to_d(exact.value.re));
    ctx.expect(rd < kTol, "SO6 all-2 numeric rel diff " + std::to_string(rd));
    ctx.detail << "rel=" << rd;
}

void check_derived(Ctx& ctx, long k, TheoremId target, const std::string& golden_key,
                   bool check_numeric) {
    Evaluation ev = derive_evaluation(k, target);
    ctx.expect(ev.value.equals_normalized(golden_value(golden_key)),
               golden_key + " closed form mismatch: " + ev.value.normalized().render());
    if (!check_numeric) return;
    NumericValue series =
        eval_zeta3(spec_of(tuple_to_exponents(ev.tuple), ev.twist, ev.lattice), ctx.prec);
    NumericValue exact = expr_eval_numeric(ev.value, ctx.prec);
    double rd = rel_diff(to_d(series.value.re), to_d(exact.value.re));
    ctx.expect(rd < kTol, golden_key + " numeric rel diff " + std::to_string(rd));
}

void criterion_3(Ctx& ctx) {
    check_derived(ctx, 1, TheoremId::A3, "a3_k1_evaluation", true);
    check_derived(ctx, 2, TheoremId::A3, "a3_k2_evaluation", true);
}

void criterion_4(Ctx& ctx) {
    check_derived(ctx, 1, TheoremId::SU4_lam2, "su4_lam2_k1_evaluation", true);
}

void criterion_5(Ctx& ctx) {
    ConstantExpression a3 = derive_evaluation(1, TheoremId::A3).value;
    ConstantExpression lam2 = derive_evaluation(1, TheoremId::SU4_lam2).value;
    ConstantExpression so6 = (a3 + lam2) * Gaussian(rational_of(1, 2));
    ctx.expect(so6.equals_normalized(golden_value("so6_k1_evaluation")),
               "SO6 k=1 combination mismatch: " + so6.normalized().render());
}

void criterion_6(Ctx& ctx) {
    Evaluation lam1 = derive_evaluation(1, TheoremId::SU4_lam1);
    Evaluation lam3 = derive_evaluation(1, TheoremId::SU4_lam3);
    Evaluation pu4 = derive_evaluation(1, TheoremId::PU4);
    ctx.expect(lam1.value.equals_normalized(golden_value("lam1_k1_evaluation")),
               "lam1 k=1 mismatch: " + lam1.value.normalized().render());
    ctx.expect(lam3.value.equals_normalized(golden_value("lam1_k1_evaluation")),
               "lam3 k=1 mismatch: " + lam3.value.normalized().render());
    ctx.expect(pu4.value.equals_normalized(golden_value("pu4_k1_evaluation")),
               "PU4 k=1 mismatch: " + pu4.value.normalized().render());
    ctx.expect(lam1.value.equals_normalized(lam3.value), "lam1 and lam3 values differ");

    for (const Evaluation& ev : {lam1, lam3, pu4}) {
        NumericValue v =
            eval_zeta3(spec_of(tuple_to_exponents(ev.tuple), ev.twist, ev.lattice), ctx.prec);
        double im = std::abs(to_d(v.value.im));
        ctx.expect(im < kTightTol, "imaginary part " + std::to_string(im));
        NumericValue exact = expr_eval_numeric(ev.value, ctx.prec);
        double rd = rel_diff(to_d(v.value.re), to_d(exact.value.re));
        ctx.expect(rd < kTol, "k=1 numeric rel diff " + std::to_string(rd));
    }
}

void criterion_7(Ctx& ctx) {
    RelationParams par;  // all 2
    ShiftedCombination so6 = theorem_rhs(TheoremId::SO6, par);
    ctx.expect(so6 == golden_relation("so6_all2_relation"),
               "SO6 s-relation mismatch: " + so6.render());
    ShiftedCombination lam1 = theorem_rhs(TheoremId::SU4_lam1, par);
    ctx.expect(lam1 == golden_relation("lam1_all2_relation"),
               "lam1 s-relation mismatch: " + lam1.render());
    ShiftedCombination pu4 = theorem_rhs(TheoremId::PU4, par);
    ctx.expect(pu4 == golden_relation("pu4_all2_relation"),
               "PU4 s-relation mismatch: " + pu4.render());
    ctx.expect(pu4.all_real(), "PU4 relation has imaginary coefficients");
    ctx.expect(so6.all_real(), "SO6 relation has imaginary coefficients");
}

void criterion_8(Ctx& ctx) {
    const std::array<std::pair<int, int>, 10> pairs{{{0, 0},
                                                     {2, 0},
                                                     {0, 2},
                                                     {2, 2},
                                                     {2, 1},
                                                     {3, 2},
                                                     {3, 1},
                                                     {2, 3},
                                                     {1, 2},
                                                     {1, 3}}};
    double worst = 0;
    for (long p = 1; p <= 3; ++p)
        for (long q = 1; q <= 3; ++q)
            for (double s : {1.5, 2.0, 2.5})
                for (auto [xe, ye] : pairs) {
                    ShiftedCombination closed = t_closed(p, 0, q, Root4(xe), Root4(ye));
                    NumericValue lhs = expr_eval_numeric(closed, s, ctx.prec);
                    NumericValue rhs = eval_frakt(p, s, q, Root4(xe), Root4(ye), ctx.prec);
                    double diff = to_d((lhs.value - rhs.value).abs());
                    worst = std::max(worst, diff);
                    if (diff >= kTol)
                        ctx.expect(false, "T(" + std::to_string(p) + "," + std::to_string(s) + "," +
                                              std::to_string(q) + ";i^" + std::to_string(xe) +
                                              ",i^" + std::to_string(ye) + ") diff " +
                                              std::to_string(diff));
                }
    ctx.detail << "worst=" << worst;
}

void criterion_9(Ctx& ctx) {
    double worst = 0;
    auto track = [&](double r, const std::string& what) {
        worst = std::max(worst, r);
        ctx.expect(r < kTol, what + " residual " + std::to_string(r));
    };

    for (int p : {1, 2, 3})
        for (double th : {0.0, M_PI / 2, -M_PI / 2, 1.0}) {
            IdentityParams par;
            par.p = p;
            track(check_identity(IdentityId::FourierPfrac, par, th, ctx.prec), "fourier_pfrac");
        }

    for (int j : {1, 2, 3, 4})
        for (const Rational& alpha : {rational_of(1, 4), rational_of(3, 4)}) {
            IdentityParams par;
            par.j = j;
            par.alpha = alpha;
            track(check_identity(IdentityId::BernoulliFourier, par, 0.0, ctx.prec),
                  "bernoulli_fourier");
        }

    for (int p : {1, 2, 3})
        for (double th : {0.0, M_PI / 2, -M_PI / 2, 1.0})
            for (int xe : {0, 1, 2, 3}) {
                IdentityParams par;
                par.p = p;
                par.q = 2;
                par.s = 2.5;
                par.x = Root4(xe);
                track(check_identity(IdentityId::DoubleRelation, par, th, ctx.prec),
                      "double_relation");
            }

    struct MasterCase {
        int xe, ye;
        double theta;
    };
    for (const MasterCase& mc :
         {MasterCase{2, 2, 0.0}, MasterCase{0, 0, M_PI}, MasterCase{3, 1, M_PI / 2},
          MasterCase{1, 3, -M_PI / 2}}) {
        IdentityParams par;
        par.s = 2.5;
        par.x = Root4(mc.xe);
        par.y = Root4(mc.ye);
        track(check_identity(IdentityId::Master, par, mc.theta, ctx.prec), "master");
    }
    ctx.detail << "worst=" << worst;
}

void criterion_10(Ctx& ctx) {
    const std::array<RelationParams, 3> grid{{{2, 2, 2, 2, 2}, {2, 3, 2, 3, 2}, {3, 2, 3, 2, 3}}};
    const std::array<TheoremId, 6> theorems{TheoremId::A3,       TheoremId::SU4_lam2,
                                            TheoremId::SO6,      TheoremId::SU4_lam1,
                                            TheoremId::SU4_lam3, TheoremId::PU4};
    double worst = 0;
    for (const RelationParams& par : grid)
        for (long s0 : {2L, 3L})
            for (TheoremId th : theorems) {
                VerificationReport rep = verify_relation(th, par, s0, ctx.prec, kTol);
                worst = std::max(worst, rep.residual);
                if (!rep.passed)
                    ctx.expect(false, std::string(theorem_name(th)) + " (" +
                                          std::to_string(par.p) + std::to_string(par.q) +
                                          std::to_string(par.a) + std::to_string(par.b) +
                                          std::to_string(par.c) + ") s=" + std::to_string(s0) +
                                          " residual " + std::to_string(rep.residual));
            }

    RelationParams deg{3, 3, 3, 3, 3};
    VerificationReport rep = verify_relation(TheoremId::A3, deg, 3, ctx.prec, kTightTol);
    ctx.expect(rep.verdict == Verdict::Degenerate, "all-odd case not reported degenerate");
    ctx.expect(std::abs(to_d(rep.lhs.value.re)) < kTightTol &&
                   std::abs(to_d(rep.rhs.value.re)) < kTightTol,
               "degenerate sides not near zero");
    ctx.detail << "worst=" << worst;
}

void criterion_11(Ctx& ctx) {
    // indicator identity on the 8-cube
    for (long m1 = 1; m1 <= 8; ++m1)
        for (long m2 = 1; m2 <= 8; ++m2)
            for (long m3 = 1; m3 <= 8; ++m3) {
                Gaussian ind = Gaussian(1) - twist_phase(TwistLabel::Lam1, m1, m2, m3) +
                               twist_phase(TwistLabel::Lam2, m1, m2, m3) -
                               twist_phase(TwistLabel::Lam3, m1, m2, m3);
                bool in_q = lattice_member(LatticeLabel::Q, m1, m2, m3);
                if (!(ind == (in_q ? Gaussian(4) : Gaussian(0)))) {
                    ctx.expect(false, "indicator identity failed");
                    return;
                }
            }

    // three seeded random admissible tuples: decompositions to 1e-8
    std::mt19937 rng(0x5eed);
    std::uniform_int_distribution<int> d(2, 4);
    double worst = 0;
    for (int iter = 0; iter < 3; ++iter) {
        std::array<double, 6> e{};
        for (auto& v : e) v = d(rng);
        auto val = [&](TwistLabel t, LatticeLabel l) {
            NumericValue v = eval_zeta3(spec_of(e, t, l), ctx.prec);
            return std::complex<double>(to_d(v.value.re), to_d(v.value.im));
        };
        auto P0 = val(TwistLabel::Zero, LatticeLabel::P);
        auto P1 = val(TwistLabel::Lam1, LatticeLabel::P);
        auto P2 = val(TwistLabel::Lam2, LatticeLabel::P);
        auto P3 = val(TwistLabel::Lam3, LatticeLabel::P);
        auto L = val(TwistLabel::Zero, LatticeLabel::L1);
        auto Q = val(TwistLabel::Zero, LatticeLabel::Q);
        double r1 = std::abs(L - 0.5 * (P0 + P2));
        double r2 = std::abs(Q - 0.25 * (P0 - P1 + P2 - P3));
        worst = std::max({worst, r1, r2});
        ctx.expect(r1 < kTightTol, "L1 decomposition residual " + std::to_string(r1));
        ctx.expect(r2 < kTightTol, "Q decomposition residual " + std::to_string(r2));
    }

    // symmetry relations on an asymmetric tuple
    const std::array<double, 6> t{2, 3, 4, 2, 3, 2};
    const std::array<double, 6> ts{4, 3, 2, 3, 2, 2};  // mirrored
    auto nv = [&](const std::array<double, 6>& ex, TwistLabel tw, LatticeLabel la) {
        NumericValue v = eval_zeta3(spec_of(ex, tw, la), ctx.prec);
        return std::complex<double>(to_d(v.value.re), to_d(v.value.im));
    };
    double r0 = std::abs(nv(t, TwistLabel::Zero, LatticeLabel::P) -
                         nv(ts, TwistLabel::Zero, LatticeLabel::P));
    double r1 = std::abs(nv(t, TwistLabel::Lam1, LatticeLabel::P) -
                         nv(ts, TwistLabel::Lam3, LatticeLabel::P));
    double r2 = std::abs(nv(t, TwistLabel::Lam2, LatticeLabel::P) -
                         nv(ts, TwistLabel::Lam2, LatticeLabel::P));
    double rq = std::abs(nv(t, TwistLabel::Zero, LatticeLabel::Q) -
                         nv(ts, TwistLabel::Zero, LatticeLabel::Q));
    for (double r : {r0, r1, r2, rq}) {
        worst = std::max(worst, r);
        ctx.expect(r < kTightTol, "symmetry residual " + std::to_string(r));
    }
    ctx.detail << "worst=" << worst;
}

void criterion_12(Ctx& ctx) {
    RelationParams par;  // all 2
    auto p_value = [&](TheoremId th) { return all2_value(ctx, th); };
    ConstantExpression P0 = p_value(TheoremId::A3);
    ConstantExpression P1 = p_value(TheoremId::SU4_lam1);
    ConstantExpression P2 = p_value(TheoremId::SU4_lam2);
    ConstantExpression P3 = p_value(TheoremId::SU4_lam3);
    ConstantExpression Q0 = p_value(TheoremId::PU4);

    const Gaussian half(rational_of(1, 2));
    // L1 values: the membership indicator is (1 + lam2 phase)/2; adding the
    // lam2 coweight permutes the twists
    ConstantExpression L0 = (P0 + P2) * half;
    ConstantExpression L1v = (P1 + P3) * half;
    ConstantExpression L2 = (P2 + P0) * half;
    ConstantExpression L3 = (P3 + P1) * half;
    // on Q the twist phases are constant: lam1, lam3 -> -1; lam2 -> +1
    ConstantExpression Q1 = Q0 * Gaussian(Rational(-1));
    ConstantExpression Q2 = Q0;
    ConstantExpression Q3 = Q0 * Gaussian(Rational(-1));

    int idx = 0;
    for (const ConstantExpression* e :
         {&P0, &P1, &P2, &P3, &L0, &L1v, &L2, &L3, &Q0, &Q1, &Q2, &Q3}) {
        ctx.expect(e->is_pure_pi_power(),
                   "entry " + std::to_string(idx) + " is not a pure pi power: " +
                       e->normalized().render());
        ++idx;
    }
}

} // namespace

bool run_acceptance_suite(const std::function<void(const std::string&)>& print,
                          std::vector<CriterionResult>* results) {
    struct Entry {
        int num;
        const char* title;
        void (*body)(Ctx&);
    };
    const std::vector<Entry> entries{
        {1, "PU4 all-2 special value (exact + numeric)", criterion_1},
        {2, "SO6 all-2 special value (exact + numeric)", criterion_2},
        {3, "A3 k-family evaluations (k = 1, 2)", criterion_3},
        {4, "lam2-twist k=1 evaluation", criterion_4},
        {5, "SO6 k=1 value from the A3/lam2 pair", criterion_5},
        {6, "lam1/lam3/PU4 k=1 evaluations and reality", criterion_6},
        {7, "symbolic s-relations match the reference displays", criterion_7},
        {8, "closed-form oracle grid for the two-sided sums", criterion_8},
        {9, "identity residuals", criterion_9},
        {10, "theorem verification grid and the degenerate case", criterion_10},
        {11, "structural invariants (indicator, decompositions, symmetry)", criterion_11},
        {12, "all-2 parity family reduces to rational pi powers", criterion_12},
    };

    bool all_ok = true;
    for (const Entry& e : entries) {
        Ctx ctx;
        auto t0 = std::chrono::steady_clock::now();
        try {
            e.body(ctx);
        } catch (const std::exception& ex) {
            ctx.ok = false;
            ctx.detail << "exception: " << ex.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::ostringstream line;
        line << "criterion " << e.num << ": " << (ctx.ok ? "PASS" : "FAIL") << " — " << e.title;
        if (!ctx.detail.str().empty()) line << " [" << ctx.detail.str() << "]";
        line << " (" << std::fixed << secs << "s)";
        print(line.str());
        if (results)
            results->push_back({e.num, e.title, ctx.ok, ctx.detail.str(), secs});
        all_ok = all_ok && ctx.ok;
    }
    return all_ok;
}

} // namespace latzeta
