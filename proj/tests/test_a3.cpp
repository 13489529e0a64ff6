#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "latzeta/a3.hpp"

using namespace latzeta;

namespace {

WeightVector combination(long m1, long m2, long m3) {
    WeightVector w;
    for (int i = 0; i < 3; ++i)
        w.coords[i] = Rational(m1) * fundamental_weight(1).coords[i] +
                      Rational(m2) * fundamental_weight(2).coords[i] +
                      Rational(m3) * fundamental_weight(3).coords[i];
    return w;
}

} // namespace

TEST_CASE("pairing readouts") {
    CHECK(pairing(TwistLabel::Lam1, fundamental_weight(1)) == rational_of(3, 4));
    CHECK(pairing(TwistLabel::Lam2, simple_root(2)) == Rational(1));
    CHECK(pairing(TwistLabel::Lam1, fundamental_weight(3)) == rational_of(1, 4));
    CHECK(pairing(TwistLabel::Zero, fundamental_weight(2)) == Rational(0));
    WeightVector rho = rho_weight();
    CHECK(pairing(TwistLabel::Lam1, rho) == rational_of(3, 2));
    CHECK(pairing(TwistLabel::Lam2, rho) == Rational(2));
}

TEST_CASE("twist phases") {
    CHECK(twist_phase(TwistLabel::Lam1, 1, 1, 1) == Gaussian(-1));
    CHECK(twist_phase(TwistLabel::Lam2, 1, 1, 2) == Gaussian(-1));
    CHECK(twist_phase(TwistLabel::Lam3, 2, 1, 2) == Gaussian(-1));
    CHECK(twist_phase(TwistLabel::Zero, 5, 7, 9) == Gaussian(1));
}

TEST_CASE("twist phase agrees with the pairing-derived exponent") {
    for (long m1 = 1; m1 <= 8; ++m1)
        for (long m2 = 1; m2 <= 8; ++m2)
            for (long m3 = 1; m3 <= 8; ++m3)
                for (TwistLabel t : {TwistLabel::Lam1, TwistLabel::Lam2, TwistLabel::Lam3}) {
                    Rational pr = pairing(t, combination(m1, m2, m3));
                    // e^{2 pi i pr} = i^{4 pr}; 4 pr is an integer here
                    Rational e4 = pr * 4;
                    REQUIRE(e4.get_den() == 1);
                    CHECK(twist_phase(t, m1, m2, m3) == Gaussian::i_pow(e4.get_num().get_si()));
                }
}

TEST_CASE("lattice membership") {
    CHECK_FALSE(lattice_member(LatticeLabel::Q, 1, 2, 1));
    CHECK(lattice_member(LatticeLabel::Q, 2, 1, 2));
    CHECK(lattice_member(LatticeLabel::L1, 1, 2, 3));
    CHECK(lattice_member(LatticeLabel::P, 1, 1, 1));
}

TEST_CASE("indicator identity and lattice chain on the 8-cube") {
    for (long m1 = 1; m1 <= 8; ++m1)
        for (long m2 = 1; m2 <= 8; ++m2)
            for (long m3 = 1; m3 <= 8; ++m3) {
                Gaussian ind = Gaussian(1) - twist_phase(TwistLabel::Lam1, m1, m2, m3) +
                               twist_phase(TwistLabel::Lam2, m1, m2, m3) -
                               twist_phase(TwistLabel::Lam3, m1, m2, m3);
                bool in_q = lattice_member(LatticeLabel::Q, m1, m2, m3);
                CHECK(ind == (in_q ? Gaussian(4) : Gaussian(0)));

                bool in_l1 = lattice_member(LatticeLabel::L1, m1, m2, m3);
                Gaussian eps = (Gaussian(1) + twist_phase(TwistLabel::Lam2, m1, m2, m3)) *
                               rational_of(1, 2);
                CHECK(in_l1 == (eps == Gaussian(1)));
                if (in_q) CHECK(in_l1);
            }
}

TEST_CASE("tuple symmetry") {
    std::array<int, 6> t{1, 2, 3, 4, 5, 6};
    auto [mapped, tw] = tuple_symmetry(t, TwistLabel::Zero);
    CHECK(mapped == std::array<int, 6>{3, 2, 1, 5, 4, 6});
    CHECK(tw == TwistLabel::Zero);

    auto [m1, tw1] = tuple_symmetry(t, TwistLabel::Lam1);
    CHECK(tw1 == TwistLabel::Lam3);

    std::array<int, 6> fixed{7, 2, 7, 4, 4, 9};
    auto [mf, twf] = tuple_symmetry(fixed, TwistLabel::Lam2);
    CHECK(mf == fixed);
    CHECK(twf == TwistLabel::Lam2);

    // involution on (tuple, twist) pairs
    for (TwistLabel tw0 : {TwistLabel::Zero, TwistLabel::Lam1, TwistLabel::Lam2, TwistLabel::Lam3}) {
        auto [once, w_once] = tuple_symmetry(t, tw0);
        auto [twice, w_twice] = tuple_symmetry(once, w_once);
        CHECK(twice == t);
        CHECK(w_twice == tw0);
    }
}

TEST_CASE("name round trips") {
    for (TwistLabel t : {TwistLabel::Zero, TwistLabel::Lam1, TwistLabel::Lam2, TwistLabel::Lam3})
        CHECK(twist_from_name(twist_name(t)) == t);
    for (LatticeLabel l : {LatticeLabel::P, LatticeLabel::L1, LatticeLabel::Q})
        CHECK(lattice_from_name(lattice_name(l)) == l);
}
