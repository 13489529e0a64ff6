#pragma once

#include <array>
#include <cstdint>

#include "latzeta/rational.hpp"

namespace latzeta {

// Twist coweight: phase e^{2 pi i <y, lambda>} on lattice points, y in
// {0, lam1^v, lam2^v, lam3^v}.  Only these four occur.
enum class TwistLabel : uint8_t { Zero, Lam1, Lam2, Lam3 };

// The three lattices between weight and root lattice: P (SU(4)),
// L1 (SO(6)), Q (PU(4)), with P > L1 > Q of index 2 each.
enum class LatticeLabel : uint8_t { P, L1, Q };

const char* twist_name(TwistLabel t);
const char* lattice_name(LatticeLabel l);
TwistLabel twist_from_name(const std::string& s);
LatticeLabel lattice_from_name(const std::string& s);

// Weight in the basis (alpha1, alpha2, alpha3), exact rational coordinates.
struct WeightVector {
    std::array<Rational, 3> coords;
};

// Fundamental weights and rho = lam1 + lam2 + lam3.
const WeightVector& fundamental_weight(int j);   // j = 1..3
const WeightVector& simple_root(int j);          // j = 1..3
WeightVector rho_weight();

// <lam_j^v, w> = j-th alpha-coordinate of w; the zero twist pairs to 0.
Rational pairing(TwistLabel coweight, const WeightVector& w);

// Exponent e with phase = i^e for the point m1*lam1 + m2*lam2 + m3*lam3.
int twist_exponent(TwistLabel t, long m1, long m2, long m3);

// e^{2 pi i <y, m1 lam1 + m2 lam2 + m3 lam3>} as an exact fourth root of unity.
Gaussian twist_phase(TwistLabel t, long m1, long m2, long m3);

// Membership of the shifted index (m1,m2,m3) in the sublattice series:
// P always, L1 iff m1 = m3 (mod 2), Q iff m1 + 2 m2 + 3 m3 = 2 (mod 4).
bool lattice_member(LatticeLabel l, long m1, long m2, long m3);

// The exponent-tuple symmetry (s1..s6) -> (s3,s2,s1,s5,s4,s6); an involution.
template <typename T>
std::array<T, 6> sigma_permute(const std::array<T, 6>& t) {
    return {t[2], t[1], t[0], t[4], t[3], t[5]};
}

// Twist accompanying the tuple symmetry: lam1 and lam3 swap, zero/lam2 fixed.
TwistLabel sigma_twist(TwistLabel t);

template <typename T>
std::pair<std::array<T, 6>, TwistLabel> tuple_symmetry(const std::array<T, 6>& t, TwistLabel tw) {
    return {sigma_permute(t), sigma_twist(tw)};
}

} // namespace latzeta
