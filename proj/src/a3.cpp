#include "latzeta/a3.hpp"

#include <string>

namespace latzeta {

const char* twist_name(TwistLabel t) {
    switch (t) {
        case TwistLabel::Zero: return "zero";
        case TwistLabel::Lam1: return "lam1";
        case TwistLabel::Lam2: return "lam2";
        default: return "lam3";
    }
}

const char* lattice_name(LatticeLabel l) {
    switch (l) {
        case LatticeLabel::P: return "P";
        case LatticeLabel::L1: return "L1";
        default: return "Q";
    }
}

TwistLabel twist_from_name(const std::string& s) {
    if (s == "zero") return TwistLabel::Zero;
    if (s == "lam1") return TwistLabel::Lam1;
    if (s == "lam2") return TwistLabel::Lam2;
    if (s == "lam3") return TwistLabel::Lam3;
    throw DomainError("unknown twist: '" + s + "'");
}

LatticeLabel lattice_from_name(const std::string& s) {
    if (s == "P") return LatticeLabel::P;
    if (s == "L1") return LatticeLabel::L1;
    if (s == "Q") return LatticeLabel::Q;
    throw DomainError("unknown lattice: '" + s + "'");
}

const WeightVector& fundamental_weight(int j) {
    static const WeightVector lam1{{rational_of(3, 4), rational_of(1, 2), rational_of(1, 4)}};
    static const WeightVector lam2{{rational_of(1, 2), rational_of(1), rational_of(1, 2)}};
    static const WeightVector lam3{{rational_of(1, 4), rational_of(1, 2), rational_of(3, 4)}};
    switch (j) {
        case 1: return lam1;
        case 2: return lam2;
        case 3: return lam3;
        default: throw DomainError("fundamental_weight: j must be 1..3");
    }
}

const WeightVector& simple_root(int j) {
    static const WeightVector a1{{rational_of(1), rational_of(0), rational_of(0)}};
    static const WeightVector a2{{rational_of(0), rational_of(1), rational_of(0)}};
    static const WeightVector a3{{rational_of(0), rational_of(0), rational_of(1)}};
    switch (j) {
        case 1: return a1;
        case 2: return a2;
        case 3: return a3;
        default: throw DomainError("simple_root: j must be 1..3");
    }
}

WeightVector rho_weight() {
    WeightVector r;
    for (int i = 0; i < 3; ++i)
        r.coords[i] = fundamental_weight(1).coords[i] + fundamental_weight(2).coords[i] +
                      fundamental_weight(3).coords[i];
    return r;
}

Rational pairing(TwistLabel coweight, const WeightVector& w) {
    switch (coweight) {
        case TwistLabel::Zero: return Rational(0);
        case TwistLabel::Lam1: return w.coords[0];
        case TwistLabel::Lam2: return w.coords[1];
        default: return w.coords[2];
    }
}

int twist_exponent(TwistLabel t, long m1, long m2, long m3) {
    long e;
    switch (t) {
        case TwistLabel::Zero: e = 0; break;
        case TwistLabel::Lam1: e = 3 * m1 + 2 * m2 + m3; break;
        case TwistLabel::Lam2: e = 2 * m1 + 2 * m3; break;
        default: e = m1 + 2 * m2 + 3 * m3; break;
    }
    return static_cast<int>(((e % 4) + 4) % 4);
}

Gaussian twist_phase(TwistLabel t, long m1, long m2, long m3) {
    return Gaussian::i_pow(twist_exponent(t, m1, m2, m3));
}

bool lattice_member(LatticeLabel l, long m1, long m2, long m3) {
    switch (l) {
        case LatticeLabel::P: return true;
        case LatticeLabel::L1: return ((m1 - m3) % 2) == 0;
        default: return ((m1 + 2 * m2 + 3 * m3) % 4 + 4) % 4 == 2;
    }
}

TwistLabel sigma_twist(TwistLabel t) {
    switch (t) {
        case TwistLabel::Lam1: return TwistLabel::Lam3;
        case TwistLabel::Lam3: return TwistLabel::Lam1;
        default: return t;
    }
}

} // namespace latzeta
