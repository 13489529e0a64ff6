#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "latzeta/errors.hpp"

namespace latzeta {

// Exact rational, always canonical (lowest terms, positive denominator).
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rational_of(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Parses "n", "n/d" or decimal-free signed integer strings.
Rational rational_from_string(const std::string& text);

std::string to_string(const Rational& q);

// 2^e for any integer e (negative exponents give exact dyadic fractions).
Rational pow2(long e);

Rational pow_rational(const Rational& base, unsigned long e);

// Exact binomial coefficient; zero outside 0 <= k <= n.
Integer binomial(long n, long k);

// a(a-1)...(a-k+1)/k! for integer a (may be negative), exact.
Rational falling_binomial(long a, long k);

/**
 * Element of Q(i): exact complex rational arithmetic.  Carries the fourth
 * roots of unity that appear as lattice twist phases and the imaginary
 * parts of Lerch-type constants.
 */
struct Gaussian {
    Rational re;
    Rational im;

    Gaussian() : re(0), im(0) {}
    Gaussian(const Rational& r) : re(r), im(0) {}
    Gaussian(long r) : re(r), im(0) {}
    Gaussian(const Rational& r, const Rational& i) : re(r), im(i) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    Gaussian conj() const { return Gaussian(re, Rational(-im)); }

    Gaussian operator-() const { return Gaussian(Rational(-re), Rational(-im)); }

    Gaussian& operator+=(const Gaussian& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    Gaussian& operator-=(const Gaussian& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    Gaussian& operator*=(const Gaussian& o) {
        Rational r = re * o.re - im * o.im;
        Rational i = re * o.im + im * o.re;
        re = r;
        im = i;
        return *this;
    }

    friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
    friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
    friend Gaussian operator*(Gaussian a, const Gaussian& b) { return a *= b; }
    friend bool operator==(const Gaussian& a, const Gaussian& b) {
        return a.re == b.re && a.im == b.im;
    }

    Gaussian operator*(const Rational& s) const { return Gaussian(re * s, im * s); }

    // i^e for any integer e.
    static Gaussian i_pow(long e) {
        switch (((e % 4) + 4) % 4) {
            case 0: return Gaussian(1);
            case 1: return Gaussian(Rational(0), Rational(1));
            case 2: return Gaussian(-1);
            default: return Gaussian(Rational(0), Rational(-1));
        }
    }
};

std::string to_string(const Gaussian& g);

} // namespace latzeta
