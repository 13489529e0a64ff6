#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "latzeta/rational.hpp"

namespace latzeta {

// The two symbolic constant families kept unreduced: zeta(n) for odd n >= 3
// and L(n,chi4) for even n >= 2.  Everything else reduces to powers of pi.
enum class Family { Zeta, L4 };

std::string family_name(Family f);

/**
 * pi^a * prod zeta(n_i) * prod L(m_j,chi4), the monomial unit of constant
 * expressions.  Factors are kept sorted; the normalized form contains no
 * even-argument zeta and no odd-argument L4 factor.
 */
struct ConstMonomial {
    int pi_pow = 0;
    std::vector<std::pair<Family, int>> factors;

    void sort_factors();
    auto operator<=>(const ConstMonomial&) const = default;
};

/**
 * Exact linear combination of ConstMonomials over Q(i): the output form of
 * every special-value formula.
 */
class ConstantExpression {
public:
    std::map<ConstMonomial, Gaussian> terms;

    ConstantExpression() = default;
    static ConstantExpression constant(const Gaussian& c);
    static ConstantExpression monomial(const Gaussian& c, const ConstMonomial& m);

    bool is_zero() const { return terms.empty(); }
    void add_term(const ConstMonomial& m, const Gaussian& c);

    ConstantExpression& operator+=(const ConstantExpression& o);
    ConstantExpression& operator-=(const ConstantExpression& o);
    friend ConstantExpression operator+(ConstantExpression a, const ConstantExpression& b) { return a += b; }
    friend ConstantExpression operator-(ConstantExpression a, const ConstantExpression& b) { return a -= b; }
    friend ConstantExpression operator*(const ConstantExpression& a, const ConstantExpression& b);

    ConstantExpression operator*(const Gaussian& s) const;
    ConstantExpression conj_map() const;

    // Reduces even-zeta / odd-L4 factors to pi powers; idempotent.
    ConstantExpression normalized() const;

    // True when the normalized form is c * pi^k with real c (no symbolic factors).
    bool is_pure_pi_power() const;

    bool equals_normalized(const ConstantExpression& o) const;

    std::string render() const;
};

/**
 * Polynomial in u = 2^{-s} and pi with Gaussian coefficients; the
 * coefficient ring of s-parameterized relation right-hand sides.
 */
class SymbolicCoefficient {
public:
    // (pi_pow, u_pow) -> coefficient
    std::map<std::pair<int, int>, Gaussian> terms;

    SymbolicCoefficient() = default;
    static SymbolicCoefficient constant(const Gaussian& c);
    static SymbolicCoefficient term(const Gaussian& c, int pi_pow, int u_pow);

    bool is_zero() const { return terms.empty(); }
    void add_term(int pi_pow, int u_pow, const Gaussian& c);

    SymbolicCoefficient& operator+=(const SymbolicCoefficient& o);
    friend SymbolicCoefficient operator+(SymbolicCoefficient a, const SymbolicCoefficient& b) { return a += b; }
    friend SymbolicCoefficient operator*(const SymbolicCoefficient& a, const SymbolicCoefficient& b);
    SymbolicCoefficient operator*(const Gaussian& s) const;

    SymbolicCoefficient conj_map() const;
    bool all_real() const;
    bool operator==(const SymbolicCoefficient& o) const { return terms == o.terms; }

    std::string render() const;
};

/**
 * Linear combination of zeta(s+k) and L(s+k,chi4) with SymbolicCoefficient
 * coefficients: the symbolic-in-s output form of the functional relations.
 */
class ShiftedCombination {
public:
    // (family, shift) -> coefficient polynomial
    std::map<std::pair<Family, int>, SymbolicCoefficient> terms;

    ShiftedCombination() = default;
    static ShiftedCombination single(Family f, int shift, const SymbolicCoefficient& c);

    bool is_zero() const { return terms.empty(); }
    void add_term(Family f, int shift, const SymbolicCoefficient& c);

    ShiftedCombination& operator+=(const ShiftedCombination& o);
    ShiftedCombination& operator-=(const ShiftedCombination& o);
    friend ShiftedCombination operator+(ShiftedCombination a, const ShiftedCombination& b) { return a += b; }
    friend ShiftedCombination operator-(ShiftedCombination a, const ShiftedCombination& b) { return a -= b; }

    ShiftedCombination operator*(const Gaussian& s) const;
    ShiftedCombination operator*(const SymbolicCoefficient& s) const;

    ShiftedCombination conj_map() const;
    bool all_real() const;

    // Drops zero coefficient polynomials; coefficients themselves are kept exact.
    ShiftedCombination pruned() const;

    bool operator==(const ShiftedCombination& o) const;

    std::string render() const;
};

} // namespace latzeta
