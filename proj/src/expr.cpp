#include "latzeta/expr.hpp"

#include <algorithm>
#include <sstream>

#include "latzeta/closed_forms.hpp"

namespace latzeta {

std::string family_name(Family f) {
    return f == Family::Zeta ? "zeta" : "L4";
}

void ConstMonomial::sort_factors() {
    std::sort(factors.begin(), factors.end());
}

ConstantExpression ConstantExpression::constant(const Gaussian& c) {
    ConstantExpression e;
    e.add_term(ConstMonomial{}, c);
    return e;
}

ConstantExpression ConstantExpression::monomial(const Gaussian& c, const ConstMonomial& m) {
    ConstantExpression e;
    ConstMonomial mm = m;
    mm.sort_factors();
    e.add_term(mm, c);
    return e;
}

void ConstantExpression::add_term(const ConstMonomial& m, const Gaussian& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

ConstantExpression& ConstantExpression::operator+=(const ConstantExpression& o) {
    for (const auto& [m, c] : o.terms) add_term(m, c);
    return *this;
}

ConstantExpression& ConstantExpression::operator-=(const ConstantExpression& o) {
    for (const auto& [m, c] : o.terms) add_term(m, -c);
    return *this;
}

ConstantExpression operator*(const ConstantExpression& a, const ConstantExpression& b) {
    ConstantExpression r;
    for (const auto& [ma, ca] : a.terms) {
        for (const auto& [mb, cb] : b.terms) {
            ConstMonomial m;
            m.pi_pow = ma.pi_pow + mb.pi_pow;
            m.factors = ma.factors;
            m.factors.insert(m.factors.end(), mb.factors.begin(), mb.factors.end());
            m.sort_factors();
            r.add_term(m, ca * cb);
        }
    }
    return r;
}

ConstantExpression ConstantExpression::operator*(const Gaussian& s) const {
    ConstantExpression r;
    for (const auto& [m, c] : terms) r.add_term(m, c * s);
    return r;
}

ConstantExpression ConstantExpression::conj_map() const {
    ConstantExpression r;
    for (const auto& [m, c] : terms) r.add_term(m, c.conj());
    return r;
}

ConstantExpression ConstantExpression::normalized() const {
    ConstantExpression r;
    for (const auto& [m, c] : terms) {
        ConstMonomial nm;
        nm.pi_pow = m.pi_pow;
        Gaussian coeff = c;
        for (const auto& [fam, arg] : m.factors) {
            if (fam == Family::Zeta && arg % 2 == 0) {
                coeff = coeff * zeta_even_rational(arg);
                nm.pi_pow += arg;
            } else if (fam == Family::L4 && arg % 2 == 1) {
                coeff = coeff * l4_odd_rational(arg);
                nm.pi_pow += arg;
            } else {
                nm.factors.emplace_back(fam, arg);
            }
        }
        nm.sort_factors();
        r.add_term(nm, coeff);
    }
    return r;
}

bool ConstantExpression::is_pure_pi_power() const {
    ConstantExpression n = normalized();
    for (const auto& [m, c] : n.terms) {
        if (!m.factors.empty()) return false;
        if (!c.is_real()) return false;
    }
    return true;
}

bool ConstantExpression::equals_normalized(const ConstantExpression& o) const {
    return normalized().terms == o.normalized().terms;
}

std::string ConstantExpression::render() const {
    if (terms.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms) {
        if (!first) out << " + ";
        first = false;
        out << "(" << to_string(c) << ")";
        if (m.pi_pow != 0) out << "*pi^" << m.pi_pow;
        for (const auto& [fam, arg] : m.factors)
            out << "*" << family_name(fam) << "(" << arg << ")";
    }
    return out.str();
}

SymbolicCoefficient SymbolicCoefficient::constant(const Gaussian& c) {
    return term(c, 0, 0);
}

SymbolicCoefficient SymbolicCoefficient::term(const Gaussian& c, int pi_pow, int u_pow) {
    SymbolicCoefficient s;
    s.add_term(pi_pow, u_pow, c);
    return s;
}

void SymbolicCoefficient::add_term(int pi_pow, int u_pow, const Gaussian& c) {
    if (c.is_zero()) return;
    auto key = std::make_pair(pi_pow, u_pow);
    auto [it, inserted] = terms.emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

SymbolicCoefficient& SymbolicCoefficient::operator+=(const SymbolicCoefficient& o) {
    for (const auto& [k, c] : o.terms) add_term(k.first, k.second, c);
    return *this;
}

SymbolicCoefficient operator*(const SymbolicCoefficient& a, const SymbolicCoefficient& b) {
    SymbolicCoefficient r;
    for (const auto& [ka, ca] : a.terms)
        for (const auto& [kb, cb] : b.terms)
            r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return r;
}

SymbolicCoefficient SymbolicCoefficient::operator*(const Gaussian& s) const {
    SymbolicCoefficient r;
    for (const auto& [k, c] : terms) r.add_term(k.first, k.second, c * s);
    return r;
}

SymbolicCoefficient SymbolicCoefficient::conj_map() const {
    SymbolicCoefficient r;
    for (const auto& [k, c] : terms) r.add_term(k.first, k.second, c.conj());
    return r;
}

bool SymbolicCoefficient::all_real() const {
    for (const auto& [k, c] : terms)
        if (!c.is_real()) return false;
    return true;
}

std::string SymbolicCoefficient::render() const {
    if (terms.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [k, c] : terms) {
        if (!first) out << " + ";
        first = false;
        out << "(" << to_string(c) << ")";
        if (k.first != 0) out << "*pi^" << k.first;
        if (k.second != 0) out << "*u^" << k.second;
    }
    return out.str();
}

ShiftedCombination ShiftedCombination::single(Family f, int shift, const SymbolicCoefficient& c) {
    ShiftedCombination s;
    s.add_term(f, shift, c);
    return s;
}

void ShiftedCombination::add_term(Family f, int shift, const SymbolicCoefficient& c) {
    if (c.is_zero()) return;
    auto key = std::make_pair(f, shift);
    auto [it, inserted] = terms.emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

ShiftedCombination& ShiftedCombination::operator+=(const ShiftedCombination& o) {
    for (const auto& [k, c] : o.terms) add_term(k.first, k.second, c);
    return *this;
}

ShiftedCombination& ShiftedCombination::operator-=(const ShiftedCombination& o) {
    for (const auto& [k, c] : o.terms) add_term(k.first, k.second, c * Gaussian(-1));
    return *this;
}

ShiftedCombination ShiftedCombination::operator*(const Gaussian& s) const {
    ShiftedCombination r;
    for (const auto& [k, c] : terms) r.add_term(k.first, k.second, c * s);
    return r;
}

ShiftedCombination ShiftedCombination::operator*(const SymbolicCoefficient& s) const {
    ShiftedCombination r;
    for (const auto& [k, c] : terms) r.add_term(k.first, k.second, c * s);
    return r;
}

ShiftedCombination ShiftedCombination::conj_map() const {
    ShiftedCombination r;
    for (const auto& [k, c] : terms) r.add_term(k.first, k.second, c.conj_map());
    return r;
}

bool ShiftedCombination::all_real() const {
    for (const auto& [k, c] : terms)
        if (!c.all_real()) return false;
    return true;
}

ShiftedCombination ShiftedCombination::pruned() const {
    ShiftedCombination r;
    for (const auto& [k, c] : terms)
        if (!c.is_zero()) r.terms.emplace(k, c);
    return r;
}

bool ShiftedCombination::operator==(const ShiftedCombination& o) const {
    return pruned().terms == o.pruned().terms;
}

std::string ShiftedCombination::render() const {
    if (terms.empty()) return "0";
    // deterministic order: ascending shift, zeta before L4
    std::vector<std::pair<std::pair<int, int>, const SymbolicCoefficient*>> order;
    for (const auto& [k, c] : terms)
        order.push_back({{k.second, k.first == Family::Zeta ? 0 : 1}, &c});
    std::sort(order.begin(), order.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::ostringstream out;
    bool first = true;
    for (const auto& [k, c] : order) {
        if (!first) out << " + ";
        first = false;
        out << "[" << c->render() << "]*" << (k.second == 0 ? "zeta" : "L4") << "(s";
        if (k.first != 0) out << "+" << k.first;
        out << ")";
    }
    return out.str();
}

} // namespace latzeta
