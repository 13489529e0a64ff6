#include "latzeta/json_io.hpp"

#include <fstream>

#include "latzeta/errors.hpp"

namespace latzeta {

json to_json(const Gaussian& g) {
    return json{{"re", to_string(g.re)}, {"im", to_string(g.im)}};
}

Gaussian gaussian_from_json(const json& j) {
    return Gaussian(rational_from_string(j.at("re").get<std::string>()),
                    rational_from_string(j.at("im").get<std::string>()));
}

json to_json(const ConstantExpression& e) {
    json terms = json::array();
    for (const auto& [m, c] : e.terms) {
        json factors = json::array();
        for (const auto& [fam, arg] : m.factors)
            factors.push_back(json{{"family", family_name(fam)}, {"arg", arg}});
        terms.push_back(json{{"coeff", to_json(c)}, {"pi_pow", m.pi_pow}, {"factors", factors}});
    }
    return json{{"terms", terms}};
}

ConstantExpression constant_expression_from_json(const json& j) {
    ConstantExpression e;
    for (const auto& t : j.at("terms")) {
        ConstMonomial m;
        m.pi_pow = t.at("pi_pow").get<int>();
        for (const auto& f : t.at("factors")) {
            std::string fam = f.at("family").get<std::string>();
            m.factors.emplace_back(fam == "zeta" ? Family::Zeta : Family::L4,
                                   f.at("arg").get<int>());
        }
        m.sort_factors();
        e.add_term(m, gaussian_from_json(t.at("coeff")));
    }
    return e;
}

json to_json(const SymbolicCoefficient& c) {
    json arr = json::array();
    for (const auto& [k, g] : c.terms) {
        json t = to_json(g);
        t["pi_pow"] = k.first;
        t["u_pow"] = k.second;
        arr.push_back(t);
    }
    return arr;
}

json to_json(const ShiftedCombination& c) {
    json terms = json::array();
    for (const auto& [k, coeff] : c.terms)
        terms.push_back(json{{"family", family_name(k.first)},
                             {"shift", k.second},
                             {"coeff", to_json(coeff)}});
    return json{{"terms", terms}};
}

ShiftedCombination shifted_combination_from_json(const json& j) {
    ShiftedCombination c;
    for (const auto& t : j.at("terms")) {
        std::string fam = t.at("family").get<std::string>();
        SymbolicCoefficient sc;
        for (const auto& u : t.at("coeff"))
            sc.add_term(u.at("pi_pow").get<int>(), u.at("u_pow").get<int>(),
                        gaussian_from_json(u));
        c.add_term(fam == "zeta" ? Family::Zeta : Family::L4, t.at("shift").get<int>(), sc);
    }
    return c;
}

json to_json(const NumericValue& v) {
    return json{{"value", json{{"re", v.value.re.to_string()}, {"im", v.value.im.to_string()}}},
                {"tail_bound", v.tail_bound.to_string(8)},
                {"rounding_slack", v.rounding_slack.to_string(8)}};
}

json to_json(const VerificationReport& r) {
    const char* verdict = r.verdict == Verdict::Passed
                              ? "passed"
                              : (r.verdict == Verdict::Degenerate ? "degenerate" : "failed");
    return json{{"theorem", theorem_name(r.theorem)},
                {"params", json{{"p", r.params.p},
                                {"q", r.params.q},
                                {"a", r.params.a},
                                {"b", r.params.b},
                                {"c", r.params.c}}},
                {"s", r.s_value},
                {"lhs", to_json(r.lhs)},
                {"rhs", to_json(r.rhs)},
                {"residual", r.residual},
                {"tolerance", r.tolerance},
                {"passed", r.passed},
                {"verdict", verdict}};
}

json make_report(const std::string& command, const json& inputs, const json& result,
                 const std::string& error_bound, long duration_ms) {
    return json{{"version", "1.0.0"},
                {"command", command},
                {"inputs", inputs},
                {"result", result},
                {"error_bound", error_bound},
                {"duration_ms", duration_ms}};
}

void write_json_file(const json& doc, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw DomainError("cannot open for writing: " + path);
    out << doc.dump(2) << "\n";
    if (!out) throw DomainError("write failed: " + path);
}

} // namespace latzeta
