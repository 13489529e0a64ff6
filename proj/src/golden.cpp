#include "latzeta/golden.hpp"

#include <cstdlib>
#include <fstream>
#include <mutex>

#include "json.hpp"

#include "latzeta/closed_forms.hpp"
#include "latzeta/errors.hpp"

namespace latzeta {

namespace {

using nlohmann::json;

std::mutex mu;
json table;
bool loaded = false;

const json& golden_table() {
    std::lock_guard<std::mutex> lock(mu);
    if (!loaded) {
        std::ifstream in(golden_data_dir() + "/golden_values.json");
        if (!in) throw DomainError("golden table not found under " + golden_data_dir());
        in >> table;
        loaded = true;
    }
    return table;
}

} // namespace

std::string golden_data_dir() {
    if (const char* env = std::getenv("LATZETA_DATA")) return env;
#ifdef LATZETA_DATA_DIR
    return LATZETA_DATA_DIR;
#else
    return "data";
#endif
}

ConstantExpression golden_value(const std::string& key) {
    const json& t = golden_table().at("values").at(key);
    ConstantExpression e;
    for (const auto& term : t.at("terms")) {
        ConstMonomial m;
        m.pi_pow = term.value("pi", 0);
        if (term.contains("zeta")) m.factors.emplace_back(Family::Zeta, term.at("zeta").get<int>());
        if (term.contains("L4")) m.factors.emplace_back(Family::L4, term.at("L4").get<int>());
        m.sort_factors();
        e.add_term(m, Gaussian(rational_from_string(term.at("c").get<std::string>())));
    }
    return e;
}

ShiftedCombination golden_relation(const std::string& key) {
    const json& t = golden_table().at("relations").at(key);
    ShiftedCombination out;
    for (const auto& term : t.at("terms")) {
        Family fam = term.at("family").get<std::string>() == "zeta" ? Family::Zeta : Family::L4;
        int shift = term.at("shift").get<int>();
        SymbolicCoefficient coeff = SymbolicCoefficient::constant(Gaussian(1));
        for (const auto& factor : term.at("ufactors")) {
            SymbolicCoefficient f;
            for (const auto& mono : factor)
                f.add_term(0, mono.at("u").get<int>(),
                           Gaussian(rational_from_string(mono.at("c").get<std::string>())));
            coeff = coeff * f;
        }
        int pi_pow = term.value("pi", 0);
        if (term.contains("zeta_const")) {
            int arg = term.at("zeta_const").get<int>();
            coeff = coeff * SymbolicCoefficient::term(Gaussian(zeta_even_rational(arg)), arg, 0);
        } else if (pi_pow != 0) {
            coeff = coeff * SymbolicCoefficient::term(Gaussian(1), pi_pow, 0);
        }
        out.add_term(fam, shift, coeff);
    }
    return out.pruned();
}

std::vector<std::string> golden_value_keys() {
    std::vector<std::string> keys;
    for (const auto& [k, v] : golden_table().at("values").items()) keys.push_back(k);
    return keys;
}

} // namespace latzeta
