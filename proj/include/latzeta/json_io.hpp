#pragma once

#include <string>

#include "json.hpp"

#include "latzeta/relations.hpp"

namespace latzeta {

using nlohmann::json;

json to_json(const Gaussian& g);
Gaussian gaussian_from_json(const json& j);

json to_json(const ConstantExpression& e);
ConstantExpression constant_expression_from_json(const json& j);

json to_json(const SymbolicCoefficient& c);
json to_json(const ShiftedCombination& c);
ShiftedCombination shifted_combination_from_json(const json& j);

// numbers as decimal strings with explicit error-bound strings
json to_json(const NumericValue& v);

json to_json(const VerificationReport& r);

// top-level report document: {version, command, inputs, result, error_bound, duration_ms}
json make_report(const std::string& command, const json& inputs, const json& result,
                 const std::string& error_bound, long duration_ms);

void write_json_file(const json& doc, const std::string& path);

} // namespace latzeta
