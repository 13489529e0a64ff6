#pragma once

#include <string>
#include <vector>

#include "latzeta/expr.hpp"

namespace latzeta {

// Loads the reference constants shipped in data/golden_values.json.
// Closed-form values come back as ConstantExpressions; the s-parameterized
// displays come back as ShiftedCombinations with their even-zeta constant
// factors reduced to pi powers.
ConstantExpression golden_value(const std::string& key);
ShiftedCombination golden_relation(const std::string& key);

std::vector<std::string> golden_value_keys();

// directory the golden table is read from (build-tree default, overridable
// through the LATZETA_DATA environment variable)
std::string golden_data_dir();

} // namespace latzeta
