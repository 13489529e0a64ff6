#pragma once

#include <optional>

#include "latzeta/expr.hpp"
#include "latzeta/hurwitz.hpp"
#include "latzeta/series.hpp"

namespace latzeta {

// phi(s+k) = (2^{1-k} u - 1) zeta(s+k), u = 2^{-s}
ShiftedCombination phi_reduce(int shift);

// phi(s+k; +-1/4) = (2^{1-2k} u^2 - 2^{-k} u) zeta(s+k) +- i L(s+k, chi4)
ShiftedCombination phi_quarter_reduce(int shift, int sign);

// Lambda(l; +-i): even l = 2k -> 2^{1-2k}(2^{1-2k}-1) zeta(2k) as a pi-power
// (l = 0 -> -1); odd l -> +-2i L(l, chi4).
ConstantExpression lambda_value(long l, int sign);

// Closed form of T(p, s+a, q; x, y) reduced to the zeta/L4 basis.  The ten
// supported (x,y) pairs are exactly those the relations need.
ShiftedCombination t_closed(long p, int s_shift, long q, Root4 x, Root4 y);

// Substitutes u = 2^{-s0} and reduces even zeta / odd L4 arguments; keeps
// odd zeta >= 3 and even L4 >= 2 symbolic.
ConstantExpression specialize(const ShiftedCombination& c, long s0);

NumericValue expr_eval_numeric(const ConstantExpression& e, const Precision& prec);
NumericValue expr_eval_numeric(const ShiftedCombination& c, double s0, const Precision& prec);

} // namespace latzeta
