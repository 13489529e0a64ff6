#pragma once

#include "latzeta/expr.hpp"
#include "latzeta/rational.hpp"

namespace latzeta {

// zeta(n)/pi^n for even n >= 2, via zeta(2k) = (-1)^{k+1} B_{2k} (2pi)^{2k} / (2 (2k)!).
Rational zeta_even_rational(long n);

// L(n,chi4)/pi^n for odd n >= 1, via L(2k+1,chi4) = (-1)^k E_{2k} pi^{2k+1} / (4^{k+1} (2k)!).
Rational l4_odd_rational(long n);

// phi(n)/pi^n for even n >= 0, phi(s) = (2^{1-s}-1) zeta(s); phi(0) = -1/2.
Rational phi_even_rational(long n);

// zeta(n) as rational * pi^n for even n >= 2; zeta(0) = -1/2.  Odd or negative n rejected.
ConstantExpression zeta_even_closed(long n);

// L(n,chi4) as rational * pi^n for odd n >= 1.  Even n rejected (kept symbolic by callers).
ConstantExpression l4_odd_closed(long n);

} // namespace latzeta
