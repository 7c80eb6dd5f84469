#pragma once

#include "xde/expr.hpp"
#include "xde/normalize.hpp"

namespace xde {

struct AntiderivativeResult {
    Expr result;
    Var variable;
};

// Normalized partial derivative; product/chain/power rules recursively.
Expr diff(const Expr& e, Var v);

// Partial antiderivative treating the other variable as constant; no
// integration constant is attached. The integrable class is finite sums of
// c * x^m * y^n * T with T in {1, sin(L), cos(L), exp(L)}, L linear in x and
// y, integrated by table rules and repeated integration by parts; powers of
// linear forms (including exponent -1, which integrates to ln) are handled.
// Throws UnsupportedIntegral naming the offending subterm.
AntiderivativeResult antiderivative(const Expr& e, Var v);

// d2e/dx2 + d2e/dy2, normalized.
Expr laplacian(const Expr& e);

// equivalent(laplacian(e), 0).
bool is_harmonic(const Expr& e);

} // namespace xde
