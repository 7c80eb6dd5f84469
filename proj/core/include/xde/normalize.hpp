#pragma once

#include <utility>
#include <vector>

#include "xde/expr.hpp"

namespace xde {

// One canonical term: coeff * prod(base_i ^ exp_i). Bases are normalized
// atoms (Variable, Sin, Cos, Exp, Ln, or a Sum kept whole under a negative
// power); exponents are nonzero integers; factors are sorted by compare().
struct Term {
    Rational coeff;
    std::vector<std::pair<Expr, int>> factors;
};

// Canonical decomposition of normalize(e) as an ordered term list.
// A constant expression yields a single factorless term (or nothing for 0).
std::vector<Term> normal_terms(const Expr& e);

// Rebuild an Expr from canonical terms (the inverse of normal_terms).
Expr expr_from_terms(const std::vector<Term>& terms);

// Canonical form: flattened sums/products, constants folded, fixed term
// order, no Neg nodes, no zero terms, no exponent-1 powers. Idempotent.
Expr normalize(const Expr& e);

// normalize(e) == 0, decided purely symbolically.
bool is_zero(const Expr& e);

enum class EquivMethod { Symbolic, Numeric };

struct EquivVerdict {
    bool equal;
    EquivMethod method;
};

// Canonical-form comparison first; if the difference does not normalize to
// zero, falls back to evaluation at 32 pseudorandom points in [-2,2]^2
// (rejecting ln-domain violations) with relative tolerance 1e-9.
// Throws DomainError when no valid sample point exists for both sides.
EquivVerdict equivalence(const Expr& a, const Expr& b);
bool equivalent(const Expr& a, const Expr& b);

// True when e has no occurrence of v.
bool independent_of(const Expr& e, Var v);

} // namespace xde
