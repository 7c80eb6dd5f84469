#pragma once

// Deterministic random expression generators shared by the property tests
// and the acceptance suite. The harmonic-polynomial builder is a brute-force
// binomial oracle independent of the engine's calculus.

#include <cstdint>
#include <random>
#include <vector>

#include "xde/calculus.hpp"
#include "xde/expr.hpp"
#include "xde/normalize.hpp"

namespace gen {

using Rng = std::mt19937;

inline int rint(Rng& g, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(g);
}

inline xde::Rational rcoeff(Rng& g) {
    int n = 0;
    while (n == 0) n = rint(g, -5, 5);
    return xde::Rational(n, rint(g, 1, 3));
}

// ---- binomial oracle ------------------------------------------------------

inline std::vector<std::vector<std::int64_t>> pascal(int n) {
    std::vector<std::vector<std::int64_t>> c(n + 1);
    for (int i = 0; i <= n; ++i) {
        c[i].assign(i + 1, 1);
        for (int k = 1; k < i; ++k) c[i][k] = c[i - 1][k - 1] + c[i - 1][k];
    }
    return c;
}

// Re((x+iy)^n) and Im((x+iy)^n) expanded term by term.
inline xde::Expr harmonic_part(int n, bool imaginary) {
    auto c = pascal(n);
    std::vector<xde::Expr> terms;
    for (int k = 0; k <= n; ++k) {
        bool odd = k % 2 != 0;
        if (odd != imaginary) continue;
        // i^k cycles 1, i, -1, -i
        std::int64_t sign = (k % 4 < 2) ? 1 : -1;
        std::vector<xde::Expr> fs{xde::Expr::constant(xde::Rational(sign * c[n][k]))};
        if (n - k > 0) fs.push_back(xde::Expr::power(xde::Expr::variable(xde::Var::X), n - k));
        if (k > 0) fs.push_back(xde::Expr::power(xde::Expr::variable(xde::Var::Y), k));
        terms.push_back(xde::Expr::product(std::move(fs)));
    }
    if (terms.empty()) return xde::Expr::constant(xde::Rational(0));
    return xde::Expr::sum(std::move(terms));
}

// Random harmonic polynomial up to the given degree: a linear combination of
// Re/Im parts of (x+iy)^n with small rational coefficients.
inline xde::Expr gen_harmonic_poly(Rng& g, int max_deg = 5) {
    std::vector<xde::Expr> parts;
    for (int n = 1; n <= max_deg; ++n) {
        if (rint(g, 0, 2) == 0)
            parts.push_back(xde::Expr::product(
                {xde::Expr::constant(rcoeff(g)), harmonic_part(n, false)}));
        if (rint(g, 0, 2) == 0)
            parts.push_back(xde::Expr::product(
                {xde::Expr::constant(rcoeff(g)), harmonic_part(n, true)}));
    }
    if (parts.empty()) parts.push_back(harmonic_part(1 + rint(g, 0, max_deg - 1), rint(g, 0, 1)));
    return xde::normalize(xde::Expr::sum(std::move(parts)));
}

// ---- general expression trees --------------------------------------------

inline xde::Expr gen_expr(Rng& g, int depth) {
    if (depth <= 0) {
        switch (rint(g, 0, 3)) {
        case 0: return xde::Expr::constant(rcoeff(g));
        case 1: return xde::Expr::constant(xde::Rational(rint(g, -3, 3)));
        case 2: return xde::Expr::variable(xde::Var::X);
        default: return xde::Expr::variable(xde::Var::Y);
        }
    }
    switch (rint(g, 0, 8)) {
    case 0: {
        std::vector<xde::Expr> ts;
        int n = rint(g, 2, 3);
        for (int i = 0; i < n; ++i) ts.push_back(gen_expr(g, depth - 1));
        return xde::Expr::sum(std::move(ts));
    }
    case 1: {
        std::vector<xde::Expr> fs;
        int n = rint(g, 2, 3);
        for (int i = 0; i < n; ++i) fs.push_back(gen_expr(g, depth - 1));
        return xde::Expr::product(std::move(fs));
    }
    case 2: return xde::Expr::power(gen_expr(g, depth - 2), rint(g, -2, 3));
    case 3: return xde::Expr::sin(gen_expr(g, depth - 2));
    case 4: return xde::Expr::cos(gen_expr(g, depth - 2));
    case 5: return xde::Expr::exp(gen_expr(g, depth - 2));
    case 6:
        // keep ln arguments positive on the sampling square
        return xde::Expr::ln(xde::Expr::sum(
            {xde::Expr::constant(xde::Rational(rint(g, 1, 4))),
             xde::Expr::power(xde::Expr::variable(rint(g, 0, 1) ? xde::Var::X : xde::Var::Y),
                              2)}));
    case 7: return xde::Expr::neg(gen_expr(g, depth - 1));
    default: return gen_expr(g, 0);
    }
}

// ---- integrable-class expressions ----------------------------------------

// L = a*x + b*y + c with small integer coefficients.
inline xde::Expr gen_linear(Rng& g, bool& nonzero_x, bool& nonzero_y) {
    int a = rint(g, -2, 2), b = rint(g, -2, 2), c = rint(g, -1, 1);
    if (a == 0 && b == 0) a = 1;
    nonzero_x = a != 0;
    nonzero_y = b != 0;
    std::vector<xde::Expr> ts;
    if (a != 0)
        ts.push_back(xde::Expr::product(
            {xde::Expr::constant(xde::Rational(a)), xde::Expr::variable(xde::Var::X)}));
    if (b != 0)
        ts.push_back(xde::Expr::product(
            {xde::Expr::constant(xde::Rational(b)), xde::Expr::variable(xde::Var::Y)}));
    if (c != 0) ts.push_back(xde::Expr::constant(xde::Rational(c)));
    return ts.size() == 1 ? ts[0] : xde::Expr::sum(std::move(ts));
}

// One term of the integrable class: c * x^m * y^n * T(L),
// T in {1, sin, cos, exp}; occasionally a reciprocal power instead.
inline xde::Expr gen_integrable_term(Rng& g) {
    std::vector<xde::Expr> fs{xde::Expr::constant(rcoeff(g))};
    int pick = rint(g, 0, 9);
    if (pick == 0) {
        fs.push_back(xde::Expr::power(
            xde::Expr::variable(rint(g, 0, 1) ? xde::Var::X : xde::Var::Y), -rint(g, 1, 2)));
    } else {
        int m = rint(g, 0, 3), n = rint(g, 0, 3);
        if (m == 1)
            fs.push_back(xde::Expr::variable(xde::Var::X));
        else if (m > 1)
            fs.push_back(xde::Expr::power(xde::Expr::variable(xde::Var::X), m));
        if (n == 1)
            fs.push_back(xde::Expr::variable(xde::Var::Y));
        else if (n > 1)
            fs.push_back(xde::Expr::power(xde::Expr::variable(xde::Var::Y), n));
        int t = rint(g, 0, 3);
        if (t > 0) {
            bool nx, ny;
            xde::Expr L = gen_linear(g, nx, ny);
            fs.push_back(t == 1 ? xde::Expr::sin(L)
                                : t == 2 ? xde::Expr::cos(L) : xde::Expr::exp(L));
        }
    }
    return xde::Expr::product(std::move(fs));
}

inline xde::Expr gen_integrable(Rng& g) {
    std::vector<xde::Expr> ts;
    int n = rint(g, 1, 4);
    for (int i = 0; i < n; ++i) ts.push_back(gen_integrable_term(g));
    return xde::Expr::sum(std::move(ts));
}

// ---- polynomials ----------------------------------------------------------

inline xde::Expr gen_polynomial(Rng& g, int max_deg = 4) {
    std::vector<xde::Expr> ts;
    int n = rint(g, 1, 5);
    for (int i = 0; i < n; ++i) {
        std::vector<xde::Expr> fs{xde::Expr::constant(xde::Rational(rint(g, 1, 4)))};
        int m = rint(g, 0, max_deg);
        int k = rint(g, 0, max_deg - m);
        if (m > 0) fs.push_back(xde::Expr::power(xde::Expr::variable(xde::Var::X), m));
        if (k > 0) fs.push_back(xde::Expr::power(xde::Expr::variable(xde::Var::Y), k));
        if (rint(g, 0, 1)) fs[0] = xde::Expr::neg(fs[0]);
        ts.push_back(xde::Expr::product(std::move(fs)));
    }
    return xde::Expr::sum(std::move(ts));
}

// Non-harmonic polynomial (rejection with a quadratic nudge as fallback).
inline xde::Expr gen_nonharmonic_poly(Rng& g, int max_deg = 4) {
    for (int tries = 0; tries < 16; ++tries) {
        xde::Expr u = gen_polynomial(g, max_deg);
        if (!xde::is_harmonic(u)) return u;
    }
    return xde::Expr::sum({gen_polynomial(g, max_deg),
                           xde::Expr::power(xde::Expr::variable(xde::Var::X), 2)});
}

} // namespace gen
