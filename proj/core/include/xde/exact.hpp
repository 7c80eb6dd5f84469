#pragma once

#include <string>

#include "xde/calculus.hpp"
#include "xde/expr.hpp"

namespace xde {

// M(x,y) dx + N(x,y) dy = 0, both components normalized.
struct DifferentialForm {
    Expr M;
    Expr N;
};

inline DifferentialForm make_form(const Expr& M, const Expr& N) {
    return {normalize(M), normalize(N)};
}

// A scalar potential whose level family {body = constant} solves a form.
// The body carries no additive constant; the constant is the level value.
struct Potential {
    Expr body;
    std::string constant_label;
};

struct FormReport {
    bool exact = false;
    Expr exactness_witness;      // normalized M_y - N_x
    bool harmonic_admissible = false;
    Expr admissibility_witness;  // normalized M_x + N_y
};

// Exactness test: M_y = N_x. Fills the exactness fields.
FormReport is_exact(const DifferentialForm& form);

// Harmonic-admissibility test: M_x + N_y = 0. Fills the admissibility fields.
FormReport admits_harmonic(const DifferentialForm& form);

// Both tests in one report.
FormReport analyze(const DifferentialForm& form);

// Potential f with f_x = M and f_y = N, built as
// f = int M dx + int [N - d/dy int M dx] dy, constant-free.
// Throws NotExact or UnsupportedIntegral.
Potential solve_exact(const DifferentialForm& form);

// Harmonic conjugate g of the form's potential:
//   A = int M dy;  B = N + dA/dx;  g = A - int B dx
// B must be independent of y (guaranteed by harmonicity); a dependent B
// throws IntegrandDependsOnY. Also throws NotExact, NotHarmonicAdmissible,
// UnsupportedIntegral.
Potential harmonic_conjugate(const DifferentialForm& form);

// Diagnostic for the conjugate construction: is d/dy [N + d/dx int M dy]
// identically zero? Coincides with harmonic admissibility.
bool integrand_y_independent(const DifferentialForm& form);

// The conjugate form -N dx + M dy = 0. Exact iff the input admits a
// harmonic solution; always returned, never blocked.
DifferentialForm conjugate_form(const DifferentialForm& form);

// Total-differential form (u_x, u_y); always exact.
DifferentialForm form_from_potential(const Expr& u);

// Cauchy-Riemann check: u_x = v_y and u_y = -v_x.
bool check_cr(const Expr& u, const Expr& v);

} // namespace xde
