#include "xde/exact.hpp"

#include "xde/errors.hpp"

namespace xde {

namespace {

const Expr kZero = Expr::constant(Rational(0));

// Remove the factorless (constant) term from a normalized body.
Expr drop_additive_constant(const Expr& e) {
    std::vector<Term> kept;
    for (const Term& t : normal_terms(e))
        if (!t.factors.empty()) kept.push_back(t);
    return expr_from_terms(kept);
}

// N + d/dx int M dy, the integrand of the conjugate formula.
Expr conjugate_integrand(const DifferentialForm& form) {
    Expr a = antiderivative(form.M, Var::Y).result;
    return normalize(Expr::sum({form.N, diff(a, Var::X)}));
}

} // namespace

FormReport is_exact(const DifferentialForm& form) {
    FormReport r;
    r.exactness_witness =
        normalize(Expr::sum({diff(form.M, Var::Y), Expr::neg(diff(form.N, Var::X))}));
    r.exact = equivalent(r.exactness_witness, kZero);
    return r;
}

FormReport admits_harmonic(const DifferentialForm& form) {
    FormReport r;
    r.admissibility_witness = normalize(Expr::sum({diff(form.M, Var::X), diff(form.N, Var::Y)}));
    r.harmonic_admissible = equivalent(r.admissibility_witness, kZero);
    return r;
}

FormReport analyze(const DifferentialForm& form) {
    FormReport r = is_exact(form);
    FormReport a = admits_harmonic(form);
    r.harmonic_admissible = a.harmonic_admissible;
    r.admissibility_witness = a.admissibility_witness;
    return r;
}

Potential solve_exact(const DifferentialForm& form) {
    FormReport rep = is_exact(form);
    if (!rep.exact)
        throw NotExact("form is not exact: M_y - N_x = " + to_string(rep.exactness_witness));
    Expr fx_part = antiderivative(form.M, Var::X).result;
    // g'(y) = N - d/dy int M dx; x-independent for exact forms
    Expr residual = normalize(Expr::sum({form.N, Expr::neg(diff(fx_part, Var::Y))}));
    Expr body = normalize(Expr::sum({fx_part, antiderivative(residual, Var::Y).result}));
    return {drop_additive_constant(body), "c"};
}

Potential harmonic_conjugate(const DifferentialForm& form) {
    FormReport rep = analyze(form);
    if (!rep.exact)
        throw NotExact("form is not exact: M_y - N_x = " + to_string(rep.exactness_witness));
    if (!rep.harmonic_admissible)
        throw NotHarmonicAdmissible("form has no harmonic solution: M_x + N_y = " +
                                    to_string(rep.admissibility_witness));
    Expr a = antiderivative(form.M, Var::Y).result;
    Expr b = normalize(Expr::sum({form.N, diff(a, Var::X)}));
    if (!is_zero(diff(b, Var::Y)))
        throw IntegrandDependsOnY("conjugate integrand depends on y: " + to_string(b));
    Expr body =
        normalize(Expr::sum({a, Expr::neg(antiderivative(b, Var::X).result)}));
    return {drop_additive_constant(body), "c"};
}

bool integrand_y_independent(const DifferentialForm& form) {
    return equivalent(diff(conjugate_integrand(form), Var::Y), kZero);
}

DifferentialForm conjugate_form(const DifferentialForm& form) {
    return {normalize(Expr::neg(form.N)), normalize(form.M)};
}

DifferentialForm form_from_potential(const Expr& u) {
    return {diff(u, Var::X), diff(u, Var::Y)};
}

bool check_cr(const Expr& u, const Expr& v) {
    return equivalent(diff(u, Var::X), diff(v, Var::Y)) &&
           equivalent(diff(u, Var::Y), normalize(Expr::neg(diff(v, Var::X))));
}

} // namespace xde
