#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "support/generators.hpp"
#include "xde/errors.hpp"
#include "xde/exact.hpp"
#include "xde/parser.hpp"

using namespace xde;

namespace {

DifferentialForm F(const char* m, const char* n) { return make_form(parse(m), parse(n)); }

bool same(const Expr& a, const Expr& b) {
    return is_zero(Expr::sum({a, Expr::neg(b)}));
}

// equality of potentials modulo additive constants: compare gradients
bool same_family(const Expr& a, const Expr& b) {
    Expr d = Expr::sum({a, Expr::neg(b)});
    return is_zero(diff(d, Var::X)) && is_zero(diff(d, Var::Y));
}

} // namespace

TEST_CASE("is_exact") {
    CHECK(is_exact(F("2*x", "-2*y")).exact);
    CHECK(is_exact(F("y", "x")).exact);
    auto rep = is_exact(F("y", "-x"));
    CHECK_FALSE(rep.exact);
    CHECK(same(rep.exactness_witness, parse("2")));
}

TEST_CASE("admits_harmonic") {
    CHECK(admits_harmonic(F("2*x", "-2*y")).harmonic_admissible);
    auto rep = admits_harmonic(F("2*x", "2*y"));
    CHECK_FALSE(rep.harmonic_admissible);
    CHECK(same(rep.admissibility_witness, parse("4")));
    CHECK(admits_harmonic(F("exp(x)*cos(y)", "-exp(x)*sin(y)")).harmonic_admissible);
}

TEST_CASE("solve_exact") {
    CHECK(same(solve_exact(F("2*x", "-2*y")).body, parse("x^2 - y^2")));
    CHECK(same(solve_exact(F("y", "x")).body, parse("x*y")));
    CHECK(same(solve_exact(F("exp(x)*cos(y)", "-exp(x)*sin(y)")).body, parse("exp(x)*cos(y)")));
    CHECK_THROWS_AS(solve_exact(F("y", "-x")), NotExact);
}

TEST_CASE("solve_exact output satisfies the defining gradients") {
    for (auto [m, n] : {std::pair{"2*x", "-2*y"}, {"y", "x"},
                        {"exp(x)*cos(y)", "-exp(x)*sin(y)"},
                        {"3*x^2 - 3*y^2", "-6*x*y"}}) {
        auto form = F(m, n);
        Potential f = solve_exact(form);
        CHECK(same(diff(f.body, Var::X), form.M));
        CHECK(same(diff(f.body, Var::Y), form.N));
        CHECK(f.constant_label == "c");
    }
}

TEST_CASE("harmonic_conjugate on the textbook forms") {
    CHECK(same(harmonic_conjugate(F("2*x", "-2*y")).body, parse("2*x*y")));
    CHECK(same(harmonic_conjugate(F("exp(x)*cos(y)", "-exp(x)*sin(y)")).body,
               parse("exp(x)*sin(y)")));
    // f = xy gives g = (y^2 - x^2)/2
    CHECK(same_family(harmonic_conjugate(F("y", "x")).body, parse("1/2*y^2 - 1/2*x^2")));
}

TEST_CASE("harmonic_conjugate refuses inadmissible or non-exact forms") {
    CHECK_THROWS_AS(harmonic_conjugate(F("y", "-x")), NotExact);
    CHECK_THROWS_AS(harmonic_conjugate(F("2*x", "2*y")), NotHarmonicAdmissible);
}

TEST_CASE("integrand_y_independent") {
    CHECK(integrand_y_independent(F("2*x", "-2*y")));
    CHECK_FALSE(integrand_y_independent(F("2*x", "2*y"))); // integrand 4y
    CHECK(integrand_y_independent(F("y", "x")));
}

TEST_CASE("conjugate_form") {
    auto cf = conjugate_form(F("2*x", "-2*y"));
    CHECK(same(cf.M, parse("2*y")));
    CHECK(same(cf.N, parse("2*x")));

    // double application negates the form
    auto form = F("y", "x");
    auto twice = conjugate_form(conjugate_form(form));
    CHECK(same(twice.M, normalize(Expr::neg(form.M))));
    CHECK(same(twice.N, normalize(Expr::neg(form.N))));

    auto cf2 = conjugate_form(form);
    CHECK(same(cf2.M, parse("-x")));
    CHECK(same(cf2.N, parse("y")));
    CHECK(is_exact(cf2).exact);
    CHECK(admits_harmonic(form).harmonic_admissible);
}

TEST_CASE("form_from_potential") {
    auto f1 = form_from_potential(parse("x^2 - y^2"));
    CHECK(same(f1.M, parse("2*x")));
    CHECK(same(f1.N, parse("-2*y")));
    auto f2 = form_from_potential(parse("x*y"));
    CHECK(same(f2.M, parse("y")));
    CHECK(same(f2.N, parse("x")));
    auto f3 = form_from_potential(parse("x^3 - 3*x*y^2"));
    CHECK(same(f3.M, parse("3*x^2 - 3*y^2")));
    CHECK(same(f3.N, parse("-6*x*y")));
    CHECK(admits_harmonic(f3).harmonic_admissible);
    CHECK(is_exact(f3).exact);
}

TEST_CASE("check_cr") {
    CHECK(check_cr(parse("x^2 - y^2"), parse("2*x*y")));
    CHECK(check_cr(parse("exp(x)*cos(y)"), parse("exp(x)*sin(y)")));
    CHECK_FALSE(check_cr(parse("x"), parse("x")));
}

TEST_CASE("property: conjugates of harmonic potentials satisfy Cauchy-Riemann") {
    gen::Rng rng(4242);
    for (int i = 0; i < 50; ++i) {
        Expr u = gen::gen_harmonic_poly(rng);
        Potential v = harmonic_conjugate(form_from_potential(u));
        CHECK(check_cr(u, v.body));
        // the conjugate of a harmonic function is harmonic
        CHECK(is_harmonic(v.body));
        // conjugate_form commutes with conjugation
        auto cf = conjugate_form(form_from_potential(u));
        auto fv = form_from_potential(v.body);
        CHECK(same(cf.M, fv.M));
        CHECK(same(cf.N, fv.N));
    }
}

TEST_CASE("property: double conjugation negates the potential up to a constant") {
    gen::Rng rng(1111);
    for (int i = 0; i < 30; ++i) {
        Expr u = gen::gen_harmonic_poly(rng);
        Expr v = harmonic_conjugate(form_from_potential(u)).body;
        Expr w = harmonic_conjugate(form_from_potential(v)).body;
        Expr s = Expr::sum({w, u});
        CHECK(is_zero(diff(s, Var::X)));
        CHECK(is_zero(diff(s, Var::Y)));
    }
}

TEST_CASE("property: exactness of the conjugate form characterizes admissibility") {
    gen::Rng rng(8080);
    for (int i = 0; i < 200; ++i) {
        Expr u = (i % 2 == 0) ? gen::gen_harmonic_poly(rng) : gen::gen_nonharmonic_poly(rng);
        DifferentialForm form = form_from_potential(u);
        bool adm = admits_harmonic(form).harmonic_admissible;
        CHECK(is_exact(conjugate_form(form)).exact == adm);
        CHECK(integrand_y_independent(form) == adm);
        Potential f = solve_exact(form);
        CHECK(is_harmonic(f.body) == adm);
    }
}
