#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstring>

#include "support/generators.hpp"
#include "xde/errors.hpp"
#include "xde/parser.hpp"
#include "xde/trajectories.hpp"

using namespace xde;

namespace {

DifferentialForm F(const char* m, const char* n) { return make_form(parse(m), parse(n)); }

bool same(const Expr& a, const Expr& b) { return is_zero(Expr::sum({a, Expr::neg(b)})); }

} // namespace

TEST_CASE("orthogonal_form swaps and negates") {
    auto of = orthogonal_form(F("2*x", "-2*y"));
    CHECK(same(of.M, parse("2*y")));
    CHECK(same(of.N, parse("2*x")));

    auto of2 = orthogonal_form(F("y", "x"));
    CHECK(same(of2.M, parse("-x")));
    CHECK(same(of2.N, parse("y")));

    auto form = F("3*x^2", "sin(y)");
    auto twice = orthogonal_form(orthogonal_form(form));
    CHECK(same(twice.M, normalize(Expr::neg(form.M))));
    CHECK(same(twice.N, normalize(Expr::neg(form.N))));
}

TEST_CASE("slope_product on the classic conjugate pair") {
    Expr u = parse("x^2 - y^2"), v = parse("2*x*y");
    CHECK(slope_product(u, v, {1, 1}) == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(slope_product(u, v, {3, 2}) == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK_THROWS_AS(slope_product(parse("x"), parse("x"), {1, 1}), DegeneratePoint);
}

TEST_CASE("level trace of a circle closes and stays on the level set") {
    Polyline pl = trace_level_curve(parse("x^2 + y^2"), {1, 0}, 0.01, 10000);
    CHECK(pl.family_label == "level");
    CHECK(pl.level == doctest::Approx(1.0));
    CHECK(pl.points.size() > 100);
    CHECK(pl.points.size() < 10000); // stopped by closure, not by the cap
    for (const Point& p : pl.points)
        CHECK(std::fabs(p.x * p.x + p.y * p.y - 1.0) < 1e-6);
    const Point& last = pl.points.back();
    CHECK(std::hypot(last.x - 1.0, last.y - 0.0) < 0.005);
}

TEST_CASE("level trace follows an open hyperbola branch") {
    Box box{-3, 3, -3, 3};
    Polyline pl = trace_level_curve(parse("x*y"), {1, 1}, 0.01, 10000, box);
    for (const Point& p : pl.points) {
        CHECK(std::fabs(p.x * p.y - 1.0) < 1e-6);
        CHECK(box.contains(p));
    }
    CHECK(pl.points.size() > 50);
}

TEST_CASE("degenerate seed is rejected") {
    CHECK_THROWS_AS(trace_level_curve(parse("x^2 - y^2"), {0, 0}, 0.01, 100), DegenerateSeed);
}

TEST_CASE("orthogonal trace of x^2 - y^2 runs along xy = const") {
    Polyline pl = trace_orthogonal(parse("x^2 - y^2"), {2, 1}, 0.01, 10000);
    CHECK(pl.family_label == "orthogonal");
    CHECK(pl.points.size() > 50);
    for (const Point& p : pl.points)
        CHECK(std::fabs(p.x * p.y - 2.0) < 1e-4);
}

TEST_CASE("orthogonal trace of exp(x)cos(y) preserves exp(x)sin(y)") {
    double y0 = 0.7853981633974483;
    Polyline pl = trace_orthogonal(parse("exp(x)*cos(y)"), {0, y0}, 0.01, 2000, {-2, 2, -2, 2});
    double k = std::exp(0.0) * std::sin(y0);
    for (const Point& p : pl.points)
        CHECK(std::fabs(std::exp(p.x) * std::sin(p.y) - k) < 1e-4);
}

TEST_CASE("level and orthogonal traces cross at right angles") {
    Expr f = parse("x^2 - y^2");
    Polyline lvl = trace_level_curve(f, {2, 1}, 0.002, 2000, {-4, 4, -4, 4});
    Polyline orth = trace_orthogonal(f, {2, 1}, 0.002, 2000, {-4, 4, -4, 4});
    // nearest approach of the two polylines is the shared seed
    double best = 1e300;
    for (const Point& p : lvl.points)
        for (const Point& q : orth.points)
            best = std::min(best, std::hypot(p.x - q.x, p.y - q.y));
    CHECK(best == 0.0);
    // curve directions at the seed, second-order one-sided difference
    auto dir = [](const Polyline& pl) {
        const Point &p0 = pl.points[0], &p1 = pl.points[1], &p2 = pl.points[2];
        double dx = -3 * p0.x + 4 * p1.x - p2.x;
        double dy = -3 * p0.y + 4 * p1.y - p2.y;
        double n = std::hypot(dx, dy);
        return Point{dx / n, dy / n};
    };
    Point a = dir(lvl), b = dir(orth);
    CHECK(std::fabs(a.x * b.x + a.y * b.y) < 1e-3);
}

TEST_CASE("projection keeps level drift at the local-error scale") {
    for (double step : {0.01, 0.05}) {
        Polyline pl = trace_level_curve(parse("x^2 + y^2 + x*y"), {1, 0}, step, 5000);
        for (const Point& p : pl.points) {
            double v = p.x * p.x + p.y * p.y + p.x * p.y;
            CHECK(std::fabs(v - pl.level) < 10 * step * step);
        }
    }
}

TEST_CASE("tracer is deterministic") {
    Expr f = parse("x^2 + y^2");
    Polyline a = trace_level_curve(f, {1, 0}, 0.01, 3000);
    Polyline b = trace_level_curve(f, {1, 0}, 0.01, 3000);
    REQUIRE(a.points.size() == b.points.size());
    CHECK(std::memcmp(a.points.data(), b.points.data(),
                      a.points.size() * sizeof(Point)) == 0);
}

TEST_CASE("orthogonality audit on conjugate and non-conjugate pairs") {
    Grid g{1, 2, 1, 2, 10, 10};
    auto a1 = orthogonality_audit(parse("x^2 - y^2"), parse("2*x*y"), g);
    CHECK(a1.skipped == 0);
    CHECK(a1.samples.size() == 100);
    CHECK(a1.max_deviation < 1e-12);

    Grid g2{0, 1, 0.1, 1.4, 10, 10};
    auto a2 = orthogonality_audit(parse("exp(x)*cos(y)"), parse("exp(x)*sin(y)"), g2);
    CHECK(a2.max_deviation < 1e-9);

    auto a3 = orthogonality_audit(parse("x^2 - y^2"), parse("x^2 + y^2"), g);
    CHECK(a3.max_deviation > 0.1);
}

TEST_CASE("audit counts degenerate nodes instead of throwing") {
    // u_y vanishes on the line y = 0 which the grid includes
    Grid g{-1, 1, -1, 1, 3, 3};
    auto a = orthogonality_audit(parse("x^2 - y^2"), parse("2*x*y"), g);
    CHECK(a.skipped > 0);
    CHECK(static_cast<int>(a.samples.size()) + a.skipped == 9);
}

TEST_CASE("property: C-R pairs from the conjugate builder pass the audit") {
    gen::Rng rng(6060);
    int done = 0;
    while (done < 20) {
        Expr u = gen::gen_harmonic_poly(rng, 4);
        Expr v = harmonic_conjugate(form_from_potential(u)).body;
        Grid g{0.37, 1.41, 0.29, 1.23, 7, 7};
        auto audit = orthogonality_audit(u, v, g);
        if (audit.samples.size() < 10) continue; // too many degeneracies to judge
        ++done;
        CHECK(audit.max_deviation < 1e-9);
        CHECK(is_harmonic(v));
    }
}
