#include "xde/trajectories.hpp"

#include <cmath>

#include "xde/calculus.hpp"
#include "xde/errors.hpp"

namespace xde {

namespace {

struct Gradient {
    Expr fx;
    Expr fy;
    explicit Gradient(const Expr& f) : fx(diff(f, Var::X)), fy(diff(f, Var::Y)) {}
    Point at(Point p) const { return {eval(fx, p), eval(fy, p)}; }
};

double norm(Point g) { return std::hypot(g.x, g.y); }

enum class Family { Level, Orthogonal };

// Unit direction field: tangent (-fy, fx) for the level family, gradient
// (fx, fy) for the orthogonal family. Returns false on degeneracy.
bool direction(const Gradient& grad, Family fam, Point p, Point& out) {
    Point g = grad.at(p);
    double n = norm(g);
    if (n < kDegeneracyEps) return false;
    if (fam == Family::Level)
        out = {-g.y / n, g.x / n};
    else
        out = {g.x / n, g.y / n};
    return true;
}

Polyline trace(const Expr& f, Point seed, double step, int max_points, const Box& box,
               Family fam) {
    Gradient grad(f);
    if (norm(grad.at(seed)) < kDegeneracyEps)
        throw DegenerateSeed("gradient vanishes at the seed point");

    Polyline line;
    line.family_label = fam == Family::Level ? "level" : "orthogonal";
    line.level = eval(f, seed);
    line.points.push_back(seed);

    Point p = seed;
    for (int i = 1; i < max_points; ++i) {
        Point k1, k2, k3, k4;
        if (!direction(grad, fam, p, k1)) break;
        if (!direction(grad, fam, {p.x + 0.5 * step * k1.x, p.y + 0.5 * step * k1.y}, k2)) break;
        if (!direction(grad, fam, {p.x + 0.5 * step * k2.x, p.y + 0.5 * step * k2.y}, k3)) break;
        if (!direction(grad, fam, {p.x + step * k3.x, p.y + step * k3.y}, k4)) break;
        Point q{p.x + step / 6.0 * (k1.x + 2.0 * k2.x + 2.0 * k3.x + k4.x),
                p.y + step / 6.0 * (k1.y + 2.0 * k2.y + 2.0 * k3.y + k4.y)};

        if (fam == Family::Level) {
            // one Newton step back onto the level set
            Point g = grad.at(q);
            double n2 = g.x * g.x + g.y * g.y;
            if (n2 >= kDegeneracyEps * kDegeneracyEps) {
                double r = eval(f, q) - line.level;
                q.x -= r * g.x / n2;
                q.y -= r * g.y / n2;
            }
        }

        if (!box.contains(q)) break;
        if (q.x == p.x && q.y == p.y) break;
        line.points.push_back(q);
        // closed-curve detection, only after the trace has moved away
        if (i >= 10 && std::hypot(q.x - seed.x, q.y - seed.y) < step / 2.0) break;
        p = q;
    }
    return line;
}

} // namespace

DifferentialForm orthogonal_form(const DifferentialForm& form) { return conjugate_form(form); }

double slope_product(const Expr& u, const Expr& v, Point p) {
    Gradient gu(u), gv(v);
    Point a = gu.at(p), b = gv.at(p);
    for (double d : {a.x, a.y, b.x, b.y})
        if (std::fabs(d) < kDegeneracyEps)
            throw DegeneratePoint("vanishing partial derivative at sample point");
    return (-a.x / a.y) * (-b.x / b.y);
}

Polyline trace_level_curve(const Expr& potential, Point seed, double step, int max_points,
                           const Box& box) {
    return trace(potential, seed, step, max_points, box, Family::Level);
}

Polyline trace_orthogonal(const Expr& potential, Point seed, double step, int max_points,
                          const Box& box) {
    return trace(potential, seed, step, max_points, box, Family::Orthogonal);
}

OrthogonalityAudit orthogonality_audit(const Expr& u, const Expr& v, const Grid& grid) {
    Gradient gu(u), gv(v);
    OrthogonalityAudit audit;
    for (int j = 0; j < grid.ny; ++j) {
        double py = grid.y_min + (grid.y_max - grid.y_min) * j / (grid.ny - 1);
        for (int i = 0; i < grid.nx; ++i) {
            double px = grid.x_min + (grid.x_max - grid.x_min) * i / (grid.nx - 1);
            Point p{px, py};
            Point a, b;
            try {
                a = gu.at(p);
                b = gv.at(p);
            } catch (const Error&) {
                ++audit.skipped;
                continue;
            }
            if (std::fabs(a.x) < kDegeneracyEps || std::fabs(a.y) < kDegeneracyEps ||
                std::fabs(b.x) < kDegeneracyEps || std::fabs(b.y) < kDegeneracyEps) {
                ++audit.skipped;
                continue;
            }
            double product = (-a.x / a.y) * (-b.x / b.y);
            audit.samples.push_back({p, product, norm(a), norm(b)});
            audit.max_deviation = std::max(audit.max_deviation, std::fabs(product + 1.0));
        }
    }
    return audit;
}

} // namespace xde
