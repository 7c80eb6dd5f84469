#pragma once

#include <string>
#include <vector>

#include "xde/exact.hpp"
#include "xde/expr.hpp"

namespace xde {

// Degeneracy threshold on partial-derivative magnitudes.
inline constexpr double kDegeneracyEps = 1e-12;

struct Polyline {
    std::vector<Point> points;
    std::string family_label;
    double level = 0.0; // value of the potential at the seed
};

struct Box {
    double x_min = -10.0;
    double x_max = 10.0;
    double y_min = -10.0;
    double y_max = 10.0;
    bool contains(Point p) const {
        return p.x >= x_min && p.x <= x_max && p.y >= y_min && p.y <= y_max;
    }
};

struct Grid {
    double x_min, x_max, y_min, y_max;
    int nx, ny;
};

struct OrthogonalitySample {
    Point point;
    double slope_product;
    double gradient_norm_u;
    double gradient_norm_v;
};

struct OrthogonalityAudit {
    std::vector<OrthogonalitySample> samples;
    double max_deviation = 0.0; // max |slope_product + 1| over valid samples
    int skipped = 0;            // degenerate grid nodes, excluded above
};

// Alias of conjugate_form: the orthogonal-trajectory DE -u_y dx + u_x dy = 0.
DifferentialForm orthogonal_form(const DifferentialForm& form);

// (-u_x/u_y)(-v_x/v_y) at p. Throws DegeneratePoint when any of the four
// partials has magnitude below kDegeneracyEps.
double slope_product(const Expr& u, const Expr& v, Point p);

// Fixed-step RK4 along the unit tangent (-f_y, f_x)/|grad f| from the seed,
// with one Newton projection back onto the level set after each step.
// Stops at max_points, on leaving the box, on gradient degeneracy, or on
// returning within step/2 of the seed after at least 10 steps.
Polyline trace_level_curve(const Expr& potential, Point seed, double step, int max_points,
                           const Box& box = {});

// RK4 along the unit gradient (f_x, f_y)/|grad f|; same stopping rules, no
// level projection (the result is a trajectory, not a level set of f).
Polyline trace_orthogonal(const Expr& potential, Point seed, double step, int max_points,
                          const Box& box = {});

// slope_product at every grid node; degenerate nodes are counted as skipped.
OrthogonalityAudit orthogonality_audit(const Expr& u, const Expr& v, const Grid& grid);

} // namespace xde
