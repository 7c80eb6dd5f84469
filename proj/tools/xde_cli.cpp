// Command-line front end: exactness/harmonicity reports, potentials,
// harmonic conjugates, conjugate forms, curve tracing and orthogonality
// audits, emitted as JSON, CSV, SVG or plain text.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "xde/calculus.hpp"
#include "xde/errors.hpp"
#include "xde/exact.hpp"
#include "xde/normalize.hpp"
#include "xde/parser.hpp"
#include "xde/trajectories.hpp"

using nlohmann::ordered_json;

namespace {

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

// JSON writer with fixed 17-significant-digit float formatting so outputs
// are byte-stable golden-file material.
void dump_json(const ordered_json& j, std::ostream& os, int indent) {
    std::string pad(indent, ' ');
    std::string pad2(indent + 2, ' ');
    switch (j.type()) {
    case ordered_json::value_t::object: {
        if (j.empty()) { os << "{}"; return; }
        os << "{\n";
        std::size_t i = 0;
        for (auto it = j.begin(); it != j.end(); ++it, ++i) {
            os << pad2 << ordered_json(it.key()).dump() << ": ";
            dump_json(it.value(), os, indent + 2);
            if (i + 1 < j.size()) os << ",";
            os << "\n";
        }
        os << pad << "}";
        return;
    }
    case ordered_json::value_t::array: {
        if (j.empty()) { os << "[]"; return; }
        bool scalars = true;
        for (const auto& v : j)
            if (v.is_structured()) scalars = false;
        if (scalars) {
            os << "[";
            for (std::size_t i = 0; i < j.size(); ++i) {
                if (i) os << ", ";
                dump_json(j[i], os, indent);
            }
            os << "]";
            return;
        }
        os << "[\n";
        for (std::size_t i = 0; i < j.size(); ++i) {
            os << pad2;
            dump_json(j[i], os, indent + 2);
            if (i + 1 < j.size()) os << ",";
            os << "\n";
        }
        os << pad << "]";
        return;
    }
    case ordered_json::value_t::number_float:
        os << fmt_double(j.get<double>());
        return;
    default:
        os << j.dump();
        return;
    }
}

std::vector<double> parse_doubles(const std::string& s, char sep) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep))
        if (!item.empty()) out.push_back(std::stod(item));
    return out;
}

struct Config {
    std::string m_text, n_text, u_text, v_text;
    std::string box_text = "-5,5,-5,5";
    std::string levels_text, seeds_text;
    std::string grid_text = "10,10";
    double step = 0.01;
    int max_points = 10000;
    std::string format = "json";
    bool require_harmonic = false;
    std::string out_path;
};

xde::Box parse_box(const std::string& s) {
    auto v = parse_doubles(s, ',');
    if (v.size() != 4 || v[0] >= v[1] || v[2] >= v[3])
        throw xde::Error("UsageError", "--box expects x0,x1,y0,y1 with x0<x1, y0<y1");
    return {v[0], v[1], v[2], v[3]};
}

std::vector<xde::Point> parse_seeds(const std::string& s) {
    std::vector<xde::Point> seeds;
    std::stringstream ss(s);
    std::string pair;
    while (std::getline(ss, pair, ';')) {
        if (pair.empty()) continue;
        auto v = parse_doubles(pair, ':');
        if (v.size() != 2) throw xde::Error("UsageError", "--seeds expects x:y;x:y;...");
        seeds.push_back({v[0], v[1]});
    }
    return seeds;
}

// Engine inputs: either a form (M, N) or a potential u.
struct Inputs {
    xde::DifferentialForm form;
    std::optional<xde::Expr> u;
};

Inputs resolve_inputs(const Config& cfg) {
    bool have_form = !cfg.m_text.empty() || !cfg.n_text.empty();
    bool have_u = !cfg.u_text.empty();
    if (have_form == have_u)
        throw xde::Error("UsageError", "supply either -M and -N, or -u");
    if (have_u) {
        xde::Expr u = xde::normalize(xde::parse(cfg.u_text));
        return {xde::form_from_potential(u), u};
    }
    if (cfg.m_text.empty() || cfg.n_text.empty())
        throw xde::Error("UsageError", "both -M and -N are required");
    return {xde::make_form(xde::parse(cfg.m_text), xde::parse(cfg.n_text)), std::nullopt};
}

ordered_json input_json(const Config& cfg) {
    ordered_json in = ordered_json::object();
    if (!cfg.u_text.empty()) in["u"] = cfg.u_text;
    if (!cfg.m_text.empty()) in["M"] = cfg.m_text;
    if (!cfg.n_text.empty()) in["N"] = cfg.n_text;
    return in;
}

xde::Expr potential_of(const Inputs& in) {
    if (in.u) return *in.u;
    return xde::solve_exact(in.form).body;
}

// Deterministic seed search: coarse scan of the box, then Newton onto the
// requested level along the gradient.
xde::Point seed_for_level(const xde::Expr& f, double level, const xde::Box& box) {
    xde::Expr fx = xde::diff(f, xde::Var::X), fy = xde::diff(f, xde::Var::Y);
    const int n = 41;
    double best = std::numeric_limits<double>::infinity();
    xde::Point best_p{};
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            xde::Point p{box.x_min + (box.x_max - box.x_min) * i / (n - 1),
                         box.y_min + (box.y_max - box.y_min) * j / (n - 1)};
            try {
                double d = std::fabs(xde::eval(f, p) - level);
                double gx = xde::eval(fx, p), gy = xde::eval(fy, p);
                if (std::hypot(gx, gy) < 1e-6) continue;
                if (d < best) { best = d; best_p = p; }
            } catch (const xde::Error&) {
                continue;
            }
        }
    }
    if (!std::isfinite(best))
        throw xde::DomainError("no usable seed for level " + fmt_double(level));
    xde::Point p = best_p;
    for (int it = 0; it < 50; ++it) {
        double r = xde::eval(f, p) - level;
        if (std::fabs(r) < 1e-12) return p;
        double gx = xde::eval(fx, p), gy = xde::eval(fy, p);
        double n2 = gx * gx + gy * gy;
        if (n2 < 1e-24) break;
        p.x -= r * gx / n2;
        p.y -= r * gy / n2;
    }
    if (std::fabs(xde::eval(f, p) - level) < 1e-9) return p;
    throw xde::DomainError("seed search failed for level " + fmt_double(level));
}

ordered_json polyline_json(const xde::Polyline& pl) {
    ordered_json j;
    j["family"] = pl.family_label;
    j["level"] = pl.level;
    ordered_json pts = ordered_json::array();
    for (const auto& p : pl.points) pts.push_back(ordered_json::array({p.x, p.y}));
    j["points"] = std::move(pts);
    return j;
}

std::string polylines_csv(const std::vector<xde::Polyline>& lines) {
    std::string out = "family,level,index,x,y\n";
    for (const auto& pl : lines) {
        for (std::size_t i = 0; i < pl.points.size(); ++i) {
            out += pl.family_label + "," + fmt_double(pl.level) + "," + std::to_string(i) +
                   "," + fmt_double(pl.points[i].x) + "," + fmt_double(pl.points[i].y) + "\n";
        }
    }
    return out;
}

std::string polylines_svg(const std::vector<xde::Polyline>& lines, const xde::Box& box) {
    const double W = 800.0, H = 600.0;
    auto sx = [&](double x) { return (x - box.x_min) / (box.x_max - box.x_min) * W; };
    auto sy = [&](double y) { return H - (y - box.y_min) / (box.y_max - box.y_min) * H; };
    std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"600\" "
                      "viewBox=\"0 0 800 600\">\n";
    svg += "<rect x=\"0\" y=\"0\" width=\"800\" height=\"600\" fill=\"white\"/>\n";
    for (const auto& pl : lines) {
        bool level = pl.family_label == "level";
        svg += "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"1\"";
        if (!level) svg += " stroke-dasharray=\"4 3\"";
        svg += " points=\"";
        for (std::size_t i = 0; i < pl.points.size(); ++i) {
            if (i) svg += " ";
            svg += fmt_double(sx(pl.points[i].x)) + "," + fmt_double(sy(pl.points[i].y));
        }
        svg += "\"/>\n";
    }
    svg += "</svg>\n";
    return svg;
}

void emit(const Config& cfg, const std::string& payload) {
    if (cfg.out_path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream f(cfg.out_path, std::ios::binary);
    if (!f) throw xde::Error("IoError", "cannot open output file " + cfg.out_path);
    f << payload;
}

std::string render_json(const ordered_json& j) {
    std::ostringstream os;
    dump_json(j, os, 0);
    os << "\n";
    return os.str();
}

std::string render_text(const ordered_json& j, int depth = 0) {
    std::string out;
    std::string pad(depth * 2, ' ');
    for (auto it = j.begin(); it != j.end(); ++it) {
        const auto& v = it.value();
        if (v.is_object()) {
            out += pad + it.key() + ":\n" + render_text(v, depth + 1);
        } else if (v.is_array()) {
            out += pad + it.key() + ": " + v.dump() + "\n";
        } else if (v.is_number_float()) {
            out += pad + it.key() + ": " + fmt_double(v.get<double>()) + "\n";
        } else {
            out += pad + it.key() + ": " + (v.is_string() ? v.get<std::string>() : v.dump()) + "\n";
        }
    }
    return out;
}

int finish(const Config& cfg, ordered_json& doc, int code) {
    if (cfg.format == "text")
        emit(cfg, render_text(doc));
    else
        emit(cfg, render_json(doc));
    return code;
}

int run_check(const Config& cfg) {
    ordered_json doc;
    doc["command"] = "check";
    doc["input"] = input_json(cfg);
    Inputs in = resolve_inputs(cfg);
    xde::FormReport rep = xde::analyze(in.form);
    ordered_json result;
    result["exact"] = rep.exact;
    result["harmonic_admissible"] = rep.harmonic_admissible;
    result["exactness_witness"] = xde::to_string(rep.exactness_witness);
    result["admissibility_witness"] = xde::to_string(rep.admissibility_witness);
    doc["result"] = std::move(result);
    doc["verification"] = ordered_json::object();
    ordered_json errors = ordered_json::array();
    int code = 0;
    if (!rep.exact) {
        errors.push_back({{"kind", "NotExact"},
                          {"message", "M_y - N_x does not vanish"},
                          {"witness", xde::to_string(rep.exactness_witness)}});
        code = 2;
    } else if (cfg.require_harmonic && !rep.harmonic_admissible) {
        errors.push_back({{"kind", "NotHarmonicAdmissible"},
                          {"message", "M_x + N_y does not vanish"},
                          {"witness", xde::to_string(rep.admissibility_witness)}});
        code = 3;
    }
    doc["errors"] = std::move(errors);
    return finish(cfg, doc, code);
}

int run_solve(const Config& cfg) {
    ordered_json doc;
    doc["command"] = "solve";
    doc["input"] = input_json(cfg);
    Inputs in = resolve_inputs(cfg);
    xde::Potential pot = xde::solve_exact(in.form);
    doc["result"] = {{"potential", xde::to_string(pot.body)},
                     {"constant_label", pot.constant_label}};
    bool fx_ok = xde::equivalent(xde::diff(pot.body, xde::Var::X), in.form.M);
    bool fy_ok = xde::equivalent(xde::diff(pot.body, xde::Var::Y), in.form.N);
    doc["verification"] = {{"fx_matches_M", fx_ok},
                           {"fy_matches_N", fy_ok},
                           {"verified", fx_ok && fy_ok}};
    doc["errors"] = ordered_json::array();
    return finish(cfg, doc, 0);
}

int run_conjugate(const Config& cfg) {
    ordered_json doc;
    doc["command"] = "conjugate";
    doc["input"] = input_json(cfg);
    Inputs in = resolve_inputs(cfg);
    xde::Potential g = xde::harmonic_conjugate(in.form);
    xde::Expr f = potential_of(in);
    doc["result"] = {{"conjugate", xde::to_string(g.body)},
                     {"constant_label", g.constant_label}};
    doc["verification"] = {{"cr_verified", xde::check_cr(f, g.body)}};
    doc["errors"] = ordered_json::array();
    return finish(cfg, doc, 0);
}

int run_conjugate_form(const Config& cfg) {
    ordered_json doc;
    doc["command"] = "conjugate-form";
    doc["input"] = input_json(cfg);
    Inputs in = resolve_inputs(cfg);
    xde::DifferentialForm cf = xde::conjugate_form(in.form);
    xde::FormReport rep = xde::analyze(cf);
    doc["result"] = {{"M", xde::to_string(cf.M)},
                     {"N", xde::to_string(cf.N)},
                     {"exact", rep.exact},
                     {"harmonic_admissible", rep.harmonic_admissible},
                     {"exactness_witness", xde::to_string(rep.exactness_witness)},
                     {"admissibility_witness", xde::to_string(rep.admissibility_witness)}};
    doc["verification"] = ordered_json::object();
    doc["errors"] = ordered_json::array();
    return finish(cfg, doc, 0);
}

int run_trace(const Config& cfg) {
    Inputs in = resolve_inputs(cfg);
    xde::Expr f = potential_of(in);
    xde::Box box = parse_box(cfg.box_text);

    std::vector<xde::Point> seeds;
    if (!cfg.seeds_text.empty()) seeds = parse_seeds(cfg.seeds_text);
    if (!cfg.levels_text.empty())
        for (double level : parse_doubles(cfg.levels_text, ','))
            seeds.push_back(seed_for_level(f, level, box));
    if (seeds.empty()) {
        // default grid strategy: a 4x4 interior lattice
        for (int j = 1; j <= 4; ++j)
            for (int i = 1; i <= 4; ++i)
                seeds.push_back({box.x_min + (box.x_max - box.x_min) * i / 5.0,
                                 box.y_min + (box.y_max - box.y_min) * j / 5.0});
    }

    std::vector<xde::Polyline> lines;
    for (const auto& s : seeds) {
        try {
            lines.push_back(xde::trace_level_curve(f, s, cfg.step, cfg.max_points, box));
        } catch (const xde::DegenerateSeed&) {
            if (!cfg.seeds_text.empty()) throw; // explicit seeds must be valid
        }
        try {
            lines.push_back(xde::trace_orthogonal(f, s, cfg.step, cfg.max_points, box));
        } catch (const xde::DegenerateSeed&) {
            if (!cfg.seeds_text.empty()) throw;
        }
    }

    if (cfg.format == "csv") {
        emit(cfg, polylines_csv(lines));
        return 0;
    }
    if (cfg.format == "svg") {
        emit(cfg, polylines_svg(lines, box));
        return 0;
    }
    ordered_json doc;
    doc["command"] = "trace";
    doc["input"] = input_json(cfg);
    doc["input"]["box"] = cfg.box_text;
    doc["input"]["step"] = cfg.step;
    ordered_json pls = ordered_json::array();
    for (const auto& pl : lines) pls.push_back(polyline_json(pl));
    doc["result"] = {{"potential", xde::to_string(f)}, {"polylines", std::move(pls)}};
    doc["verification"] = ordered_json::object();
    doc["errors"] = ordered_json::array();
    return finish(cfg, doc, 0);
}

int run_audit(const Config& cfg) {
    Inputs in = resolve_inputs(cfg);
    xde::Expr u = potential_of(in);
    xde::Expr v = cfg.v_text.empty() ? xde::harmonic_conjugate(in.form).body
                                     : xde::normalize(xde::parse(cfg.v_text));
    xde::Box box = parse_box(cfg.box_text);
    auto gv = parse_doubles(cfg.grid_text, ',');
    if (gv.size() != 2 || gv[0] < 2 || gv[1] < 2)
        throw xde::Error("UsageError", "--grid expects nx,ny with nx,ny >= 2");
    xde::Grid grid{box.x_min, box.x_max, box.y_min, box.y_max,
                   static_cast<int>(gv[0]), static_cast<int>(gv[1])};
    xde::OrthogonalityAudit audit = xde::orthogonality_audit(u, v, grid);

    if (cfg.format == "csv") {
        std::string out = "x,y,slope_product,grad_norm_u,grad_norm_v\n";
        for (const auto& s : audit.samples)
            out += fmt_double(s.point.x) + "," + fmt_double(s.point.y) + "," +
                   fmt_double(s.slope_product) + "," + fmt_double(s.gradient_norm_u) + "," +
                   fmt_double(s.gradient_norm_v) + "\n";
        emit(cfg, out);
        return 0;
    }
    ordered_json doc;
    doc["command"] = "audit";
    doc["input"] = input_json(cfg);
    doc["input"]["v"] = xde::to_string(v);
    doc["input"]["box"] = cfg.box_text;
    doc["input"]["grid"] = cfg.grid_text;
    ordered_json samples = ordered_json::array();
    for (const auto& s : audit.samples)
        samples.push_back({{"point", ordered_json::array({s.point.x, s.point.y})},
                           {"slope_product", s.slope_product},
                           {"gradient_norms",
                            ordered_json::array({s.gradient_norm_u, s.gradient_norm_v})}});
    doc["result"] = {{"max_deviation", audit.max_deviation},
                     {"skipped", audit.skipped},
                     {"samples", std::move(samples)}};
    doc["verification"] = ordered_json::object();
    doc["errors"] = ordered_json::array();
    return finish(cfg, doc, 0);
}

int error_exit(const Config& cfg, const std::string& command, const xde::Error& e) {
    ordered_json doc;
    doc["command"] = command;
    doc["input"] = input_json(cfg);
    doc["result"] = nullptr;
    doc["verification"] = ordered_json::object();
    ordered_json err = {{"kind", e.kind()}, {"message", e.what()}};
    if (const auto* se = dynamic_cast<const xde::SyntaxError*>(&e)) {
        err["offset"] = static_cast<std::int64_t>(se->offset());
        err["expected"] = se->expected();
    }
    doc["errors"] = ordered_json::array({err});
    try {
        finish(cfg, doc, 0);
    } catch (const xde::Error&) {
        std::cerr << e.what() << "\n";
    }
    if (e.kind() == "NotExact") return 2;
    if (e.kind() == "NotHarmonicAdmissible") return 3;
    return 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact differential equations, harmonic conjugates and orthogonal trajectories"};
    app.require_subcommand(1);

    Config cfg;
    std::string command;
    auto add_common = [&](CLI::App* sub, bool tracing) {
        sub->add_option("-M", cfg.m_text, "M(x,y) of M dx + N dy = 0");
        sub->add_option("-N", cfg.n_text, "N(x,y) of M dx + N dy = 0");
        sub->add_option("-u", cfg.u_text, "potential u(x,y) instead of -M/-N");
        sub->add_option("--format", cfg.format, "json|csv|svg|text")->default_val("json");
        sub->add_option("--out", cfg.out_path, "output path (default stdout)");
        if (tracing) {
            sub->add_option("--box", cfg.box_text, "x0,x1,y0,y1")->default_val("-5,5,-5,5");
        }
        sub->final_callback([&, sub] { command = sub->get_name(); });
    };

    auto* check = app.add_subcommand("check", "exactness and harmonic admissibility report");
    add_common(check, false);
    check->add_flag("--require-harmonic", cfg.require_harmonic,
                    "fail (exit 3) when the form admits no harmonic solution");

    auto* solve = app.add_subcommand("solve", "potential of an exact form");
    add_common(solve, false);

    auto* conj = app.add_subcommand("conjugate", "harmonic conjugate of the form's potential");
    add_common(conj, false);

    auto* cform = app.add_subcommand("conjugate-form", "the conjugate form -N dx + M dy = 0");
    add_common(cform, false);

    auto* trace = app.add_subcommand("trace", "trace level curves and orthogonal trajectories");
    add_common(trace, true);
    trace->add_option("--levels", cfg.levels_text, "comma-separated level values");
    trace->add_option("--seeds", cfg.seeds_text, "explicit seed points x:y;x:y;...");
    trace->add_option("--step", cfg.step, "RK4 step size")->default_val(0.01);
    trace->add_option("--max-points", cfg.max_points, "points per polyline")->default_val(10000);

    auto* audit = app.add_subcommand("audit", "slope-product orthogonality audit on a grid");
    add_common(audit, true);
    audit->add_option("-v", cfg.v_text, "second family (default: the harmonic conjugate)");
    audit->add_option("--grid", cfg.grid_text, "nx,ny grid resolution")->default_val("10,10");

    CLI11_PARSE(app, argc, argv);

    try {
        if (command == "check") return run_check(cfg);
        if (command == "solve") return run_solve(cfg);
        if (command == "conjugate") return run_conjugate(cfg);
        if (command == "conjugate-form") return run_conjugate_form(cfg);
        if (command == "trace") return run_trace(cfg);
        if (command == "audit") return run_audit(cfg);
        std::cerr << "unknown command\n";
        return 1;
    } catch (const xde::Error& e) {
        return error_exit(cfg, command, e);
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
}
