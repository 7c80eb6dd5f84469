#include "xde/calculus.hpp"

#include <optional>

#include "xde/errors.hpp"

namespace xde {

namespace {

Expr diff_raw(const Expr& e, Var v) {
    using lit::c;
    switch (e.kind()) {
    case Kind::Constant:
        return c(0);
    case Kind::Variable:
        return c(e.var() == v ? 1 : 0);
    case Kind::Sum: {
        std::vector<Expr> parts;
        for (const auto& t : e.operands()) parts.push_back(diff_raw(t, v));
        return Expr::sum(std::move(parts));
    }
    case Kind::Product: {
        const auto& fs = e.operands();
        std::vector<Expr> parts;
        for (std::size_t i = 0; i < fs.size(); ++i) {
            std::vector<Expr> prod = fs;
            prod[i] = diff_raw(fs[i], v);
            parts.push_back(Expr::product(std::move(prod)));
        }
        return Expr::sum(std::move(parts));
    }
    case Kind::Power: {
        int n = e.exponent();
        if (n == 0) return c(0);
        // n * base^(n-1) * base'
        return Expr::product(
            {c(n), Expr::power(e.base(), n - 1), diff_raw(e.base(), v)});
    }
    case Kind::Sin:
        return Expr::product({Expr::cos(e.base()), diff_raw(e.base(), v)});
    case Kind::Cos:
        return Expr::neg(Expr::product({Expr::sin(e.base()), diff_raw(e.base(), v)}));
    case Kind::Exp:
        return Expr::product({e, diff_raw(e.base(), v)});
    case Kind::Ln:
        return Expr::product({Expr::power(e.base(), -1), diff_raw(e.base(), v)});
    case Kind::Neg:
        return Expr::neg(diff_raw(e.base(), v));
    }
    throw Error("Internal", "unreachable expression kind");
}

// d(base)/dv when it normalizes to a constant; nullopt otherwise.
std::optional<Rational> constant_slope(const Expr& base, Var v) {
    Expr d = normalize(diff_raw(base, v));
    if (d.kind() == Kind::Constant) return d.value();
    return std::nullopt;
}

Expr var_power(Var v, int m) {
    Expr xv = Expr::variable(v);
    return m == 1 ? xv : Expr::power(xv, m);
}

// int x^m T(L) dx for T in {sin, cos, exp}, dL/dx = a != 0, by repeated
// integration by parts. m >= 0.
Expr int_power_trans(int m, Kind k, const Expr& arg, const Rational& a, Var v) {
    Expr inv_a = Expr::constant(Rational(1) / a);
    Expr head, tail_integrand;
    Kind next;
    switch (k) {
    case Kind::Exp:
        head = Expr::exp(arg);
        next = Kind::Exp;
        break;
    case Kind::Cos:
        head = Expr::sin(arg);
        next = Kind::Sin;
        break;
    default: // Sin
        head = Expr::neg(Expr::cos(arg));
        next = Kind::Cos;
        break;
    }
    if (m == 0) return Expr::product({inv_a, head});
    Expr lead = Expr::product({inv_a, var_power(v, m), head});
    Expr rec = int_power_trans(m - 1, next, arg, a, v);
    Expr corr = Expr::product({Expr::constant(Rational(m) / a), rec});
    if (k == Kind::Sin)
        return Expr::sum({lead, corr});
    return Expr::sum({lead, Expr::neg(corr)});
}

Expr integrate_term(const Term& term, Var v) {
    std::vector<Expr> indep; // factors constant with respect to v
    int var_exp = 0;
    std::optional<std::pair<Expr, int>> linear_pow; // Sum base, exponent
    std::optional<std::pair<Kind, Expr>> trans;     // sin/cos/exp factor arg

    auto unsupported = [&] {
        throw UnsupportedIntegral("cannot integrate term '" +
                                  to_string(expr_from_terms({term})) + "' with respect to " +
                                  name(v));
    };

    for (const auto& [base, e] : term.factors) {
        if (independent_of(base, v)) {
            indep.push_back(e == 1 ? base : Expr::power(base, e));
            continue;
        }
        switch (base.kind()) {
        case Kind::Variable:
            var_exp = e;
            break;
        case Kind::Sum:
            if (linear_pow || trans || var_exp != 0) unsupported();
            linear_pow = {base, e};
            break;
        case Kind::Sin:
        case Kind::Cos:
        case Kind::Exp:
            if (e != 1 || trans || linear_pow) unsupported();
            trans = {base.kind(), base.base()};
            break;
        default:
            unsupported();
        }
    }
    if (linear_pow && var_exp != 0) unsupported();

    Expr core;
    if (trans) {
        auto a = constant_slope(trans->second, v);
        if (!a || a->is_zero()) unsupported();
        if (var_exp < 0) unsupported();
        core = int_power_trans(var_exp, trans->first, trans->second, *a, v);
    } else if (linear_pow) {
        auto [base, e] = *linear_pow;
        auto a = constant_slope(base, v);
        if (!a || a->is_zero()) unsupported();
        if (e == -1)
            core = Expr::product({Expr::constant(Rational(1) / *a), Expr::ln(base)});
        else
            core = Expr::product({Expr::constant(Rational(1) / (*a * Rational(e + 1))),
                                  Expr::power(base, e + 1)});
    } else if (var_exp == -1) {
        core = Expr::ln(Expr::variable(v));
    } else {
        core = Expr::product({Expr::constant(Rational(1, var_exp + 1)),
                              var_power(v, var_exp + 1)});
    }

    std::vector<Expr> fs{Expr::constant(term.coeff)};
    fs.insert(fs.end(), indep.begin(), indep.end());
    fs.push_back(core);
    return Expr::product(std::move(fs));
}

} // namespace

Expr diff(const Expr& e, Var v) { return normalize(diff_raw(e, v)); }

AntiderivativeResult antiderivative(const Expr& e, Var v) {
    std::vector<Expr> parts;
    for (const Term& t : normal_terms(e)) parts.push_back(integrate_term(t, v));
    return {normalize(Expr::sum(std::move(parts))), v};
}

Expr laplacian(const Expr& e) {
    return normalize(Expr::sum({diff(diff(e, Var::X), Var::X), diff(diff(e, Var::Y), Var::Y)}));
}

bool is_harmonic(const Expr& e) {
    return equivalent(laplacian(e), Expr::constant(Rational(0)));
}

} // namespace xde
