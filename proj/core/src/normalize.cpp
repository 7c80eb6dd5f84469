#include "xde/normalize.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>

#include "xde/errors.hpp"

namespace xde {

namespace {

// factor list sorted by compare() on bases
using Mono = std::vector<std::pair<Expr, int>>;

struct MonoLess {
    bool operator()(const Mono& a, const Mono& b) const {
        std::size_t n = std::min(a.size(), b.size());
        for (std::size_t i = 0; i < n; ++i) {
            int c = compare(a[i].first, b[i].first);
            if (c != 0) return c < 0;
            if (a[i].second != b[i].second) return a[i].second < b[i].second;
        }
        return a.size() < b.size();
    }
};

using Poly = std::map<Mono, Rational, MonoLess>;

void add_term(Poly& p, const Mono& m, const Rational& c) {
    if (c.is_zero()) return;
    auto it = p.find(m);
    if (it == p.end()) {
        p.emplace(m, c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) p.erase(it);
    }
}

Mono merge_monos(const Mono& a, const Mono& b) {
    Mono r;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        int c = compare(a[i].first, b[j].first);
        if (c < 0) {
            r.push_back(a[i++]);
        } else if (c > 0) {
            r.push_back(b[j++]);
        } else {
            int e = a[i].second + b[j].second;
            if (e != 0) r.emplace_back(a[i].first, e);
            ++i;
            ++j;
        }
    }
    while (i < a.size()) r.push_back(a[i++]);
    while (j < b.size()) r.push_back(b[j++]);
    return r;
}

Poly mul(const Poly& a, const Poly& b) {
    Poly r;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b)
            add_term(r, merge_monos(ma, mb), ca * cb);
    return r;
}

Poly constant_poly(const Rational& c) {
    Poly p;
    add_term(p, {}, c);
    return p;
}

Poly pow_poly(const Poly& p, int n) {
    Poly r = constant_poly(Rational(1));
    for (int i = 0; i < n; ++i) r = mul(r, p);
    return r;
}

Expr rebuild(const Poly& p);

Expr rebuild_term(const Mono& m, const Rational& c) {
    if (m.empty()) return Expr::constant(c);
    std::vector<Expr> fs;
    if (!c.is_one()) fs.push_back(Expr::constant(c));
    for (const auto& [base, e] : m)
        fs.push_back(e == 1 ? base : Expr::power(base, e));
    if (fs.size() == 1) return fs[0];
    return Expr::product(std::move(fs));
}

Expr rebuild(const Poly& p) {
    if (p.empty()) return Expr::constant(Rational(0));
    std::vector<Expr> terms;
    terms.reserve(p.size());
    for (const auto& [m, c] : p) terms.push_back(rebuild_term(m, c));
    if (terms.size() == 1) return terms[0];
    return Expr::sum(std::move(terms));
}

Poly to_poly(const Expr& e);

Poly atom_poly(Expr base, int exp) {
    Poly p;
    add_term(p, Mono{{std::move(base), exp}}, Rational(1));
    return p;
}

// Invert a single-term poly (coeff and all factor exponents scaled by n<0),
// re-expanding any Sum base whose exponent turns positive.
Poly invert_term(const Mono& m, const Rational& c, int n) {
    Poly r = constant_poly(c.pow(n));
    for (const auto& [base, e] : m) {
        int ne = e * n;
        if (ne == 0) continue;
        if (base.kind() == Kind::Sum && ne > 0)
            r = mul(r, pow_poly(to_poly(base), ne));
        else
            r = mul(r, atom_poly(base, ne));
    }
    return r;
}

Poly to_poly(const Expr& e) {
    switch (e.kind()) {
    case Kind::Constant:
        return constant_poly(e.value());
    case Kind::Variable:
        return atom_poly(e, 1);
    case Kind::Neg:
        return mul(constant_poly(Rational(-1)), to_poly(e.base()));
    case Kind::Sum: {
        Poly r;
        for (const auto& t : e.operands())
            for (const auto& [m, c] : to_poly(t)) add_term(r, m, c);
        return r;
    }
    case Kind::Product: {
        Poly r = constant_poly(Rational(1));
        for (const auto& f : e.operands()) {
            r = mul(r, to_poly(f));
            if (r.empty()) return r;
        }
        return r;
    }
    case Kind::Power: {
        int n = e.exponent();
        if (n == 0) return constant_poly(Rational(1));
        Poly p = to_poly(e.base());
        if (n > 0) return pow_poly(p, n);
        if (p.empty()) throw DomainError("zero to a negative power");
        if (p.size() == 1) {
            const auto& [m, c] = *p.begin();
            return invert_term(m, c, n);
        }
        return atom_poly(rebuild(p), n);
    }
    case Kind::Sin: {
        Expr a = rebuild(to_poly(e.base()));
        if (a.is_constant(Rational(0))) return {};
        return atom_poly(Expr::sin(a), 1);
    }
    case Kind::Cos: {
        Expr a = rebuild(to_poly(e.base()));
        if (a.is_constant(Rational(0))) return constant_poly(Rational(1));
        return atom_poly(Expr::cos(a), 1);
    }
    case Kind::Exp: {
        Expr a = rebuild(to_poly(e.base()));
        if (a.is_constant(Rational(0))) return constant_poly(Rational(1));
        return atom_poly(Expr::exp(a), 1);
    }
    case Kind::Ln: {
        Expr a = rebuild(to_poly(e.base()));
        if (a.is_constant(Rational(1))) return {};
        return atom_poly(Expr::ln(a), 1);
    }
    }
    throw Error("Internal", "unreachable expression kind");
}

} // namespace

Expr normalize(const Expr& e) { return rebuild(to_poly(e)); }

std::vector<Term> normal_terms(const Expr& e) {
    std::vector<Term> r;
    for (const auto& [m, c] : to_poly(e)) r.push_back(Term{c, m});
    return r;
}

Expr expr_from_terms(const std::vector<Term>& terms) {
    Poly p;
    for (const auto& t : terms) add_term(p, t.factors, t.coeff);
    return rebuild(p);
}

bool is_zero(const Expr& e) {
    Expr n = normalize(e);
    return n.kind() == Kind::Constant && n.value().is_zero();
}

bool independent_of(const Expr& e, Var v) {
    switch (e.kind()) {
    case Kind::Constant: return true;
    case Kind::Variable: return e.var() != v;
    default:
        for (const auto& k : e.operands())
            if (!independent_of(k, v)) return false;
        return true;
    }
}

namespace {

// A canonical form made purely of variable powers is a polynomial; zero
// equivalence is decidable there without the numeric fallback.
bool purely_polynomial(const Expr& n) {
    if (n.kind() == Kind::Constant) return true;
    for (const Term& t : normal_terms(n))
        for (const auto& [base, e] : t.factors)
            if (base.kind() != Kind::Variable || e < 0) return false;
    return true;
}

} // namespace

EquivVerdict equivalence(const Expr& a, const Expr& b) {
    Expr d = normalize(Expr::sum({a, Expr::neg(b)}));
    if (d.kind() == Kind::Constant) return {d.value().is_zero(), EquivMethod::Symbolic};
    if (purely_polynomial(d)) return {false, EquivMethod::Symbolic};

    std::mt19937 rng(0x5eed1234u);
    std::uniform_real_distribution<double> dist(-2.0, 2.0);
    int sampled = 0;
    for (int attempt = 0; attempt < 4096 && sampled < 32; ++attempt) {
        Point p{dist(rng), dist(rng)};
        double va, vb;
        try {
            va = eval(a, p);
            vb = eval(b, p);
        } catch (const Error&) {
            continue; // outside some ln domain or overflowed; resample
        }
        ++sampled;
        double scale = std::max({1.0, std::fabs(va), std::fabs(vb)});
        if (std::fabs(va - vb) > 1e-9 * scale) return {false, EquivMethod::Numeric};
    }
    if (sampled == 0)
        throw DomainError("no valid sample points for numeric equivalence check");
    return {true, EquivMethod::Numeric};
}

bool equivalent(const Expr& a, const Expr& b) { return equivalence(a, b).equal; }

} // namespace xde
