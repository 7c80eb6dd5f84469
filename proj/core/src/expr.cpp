#include "xde/expr.hpp"

#include <cmath>
#include <sstream>

#include "xde/errors.hpp"

namespace xde {

struct Expr::Node {
    Kind kind;
    Rational value;          // Constant
    Var var = Var::X;        // Variable
    std::vector<Expr> kids;  // operands
    int exponent = 0;        // Power
};

Expr Expr::constant(Rational r) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Constant;
    n->value = r;
    return Expr(std::move(n));
}

Expr Expr::variable(Var v) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Variable;
    n->var = v;
    return Expr(std::move(n));
}

Expr Expr::sum(std::vector<Expr> terms) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Sum;
    n->kids = std::move(terms);
    return Expr(std::move(n));
}

Expr Expr::product(std::vector<Expr> factors) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Product;
    n->kids = std::move(factors);
    return Expr(std::move(n));
}

Expr Expr::power(Expr base, int exponent) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Power;
    n->kids = {std::move(base)};
    n->exponent = exponent;
    return Expr(std::move(n));
}

Expr Expr::sin(Expr arg) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Sin;
    n->kids = {std::move(arg)};
    return Expr(std::move(n));
}

Expr Expr::cos(Expr arg) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Cos;
    n->kids = {std::move(arg)};
    return Expr(std::move(n));
}

Expr Expr::exp(Expr arg) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Exp;
    n->kids = {std::move(arg)};
    return Expr(std::move(n));
}

Expr Expr::ln(Expr arg) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Ln;
    n->kids = {std::move(arg)};
    return Expr(std::move(n));
}

Expr Expr::neg(Expr inner) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Neg;
    n->kids = {std::move(inner)};
    return Expr(std::move(n));
}

Kind Expr::kind() const { return node_->kind; }
const Rational& Expr::value() const { return node_->value; }
Var Expr::var() const { return node_->var; }
const std::vector<Expr>& Expr::operands() const { return node_->kids; }
int Expr::exponent() const { return node_->exponent; }

int compare(const Expr& a, const Expr& b) {
    if (a.kind() != b.kind())
        return static_cast<int>(a.kind()) < static_cast<int>(b.kind()) ? -1 : 1;
    switch (a.kind()) {
    case Kind::Constant: {
        if (a.value() == b.value()) return 0;
        return a.value() < b.value() ? -1 : 1;
    }
    case Kind::Variable:
        if (a.var() == b.var()) return 0;
        return a.var() == Var::X ? -1 : 1;
    case Kind::Power: {
        int c = compare(a.base(), b.base());
        if (c != 0) return c;
        if (a.exponent() == b.exponent()) return 0;
        return a.exponent() < b.exponent() ? -1 : 1;
    }
    default: {
        const auto& ka = a.operands();
        const auto& kb = b.operands();
        std::size_t n = std::min(ka.size(), kb.size());
        for (std::size_t i = 0; i < n; ++i) {
            int c = compare(ka[i], kb[i]);
            if (c != 0) return c;
        }
        if (ka.size() == kb.size()) return 0;
        return ka.size() < kb.size() ? -1 : 1;
    }
    }
}

bool identical(const Expr& a, const Expr& b) { return compare(a, b) == 0; }

double eval(const Expr& e, Point p) {
    double r;
    switch (e.kind()) {
    case Kind::Constant: r = e.value().to_double(); break;
    case Kind::Variable: r = e.var() == Var::X ? p.x : p.y; break;
    case Kind::Sum: {
        r = 0.0;
        for (const auto& t : e.operands()) r += eval(t, p);
        break;
    }
    case Kind::Product: {
        r = 1.0;
        for (const auto& f : e.operands()) r *= eval(f, p);
        break;
    }
    case Kind::Power: r = std::pow(eval(e.base(), p), e.exponent()); break;
    case Kind::Sin: r = std::sin(eval(e.base(), p)); break;
    case Kind::Cos: r = std::cos(eval(e.base(), p)); break;
    case Kind::Exp: r = std::exp(eval(e.base(), p)); break;
    case Kind::Ln: {
        double a = eval(e.base(), p);
        if (!(a > 0.0)) throw DomainError("ln of non-positive value");
        r = std::log(a);
        break;
    }
    case Kind::Neg: r = -eval(e.base(), p); break;
    }
    if (!std::isfinite(r)) throw OverflowError("evaluation produced a non-finite value");
    return r;
}

namespace {

// Precedence levels for printing: 0 sum, 1 product, 2 power/atom.
void print(std::ostream& os, const Expr& e, int parent_prec);

// If t is negative-headed (Neg node, negative constant, or a product with a
// negative leading coefficient), strip the sign so sums print with " - ".
bool strip_sign(const Expr& t, Expr& positive) {
    if (t.kind() == Kind::Neg) {
        positive = t.base();
        return true;
    }
    if (t.kind() == Kind::Constant && t.value().num() < 0) {
        positive = Expr::constant(-t.value());
        return true;
    }
    if (t.kind() == Kind::Product && !t.operands().empty() &&
        t.operands()[0].kind() == Kind::Constant && t.operands()[0].value().num() < 0) {
        std::vector<Expr> fs(t.operands().begin() + 1, t.operands().end());
        Rational c = -t.operands()[0].value();
        if (!c.is_one()) fs.insert(fs.begin(), Expr::constant(c));
        positive = fs.size() == 1 ? fs[0] : Expr::product(std::move(fs));
        return true;
    }
    return false;
}

void print_sum(std::ostream& os, const Expr& e) {
    const auto& terms = e.operands();
    for (std::size_t i = 0; i < terms.size(); ++i) {
        Expr t = terms[i];
        Expr positive;
        if (strip_sign(t, positive)) {
            os << (i > 0 ? " - " : "-");
            print(os, positive, 1);
        } else {
            if (i > 0) os << " + ";
            print(os, t, 1);
        }
    }
}

void print_product(std::ostream& os, const Expr& e) {
    Expr positive;
    if (strip_sign(e, positive)) {
        os << "-";
        print(os, positive, 1);
        return;
    }
    const auto& fs = e.operands();
    for (std::size_t i = 0; i < fs.size(); ++i) {
        if (i > 0) os << "*";
        print(os, fs[i], 2);
    }
}

void print(std::ostream& os, const Expr& e, int parent_prec) {
    switch (e.kind()) {
    case Kind::Constant: {
        bool paren = parent_prec >= 2 && e.value().num() < 0;
        if (paren) os << "(";
        os << e.value().str();
        if (paren) os << ")";
        break;
    }
    case Kind::Variable: os << name(e.var()); break;
    case Kind::Sum:
        if (parent_prec >= 1) os << "(";
        print_sum(os, e);
        if (parent_prec >= 1) os << ")";
        break;
    case Kind::Product:
        if (parent_prec >= 2) os << "(";
        print_product(os, e);
        if (parent_prec >= 2) os << ")";
        break;
    case Kind::Power:
        // a nested power base needs parens: x^2^3 is not in the grammar
        if (e.base().kind() == Kind::Power) {
            os << "(";
            print(os, e.base(), 0);
            os << ")";
        } else {
            print(os, e.base(), 2);
        }
        os << "^" << e.exponent();
        break;
    case Kind::Sin: os << "sin("; print(os, e.base(), 0); os << ")"; break;
    case Kind::Cos: os << "cos("; print(os, e.base(), 0); os << ")"; break;
    case Kind::Exp: os << "exp("; print(os, e.base(), 0); os << ")"; break;
    case Kind::Ln: os << "ln("; print(os, e.base(), 0); os << ")"; break;
    case Kind::Neg:
        if (parent_prec >= 1) os << "(";
        os << "-";
        print(os, e.base(), 2);
        if (parent_prec >= 1) os << ")";
        break;
    }
}

} // namespace

std::string to_string(const Expr& e) {
    std::ostringstream os;
    print(os, e, 0);
    return os.str();
}

} // namespace xde
