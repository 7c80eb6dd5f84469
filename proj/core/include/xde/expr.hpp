#pragma once

#include <memory>
#include <string>
#include <vector>

#include "xde/rational.hpp"

namespace xde {

enum class Kind { Constant, Variable, Sum, Product, Power, Sin, Cos, Exp, Ln, Neg };

enum class Var { X, Y };

inline Var other(Var v) { return v == Var::X ? Var::Y : Var::X; }
inline const char* name(Var v) { return v == Var::X ? "x" : "y"; }

// Evaluation site for numeric checks.
struct Point {
    double x;
    double y;
};

// Immutable expression tree over the variables x and y. Nodes are shared;
// copying an Expr is a pointer copy. All operations on expressions are pure.
class Expr {
public:
    Expr() : Expr(constant(Rational(0))) {}

    static Expr constant(Rational r);
    static Expr variable(Var v);
    static Expr sum(std::vector<Expr> terms);
    static Expr product(std::vector<Expr> factors);
    static Expr power(Expr base, int exponent);
    static Expr sin(Expr arg);
    static Expr cos(Expr arg);
    static Expr exp(Expr arg);
    static Expr ln(Expr arg);
    static Expr neg(Expr inner);

    Kind kind() const;
    const Rational& value() const;        // Constant
    Var var() const;                      // Variable
    const std::vector<Expr>& operands() const; // Sum/Product terms, unary arg, Power base
    const Expr& base() const { return operands()[0]; }
    int exponent() const;                 // Power

    bool is_constant(const Rational& r) const {
        return kind() == Kind::Constant && value() == r;
    }

private:
    struct Node;
    explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

// Total order on trees; the basis of canonical term ordering.
int compare(const Expr& a, const Expr& b);
// Structural equality (same tree, not mathematical equivalence).
bool identical(const Expr& a, const Expr& b);

// Canonical infix printing; output reparses to an equivalent expression.
std::string to_string(const Expr& e);

// Recursive pointwise evaluation. Throws DomainError for ln of a
// non-positive value and OverflowError when the result is not finite.
double eval(const Expr& e, Point p);

// Convenience builders for literal expression assembly.
namespace lit {
inline Expr c(std::int64_t n) { return Expr::constant(Rational(n)); }
inline Expr c(std::int64_t n, std::int64_t d) { return Expr::constant(Rational(n, d)); }
inline Expr x() { return Expr::variable(Var::X); }
inline Expr y() { return Expr::variable(Var::Y); }
inline Expr operator+(const Expr& a, const Expr& b) { return Expr::sum({a, b}); }
inline Expr operator-(const Expr& a, const Expr& b) { return Expr::sum({a, Expr::neg(b)}); }
inline Expr operator*(const Expr& a, const Expr& b) { return Expr::product({a, b}); }
inline Expr operator-(const Expr& a) { return Expr::neg(a); }
inline Expr pow(const Expr& b, int e) { return Expr::power(b, e); }
} // namespace lit

} // namespace xde
