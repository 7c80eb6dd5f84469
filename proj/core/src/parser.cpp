#include "xde/parser.hpp"

#include <cctype>
#include <cstdint>

#include "xde/errors.hpp"

namespace xde {

namespace {

class Parser {
public:
    explicit Parser(const std::string& text) : s_(text) {}

    Expr run() {
        Expr e = expr();
        skip_ws();
        if (pos_ < s_.size())
            fail({"end of input", "'+'", "'-'", "'*'", "'^'"});
        return e;
    }

private:
    Expr expr() {
        Expr e = term();
        for (;;) {
            skip_ws();
            if (accept('+')) {
                e = Expr::sum({e, term()});
            } else if (accept('-')) {
                e = Expr::sum({e, Expr::neg(term())});
            } else {
                return e;
            }
        }
    }

    Expr term() {
        Expr e = factor();
        for (;;) {
            skip_ws();
            if (accept('*'))
                e = Expr::product({e, factor()});
            else
                return e;
        }
    }

    Expr factor() {
        skip_ws();
        // Unary minus binds looser than '^' so -x^2 means -(x^2).
        if (accept('-')) return Expr::neg(factor());
        Expr a = atom();
        skip_ws();
        if (accept('^')) {
            skip_ws();
            std::size_t at = pos_;
            bool neg = accept('-');
            skip_ws();
            if (pos_ < s_.size() &&
                (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '('))
                throw UnsupportedConstruct("exponent at offset " + std::to_string(pos_) +
                                           " is not an integer literal");
            if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
                fail({"integer exponent"});
            std::int64_t v = 0;
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                v = v * 10 + (s_[pos_++] - '0');
            if (pos_ < s_.size() && (s_[pos_] == '.' || s_[pos_] == '/'))
                throw UnsupportedConstruct("exponent at offset " + std::to_string(start) +
                                           " is not an integer literal");
            if (v > 64)
                throw UnsupportedConstruct("exponent magnitude exceeds 64 at offset " +
                                           std::to_string(at));
            return Expr::power(a, static_cast<int>(neg ? -v : v));
        }
        return a;
    }

    Expr atom() {
        skip_ws();
        if (pos_ >= s_.size())
            fail({"number", "'x'", "'y'", "function", "'('", "'-'"});
        char c = s_[pos_];
        if (accept('(')) {
            Expr e = expr();
            expect(')');
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            std::string id;
            while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_])))
                id += s_[pos_++];
            if (id == "x") return Expr::variable(Var::X);
            if (id == "y") return Expr::variable(Var::Y);
            Kind k;
            if (id == "sin") k = Kind::Sin;
            else if (id == "cos") k = Kind::Cos;
            else if (id == "exp") k = Kind::Exp;
            else if (id == "ln") k = Kind::Ln;
            else
                throw UnsupportedConstruct("unknown function '" + id + "' at offset " +
                                           std::to_string(start));
            skip_ws();
            expect('(');
            Expr arg = expr();
            expect(')');
            switch (k) {
            case Kind::Sin: return Expr::sin(arg);
            case Kind::Cos: return Expr::cos(arg);
            case Kind::Exp: return Expr::exp(arg);
            default: return Expr::ln(arg);
            }
        }
        fail({"number", "'x'", "'y'", "function", "'('", "'-'"});
    }

    Expr number() {
        std::size_t start = pos_;
        std::int64_t ip = 0;
        bool any = false;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            ip = ip * 10 + (s_[pos_++] - '0');
            any = true;
        }
        if (pos_ < s_.size() && s_[pos_] == '.') {
            ++pos_;
            // decimal -> exact rational
            std::int64_t num = ip, den = 1;
            bool frac = false;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                num = num * 10 + (s_[pos_] - '0');
                den *= 10;
                ++pos_;
                frac = true;
            }
            if (!any && !frac) fail({"digit"});
            return Expr::constant(Rational(num, den));
        }
        if (!any) fail({"digit"});
        if (pos_ < s_.size() && s_[pos_] == '/') {
            // lookahead: only a rational literal if a digit follows
            std::size_t save = pos_;
            ++pos_;
            if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                std::int64_t den = 0;
                while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                    den = den * 10 + (s_[pos_++] - '0');
                if (den == 0)
                    throw SyntaxError(save + 1, {"nonzero integer"},
                                      "zero denominator at offset " + std::to_string(save + 1));
                return Expr::constant(Rational(ip, den));
            }
            pos_ = save;
        }
        (void)start;
        return Expr::constant(Rational(ip));
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) fail({std::string("'") + c + "'"});
    }

    [[noreturn]] void fail(std::vector<std::string> expected) {
        std::string msg = "syntax error at offset " + std::to_string(pos_) + ": expected ";
        for (std::size_t i = 0; i < expected.size(); ++i) {
            if (i) msg += " | ";
            msg += expected[i];
        }
        throw SyntaxError(pos_, std::move(expected), msg);
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

} // namespace

Expr parse(const std::string& text) { return Parser(text).run(); }

} // namespace xde
