#include "orbicheck/scalar_expr.hpp"

#include "orbicheck/errors.hpp"

#include <cctype>

namespace orbicheck {

namespace {

struct Parser {
    const std::string& s;
    size_t pos = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) { ++pos; return true; }
        return false;
    }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, long(pos)); }

    long integer() {
        skip_ws();
        size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        size_t digits = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == digits) { pos = start; fail("expected an integer"); }
        return std::stol(s.substr(start, pos - start));
    }

    // expr := term (('+'|'-') term)*
    CycNum expr() {
        CycNum acc = term();
        for (;;) {
            if (eat('+')) acc = acc + term();
            else if (eat('-')) acc = acc - term();
            else return acc;
        }
    }

    // term := factor (('*'|'/') factor)*
    CycNum term() {
        CycNum acc = factor();
        for (;;) {
            if (eat('*')) acc = acc * factor();
            else if (eat('/')) {
                size_t at = pos;
                CycNum d = factor();
                if (d.is_zero()) { pos = at; fail("division by zero"); }
                acc = acc / d;
            } else
                return acc;
        }
    }

    // factor := '-' factor | primary ('^' integer)?
    CycNum factor() {
        if (eat('-')) return -factor();
        CycNum base = primary();
        skip_ws();
        if (eat('^')) {
            long k = integer();
            if (base.is_zero() && k < 0) fail("zero to a negative power");
            return base.pow(k);
        }
        return base;
    }

    // primary := integer | 'zeta' '(' integer ')' | '(' expr ')'
    CycNum primary() {
        skip_ws();
        if (pos >= s.size()) fail("unexpected end of input");
        if (s.compare(pos, 4, "zeta") == 0) {
            pos += 4;
            if (!eat('(')) fail("expected '(' after zeta");
            long n = integer();
            if (n <= 0) fail("zeta order must be positive");
            if (!eat(')')) fail("expected ')' after zeta order");
            return CycNum::zeta(n);
        }
        if (eat('(')) {
            CycNum inner = expr();
            if (!eat(')')) fail("expected ')'");
            return inner;
        }
        char c = s[pos];
        if (std::isdigit(static_cast<unsigned char>(c)))
            return CycNum(Rational(integer()));
        fail(std::string("unexpected character '") + c + "'");
    }
};

} // namespace

CycNum parse_scalar(const std::string& text) {
    Parser p(text);
    CycNum v = p.expr();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return v;
}

} // namespace orbicheck
