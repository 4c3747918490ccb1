#include "ffdyn/parse.hpp"

#include <cctype>

#include "ffdyn/qpoly.hpp"

namespace ffdyn {

namespace {

constexpr unsigned kMaxExponent = 4096;

struct Frac {
    BiPoly num, den;

    static Frac from(BiPoly p) { return {std::move(p), BiPoly::one()}; }
    Frac operator+(const Frac& o) const { return {num * o.den + o.num * den, den * o.den}; }
    Frac operator-(const Frac& o) const { return {num * o.den - o.num * den, den * o.den}; }
    Frac operator*(const Frac& o) const { return {num * o.num, den * o.den}; }
    Frac negated() const { return {-num, den}; }
};

struct Parser {
    const std::string& s;
    size_t pos = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool peek_is(char c) {
        skip_ws();
        return pos < s.size() && s[pos] == c;
    }
    bool accept(char c) {
        if (peek_is(c)) {
            ++pos;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& what) { throw parse_error(what, pos); }

    Frac parse_expr() {
        Frac acc = parse_term();
        for (;;) {
            if (accept('+')) {
                acc = acc + parse_term();
            } else if (accept('-')) {
                acc = acc - parse_term();
            } else {
                return acc;
            }
        }
    }

    Frac parse_term() {
        Frac acc = parse_factor();
        for (;;) {
            if (accept('*')) {
                acc = acc * parse_factor();
            } else if (accept('/')) {
                const size_t at = pos;
                Frac rhs = parse_factor();
                if (rhs.num.is_zero()) {
                    pos = at;
                    fail("division by the zero polynomial");
                }
                acc = Frac{acc.num * rhs.den, acc.den * rhs.num};
            } else {
                return acc;
            }
        }
    }

    Frac parse_factor() {
        bool negate = false;
        while (accept('-')) negate = !negate;
        Frac base = parse_base();
        if (accept('^')) {
            unsigned e = parse_uint();
            Frac acc = Frac::from(BiPoly::one());
            Frac b = base;
            unsigned k = e;
            while (k) {
                if (k & 1u) acc = acc * b;
                b = b * b;
                k >>= 1u;
            }
            base = acc;
        }
        return negate ? base.negated() : base;
    }

    Frac parse_base() {
        skip_ws();
        if (pos >= s.size()) fail("unexpected end of expression");
        const char c = s[pos];
        if (c == '(') {
            ++pos;
            Frac inner = parse_expr();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        if (c == 'z') {
            ++pos;
            return Frac::from(BiPoly::var());
        }
        if (c == 't') {
            ++pos;
            return Frac::from(BiPoly(PolyQ::var()));
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Integer v = parse_integer();
            return Frac::from(BiPoly(PolyQ(Rational(v))));
        }
        fail("expected 'z', 't', a number, or '('");
    }

    unsigned parse_uint() {
        skip_ws();
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            fail("expected a nonnegative integer exponent");
        unsigned long v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + static_cast<unsigned long>(s[pos] - '0');
            if (v > kMaxExponent) fail("exponent too large");
            ++pos;
        }
        return static_cast<unsigned>(v);
    }

    Integer parse_integer() {
        std::string digits;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            digits += s[pos];
            ++pos;
        }
        return Integer(digits, 10); // base fixed: leading zeros are not octal
    }

    void expect_end() {
        skip_ws();
        if (pos != s.size()) fail("unexpected trailing input");
    }
};

ParsedExpr parse_full(const std::string& text) {
    Parser p(text);
    Frac f = p.parse_expr();
    p.expect_end();
    if (f.den.is_zero()) throw parse_error("division by the zero polynomial", 0);
    return {std::move(f.num), std::move(f.den)};
}

std::string trimmed(const std::string& s) {
    size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

} // namespace

ParsedExpr parse_expression(const std::string& text) { return parse_full(text); }

RationalMap parse_map(const std::string& text) {
    ParsedExpr e = parse_full(text);
    if (e.num.is_zero()) throw parse_error("the zero map is not a morphism", 0);
    return new_map(to_ratfunc_poly(e.num), to_ratfunc_poly(e.den));
}

ProjPointK parse_point(const std::string& text) {
    if (trimmed(text) == "inf") return ProjPointK::infinity();
    ParsedExpr e = parse_full(text);
    if (e.num.deg() > 0 || e.den.deg() > 0)
        throw parse_error("points may not involve z", 0);
    PolyQ x = e.num.coeff(0);
    PolyQ y = e.den.coeff(0);
    if (x.is_zero() && y.is_zero()) throw parse_error("0/0 is not a point", 0);
    return ProjPointK(std::move(x), std::move(y));
}

Place parse_place(const std::string& text, bool trust_irreducible) {
    if (trimmed(text) == "inf") return Place::at_infinity();
    ParsedExpr e = parse_full(text);
    if (e.num.deg() > 0 || e.den.deg() > 0)
        throw parse_error("places may not involve z", 0);
    if (e.den.coeff(0).deg() != 0)
        throw parse_error("a place must be a polynomial in t", 0);
    PolyQ q = e.num.coeff(0);
    if (q.deg() < 1) throw parse_error("a finite place needs a nonconstant polynomial", 0);
    q = q.monic();
    if (q.deg() >= 2 && !rational_roots(q).empty())
        throw precondition_error("place polynomial is reducible (it has a rational root)");
    if (q.deg() >= 4 && !trust_irreducible)
        throw precondition_error(
            "irreducibility of degree >= 4 place polynomials is not certified here; "
            "pass the trust flag to use it anyway");
    return Place::finite(std::move(q));
}

Rational parse_constant(const std::string& text) {
    ParsedExpr e = parse_full(text);
    if (e.num.deg() > 0 || e.den.deg() > 0 || e.num.coeff(0).deg() > 0 || e.den.coeff(0).deg() > 0)
        throw parse_error("expected a constant", 0);
    Rational den = e.den.coeff(0).constant_term();
    if (is_zero(den)) throw parse_error("division by zero", 0);
    return Rational(e.num.coeff(0).constant_term() / den);
}

Portrait parse_portrait(const std::string& text) {
    std::string s = trimmed(text);
    if (!s.empty() && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
    const size_t comma = s.find(',');
    if (comma == std::string::npos) throw parse_error("expected 'm,n'", 0);
    long m, n;
    try {
        m = std::stol(trimmed(s.substr(0, comma)));
        n = std::stol(trimmed(s.substr(comma + 1)));
    } catch (const std::exception&) {
        throw parse_error("malformed portrait", 0);
    }
    if (m < 0 || n < 1) throw parse_error("portrait needs m >= 0, n >= 1", 0);
    return Portrait{m, n};
}

PlaceSet parse_place_set(const std::string& text) {
    PlaceSet out;
    size_t start = 0;
    PolyQ prod = PolyQ::one();
    while (start <= text.size()) {
        size_t end = text.find(';', start);
        if (end == std::string::npos) end = text.size();
        std::string piece = trimmed(text.substr(start, end - start));
        if (!piece.empty()) {
            if (piece == "inf") {
                out.include_infinity = true;
            } else {
                ParsedExpr e = parse_full(piece);
                if (e.num.deg() > 0 || e.den.deg() > 0 || e.den.coeff(0).deg() != 0)
                    throw parse_error("excluded places must be polynomials in t", 0);
                PolyQ q = e.num.coeff(0);
                if (q.deg() >= 1) prod = prod * q;
            }
        }
        if (end == text.size()) break;
        start = end + 1;
    }
    out.finite_part = prod.deg() > 0 ? squarefree_part(prod) : PolyQ::one();
    return out;
}

} // namespace ffdyn
