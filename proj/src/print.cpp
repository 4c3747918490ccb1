#include "ffdyn/print.hpp"

namespace ffdyn {

namespace {

std::string term_to_string(const Rational& c, const std::string& var, int k, bool first) {
    std::string out;
    Rational a = abs(c);
    const bool neg = sgn(c) < 0;
    if (first) {
        if (neg) out += "-";
    } else {
        out += neg ? " - " : " + ";
    }
    const bool unit = a == 1;
    if (k == 0) {
        out += a.get_str();
        return out;
    }
    if (!unit) out += a.get_str() + "*";
    out += var;
    if (k > 1) out += "^" + std::to_string(k);
    return out;
}

} // namespace

std::string poly_to_string(const PolyQ& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (int k = p.deg(); k >= 0; --k) {
        Rational c = p.coeff(k);
        if (is_zero(c)) continue;
        out += term_to_string(c, var, k, first);
        first = false;
    }
    return out;
}

std::string ratfunc_to_string(const RatFunc& f, const std::string& var) {
    if (f.den().deg() == 0 && f.den().coeff(0) == Rational(1))
        return poly_to_string(f.num(), var);
    return "(" + poly_to_string(f.num(), var) + ")/(" + poly_to_string(f.den(), var) + ")";
}

std::string bipoly_to_string(const BiPoly& p, const std::string& outer_var,
                             const std::string& inner_var) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (int k = p.deg(); k >= 0; --k) {
        const PolyQ c = p.coeff(k);
        if (c.is_zero()) continue;
        if (k == 0) {
            std::string cs = poly_to_string(c, inner_var);
            if (!first) out += " + ";
            out += (c.deg() > 0 || sgn(c.coeff(0)) < 0) && !first ? "(" + cs + ")" : cs;
            first = false;
            continue;
        }
        // constant rational coefficients print like plain terms
        if (c.deg() == 0) {
            out += term_to_string(c.coeff(0), outer_var, k, first);
        } else {
            if (!first) out += " + ";
            out += "(" + poly_to_string(c, inner_var) + ")*" + outer_var;
            if (k > 1) out += "^" + std::to_string(k);
        }
        first = false;
    }
    return out;
}

} // namespace ffdyn
