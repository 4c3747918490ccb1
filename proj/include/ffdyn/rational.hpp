#ifndef FFDYN_RATIONAL_HPP
#define FFDYN_RATIONAL_HPP

#include <gmpxx.h>
#include <string>

#include "ffdyn/errors.hpp"

namespace ffdyn {

// Elements of the constant field restricted to the computable subfield Q.
// mpq_class keeps gcd(|num|, den) = 1 and den >= 1 after canonicalize(),
// which is exactly the invariant we need.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

// max(|num|, |den|): the naive height of a rational number, used only for
// deterministic candidate ordering.
inline Integer rational_height(const Rational& q) {
    Integer n = abs(q.get_num());
    Integer d = q.get_den();
    return n > d ? n : d;
}

// Accepts "p", "-p", "p/q" with optional sign; always base 10.
inline Rational parse_rational_string(const std::string& s) {
    try {
        Rational q(s, 10);
        q.canonicalize();
        if (q.get_den() == 0) throw degenerate_input_error("zero denominator in rational: " + s);
        return q;
    } catch (const std::invalid_argument&) {
        throw degenerate_input_error("malformed rational: " + s);
    }
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

} // namespace ffdyn

#endif
