#ifndef FFDYN_QPOLY_HPP
#define FFDYN_QPOLY_HPP

#include <vector>

#include "ffdyn/unipoly.hpp"

namespace ffdyn {

// Univariate polynomials over Q: the coefficient layer every other module
// sits on.  Elements of Q[t] (places, cross-differences, witness divisors)
// and of Q[z] all use this type.
using PolyQ = UniPoly<Rational>;

// Monic gcd.  Internally clears to a primitive integer model and runs the
// subresultant PRS, so intermediate coefficient growth stays polynomially
// bounded; the contract is exactness.
PolyQ poly_gcd(const PolyQ& a, const PolyQ& b);

template <class F>
UniPoly<F> poly_gcd(const UniPoly<F>& a, const UniPoly<F>& b) {
    return poly_gcd_euclid(a, b);
}

// Monic polynomial with the same root set, all roots simple:
// p / gcd(p, p') (characteristic 0).
template <class F>
UniPoly<F> squarefree_part(const UniPoly<F>& p) {
    if (p.is_zero()) throw degenerate_input_error("squarefree_part of zero");
    if (p.deg() == 0) return UniPoly<F>::one();
    UniPoly<F> g = poly_gcd(p, p.derivative());
    return p.exact_div(g).monic();
}

// Remove from h every factor sharing a root with x, repeatedly, until the
// result is coprime to x.  Result is monic.  This implements the paper-side
// exclusion logic: h = result * (removed part) exactly.
template <class F>
UniPoly<F> strip_common_roots(UniPoly<F> h, const UniPoly<F>& x) {
    if (h.is_zero()) throw degenerate_input_error("strip_common_roots: zero input");
    if (x.is_zero() || x.deg() == 0) return h.monic();
    for (;;) {
        UniPoly<F> g = poly_gcd(h, x);
        if (g.deg() == 0) return h.monic();
        h = h.exact_div(g);
        if (h.deg() == 0) return UniPoly<F>::one();
    }
}

// Exactly the roots of p lying in Q, via a modular root search plus Hensel
// lifting and rational reconstruction on the primitive integer model; every
// candidate is re-verified by exact evaluation.  Sorted ascending.
std::vector<Rational> rational_roots(const PolyQ& p);

// Scale to integer coefficients with content 1 and positive leading
// coefficient.  Exposed for tests and for the bivariate layer.
std::vector<Integer> integer_primitive(const PolyQ& p);

} // namespace ffdyn

#endif
