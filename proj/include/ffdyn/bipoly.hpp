#ifndef FFDYN_BIPOLY_HPP
#define FFDYN_BIPOLY_HPP

#include <vector>

#include "ffdyn/qpoly.hpp"
#include "ffdyn/ratfunc.hpp"

namespace ffdyn {

// Primitive bivariate form: a polynomial in a main variable (z, or the
// coefficient unknown in the constructor) whose coefficients live in Q[t].
// Polynomials over Q(t) are cleared to this representation before any
// gcd/resultant work to control coefficient blowup.
using BiPoly = UniPoly<PolyQ>;

// Canonical form: integer coefficients, joint content 1 (both the Q[t]
// content and the rational content), leading coefficient of the leading
// coefficient positive.  Canonical forms are equal iff the polynomials
// agree up to a nonzero rational factor.
BiPoly bi_canonical(const BiPoly& p);

// gcd up to the canonical normalization, via the subresultant PRS over Q[t].
BiPoly bi_gcd(const BiPoly& a, const BiPoly& b);

// Exact quotient of canonical forms: requires g | p in Q(t)[main var].
BiPoly bi_exact_div(const BiPoly& p, const BiPoly& g);

// Same root set over the algebraic closure of Q(t), all roots simple.
BiPoly bi_squarefree(const BiPoly& p);

// Remove from h every factor sharing a root with x (in the main variable).
BiPoly bi_strip(BiPoly h, const BiPoly& x);

// Eliminates the main variable: returns r in Q[t] whose roots include every
// t0 at which a and b acquire a common root or both leading coefficients
// vanish.  Used for candidate generation only; callers re-verify each root.
PolyQ bi_eliminate(const BiPoly& a, const BiPoly& b);

// Exact determinant of a matrix over Q[t] (fraction-free Bareiss).
PolyQ polyq_det(std::vector<std::vector<PolyQ>> m);

// Conversions to and from K[main var].
BiPoly clear_denominators(const UniPoly<RatFunc>& p);
UniPoly<RatFunc> to_ratfunc_poly(const BiPoly& p);

// Coefficient slices in the inner variable: p = sum_j slice_j(main) * t^j.
std::vector<PolyQ> t_slices(const BiPoly& p);

} // namespace ffdyn

#endif
