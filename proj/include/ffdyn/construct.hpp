#ifndef FFDYN_CONSTRUCT_HPP
#define FFDYN_CONSTRUCT_HPP

#include <string>
#include <vector>

#include "ffdyn/dynmap.hpp"
#include "ffdyn/witness.hpp"

namespace ffdyn {

enum class RealizeStatus { realized, not_realizable, capped };

// One coefficient of the normal-form polynomial: a rational value, a
// squarefree defining polynomial over Q with "any root" semantics, or a
// chained description whose defining polynomial has coefficients in the
// previous coordinate's ring.
struct CoeffAssignment {
    std::string name;
    bool is_rational = false;
    Rational value;
    PolyQ root_of;        // any root works; every root is verified
    BiPoly chain_root_of; // outer variable: this coefficient, inner: the previous one
    bool chained = false;
};

struct CoefficientWitness {
    RealizeStatus status = RealizeStatus::not_realizable;
    bool verified = false;
    std::vector<CoeffAssignment> assignment;
    std::string note;
};

// Coefficient values a0 with c of portrait (m, n) under z^2 + a0, read off
// the witness divisor of z^2 + t over Q(t).  NotRealizable here is a proof:
// the stripping is exact.
CoefficientWitness realize_single(const Rational& c, Portrait target, int d,
                                  long degree_cap = kDefaultDegreeCap);

// Pairs (a, b) with c1, c2 realizing the requested portraits under
// z^3 + a z + b, by eliminating b and verifying every candidate in exact
// number-ring arithmetic.  Only verified pairs are emitted; an exhausted
// candidate list is reported as not-found-within-bounds, not a proof.
CoefficientWitness realize_pair_cubic(const Rational& c1, const Rational& c2, Portrait t1,
                                      Portrait t2, long degree_cap = kDefaultDegreeCap);

// The staged specialization: d = 2 delegates to realize_single, d = 3 to
// realize_pair_cubic; higher degrees are best-effort and report Capped.
CoefficientWitness realize_chain(int d, const std::vector<Rational>& points,
                                 const std::vector<Portrait>& targets,
                                 long degree_cap = kDefaultDegreeCap);

// Exact check that c has the stated portrait under z^d + coeffs, over Q.
// coeffs lists a_0..a_(d-2); the z^(d-1) coefficient is zero.
bool verify_portrait_rational(int d, const std::vector<Rational>& coeffs, const Rational& c,
                              Portrait target);

} // namespace ffdyn

#endif
