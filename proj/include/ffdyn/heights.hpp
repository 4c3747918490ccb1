#ifndef FFDYN_HEIGHTS_HPP
#define FFDYN_HEIGHTS_HPP

#include "ffdyn/dynmap.hpp"

namespace ffdyn {

// Weil height on P^1(K) in degree units: max(deg x, deg y) for a coprime
// pair, h(infinity) = 0.  Integer-valued under the v_p-normalization.
long weil_height(const ProjPointK& p);
long weil_height(const RatFunc& x);

// Explicit height-comparison constant: |h(phi(P)) - d h(P)| <= C_phi.
// Deliberately generous (deg_t Res(F,G) + 2 max coefficient degree) and
// validated by property tests; only its validity matters downstream.
long height_comparison_bound(const RationalMap& phi);

struct CanonicalHeightEstimate {
    Rational center;
    Rational radius;
    long iterations_used = 0;

    Rational lower() const { return Rational(center - radius); }
    Rational upper() const { return Rational(center + radius); }
};

// Truncated limit h(phi^N(alpha)) / d^N with N chosen so the telescoped
// comparison bound is below eps.  Radius is 0 when C_phi = 0 (the limit is
// exact), eps otherwise.
CanonicalHeightEstimate canonical_height(const RationalMap& phi, const ProjPointK& alpha,
                                         const Rational& eps, long degree_cap = kDefaultDegreeCap);

} // namespace ffdyn

#endif
