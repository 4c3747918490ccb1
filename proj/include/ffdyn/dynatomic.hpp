#ifndef FFDYN_DYNATOMIC_HPP
#define FFDYN_DYNATOMIC_HPP

#include <set>

#include "ffdyn/dynmap.hpp"

namespace ffdyn {

// Squarefree z-divisor over K whose roots are exactly the finite points of
// minimum period n, built by gcd-stripping squarefree parts (never by the
// formal dynatomic product, whose multiplicities we do not need).
struct ExactPeriodDivisor {
    BiPoly divisor; // canonical primitive form in Q[t][z]
    bool includes_infinity = false;
};

// Defining data of the totally ramified points: a squarefree z-divisor over
// K of degree <= 2 plus an infinity flag; a degree-d map has at most two.
struct RamificationProfile {
    BiPoly totally_ramified_finite;
    bool totally_ramified_infinity = false;

    int count() const {
        return std::max(totally_ramified_finite.deg(), 0) + (totally_ramified_infinity ? 1 : 0);
    }
};

enum class PowerMapType { power_map, inverse_power_map, neither };

ExactPeriodDivisor exact_period_divisor(const RationalMap& phi, long n,
                                        long degree_cap = kDefaultDegreeCap);

RamificationProfile totally_ramified_points(const RationalMap& phi);

// n in [1..N] with every minimum-period-n point totally ramified (vacuously
// so when there is no such point).
std::set<long> x_set(const RationalMap& phi, long max_n, long degree_cap = kDefaultDegreeCap);

// m in [1..N] with phi totally ramified over phi^m(alpha), i.e. at
// phi^(m-1)(alpha).
std::set<long> y_set(const RationalMap& phi, const ProjPointK& alpha, long max_n,
                     long degree_cap = kDefaultDegreeCap);

// For f monic of degree >= 2 with vanishing z^(d-1) coefficient: true iff
// every coefficient is constant.
bool is_isotrivial_normal_form(const UniPoly<RatFunc>& f);

// Whether some point of portrait (m, n) moves with t (the complement of
// the W-obstruction for constant starting points).
bool has_nonconstant_portrait_point(const RationalMap& phi, long m, long n,
                                    long degree_cap = kDefaultDegreeCap);

// z^d-type: two totally ramified fixed points; z^(-d)-type: two totally
// ramified points forming a 2-cycle.
PowerMapType detect_power_map_conjugacy(const RationalMap& phi);

// Shared helper: pairs (A_j, B_j) in Q[t][z] with phi^j(z) = A_j / B_j,
// jointly content-normalized and z-coprime, for j = 0..n.
std::vector<std::pair<BiPoly, BiPoly>> symbolic_iterates(const RationalMap& phi, long n,
                                                         long degree_cap = kDefaultDegreeCap);

// Value of a z-divisor at a K-point (homogenized evaluation); zero iff the
// point is a root.  The point at infinity is never a root of a divisor.
PolyQ divisor_value_at(const BiPoly& divisor, const ProjPointK& p);

} // namespace ffdyn

#endif
