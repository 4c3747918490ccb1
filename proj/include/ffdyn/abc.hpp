#ifndef FFDYN_ABC_HPP
#define FFDYN_ABC_HPP

#include "ffdyn/ratfunc.hpp"
#include "ffdyn/unipoly.hpp"

namespace ffdyn {

struct AbcReport {
    long lhs = 0;  // degree/height side
    long rhs = 0;  // radical-count side
    bool holds = false;
    long slack = 0; // rhs - lhs

    static AbcReport of(long lhs, long rhs) { return {lhs, rhs, lhs <= rhs, rhs - lhs}; }
};

// Mason-Stothers for A + B = C over Q[t], pairwise coprime, not all
// constant:  max deg <= deg rad(A B C) - 1.  Unconditional in
// characteristic 0; a failure is a bug, not a counterexample.
AbcReport mason_stothers_check(const PolyQ& a, const PolyQ& b);

// Lower bound on the number of places (weighted by local degree) where
// f(gamma) vanishes: at least h(gamma) - (3 e^2 sum h(eta_i) + 2 g_K), with
// g_K = 0 here and sum h(eta_i) bounded through coefficient heights.
AbcReport zero_place_count_check(const UniPoly<RatFunc>& f, const RatFunc& gamma);

} // namespace ffdyn

#endif
