#ifndef FFDYN_WITNESS_HPP
#define FFDYN_WITNESS_HPP

#include <set>
#include <span>
#include <string>

#include "ffdyn/dynatomic.hpp"
#include "ffdyn/dynmap.hpp"

namespace ffdyn {

enum class WitnessStatus { realizable, not_realizable_by_finite_places, capped };

// Witness certification works without polynomial factorization: any
// nonconstant stripped divisor proves a place exists, because its
// irreducible factors are places.  Explicit witnesses are extracted only
// where rational roots exist, and each is re-verified by residue iteration
// before inclusion.
struct WitnessReport {
    Portrait requested;
    PolyQ divisor = PolyQ::one(); // squarefree monic; every root realizes the portrait
    std::vector<Rational> rational_witnesses;
    bool infinity_is_witness = false;
    WitnessStatus status = WitnessStatus::not_realizable_by_finite_places;

    // set on the globally-preperiodic branch: all good places outside the
    // roots of failing_places realize the portrait
    bool globally_preperiodic = false;
    PolyQ failing_places = PolyQ::one();

    std::string note;

    bool realizable() const { return status == WitnessStatus::realizable; }
};

// Monic squarefree polynomial in t whose roots are exactly the finite
// places with r_p(phi^(m+n)(alpha)) = r_p(phi^m(alpha)); the zero
// polynomial signals that the equality holds globally.
PolyQ cross_difference(IterateContext& ctx, long m, long n);

WitnessReport find_witness(const RationalMap& phi, const ProjPointK& alpha, Portrait target,
                           const PlaceSet& exclude, long degree_cap = kDefaultDegreeCap);

struct GridCell {
    Portrait portrait;
    WitnessReport report;
    bool m_in_y = false;
    bool n_in_x = false;
};

struct GridReport {
    long max_m = 0, max_n = 0;
    std::vector<GridCell> cells; // row-major: (m, n) at index m * max_n + (n - 1)
    std::set<long> y_obstructions;
    std::set<long> x_obstructions;

    const GridCell& cell(long m, long n) const {
        return cells[static_cast<size_t>(m * max_n + n - 1)];
    }
};

enum class GridExecution { serial, parallel };

// Evaluates find_witness on every cell (m, n) in [0..max_m] x [1..max_n].
// Cells are independent; the parallel path shares the warmed iterate table
// read-only and assembles results in row-major order either way.  Per-cell
// cap overruns become Capped statuses, never a grid abort.
GridReport portrait_grid(const RationalMap& phi, const ProjPointK& alpha, long max_m, long max_n,
                         const PlaceSet& exclude, GridExecution exec = GridExecution::parallel,
                         long degree_cap = kDefaultDegreeCap);

struct SweepEntry {
    Rational candidate;
    WitnessReport report;
};

// find_witness over a list of constant starting points; requires the
// portrait to be realized by some nonconstant point, since otherwise no
// constant alpha off the realizing set can ever match it.
std::vector<SweepEntry> starting_point_sweep(const RationalMap& phi, Portrait target,
                                             const PlaceSet& exclude,
                                             const std::vector<Rational>& candidates,
                                             long degree_cap = kDefaultDegreeCap);

} // namespace ffdyn

#endif
