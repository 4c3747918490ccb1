#ifndef FFDYN_PLACES_HPP
#define FFDYN_PLACES_HPP

#include <optional>
#include <string>

#include "ffdyn/numberring.hpp"
#include "ffdyn/ratfunc.hpp"

namespace ffdyn {

// A closed point of the projective line over the constant field: a monic
// irreducible polynomial in t, or the degree valuation at infinity.
// Irreducibility of the defining polynomial is a precondition, not verified
// here; the witness engine only builds places from certified-coprime
// divisors, and the CLI applies its own check to user input.  A finite
// place of t-degree e stands for e conjugate geometric places and weights
// all counting by e.
class Place {
public:
    static Place finite(PolyQ q) {
        if (q.deg() < 1) throw degenerate_input_error("finite place needs a nonconstant polynomial");
        Place p;
        p.q_ = q.monic();
        return p;
    }
    static Place at_infinity() { return Place(); }

    bool is_infinity() const { return q_.is_zero(); }
    const PolyQ& polynomial() const { return q_; } // zero for the infinite place
    int local_degree() const { return is_infinity() ? 1 : q_.deg(); }

    bool operator==(const Place& o) const { return q_ == o.q_; }

    std::string describe() const;

private:
    Place() = default;
    PolyQ q_;
};

// nullopt encodes the infinite valuation of 0 (distinguished, not a number)
std::optional<long> valuation(const RatFunc& x, const Place& p);

// Residue ring of a place: Q[t]/(q) at a finite place, Q itself (a null
// ring) at infinity.
RingPtr residue_ring(const Place& p);

// Residue of x at p; requires valuation(x, p) >= 0.
NfElem reduce_scalar(const RatFunc& x, const Place& p, const RingPtr& ring);
NfElem reduce_scalar(const RatFunc& x, const Place& p);

// A point of the residue projective line, normalized so that y = 1 when
// y != 0, else x = 1.
struct ResiduePoint {
    NfElem x, y;

    ResiduePoint() : x(1), y(0) {}
    ResiduePoint(NfElem px, NfElem py);

    bool is_infinity() const { return y.is_zero(); }
    bool operator==(const ResiduePoint& o) const { return x == o.x && y == o.y; }
    bool operator!=(const ResiduePoint& o) const { return !(*this == o); }
};

inline int compare(const ResiduePoint& a, const ResiduePoint& b) {
    const int cy = compare(a.y, b.y);
    if (cy != 0) return cy;
    return compare(a.x, b.x);
}

// Reduction of [x : y] with x, y coprime in Q[t], not both zero: scale so
// both coordinates are integral with one a unit, then reduce coordinatewise.
ResiduePoint reduce_point(const PolyQ& x, const PolyQ& y, const Place& p, const RingPtr& ring);
ResiduePoint reduce_point(const PolyQ& x, const PolyQ& y, const Place& p);

} // namespace ffdyn

#endif
