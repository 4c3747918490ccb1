#include "ffdyn/places.hpp"

#include "ffdyn/print.hpp"

namespace ffdyn {

namespace {

// multiplicity of q in p (p nonzero)
long multiplicity(PolyQ p, const PolyQ& q) {
    long m = 0;
    for (;;) {
        auto [quo, rem] = p.divmod(q);
        if (!rem.is_zero()) return m;
        ++m;
        p = std::move(quo);
        if (p.is_zero()) return m; // unreachable for nonzero p
    }
}

} // namespace

std::string Place::describe() const {
    return is_infinity() ? "inf" : poly_to_string(q_, "t");
}

std::optional<long> valuation(const RatFunc& x, const Place& p) {
    if (x.is_zero()) return std::nullopt;
    if (p.is_infinity()) return static_cast<long>(x.den().deg() - x.num().deg());
    return multiplicity(x.num(), p.polynomial()) - multiplicity(x.den(), p.polynomial());
}

RingPtr residue_ring(const Place& p) {
    if (p.is_infinity()) return nullptr;
    return std::make_shared<NumberRing>(p.polynomial());
}

NfElem reduce_scalar(const RatFunc& x, const Place& p, const RingPtr& ring) {
    auto v = valuation(x, p);
    if (!v) return NfElem(0);
    if (*v < 0) throw pole_at_place_error("pole at " + p.describe());
    if (*v > 0) return ring ? NfElem(ring, PolyQ()) : NfElem(0);
    if (p.is_infinity()) {
        return NfElem(Rational(x.num().lc() / x.den().lc()));
    }
    // v = 0 and gcd(num, den) = 1, so q divides neither coordinate
    const PolyQ& q = p.polynomial();
    NfElem n(ring, x.num() % q);
    NfElem d(ring, x.den() % q);
    return n / d;
}

NfElem reduce_scalar(const RatFunc& x, const Place& p) {
    return reduce_scalar(x, p, residue_ring(p));
}

ResiduePoint::ResiduePoint(NfElem px, NfElem py) : x(std::move(px)), y(std::move(py)) {
    if (x.is_zero() && y.is_zero())
        throw degenerate_input_error("residue point needs a nonzero coordinate");
    if (!y.is_zero()) {
        x = x / y;
        y = NfElem(1);
    } else {
        x = NfElem(1);
    }
}

ResiduePoint reduce_point(const PolyQ& x, const PolyQ& y, const Place& p, const RingPtr& ring) {
    if (x.is_zero() && y.is_zero())
        throw degenerate_input_error("reduce_point: zero point");
    if (p.is_infinity()) {
        const int m = std::max(x.deg(), y.deg());
        return ResiduePoint(NfElem(x.coeff(m)), NfElem(y.coeff(m)));
    }
    const PolyQ& q = p.polynomial();
    // coprimality means not both coordinates vanish mod q
    return ResiduePoint(NfElem(ring, x % q), NfElem(ring, y % q));
}

ResiduePoint reduce_point(const PolyQ& x, const PolyQ& y, const Place& p) {
    return reduce_point(x, y, p, residue_ring(p));
}

} // namespace ffdyn
