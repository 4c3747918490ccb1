#ifndef FFDYN_NUMBERRING_HPP
#define FFDYN_NUMBERRING_HPP

#include <memory>
#include <string>

#include "ffdyn/qpoly.hpp"

namespace ffdyn {

// Q[x]/(modulus).  A field when the modulus is irreducible (residue fields
// of places); merely a squarefree ring during constructor verification,
// where failed inversions surface a proper factor instead of an answer.
struct NumberRing {
    PolyQ modulus; // monic, deg >= 1
    explicit NumberRing(PolyQ m) : modulus(std::move(m)) {
        if (modulus.deg() < 1) throw degenerate_input_error("number ring needs a nonconstant modulus");
        if (!(modulus.lc() == Rational(1))) modulus = modulus.monic();
    }
};

using RingPtr = std::shared_ptr<const NumberRing>;

// Thrown when inverting a zero divisor; carries the discovered factor of
// the modulus so callers can split.
struct non_invertible_error : std::runtime_error {
    PolyQ factor;
    explicit non_invertible_error(PolyQ f)
        : std::runtime_error("non-invertible residue element"), factor(std::move(f)) {}
};

// Residue element.  A null ring means a plain rational constant, which
// embeds into every ring; binary operations promote as needed.  This keeps
// NfElem usable as the coefficient field F in generic polynomial code,
// where F(0) and F(1) carry no ring context.
class NfElem {
public:
    NfElem() = default;
    NfElem(int v) : rep_(PolyQ(Rational(v))) {}
    explicit NfElem(const Rational& v) : rep_(PolyQ(v)) {}
    NfElem(RingPtr ring, PolyQ rep) : ring_(std::move(ring)), rep_(std::move(rep)) {
        if (ring_) rep_ = rep_ % ring_->modulus;
    }

    static NfElem generator(RingPtr ring) { return NfElem(std::move(ring), PolyQ::var()); }

    const RingPtr& ring() const { return ring_; }
    const PolyQ& rep() const { return rep_; }
    bool is_zero() const { return rep_.is_zero(); }
    bool is_rational() const { return rep_.deg() <= 0; }
    Rational rational_value() const {
        if (!is_rational()) throw precondition_error("residue element is not rational");
        return rep_.constant_term();
    }

    bool operator==(const NfElem& o) const { return rep_ == o.rep_; }
    bool operator!=(const NfElem& o) const { return !(*this == o); }

    NfElem operator-() const { return with(ring_, -rep_); }
    NfElem operator+(const NfElem& o) const { return apply(o, rep_ + o.rep_); }
    NfElem operator-(const NfElem& o) const { return apply(o, rep_ - o.rep_); }
    NfElem operator*(const NfElem& o) const { return apply(o, rep_ * o.rep_); }
    NfElem operator/(const NfElem& o) const { return *this * o.inverse(); }

    // Extended Euclid against the modulus.  gcd != 1 raises
    // non_invertible_error with the offending factor.
    NfElem inverse() const {
        if (rep_.is_zero()) throw degenerate_input_error("inverting zero residue element");
        if (!ring_) {
            return NfElem(Rational(1 / rep_.constant_term()));
        }
        PolyQ r0 = ring_->modulus, r1 = rep_;
        PolyQ s0, s1 = PolyQ::one();
        while (!r1.is_zero()) {
            auto [q, r] = r0.divmod(r1);
            PolyQ s2 = s0 - q * s1;
            r0 = std::move(r1);
            r1 = std::move(r);
            s0 = std::move(s1);
            s1 = std::move(s2);
        }
        if (r0.deg() > 0) throw non_invertible_error(r0.monic());
        return NfElem(ring_, s0.scaled(Rational(1 / r0.constant_term())));
    }

private:
    static NfElem with(RingPtr r, PolyQ rep) {
        NfElem e;
        e.ring_ = std::move(r);
        e.rep_ = std::move(rep);
        if (e.ring_) e.rep_ = e.rep_ % e.ring_->modulus;
        return e;
    }
    NfElem apply(const NfElem& o, PolyQ raw) const {
        return with(ring_ ? ring_ : o.ring_, std::move(raw));
    }

    RingPtr ring_; // null: plain rational constant
    PolyQ rep_;    // reduced mod modulus when ring_ is set
};

// total order on reduced representatives, for visited-point tables
inline int compare(const NfElem& a, const NfElem& b) {
    const int da = a.rep().deg(), db = b.rep().deg();
    if (da != db) return da < db ? -1 : 1;
    for (int i = da; i >= 0; --i) {
        const int c = cmp(a.rep().coeff(i), b.rep().coeff(i));
        if (c != 0) return c;
    }
    return 0;
}

} // namespace ffdyn

#endif
