#ifndef FFDYN_DYNMAP_HPP
#define FFDYN_DYNMAP_HPP

#include <optional>
#include <span>
#include <vector>

#include "ffdyn/bipoly.hpp"
#include "ffdyn/places.hpp"

namespace ffdyn {

// z-degree cap for symbolic iteration (number of coefficients in play).
inline constexpr long kDefaultDegreeCap = 1 << 14;

// Preperiod m and minimum period n.
struct Portrait {
    long m = 0;
    long n = 1;
    bool operator==(const Portrait& o) const { return m == o.m && n == o.n; }
    bool operator!=(const Portrait& o) const { return !(*this == o); }
};

// A point of P^1(K) as a coprime pair of t-polynomials, canonical form:
// y monic when y != 0, else x = 1.
class ProjPointK {
public:
    ProjPointK() : x_(PolyQ::one()), y_() {} // the point at infinity
    ProjPointK(PolyQ x, PolyQ y);
    explicit ProjPointK(const RatFunc& v) : ProjPointK(v.num(), v.den()) {}
    explicit ProjPointK(const Rational& v) : ProjPointK(PolyQ(v), PolyQ::one()) {}

    static ProjPointK infinity() { return ProjPointK(); }
    // trusted constructor for pairs already known coprime (iteration fast path)
    static ProjPointK from_coprime(PolyQ x, PolyQ y);

    const PolyQ& x() const { return x_; }
    const PolyQ& y() const { return y_; }
    bool is_infinity() const { return y_.is_zero(); }

    bool operator==(const ProjPointK& o) const { return x_ == o.x_ && y_ == o.y_; }
    bool operator!=(const ProjPointK& o) const { return !(*this == o); }

private:
    PolyQ x_, y_;
};

// The set S of excluded places: a squarefree monic finite part plus an
// infinity flag.
struct PlaceSet {
    PolyQ finite_part = PolyQ::one();
    bool include_infinity = false;

    static PlaceSet none() { return {}; }
    static PlaceSet infinity_only() { return {PolyQ::one(), true}; }
    PlaceSet united(const PlaceSet& o) const;
    bool contains(const Place& p) const;
};

// A degree-d self-map of P^1 over K as a coprime primitive homogeneous
// pair.  fx[i] / gx[i] is the Q[t]-coefficient of X^i Y^(d-i).
class RationalMap {
public:
    int degree() const { return d_; }
    const std::vector<PolyQ>& fx() const { return fx_; }
    const std::vector<PolyQ>& gx() const { return gx_; }
    const PolyQ& res() const { return res_; } // Res(F, G), nonzero
    const PolyQ& res_radical() const { return res_radical_; }

    // affine pieces as z-polynomials over Q[t]
    BiPoly numerator_z() const { return BiPoly::from_coeffs(fx_); }
    BiPoly denominator_z() const { return BiPoly::from_coeffs(gx_); }

    long max_coeff_tdeg() const;

    bool operator==(const RationalMap& o) const {
        return d_ == o.d_ && fx_ == o.fx_ && gx_ == o.gx_;
    }

    friend RationalMap new_map(const UniPoly<RatFunc>&, const UniPoly<RatFunc>&);

private:
    int d_ = 0;
    std::vector<PolyQ> fx_, gx_;
    PolyQ res_, res_radical_;
};

// Cancels common z-factors, homogenizes, clears t-denominators jointly and
// removes joint content; rejects pairs with vanishing resultant.
RationalMap new_map(const UniPoly<RatFunc>& numerator, const UniPoly<RatFunc>& denominator);

// Resultant of two binary forms of the same formal degree given by full
// coefficient vectors (index = X-degree), over Q[t].
PolyQ binary_form_resultant(const std::vector<PolyQ>& f, const std::vector<PolyQ>& g);

// Single application; cancellation uses the fact that common factors of the
// composed pair divide Res(F, G).
ProjPointK apply_map(const RationalMap& phi, const ProjPointK& p, long degree_cap = kDefaultDegreeCap);

// Memoized forward orbit of one point under one map.  Owned by a single
// computation; iterates already computed are plain const reads, so a fully
// warmed context can be shared across threads.
class IterateContext {
public:
    IterateContext(const RationalMap& phi, ProjPointK alpha, long degree_cap = kDefaultDegreeCap)
        : phi_(phi), degree_cap_(degree_cap) {
        orbit_.push_back(std::move(alpha));
    }

    const RationalMap& map() const { return phi_; }
    const ProjPointK& alpha() const { return orbit_.front(); }
    long degree_cap() const { return degree_cap_; }

    const ProjPointK& iterate(long j);
    void warm_to(long j) { iterate(j); }

    // valid until the next iterate() that extends the orbit
    std::span<const ProjPointK> orbit_view() const { return {orbit_.data(), orbit_.size()}; }

private:
    const RationalMap& phi_;
    long degree_cap_;
    std::vector<ProjPointK> orbit_;
};

// Squarefree divisor of the finite bad-reduction places, plus the
// good-reduction test at infinity after 1/t-scaling.
PlaceSet bad_reduction_divisor(const RationalMap& phi);

bool has_good_reduction(const RationalMap& phi, const Place& p);

// r_p(a) = r_p(b): equal reduction, i.e. chordal distance < 1.
bool same_reduction(const ProjPointK& a, const ProjPointK& b, const Place& p);

// The reduction of phi at a good place, ready for residue-field iteration.
struct ResidueMap {
    int d;
    std::vector<NfElem> f, g;
    RingPtr ring;

    ResiduePoint apply(const ResiduePoint& p) const;
};
ResidueMap reduce_map(const RationalMap& phi, const Place& p, const RingPtr& ring);

// Exact portrait of alpha modulo p if a repeat shows up within `bound`
// applications; empty otherwise (the residue field is infinite, so absence
// of a repeat proves nothing).
std::optional<Portrait> portrait_mod_place(const RationalMap& phi, const ProjPointK& alpha,
                                           const Place& p, long bound);

// Exact global portrait when alpha is preperiodic with m + n <= bound.
std::optional<Portrait> global_portrait(IterateContext& ctx, long bound);

} // namespace ffdyn

#endif
