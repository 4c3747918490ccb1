#ifndef FFDYN_UNIPOLY_HPP
#define FFDYN_UNIPOLY_HPP

#include <algorithm>
#include <utility>
#include <vector>

#include "ffdyn/errors.hpp"
#include "ffdyn/rational.hpp"

namespace ffdyn {

// Dense univariate polynomial over a coefficient field F, lowest degree
// first.  The zero polynomial is the empty coefficient vector and has
// deg() == -1 (the "-infinity" sentinel; every real degree is >= 0, so
// ordinary integer comparisons do the right thing).
//
// F needs: F(int), + - * / unary-, ==.  Instantiated with Rational,
// RatFunc, NfElem, and UniPoly<Rational> itself (ring ops only in the
// latter case; division-based members require a field).
template <class F>
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(const F& v) {
        if (!(v == F(0))) c_.push_back(v);
    }
    // lets UniPoly nest as its own coefficient type (F(0), F(1), ... in generic code)
    explicit UniPoly(int v) : UniPoly(F(v)) {}

    static UniPoly from_coeffs(std::vector<F> v) {
        UniPoly p;
        p.c_ = std::move(v);
        p.trim();
        return p;
    }
    // the variable itself
    static UniPoly var() { return from_coeffs({F(0), F(1)}); }
    static UniPoly zero() { return UniPoly(); }
    static UniPoly one() { return UniPoly(F(1)); }

    int deg() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }

    // coefficient of x^i, zero outside the stored range
    F coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return F(0);
        return c_[static_cast<size_t>(i)];
    }
    const std::vector<F>& coeffs() const { return c_; }

    const F& lc() const { return c_.back(); } // precondition: nonzero
    F constant_term() const { return coeff(0); }

    bool operator==(const UniPoly& o) const { return c_ == o.c_; }
    bool operator!=(const UniPoly& o) const { return !(*this == o); }

    UniPoly operator-() const {
        UniPoly r(*this);
        for (auto& x : r.c_) x = F(-1) * x;
        return r;
    }

    UniPoly operator+(const UniPoly& o) const {
        std::vector<F> v(std::max(c_.size(), o.c_.size()), F(0));
        for (size_t i = 0; i < c_.size(); ++i) v[i] = c_[i];
        for (size_t i = 0; i < o.c_.size(); ++i) v[i] = F(v[i] + o.c_[i]);
        return from_coeffs(std::move(v));
    }
    UniPoly operator-(const UniPoly& o) const { return *this + (-o); }

    UniPoly operator*(const UniPoly& o) const {
        if (is_zero() || o.is_zero()) return UniPoly();
        std::vector<F> v(c_.size() + o.c_.size() - 1, F(0));
        for (size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == F(0)) continue;
            for (size_t j = 0; j < o.c_.size(); ++j)
                v[i + j] = F(v[i + j] + c_[i] * o.c_[j]);
        }
        return from_coeffs(std::move(v));
    }

    UniPoly scaled(const F& s) const {
        if (s == F(0)) return UniPoly();
        UniPoly r(*this);
        for (auto& x : r.c_) x = F(x * s);
        return r;
    }

    UniPoly shifted(int k) const { // multiply by x^k
        if (is_zero()) return UniPoly();
        std::vector<F> v(c_.size() + static_cast<size_t>(k), F(0));
        for (size_t i = 0; i < c_.size(); ++i) v[i + static_cast<size_t>(k)] = c_[i];
        return from_coeffs(std::move(v));
    }

    UniPoly pow(unsigned e) const {
        UniPoly r = one(), b = *this;
        while (e) {
            if (e & 1u) r = r * b;
            b = b * b;
            e >>= 1u;
        }
        return r;
    }

    UniPoly derivative() const {
        if (c_.size() <= 1) return UniPoly();
        std::vector<F> v(c_.size() - 1, F(0));
        for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = F(c_[i] * F(static_cast<int>(i)));
        return from_coeffs(std::move(v));
    }

    F eval(const F& x) const {
        F r(0);
        for (size_t i = c_.size(); i-- > 0;) r = F(r * x + c_[i]);
        return r;
    }

    // substitute another polynomial for the variable
    UniPoly compose(const UniPoly& inner) const {
        UniPoly r;
        for (size_t i = c_.size(); i-- > 0;) r = r * inner + UniPoly(c_[i]);
        return r;
    }

    // Division with remainder; requires F to be a field.
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const {
        if (d.is_zero()) throw degenerate_input_error("polynomial division by zero");
        UniPoly r(*this);
        if (r.deg() < d.deg()) return {UniPoly(), r};
        std::vector<F> q(static_cast<size_t>(r.deg() - d.deg()) + 1, F(0));
        while (!r.is_zero() && r.deg() >= d.deg()) {
            F f = F(r.lc() / d.lc());
            int k = r.deg() - d.deg();
            q[static_cast<size_t>(k)] = f;
            // r -= f * x^k * d, done in place
            for (int i = 0; i <= d.deg(); ++i)
                r.c_[static_cast<size_t>(i + k)] = F(r.c_[static_cast<size_t>(i + k)] - f * d.c_[static_cast<size_t>(i)]);
            r.trim();
        }
        return {from_coeffs(std::move(q)), r};
    }
    UniPoly operator/(const UniPoly& d) const { return divmod(d).first; }
    UniPoly operator%(const UniPoly& d) const { return divmod(d).second; }

    // Quotient that is known to be exact; throws if a remainder appears.
    UniPoly exact_div(const UniPoly& d) const {
        auto [q, r] = divmod(d);
        if (!r.is_zero()) throw degenerate_input_error("exact_div: division not exact");
        return q;
    }

    UniPoly monic() const {
        if (is_zero()) return UniPoly();
        return scaled(F(F(1) / lc()));
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == F(0)) c_.pop_back();
    }
    std::vector<F> c_;
};

// Monic gcd by the Euclidean algorithm.  Correct over any field; the
// coefficient-growth-aware paths for Q and Q(t) live in qpoly/bipoly and
// shadow this one via overloads.
template <class F>
UniPoly<F> poly_gcd_euclid(UniPoly<F> a, UniPoly<F> b) {
    if (a.is_zero() && b.is_zero())
        throw degenerate_input_error("gcd(0, 0) is undefined");
    while (!b.is_zero()) {
        UniPoly<F> r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

// Resultant over a field, with the Sylvester-determinant sign convention
// Res(a, b) = det Syl(a, b), a's coefficient rows first.  Only the
// vanishing and valuations of resultants are semantically load-bearing,
// but the convention is fixed here once: Res(z-2, z-3) = -1.
template <class F>
F resultant(const UniPoly<F>& a, const UniPoly<F>& b) {
    if (a.is_zero() || b.is_zero())
        throw degenerate_input_error("resultant of the zero polynomial");
    if (a.deg() == 0 && b.deg() == 0) return F(1);
    if (a.deg() < b.deg()) {
        F sign = (a.deg() % 2 == 1 && b.deg() % 2 == 1) ? F(-1) : F(1);
        return F(sign * resultant(b, a));
    }
    if (b.deg() == 0) {
        F r(1);
        for (int i = 0; i < a.deg(); ++i) r = F(r * b.lc());
        return r;
    }
    UniPoly<F> rem = a % b;
    if (rem.is_zero()) return F(0);
    F sign = (a.deg() % 2 == 1 && b.deg() % 2 == 1) ? F(-1) : F(1);
    F lcpow(1);
    for (int i = 0; i < a.deg() - rem.deg(); ++i) lcpow = F(lcpow * b.lc());
    return F(sign * lcpow * resultant(b, rem));
}

} // namespace ffdyn

#endif
