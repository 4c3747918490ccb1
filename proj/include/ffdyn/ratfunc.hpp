#ifndef FFDYN_RATFUNC_HPP
#define FFDYN_RATFUNC_HPP

#include "ffdyn/qpoly.hpp"

namespace ffdyn {

// Elements of K = Q(t): reduced fractions of PolyQ with monic denominator.
class RatFunc {
public:
    RatFunc() : num_(), den_(PolyQ::one()) {}
    RatFunc(int v) : num_(PolyQ(Rational(v))), den_(PolyQ::one()) {} // implicit for F-concept
    explicit RatFunc(const Rational& v) : num_(PolyQ(v)), den_(PolyQ::one()) {}
    explicit RatFunc(const PolyQ& p) : num_(p), den_(PolyQ::one()) {}
    RatFunc(PolyQ num, PolyQ den) { assign(std::move(num), std::move(den)); }

    static RatFunc t() { return RatFunc(PolyQ::var()); }

    const PolyQ& num() const { return num_; }
    const PolyQ& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.deg() == 0; }
    bool is_constant() const { return num_.deg() <= 0 && den_.deg() == 0; }
    Rational constant_value() const {
        if (!is_constant()) throw precondition_error("not a constant rational function");
        return Rational(num_.constant_term() / den_.constant_term());
    }

    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    RatFunc operator-() const {
        RatFunc r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }
    RatFunc operator+(const RatFunc& o) const {
        return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    RatFunc operator-(const RatFunc& o) const { return *this + (-o); }
    RatFunc operator*(const RatFunc& o) const { return RatFunc(num_ * o.num_, den_ * o.den_); }
    RatFunc operator/(const RatFunc& o) const {
        if (o.is_zero()) throw degenerate_input_error("division by zero in Q(t)");
        return RatFunc(num_ * o.den_, den_ * o.num_);
    }

private:
    void assign(PolyQ num, PolyQ den) {
        if (den.is_zero()) throw degenerate_input_error("zero denominator in Q(t)");
        if (num.is_zero()) {
            num_ = PolyQ();
            den_ = PolyQ::one();
            return;
        }
        PolyQ g = poly_gcd(num, den);
        if (g.deg() > 0) {
            num = num.exact_div(g);
            den = den.exact_div(g);
        }
        Rational lead = den.lc();
        num_ = num.scaled(Rational(1 / lead));
        den_ = den.scaled(Rational(1 / lead));
    }

    PolyQ num_;
    PolyQ den_; // monic
};

} // namespace ffdyn

#endif
