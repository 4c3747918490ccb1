#include "ffdyn/heights.hpp"

namespace ffdyn {

long weil_height(const ProjPointK& p) {
    return std::max({p.x().deg(), p.y().deg(), 0});
}

long weil_height(const RatFunc& x) {
    return std::max({x.num().deg(), x.den().deg(), 0});
}

long height_comparison_bound(const RationalMap& phi) {
    if (phi.degree() < 2) throw precondition_error("height comparison needs deg >= 2");
    const long res_deg = std::max(phi.res().deg(), 0);
    return res_deg + 2 * phi.max_coeff_tdeg();
}

CanonicalHeightEstimate canonical_height(const RationalMap& phi, const ProjPointK& alpha,
                                         const Rational& eps, long degree_cap) {
    if (phi.degree() < 2) throw precondition_error("canonical height needs deg >= 2");
    if (!(sgn(eps) > 0)) throw precondition_error("canonical height needs eps > 0");
    const long c = height_comparison_bound(phi);
    const long d = phi.degree();

    CanonicalHeightEstimate est;
    if (c == 0) {
        est.center = Rational(weil_height(alpha));
        est.radius = 0;
        est.iterations_used = 0;
        return est;
    }

    // smallest N with  C * d / (d^N * (d - 1)) <= eps
    long n = 0;
    Integer dn(1);
    const Rational cd = make_rational(c * d, d - 1);
    while (Rational(cd / Rational(dn)) > eps) {
        dn *= d;
        ++n;
    }

    IterateContext ctx(phi, alpha, degree_cap);
    est.center = Rational(Integer(weil_height(ctx.iterate(n))), dn);
    est.center.canonicalize();
    est.radius = eps;
    est.iterations_used = n;
    return est;
}

} // namespace ffdyn
