#include "ffdyn/abc.hpp"

#include "ffdyn/bipoly.hpp"
#include "ffdyn/heights.hpp"
#include "ffdyn/places.hpp"

namespace ffdyn {

AbcReport mason_stothers_check(const PolyQ& a, const PolyQ& b) {
    if (a.is_zero() || b.is_zero())
        throw precondition_error("mason_stothers_check: zero input");
    PolyQ c = a + b;
    if (c.is_zero()) throw precondition_error("mason_stothers_check: A + B = 0");
    if (a.deg() == 0 && b.deg() == 0)
        throw precondition_error("mason_stothers_check: all inputs constant");
    if (poly_gcd(a, b).deg() != 0 || poly_gcd(a, c).deg() != 0 || poly_gcd(b, c).deg() != 0)
        throw precondition_error("mason_stothers_check: inputs not pairwise coprime");

    const long lhs = std::max({a.deg(), b.deg(), c.deg()});
    const long rhs = squarefree_part(a * b * c).deg() - 1;
    return AbcReport::of(lhs, rhs);
}

AbcReport zero_place_count_check(const UniPoly<RatFunc>& f, const RatFunc& gamma) {
    const int e = f.deg();
    if (e < 3) throw precondition_error("zero_place_count_check: degree must be >= 3");
    if (f.lc() != RatFunc(1)) throw precondition_error("zero_place_count_check: f must be monic");
    if (gamma.is_constant()) throw precondition_error("zero_place_count_check: gamma is constant");
    {
        BiPoly fb = clear_denominators(f);
        if (bi_gcd(fb, fb.derivative()).deg() != 0)
            throw precondition_error("zero_place_count_check: f has repeated roots");
    }

    // sum of root heights: 0 for constant coefficients, else bounded by
    // e * max coefficient height (a computable upper bound on the paper's
    // term, which only weakens the verified inequality)
    long max_coeff_height = 0;
    bool all_constant = true;
    for (const auto& c : f.coeffs()) {
        if (!c.is_constant()) all_constant = false;
        max_coeff_height = std::max(max_coeff_height, weil_height(c));
    }
    const long root_height_sum = all_constant ? 0 : static_cast<long>(e) * max_coeff_height;
    const long lhs = weil_height(gamma) - 3 * static_cast<long>(e) * e * root_height_sum;

    RatFunc v = f.eval(gamma);
    if (v.is_zero()) {
        // gamma is a root of f: v_p(f(gamma)) is infinite at every place
        return AbcReport::of(lhs, lhs);
    }
    long rhs = v.num().deg() > 0 ? squarefree_part(v.num()).deg() : 0;
    auto vinf = valuation(v, Place::at_infinity());
    if (vinf && *vinf > 0) rhs += 1;
    return AbcReport::of(lhs, rhs);
}

} // namespace ffdyn
