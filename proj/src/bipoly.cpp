#include "ffdyn/bipoly.hpp"

namespace ffdyn {

namespace {

// monic gcd of all coefficients; PolyQ::one() when the gcd is constant
PolyQ bi_content(const BiPoly& p) {
    PolyQ g;
    for (const auto& c : p.coeffs()) {
        if (c.is_zero()) continue;
        g = g.is_zero() ? c.monic() : poly_gcd(g, c);
        if (g.deg() == 0) return PolyQ::one();
    }
    return g.is_zero() ? PolyQ::one() : g;
}

// lc(g)^(deg p - deg g + 1) * p mod g over the ring Q[t].  The full lc
// power is applied even when the degree drops by more than one, as the
// subresultant divisions require.
BiPoly bi_pseudo_rem(const BiPoly& p, const BiPoly& g) {
    const int dg = g.deg();
    const PolyQ& lg = g.lc();
    std::vector<PolyQ> r(p.coeffs());
    auto deg_of = [&r]() {
        int d = static_cast<int>(r.size()) - 1;
        while (d >= 0 && r[static_cast<size_t>(d)].is_zero()) --d;
        return d;
    };
    int dr = deg_of();
    int remaining = dr - dg + 1;
    while (dr >= dg) {
        PolyQ top = r[static_cast<size_t>(dr)];
        for (auto& c : r) c = c * lg;
        --remaining;
        const int k = dr - dg;
        for (int i = 0; i <= dg; ++i)
            r[static_cast<size_t>(i + k)] = r[static_cast<size_t>(i + k)] - top * g.coeff(i);
        dr = deg_of();
    }
    r.resize(static_cast<size_t>(dr + 1));
    BiPoly out = BiPoly::from_coeffs(std::move(r));
    if (!out.is_zero() && remaining > 0) {
        PolyQ mult = PolyQ::one();
        for (int i = 0; i < remaining; ++i) mult = mult * lg;
        out = out.scaled(mult);
    }
    return out;
}

// pseudo-quotient Q with lc(g)^k * p = Q * g + R for some k >= 1; only the
// canonical form of Q is used downstream, so the exact power is immaterial
BiPoly bi_pseudo_quot(const BiPoly& p, const BiPoly& g) {
    const int dg = g.deg();
    const PolyQ& lg = g.lc();
    std::vector<PolyQ> r(p.coeffs());
    std::vector<PolyQ> q(static_cast<size_t>(std::max(p.deg() - dg + 1, 1)), PolyQ());
    auto deg_of = [&r]() {
        int d = static_cast<int>(r.size()) - 1;
        while (d >= 0 && r[static_cast<size_t>(d)].is_zero()) --d;
        return d;
    };
    int dr = deg_of();
    while (dr >= dg) {
        PolyQ top = r[static_cast<size_t>(dr)];
        for (auto& c : r) c = c * lg;
        for (auto& c : q) c = c * lg;
        const int k = dr - dg;
        q[static_cast<size_t>(k)] = q[static_cast<size_t>(k)] + top;
        for (int i = 0; i <= dg; ++i)
            r[static_cast<size_t>(i + k)] = r[static_cast<size_t>(i + k)] - top * g.coeff(i);
        dr = deg_of();
    }
    return BiPoly::from_coeffs(std::move(q));
}

} // namespace

BiPoly bi_canonical(const BiPoly& p) {
    if (p.is_zero()) return p;
    PolyQ cont = bi_content(p);
    std::vector<PolyQ> v;
    v.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs())
        v.push_back(cont.deg() > 0 && !c.is_zero() ? c.exact_div(cont) : c);
    // clear the remaining rational content
    Integer den(1), num(0);
    for (const auto& c : v)
        for (const auto& q : c.coeffs())
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
    for (const auto& c : v)
        for (const auto& q : c.coeffs()) {
            Integer n = q.get_num() * (den / q.get_den());
            mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), n.get_mpz_t());
        }
    Rational scale(den, num);
    scale.canonicalize();
    if (sgn(v.back().lc()) < 0) scale = -scale;
    for (auto& c : v) c = c.scaled(scale);
    return BiPoly::from_coeffs(std::move(v));
}

BiPoly bi_gcd(const BiPoly& a_in, const BiPoly& b_in) {
    if (a_in.is_zero() && b_in.is_zero()) throw degenerate_input_error("gcd(0, 0) is undefined");
    if (a_in.is_zero()) return bi_canonical(b_in);
    if (b_in.is_zero()) return bi_canonical(a_in);
    BiPoly a = bi_canonical(a_in), b = bi_canonical(b_in);
    if (a.deg() < b.deg()) std::swap(a, b);
    // contents are trivial after canonicalization, so the gcd is the
    // primitive part of the last nonzero PRS element
    PolyQ g = PolyQ::one(), h = PolyQ::one();
    for (;;) {
        const int delta = a.deg() - b.deg();
        BiPoly r = bi_pseudo_rem(a, b);
        if (r.is_zero()) break;
        if (r.deg() == 0) return BiPoly::one();
        a = std::move(b);
        PolyQ divisor = g;
        for (int i = 0; i < delta; ++i) divisor = divisor * h;
        std::vector<PolyQ> v;
        v.reserve(r.coeffs().size());
        for (const auto& c : r.coeffs()) v.push_back(c.is_zero() ? c : c.exact_div(divisor));
        b = BiPoly::from_coeffs(std::move(v));
        g = a.lc();
        if (delta > 0) {
            PolyQ num = PolyQ::one();
            for (int i = 0; i < delta; ++i) num = num * g;
            PolyQ hden = PolyQ::one();
            for (int i = 0; i < delta - 1; ++i) hden = hden * h;
            h = num.exact_div(hden);
        }
    }
    return bi_canonical(b);
}

BiPoly bi_exact_div(const BiPoly& p_in, const BiPoly& g_in) {
    BiPoly p = bi_canonical(p_in), g = bi_canonical(g_in);
    if (g.is_zero()) throw degenerate_input_error("bivariate division by zero");
    if (g.deg() == 0 && g.coeff(0).deg() == 0) return p;
    BiPoly q = bi_canonical(bi_pseudo_quot(p, g));
    if (q * g != p) throw degenerate_input_error("bi_exact_div: division not exact");
    return q;
}

BiPoly bi_squarefree(const BiPoly& p) {
    if (p.is_zero()) throw degenerate_input_error("bi_squarefree of zero");
    if (p.deg() == 0) return BiPoly::one();
    BiPoly g = bi_gcd(p, p.derivative());
    if (g.deg() == 0) return bi_canonical(p);
    return bi_exact_div(p, g);
}

BiPoly bi_strip(BiPoly h, const BiPoly& x) {
    if (h.is_zero()) throw degenerate_input_error("bi_strip: zero input");
    h = bi_canonical(h);
    if (x.is_zero() || x.deg() == 0) return h;
    for (;;) {
        BiPoly g = bi_gcd(h, x);
        if (g.deg() == 0) return h;
        h = bi_exact_div(h, g);
        if (h.deg() == 0) return BiPoly::one();
    }
}

PolyQ bi_eliminate(const BiPoly& a_in, const BiPoly& b_in) {
    if (a_in.is_zero() || b_in.is_zero())
        throw degenerate_input_error("bi_eliminate: zero input");
    BiPoly a = bi_canonical(a_in), b = bi_canonical(b_in);
    PolyQ acc = PolyQ::one();
    if (a.lc().deg() > 0) acc = acc * a.lc();
    if (b.lc().deg() > 0) acc = acc * b.lc();
    if (a.deg() == 0) return squarefree_part(acc * a.coeff(0));
    if (b.deg() == 0) return squarefree_part(acc * b.coeff(0));
    if (a.deg() < b.deg()) std::swap(a, b);
    PolyQ g = PolyQ::one(), h = PolyQ::one();
    for (;;) {
        const int delta = a.deg() - b.deg();
        BiPoly r = bi_pseudo_rem(a, b);
        if (r.is_zero()) {
            // common factor of positive degree: every specialization shares a root
            throw degenerate_input_error("bi_eliminate: inputs share a factor");
        }
        // track removed Q[t] parts so no projected root is lost
        PolyQ cont;
        for (const auto& c : r.coeffs()) {
            if (c.is_zero()) continue;
            cont = cont.is_zero() ? c.monic() : poly_gcd(cont, c);
            if (cont.deg() == 0) break;
        }
        if (cont.deg() > 0) acc = acc * cont;
        if (r.deg() == 0) {
            return squarefree_part(acc * r.coeff(0));
        }
        a = std::move(b);
        PolyQ divisor = g;
        for (int i = 0; i < delta; ++i) divisor = divisor * h;
        std::vector<PolyQ> v;
        v.reserve(r.coeffs().size());
        for (const auto& c : r.coeffs()) v.push_back(c.is_zero() ? c : c.exact_div(divisor));
        b = BiPoly::from_coeffs(std::move(v));
        if (b.lc().deg() > 0) acc = acc * b.lc();
        g = a.lc();
        if (delta > 0) {
            PolyQ num = PolyQ::one();
            for (int i = 0; i < delta; ++i) num = num * g;
            PolyQ hden = PolyQ::one();
            for (int i = 0; i < delta - 1; ++i) hden = hden * h;
            h = num.exact_div(hden);
        }
    }
}

PolyQ polyq_det(std::vector<std::vector<PolyQ>> m) {
    const size_t n = m.size();
    if (n == 0) return PolyQ::one();
    PolyQ prev = PolyQ::one();
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
            if (swap_row == n) return PolyQ();
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        const bool trivial_prev = prev.deg() == 0 && prev.coeff(0) == Rational(1);
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                PolyQ num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                m[i][j] = trivial_prev ? num : num.exact_div(prev);
            }
            m[i][k] = PolyQ();
        }
        prev = m[k][k];
    }
    PolyQ det = m[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

BiPoly clear_denominators(const UniPoly<RatFunc>& p) {
    PolyQ den = PolyQ::one();
    for (const auto& c : p.coeffs()) {
        PolyQ g = poly_gcd(den, c.den());
        den = den * c.den().exact_div(g);
    }
    std::vector<PolyQ> v;
    v.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) v.push_back(c.num() * den.exact_div(c.den()));
    return bi_canonical(BiPoly::from_coeffs(std::move(v)));
}

UniPoly<RatFunc> to_ratfunc_poly(const BiPoly& p) {
    std::vector<RatFunc> v;
    v.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) v.emplace_back(c);
    return UniPoly<RatFunc>::from_coeffs(std::move(v));
}

std::vector<PolyQ> t_slices(const BiPoly& p) {
    int tdeg = -1;
    for (const auto& c : p.coeffs()) tdeg = std::max(tdeg, c.deg());
    std::vector<PolyQ> slices;
    for (int j = 0; j <= tdeg; ++j) {
        std::vector<Rational> v;
        v.reserve(p.coeffs().size());
        for (const auto& c : p.coeffs()) v.push_back(c.coeff(j));
        slices.push_back(PolyQ::from_coeffs(std::move(v)));
    }
    return slices;
}

} // namespace ffdyn
