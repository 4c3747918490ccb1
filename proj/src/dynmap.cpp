#include "ffdyn/dynmap.hpp"

#include <map>

namespace ffdyn {

ProjPointK::ProjPointK(PolyQ x, PolyQ y) : x_(std::move(x)), y_(std::move(y)) {
    if (x_.is_zero() && y_.is_zero())
        throw degenerate_input_error("projective point needs a nonzero coordinate");
    if (y_.is_zero()) {
        x_ = PolyQ::one();
        return;
    }
    if (!x_.is_zero()) {
        PolyQ g = poly_gcd(x_, y_);
        if (g.deg() > 0) {
            x_ = x_.exact_div(g);
            y_ = y_.exact_div(g);
        }
    }
    Rational lead = y_.lc();
    x_ = x_.scaled(Rational(1 / lead));
    y_ = y_.scaled(Rational(1 / lead));
}

ProjPointK ProjPointK::from_coprime(PolyQ x, PolyQ y) {
    ProjPointK p;
    if (x.is_zero() && y.is_zero())
        throw degenerate_input_error("projective point needs a nonzero coordinate");
    if (y.is_zero()) {
        p.x_ = PolyQ::one();
        p.y_ = PolyQ();
        return p;
    }
    Rational lead = y.lc();
    p.x_ = x.scaled(Rational(1 / lead));
    p.y_ = y.scaled(Rational(1 / lead));
    return p;
}

PlaceSet PlaceSet::united(const PlaceSet& o) const {
    PlaceSet out;
    out.include_infinity = include_infinity || o.include_infinity;
    PolyQ prod = finite_part * o.finite_part;
    out.finite_part = prod.deg() > 0 ? squarefree_part(prod) : PolyQ::one();
    return out;
}

bool PlaceSet::contains(const Place& p) const {
    if (p.is_infinity()) return include_infinity;
    if (finite_part.deg() < 1) return false;
    return (finite_part % p.polynomial()).is_zero();
}

namespace {

// coefficient-wise application of a degree-d form to a pair in a commutative
// ring: sum coeffs[i] * a^i * b^(d-i)
template <class P>
P apply_binary_form(const std::vector<P>& coeffs, const P& a, const P& b) {
    const size_t d = coeffs.size() - 1;
    std::vector<P> apow(d + 1), bpow(d + 1);
    apow[0] = P(1);
    bpow[0] = P(1);
    for (size_t i = 1; i <= d; ++i) {
        apow[i] = apow[i - 1] * a;
        bpow[i] = bpow[i - 1] * b;
    }
    P acc(0);
    for (size_t i = 0; i <= d; ++i) {
        if (coeffs[i] == P(0)) continue;
        acc = acc + coeffs[i] * apow[i] * bpow[d - i];
    }
    return acc;
}

template <class F>
F field_binary_form_resultant(const std::vector<F>& fv, const std::vector<F>& gv) {
    const size_t d = fv.size() - 1;
    const size_t n = 2 * d;
    // Sylvester matrix, f's rows first, highest coefficient leftmost
    std::vector<std::vector<F>> m(n, std::vector<F>(n, F(0)));
    for (size_t r = 0; r < d; ++r)
        for (size_t j = 0; j <= d; ++j) m[r][r + j] = fv[d - j];
    for (size_t r = 0; r < d; ++r)
        for (size_t j = 0; j <= d; ++j) m[d + r][r + j] = gv[d - j];
    F det(1);
    for (size_t k = 0; k < n; ++k) {
        size_t pivot = k;
        while (pivot < n && m[pivot][k] == F(0)) ++pivot;
        if (pivot == n) return F(0);
        if (pivot != k) {
            std::swap(m[pivot], m[k]);
            det = F(0) - det;
        }
        det = det * m[k][k];
        F inv = F(1) / m[k][k];
        for (size_t i = k + 1; i < n; ++i) {
            if (m[i][k] == F(0)) continue;
            F factor = m[i][k] * inv;
            for (size_t j = k; j < n; ++j) m[i][j] = m[i][j] - factor * m[k][j];
        }
    }
    return det;
}

} // namespace

PolyQ binary_form_resultant(const std::vector<PolyQ>& f, const std::vector<PolyQ>& g) {
    if (f.size() != g.size() || f.size() < 2)
        throw degenerate_input_error("binary_form_resultant: mismatched coefficient vectors");
    const size_t d = f.size() - 1;
    const size_t n = 2 * d;
    std::vector<std::vector<PolyQ>> m(n, std::vector<PolyQ>(n, PolyQ()));
    for (size_t r = 0; r < d; ++r)
        for (size_t j = 0; j <= d; ++j) m[r][r + j] = f[d - j];
    for (size_t r = 0; r < d; ++r)
        for (size_t j = 0; j <= d; ++j) m[d + r][r + j] = g[d - j];
    return polyq_det(std::move(m));
}

RationalMap new_map(const UniPoly<RatFunc>& numerator, const UniPoly<RatFunc>& denominator) {
    if (numerator.is_zero() && denominator.is_zero())
        throw degenerate_input_error("map needs a nonzero numerator or denominator");
    UniPoly<RatFunc> num = numerator, den = denominator;
    if (!num.is_zero() && !den.is_zero()) {
        UniPoly<RatFunc> g = poly_gcd_euclid(num, den);
        if (g.deg() > 0) {
            num = num.exact_div(g);
            den = den.exact_div(g);
        }
    }
    const int d = std::max(num.deg(), den.deg());
    if (d < 1) throw not_a_morphism_error("constant map after cancellation");

    // joint denominator so the ratio is preserved
    PolyQ common = PolyQ::one();
    auto fold_dens = [&common](const UniPoly<RatFunc>& p) {
        for (const auto& c : p.coeffs()) {
            PolyQ g = poly_gcd(common, c.den());
            common = common * c.den().exact_div(g);
        }
    };
    fold_dens(num);
    fold_dens(den);

    RationalMap phi;
    phi.d_ = d;
    phi.fx_.assign(static_cast<size_t>(d) + 1, PolyQ());
    phi.gx_.assign(static_cast<size_t>(d) + 1, PolyQ());
    for (int i = 0; i <= num.deg(); ++i) {
        RatFunc c = num.coeff(i);
        phi.fx_[static_cast<size_t>(i)] = c.num() * common.exact_div(c.den());
    }
    for (int i = 0; i <= den.deg(); ++i) {
        RatFunc c = den.coeff(i);
        phi.gx_[static_cast<size_t>(i)] = c.num() * common.exact_div(c.den());
    }

    // joint content and a deterministic sign
    PolyQ cont;
    for (const auto& c : phi.fx_)
        if (!c.is_zero()) cont = cont.is_zero() ? c.monic() : poly_gcd(cont, c);
    for (const auto& c : phi.gx_)
        if (!c.is_zero()) cont = cont.is_zero() ? c.monic() : poly_gcd(cont, c);
    if (cont.deg() > 0) {
        for (auto& c : phi.fx_)
            if (!c.is_zero()) c = c.exact_div(cont);
        for (auto& c : phi.gx_)
            if (!c.is_zero()) c = c.exact_div(cont);
    }
    Integer den_lcm(1), num_gcd(0);
    auto scan = [&](const std::vector<PolyQ>& v) {
        for (const auto& c : v)
            for (const auto& q : c.coeffs())
                mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den_mpz_t());
    };
    scan(phi.fx_);
    scan(phi.gx_);
    auto scan2 = [&](const std::vector<PolyQ>& v) {
        for (const auto& c : v)
            for (const auto& q : c.coeffs()) {
                Integer nn = q.get_num() * (den_lcm / q.get_den());
                mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), nn.get_mpz_t());
            }
    };
    scan2(phi.fx_);
    scan2(phi.gx_);
    Rational scale(den_lcm, num_gcd);
    scale.canonicalize();
    for (int i = d; i >= 0; --i) {
        const PolyQ& c = !phi.fx_[static_cast<size_t>(i)].is_zero()   ? phi.fx_[static_cast<size_t>(i)]
                         : !phi.gx_[static_cast<size_t>(i)].is_zero() ? phi.gx_[static_cast<size_t>(i)]
                                                                      : PolyQ();
        if (c.is_zero()) continue;
        if (sgn(c.lc()) < 0) scale = -scale;
        break;
    }
    for (auto& c : phi.fx_) c = c.scaled(scale);
    for (auto& c : phi.gx_) c = c.scaled(scale);

    phi.res_ = binary_form_resultant(phi.fx_, phi.gx_);
    if (phi.res_.is_zero())
        throw not_a_morphism_error("the homogeneous pair has vanishing resultant");
    phi.res_radical_ = phi.res_.deg() > 0 ? squarefree_part(phi.res_) : PolyQ::one();
    return phi;
}

long RationalMap::max_coeff_tdeg() const {
    long m = 0;
    for (const auto& c : fx_) m = std::max(m, static_cast<long>(c.deg()));
    for (const auto& c : gx_) m = std::max(m, static_cast<long>(c.deg()));
    return m;
}

ProjPointK apply_map(const RationalMap& phi, const ProjPointK& p, long degree_cap) {
    PolyQ a = apply_binary_form(phi.fx(), p.x(), p.y());
    PolyQ b = apply_binary_form(phi.gx(), p.x(), p.y());
    if (a.is_zero() && b.is_zero())
        throw degenerate_input_error("map application collapsed"); // unreachable for morphisms
    if (std::max(a.deg(), b.deg()) > degree_cap)
        throw resource_limit_error("iterate degree exceeds the configured cap");
    if (b.is_zero()) return ProjPointK::infinity();
    if (a.is_zero()) return ProjPointK(PolyQ(), PolyQ::one());
    // common factors of the composed pair divide Res(F, G), so cancellation
    // only ever needs gcds against the small resultant radical
    const PolyQ& rad = phi.res_radical();
    if (rad.deg() > 0) {
        for (;;) {
            PolyQ g = poly_gcd(rad, a);
            if (g.deg() > 0) g = poly_gcd(g, b);
            if (g.deg() == 0) break;
            a = a.exact_div(g);
            b = b.exact_div(g);
        }
    }
    return ProjPointK::from_coprime(std::move(a), std::move(b));
}

const ProjPointK& IterateContext::iterate(long j) {
    if (j < 0) throw precondition_error("negative iterate");
    while (static_cast<long>(orbit_.size()) <= j)
        orbit_.push_back(apply_map(phi_, orbit_.back(), degree_cap_));
    return orbit_[static_cast<size_t>(j)];
}

PlaceSet bad_reduction_divisor(const RationalMap& phi) {
    if (phi.degree() < 2) throw precondition_error("bad reduction needs deg >= 2");
    PlaceSet out;
    out.finite_part = phi.res().deg() > 0 ? squarefree_part(phi.res()) : PolyQ::one();

    // at infinity: scale by t^-M, reduce coefficients to their t^M parts
    const long m = phi.max_coeff_tdeg();
    std::vector<Rational> f0, g0;
    bool any = false;
    for (const auto& c : phi.fx()) {
        f0.push_back(c.coeff(static_cast<int>(m)));
        if (!is_zero(f0.back())) any = true;
    }
    for (const auto& c : phi.gx()) {
        g0.push_back(c.coeff(static_cast<int>(m)));
        if (!is_zero(g0.back())) any = true;
    }
    if (!any) {
        out.include_infinity = true; // cannot happen: some coefficient attains degree M
        return out;
    }
    bool fz = true, gz = true;
    for (const auto& c : f0) fz = fz && is_zero(c);
    for (const auto& c : g0) gz = gz && is_zero(c);
    if (fz || gz) {
        out.include_infinity = true;
        return out;
    }
    Rational res_inf = field_binary_form_resultant(f0, g0);
    out.include_infinity = is_zero(res_inf);
    return out;
}

bool has_good_reduction(const RationalMap& phi, const Place& p) {
    return !bad_reduction_divisor(phi).contains(p);
}

bool same_reduction(const ProjPointK& a, const ProjPointK& b, const Place& p) {
    RingPtr ring = residue_ring(p);
    return reduce_point(a.x(), a.y(), p, ring) == reduce_point(b.x(), b.y(), p, ring);
}

ResiduePoint ResidueMap::apply(const ResiduePoint& p) const {
    NfElem a = apply_binary_form(f, p.x, p.y);
    NfElem b = apply_binary_form(g, p.x, p.y);
    return ResiduePoint(std::move(a), std::move(b));
}

ResidueMap reduce_map(const RationalMap& phi, const Place& p, const RingPtr& ring) {
    ResidueMap rm;
    rm.d = phi.degree();
    rm.ring = ring;
    if (p.is_infinity()) {
        const long m = phi.max_coeff_tdeg();
        for (const auto& c : phi.fx()) rm.f.emplace_back(c.coeff(static_cast<int>(m)));
        for (const auto& c : phi.gx()) rm.g.emplace_back(c.coeff(static_cast<int>(m)));
        return rm;
    }
    const PolyQ& q = p.polynomial();
    for (const auto& c : phi.fx()) rm.f.emplace_back(ring, c % q);
    for (const auto& c : phi.gx()) rm.g.emplace_back(ring, c % q);
    return rm;
}

std::optional<Portrait> portrait_mod_place(const RationalMap& phi, const ProjPointK& alpha,
                                           const Place& p, long bound) {
    if (bad_reduction_divisor(phi).contains(p))
        throw precondition_error("portrait_mod_place: bad reduction at " + p.describe());
    RingPtr ring = residue_ring(p);
    ResidueMap rm = reduce_map(phi, p, ring);
    ResiduePoint pt = reduce_point(alpha.x(), alpha.y(), p, ring);

    auto cmp = [](const ResiduePoint& a, const ResiduePoint& b) { return compare(a, b) < 0; };
    std::map<ResiduePoint, long, decltype(cmp)> seen(cmp);
    for (long step = 0; step <= bound; ++step) {
        auto it = seen.find(pt);
        if (it != seen.end()) return Portrait{it->second, step - it->second};
        seen.emplace(pt, step);
        pt = rm.apply(pt);
    }
    return std::nullopt;
}

std::optional<Portrait> global_portrait(IterateContext& ctx, long bound) {
    for (long j = 1; j <= bound; ++j) {
        const ProjPointK pj = ctx.iterate(j);
        for (long i = 0; i < j; ++i) {
            if (ctx.iterate(i) == pj) return Portrait{i, j - i};
        }
    }
    return std::nullopt;
}

} // namespace ffdyn
