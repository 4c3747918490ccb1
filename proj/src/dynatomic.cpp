#include "ffdyn/dynatomic.hpp"

#include <map>

namespace ffdyn {

namespace {

std::vector<long> proper_divisors(long n) {
    std::vector<long> out;
    for (long k = 1; k < n; ++k)
        if (n % k == 0) out.push_back(k);
    return out;
}

std::vector<long> prime_divisors(long n) {
    std::vector<long> out;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

// remove the joint Q[t] content and the joint rational content of a pair,
// preserving the ratio
void normalize_pair(BiPoly& a, BiPoly& b) {
    PolyQ cont;
    auto fold = [&cont](const BiPoly& p) {
        for (const auto& c : p.coeffs()) {
            if (c.is_zero()) continue;
            cont = cont.is_zero() ? c.monic() : poly_gcd(cont, c);
        }
    };
    fold(a);
    fold(b);
    auto divide = [](BiPoly& p, const PolyQ& g) {
        std::vector<PolyQ> v;
        v.reserve(p.coeffs().size());
        for (const auto& c : p.coeffs()) v.push_back(c.is_zero() ? c : c.exact_div(g));
        p = BiPoly::from_coeffs(std::move(v));
    };
    if (cont.deg() > 0) {
        divide(a, cont);
        divide(b, cont);
    }
    Integer den(1), num(0);
    auto scan = [&](const BiPoly& p) {
        for (const auto& c : p.coeffs())
            for (const auto& q : c.coeffs())
                mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
    };
    scan(a);
    scan(b);
    auto scan2 = [&](const BiPoly& p) {
        for (const auto& c : p.coeffs())
            for (const auto& q : c.coeffs()) {
                Integer nn = q.get_num() * (den / q.get_den());
                mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), nn.get_mpz_t());
            }
    };
    scan2(a);
    scan2(b);
    if (sgn(num) == 0) return; // both zero: nothing to normalize
    Rational scale(den, num);
    scale.canonicalize();
    auto rescale = [&scale](BiPoly& p) {
        std::vector<PolyQ> v;
        v.reserve(p.coeffs().size());
        for (const auto& c : p.coeffs()) v.push_back(c.scaled(scale));
        p = BiPoly::from_coeffs(std::move(v));
    };
    rescale(a);
    rescale(b);
}

BiPoly apply_form_bipoly(const std::vector<PolyQ>& coeffs, const BiPoly& a, const BiPoly& b) {
    const size_t d = coeffs.size() - 1;
    std::vector<BiPoly> apow(d + 1), bpow(d + 1);
    apow[0] = BiPoly::one();
    bpow[0] = BiPoly::one();
    for (size_t i = 1; i <= d; ++i) {
        apow[i] = apow[i - 1] * a;
        bpow[i] = bpow[i - 1] * b;
    }
    BiPoly acc;
    for (size_t i = 0; i <= d; ++i) {
        if (coeffs[i].is_zero()) continue;
        acc = acc + apow[i] * bpow[d - i] * BiPoly(coeffs[i]);
    }
    return acc;
}

// exact period of infinity if it is periodic with period <= n
std::optional<long> infinity_exact_period(const RationalMap& phi, long n, long cap) {
    IterateContext ctx(phi, ProjPointK::infinity(), cap);
    for (long j = 1; j <= n; ++j)
        if (ctx.iterate(j).is_infinity()) return j;
    return std::nullopt;
}

} // namespace

std::vector<std::pair<BiPoly, BiPoly>> symbolic_iterates(const RationalMap& phi, long n,
                                                         long degree_cap) {
    std::vector<std::pair<BiPoly, BiPoly>> out;
    out.emplace_back(BiPoly::var(), BiPoly::one());
    for (long j = 1; j <= n; ++j) {
        const auto& [a, b] = out.back();
        if (std::max(a.deg(), b.deg()) * static_cast<long>(phi.degree()) > degree_cap)
            throw resource_limit_error("symbolic iterate degree exceeds the configured cap");
        BiPoly a2 = apply_form_bipoly(phi.fx(), a, b);
        BiPoly b2 = apply_form_bipoly(phi.gx(), a, b);
        normalize_pair(a2, b2);
        out.emplace_back(std::move(a2), std::move(b2));
    }
    return out;
}

ExactPeriodDivisor exact_period_divisor(const RationalMap& phi, long n, long degree_cap) {
    if (phi.degree() < 2) throw precondition_error("exact_period_divisor needs deg >= 2");
    if (n < 1) throw precondition_error("period must be positive");
    auto iters = symbolic_iterates(phi, n, degree_cap);
    const BiPoly z = BiPoly::var();

    std::map<long, BiPoly> memo;
    auto fixed_part = [&](long j) {
        // squarefree numerator of phi^j(z) - z
        const auto& [a, b] = iters[static_cast<size_t>(j)];
        BiPoly num = a - z * b;
        if (num.is_zero()) throw degenerate_input_error("phi^j is the identity"); // impossible, d >= 2
        return bi_squarefree(num);
    };
    // build exact-period divisors bottom-up over the divisors of n
    std::vector<long> divs = proper_divisors(n);
    divs.push_back(n);
    for (long k : divs) {
        BiPoly dk = fixed_part(k);
        for (long kk : proper_divisors(k)) dk = bi_strip(dk, memo.at(kk));
        memo.emplace(k, std::move(dk));
    }

    ExactPeriodDivisor out;
    out.divisor = memo.at(n);
    auto e = infinity_exact_period(phi, n, degree_cap);
    out.includes_infinity = e && *e == n;
    return out;
}

RamificationProfile totally_ramified_points(const RationalMap& phi) {
    const int d = phi.degree();
    if (d < 2) throw precondition_error("ramification profile needs deg >= 2");
    const BiPoly f = phi.numerator_z();
    const BiPoly g = phi.denominator_z();

    // finite rho: mult_rho(f'g - fg') = e_rho - 1, so totally ramified points
    // are exactly the roots of multiplicity >= d-1 of the critical polynomial
    BiPoly crit = f.derivative() * g - f * g.derivative();
    RamificationProfile prof;
    if (crit.is_zero()) throw degenerate_input_error("zero critical polynomial"); // impossible in char 0
    BiPoly w = crit;
    BiPoly der = crit;
    for (int j = 1; j <= d - 2 && w.deg() > 0; ++j) {
        der = der.derivative();
        if (der.is_zero()) break;
        w = bi_gcd(w, der);
    }
    prof.totally_ramified_finite = w.deg() > 0 ? bi_squarefree(w) : BiPoly::one();

    // infinity: multiplicity of infinity in the fiber over phi(infinity)
    const PolyQ fd = f.coeff(d);
    const PolyQ gd = g.coeff(d);
    BiPoly fiber = f.scaled(gd) - g.scaled(fd);
    prof.totally_ramified_infinity = fiber.deg() <= 0;

    if (prof.count() > 2) throw degenerate_input_error("more than two totally ramified points");
    return prof;
}

std::set<long> x_set(const RationalMap& phi, long max_n, long degree_cap) {
    RamificationProfile prof = totally_ramified_points(phi);
    std::vector<char> member(static_cast<size_t>(max_n) + 1, 0);
    std::exception_ptr failure;

    // the per-period checks are independent
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (long n = 1; n <= max_n; ++n) {
        try {
            ExactPeriodDivisor epd = exact_period_divisor(phi, n, degree_cap);
            bool finite_ok;
            if (epd.divisor.deg() <= 0) {
                finite_ok = true; // no finite point of minimum period n
            } else if (prof.totally_ramified_finite.deg() <= 0) {
                finite_ok = false;
            } else {
                BiPoly g = bi_gcd(epd.divisor, prof.totally_ramified_finite);
                finite_ok = g.deg() == epd.divisor.deg();
            }
            const bool inf_ok = !epd.includes_infinity || prof.totally_ramified_infinity;
            if (finite_ok && inf_ok) member[static_cast<size_t>(n)] = 1;
        } catch (...) {
#ifdef _OPENMP
#pragma omp critical
#endif
            {
                if (!failure) failure = std::current_exception();
            }
        }
    }
    if (failure) std::rethrow_exception(failure);
    std::set<long> out;
    for (long n = 1; n <= max_n; ++n)
        if (member[static_cast<size_t>(n)]) out.insert(n);
    return out;
}

PolyQ divisor_value_at(const BiPoly& divisor, const ProjPointK& p) {
    if (divisor.is_zero()) throw degenerate_input_error("divisor_value_at: zero divisor");
    if (p.is_infinity()) return PolyQ::one();
    const int d = divisor.deg();
    PolyQ acc;
    std::vector<PolyQ> xpow(static_cast<size_t>(d) + 1), ypow(static_cast<size_t>(d) + 1);
    xpow[0] = PolyQ::one();
    ypow[0] = PolyQ::one();
    for (int i = 1; i <= d; ++i) {
        xpow[static_cast<size_t>(i)] = xpow[static_cast<size_t>(i - 1)] * p.x();
        ypow[static_cast<size_t>(i)] = ypow[static_cast<size_t>(i - 1)] * p.y();
    }
    for (int i = 0; i <= d; ++i)
        acc = acc + divisor.coeff(i) * xpow[static_cast<size_t>(i)] * ypow[static_cast<size_t>(d - i)];
    return acc;
}

std::set<long> y_set(const RationalMap& phi, const ProjPointK& alpha, long max_n, long degree_cap) {
    RamificationProfile prof = totally_ramified_points(phi);
    IterateContext ctx(phi, alpha, degree_cap);
    std::set<long> out;
    for (long m = 1; m <= max_n; ++m) {
        const ProjPointK& p = ctx.iterate(m - 1);
        bool hit;
        if (p.is_infinity()) {
            hit = prof.totally_ramified_infinity;
        } else {
            hit = prof.totally_ramified_finite.deg() > 0 &&
                  divisor_value_at(prof.totally_ramified_finite, p).is_zero();
        }
        if (hit) out.insert(m);
    }
    return out;
}

bool is_isotrivial_normal_form(const UniPoly<RatFunc>& f) {
    const int d = f.deg();
    if (d < 2) throw precondition_error("normal form needs degree >= 2");
    if (f.lc() != RatFunc(1)) throw precondition_error("normal form must be monic");
    if (f.coeff(d - 1) != RatFunc(0))
        throw precondition_error("normal form must have zero z^(d-1) coefficient");
    for (const auto& c : f.coeffs())
        if (!c.is_constant()) return false;
    return true;
}

bool has_nonconstant_portrait_point(const RationalMap& phi, long m, long n, long degree_cap) {
    if (phi.degree() < 2) throw precondition_error("needs deg >= 2");
    auto iters = symbolic_iterates(phi, m + n, degree_cap);
    auto cross = [&iters](long mu, long nu) {
        const auto& [am, bm] = iters[static_cast<size_t>(mu)];
        const auto& [an, bn] = iters[static_cast<size_t>(mu + nu)];
        return an * bm - am * bn;
    };
    BiPoly h = cross(m, n);
    if (h.is_zero()) throw degenerate_input_error("phi^(m+n) equals phi^m"); // impossible, d >= 2
    BiPoly d = bi_squarefree(h);
    for (long l : prime_divisors(n)) {
        BiPoly x = cross(m, n / l);
        if (!x.is_zero()) d = bi_strip(d, bi_squarefree(x));
    }
    if (m >= 1) {
        BiPoly x = cross(m - 1, n);
        if (!x.is_zero()) d = bi_strip(d, bi_squarefree(x));
    }
    if (d.deg() <= 0) return false;
    // a constant root contributes to every t-coefficient slice
    std::vector<PolyQ> slices = t_slices(d);
    PolyQ c;
    for (const auto& s : slices) {
        if (s.is_zero()) continue;
        c = c.is_zero() ? s.monic() : poly_gcd(c, s);
        if (c.deg() == 0) break;
    }
    const int cdeg = c.is_zero() ? 0 : c.deg();
    return d.deg() > cdeg;
}

PowerMapType detect_power_map_conjugacy(const RationalMap& phi) {
    if (phi.degree() < 2) throw precondition_error("needs deg >= 2");
    RamificationProfile prof = totally_ramified_points(phi);
    if (prof.count() != 2) return PowerMapType::neither;

    const BiPoly s = prof.totally_ramified_finite;
    const int sdeg = std::max(s.deg(), 0);
    IterateContext ctx_inf(phi, ProjPointK::infinity(), kDefaultDegreeCap);
    const bool inf_fixed = prof.totally_ramified_infinity && ctx_inf.iterate(1).is_infinity();

    auto iters = symbolic_iterates(phi, 2, kDefaultDegreeCap);
    const BiPoly z = BiPoly::var();
    const BiPoly per1 = bi_squarefree(iters[1].first - z * iters[1].second);

    // all totally ramified points fixed?
    bool all_fixed = true;
    if (prof.totally_ramified_infinity && !inf_fixed) all_fixed = false;
    if (sdeg > 0 && bi_gcd(s, per1).deg() != sdeg) all_fixed = false;
    if (all_fixed) return PowerMapType::power_map;

    // a 2-cycle through the two totally ramified points?
    if (sdeg == 2 && !prof.totally_ramified_infinity) {
        const BiPoly per2_raw = bi_squarefree(iters[2].first - z * iters[2].second);
        const BiPoly per2 = bi_strip(per2_raw, per1);
        if (bi_gcd(s, per2).deg() != 2) return PowerMapType::neither;
        // phi maps the root set of s into itself
        BiPoly s_of_phi = apply_form_bipoly(s.coeffs(), iters[1].first, iters[1].second);
        if (s_of_phi.is_zero() || bi_gcd(s, s_of_phi).deg() == 2)
            return PowerMapType::inverse_power_map;
        return PowerMapType::neither;
    }
    if (sdeg == 1 && prof.totally_ramified_infinity) {
        // the finite point is rational over K: s = u(t) z + v(t)
        ProjPointK rho(-s.coeff(0), s.coeff(1));
        IterateContext ctx_rho(phi, rho, kDefaultDegreeCap);
        if (ctx_rho.iterate(1).is_infinity() && ctx_inf.iterate(1) == rho)
            return PowerMapType::inverse_power_map;
    }
    return PowerMapType::neither;
}

} // namespace ffdyn
