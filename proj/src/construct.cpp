#include "ffdyn/construct.hpp"

#include <algorithm>
#include <array>
#include <deque>

namespace ffdyn {

namespace {

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

void sort_by_height(std::vector<Rational>& v) {
    std::sort(v.begin(), v.end(), [](const Rational& a, const Rational& b) {
        const Integer ha = rational_height(a), hb = rational_height(b);
        if (ha != hb) return ha < hb;
        return a < b;
    });
}

// minimality inequalities as orbit index pairs
std::vector<std::pair<long, long>> inequality_indices(Portrait t) {
    std::vector<std::pair<long, long>> out;
    for (long l : prime_divisors(t.n)) out.push_back({t.m + t.n / l, t.m});
    if (t.m >= 1) out.push_back({t.m + t.n - 1, t.m - 1});
    return out;
}

// forward orbit of c under f(z) = z^d + coeffs[d-2] z^(d-2) + ... + coeffs[0]
template <class F>
std::vector<F> polynomial_orbit(int d, const std::vector<F>& coeffs, const F& c, long steps) {
    std::vector<F> orbit{c};
    for (long j = 0; j < steps; ++j) {
        const F& z = orbit.back();
        F acc(0);
        F pw(1);
        for (size_t i = 0; i < coeffs.size(); ++i) {
            acc = acc + coeffs[i] * pw;
            pw = pw * z;
        }
        F zd(1);
        for (int i = 0; i < d; ++i) zd = zd * z;
        orbit.push_back(zd + acc);
    }
    return orbit;
}

// ---- single-level algebraic verification with gcd splitting --------------
//
// One coefficient slot holds the ring generator (as PolyQ::var()), the rest
// are constants.  Failing roots are stripped from the modulus and the pass
// restarts; the returned squarefree modulus has every root verified.
struct SingleLevelTask {
    int d;
    std::vector<PolyQ> coeffs; // a_0..a_(d-2) as polynomials in the generator
    std::vector<std::pair<Rational, Portrait>> points;
};

PolyQ verify_single_level(const SingleLevelTask& task, PolyQ modulus) {
    for (;;) {
        if (modulus.deg() < 1) return PolyQ();
        RingPtr ring = std::make_shared<NumberRing>(modulus);
        bool restarted = false;
        for (const auto& [c, target] : task.points) {
            std::vector<NfElem> coeffs;
            coeffs.reserve(task.coeffs.size());
            for (const auto& p : task.coeffs) coeffs.emplace_back(ring, p);
            auto orbit = polynomial_orbit<NfElem>(task.d, coeffs, NfElem(c), target.m + target.n);

            NfElem eq = orbit[static_cast<size_t>(target.m + target.n)] -
                        orbit[static_cast<size_t>(target.m)];
            if (!eq.is_zero()) {
                PolyQ keep = poly_gcd(eq.rep(), modulus);
                if (keep.deg() < 1) return PolyQ();
                modulus = keep;
                restarted = true;
                break;
            }
            for (auto [i, j] : inequality_indices(target)) {
                NfElem diff =
                    orbit[static_cast<size_t>(i)] - orbit[static_cast<size_t>(j)];
                if (diff.is_zero()) return PolyQ(); // fails at every root
                PolyQ bad = poly_gcd(diff.rep(), modulus);
                if (bad.deg() >= 1) {
                    modulus = strip_common_roots(modulus, bad);
                    if (modulus.deg() < 1) return PolyQ();
                    restarted = true;
                    break;
                }
            }
            if (restarted) break;
        }
        if (!restarted) return modulus;
    }
}

// ---- cubic pair machinery -------------------------------------------------

PolyQ substitute_inner(const BiPoly& p, const Rational& a0) {
    std::vector<Rational> v;
    v.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) v.push_back(c.eval(a0));
    return PolyQ::from_coeffs(std::move(v));
}

UniPoly<NfElem> reduce_outer(const BiPoly& p, const RingPtr& ring) {
    std::vector<NfElem> v;
    v.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) v.emplace_back(ring, c);
    return UniPoly<NfElem>::from_coeffs(std::move(v));
}

BiPoly lift_outer(const UniPoly<NfElem>& p) {
    std::vector<PolyQ> v;
    v.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) v.push_back(c.rep());
    return BiPoly::from_coeffs(std::move(v));
}

struct CubicContext {
    Rational c1, c2;
    Portrait t1, t2;
};

CoefficientWitness emit_rational_pair(const Rational& a0, const Rational& b0) {
    CoefficientWitness w;
    w.status = RealizeStatus::realized;
    w.verified = true;
    w.assignment.push_back({"a", true, a0, PolyQ(), BiPoly(), false});
    w.assignment.push_back({"b", true, b0, PolyQ(), BiPoly(), false});
    return w;
}

// Verification over Q[a]/(p) with b = b_expr(a); strips failing roots.
PolyQ verify_a_level(const CubicContext& ctx, PolyQ p, const PolyQ& b_expr) {
    SingleLevelTask task;
    task.d = 3;
    task.coeffs = {b_expr, PolyQ::var()};
    task.points = {{ctx.c1, ctx.t1}, {ctx.c2, ctx.t2}};
    return verify_single_level(task, std::move(p));
}

// Tower verification: a = any root of p, b = any root of w(b) (monic over
// Q[a]/(p), degree >= 2).  Equalities must vanish identically in the tower;
// inequalities strip the a-roots where some consistent b-root fails, via
// elimination (a superset of the bad roots, so stripping stays sound).
std::optional<std::pair<PolyQ, BiPoly>> verify_tower(const CubicContext& ctx, PolyQ p,
                                                     const BiPoly& w_raw) {
    using TElem = UniPoly<NfElem>;
    for (;;) {
        if (p.deg() < 1) return std::nullopt;
        RingPtr ring = std::make_shared<NumberRing>(p);
        TElem w = reduce_outer(w_raw, ring);
        if (w.deg() < 1) return std::nullopt;
        try {
            w = w.scaled(NfElem(1) / w.lc());
        } catch (const non_invertible_error& e) {
            PolyQ keep = strip_common_roots(p, e.factor);
            if (keep.deg() < 1) return std::nullopt;
            p = keep;
            continue;
        }

        const NfElem agen = NfElem::generator(ring);
        const TElem bvar = TElem::var() % w;
        auto reduce = [&w](TElem x) { return std::move(x) % w; };

        bool restarted = false;
        const std::array<std::pair<Rational, Portrait>, 2> pts{
            {{ctx.c1, ctx.t1}, {ctx.c2, ctx.t2}}};
        for (const auto& [c, target] : pts) {
            std::vector<TElem> orbit{TElem(NfElem(c))};
            for (long j = 0; j < target.m + target.n; ++j) {
                const TElem& z = orbit.back();
                TElem z3 = reduce(reduce(z * z) * z);
                orbit.push_back(reduce(z3 + z.scaled(agen) + bvar));
            }
            TElem eq = orbit[static_cast<size_t>(target.m + target.n)] -
                       orbit[static_cast<size_t>(target.m)];
            if (!eq.is_zero()) return std::nullopt; // sound; possibly misses candidates
            for (auto [i, j] : inequality_indices(target)) {
                TElem diff =
                    orbit[static_cast<size_t>(i)] - orbit[static_cast<size_t>(j)];
                if (diff.is_zero()) return std::nullopt;
                PolyQ over_approx = bi_eliminate(lift_outer(w), lift_outer(diff));
                PolyQ bad = poly_gcd(over_approx, p);
                if (bad.deg() >= 1) {
                    PolyQ keep = strip_common_roots(p, bad);
                    if (keep.deg() < 1) return std::nullopt;
                    p = keep;
                    restarted = true;
                    break;
                }
            }
            if (restarted) break;
        }
        if (!restarted) return std::make_pair(p, lift_outer(w));
    }
}

CoefficientWitness emit_chain_pair(const PolyQ& a_modulus, const BiPoly& b_descriptor) {
    CoefficientWitness w;
    w.status = RealizeStatus::realized;
    w.verified = true;
    w.assignment.push_back({"a", false, Rational(0), a_modulus, BiPoly(), false});
    w.assignment.push_back({"b", false, Rational(0), PolyQ(), b_descriptor, true});
    return w;
}

} // namespace

bool verify_portrait_rational(int d, const std::vector<Rational>& coeffs, const Rational& c,
                              Portrait target) {
    auto orbit = polynomial_orbit<Rational>(d, coeffs, c, target.m + target.n);
    if (!(orbit[static_cast<size_t>(target.m + target.n)] == orbit[static_cast<size_t>(target.m)]))
        return false;
    for (auto [i, j] : inequality_indices(target))
        if (orbit[static_cast<size_t>(i)] == orbit[static_cast<size_t>(j)]) return false;
    return true;
}

CoefficientWitness realize_single(const Rational& c, Portrait target, int d, long degree_cap) {
    if (d != 2) throw precondition_error("realize_single supports d = 2");
    if (target.m < 0 || target.n < 1) throw precondition_error("portrait needs m >= 0, n >= 1");
    CoefficientWitness w;

    UniPoly<RatFunc> num = UniPoly<RatFunc>::from_coeffs({RatFunc::t(), RatFunc(0), RatFunc(1)});
    RationalMap phi = new_map(num, UniPoly<RatFunc>(RatFunc(1)));
    WitnessReport rep =
        find_witness(phi, ProjPointK(c), target, PlaceSet::infinity_only(), degree_cap);

    if (rep.status == WitnessStatus::capped) {
        w.status = RealizeStatus::capped;
        w.note = rep.note;
        return w;
    }
    if (!rep.realizable()) {
        w.status = RealizeStatus::not_realizable;
        w.note = "exact stripping leaves no place; this is a proof of impossibility";
        return w;
    }
    for (const Rational& a0 : rep.rational_witnesses) {
        if (verify_portrait_rational(2, {a0}, c, target)) {
            w.status = RealizeStatus::realized;
            w.verified = true;
            w.assignment.push_back({"a0", true, a0, PolyQ(), BiPoly(), false});
            return w;
        }
    }
    // no rational root: the stripped divisor is the algebraic description
    SingleLevelTask task;
    task.d = 2;
    task.coeffs = {PolyQ::var()};
    task.points = {{c, target}};
    PolyQ surviving = verify_single_level(task, rep.divisor);
    if (surviving.deg() >= 1) {
        w.status = RealizeStatus::realized;
        w.verified = true;
        w.assignment.push_back({"a0", false, Rational(0), surviving, BiPoly(), false});
        return w;
    }
    w.status = RealizeStatus::not_realizable;
    w.note = "witness divisor failed re-verification"; // unreachable if the engine is sound
    return w;
}

CoefficientWitness realize_pair_cubic(const Rational& c1, const Rational& c2, Portrait t1,
                                      Portrait t2, long degree_cap) {
    if (c1 == c2) throw precondition_error("starting points must be distinct");
    for (Portrait t : {t1, t2}) {
        if (t.m < 0 || t.n < 1) throw precondition_error("portrait needs m >= 0, n >= 1");
        long size = 1;
        for (long j = 0; j < t.m + t.n; ++j) {
            size *= 3;
            if (size > degree_cap) {
                CoefficientWitness w;
                w.status = RealizeStatus::capped;
                w.note = "3^(m+n) exceeds the configured degree cap";
                return w;
            }
        }
    }
    const CubicContext ctx{c1, c2, t1, t2};

    // symbolic orbits of c under z^3 + a z + b: outer variable b, inner a
    const BiPoly bvar = BiPoly::var();
    const BiPoly avar = BiPoly(PolyQ::var());
    auto stripped_condition = [&](const Rational& c, Portrait t) {
        std::vector<BiPoly> orbit{BiPoly(PolyQ(c))};
        for (long j = 0; j < t.m + t.n; ++j) {
            const BiPoly& z = orbit.back();
            orbit.push_back(z * z * z + avar * z + bvar);
        }
        auto cond = [&orbit](long mu, long nu) {
            return orbit[static_cast<size_t>(mu + nu)] - orbit[static_cast<size_t>(mu)];
        };
        BiPoly g = bi_squarefree(cond(t.m, t.n));
        for (long l : prime_divisors(t.n)) {
            BiPoly x = cond(t.m, t.n / l);
            if (!x.is_zero()) g = bi_strip(g, bi_squarefree(x));
        }
        if (t.m >= 1) {
            BiPoly x = cond(t.m - 1, t.n);
            if (!x.is_zero()) g = bi_strip(g, bi_squarefree(x));
        }
        return g;
    };
    const BiPoly g1 = stripped_condition(c1, t1);
    const BiPoly g2 = stripped_condition(c2, t2);

    PolyQ elim;
    bool shared_component = false;
    try {
        elim = bi_eliminate(g1, g2);
    } catch (const degenerate_input_error&) {
        shared_component = true; // the stripped conditions share a whole curve
    }

    std::vector<Rational> a_candidates;
    if (shared_component) {
        for (long k = 0; k <= 16; ++k)
            a_candidates.push_back(Rational(k % 2 == 0 ? k / 2 : -(k / 2 + 1)));
    } else {
        a_candidates = rational_roots(elim);
        sort_by_height(a_candidates);
    }

    for (const Rational& a0 : a_candidates) {
        PolyQ s1 = substitute_inner(g1, a0);
        PolyQ s2 = substitute_inner(g2, a0);
        PolyQ common;
        if (s1.is_zero() && s2.is_zero()) {
            // both conditions vanish on the whole line a = a0
            for (long k = 0; k <= 16; ++k) {
                Rational b0(k % 2 == 0 ? k / 2 : -(k / 2 + 1));
                if (verify_portrait_rational(3, {b0, a0}, c1, t1) &&
                    verify_portrait_rational(3, {b0, a0}, c2, t2))
                    return emit_rational_pair(a0, b0);
            }
            continue;
        }
        common = s1.is_zero() ? s2 : s2.is_zero() ? s1 : poly_gcd(s1, s2);
        if (common.deg() < 1) continue;

        std::vector<Rational> b_candidates = rational_roots(common);
        sort_by_height(b_candidates);
        for (const Rational& b0 : b_candidates) {
            if (verify_portrait_rational(3, {b0, a0}, c1, t1) &&
                verify_portrait_rational(3, {b0, a0}, c2, t2))
                return emit_rational_pair(a0, b0);
        }
        PolyQ wb = common.monic();
        for (const Rational& b0 : b_candidates) {
            PolyQ lin = PolyQ::from_coeffs({Rational(-b0), Rational(1)});
            wb = strip_common_roots(wb, lin);
        }
        if (wb.deg() >= 1) {
            SingleLevelTask task;
            task.d = 3;
            task.coeffs = {PolyQ::var(), PolyQ(a0)};
            task.points = {{c1, t1}, {c2, t2}};
            PolyQ surviving = verify_single_level(task, wb);
            if (surviving.deg() >= 1) {
                CoefficientWitness w;
                w.status = RealizeStatus::realized;
                w.verified = true;
                w.assignment.push_back({"a", true, a0, PolyQ(), BiPoly(), false});
                w.assignment.push_back({"b", false, Rational(0), surviving, BiPoly(), false});
                return w;
            }
        }
    }

    // algebraic a: work over Q[a]/(p) for squarefree pieces p of the
    // elimination polynomial, splitting on failed inversions
    if (!shared_component && elim.deg() >= 1) {
        PolyQ p = elim;
        for (const Rational& a0 : a_candidates) {
            PolyQ lin = PolyQ::from_coeffs({Rational(-a0), Rational(1)});
            if (p.deg() >= 1) p = strip_common_roots(p, lin);
        }
        std::deque<PolyQ> work;
        if (p.deg() >= 1) work.push_back(p);
        int steps = 0;
        while (!work.empty()) {
            PolyQ mod = work.front();
            work.pop_front();
            if (++steps > 64) {
                CoefficientWitness w;
                w.status = RealizeStatus::capped;
                w.note = "branch splitting exceeded the configured budget";
                return w;
            }
            RingPtr ring = std::make_shared<NumberRing>(mod);
            UniPoly<NfElem> h1 = reduce_outer(g1, ring);
            UniPoly<NfElem> h2 = reduce_outer(g2, ring);
            if (h1.is_zero() && h2.is_zero()) continue;
            UniPoly<NfElem> wb;
            try {
                wb = h1.is_zero() ? h2 : h2.is_zero() ? h1 : poly_gcd_euclid(h1, h2);
            } catch (const non_invertible_error& e) {
                PolyQ f1 = e.factor;
                PolyQ f2 = mod.exact_div(f1);
                if (f1.deg() >= 1) work.push_back(f1);
                if (f2.deg() >= 1) work.push_back(f2.monic());
                continue;
            }
            if (wb.deg() < 1) continue;
            if (wb.deg() == 1) {
                try {
                    wb = wb.scaled(NfElem(1) / wb.lc());
                } catch (const non_invertible_error& e) {
                    PolyQ f1 = e.factor;
                    PolyQ f2 = mod.exact_div(f1);
                    if (f1.deg() >= 1) work.push_back(f1);
                    if (f2.deg() >= 1) work.push_back(f2.monic());
                    continue;
                }
                PolyQ b_expr = (-wb.coeff(0)).rep();
                PolyQ surviving = verify_a_level(ctx, mod, b_expr);
                if (surviving.deg() >= 1) {
                    BiPoly descriptor = BiPoly::from_coeffs({-b_expr, PolyQ::one()});
                    return emit_chain_pair(surviving, descriptor);
                }
            } else {
                auto res = verify_tower(ctx, mod, lift_outer(wb));
                if (res) return emit_chain_pair(res->first, res->second);
            }
        }
    }

    CoefficientWitness w;
    w.status = RealizeStatus::not_realizable;
    w.note = "candidates exhausted without a verified pair within bounds; "
             "not a proof of impossibility";
    return w;
}

CoefficientWitness realize_chain(int d, const std::vector<Rational>& points,
                                 const std::vector<Portrait>& targets, long degree_cap) {
    if (d < 2) throw precondition_error("realize_chain needs d >= 2");
    if (points.size() != targets.size() || points.size() != static_cast<size_t>(d - 1))
        throw precondition_error("realize_chain needs d - 1 points and as many portraits");
    for (size_t i = 0; i < points.size(); ++i)
        for (size_t j = i + 1; j < points.size(); ++j)
            if (points[i] == points[j])
                throw precondition_error("starting points must be distinct");

    if (d == 2) return realize_single(points[0], targets[0], 2, degree_cap);
    if (d == 3) return realize_pair_cubic(points[0], points[1], targets[0], targets[1], degree_cap);
    CoefficientWitness w;
    w.status = RealizeStatus::capped;
    w.note = "degrees above 3 need nested eliminations beyond the supported tower height";
    return w;
}

} // namespace ffdyn
