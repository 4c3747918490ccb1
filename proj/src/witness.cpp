#include "ffdyn/witness.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

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

PolyQ cross_of(std::span<const ProjPointK> orbit, long m, long n) {
    const ProjPointK& pm = orbit[static_cast<size_t>(m)];
    const ProjPointK& pn = orbit[static_cast<size_t>(m + n)];
    PolyQ raw = pn.x() * pm.y() - pm.x() * pn.y();
    if (raw.is_zero()) return PolyQ();
    return squarefree_part(raw);
}

void sort_by_height(std::vector<Rational>& v) {
    std::sort(v.begin(), v.end(), [](const Rational& a, const Rational& b) {
        const Integer ha = rational_height(a), hb = rational_height(b);
        if (ha != hb) return ha < hb;
        return a < b;
    });
}

std::optional<Portrait> residue_portrait(const RationalMap& phi, const ProjPointK& alpha,
                                         const Place& p, long bound) {
    return portrait_mod_place(phi, alpha, p, bound);
}

WitnessReport find_witness_impl(const RationalMap& phi, const ProjPointK& alpha,
                                std::span<const ProjPointK> orbit, Portrait target,
                                const PlaceSet& exclude, const PlaceSet& bad) {
    const long m = target.m, n = target.n;
    WitnessReport rep;
    rep.requested = target;

    PolyQ h = cross_of(orbit, m, n);

    const bool infinity_checkable = !bad.include_infinity && !exclude.include_infinity;
    auto check_infinity = [&]() {
        if (!infinity_checkable) return false;
        auto pm = residue_portrait(phi, alpha, Place::at_infinity(), m + n + 1);
        return pm && *pm == target;
    };

    if (h.is_zero()) {
        // alpha is globally preperiodic with phi^(m+n)(alpha) = phi^m(alpha)
        Portrait gp{m, n};
        {
            // exact global portrait: smallest preperiod, then minimum period
            long m0 = m;
            while (m0 > 0 && orbit[static_cast<size_t>(m0 - 1 + n)] == orbit[static_cast<size_t>(m0 - 1)]) --m0;
            long n0 = n;
            for (long k = 1; k < n; ++k) {
                if (n % k != 0) continue;
                if (orbit[static_cast<size_t>(m0 + k)] == orbit[static_cast<size_t>(m0)]) {
                    n0 = k;
                    break;
                }
            }
            gp = Portrait{m0, n0};
        }

        PolyQ failing = PolyQ::one();
        auto fold = [&failing](const PolyQ& part) {
            if (part.deg() > 0) failing = failing * part;
        };
        for (long l : prime_divisors(n)) fold(cross_of(orbit, m, n / l));
        if (m >= 1) fold(cross_of(orbit, m - 1, n));
        fold(bad.finite_part);
        fold(exclude.finite_part);
        if (failing.deg() > 0) failing = squarefree_part(failing);

        if (gp != target) {
            // the residue portrait of a preperiodic point can only shrink:
            // preperiod <= global preperiod and period dividing the global
            // period, so no place at all realizes the requested pair
            rep.status = WitnessStatus::not_realizable_by_finite_places;
            rep.note = "alpha is globally preperiodic with a different portrait";
            return rep;
        }

        rep.globally_preperiodic = true;
        rep.failing_places = failing;
        rep.note = "all good places outside the failing divisor realize the portrait";
        // concrete sample witness: small integers dodge the finitely many bad roots
        const long tries = failing.deg() + 3;
        for (long k = 0; k < tries; ++k) {
            Rational c(k % 2 == 0 ? k / 2 : -(k / 2 + 1));
            if (is_zero(failing.eval(c))) continue;
            Place p = Place::finite(PolyQ::from_coeffs({Rational(-c), Rational(1)}));
            auto pm = residue_portrait(phi, alpha, p, m + n + 1);
            if (pm && *pm == target) {
                rep.divisor = p.polynomial();
                rep.rational_witnesses = {c};
                break;
            }
        }
        rep.infinity_is_witness = check_infinity();
        rep.status = (rep.divisor.deg() >= 1 || rep.infinity_is_witness)
                         ? WitnessStatus::realizable
                         : WitnessStatus::not_realizable_by_finite_places;
        return rep;
    }

    PolyQ divisor = h;
    auto strip = [&divisor](const PolyQ& x) {
        if (divisor.deg() > 0 && x.deg() > 0) divisor = strip_common_roots(divisor, x);
    };
    for (long l : prime_divisors(n)) strip(cross_of(orbit, m, n / l)); // wrong-period exclusion
    if (m >= 1) strip(cross_of(orbit, m - 1, n));                      // preperiod-too-small exclusion
    strip(bad.finite_part);
    strip(exclude.finite_part);

    if (divisor.deg() > 0) {
        std::vector<Rational> roots = rational_roots(divisor);
        sort_by_height(roots);
        for (const Rational& c : roots) {
            Place p = Place::finite(PolyQ::from_coeffs({Rational(-c), Rational(1)}));
            auto pm = residue_portrait(phi, alpha, p, m + n + 1);
            if (pm && *pm == target) {
                rep.rational_witnesses.push_back(c);
            } else {
                // cannot happen if the stripping above is sound; keep the
                // report invariant intact regardless
                divisor = strip_common_roots(divisor, p.polynomial());
            }
        }
    }
    rep.divisor = divisor;
    rep.infinity_is_witness = check_infinity();
    rep.status = (divisor.deg() >= 1 || rep.infinity_is_witness)
                     ? WitnessStatus::realizable
                     : WitnessStatus::not_realizable_by_finite_places;
    return rep;
}

} // namespace

PolyQ cross_difference(IterateContext& ctx, long m, long n) {
    if (m < 0 || n < 1) throw precondition_error("cross_difference needs m >= 0, n >= 1");
    ctx.warm_to(m + n);
    return cross_of(ctx.orbit_view(), m, n);
}

WitnessReport find_witness(const RationalMap& phi, const ProjPointK& alpha, Portrait target,
                           const PlaceSet& exclude, long degree_cap) {
    if (phi.degree() < 2) throw precondition_error("find_witness needs deg >= 2");
    if (target.m < 0 || target.n < 1) throw precondition_error("portrait needs m >= 0, n >= 1");
    WitnessReport rep;
    rep.requested = target;
    try {
        IterateContext ctx(phi, alpha, degree_cap);
        ctx.warm_to(target.m + target.n);
        return find_witness_impl(phi, alpha, ctx.orbit_view(), target, exclude,
                                 bad_reduction_divisor(phi));
    } catch (const resource_limit_error& e) {
        rep.status = WitnessStatus::capped;
        rep.note = e.what();
        return rep;
    }
}

GridReport portrait_grid(const RationalMap& phi, const ProjPointK& alpha, long max_m, long max_n,
                         const PlaceSet& exclude, GridExecution exec, long degree_cap) {
    if (max_m < 0 || max_n < 1) throw precondition_error("grid needs max_m >= 0, max_n >= 1");
    GridReport grid;
    grid.max_m = max_m;
    grid.max_n = max_n;
    grid.x_obstructions = x_set(phi, max_n, degree_cap);
    if (max_m >= 1) grid.y_obstructions = y_set(phi, alpha, max_m, degree_cap);

    // warm the shared orbit once; cells beyond the cap get Capped reports
    IterateContext ctx(phi, alpha, degree_cap);
    long warm = 0;
    try {
        ctx.warm_to(max_m + max_n);
        warm = max_m + max_n;
    } catch (const resource_limit_error&) {
        while (true) {
            try {
                ctx.iterate(warm + 1);
                ++warm;
            } catch (const resource_limit_error&) {
                break;
            }
        }
    }
    const PlaceSet bad = bad_reduction_divisor(phi);
    const auto orbit = ctx.orbit_view();

    const long total = (max_m + 1) * max_n;
    grid.cells.assign(static_cast<size_t>(total), GridCell{});

    auto compute_cell = [&](long idx) {
        const long m = idx / max_n;
        const long n = idx % max_n + 1;
        GridCell cell;
        cell.portrait = Portrait{m, n};
        cell.m_in_y = grid.y_obstructions.count(m) > 0;
        cell.n_in_x = grid.x_obstructions.count(n) > 0;
        if (m + n > warm) {
            cell.report.requested = cell.portrait;
            cell.report.status = WitnessStatus::capped;
            cell.report.note = "iterate degree exceeds the configured cap";
        } else {
            try {
                cell.report = find_witness_impl(phi, alpha, orbit, cell.portrait, exclude, bad);
            } catch (const resource_limit_error& e) {
                cell.report.requested = cell.portrait;
                cell.report.status = WitnessStatus::capped;
                cell.report.note = e.what();
            }
        }
        return cell;
    };

    if (exec == GridExecution::parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
        for (long i = 0; i < total; ++i) grid.cells[static_cast<size_t>(i)] = compute_cell(i);
    } else {
        for (long i = 0; i < total; ++i) grid.cells[static_cast<size_t>(i)] = compute_cell(i);
    }
    return grid;
}

std::vector<SweepEntry> starting_point_sweep(const RationalMap& phi, Portrait target,
                                             const PlaceSet& exclude,
                                             const std::vector<Rational>& candidates,
                                             long degree_cap) {
    if (!has_nonconstant_portrait_point(phi, target.m, target.n, degree_cap))
        throw precondition_error(
            "every point with the requested portrait is constant; constant starting points "
            "cannot realize it");
    // isotriviality is checkable for normal-form polynomials
    if (phi.denominator_z().deg() == 0) {
        UniPoly<RatFunc> f = to_ratfunc_poly(phi.numerator_z());
        RatFunc lead = f.lc();
        f = f.scaled(RatFunc(1) / lead);
        const int d = f.deg();
        if (d >= 2 && f.coeff(d - 1) == RatFunc(0) && is_isotrivial_normal_form(f))
            throw precondition_error("the map is isotrivial; constant points reduce to a "
                                     "constant dynamical system at every place");
    }
    std::vector<SweepEntry> out;
    out.reserve(candidates.size());
    for (const Rational& c : candidates)
        out.push_back({c, find_witness(phi, ProjPointK(c), target, exclude, degree_cap)});
    return out;
}

} // namespace ffdyn
