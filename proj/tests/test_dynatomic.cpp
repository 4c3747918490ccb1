#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ffdyn/dynatomic.hpp"
#include "ffdyn/parse.hpp"
#include "test_util.hpp"

using namespace ffdyn;

namespace {

PolyQ P(std::initializer_list<long> coeffs_low_first) {
    std::vector<Rational> v;
    for (long c : coeffs_low_first) v.emplace_back(c);
    return PolyQ::from_coeffs(std::move(v));
}

// z-polynomial with constant coefficients, lowest degree first
BiPoly Z(std::initializer_list<long> coeffs_low_first) {
    std::vector<PolyQ> v;
    for (long c : coeffs_low_first) v.emplace_back(Rational(c));
    return BiPoly::from_coeffs(std::move(v));
}

} // namespace

TEST_CASE("exact_period_divisor on the worked examples") {
    RationalMap phi = parse_map("z^2 + t");
    auto d1 = exact_period_divisor(phi, 1);
    // z^2 - z + t
    BiPoly expect1 = Z({0, -1, 1}) + BiPoly(P({0, 1}));
    CHECK(d1.divisor == bi_canonical(expect1));
    CHECK(d1.includes_infinity);

    auto d2 = exact_period_divisor(phi, 2);
    // z^2 + z + t + 1
    BiPoly expect2 = Z({1, 1, 1}) + BiPoly(P({0, 1}));
    CHECK(d2.divisor == bi_canonical(expect2));
    CHECK(!d2.includes_infinity);

    auto sq = exact_period_divisor(parse_map("z^2"), 2);
    CHECK(sq.divisor == bi_canonical(Z({1, 1, 1})));
    CHECK(!sq.includes_infinity); // infinity is fixed, not of period 2
}

TEST_CASE("exact-period divisors multiply back to the squarefree fixed locus") {
    // product over n' | n of the divisors equals sf(numerator of phi^n(z) - z)
    for (const char* text : {"z^2 + t", "z^3 + t*z + 1"}) {
        RationalMap phi = parse_map(text);
        const long max_n = phi.degree() == 2 ? 4 : 3;
        auto iters = symbolic_iterates(phi, max_n);
        for (long n = 1; n <= max_n; ++n) {
            BiPoly product = BiPoly::one();
            int infinity_flags = 0;
            for (long k = 1; k <= n; ++k) {
                if (n % k != 0) continue;
                auto epd = exact_period_divisor(phi, k);
                product = product * epd.divisor;
                infinity_flags += epd.includes_infinity ? 1 : 0;
            }
            const auto& [an, bn] = iters[static_cast<size_t>(n)];
            BiPoly numerator = an - BiPoly::var() * bn;
            CHECK(bi_canonical(product) == bi_squarefree(numerator));
            // infinity lies in exactly one exact-period class when periodic
            IterateContext ctx(phi, ProjPointK::infinity());
            bool periodic = false;
            for (long k = 1; k <= n; ++k)
                if (n % k == 0 && ctx.iterate(k).is_infinity()) periodic = true;
            CHECK(infinity_flags == (periodic ? 1 : 0));
        }
    }
}

TEST_CASE("totally_ramified_points on the worked examples") {
    auto prof1 = totally_ramified_points(parse_map("z^2 + t"));
    CHECK(prof1.totally_ramified_finite == bi_canonical(Z({0, 1}))); // the point 0
    CHECK(prof1.totally_ramified_infinity);
    CHECK(prof1.count() == 2);

    auto prof2 = totally_ramified_points(parse_map("z^3 + z"));
    CHECK(prof2.totally_ramified_finite.deg() <= 0);
    CHECK(prof2.totally_ramified_infinity);
    CHECK(prof2.count() == 1);

    auto prof3 = totally_ramified_points(parse_map("1/z^2"));
    CHECK(prof3.totally_ramified_finite == bi_canonical(Z({0, 1})));
    CHECK(prof3.totally_ramified_infinity);
    CHECK(prof3.count() == 2);
}

TEST_CASE("the profile never exceeds two points") {
    for (const char* text :
         {"z^2 + t", "z^2", "1/z^2", "z^3 + z", "z^2/(z - t)", "z^3 + t*z + 1", "z^4 - 2"}) {
        CHECK(totally_ramified_points(parse_map(text)).count() <= 2);
    }
}

TEST_CASE("x_set on the worked examples") {
    CHECK(x_set(parse_map("z^2 + t"), 4).empty());
    std::set<long> expect{2};
    CHECK(x_set(parse_map("1/z^2"), 4) == expect);
    CHECK(x_set(parse_map("z^2"), 1).empty()); // the fixed point 1 is not totally ramified
}

TEST_CASE("x_set shape matches the structural classification") {
    for (const char* text : {"z^2 + t", "z^2", "1/z^2", "z^3 + z", "z^2/(z - t)"}) {
        RationalMap phi = parse_map(text);
        auto xs = x_set(phi, 4);
        CHECK(xs.size() <= 1);
        if (xs == std::set<long>{2}) {
            auto epd = exact_period_divisor(phi, 2);
            const bool no_period_2_point = epd.divisor.deg() <= 0 && !epd.includes_infinity;
            const bool inverse_power =
                detect_power_map_conjugacy(phi) == PowerMapType::inverse_power_map &&
                phi.degree() == 2;
            CHECK((no_period_2_point || inverse_power));
        }
    }
}

TEST_CASE("y_set on the worked examples") {
    RationalMap phi = parse_map("z^2 + t");
    std::set<long> expect{1};
    CHECK(y_set(phi, ProjPointK(Rational(0)), 6) == expect);
    CHECK(y_set(phi, ProjPointK(Rational(1)), 6).empty());
    CHECK(y_set(parse_map("z^3 + z"), ProjPointK(Rational(2)), 6).empty());
}

TEST_CASE("y_set stabilizes for wandering points") {
    RationalMap phi = parse_map("z^2 + t");
    // alpha = 2 has canonical height bounded away from zero; its later
    // iterates never hit a totally ramified point
    CHECK(y_set(phi, ProjPointK(Rational(2)), 10).empty());
    auto ys = y_set(phi, ProjPointK(Rational(0)), 10);
    CHECK(*ys.rbegin() == 1); // nothing beyond the first hit
}

TEST_CASE("is_isotrivial_normal_form") {
    auto poly = [](const char* text) {
        return to_ratfunc_poly(parse_map(text).numerator_z());
    };
    CHECK(!is_isotrivial_normal_form(poly("z^2 + t")));
    CHECK(is_isotrivial_normal_form(poly("z^3 - 2*z")));
    // t/t normalizes to 1 before the test
    UniPoly<RatFunc> f = UniPoly<RatFunc>::from_coeffs(
        {RatFunc(0), RatFunc(P({0, 1}), P({0, 1})), RatFunc(0), RatFunc(1)});
    CHECK(is_isotrivial_normal_form(f));
    // not in normal form: nonzero z^(d-1) coefficient
    CHECK_THROWS_AS(is_isotrivial_normal_form(poly("z^2 + z + 1")), precondition_error);
}

TEST_CASE("has_nonconstant_portrait_point on the worked examples") {
    CHECK(has_nonconstant_portrait_point(parse_map("z^2 + t"), 0, 1));
    CHECK(!has_nonconstant_portrait_point(parse_map("z^2"), 0, 1));
    CHECK(has_nonconstant_portrait_point(parse_map("z^2 + t"), 1, 1));
}

TEST_CASE("detect_power_map_conjugacy on the worked examples") {
    CHECK(detect_power_map_conjugacy(parse_map("z^2")) == PowerMapType::power_map);
    CHECK(detect_power_map_conjugacy(parse_map("1/z^2")) == PowerMapType::inverse_power_map);
    CHECK(detect_power_map_conjugacy(parse_map("z^2 + t")) == PowerMapType::neither);
    CHECK(detect_power_map_conjugacy(parse_map("z^3")) == PowerMapType::power_map);
    CHECK(detect_power_map_conjugacy(parse_map("1/z^3")) == PowerMapType::inverse_power_map);
    CHECK(detect_power_map_conjugacy(parse_map("z^3 + z")) == PowerMapType::neither);
}

TEST_CASE("divisor_value_at vanishes exactly at roots") {
    // divisor z^2 - t has the K-point [t : 1] ... not a root; z^2 - t^2 has [t : 1]
    BiPoly d = Z({0, 0, 1}) - BiPoly(P({0, 0, 1}));
    CHECK(divisor_value_at(d, ProjPointK(RatFunc(P({0, 1})))).is_zero());
    CHECK(!divisor_value_at(d, ProjPointK(Rational(1))).is_zero());
    CHECK(!divisor_value_at(d, ProjPointK::infinity()).is_zero());
}

TEST_CASE("degree caps surface as resource errors") {
    CHECK_THROWS_AS(exact_period_divisor(parse_map("z^2 + t"), 12, 64), resource_limit_error);
}
