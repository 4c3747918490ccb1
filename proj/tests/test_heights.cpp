#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ffdyn/heights.hpp"
#include "ffdyn/parse.hpp"
#include "test_util.hpp"

using namespace ffdyn;
using testutil::Rng;

namespace {

PolyQ P(std::initializer_list<long> coeffs_low_first) {
    std::vector<Rational> v;
    for (long c : coeffs_low_first) v.emplace_back(c);
    return PolyQ::from_coeffs(std::move(v));
}

} // namespace

TEST_CASE("weil_height on the worked examples") {
    CHECK(weil_height(ProjPointK(RatFunc(P({1, 0, 1}), P({0, 1})))) == 2); // (t^2+1)/t
    CHECK(weil_height(ProjPointK(make_rational(-7, 3))) == 0);
    CHECK(weil_height(ProjPointK(RatFunc(P({0, 0, 0, 0, 0, 1})))) == 5); // t^5
    CHECK(weil_height(ProjPointK::infinity()) == 0);
}

TEST_CASE("height_comparison_bound on the worked examples") {
    CHECK(height_comparison_bound(parse_map("z^2 + t")) == 2);
    CHECK(height_comparison_bound(parse_map("z^2")) == 0);
    CHECK(height_comparison_bound(parse_map("z^2/(z - t)")) == 4);
}

TEST_CASE("the comparison bound holds on random points") {
    Rng rng(61);
    for (const char* text : {"z^2 + t", "z^2/(z - t)", "z^3 + t*z + 1"}) {
        RationalMap phi = parse_map(text);
        const long c = height_comparison_bound(phi);
        const long d = phi.degree();
        for (int iter = 0; iter < 40; ++iter) {
            ProjPointK p(testutil::random_polyq(rng, static_cast<int>(rng() % 9)),
                         testutil::random_polyq(rng, static_cast<int>(rng() % 9)));
            ProjPointK image = apply_map(phi, p);
            const long lhs = weil_height(image);
            const long rhs = d * weil_height(p);
            CHECK(lhs <= rhs + c);
            CHECK(lhs >= rhs - c);
        }
    }
}

TEST_CASE("canonical_height on the worked examples") {
    auto est = canonical_height(parse_map("z^2 + t"), ProjPointK(Rational(0)), make_rational(1, 4));
    CHECK(est.center == make_rational(1, 2));
    CHECK(est.radius == make_rational(1, 4));
    CHECK(est.iterations_used == 4);

    auto exact = canonical_height(parse_map("z^2"), ProjPointK(RatFunc(P({0, 1}))), Rational(1));
    CHECK(exact.center == Rational(1));
    CHECK(exact.radius == Rational(0));

    auto constant = canonical_height(parse_map("z^2"), ProjPointK(Rational(5)), Rational(1));
    CHECK(constant.center == Rational(0));
    CHECK(constant.radius == Rational(0));
}

TEST_CASE("canonical height estimates at different precision overlap") {
    Rng rng(67);
    RationalMap phi = parse_map("z^2 + t");
    for (int iter = 0; iter < 6; ++iter) {
        ProjPointK alpha(testutil::random_polyq(rng, static_cast<int>(rng() % 2)),
                         testutil::random_polyq(rng, 1));
        auto coarse = canonical_height(phi, alpha, make_rational(1, 8));
        auto fine = canonical_height(phi, alpha, make_rational(1, 64));
        CHECK(coarse.lower() <= fine.upper());
        CHECK(fine.lower() <= coarse.upper());
    }
}

TEST_CASE("at most m constants sit below 1/d for normal forms with moving low coefficients") {
    // f = z^2 + t: no constant is certified below 1/2
    {
        RationalMap phi = parse_map("z^2 + t");
        const Rational eps = make_rational(1, 64);
        int certified_below = 0;
        for (long c = -10; c <= 10; ++c) {
            auto est = canonical_height(phi, ProjPointK(Rational(c)), eps);
            if (est.upper() < make_rational(1, 2)) ++certified_below;
        }
        CHECK(certified_below == 0);
    }
    // f = z^3 + a z + t with constant a: still none below 1/3
    {
        RationalMap phi = parse_map("z^3 - 2*z + t");
        const Rational eps = make_rational(1, 64);
        int certified_below = 0;
        for (long c = -10; c <= 10; ++c) {
            auto est = canonical_height(phi, ProjPointK(Rational(c)), eps);
            if (est.upper() < make_rational(1, 3)) ++certified_below;
        }
        CHECK(certified_below == 0);
    }
    // f = z^3 + t z: the variable coefficient sits at index 1, so at most
    // one constant (here the fixed point 0) may fall below 1/3
    {
        RationalMap phi = parse_map("z^3 + t*z");
        const Rational eps = make_rational(1, 64);
        int certified_below = 0;
        for (long c = -10; c <= 10; ++c) {
            auto est = canonical_height(phi, ProjPointK(Rational(c)), eps);
            if (est.upper() < make_rational(1, 3)) ++certified_below;
        }
        CHECK(certified_below <= 1);
    }
}

TEST_CASE("canonical height errors") {
    CHECK_THROWS_AS(canonical_height(parse_map("z + t"), ProjPointK(Rational(0)), Rational(1)),
                    precondition_error);
    CHECK_THROWS_AS(
        canonical_height(parse_map("z^2 + t"), ProjPointK(Rational(0)), Rational(0)),
        precondition_error);
    // a tiny cap cannot hold the needed iterate degrees
    CHECK_THROWS_AS(canonical_height(parse_map("z^2 + t"), ProjPointK(Rational(0)),
                                     make_rational(1, 1024), 4),
                    resource_limit_error);
}
