#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "ffdyn/qpoly.hpp"
#include "ffdyn/ratfunc.hpp"
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

TEST_CASE("poly_gcd on the worked examples") {
    // (t^2 - 1, t^2 - 2t + 1) -> t - 1
    CHECK(poly_gcd(P({-1, 0, 1}), P({1, -2, 1})) == P({-1, 1}));
    // gcd with zero is the other argument made monic
    CHECK(poly_gcd(P({2, 4}), PolyQ()) == P({2, 4}).monic());
    CHECK(poly_gcd(PolyQ(), P({0, 0, 3})) == P({0, 0, 1}));
    // coprime pair
    CHECK(poly_gcd(P({1, 0, 1}), P({2, 0, 1})) == PolyQ::one());
    CHECK_THROWS_AS(poly_gcd(PolyQ(), PolyQ()), degenerate_input_error);
}

TEST_CASE("poly_gcd divides both inputs and is divided by common divisors") {
    Rng rng(42);
    for (int iter = 0; iter < 60; ++iter) {
        PolyQ common = testutil::random_polyq(rng, 1 + static_cast<int>(rng() % 4));
        PolyQ a = common * testutil::random_polyq(rng, static_cast<int>(rng() % 5));
        PolyQ b = common * testutil::random_polyq(rng, static_cast<int>(rng() % 5));
        if (a.is_zero() || b.is_zero()) continue;
        PolyQ g = poly_gcd(a, b);
        CHECK((a % g).is_zero());
        CHECK((b % g).is_zero());
        CHECK((g % poly_gcd(common, g)).is_zero());
        CHECK(poly_gcd(common, g) == common.monic()); // common divisor divides the gcd
    }
}

TEST_CASE("resultant sign convention and examples") {
    // Res(z - 2, z - 3) = -1 under det Syl(a, b) with a's rows first
    CHECK(resultant(P({-2, 1}), P({-3, 1})) == Rational(-1));
    CHECK(resultant(P({0, 1}), P({0, 1})) == Rational(0));

    // Res_z(z^2 - t, z - 1) = 1 - t over Q(t)
    using ZP = UniPoly<RatFunc>;
    RatFunc t = RatFunc::t();
    ZP a = ZP::from_coeffs({-t, RatFunc(0), RatFunc(1)});
    ZP b = ZP::from_coeffs({RatFunc(-1), RatFunc(1)});
    CHECK(resultant(a, b) == RatFunc(1) - t);

    CHECK_THROWS_AS(resultant(PolyQ(), P({1, 1})), degenerate_input_error);
}

TEST_CASE("resultant vanishes exactly when the gcd is nonconstant") {
    Rng rng(7);
    for (int iter = 0; iter < 60; ++iter) {
        PolyQ a = testutil::random_polyq(rng, 1 + static_cast<int>(rng() % 9));
        PolyQ b = testutil::random_polyq(rng, 1 + static_cast<int>(rng() % 9));
        if (iter % 3 == 0) { // force a common root
            PolyQ common = testutil::random_polyq(rng, 1);
            a = a * common;
            b = b * common;
        }
        if (a.is_zero() || b.is_zero()) continue;
        const bool res_zero = is_zero(resultant(a, b));
        const bool gcd_big = poly_gcd(a, b).deg() > 0;
        CHECK(res_zero == gcd_big);
    }
}

TEST_CASE("squarefree_part examples and property") {
    CHECK(squarefree_part(P({0, 0, 1, 1})) == P({0, 1, 1}));  // t^3 + t^2 -> t^2 + t
    CHECK(squarefree_part(P({1, 0, 1})) == P({1, 0, 1}));     // already squarefree
    CHECK(squarefree_part(P({-1, 1}).pow(4)) == P({-1, 1}));  // (t-1)^4 -> t - 1
    CHECK_THROWS_AS(squarefree_part(PolyQ()), degenerate_input_error);

    Rng rng(11);
    for (int iter = 0; iter < 40; ++iter) {
        PolyQ a = testutil::random_polyq(rng, 1 + static_cast<int>(rng() % 4));
        PolyQ p = a * a * testutil::random_polyq(rng, static_cast<int>(rng() % 3));
        if (p.is_zero() || p.deg() == 0) continue;
        PolyQ s = squarefree_part(p);
        CHECK(poly_gcd(s, s.derivative()).deg() == 0);
        CHECK((p % s).is_zero());
    }
}

TEST_CASE("strip_common_roots removes every shared factor") {
    CHECK(strip_common_roots(P({0, 0, 1}), P({0, 1})) == PolyQ::one()); // t^2 vs t
    CHECK(strip_common_roots(P({0, 2, 1}), P({0, 1})) == P({2, 1}));    // t(t+2) vs t
    CHECK(strip_common_roots(P({5, 1}), P({7, 1})) == P({5, 1}));       // coprime

    Rng rng(13);
    for (int iter = 0; iter < 40; ++iter) {
        PolyQ h = testutil::random_polyq(rng, 1 + static_cast<int>(rng() % 6));
        PolyQ x = testutil::random_polyq(rng, 1 + static_cast<int>(rng() % 4));
        if (h.is_zero() || x.is_zero()) continue;
        if (iter % 2 == 0) h = h * x; // guarantee overlap
        PolyQ out = strip_common_roots(h, x);
        CHECK(poly_gcd(out, x).deg() == 0);
        CHECK((h % out).is_zero()); // h = out * removed exactly
    }
}

TEST_CASE("rational_roots examples") {
    auto roots = rational_roots(P({0, 1, 1}));
    REQUIRE(roots.size() == 2);
    CHECK(roots[0] == Rational(-1));
    CHECK(roots[1] == Rational(0));
    CHECK(rational_roots(P({1, 0, 1})).empty());
    auto half = rational_roots(P({-3, 2}));
    REQUIRE(half.size() == 1);
    CHECK(half[0] == make_rational(3, 2));
}

TEST_CASE("rational_roots recovers planted roots among large coefficients") {
    Rng rng(17);
    for (int iter = 0; iter < 20; ++iter) {
        std::vector<Rational> planted;
        PolyQ p = PolyQ::one();
        for (int k = 0; k < 3; ++k) {
            Rational r = testutil::random_rational(rng, 50, 20);
            planted.push_back(r);
            p = p * PolyQ::from_coeffs({Rational(-r.get_num()), Rational(r.get_den())});
        }
        p = p * P({1, 0, 1}).pow(2) * PolyQ(Rational(Integer("123456789123456789")));
        auto roots = rational_roots(p);
        for (const auto& r : planted)
            CHECK(std::find(roots.begin(), roots.end(), r) != roots.end());
        for (const auto& r : roots) CHECK(is_zero(p.eval(r)));
    }
}

TEST_CASE("exact rational arithmetic has no drift") {
    Rng rng(19);
    for (int iter = 0; iter < 200; ++iter) {
        Rational a = testutil::random_nonzero_rational(rng, 1000, 1000);
        Rational b = testutil::random_nonzero_rational(rng, 1000, 1000);
        CHECK(Rational((a / b) * (b / a)) == Rational(1));
    }
}

TEST_CASE("integer_primitive normalizes content and sign") {
    auto v = integer_primitive(P({2, 4, 6}).scaled(make_rational(1, 3)));
    REQUIRE(v.size() == 3);
    CHECK(v[0] == 1);
    CHECK(v[1] == 2);
    CHECK(v[2] == 3);
    auto w = integer_primitive(P({0, -2}));
    CHECK(w.back() > 0);
}
