#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ffdyn/abc.hpp"
#include "ffdyn/qpoly.hpp"
#include "test_util.hpp"

using namespace ffdyn;
using testutil::Rng;

namespace {

PolyQ P(std::initializer_list<long> coeffs_low_first) {
    std::vector<Rational> v;
    for (long c : coeffs_low_first) v.emplace_back(c);
    return PolyQ::from_coeffs(std::move(v));
}

UniPoly<RatFunc> zpoly(std::initializer_list<long> coeffs_low_first) {
    std::vector<RatFunc> v;
    for (long c : coeffs_low_first) v.emplace_back(c);
    return UniPoly<RatFunc>::from_coeffs(std::move(v));
}

} // namespace

TEST_CASE("mason_stothers_check on the worked examples") {
    // A = t^2, B = 1 - t^2: the classical equality case
    AbcReport r1 = mason_stothers_check(P({0, 0, 1}), P({1, 0, -1}));
    CHECK(r1.lhs == 2);
    CHECK(r1.rhs == 2);
    CHECK(r1.holds);
    CHECK(r1.slack == 0);

    AbcReport r2 = mason_stothers_check(P({0, 1}), P({1}));
    CHECK(r2.lhs == 1);
    CHECK(r2.rhs == 1);
    CHECK(r2.holds);

    // A = t^4, B = -(t^4 - 1): C = 1, radical t(t^4-1), degree 5
    AbcReport r3 = mason_stothers_check(P({0, 0, 0, 0, 1}), P({1, 0, 0, 0, -1}));
    CHECK(r3.lhs == 4);
    CHECK(r3.rhs == 4);
    CHECK(r3.holds);
}

TEST_CASE("mason_stothers_check preconditions") {
    CHECK_THROWS_AS(mason_stothers_check(P({0, 1}), P({0, 0, 1})), precondition_error);
    CHECK_THROWS_AS(mason_stothers_check(P({1}), P({2})), precondition_error);
    CHECK_THROWS_AS(mason_stothers_check(PolyQ(), P({1})), precondition_error);
    // A + B = 0
    CHECK_THROWS_AS(mason_stothers_check(P({0, 1}), P({0, -1})), precondition_error);
}

TEST_CASE("mason_stothers_check holds on random coprime pairs") {
    Rng rng(71);
    int checked = 0;
    while (checked < 300) {
        PolyQ a = testutil::random_polyq(rng, 1 + static_cast<int>(rng() % 20));
        PolyQ b = testutil::random_polyq(rng, 1 + static_cast<int>(rng() % 20));
        if (a.is_zero() || b.is_zero()) continue;
        PolyQ g = poly_gcd(a, b);
        if (g.deg() > 0) {
            a = a.exact_div(g);
            b = b.exact_div(g);
        }
        PolyQ c = a + b;
        if (c.is_zero()) continue;
        if (poly_gcd(a, c).deg() != 0 || poly_gcd(b, c).deg() != 0) continue;
        if (a.deg() == 0 && b.deg() == 0) continue;
        AbcReport r = mason_stothers_check(a, b);
        CHECK(r.holds);
        // radical monotonicity
        CHECK(r.rhs <= a.deg() + b.deg() + c.deg());
        ++checked;
    }
}

TEST_CASE("zero_place_count_check fixture confirmed by the brute oracle") {
    // f = z(z-1)(z+1) = z^3 - z, gamma = t^4
    UniPoly<RatFunc> f = zpoly({0, -1, 0, 1});
    RatFunc gamma(P({0, 0, 0, 0, 1}));

    // the stated oracle: expand f(gamma), take the squarefree part, read the degree
    PolyQ expanded = P({0, 0, 0, 0, 1});                   // t^4
    PolyQ value = expanded * expanded * expanded - expanded; // t^12 - t^4
    PolyQ radical = squarefree_part(value);
    CHECK(radical.deg() == 9);

    AbcReport r = zero_place_count_check(f, gamma);
    CHECK(r.rhs == 9);
    CHECK(r.lhs == 4);
    CHECK(r.holds);
}

TEST_CASE("zero_place_count_check further examples") {
    // f = z^3 - 2, gamma = t: rhs = deg sf(t^3 - 2) = 3
    AbcReport r1 = zero_place_count_check(zpoly({-2, 0, 0, 1}), RatFunc(P({0, 1})));
    CHECK(r1.rhs == 3);
    CHECK(r1.lhs <= 1);
    CHECK(r1.holds);

    AbcReport r2 = zero_place_count_check(zpoly({0, -1, 0, 1}), RatFunc(P({0, 1})));
    CHECK(r2.rhs == 3);
    CHECK(r2.lhs == 1);
    CHECK(r2.holds);

    // a pole at infinity counts as a vanishing place of f(gamma)
    // f(1/t) for f = z^3 - z has positive valuation at infinity
    AbcReport r3 = zero_place_count_check(zpoly({0, -1, 0, 1}), RatFunc(P({1}), P({0, 1})));
    CHECK(r3.holds);
}

TEST_CASE("zero_place_count_check preconditions") {
    CHECK_THROWS_AS(zero_place_count_check(zpoly({1, 1}), RatFunc(P({0, 1}))),
                    precondition_error); // degree < 3
    CHECK_THROWS_AS(zero_place_count_check(zpoly({0, 0, 0, 2}), RatFunc(P({0, 1}))),
                    precondition_error); // not monic
    CHECK_THROWS_AS(zero_place_count_check(zpoly({0, -1, 0, 1}), RatFunc(3)),
                    precondition_error); // constant gamma
    // repeated roots: z^3
    CHECK_THROWS_AS(zero_place_count_check(zpoly({0, 0, 0, 1}), RatFunc(P({0, 1}))),
                    precondition_error);
}

TEST_CASE("zero_place_count_check holds on a random pool") {
    Rng rng(73);
    std::vector<UniPoly<RatFunc>> pool = {
        zpoly({-2, 0, 0, 1}),   // z^3 - 2
        zpoly({0, -1, 0, 1}),   // z^3 - z
        zpoly({1, 1, 0, 1}),    // z^3 + z + 1
        zpoly({-2, 0, 0, 0, 1}), // z^4 - 2
        zpoly({1, 1, 0, 0, 1}), // z^4 + z + 1
    };
    for (int iter = 0; iter < 60; ++iter) {
        const auto& f = pool[rng() % pool.size()];
        PolyQ num = testutil::random_polyq(rng, 1 + static_cast<int>(rng() % 8));
        PolyQ den = testutil::random_polyq(rng, static_cast<int>(rng() % 4));
        if (num.is_zero() || den.is_zero()) continue;
        RatFunc gamma(num, den);
        if (gamma.is_constant()) continue;
        CHECK(zero_place_count_check(f, gamma).holds);
    }
}

TEST_CASE("a root of f makes the inequality trivially true") {
    // gamma = t is a root of z^3 - t^3
    UniPoly<RatFunc> f = UniPoly<RatFunc>::from_coeffs(
        {RatFunc(-P({0, 0, 0, 1})), RatFunc(0), RatFunc(0), RatFunc(1)});
    AbcReport r = zero_place_count_check(f, RatFunc(P({0, 1})));
    CHECK(r.holds);
}
