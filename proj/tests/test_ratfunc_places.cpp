#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ffdyn/places.hpp"
#include "test_util.hpp"

using namespace ffdyn;
using testutil::Rng;

namespace {

PolyQ P(std::initializer_list<long> coeffs_low_first) {
    std::vector<Rational> v;
    for (long c : coeffs_low_first) v.emplace_back(c);
    return PolyQ::from_coeffs(std::move(v));
}

const Place at_t = Place::finite(P({0, 1}));
const Place at_inf = Place::at_infinity();

} // namespace

TEST_CASE("RatFunc keeps reduced form with a monic denominator") {
    RatFunc x(P({0, 0, 1}), P({0, 2})); // t^2 / 2t = t/2
    CHECK(x.num() == P({0, 1}).scaled(make_rational(1, 2)));
    CHECK(x.den() == PolyQ::one());
    CHECK(RatFunc(P({0, 1}), P({0, 1})) == RatFunc(1)); // t/t normalizes to 1
    CHECK_THROWS_AS(RatFunc(P({1}), PolyQ()), degenerate_input_error);
}

TEST_CASE("valuation on the worked examples") {
    // t^2/(t-1) at t -> 2
    CHECK(*valuation(RatFunc(P({0, 0, 1}), P({-1, 1})), at_t) == 2);
    // (t^2+1)/t at infinity -> -1
    CHECK(*valuation(RatFunc(P({1, 0, 1}), P({0, 1})), at_inf) == -1);
    // constants are units at every place
    CHECK(*valuation(RatFunc(5), at_t) == 0);
    CHECK(*valuation(RatFunc(5), at_inf) == 0);
    CHECK(*valuation(RatFunc(5), Place::finite(P({1, 0, 1}))) == 0);
    // zero has the infinite-valuation signal
    CHECK(!valuation(RatFunc(0), at_t).has_value());
}

TEST_CASE("valuation is additive") {
    Rng rng(23);
    std::vector<Place> places = {at_t, Place::finite(P({-1, 1})), Place::finite(P({1, 0, 1})),
                                 at_inf};
    for (int iter = 0; iter < 40; ++iter) {
        RatFunc x(testutil::random_polyq(rng, 1 + static_cast<int>(rng() % 4)),
                  testutil::random_polyq(rng, 1 + static_cast<int>(rng() % 3)));
        RatFunc y(testutil::random_polyq(rng, 1 + static_cast<int>(rng() % 4)),
                  testutil::random_polyq(rng, 1 + static_cast<int>(rng() % 3)));
        if (x.is_zero() || y.is_zero()) continue;
        for (const auto& p : places)
            CHECK(*valuation(x * y, p) == *valuation(x, p) + *valuation(y, p));
    }
}

TEST_CASE("product formula at desk scale") {
    // build x from a known factorization over a fixed pool of irreducibles
    const std::vector<PolyQ> pool = {P({0, 1}), P({-1, 1}), P({2, 1}), P({1, 0, 1}),
                                     P({-2, 0, 0, 1})};
    Rng rng(29);
    for (int iter = 0; iter < 30; ++iter) {
        RatFunc x(3);
        std::vector<long> exps(pool.size());
        for (size_t i = 0; i < pool.size(); ++i) {
            exps[i] = static_cast<long>(rng() % 5) - 2;
            RatFunc factor(pool[i]);
            for (long k = 0; k < std::abs(exps[i]); ++k)
                x = exps[i] > 0 ? x * factor : x / factor;
        }
        long total = 0;
        for (size_t i = 0; i < pool.size(); ++i) {
            Place p = Place::finite(pool[i]);
            CHECK(*valuation(x, p) == exps[i]); // valuation recovers the exponent
            total += p.local_degree() * *valuation(x, p);
        }
        total += *valuation(x, at_inf);
        CHECK(total == 0);
    }
}

TEST_CASE("reduce_scalar on the worked examples") {
    // t^2 + t + 3 at t -> 3
    CHECK(reduce_scalar(RatFunc(P({3, 1, 1})), at_t).rational_value() == Rational(3));
    // t/(t+1) at t^2+1 -> (t+1)/2
    Place q = Place::finite(P({1, 0, 1}));
    NfElem r = reduce_scalar(RatFunc(P({0, 1}), P({1, 1})), q);
    CHECK(r.rep() == P({1, 1}).scaled(make_rational(1, 2)));
    // (2t+1)/t at infinity -> 2
    CHECK(reduce_scalar(RatFunc(P({1, 2}), P({0, 1})), at_inf).rational_value() == Rational(2));
    // a pole is an error
    CHECK_THROWS_AS(reduce_scalar(RatFunc(P({1}), P({0, 1})), at_t), pole_at_place_error);
}

TEST_CASE("residue arithmetic satisfies the field axioms for irreducible moduli") {
    Rng rng(31);
    for (const PolyQ& q : {P({1, 0, 1}), P({-2, 0, 0, 1})}) {
        RingPtr ring = std::make_shared<NumberRing>(q);
        for (int iter = 0; iter < 50; ++iter) {
            PolyQ rep = testutil::random_polyq(rng, static_cast<int>(rng() % q.deg()));
            NfElem a(ring, rep);
            if (a.is_zero()) continue;
            CHECK(a * a.inverse() == NfElem(1));
        }
        // the generator inverts too
        NfElem g = NfElem::generator(ring);
        CHECK(g * g.inverse() == NfElem(1));
    }
}

TEST_CASE("reduce_point on the worked examples") {
    RingPtr ring = residue_ring(at_t);
    CHECK(reduce_point(P({0, 1}), P({1}), at_t, ring) ==
          ResiduePoint(NfElem(0), NfElem(1))); // [t : 1] -> [0 : 1]
    CHECK(reduce_point(P({1}), P({0, 1}), at_t, ring).is_infinity()); // [1 : t] -> [1 : 0]
    // [t^2 + t : t] reduces through its coprime form [t + 1 : 1] -> [1 : 1]
    ProjPointK p(P({0, 1, 1}), P({0, 1}));
    CHECK(p.x() == P({1, 1}));
    CHECK(reduce_point(p.x(), p.y(), at_t, ring) == ResiduePoint(NfElem(1), NfElem(1)));
}

TEST_CASE("reduce_point is invariant under scaling") {
    Rng rng(37);
    const Place q = Place::finite(P({1, 0, 1}));
    for (int iter = 0; iter < 30; ++iter) {
        PolyQ x = testutil::random_polyq(rng, static_cast<int>(rng() % 4));
        PolyQ y = testutil::random_polyq(rng, static_cast<int>(rng() % 4));
        if (x.is_zero() && y.is_zero()) continue;
        ProjPointK base(x, y);
        PolyQ s = testutil::random_polyq(rng, static_cast<int>(rng() % 3));
        if (s.is_zero()) continue;
        ProjPointK scaled(x * s, y * s); // canonicalization cancels the scale
        CHECK(base == scaled);
        for (const Place& p : {q, at_inf, at_t}) {
            RingPtr ring = residue_ring(p);
            CHECK(reduce_point(base.x(), base.y(), p, ring) ==
                  reduce_point(scaled.x(), scaled.y(), p, ring));
        }
    }
}

TEST_CASE("NfElem promotes plain rationals into ring context") {
    RingPtr ring = std::make_shared<NumberRing>(P({1, 0, 1}));
    NfElem g = NfElem::generator(ring);
    NfElem sum = g + NfElem(2);           // ring + context-free
    CHECK(sum.rep() == P({2, 1}));
    CHECK((g * g) == NfElem(-1));         // t^2 = -1 mod t^2+1
    CHECK((NfElem(3) + NfElem(4)) == NfElem(7));
}

TEST_CASE("non-invertible elements surface a factor of the modulus") {
    // reducible modulus t^2 - 1: (t - 1) is a zero divisor
    RingPtr ring = std::make_shared<NumberRing>(P({-1, 0, 1}));
    NfElem z(ring, P({-1, 1}));
    try {
        (void)z.inverse();
        CHECK(false);
    } catch (const non_invertible_error& e) {
        CHECK((P({-1, 0, 1}) % e.factor).is_zero());
        CHECK(e.factor.deg() >= 1);
        CHECK(e.factor.deg() < 2);
    }
}
