#ifndef FFDYN_TEST_UTIL_HPP
#define FFDYN_TEST_UTIL_HPP

#include <optional>
#include <random>

#include "ffdyn/dynmap.hpp"
#include "ffdyn/qpoly.hpp"

namespace ffdyn::testutil {

using Rng = std::mt19937_64;

inline Rational random_rational(Rng& rng, long max_abs_num = 9, long max_den = 9) {
    std::uniform_int_distribution<long> num(-max_abs_num, max_abs_num);
    std::uniform_int_distribution<long> den(1, max_den);
    return make_rational(num(rng), den(rng));
}

inline Rational random_nonzero_rational(Rng& rng, long max_abs_num = 9, long max_den = 9) {
    for (;;) {
        Rational q = random_rational(rng, max_abs_num, max_den);
        if (!is_zero(q)) return q;
    }
}

inline PolyQ random_polyq(Rng& rng, int degree, long max_abs = 9) {
    std::uniform_int_distribution<long> coeff(-max_abs, max_abs);
    std::vector<Rational> v(static_cast<size_t>(degree) + 1);
    for (auto& c : v) c = Rational(coeff(rng));
    v.back() = Rational(coeff(rng) | 1); // force a nonzero leading coefficient
    return PolyQ::from_coeffs(std::move(v));
}

inline PolyQ random_monic_polyq(Rng& rng, int degree, long max_abs = 9) {
    PolyQ p = random_polyq(rng, degree, max_abs);
    return p.monic();
}

// Independent residue-iteration oracle: specialize t = c by plain rational
// evaluation and iterate projective pairs over Q.  Shares nothing with the
// places/residue machinery the engine uses.
inline std::optional<Portrait> oracle_portrait_at(const RationalMap& phi, const ProjPointK& alpha,
                                                  const Rational& c, long bound) {
    const int d = phi.degree();
    std::vector<Rational> f, g;
    for (const auto& p : phi.fx()) f.push_back(p.eval(c));
    for (const auto& p : phi.gx()) g.push_back(p.eval(c));

    auto apply = [&](std::pair<Rational, Rational> pt) {
        std::vector<Rational> xpow(static_cast<size_t>(d) + 1), ypow(static_cast<size_t>(d) + 1);
        xpow[0] = 1;
        ypow[0] = 1;
        for (int i = 1; i <= d; ++i) {
            xpow[static_cast<size_t>(i)] = Rational(xpow[static_cast<size_t>(i - 1)] * pt.first);
            ypow[static_cast<size_t>(i)] = Rational(ypow[static_cast<size_t>(i - 1)] * pt.second);
        }
        Rational a(0), b(0);
        for (int i = 0; i <= d; ++i) {
            a = Rational(a + f[static_cast<size_t>(i)] * xpow[static_cast<size_t>(i)] *
                                 ypow[static_cast<size_t>(d - i)]);
            b = Rational(b + g[static_cast<size_t>(i)] * xpow[static_cast<size_t>(i)] *
                                 ypow[static_cast<size_t>(d - i)]);
        }
        // normalize: y = 1 or (1, 0)
        if (!is_zero(b)) return std::pair<Rational, Rational>(Rational(a / b), Rational(1));
        return std::pair<Rational, Rational>(Rational(1), Rational(0));
    };

    std::pair<Rational, Rational> pt;
    {
        Rational x = alpha.x().eval(c), y = alpha.y().eval(c);
        if (is_zero(x) && is_zero(y)) return std::nullopt; // not reducible this way
        pt = !is_zero(y) ? std::pair<Rational, Rational>(Rational(x / y), Rational(1))
                         : std::pair<Rational, Rational>(Rational(1), Rational(0));
    }
    std::vector<std::pair<Rational, Rational>> seen;
    for (long step = 0; step <= bound; ++step) {
        for (size_t i = 0; i < seen.size(); ++i)
            if (seen[i] == pt) return Portrait{static_cast<long>(i), step - static_cast<long>(i)};
        seen.push_back(pt);
        pt = apply(pt);
    }
    return std::nullopt;
}

} // namespace ffdyn::testutil

#endif
