#include "ffdyn/qpoly.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

namespace ffdyn {

namespace {

using ZP = std::vector<Integer>; // dense, lowest first, trailing nonzero

void ztrim(ZP& p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

int zdeg(const ZP& p) { return static_cast<int>(p.size()) - 1; }

Integer zcontent(const ZP& p) {
    Integer g = 0;
    for (const auto& c : p) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

void zdiv_scalar(ZP& p, const Integer& s) {
    for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), s.get_mpz_t());
}

void zmul_scalar(ZP& p, const Integer& s) {
    for (auto& c : p) c *= s;
}

Integer zpow(const Integer& b, int e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

// r = lc(b)^(deg a - deg b + 1) * a  mod  b, computed in place.  The full
// lc power matters: degree drops of more than one would otherwise leave a
// deficit and break the subresultant divisions.
ZP zpseudo_rem(ZP a, const ZP& b) {
    const int db = zdeg(b);
    const Integer& lb = b.back();
    int remaining = zdeg(a) - db + 1;
    while (zdeg(a) >= db) {
        const int k = zdeg(a) - db;
        Integer top = a.back();
        zmul_scalar(a, lb);
        --remaining;
        for (int i = 0; i <= db; ++i)
            a[static_cast<size_t>(i + k)] -= top * b[static_cast<size_t>(i)];
        ztrim(a);
    }
    if (!a.empty() && remaining > 0) zmul_scalar(a, zpow(lb, remaining));
    return a;
}

// Subresultant PRS gcd of primitive inputs; returns the primitive gcd with
// positive leading coefficient.
ZP zgcd_subresultant(ZP a, ZP b) {
    if (zdeg(a) < zdeg(b)) std::swap(a, b);
    if (b.empty()) return a;
    Integer g(1), h(1);
    for (;;) {
        const int delta = zdeg(a) - zdeg(b);
        ZP r = zpseudo_rem(a, b);
        if (r.empty()) break;
        if (zdeg(r) == 0) return {Integer(1)};
        a = std::move(b);
        Integer divisor = g * zpow(h, delta);
        zdiv_scalar(r, divisor);
        b = std::move(r);
        g = a.back();
        if (delta > 0) {
            // h = g^delta / h^(delta-1), exact
            Integer num = zpow(g, delta);
            Integer den = zpow(h, delta - 1);
            mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        }
    }
    Integer c = zcontent(b);
    zdiv_scalar(b, c);
    if (sgn(b.back()) < 0) zmul_scalar(b, Integer(-1));
    return b;
}

PolyQ zp_to_poly(const ZP& p) {
    std::vector<Rational> v;
    v.reserve(p.size());
    for (const auto& c : p) v.emplace_back(c);
    return PolyQ::from_coeffs(std::move(v));
}

// ---- modular root machinery ----------------------------------------------

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

uint64_t powmod(uint64_t a, uint64_t e, uint64_t m) {
    uint64_t r = 1 % m;
    while (e) {
        if (e & 1u) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1u;
    }
    return r;
}

std::vector<uint64_t> reduce_mod(const ZP& p, uint64_t m) {
    std::vector<uint64_t> v(p.size());
    for (size_t i = 0; i < p.size(); ++i) {
        unsigned long r = mpz_fdiv_ui(p[i].get_mpz_t(), m);
        v[i] = r;
    }
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
}

uint64_t eval_mod(const std::vector<uint64_t>& p, uint64_t x, uint64_t m) {
    uint64_t r = 0;
    for (size_t i = p.size(); i-- > 0;) r = (mulmod(r, x, m) + p[i]) % m;
    return r;
}

bool squarefree_mod(const std::vector<uint64_t>& f, uint64_t m) {
    // gcd(f, f') over F_m
    std::vector<uint64_t> a = f, b(f.size() > 1 ? f.size() - 1 : 0);
    for (size_t i = 1; i < f.size(); ++i) b[i - 1] = mulmod(f[i], i % m, m);
    while (!b.empty() && b.back() == 0) b.pop_back();
    while (!b.empty()) {
        // a mod b in place
        uint64_t inv = powmod(b.back(), m - 2, m);
        while (a.size() >= b.size()) {
            uint64_t f2 = mulmod(a.back(), inv, m);
            size_t k = a.size() - b.size();
            for (size_t i = 0; i < b.size(); ++i) {
                uint64_t sub = mulmod(f2, b[i], m);
                a[i + k] = (a[i + k] + m - sub) % m;
            }
            while (!a.empty() && a.back() == 0) a.pop_back();
            if (a.empty()) break;
        }
        std::swap(a, b);
    }
    return a.size() == 1; // constant gcd
}

constexpr uint64_t kRootPrimes[] = {10007, 10009, 10037, 10039, 10061, 10067, 10069, 10079,
                                    10091, 10093, 10099, 10103, 10111, 10133, 10139, 10141};

} // namespace

std::vector<Integer> integer_primitive(const PolyQ& p) {
    Integer den(1);
    for (const auto& c : p.coeffs())
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    ZP v;
    v.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) {
        Integer n = c.get_num() * (den / c.get_den());
        v.push_back(n);
    }
    ztrim(v);
    if (v.empty()) return v;
    Integer cont = zcontent(v);
    zdiv_scalar(v, cont);
    if (sgn(v.back()) < 0) zmul_scalar(v, Integer(-1));
    return v;
}

PolyQ poly_gcd(const PolyQ& a, const PolyQ& b) {
    if (a.is_zero() && b.is_zero()) throw degenerate_input_error("gcd(0, 0) is undefined");
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    ZP za = integer_primitive(a);
    ZP zb = integer_primitive(b);
    return zp_to_poly(zgcd_subresultant(std::move(za), std::move(zb))).monic();
}

std::vector<Rational> rational_roots(const PolyQ& p) {
    if (p.is_zero()) throw degenerate_input_error("rational_roots of zero");
    std::set<Rational> found;
    if (p.deg() == 0) return {};

    PolyQ s = squarefree_part(p);
    ZP f = integer_primitive(s);
    // strip the root at 0
    size_t shift = 0;
    while (shift < f.size() && sgn(f[shift]) == 0) ++shift;
    if (shift > 0) {
        found.insert(Rational(0));
        f.erase(f.begin(), f.begin() + static_cast<long>(shift));
    }
    if (zdeg(f) <= 0) return {found.begin(), found.end()};
    if (zdeg(f) == 1) {
        Rational r(-f[0], f[1]);
        r.canonicalize();
        found.insert(r);
        return {found.begin(), found.end()};
    }

    // reconstruction bound: numerator divides f[0], denominator divides lc
    Integer bound = abs(f[0]) > abs(f.back()) ? abs(f[0]) : abs(f.back());
    Integer target = 2 * bound * bound + 1;

    for (uint64_t q : kRootPrimes) {
        if (mpz_fdiv_ui(f.back().get_mpz_t(), q) == 0) continue;
        std::vector<uint64_t> fq = reduce_mod(f, q);
        if (static_cast<int>(fq.size()) - 1 != zdeg(f)) continue;
        if (!squarefree_mod(fq, q)) continue;

        std::vector<uint64_t> roots_q;
        for (uint64_t x = 0; x < q; ++x)
            if (eval_mod(fq, x, q) == 0) roots_q.push_back(x);

        ZP fder(f.size() - 1);
        for (size_t i = 1; i < f.size(); ++i) fder[i - 1] = f[i] * static_cast<long>(i);

        for (uint64_t r0 : roots_q) {
            // Newton lift r with f(r) = 0 mod q^(2^j)
            Integer modulus(static_cast<unsigned long>(q));
            Integer r(static_cast<unsigned long>(r0));
            while (modulus < target) {
                modulus = modulus * modulus;
                Integer fr(0), dr(0);
                for (size_t i = f.size(); i-- > 0;) fr = (fr * r + f[i]) % modulus;
                for (size_t i = fder.size(); i-- > 0;) dr = (dr * r + fder[i]) % modulus;
                Integer inv;
                if (mpz_invert(inv.get_mpz_t(), dr.get_mpz_t(), modulus.get_mpz_t()) == 0) {
                    modulus = 0; // derivative not invertible; abandon this root
                    break;
                }
                r = (r - fr * inv) % modulus;
                if (sgn(r) < 0) r += modulus;
            }
            if (modulus == 0) continue;
            // rational reconstruction: u/v = r mod modulus with |u|, v <= bound
            Integer v0(modulus), v1(0), w0(r), w1(1);
            while (w0 > bound) {
                Integer quo = v0 / w0;
                Integer nv0 = v0 - quo * w0, nv1 = v1 - quo * w1;
                v0 = w0;
                v1 = w1;
                w0 = nv0;
                w1 = nv1;
            }
            if (sgn(w1) == 0 || abs(w1) > bound) continue;
            Rational cand(w0, w1);
            cand.canonicalize();
            if (is_zero(p.eval(cand))) found.insert(cand);
        }
        return {found.begin(), found.end()};
    }
    throw resource_limit_error("rational_roots: no usable prime in table");
}

} // namespace ffdyn
