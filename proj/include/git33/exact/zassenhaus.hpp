#ifndef GIT33_EXACT_ZASSENHAUS_HPP
#define GIT33_EXACT_ZASSENHAUS_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "git33/exact/error.hpp"
#include "git33/exact/rational.hpp"

// Factorization of squarefree primitive integer polynomials:
// Cantor-Zassenhaus modulo a small prime, quadratic Hensel lifting, subset recombination.
namespace git33::zfactor {

using ZPoly = std::vector<Int>;            // low to high, trimmed
using PPoly = std::vector<std::int64_t>;   // coefficients in [0, p)

inline void trim(ZPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}
inline void trim(PPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline int deg(const ZPoly& a) { return static_cast<int>(a.size()) - 1; }
inline int deg(const PPoly& a) { return static_cast<int>(a.size()) - 1; }

// ---- arithmetic modulo a word-size prime

inline std::int64_t modp(std::int64_t a, std::int64_t p) {
    a %= p;
    return a < 0 ? a + p : a;
}

inline std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
    std::int64_t t = 0, nt = 1, r = p, nr = modp(a, p);
    while (nr != 0) {
        const std::int64_t q = r / nr;
        std::tie(t, nt) = std::make_pair(nt, t - q * nt);
        std::tie(r, nr) = std::make_pair(nr, r - q * nr);
    }
    return modp(t, p);
}

inline PPoly reduce(const ZPoly& a, std::int64_t p) {
    PPoly r(a.size());
    const Int P(static_cast<long>(p));
    for (size_t i = 0; i < a.size(); ++i) {
        Int m = a[i] % P;
        if (m < 0) m += P;
        r[i] = m.get_si();
    }
    trim(r);
    return r;
}

inline PPoly pmul(const PPoly& a, const PPoly& b, std::int64_t p) {
    if (a.empty() || b.empty()) return {};
    PPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    trim(r);
    return r;
}

inline PPoly psub(PPoly a, const PPoly& b, std::int64_t p) {
    if (b.size() > a.size()) a.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i) a[i] = modp(a[i] - b[i], p);
    trim(a);
    return a;
}

inline std::pair<PPoly, PPoly> pdivrem(PPoly a, const PPoly& b, std::int64_t p) {
    if (b.empty()) fail(Errc::DivisionByZero, "modular division by zero");
    if (deg(a) < deg(b)) return {{}, a};
    PPoly q(static_cast<size_t>(deg(a) - deg(b) + 1), 0);
    const std::int64_t inv = inv_mod(b.back(), p);
    for (int k = deg(a); k >= deg(b); --k) {
        const std::int64_t c = a[static_cast<size_t>(k)] * inv % p;
        q[static_cast<size_t>(k - deg(b))] = c;
        if (!c) continue;
        for (int j = 0; j <= deg(b); ++j) {
            auto& t = a[static_cast<size_t>(k - deg(b) + j)];
            t = modp(t - c * b[static_cast<size_t>(j)], p);
        }
    }
    trim(a);
    trim(q);
    return {q, a};
}

inline PPoly pmonic(PPoly a, std::int64_t p) {
    if (a.empty()) return a;
    const std::int64_t inv = inv_mod(a.back(), p);
    for (auto& c : a) c = c * inv % p;
    return a;
}

inline PPoly pgcd(PPoly a, PPoly b, std::int64_t p) {
    while (!b.empty()) {
        auto r = pdivrem(a, b, p).second;
        a = std::move(b);
        b = std::move(r);
    }
    return pmonic(a, p);
}

inline PPoly pderiv(const PPoly& a, std::int64_t p) {
    PPoly r;
    for (size_t k = 1; k < a.size(); ++k) r.push_back(a[k] * static_cast<std::int64_t>(k % static_cast<size_t>(p)) % p);
    trim(r);
    return r;
}

/// base^e mod (m, p) with a multiprecision exponent.
inline PPoly ppowmod(PPoly base, const Int& e, const PPoly& m, std::int64_t p) {
    PPoly r{1};
    base = pdivrem(base, m, p).second;
    const size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (size_t i = bits; i-- > 0;) {
        r = pdivrem(pmul(r, r, p), m, p).second;
        if (mpz_tstbit(e.get_mpz_t(), i)) r = pdivrem(pmul(r, base, p), m, p).second;
    }
    return r;
}

/// Distinct-degree factorization of a monic squarefree polynomial: (product, degree) pairs.
inline std::vector<std::pair<PPoly, int>> ddf(PPoly f, std::int64_t p) {
    std::vector<std::pair<PPoly, int>> out;
    PPoly h{0, 1};
    const PPoly x{0, 1};
    int d = 0;
    while (deg(f) >= 2 * (d + 1)) {
        ++d;
        h = ppowmod(h, Int(static_cast<long>(p)), f, p);
        auto g = pgcd(f, psub(h, x, p), p);
        if (deg(g) > 0) {
            out.emplace_back(g, d);
            f = pdivrem(f, g, p).first;
            h = pdivrem(h, f, p).second;
        }
    }
    if (deg(f) > 0) out.emplace_back(f, deg(f));
    return out;
}

/// Equal-degree splitting of a monic product of degree-d irreducibles (p odd).
inline void edf(const PPoly& f, int d, std::int64_t p, std::mt19937_64& rng, std::vector<PPoly>& out) {
    if (deg(f) == d) {
        out.push_back(f);
        return;
    }
    Int e = 1;
    for (int i = 0; i < d; ++i) e *= static_cast<long>(p);
    e = (e - 1) / 2;
    std::uniform_int_distribution<std::int64_t> dist(0, p - 1);
    for (;;) {
        PPoly a(static_cast<size_t>(deg(f)));
        for (auto& c : a) c = dist(rng);
        trim(a);
        if (deg(a) < 1) continue;
        auto b = ppowmod(a, e, f, p);
        b = psub(b, PPoly{1}, p);
        auto g = pgcd(f, b, p);
        if (deg(g) > 0 && deg(g) < deg(f)) {
            edf(g, d, p, rng, out);
            edf(pdivrem(f, g, p).first, d, p, rng, out);
            return;
        }
    }
}

inline std::vector<PPoly> factor_mod_p(const PPoly& f, std::int64_t p, std::mt19937_64& rng) {
    std::vector<PPoly> out;
    for (auto& [g, d] : ddf(pmonic(f, p), p)) edf(g, d, p, rng, out);
    std::sort(out.begin(), out.end());
    return out;
}

// ---- arithmetic modulo a multiprecision modulus, symmetric on output

inline ZPoly zmod(ZPoly a, const Int& m) {
    for (auto& c : a) {
        c %= m;
        if (c < 0) c += m;
    }
    trim(a);
    return a;
}

inline ZPoly zsym(ZPoly a, const Int& m) {
    const Int half = m / 2;
    for (auto& c : a) {
        c %= m;
        if (c < 0) c += m;
        if (c > half) c -= m;
    }
    trim(a);
    return a;
}

inline ZPoly zmul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

inline ZPoly zadd(ZPoly a, const ZPoly& b) {
    if (b.size() > a.size()) a.resize(b.size(), Int(0));
    for (size_t i = 0; i < b.size(); ++i) a[i] += b[i];
    trim(a);
    return a;
}

inline ZPoly zsub(ZPoly a, const ZPoly& b) {
    if (b.size() > a.size()) a.resize(b.size(), Int(0));
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    trim(a);
    return a;
}

inline Int inv_mod(const Int& a, const Int& m) {
    Int r;
    if (!mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()))
        fail(Errc::DivisionByZero, "non-invertible leading coefficient in Hensel lifting");
    return r;
}

/// Division by a polynomial whose leading coefficient is a unit mod m.
inline std::pair<ZPoly, ZPoly> zdivrem(ZPoly a, const ZPoly& b, const Int& m) {
    a = zmod(std::move(a), m);
    if (deg(a) < deg(b)) return {{}, a};
    ZPoly q(static_cast<size_t>(deg(a) - deg(b) + 1), Int(0));
    const Int inv = inv_mod(b.back(), m);
    for (int k = deg(a); k >= deg(b); --k) {
        Int c = a[static_cast<size_t>(k)] * inv % m;
        if (c < 0) c += m;
        q[static_cast<size_t>(k - deg(b))] = c;
        if (c == 0) continue;
        for (int j = 0; j <= deg(b); ++j) {
            auto& t = a[static_cast<size_t>(k - deg(b) + j)];
            t = (t - c * b[static_cast<size_t>(j)]) % m;
        }
    }
    return {zmod(q, m), zmod(a, m)};
}

/// Extended gcd mod p: s*a + t*b = 1 for coprime a, b.
inline std::pair<PPoly, PPoly> pxgcd(const PPoly& a, const PPoly& b, std::int64_t p) {
    PPoly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
        auto [q, r] = pdivrem(r0, r1, p);
        r0 = std::move(r1);
        r1 = std::move(r);
        auto s2 = psub(s0, pmul(q, s1, p), p);
        auto t2 = psub(t0, pmul(q, t1, p), p);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (deg(r0) != 0) fail(Errc::InvalidArgument, "Hensel factors not coprime mod p");
    const std::int64_t inv = inv_mod(r0[0], p);
    for (auto& c : s0) c = c * inv % p;
    for (auto& c : t0) c = c * inv % p;
    return {s0, t0};
}

inline ZPoly to_z(const PPoly& a) {
    ZPoly r;
    for (auto c : a) r.emplace_back(static_cast<long>(c));
    return r;
}

/// One quadratic Hensel step from modulus m to m^2; h stays monic.
inline void hensel_step(const ZPoly& f, ZPoly& g, ZPoly& h, ZPoly& s, ZPoly& t, const Int& m) {
    const Int m2 = m * m;
    const ZPoly e = zmod(zsub(f, zmul(g, h)), m2);
    auto [q, r] = zdivrem(zmul(s, e), h, m2);
    const ZPoly g2 = zmod(zadd(zadd(g, zmul(t, e)), zmul(q, g)), m2);
    const ZPoly h2 = zmod(zadd(h, r), m2);
    ZPoly b = zsub(zadd(zmul(s, g2), zmul(t, h2)), ZPoly{Int(1)});
    b = zmod(b, m2);
    auto [c, d] = zdivrem(zmul(s, b), h2, m2);
    s = zmod(zsub(s, d), m2);
    t = zmod(zsub(zsub(t, zmul(t, b)), zmul(c, g2)), m2);
    g = g2;
    h = h2;
}

/// Lifts f = lc * prod(factors) mod p to modulus p^(2^k) >= bound. Factors monic mod p.
inline std::vector<ZPoly> multifactor_lift(const ZPoly& f, const std::vector<PPoly>& facs, std::int64_t p,
                                           const Int& target, Int& modulus) {
    const size_t r = facs.size();
    if (r == 1) {
        modulus = Int(static_cast<long>(p));
        while (modulus < target) modulus *= modulus;
        // f / lc is the lifted monic factor
        const Int inv = inv_mod(f.back(), modulus);
        ZPoly g = f;
        for (auto& c : g) c = c * inv;
        return {zmod(g, modulus)};
    }
    const size_t k = r / 2;
    PPoly a{1}, b{1};
    for (size_t i = 0; i < k; ++i) a = pmul(a, facs[i], p);
    for (size_t i = k; i < r; ++i) b = pmul(b, facs[i], p);
    const std::int64_t lcp = modp(reduce(ZPoly{f.back()}, p)[0], p);
    PPoly alc = a;
    for (auto& c : alc) c = c * lcp % p;
    auto [s, t] = pxgcd(alc, b, p);
    ZPoly g = to_z(alc), h = to_z(b), zs = to_z(s), zt = to_z(t);
    Int m(static_cast<long>(p));
    while (m < target) {
        hensel_step(f, g, h, zs, zt, m);
        m *= m;
    }
    // g carries the leading coefficient; make it monic before descending.
    const Int inv = inv_mod(f.back(), m);
    ZPoly gm = g;
    for (auto& c : gm) c *= inv;
    gm = zmod(gm, m);
    std::vector<PPoly> left(facs.begin(), facs.begin() + static_cast<long>(k));
    std::vector<PPoly> right(facs.begin() + static_cast<long>(k), facs.end());
    Int m1, m2;
    auto l = multifactor_lift(gm, left, p, target, m1);
    auto rr = multifactor_lift(h, right, p, target, m2);
    modulus = m;
    for (auto& x : rr) l.push_back(std::move(x));
    for (auto& x : l) x = zmod(x, modulus);
    return l;
}

inline Int content(const ZPoly& a) {
    Int g = 0;
    for (const auto& c : a) g = gcd(g, c);
    return g;
}

inline ZPoly primitive(ZPoly a) {
    Int g = content(a);
    if (g == 0) return a;
    if (a.back() < 0) g = -g;
    for (auto& c : a) c /= g;
    return a;
}

/// Exact division over Z; nullopt-like empty result with ok=false when not exact.
inline bool zdivides(const ZPoly& d, const ZPoly& a, ZPoly& quot) {
    ZPoly r = a;
    if (deg(r) < deg(d)) return false;
    ZPoly q(static_cast<size_t>(deg(r) - deg(d) + 1), Int(0));
    for (int k = deg(r); k >= deg(d); --k) {
        const Int& top = r[static_cast<size_t>(k)];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), d.back().get_mpz_t())) return false;
        const Int c = top / d.back();
        q[static_cast<size_t>(k - deg(d))] = c;
        for (int j = 0; j <= deg(d); ++j) r[static_cast<size_t>(k - deg(d) + j)] -= c * d[static_cast<size_t>(j)];
    }
    trim(r);
    if (!r.empty()) return false;
    trim(q);
    quot = std::move(q);
    return true;
}

inline bool is_prime_small(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// Irreducible factors of a squarefree primitive polynomial with positive leading coefficient.
inline std::vector<ZPoly> factor_squarefree(const ZPoly& f0, std::uint64_t seed = 0x5eed) {
    ZPoly f = primitive(f0);
    if (deg(f) <= 1) return {f};
    std::mt19937_64 rng(seed);

    // choose among a few good primes the one giving the fewest modular factors
    std::int64_t best_p = 0;
    std::vector<PPoly> best;
    int good = 0;
    for (std::int64_t p = 101; good < 5; p += 2) {
        if (!is_prime_small(p)) continue;
        const PPoly fp = reduce(f, p);
        if (deg(fp) != deg(f)) continue;
        if (deg(pgcd(fp, pderiv(fp, p), p)) != 0) continue;
        ++good;
        auto facs = factor_mod_p(fp, p, rng);
        if (best_p == 0 || facs.size() < best.size()) {
            best_p = p;
            best = std::move(facs);
        }
        if (best.size() == 1) return {f};
    }

    // coefficient bound: lc * 2^n * (n+1) * max|c| covers every factor scaled by lc
    Int maxc = 0;
    for (const auto& c : f) maxc = std::max(maxc, Int(abs(c)));
    Int bound = abs(f.back()) * maxc * (deg(f) + 1);
    bound <<= static_cast<unsigned>(deg(f));
    const Int target = 2 * bound + 1;

    Int mod;
    std::vector<ZPoly> lifted = multifactor_lift(f, best, best_p, target, mod);

    std::vector<ZPoly> result;
    size_t s = 1;
    while (2 * s <= lifted.size()) {
        bool found = false;
        const size_t n = lifted.size();
        std::vector<size_t> idx(s);
        for (size_t i = 0; i < s; ++i) idx[i] = i;
        for (;;) {
            ZPoly g{f.back()};
            for (auto i : idx) g = zmod(zmul(g, lifted[i]), mod);
            g = primitive(zsym(g, mod));
            ZPoly q;
            if (zdivides(g, f, q)) {
                result.push_back(g);
                f = primitive(q);
                std::vector<ZPoly> rest;
                size_t j = 0;
                for (size_t i = 0; i < n; ++i) {
                    if (j < s && idx[j] == i) {
                        ++j;
                        continue;
                    }
                    rest.push_back(lifted[i]);
                }
                lifted = std::move(rest);
                found = true;
                break;
            }
            // next combination
            size_t pos = s;
            while (pos > 0 && idx[pos - 1] == n - s + pos - 1) --pos;
            if (pos == 0) break;
            ++idx[pos - 1];
            for (size_t i = pos; i < s; ++i) idx[i] = idx[i - 1] + 1;
        }
        if (!found) ++s;
    }
    result.push_back(primitive(f));
    std::sort(result.begin(), result.end(), [](const ZPoly& a, const ZPoly& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return result;
}

} // namespace git33::zfactor

#endif
