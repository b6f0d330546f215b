#ifndef GIT33_EXACT_FACTOR_HPP
#define GIT33_EXACT_FACTOR_HPP

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "git33/exact/unipoly.hpp"
#include "git33/exact/zassenhaus.hpp"

namespace git33 {

struct Factor {
    UniPoly poly;  // monic irreducible
    int mult;
};

/// f = unit * prod(poly^mult).
struct Factorization {
    AlgScalar unit;
    std::vector<Factor> factors;
};

namespace detail {

inline UniPoly from_zpoly(const zfactor::ZPoly& z, const std::string& var) {
    std::vector<AlgScalar> c;
    for (const auto& x : z) c.emplace_back(Rat(x));
    return UniPoly(Field(), std::move(c), var).monic();
}

inline zfactor::ZPoly to_zpoly(const UniPoly& f) {
    Int den = 1;
    for (const auto& a : f.coeffs()) den = lcm(den, a.rational().get_den());
    zfactor::ZPoly z;
    for (const auto& a : f.coeffs()) {
        Rat v = a.rational() * den;
        z.push_back(v.get_num());
    }
    return z;
}

/// Coordinates of an element of the top layer as a polynomial over the base layer.
inline std::vector<AlgScalar> split_top(const AlgScalar& a) {
    const Field& f = a.field();
    const Field b = f.base();
    const int lo = b.total_degree();
    std::vector<AlgScalar> out;
    for (int j = 0; j < f.degree(); ++j) {
        std::vector<Rat> c(a.coords().begin() + j * lo, a.coords().begin() + (j + 1) * lo);
        out.emplace_back(b, std::move(c));
    }
    return out;
}

inline UniPoly minpoly_poly(const Field& f, const std::string& var = "y") {
    std::vector<AlgScalar> c;
    for (const auto& m : f.minpoly()) c.emplace_back(f.base(), m);
    return UniPoly(f.base(), std::move(c), var);
}

} // namespace detail

/// Norm of a polynomial over K = B(t) down to B: Res_y(m(y), h(x, y)), m the minimal polynomial.
inline UniPoly norm_down(const UniPoly& h) {
    const Field& k = h.field();
    if (k.is_rational()) return h;
    const Field b = k.base();
    const int d = k.degree();
    const UniPoly m = detail::minpoly_poly(k);
    std::vector<std::vector<AlgScalar>> split;
    for (const auto& c : h.coeffs()) split.push_back(detail::split_top(c.lift(k)));
    const int n = d * h.degree();
    std::vector<AlgScalar> xs, ys;
    for (int i = 0; i <= n; ++i) {
        const AlgScalar xi(static_cast<long>(i));
        std::vector<AlgScalar> hy(static_cast<size_t>(d), AlgScalar::zero(b));
        AlgScalar pw = AlgScalar::one(b);
        for (const auto& ck : split) {
            for (int j = 0; j < d; ++j) hy[static_cast<size_t>(j)] += ck[static_cast<size_t>(j)] * pw;
            pw *= xi;
        }
        const UniPoly hyp(b, hy, "y");
        xs.push_back(xi);
        ys.push_back(resultant(m, hyp, d, d - 1).lift(b));
    }
    return interpolate(xs, ys, b, h.var());
}

inline std::vector<UniPoly> factor_squarefree_over(const UniPoly& g);

namespace detail {

inline std::vector<UniPoly> trager(const UniPoly& g) {
    const Field& k = g.field();
    const AlgScalar theta = AlgScalar::generator(k);
    for (long s = 0;; s = (s > 0 ? -s : -s + 1)) {
        const UniPoly shift(k, {-(AlgScalar(s) * theta), AlgScalar::one(k)}, g.var());
        const UniPoly gs = g.compose(shift);
        const UniPoly nrm = norm_down(gs);
        if (!is_squarefree(nrm)) continue;
        const auto parts = factor_squarefree_over(nrm);
        if (parts.size() == 1) return {g.monic()};
        std::vector<UniPoly> out;
        const UniPoly back(k, {AlgScalar(s) * theta, AlgScalar::one(k)}, g.var());
        for (const auto& p : parts) {
            UniPoly hi = gcd_univ(gs, p.lift(k));
            if (hi.degree() <= 0) continue;
            out.push_back(hi.compose(back).monic());
        }
        return out;
    }
}

} // namespace detail

/// Monic irreducible factors of a squarefree polynomial over its own field.
inline std::vector<UniPoly> factor_squarefree_over(const UniPoly& g) {
    if (g.degree() <= 1) return {g.monic()};
    std::vector<UniPoly> out;
    if (g.field().is_rational()) {
        for (const auto& z : zfactor::factor_squarefree(detail::to_zpoly(g))) out.push_back(detail::from_zpoly(z, g.var()));
    } else {
        out = detail::trager(g);
    }
    std::sort(out.begin(), out.end(), poly_less);
    return out;
}

/// Complete factorization into monic irreducibles over the polynomial's field.
inline Factorization factor_univ(const UniPoly& f) {
    if (f.is_zero()) fail(Errc::InvalidArgument, "factorization of zero");
    Factorization out{f.lc(), {}};
    for (const auto& [g, m] : squarefree_decomposition(f))
        for (auto& h : factor_squarefree_over(g)) out.factors.push_back({std::move(h), m});
    std::sort(out.factors.begin(), out.factors.end(), [](const Factor& a, const Factor& b) {
        if (poly_less(a.poly, b.poly)) return true;
        if (poly_less(b.poly, a.poly)) return false;
        return a.mult < b.mult;
    });
    return out;
}

inline bool is_irreducible(const UniPoly& f) {
    if (f.degree() <= 0) return false;
    const auto fac = factor_univ(f);
    return fac.factors.size() == 1 && fac.factors[0].mult == 1;
}

/// Extension by a root of an irreducible monic polynomial, without the tower caps.
inline Field extension_raw(const UniPoly& m, std::string symbol) {
    const UniPoly mm = m.monic();
    std::vector<std::vector<Rat>> coeffs;
    for (const auto& c : mm.coeffs()) coeffs.push_back(c.lift(m.field()).coords());
    return Field::extension_unchecked(m.field(), std::move(coeffs), std::move(symbol));
}

inline void check_tower_limits(const Field& base, int degree) {
    if (base.depth() + 1 > kMaxTowerDepth)
        fail(Errc::TowerTooDeep, "extension would exceed tower depth " + std::to_string(kMaxTowerDepth));
    if (degree > kMaxStepDegree)
        fail(Errc::TowerTooDeep, "extension step of degree " + std::to_string(degree) + " exceeds " +
                                     std::to_string(kMaxStepDegree));
}

/// Validated field constructor: m must be monic, squarefree and irreducible over its field.
inline Field make_field(const UniPoly& m, std::string symbol) {
    if (m.degree() < 1) fail(Errc::InvalidArgument, "minimal polynomial must be non-constant");
    if (!m.lc().is_one()) fail(Errc::InvalidArgument, "minimal polynomial must be monic");
    check_tower_limits(m.field(), m.degree());
    if (!is_irreducible(m)) fail(Errc::InvalidArgument, "minimal polynomial " + m.str() + " is not irreducible");
    if (m.degree() == 1) return m.field();
    return extension_raw(m, std::move(symbol));
}

struct RootField {
    Field field;
    AlgScalar root;
};

/// Chooses the irreducible factor of least degree, ties broken by poly_less.
inline UniPoly preferred_factor(const UniPoly& m) {
    const auto fac = factor_univ(m);
    UniPoly best = fac.factors.front().poly;
    for (const auto& f : fac.factors)
        if (poly_less(f.poly, best)) best = f.poly;
    return best;
}

/// Adjoins a root of m to its field. Linear factors collapse to the base field.
/// `checked` enforces the depth and degree caps.
inline RootField adjoin_root(const UniPoly& m, std::string symbol = "", bool checked = true) {
    if (m.degree() < 1) fail(Errc::InvalidArgument, "adjoin_root of a constant");
    const UniPoly p = preferred_factor(m);
    if (p.degree() == 1) return {m.field(), -p.coeff(0)};
    if (checked) check_tower_limits(m.field(), p.degree());
    if (symbol.empty()) symbol = "r" + std::to_string(m.field().depth() + 1);
    Field f = extension_raw(p, std::move(symbol));
    return {f, AlgScalar::generator(f)};
}

/// Roots lying in the polynomial's own field, each listed once.
inline std::vector<AlgScalar> roots_in_field(const UniPoly& f) {
    std::vector<AlgScalar> out;
    if (f.degree() < 1) return out;
    for (const auto& fac : factor_univ(f).factors)
        if (fac.poly.degree() == 1) out.push_back(-fac.poly.coeff(0));
    return out;
}

} // namespace git33

#endif
