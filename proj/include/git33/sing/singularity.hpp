#ifndef GIT33_SING_SINGULARITY_HPP
#define GIT33_SING_SINGULARITY_HPP

#include <numeric>
#include <string>
#include <vector>

#include "git33/biform/binary_form.hpp"
#include "git33/exact/factor.hpp"
#include "git33/sing/local_algebra.hpp"

namespace git33 {

/// Order of f at the origin; 0 when the origin is not on the curve.
inline int multiplicity(const BiPoly& f) {
    if (f.is_zero()) fail(Errc::InvalidArgument, "multiplicity of the zero polynomial");
    return f.order();
}

enum class ConeShape { Distinct, DoubleLine, DoublePlusSimple, TripleLine, Other };

inline const char* cone_shape_name(ConeShape s) {
    switch (s) {
    case ConeShape::Distinct: return "distinct";
    case ConeShape::DoubleLine: return "double";
    case ConeShape::DoublePlusSimple: return "double+simple";
    case ConeShape::TripleLine: return "triple";
    case ConeShape::Other: return "other";
    }
    return "?";
}

struct TangentCone {
    int multiplicity = 0;
    BinaryForm form;              // coefficient k multiplies x^k z^(m-k)
    std::vector<int> line_mults;  // over the algebraic closure, descending
    ConeShape shape = ConeShape::Other;
};

inline TangentCone tangent_cone_shape(const BiPoly& f) {
    TangentCone tc;
    tc.multiplicity = multiplicity(f);
    const int m = tc.multiplicity;
    std::vector<AlgScalar> c(static_cast<size_t>(m) + 1, AlgScalar::zero(f.field()));
    const BiPoly lowest = f.homogeneous_part(m);
    for (const auto& [k, v] : lowest.terms()) c[static_cast<size_t>(k.first)] = v;
    tc.form = BinaryForm(m, c);
    if (m == 0) return tc;
    tc.line_mults = tc.form.root_multiplicities();
    const auto& lm = tc.line_mults;
    if (lm.size() == static_cast<size_t>(m)) tc.shape = ConeShape::Distinct;
    else if (lm == std::vector<int>{2}) tc.shape = ConeShape::DoubleLine;
    else if (lm == std::vector<int>{2, 1}) tc.shape = ConeShape::DoublePlusSimple;
    else if (lm == std::vector<int>{3}) tc.shape = ConeShape::TripleLine;
    return tc;
}

namespace detail {

// Shifts every exponent of x down by l (exact division by x^l).
inline BiPoly shift_x(const BiPoly& f, int l) {
    BiPoly r(f.field());
    for (const auto& [k, c] : f.terms()) r.add_term(k.first - l, k.second, c);
    return r;
}

inline BiPoly swap_xz(const BiPoly& f) {
    BiPoly r(f.field());
    for (const auto& [k, c] : f.terms()) r.add_term(k.second, k.first, c);
    return r;
}

// Integers (a, b) with p*a - q*b = 1.
inline std::pair<long, long> bezout(long p, long q) {
    long old_r = p, r = q, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
        const long qq = old_r / r;
        std::tie(old_r, r) = std::make_pair(r, old_r - qq * r);
        std::tie(old_s, s) = std::make_pair(s, old_s - qq * s);
        std::tie(old_t, t) = std::make_pair(t, old_t - qq * t);
    }
    return {old_s, -old_t};
}

inline AlgScalar ipow(const AlgScalar& a, long e) {
    return e >= 0 ? a.pow(static_cast<unsigned>(e)) : a.inverse().pow(static_cast<unsigned>(-e));
}

inline int count_branches(const BiPoly& f0, int level) {
    if (f0.is_zero()) fail(Errc::NonIsolated, "zero local equation");
    if (level > 32) fail(Errc::NonIsolated, "branch expansion did not terminate");
    if (!f0.coeff(0, 0).is_zero()) return 0;
    int min_i = 1 << 20, min_j = 1 << 20;
    for (const auto& [k, c] : f0.terms()) {
        min_i = std::min(min_i, k.first);
        min_j = std::min(min_j, k.second);
    }
    if (min_i >= 2 || min_j >= 2) fail(Errc::NonIsolated, "local equation is not squarefree");
    int r = 0;
    BiPoly f = f0;
    if (min_i == 1) {
        ++r;
        f = shift_x(f, 1);
    }
    if (min_j == 1) {
        ++r;
        f = swap_xz(shift_x(swap_xz(f), 1));
    }
    if (!f.coeff(0, 0).is_zero()) return r;

    // lower Newton polygon from the z-axis to the x-axis
    int j0 = 1 << 20, i0 = 1 << 20;
    for (const auto& [k, c] : f.terms()) {
        if (k.first == 0) j0 = std::min(j0, k.second);
        if (k.second == 0) i0 = std::min(i0, k.first);
    }
    int ci = 0, cj = j0;
    while (cj > 0) {
        int bi = -1, bj = -1;
        for (const auto& [k, c] : f.terms()) {
            if (k.first <= ci || k.second >= cj) continue;
            if (bi < 0) {
                bi = k.first;
                bj = k.second;
                continue;
            }
            // compare slopes (k.second - cj)/(k.first - ci) vs (bj - cj)/(bi - ci)
            const long lhs = static_cast<long>(k.second - cj) * (bi - ci);
            const long rhs = static_cast<long>(bj - cj) * (k.first - ci);
            if (lhs < rhs || (lhs == rhs && k.first > bi)) {
                bi = k.first;
                bj = k.second;
            }
        }
        const int g = std::gcd(bi - ci, cj - bj);
        const int q = (bi - ci) / g, p = (cj - bj) / g;
        std::vector<AlgScalar> phi;
        for (int k = 0; k <= g; ++k) phi.push_back(f.coeff(bi - q * k, bj + p * k));
        const UniPoly edge(f.field(), phi, "T");
        for (const auto& fac : factor_univ(edge).factors) {
            const int d = fac.poly.degree();
            if (fac.mult == 1) {
                r += d;
                continue;
            }
            const RootField rf = adjoin_root(fac.poly);
            const AlgScalar& lam = rf.root;
            const auto [al, be] = bezout(p, q);
            const AlgScalar nu = ipow(lam, al), mu = ipow(lam, be);
            const Field& k1 = rf.field;
            const BiPoly xs = BiPoly::monomial(mu, p, 0);
            const BiPoly zs = BiPoly::monomial(nu, q, 0) + BiPoly::monomial(AlgScalar::one(k1), q, 1);
            const BiPoly f1 = shift_x(f.lift(k1).substitute(xs, zs), p * bi + q * bj);
            r += d * count_branches(f1, level + 1);
        }
        ci = bi;
        cj = bj;
    }
    (void)i0;
    return r;
}

} // namespace detail

/// Number of analytic branches at the origin.
inline int branches(const BiPoly& f) { return detail::count_branches(f, 0); }

struct SingularityType {
    enum class Tag { Smooth, A, D, E6, E7, E8, J10, Unclassified };
    Tag tag = Tag::Unclassified;
    int k = 0;

    std::string str() const {
        switch (tag) {
        case Tag::Smooth: return "Smooth";
        case Tag::A: return "A" + std::to_string(k);
        case Tag::D: return "D" + std::to_string(k);
        case Tag::E6: return "E6";
        case Tag::E7: return "E7";
        case Tag::E8: return "E8";
        case Tag::J10: return "J10";
        case Tag::Unclassified: return "Unclassified";
        }
        return "?";
    }
    friend bool operator==(const SingularityType& a, const SingularityType& b) { return a.tag == b.tag && a.k == b.k; }
    friend bool operator!=(const SingularityType& a, const SingularityType& b) { return !(a == b); }
    static SingularityType A(int k) { return {Tag::A, k}; }
    static SingularityType D(int k) { return {Tag::D, k}; }
    static SingularityType of(Tag t) { return {t, 0}; }
};

namespace detail {

using Series = std::vector<AlgScalar>;  // truncated power series in x

inline Series series_mul(const Series& a, const Series& b, size_t M, const Field& k) {
    Series r(M, AlgScalar::zero(k));
    for (size_t i = 0; i < a.size() && i < M; ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < b.size() && i + j < M; ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

// g(x, zeta(x)) mod x^M
inline Series eval_series(const BiPoly& g, const Series& zeta, size_t M) {
    const Field& k = g.field();
    Series acc(M, AlgScalar::zero(k));
    for (int j = g.deg_z(); j >= 0; --j) {
        acc = series_mul(acc, zeta, M, k);
        const UniPoly cj = g.z_coeff(j);
        for (int i = 0; i <= cj.degree() && static_cast<size_t>(i) < M; ++i) acc[static_cast<size_t>(i)] += cj.coeff(i);
    }
    return acc;
}

// Linear change putting a nonzero z^2 term into a multiplicity-2 germ.
inline BiPoly with_z_squared(const BiPoly& f) {
    if (!f.coeff(0, 2).is_zero()) return f;
    if (!f.coeff(2, 0).is_zero()) return swap_xz(f);
    const Field& k = f.field();
    return f.substitute(BiPoly::x(k) + BiPoly::z(k), BiPoly::z(k));
}

} // namespace detail

/// Index k of an A_k germ from the order of f along the critical curve f_z = 0 (splitting lemma).
/// Returns -1 if the order exceeds the precision M.
inline int a_index(const BiPoly& f0, int M) {
    const BiPoly f = detail::with_z_squared(f0);
    const Field& k = f.field();
    const BiPoly fz = f.dz();
    const AlgScalar inv = (AlgScalar(2) * f.coeff(0, 2)).inverse();
    detail::Series zeta(static_cast<size_t>(M), AlgScalar::zero(k));
    for (int it = 0; it < M; ++it) {
        const auto e = detail::eval_series(fz, zeta, static_cast<size_t>(M));
        bool done = true;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i].is_zero()) continue;
            done = false;
            zeta[i] -= e[i] * inv;
        }
        if (done) break;
    }
    const auto h = detail::eval_series(f, zeta, static_cast<size_t>(M));
    for (size_t i = 0; i < h.size(); ++i)
        if (!h[i].is_zero()) return static_cast<int>(i) - 1;
    return -1;
}

/// Weighted (1,2) test for J10 on a germ with a triple tangent line.
inline bool is_j10_normal_form(const BiPoly& f0) {
    const TangentCone tc = tangent_cone_shape(f0);
    if (tc.multiplicity != 3 || tc.shape != ConeShape::TripleLine) return false;
    const Field& k = f0.field();
    BiPoly f = f0;
    const AlgScalar& c0 = tc.form.coeff(0);  // z^3
    if (c0.is_zero()) {
        f = detail::swap_xz(f);
    } else {
        const AlgScalar a = tc.form.coeff(1) / (AlgScalar(3) * c0);
        f = f.substitute(BiPoly::x(k), BiPoly::z(k) - BiPoly::monomial(a, 1, 0));
    }
    if (f.weighted_order(1, 2) != 6) return false;
    const BiPoly w = f.weighted_part(1, 2, 6);
    BinaryForm cubic(3, {w.coeff(6, 0), w.coeff(4, 1), w.coeff(2, 2), w.coeff(0, 3)});
    return cubic.root_multiplicities() == std::vector<int>{1, 1, 1};
}

/// Classification of a germ at the origin with a known Milnor number.
inline SingularityType classify_with_milnor(const BiPoly& f, int mu) {
    using T = SingularityType::Tag;
    const int m = multiplicity(f);
    if (m == 0) fail(Errc::NotOnCurve, "the origin is not on the curve");
    if (m == 1) return SingularityType::of(T::Smooth);
    if (m >= 4) return SingularityType::of(T::Unclassified);
    if (m == 2) {
        const int k = a_index(f, mu + 3);
        if (k != mu)
            fail(Errc::Paradox, "A-index " + std::to_string(k) + " disagrees with Milnor number " + std::to_string(mu));
        return SingularityType::A(k);
    }
    const TangentCone tc = tangent_cone_shape(f);
    switch (tc.shape) {
    case ConeShape::Distinct:
        if (mu != 4) fail(Errc::Paradox, "ordinary triple point with Milnor number " + std::to_string(mu));
        return SingularityType::D(4);
    case ConeShape::DoublePlusSimple:
        if (mu < 5) fail(Errc::Paradox, "D-type cone with Milnor number " + std::to_string(mu));
        return SingularityType::D(mu);
    case ConeShape::TripleLine:
        if (mu == 6) return SingularityType::of(T::E6);
        if (mu == 7) return SingularityType::of(T::E7);
        if (mu == 8) return SingularityType::of(T::E8);
        if (mu == 10 && is_j10_normal_form(f)) return SingularityType::of(T::J10);
        return SingularityType::of(T::Unclassified);
    default:
        return SingularityType::of(T::Unclassified);
    }
}

/// Classification of a germ at the origin.
inline SingularityType classify_singularity(const BiPoly& f, int cap = kDefaultTruncation) {
    if (multiplicity(f) <= 1) return classify_with_milnor(f, 0);
    return classify_with_milnor(f, milnor_number(f, cap));
}

} // namespace git33

#endif
