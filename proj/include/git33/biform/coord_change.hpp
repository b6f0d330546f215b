#ifndef GIT33_BIFORM_COORD_CHANGE_HPP
#define GIT33_BIFORM_COORD_CHANGE_HPP

#include <array>
#include <random>
#include <string>

#include "git33/biform/biform.hpp"

namespace git33 {

using Mat2 = std::array<std::array<AlgScalar, 2>, 2>;

inline Mat2 mat_identity() { return {{{AlgScalar(1), AlgScalar(0)}, {AlgScalar(0), AlgScalar(1)}}}; }

inline Mat2 mat_mul(const Mat2& a, const Mat2& b) {
    Mat2 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
    return r;
}

inline AlgScalar mat_det(const Mat2& a) { return a[0][0] * a[1][1] - a[0][1] * a[1][0]; }

inline Mat2 mat_inverse(const Mat2& a) {
    const AlgScalar d = mat_det(a);
    if (d.is_zero()) fail(Errc::InvalidArgument, "singular 2x2 matrix");
    const AlgScalar inv = d.inverse();
    return {{{a[1][1] * inv, -a[0][1] * inv}, {-a[1][0] * inv, a[0][0] * inv}}};
}

inline bool mat_equal(const Mat2& a, const Mat2& b) {
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            if (a[i][j] != b[i][j]) return false;
    return true;
}

/// Element (A, B, swap) of GL2 x GL2 x| Z2. Acting on a form:
/// apply(F, g)(X,Y,Z,W) = F(A(X,Y), B(Z,W)), followed by (X,Y) <-> (Z,W) when swap is set.
/// With this convention apply(apply(F, g), h) = apply(F, compose(g, h)).
struct CoordChange {
    Mat2 A = mat_identity();
    Mat2 B = mat_identity();
    bool swap = false;

    static CoordChange identity() { return {}; }
    static CoordChange swap_factors() { return {mat_identity(), mat_identity(), true}; }

    Field field() const {
        Field f;
        for (const auto* m : {&A, &B})
            for (const auto& row : *m)
                for (const auto& v : row) f = Field::common(f, v.field());
        return f;
    }

    bool is_valid() const { return !mat_det(A).is_zero() && !mat_det(B).is_zero(); }

    friend bool operator==(const CoordChange& g, const CoordChange& h) {
        return g.swap == h.swap && mat_equal(g.A, h.A) && mat_equal(g.B, h.B);
    }
};

inline CoordChange compose(const CoordChange& g, const CoordChange& h) {
    return {mat_mul(g.A, g.swap ? h.B : h.A), mat_mul(g.B, g.swap ? h.A : h.B), g.swap != h.swap};
}

inline CoordChange inverse(const CoordChange& g) {
    if (!g.swap) return {mat_inverse(g.A), mat_inverse(g.B), false};
    return {mat_inverse(g.B), mat_inverse(g.A), true};
}

namespace detail {

// Coefficients (in U^k V^(d-k)) of (m00 U + m01 V)^i (m10 U + m11 V)^(d-i), for each i.
inline std::vector<std::vector<AlgScalar>> power_table(const Mat2& m, int d, const Field& f) {
    const UniPoly l1(f, {m[0][1], m[0][0]}, "u");
    const UniPoly l2(f, {m[1][1], m[1][0]}, "u");
    std::vector<std::vector<AlgScalar>> out;
    for (int i = 0; i <= d; ++i) {
        const UniPoly p = l1.pow(static_cast<unsigned>(i)) * l2.pow(static_cast<unsigned>(d - i));
        std::vector<AlgScalar> c;
        for (int k = 0; k <= d; ++k) c.push_back(p.coeff(k).lift(f));
        out.push_back(std::move(c));
    }
    return out;
}

} // namespace detail

/// Point transport: if q lies on F, then inverse-transported q lies on apply(F, g).
/// Returns the point p with apply(F, g)(p) = F(q).
inline SurfacePoint pull_point(const SurfacePoint& q, const CoordChange& g) {
    // F'(v1, v2) = F(A v1, B v2) (then swap): solve A v1 = q1, B v2 = q2.
    const Mat2 ai = mat_inverse(g.A), bi = mat_inverse(g.B);
    const AlgScalar s = ai[0][0] * q.s + ai[0][1] * q.t, t = ai[1][0] * q.s + ai[1][1] * q.t;
    const AlgScalar u = bi[0][0] * q.u + bi[0][1] * q.v, v = bi[1][0] * q.u + bi[1][1] * q.v;
    if (g.swap) return {u, v, s, t};
    return {s, t, u, v};
}

/// Image of a point of apply(F, g) back on F.
inline SurfacePoint push_point(const SurfacePoint& p, const CoordChange& g) {
    const AlgScalar s = g.swap ? p.u : p.s, t = g.swap ? p.v : p.t;
    const AlgScalar u = g.swap ? p.s : p.u, v = g.swap ? p.t : p.v;
    return {g.A[0][0] * s + g.A[0][1] * t, g.A[1][0] * s + g.A[1][1] * t, g.B[0][0] * u + g.B[0][1] * v,
            g.B[1][0] * u + g.B[1][1] * v};
}

inline BiForm apply_coord_change(const BiForm& F, const CoordChange& g) {
    if (g.swap && F.a() != F.b())
        fail(Errc::SwapOnAsymmetricBidegree, "swap on bidegree (" + std::to_string(F.a()) + "," + std::to_string(F.b()) + ")");
    if (!g.is_valid()) fail(Errc::InvalidArgument, "coordinate change with zero determinant");
    const Field f = Field::common(F.field(), g.field());
    const auto px = detail::power_table(g.A, F.a(), f);
    const auto pz = detail::power_table(g.B, F.b(), f);
    BiForm r(F.a(), F.b(), f);
    std::vector<std::vector<AlgScalar>> acc(static_cast<size_t>(F.a()) + 1,
                                            std::vector<AlgScalar>(static_cast<size_t>(F.b()) + 1, AlgScalar::zero(f)));
    for (int i = 0; i <= F.a(); ++i)
        for (int j = 0; j <= F.b(); ++j) {
            const auto& c = F.coeff(i, j);
            if (c.is_zero()) continue;
            for (int k = 0; k <= F.a(); ++k) {
                if (px[static_cast<size_t>(i)][static_cast<size_t>(k)].is_zero()) continue;
                const AlgScalar ck = c * px[static_cast<size_t>(i)][static_cast<size_t>(k)];
                for (int l = 0; l <= F.b(); ++l)
                    acc[static_cast<size_t>(k)][static_cast<size_t>(l)] += ck * pz[static_cast<size_t>(j)][static_cast<size_t>(l)];
            }
        }
    for (int k = 0; k <= F.a(); ++k)
        for (int l = 0; l <= F.b(); ++l) {
            if (g.swap) r.set(l, k, acc[static_cast<size_t>(k)][static_cast<size_t>(l)]);
            else r.set(k, l, acc[static_cast<size_t>(k)][static_cast<size_t>(l)]);
        }
    return r;
}

/// SL2 element sending (0:1) to the projective point (s:t): a translation when t != 0,
/// otherwise the swap of the two coordinates.
inline Mat2 sl2_to_origin(const AlgScalar& s, const AlgScalar& t) {
    if (!t.is_zero()) return {{{AlgScalar(1), s / t}, {AlgScalar(0), AlgScalar(1)}}};
    if (s.is_zero()) fail(Errc::InvalidArgument, "projective pair (0:0)");
    return {{{AlgScalar(0), AlgScalar(1)}, {AlgScalar(-1), AlgScalar(0)}}};
}

/// The change g with apply(F, g) having the point p at the affine origin x = z = 0.
inline CoordChange move_to_origin(const SurfacePoint& p) {
    return {sl2_to_origin(p.s, p.t), sl2_to_origin(p.u, p.v), false};
}

/// Random rational group element with small entries and nonzero determinant.
template <class Rng>
CoordChange random_coord_change(Rng& rng, bool allow_swap = true, long range = 3) {
    std::uniform_int_distribution<long> d(-range, range);
    auto mat = [&] {
        for (;;) {
            Mat2 m{{{AlgScalar(d(rng)), AlgScalar(d(rng))}, {AlgScalar(d(rng)), AlgScalar(d(rng))}}};
            if (!mat_det(m).is_zero()) return m;
        }
    };
    CoordChange g{mat(), mat(), false};
    if (allow_swap) g.swap = (rng() & 1u) != 0;
    return g;
}

} // namespace git33

#endif
