#ifndef GIT33_BIFORM_IMPLICITIZE_HPP
#define GIT33_BIFORM_IMPLICITIZE_HPP

#include <algorithm>

#include "git33/biform/biform.hpp"

namespace git33 {

/// t -> ((p1(t) : q1(t)), (p2(t) : q2(t))) into P1 x P1.
struct Parametrization {
    UniPoly p1, q1, p2, q2;

    int degree1() const { return std::max(p1.degree(), q1.degree()); }
    int degree2() const { return std::max(p2.degree(), q2.degree()); }
};

namespace detail {

inline bool constant_ratio(const UniPoly& p, const UniPoly& q) {
    return (p * q.derivative() - p.derivative() * q).is_zero();
}

} // namespace detail

/// F(p1, q1, p2, q2) as a polynomial in t.
inline UniPoly substitute_parametrization(const BiForm& F, const Parametrization& phi) {
    UniPoly acc(F.field(), "t");
    for (int i = 0; i <= F.a(); ++i)
        for (int j = 0; j <= F.b(); ++j) {
            if (F.coeff(i, j).is_zero()) continue;
            acc += F.coeff(i, j) * (phi.p1.pow(static_cast<unsigned>(i)) * phi.q1.pow(static_cast<unsigned>(F.a() - i)) *
                                    phi.p2.pow(static_cast<unsigned>(j)) * phi.q2.pow(static_cast<unsigned>(F.b() - j)));
        }
    return acc;
}

/// Res_t(Y p1 - X q1, W p2 - Z q2), scaled to a primitive form; bidegree (deg phi2, deg phi1).
inline BiForm implicitize(const Parametrization& phi) {
    if (phi.p1.is_zero() && phi.q1.is_zero()) fail(Errc::InvalidArgument, "zero parametrization pair");
    if (phi.p2.is_zero() && phi.q2.is_zero()) fail(Errc::InvalidArgument, "zero parametrization pair");
    if (detail::constant_ratio(phi.p1, phi.q1) || detail::constant_ratio(phi.p2, phi.q2))
        fail(Errc::DegenerateImage, "a coordinate of the parametrization is constant");
    if (gcd_univ(phi.p1, phi.q1).degree() > 0 || gcd_univ(phi.p2, phi.q2).degree() > 0)
        fail(Errc::InvalidArgument, "parametrization pairs must be coprime");
    const int n1 = phi.degree1(), n2 = phi.degree2();
    Field k = Field::common(Field::common(phi.p1.field(), phi.q1.field()), Field::common(phi.p2.field(), phi.q2.field()));
    // values on the grid X = xi, Y = 1, Z = zj, W = 1
    std::vector<AlgScalar> xs, zs;
    for (int i = 0; i <= n2; ++i) xs.emplace_back(static_cast<long>(i));
    for (int j = 0; j <= n1; ++j) zs.emplace_back(static_cast<long>(j));
    std::vector<std::vector<AlgScalar>> zcoef;  // zcoef[i][j]: coefficient of z^j at x = xi
    for (int i = 0; i <= n2; ++i) {
        const UniPoly a = phi.p1 - AlgScalar(static_cast<long>(i)) * phi.q1;
        std::vector<AlgScalar> vals;
        for (int j = 0; j <= n1; ++j) {
            const UniPoly b = phi.p2 - AlgScalar(static_cast<long>(j)) * phi.q2;
            vals.push_back(resultant(a, b, n1, n2).lift(k));
        }
        const UniPoly pz = interpolate(zs, vals, k, "z");
        std::vector<AlgScalar> row;
        for (int j = 0; j <= n1; ++j) row.push_back(pz.coeff(j));
        zcoef.push_back(std::move(row));
    }
    BiForm F(n2, n1, k);
    for (int j = 0; j <= n1; ++j) {
        std::vector<AlgScalar> vals;
        for (int i = 0; i <= n2; ++i) vals.push_back(zcoef[static_cast<size_t>(i)][static_cast<size_t>(j)]);
        const UniPoly px = interpolate(xs, vals, k, "x");
        for (int i = 0; i <= n2; ++i) F.set(i, j, px.coeff(i));
    }
    if (F.is_zero()) fail(Errc::DegenerateImage, "vanishing resultant");
    return primitive_form(F);
}

} // namespace git33

#endif
