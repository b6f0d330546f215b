#ifndef GIT33_IO_FIXTURES_HPP
#define GIT33_IO_FIXTURES_HPP

#include <random>
#include <vector>

#include "git33/biform/implicitize.hpp"
#include "git33/io/parse.hpp"

namespace git33::fixtures {

inline UniPoly tpoly(std::initializer_list<long> c) { return UniPoly::from_ints(c, "t"); }

/// x (c z^3 + x z (..) + x^2 (..)) with random nonzero coefficients: unstable for rho (2,1).
template <class Rng>
BiForm cube_contact_instance(Rng& rng) {
    std::uniform_int_distribution<long> d(-9, 9);
    auto nz = [&] {
        long v = 0;
        while (v == 0) v = d(rng);
        return AlgScalar(v);
    };
    BiForm F(3, 3, Field());
    F.set(1, 3, nz());
    for (int j = 1; j <= 3; ++j) F.set(2, j, AlgScalar(d(rng)));
    for (int j = 0; j <= 3; ++j) F.set(3, j, AlgScalar(d(rng)));
    return F;
}

/// x^2 (1 + ..): a double ruling, unstable for rho (4,1).
template <class Rng>
BiForm double_ruling_instance(Rng& rng) {
    std::uniform_int_distribution<long> d(-9, 9);
    BiForm F(3, 3, Field());
    F.set(2, 0, AlgScalar(1));
    for (int j = 1; j <= 3; ++j) F.set(2, j, AlgScalar(d(rng)));
    for (int j = 0; j <= 3; ++j) F.set(3, j, AlgScalar(d(rng)));
    return F;
}

inline BiForm two_a5_curve() { return parse_biform("X*Y*(X*W^3 + Y*Z^3)"); }

/// Smooth, no rulings.
inline BiForm stable_smooth() { return parse_biform("X^3*Z^3 + Y^3*W^3 + X^3*W^3 + Y^3*Z^3 + X*Y*Z*W*(X*Z + Y*W)"); }

/// f(XW, YZ) for a binary cubic f = a x^3 + b x^2 z + c x z^2 + d z^3.
inline BiForm d_curve(const AlgScalar& a, const AlgScalar& b, const AlgScalar& c, const AlgScalar& d) {
    BiForm F(3, 3, Field::common(Field::common(a.field(), b.field()), Field::common(c.field(), d.field())));
    const AlgScalar cs[4] = {d, c, b, a};
    for (int k = 0; k <= 3; ++k) F.set(k, 3 - k, cs[k]);
    return F;
}

inline BiForm d_curve(long b, long c) { return d_curve(AlgScalar(1), AlgScalar(b), AlgScalar(c), AlgScalar(1)); }

inline BiForm degenerate_d_curve() { return d_curve(AlgScalar(0), AlgScalar(1), AlgScalar(1), AlgScalar(0)); }

inline BiForm triple_conic() { return parse_biform("(X*Z - Y*W)^3"); }

inline BiForm double_conic() { return parse_biform("(X*Z - Y*W)^2*(X*W - Y*Z)"); }

/// Residual conic tangent to the doubled one at ((1:1),(1:1)).
inline BiForm tangent_double_conic() { return parse_biform("(X*Z - Y*W)^2*(X*W + Y*Z - 2*Y*W)"); }

/// Three conics through the origin with the common tangent x + z = 0.
inline BiForm j10_member(long c0, long c1, long c2) {
    auto conic = [](long c) { return parse_biform("X*W + Y*Z + " + std::to_string(c) + "*X*Z", Field(), 1, 1); };
    return conic(c0) * conic(c1) * conic(c2);
}

/// Nodal (2,2) curve z^2 - x^2 + 2x^2 z plus the (1,1) curve z - x + xz, which has contact 3 with the
/// branch z = x + x^2 + ... at the origin.
inline BiForm d8_fixture() {
    return parse_biform("(Y*Z - X*W + X*Z)*(Y^2*Z^2 - X^2*W^2 + 2*X^2*Z*W)");
}

/// Rational (3,3) curve whose only singularity is an A8 at ((1:0),(1:0)).
inline Parametrization a8_parametrization() {
    return {tpoly({1, -3, 0, 3}), tpoly({0, 0, 1, -2}), tpoly({1}), tpoly({0, 0, 1, 1})};
}

inline BiForm a8_curve() { return implicitize(a8_parametrization()); }

/// Two rational components, x = z^2 and a (2,1) curve, meeting in a single point with contact 5.
inline std::vector<Parametrization> a9_parametrizations() {
    return {{tpoly({0, 0, 1}), tpoly({1}), tpoly({0, 1}), tpoly({1})},
            {tpoly({0, 1}), tpoly({1}), tpoly({1, 10, 5}), tpoly({5, 10, 1})}};
}

inline BiForm a9_curve() {
    const auto ps = a9_parametrizations();
    const BiForm C1 = implicitize(ps[0]), C2 = implicitize(ps[1]);
    return C1 * C2;
}

/// Random product of small rational factors adding up to bidegree (3,3).
template <class Rng>
BiForm random_split_curve(Rng& rng) {
    std::uniform_int_distribution<long> d(-3, 3);
    static const std::vector<std::vector<std::pair<int, int>>> shapes = {
        {{1, 0}, {2, 3}}, {{0, 1}, {3, 2}}, {{1, 1}, {2, 2}}, {{1, 2}, {2, 1}}, {{1, 0}, {0, 1}, {2, 2}},
        {{1, 1}, {1, 1}, {1, 1}}, {{1, 0}, {1, 0}, {1, 3}}, {{1, 0}, {1, 1}, {1, 2}}, {{3, 3}}};
    const auto& sh = shapes[rng() % shapes.size()];
    BiForm F(0, 0, Field());
    F.set(0, 0, AlgScalar(1));
    for (auto [a, b] : sh) {
        BiForm G(a, b, Field());
        while (G.is_zero())
            for (int i = 0; i <= a; ++i)
                for (int j = 0; j <= b; ++j)
                    if (rng() % 3 != 0) G.set(i, j, AlgScalar(d(rng)));
        F = F * G;
    }
    return F;
}

} // namespace git33::fixtures

#endif
