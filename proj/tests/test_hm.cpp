#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "git33/hm/numerical.hpp"
#include "git33/io/parse.hpp"

using namespace git33;

namespace {

using Mono = std::pair<int, int>;

// The six-item positive-weight list for rho_{u,v} with u >= v > 0, bidegree (3,3).
std::set<Mono> listed_positive(long u, long v) {
    std::set<Mono> s;
    for (int j = 1; j <= 3; ++j) s.insert({3, j});
    if (u > v) s.insert({3, 0});
    for (int j = 2; j <= 3; ++j) s.insert({2, j});
    if (u > v) s.insert({2, 1});
    if (u > 3 * v) s.insert({2, 0});
    if (u < 3 * v) s.insert({1, 3});
    return s;
}

std::set<Mono> as_set(const std::vector<Mono>& v) { return {v.begin(), v.end()}; }

BiForm random_form(std::mt19937_64& rng, double density) {
    std::uniform_int_distribution<long> d(-5, 5);
    std::uniform_real_distribution<double> coin(0, 1);
    BiForm F(3, 3, Field());
    while (F.is_zero())
        for (int i = 0; i <= 3; ++i)
            for (int j = 0; j <= 3; ++j)
                if (coin(rng) < density) F.set(i, j, AlgScalar(d(rng)));
    return F;
}

// cube contact shape: x(c z^3 + a0 xz + a1 xz^2 + a2 xz^3 + b1 x^2 + ... + b4 x^2 z^3)
BiForm cube_contact(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> d(1, 9);
    BiForm F(3, 3, Field());
    F.set(1, 3, AlgScalar(d(rng)));
    for (int j = 1; j <= 3; ++j) F.set(2, j, AlgScalar(d(rng)));
    for (int j = 0; j <= 3; ++j) F.set(3, j, AlgScalar(d(rng)));
    return F;
}

// double ruling shape: x^2(1 + a0 z + a1 z^2 + a2 z^3 + b1 x + ... + b4 x z^3)
BiForm double_ruling(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> d(1, 9);
    BiForm F(3, 3, Field());
    F.set(2, 0, AlgScalar(1));
    for (int j = 1; j <= 3; ++j) F.set(2, j, AlgScalar(d(rng)));
    for (int j = 0; j <= 3; ++j) F.set(3, j, AlgScalar(d(rng)));
    return F;
}

} // namespace

TEST(Weights, Examples) {
    EXPECT_EQ(monomial_weight(3, 3, 3, 3, {1, 1}), 6);
    EXPECT_EQ(monomial_weight(1, 3, 3, 3, {2, 1}), 1);
    EXPECT_EQ(monomial_weight(2, 0, 3, 3, {4, 1}), 1);
}

TEST(Weights, PositiveListAt21And41) {
    for (OneParamSubgroup rho : {OneParamSubgroup{2, 1}, OneParamSubgroup{4, 1}}) {
        const WeightTable t = weight_table(3, 3, rho);
        EXPECT_EQ(as_set(t.positive), listed_positive(rho.u, rho.v)) << rho.str();
    }
}

TEST(Weights, ZeroSets) {
    EXPECT_EQ(as_set(weight_table(3, 3, {3, 1}).zero), (std::set<Mono>{{2, 0}, {1, 3}}));
    EXPECT_EQ(as_set(weight_table(3, 3, {1, 1}).zero), (std::set<Mono>{{3, 0}, {2, 1}, {1, 2}, {0, 3}}));
    EXPECT_TRUE(weight_table(3, 3, {1, 0}).zero.empty());
}

TEST(Weights, CentralSymmetryAndScaling) {
    for (const auto& rho : primitive_rays(4)) {
        const WeightTable t = weight_table(3, 3, rho);
        for (int i = 0; i <= 3; ++i)
            for (int j = 0; j <= 3; ++j)
                EXPECT_EQ(t.weight[static_cast<size_t>(i)][static_cast<size_t>(j)] +
                              t.weight[static_cast<size_t>(3 - i)][static_cast<size_t>(3 - j)],
                          0);
    }
    std::mt19937_64 rng(1);
    for (int n = 0; n < 30; ++n) {
        const BiForm F = random_form(rng, 0.4);
        for (const auto& rho : primitive_rays(2))
            EXPECT_EQ(mu_min(F, {3 * rho.u, 3 * rho.v}), 3 * mu_min(F, rho));
    }
}

TEST(MuMin, Examples) {
    const BiForm two_a5_curve = parse_biform("X*Y*(X*W^3 + Y*Z^3)");
    EXPECT_EQ(mu_min(two_a5_curve, {3, 1}), 0);
    std::mt19937_64 rng(2);
    EXPECT_GE(mu_min(double_ruling(rng), {4, 1}), 1);
    BiForm full(3, 3, Field());
    for (int i = 0; i <= 3; ++i)
        for (int j = 0; j <= 3; ++j) full.set(i, j, AlgScalar(1));
    for (const auto& rho : primitive_rays(4)) EXPECT_LT(mu_min(full, rho), 0);
}

TEST(StatePolytope, Examples) {
    BiForm full(3, 3, Field());
    for (int i = 0; i <= 3; ++i)
        for (int j = 0; j <= 3; ++j) full.set(i, j, AlgScalar(1));
    const auto sp = state_polytope(full);
    EXPECT_EQ(sp.origin, OriginPosition::Interior);
    EXPECT_EQ(sp.vertices.size(), 4u);
    EXPECT_EQ(state_polytope(parse_biform("X^3*Z^3")).origin, OriginPosition::Outside);
    EXPECT_EQ(state_polytope(parse_biform("X*Y*(X*W^3 + Y*Z^3)")).origin, OriginPosition::Boundary);
}

TEST(StatePolytope, MatchesRaySearch) {
    std::mt19937_64 rng(3);
    const auto rays = primitive_rays(6);
    for (int n = 0; n < 200; ++n) {
        const BiForm F = random_form(rng, n % 2 ? 0.2 : 0.35);
        bool pos = false, zero = false;
        for (const auto& rho : rays) {
            const long m = mu_min(F, rho);
            pos = pos || m > 0;
            zero = zero || m == 0;
        }
        const OriginPosition expect = pos ? OriginPosition::Outside : zero ? OriginPosition::Boundary : OriginPosition::Interior;
        const StatePolytope sp = state_polytope(F);
        EXPECT_EQ(sp.origin, expect) << F.str();
        // every support point lies in the hull
        for (auto [i, j] : F.support()) {
            const std::pair<long, long> q{2 * i - 3, 2 * j - 3};
            const auto& v = sp.vertices;
            if (v.size() < 3) continue;
            for (size_t k = 0; k < v.size(); ++k) EXPECT_GE(detail::cross(v[k], v[(k + 1) % v.size()], q), 0);
        }
        // central symmetry composed with rho -> -rho
        BiForm G(3, 3, Field());
        for (auto [i, j] : F.support()) G.set(3 - i, 3 - j, F.coeff(i, j));
        EXPECT_EQ(state_polytope(G).origin, sp.origin);
    }
}

TEST(Limit, IdempotentAndHomogeneous) {
    std::mt19937_64 rng(4);
    for (int n = 0; n < 40; ++n) {
        const BiForm F = random_form(rng, 0.5);
        for (const auto& rho : primitive_rays(3)) {
            const BiForm L = limit_under_1ps(F, rho);
            EXPECT_EQ(limit_under_1ps(L, rho), L);
            std::set<long> ws;
            for (auto [i, j] : L.support()) ws.insert(monomial_weight(i, j, 3, 3, rho));
            EXPECT_EQ(ws.size(), 1u);
        }
    }
}

TEST(Limit, TangentConeUnderRho11) {
    // multiplicity-3 point at x = z = 0: the limit keeps the cubic part x^i z^j with i + j = 3
    const BiForm F = parse_biform("X^3*W^3 + 2*X^2*Y*Z*W^2 - X*Y^2*Z^2*W + 5*Y^3*Z^3 + X^3*Z*W^2 + X^2*Y*Z^2*W + X^3*Z^3");
    const BiForm L = limit_under_1ps(F, {1, 1});
    EXPECT_EQ(L, parse_biform("X^3*W^3 + 2*X^2*Y*Z*W^2 - X*Y^2*Z^2*W + 5*Y^3*Z^3"));
}

TEST(Certificate, PaperShapes) {
    std::mt19937_64 rng(5);
    for (int n = 0; n < 10; ++n) {
        EXPECT_EQ(check_certificate(cube_contact(rng), {CoordChange::identity(), {2, 1}}), CertificateCheck::ValidUnstable);
        EXPECT_EQ(check_certificate(double_ruling(rng), {CoordChange::identity(), {4, 1}}), CertificateCheck::ValidUnstable);
    }
    const BiForm two_a5_curve = parse_biform("X*Y*(X*W^3 + Y*Z^3)");
    EXPECT_EQ(check_certificate(two_a5_curve, {CoordChange::identity(), {3, 1}}), CertificateCheck::ValidStrictWitness);
    EXPECT_EQ(check_certificate(two_a5_curve, {CoordChange::identity(), {1, 1}}), CertificateCheck::Invalid);
    // a certificate survives moving the form and composing with the inverse move
    const BiForm F = cube_contact(rng);
    const auto g = random_coord_change(rng, true);
    EXPECT_EQ(check_certificate(apply_coord_change(F, g), {inverse(g), {2, 1}}), CertificateCheck::ValidUnstable);
}
