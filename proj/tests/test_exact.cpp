#include <gtest/gtest.h>

#include <random>

#include "git33/exact/factor.hpp"

using namespace git33;

namespace {

UniPoly P(std::initializer_list<long> c) { return UniPoly::from_ints(c); }

Field sqrt2() { return make_field(P({-2, 0, 1}), "t"); }

UniPoly random_poly(std::mt19937_64& rng, int deg, long range) {
    std::uniform_int_distribution<long> d(-range, range);
    std::vector<AlgScalar> c;
    for (int i = 0; i <= deg; ++i) c.emplace_back(d(rng));
    if (c.back().is_zero()) c.back() = AlgScalar(1);
    return UniPoly(Field(), c);
}

UniPoly expand(const Factorization& f) {
    UniPoly r = UniPoly::constant(f.unit);
    for (const auto& x : f.factors) r = r * x.poly.pow(static_cast<unsigned>(x.mult));
    return r;
}

} // namespace

TEST(Rational, CanonicalForm) {
    Rat r = make_rat(6, -4);
    EXPECT_EQ(r.get_num(), -3);
    EXPECT_EQ(r.get_den(), 2);
    EXPECT_EQ(parse_rat("-10/4"), make_rat(-5, 2));
    EXPECT_THROW(make_rat(1, 0), Error);
    EXPECT_THROW(parse_rat("1/x"), Error);
}

TEST(Field, ArithmeticAxioms) {
    const Field k = make_field(P({-2, 0, 0, 1}), "c");  // cube root of 2
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> d(-9, 9);
    auto rnd = [&] {
        std::vector<Rat> c(3);
        for (auto& x : c) x = make_rat(d(rng), 1 + (d(rng) + 9) % 5);
        return AlgScalar(k, c);
    };
    for (int i = 0; i < 30; ++i) {
        const auto a = rnd(), b = rnd(), c = rnd();
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        if (!a.is_zero()) EXPECT_EQ(a * a.inverse(), AlgScalar::one(k));
    }
    const auto t = AlgScalar::generator(k);
    EXPECT_EQ(t.pow(3), AlgScalar(2));
}

TEST(Field, TowerDepthTwo) {
    const Field k1 = sqrt2();
    const auto t = AlgScalar::generator(k1);
    // u^2 = t over Q(sqrt 2), i.e. u is a fourth root of 2
    const UniPoly m(k1, {-t, AlgScalar(0), AlgScalar(1)}, "u");
    const Field k2 = make_field(m, "u");
    EXPECT_EQ(k2.depth(), 2);
    EXPECT_EQ(k2.total_degree(), 4);
    const auto u = AlgScalar::generator(k2);
    EXPECT_EQ(u.pow(4), AlgScalar(2));
    EXPECT_EQ((u + t) * (u + t).inverse(), AlgScalar(1));
    const UniPoly m3(k2, {-u, AlgScalar(0), AlgScalar(1)}, "w");
    EXPECT_THROW(make_field(m3, "w"), Error);
}

TEST(Gcd, Examples) {
    EXPECT_EQ(gcd_univ(P({-1, 0, 1}), P({-1, 1})), P({-1, 1}));
    EXPECT_EQ(gcd_univ(P({-2, 0, 1}), P({0, -2, 0, 1})), P({-2, 0, 1}));
    const Field k = sqrt2();
    const auto t = AlgScalar::generator(k);
    const UniPoly xt(k, {-t, AlgScalar(1)});
    EXPECT_EQ(gcd_univ(P({-2, 0, 1}).lift(k), xt), xt);
}

TEST(Gcd, FieldMismatch) {
    const Field a = sqrt2();
    const Field b = make_field(P({-3, 0, 1}), "s");
    EXPECT_THROW(gcd_univ(UniPoly::x(a), UniPoly::x(b)), Error);
}

TEST(Squarefree, Examples) {
    const auto d = squarefree_decomposition(P({-1, 1}).pow(2) * P({1, 1}));
    ASSERT_EQ(d.size(), 2u);
    EXPECT_EQ(d[0].poly, P({1, 1}));
    EXPECT_EQ(d[0].mult, 1);
    EXPECT_EQ(d[1].poly, P({-1, 1}));
    EXPECT_EQ(d[1].mult, 2);
    const auto e = squarefree_decomposition(P({0, 0, 0, 0, 0, 0, 1}));
    ASSERT_EQ(e.size(), 1u);
    EXPECT_EQ(e[0].mult, 6);
    EXPECT_EQ(squarefree_decomposition(P({-2, 0, 1})).size(), 1u);
}

TEST(Factor, Examples) {
    const auto f = factor_univ(P({0, -1, 0, 1}));
    ASSERT_EQ(f.factors.size(), 3u);
    EXPECT_EQ(expand(f), P({0, -1, 0, 1}));
    EXPECT_TRUE(is_irreducible(P({-2, 0, 1})));
    const Field k = sqrt2();
    const auto g = factor_univ(P({-2, 0, 1}).lift(k));
    ASSERT_EQ(g.factors.size(), 2u);
    EXPECT_EQ(g.factors[0].poly.degree(), 1);
    EXPECT_EQ(expand(g), P({-2, 0, 1}).lift(k));
}

TEST(Factor, SwinnertonDyerStyle) {
    // (x^2-2)(x^2-3) stays split; x^4-10x^2+1 is irreducible over Q but splits over Q(sqrt2)
    const UniPoly sd = P({1, 0, -10, 0, 1});
    EXPECT_TRUE(is_irreducible(sd));
    const auto over = factor_univ(sd.lift(sqrt2()));
    EXPECT_EQ(over.factors.size(), 2u);
    EXPECT_EQ(expand(over), sd.lift(sqrt2()));
}

TEST(Factor, RandomProductsReconstruct) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 25; ++trial) {
        UniPoly f = P({1});
        int deg = 0;
        while (deg < 10) {
            const int d = 1 + static_cast<int>(rng() % 4);
            f = f * random_poly(rng, d, 6);
            deg += d;
        }
        const auto fac = factor_univ(f);
        EXPECT_EQ(expand(fac), f);
        for (const auto& x : fac.factors) EXPECT_TRUE(factor_univ(x.poly).factors.size() == 1);
    }
}

TEST(Resultant, Examples) {
    EXPECT_EQ(resultant(P({-3, 1}), P({-5, 1})), AlgScalar(-2));  // Res(x-a, x-b) = a-b
    EXPECT_TRUE(resultant(P({-2, 0, 1}), P({-2, 0, 1})).is_zero());
    const auto r = resultant(P({1, 0, 1}), P({-1, 1}));
    EXPECT_EQ(r, AlgScalar(2));
    // oracle: with g = x-1 linear, Res(f, g) = (-1)^deg f * f(1) * lc(g)^deg f... evaluate directly
    EXPECT_EQ(r, P({1, 0, 1}).eval(AlgScalar(1)));
}

TEST(Resultant, ZeroIffCommonFactor) {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 40; ++i) {
        UniPoly f = random_poly(rng, 1 + static_cast<int>(rng() % 4), 5);
        UniPoly g = random_poly(rng, 1 + static_cast<int>(rng() % 4), 5);
        if (i % 2 == 0) {
            const UniPoly c = random_poly(rng, 1, 3);
            f = f * c;
            g = g * c;
        }
        EXPECT_EQ(resultant(f, g).is_zero(), gcd_univ(f, g).degree() > 0);
        // product formula oracle for linear g: Res(f, x - r) = (-1)^n * f(r)
        const UniPoly lin = P({-(static_cast<long>(i % 7) - 3), 1});
        const int n = f.degree();
        AlgScalar expect = f.eval(lin.coeff(0) * AlgScalar(-1));
        if (n % 2) expect = -expect;
        EXPECT_EQ(resultant(f, lin), expect);
    }
}

TEST(AdjoinRoot, Examples) {
    const auto a = adjoin_root(P({-2, 0, 1}));
    EXPECT_EQ(a.field.total_degree(), 2);
    EXPECT_EQ(a.root * a.root, AlgScalar(2));
    const auto b = adjoin_root(P({-5, 1}));
    EXPECT_TRUE(b.field.is_rational());
    EXPECT_EQ(b.root, AlgScalar(5));
    const auto c = adjoin_root(P({-1, 0, 1}));
    EXPECT_TRUE(c.field.is_rational());
    EXPECT_EQ(c.root, AlgScalar(1));
}

TEST(AdjoinRoot, DepthCap) {
    const auto a = adjoin_root(P({-2, 0, 1}));
    const UniPoly m(a.field, {-a.root, AlgScalar(0), AlgScalar(1)});
    const auto b = adjoin_root(m);
    EXPECT_EQ(b.field.depth(), 2);
    const UniPoly m2(b.field, {-b.root, AlgScalar(0), AlgScalar(1)});
    EXPECT_THROW(adjoin_root(m2), Error);
    try {
        adjoin_root(m2);
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::TowerTooDeep);
    }
}
