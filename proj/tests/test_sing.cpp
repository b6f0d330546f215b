#include <gtest/gtest.h>

#include <random>

#include "git33/biform/implicitize.hpp"
#include "git33/io/parse.hpp"
#include "git33/sing/locus.hpp"

using namespace git33;

namespace {

BiPoly L(const std::string& s) { return parse_local(s); }

// Random invertible change x -> ax + bz + q1, z -> cx + dz + q2 and a random unit factor.
BiPoly random_local_change(const BiPoly& f, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> d(-3, 3);
    const Field k = f.field();
    for (;;) {
        const long a = d(rng), b = d(rng), c = d(rng), e = d(rng);
        if (a * e - b * c == 0) continue;
        BiPoly xs = AlgScalar(a) * BiPoly::x(k) + AlgScalar(b) * BiPoly::z(k) + BiPoly::monomial(AlgScalar(d(rng)), 2, 0) +
                    BiPoly::monomial(AlgScalar(d(rng)), 1, 1);
        BiPoly zs = AlgScalar(c) * BiPoly::x(k) + AlgScalar(e) * BiPoly::z(k) + BiPoly::monomial(AlgScalar(d(rng)), 0, 2);
        BiPoly unit = BiPoly::constant(AlgScalar(1 + (rng() % 3))) + BiPoly::monomial(AlgScalar(d(rng)), 1, 0) +
                      BiPoly::monomial(AlgScalar(d(rng)), 0, 1);
        return unit * f.substitute(xs, zs);
    }
}

// Kouchnirenko count 2V - a - b + 1 for a convenient Newton-nondegenerate germ.
int newton_milnor(const BiPoly& f) {
    std::vector<std::pair<long, long>> pts;
    long a = 1 << 20, b = 1 << 20;
    for (const auto& [k, c] : f.terms()) {
        pts.emplace_back(k.first, k.second);
        if (k.second == 0) a = std::min<long>(a, k.first);
        if (k.first == 0) b = std::min<long>(b, k.second);
    }
    // walk the lower hull from (0, b) to (a, 0), summing twice the area under it
    long ci = 0, cj = b, twice_area = 0;
    while (cj > 0) {
        long bi = -1, bj = -1;
        for (auto [i, j] : pts) {
            if (i <= ci || j >= cj) continue;
            if (bi < 0 || (j - cj) * (bi - ci) < (bj - cj) * (i - ci) ||
                ((j - cj) * (bi - ci) == (bj - cj) * (i - ci) && i > bi)) {
                bi = i;
                bj = j;
            }
        }
        twice_area += (bi - ci) * (cj + bj);
        ci = bi;
        cj = bj;
    }
    return static_cast<int>(twice_area - a - b + 1);
}

} // namespace

TEST(Multiplicity, Examples) {
    EXPECT_EQ(multiplicity(L("z^2 - x^3")), 2);
    EXPECT_EQ(multiplicity(L("x*(z^2 - x^6)")), 3);
    EXPECT_EQ(multiplicity(L("1 + x")), 0);
}

TEST(TangentCone, Shapes) {
    EXPECT_EQ(tangent_cone_shape(L("x^3 + z^3")).shape, ConeShape::Distinct);
    EXPECT_EQ(tangent_cone_shape(L("x^2*(x + z)")).shape, ConeShape::DoublePlusSimple);
    EXPECT_EQ(tangent_cone_shape(L("(x + z)^3")).shape, ConeShape::TripleLine);
    EXPECT_EQ(tangent_cone_shape(L("z^2 - x^3")).shape, ConeShape::DoubleLine);
    EXPECT_EQ(tangent_cone_shape(L("x^3 - 2*x*z^2")).shape, ConeShape::Distinct);
}

TEST(Milnor, Examples) {
    for (int k = 1; k <= 9; ++k) EXPECT_EQ(milnor_number(L("z^2 - x^" + std::to_string(k + 1))), k);
    EXPECT_EQ(milnor_number(L("x*(z^2 - x^6)")), 8);
    EXPECT_EQ(milnor_number(L("z^3 - x^6")), 10);
    EXPECT_EQ(milnor_number(L("x^3 + z^4")), 6);
    EXPECT_EQ(milnor_number(L("x")), 0);
}

TEST(Milnor, NonIsolated) {
    try {
        milnor_number(L("(z^2 - x^3)^2"), 24);
        FAIL() << "expected NON_ISOLATED";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::NonIsolated);
    }
}

TEST(Milnor, MatchesNewtonPolygonCount) {
    for (const char* s : {"z^2 - x^5", "z^3 + x^4", "z^3 + x^5", "z^3 + x^3*z + x^7", "x^4 + z^5", "z^3 + x^7 + x^2*z^2",
                          "x^3 + x*z^4 + z^7", "z^4 + x^6", "x*z*(x + z) + x^5 + z^6"})
        EXPECT_EQ(milnor_number(L(s)), newton_milnor(L(s))) << s;
}

TEST(Branches, Examples) {
    EXPECT_EQ(branches(L("z^2 - x^2")), 2);
    EXPECT_EQ(branches(L("z^2 - x^3")), 1);
    EXPECT_EQ(branches(L("z^2 - x^6")), 2);
    EXPECT_EQ(branches(L("x*(z^2 - x^6)")), 3);
    EXPECT_EQ(branches(L("z^3 - x^6")), 3);
    EXPECT_EQ(branches(L("x^3 + z^4")), 1);
    EXPECT_EQ(branches(L("z^2 + x^2")), 2);
    EXPECT_EQ(branches(L("(z - x^2)^2 - x^5")), 1);
    EXPECT_EQ(branches(L("(z - x^2)^2 - x^6")), 2);
    EXPECT_EQ(branches(L("(z^2 - x^3)*(z^2 - 2*x^3)")), 2);
    EXPECT_EQ(branches(L("1 + x")), 0);
}

TEST(Classify, NormalForms) {
    for (int k = 1; k <= 9; ++k)
        EXPECT_EQ(classify_singularity(L("z^2 - x^" + std::to_string(k + 1))), SingularityType::A(k));
    EXPECT_EQ(classify_singularity(L("z^2 - x^9")).str(), "A8");
    EXPECT_EQ(classify_singularity(L("x*(z^2 - x^6)")).str(), "D8");
    EXPECT_EQ(classify_singularity(L("x*(z^2 - x^2)")).str(), "D4");
    EXPECT_EQ(classify_singularity(L("x*(z^2 - x^3)")).str(), "D5");
    EXPECT_EQ(classify_singularity(L("x^3 + z^4")).str(), "E6");
    EXPECT_EQ(classify_singularity(L("x^3 + x*z^3")).str(), "E7");
    EXPECT_EQ(classify_singularity(L("x^3 + z^5")).str(), "E8");
    EXPECT_EQ(classify_singularity(L("z^3 - x^6")).str(), "J10");
    EXPECT_EQ(classify_singularity(L("z^3 + x^2*z^2 + x^6")).str(), "J10");
    EXPECT_EQ(classify_singularity(L("x + z^2")).str(), "Smooth");
    EXPECT_EQ(classify_singularity(L("z^4 - x^4")).str(), "Unclassified");
    EXPECT_EQ(classify_singularity(L("z^3 + x^9")).str(), "Unclassified");  // mu = 16
}

TEST(Classify, InvariantUnderLocalChanges) {
    std::mt19937_64 rng(17);
    for (const char* s : {"z^2 - x^2", "z^2 - x^5", "z^2 - x^8", "x*(z^2 - x^4)", "x*(z^2 - x^5)", "x^3 + z^4",
                          "x^3 + x*z^3", "x^3 + z^5", "z^3 - x^6"}) {
        const BiPoly f = L(s);
        const SingularityType t = classify_singularity(f);
        const int r = branches(f);
        for (int k = 0; k < 3; ++k) {
            const BiPoly g = random_local_change(f, rng);
            EXPECT_EQ(classify_singularity(g), t) << s << " -> " << g.str();
            EXPECT_EQ(branches(g), r) << s;
        }
    }
}

TEST(SingLocus, TwoA5Curve) {
    const BiForm F = parse_biform("X*Y*(X*W^3 + Y*Z^3)");
    const auto reps = sing_locus(F);
    ASSERT_EQ(reps.size(), 2u);
    int total_delta = 0;
    for (const auto& r : reps) {
        EXPECT_EQ(r.type.str(), "A5");
        EXPECT_EQ(r.milnor, 5);
        EXPECT_EQ(r.branches, 2);
        EXPECT_TRUE(r.separating);
        total_delta += r.delta * r.orbit;
    }
    // three rational components: 4 - 0 + (3 - 1)
    EXPECT_EQ(total_delta, 6);
}

TEST(SingLocus, SmoothAndNodal) {
    // irreducible curves of bidegree (a, 1) are graphs, hence smooth
    EXPECT_TRUE(sing_locus(parse_biform("X^3*W - Y^3*Z + X*Y^2*W", Field(), 3, 1)).empty());
    EXPECT_TRUE(sing_locus(parse_biform("X*Z - Y*W", Field(), 1, 1)).empty());
    // two conics meeting in two points: nodes, not separating
    const BiForm C = parse_biform("(X*Z - Y*W)*(X*W - 4*Y*Z)", Field(), 2, 2);
    const auto reps = sing_locus(C);
    ASSERT_EQ(reps.size(), 2u);
    for (const auto& r : reps) {
        EXPECT_EQ(r.type.str(), "A1");
        EXPECT_FALSE(r.separating);
    }
}

TEST(SingLocus, IrrationalPointsAndInfinity) {
    // X^2 - 2Y^2 times a conic: nodes over Q(sqrt 2), a Galois orbit of size 2 per conic crossing
    const BiForm F = parse_biform("(X^2 - 2*Y^2)*(X*Z - Y*W)", Field(), 3, 1);
    const auto reps = sing_locus(F);
    int total = 0;
    for (const auto& r : reps) {
        EXPECT_EQ(r.type.str(), "A1");
        total += r.orbit;
    }
    EXPECT_EQ(total, 2);
    // node at ((1:0),(1:0))
    const BiForm G = parse_biform("Y*W*(X + Y)*(Z + W)", Field(), 2, 2);
    bool corner = false;
    for (const auto& r : sing_locus(G)) corner = corner || r.point.same_as({AlgScalar(1), AlgScalar(0), AlgScalar(1), AlgScalar(0)});
    EXPECT_TRUE(corner);
    EXPECT_EQ(sing_locus(G).size(), 4u);
}

TEST(SingLocus, NonReducedRejected) {
    try {
        sing_locus(parse_biform("(X*Z - Y*W)^3"));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::NonReduced);
    }
}

TEST(SingLocus, A8Parametrization) {
    auto P = [](std::initializer_list<long> c) { return UniPoly::from_ints(c, "t"); };
    const BiForm F = implicitize({P({1, -3, 0, 3}), P({0, 0, 1, -2}), P({1}), P({0, 0, 1, 1})});
    const auto reps = sing_locus(F);
    ASSERT_EQ(reps.size(), 1u);
    EXPECT_EQ(reps[0].type.str(), "A8");
    EXPECT_EQ(reps[0].milnor, 8);
    EXPECT_EQ(reps[0].branches, 1);
    EXPECT_EQ(reps[0].delta, 4);
    EXPECT_TRUE(reps[0].point.same_as({AlgScalar(1), AlgScalar(0), AlgScalar(1), AlgScalar(0)}));
}

TEST(SingLocus, RationalCurvesHaveDeltaFour) {
    // genus 0 image of a generic degree-3 parametrization: total delta equals 4
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<long> d(-3, 3);
    int done = 0;
    while (done < 3) {
        auto rp = [&] { return UniPoly::from_ints({d(rng), d(rng), d(rng), 1 + std::abs(d(rng))}, "t"); };
        const Parametrization par{rp(), rp(), rp(), rp()};
        BiForm F;
        try {
            F = implicitize(par);
        } catch (const Error&) {
            continue;
        }
        if (F.a() != 3 || F.b() != 3) continue;
        int total = 0;
        for (const auto& r : sing_locus(F, {kDefaultTruncation, false})) {
            const BiForm G = F.lift(r.point.field());
            EXPECT_TRUE(G.dX().eval(r.point.s, r.point.t, r.point.u, r.point.v).is_zero());
            EXPECT_TRUE(G.dW().eval(r.point.s, r.point.t, r.point.u, r.point.v).is_zero());
            total += r.delta * r.orbit;
        }
        EXPECT_EQ(total, 4) << F.str();
        ++done;
    }
}

TEST(Separating, IrreducibleNode) {
    // rational (2,2) curve with one node
    const BiForm F = parse_biform("X^2*Z^2 - Y^2*W^2 + X*Y*Z*W - X^2*W^2", Field(), 2, 2);
    if (irreducible_components(F).size() == 1)
        for (const auto& r : sing_locus(F)) EXPECT_FALSE(r.separating);
}

TEST(Parse, Examples) {
    const BiForm F = parse_biform("X*Y*(X*W^3 + Y*Z^3)");
    EXPECT_EQ(F.support(), (std::vector<std::pair<int, int>>{{1, 3}, {2, 0}}));
    EXPECT_TRUE(parse_biform("(X*Z - Y*W)^3").coeff(3, 3).is_one());
    try {
        parse_biform("X^2");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::WrongBidegree);
    }
    try {
        parse_biform("X*Y*(X*W^3 + Y*Z^3");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::ParseError);
        EXPECT_NE(std::string(e.what()).find("position"), std::string::npos);
    }
    const Field k = parse_field("t^2 - 2");
    const BiForm G = parse_biform("(X - t*Y)*(Z^3 + W^3)*(X^2 + Y^2)", k);
    EXPECT_EQ(parse_biform(G.str(), k), G);
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> d(-9, 9);
    for (int n = 0; n < 20; ++n) {
        BiForm H(3, 3, Field());
        for (int i = 0; i <= 3; ++i)
            for (int j = 0; j <= 3; ++j) H.set(i, j, AlgScalar(make_rat(d(rng), static_cast<long>(1 + rng() % 4))));
        if (H.is_zero()) continue;
        EXPECT_EQ(parse_biform(H.str()), H);
    }
}
