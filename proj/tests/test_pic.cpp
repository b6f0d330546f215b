#include <gtest/gtest.h>

#include "git33/pic/divisor.hpp"

using namespace git33;

TEST(Chow, Pushforward) {
    const ChowElt e = ChowElt::linear(3, 3, 1) * ChowElt::linear(1, 1, 1).pow(2);
    EXPECT_EQ(h3_degree(chow_pushforward(e)), 14);
    EXPECT_EQ(kappa_on_V(), 14);
    const ChowElt fund = ChowElt::h(1) * ChowElt::h(2) * ChowElt::h(3);
    EXPECT_EQ(chow_pushforward(fund), (std::vector<Rat>{0, 1}));
    EXPECT_TRUE((ChowElt::h(1).pow(2) * ChowElt::linear(5, 7, 2)).is_zero());
    EXPECT_TRUE(ChowElt::h(3).pow(16).is_zero());
    EXPECT_FALSE(ChowElt::h(3).pow(15).is_zero());
}

TEST(Chow, RingLaws) {
    const ChowElt a = ChowElt::linear(1, 2, 3), b = ChowElt::linear(-1, 4, make_rat(1, 2)), c = ChowElt::linear(0, 1, 1);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    // (xH1 + yH2 + zH3)^3 pushes forward to 6xy z H3
    EXPECT_EQ(h3_degree(chow_pushforward(a.pow(3))), 6 * 1 * 2 * 3);
}

TEST(Chow, LambdaDelta) {
    const auto [l, d] = lambda_delta_on_V();
    EXPECT_EQ(l, 4);
    EXPECT_EQ(d, 34);
    EXPECT_EQ(12 * l - kappa_on_V(), d);
}

TEST(Divisor, PetriAndFamilies) {
    EXPECT_EQ(petri_class().str(), "17λ − 2δ₀ − 7δ₁ − 9δ₂");
    const auto fams = test_families();
    ASSERT_EQ(fams.size(), 3u);
    EXPECT_EQ(fams[2].dot[4], -1);
    // the stored zeros for T1, T2 agree with the Petri class
    EXPECT_EQ(petri_dot(fams[0].dot), 0);
    EXPECT_EQ(petri_dot(fams[1].dot), 0);
    EXPECT_EQ(fams[0].dot, parse_divclass("lambda + 12 delta0 - delta1"));
    EXPECT_EQ(fams[1].dot, parse_divclass("3λ + 30δ₀ - δ₂"));
}

TEST(Divisor, Pullbacks) {
    const auto pb = pullbacks();
    EXPECT_EQ(pb.lambda, parse_divclass("λ + δ₁ + 3δ₂ + 7P"));
    EXPECT_EQ(pb.delta, parse_divclass("δ₀ + 12δ₁ + 30δ₂ + 60P"));
    EXPECT_EQ(pb.delta, parse_divclass("δ + 11δ₁ + 29δ₂ + 60P"));
    for (const auto& t : test_families()) {
        EXPECT_EQ(intersect(pb.lambda, t), 0) << t.name;
        EXPECT_EQ(intersect(pb.delta, t), 0) << t.name;
    }
    // the Petri relation spans the kernel direction
    const DivClass k = pullback(17, 2, pb);
    EXPECT_EQ(k, parse_divclass("17λ - 2δ₀ - 7δ₁ - 9δ₂ - P"));
    EXPECT_TRUE(petri_rewrite(k).is_zero());
    const auto [l, d] = lambda_delta_on_V();
    EXPECT_EQ(2 * (17 * l - 2 * d), 0);
}

TEST(Divisor, SingularSystem) {
    auto fams = test_families();
    fams[2].dot = fams[0].dot;
    EXPECT_THROW(solve_pullback_coeffs(fams), Error);
}

TEST(Divisor, Discrepancy) {
    const DivClass d = discrepancy(make_rat(29, 60));
    EXPECT_EQ(d[4], 0);
    EXPECT_EQ(d[3], make_rat(299, 60));
    EXPECT_EQ(d[2], make_rat(221, 60));
    EXPECT_TRUE(is_effective_exceptional(d));
    EXPECT_EQ(discrepancy(make_rat(1, 2))[4], -1);
    EXPECT_FALSE(is_effective_exceptional(discrepancy(make_rat(1, 2))));
    EXPECT_EQ(discrepancy(0), parse_divclass("29P + 19δ₂ + 9δ₁"));
    // affine in alpha
    for (long n = 0; n <= 10; ++n) {
        const Rat a = make_rat(n, 10);
        EXPECT_EQ(discrepancy(a), discrepancy(0) + a * (discrepancy(1) - discrepancy(0)));
    }
    EXPECT_EQ(affine_root([](const Rat& a) { return discrepancy(a)[4]; }), make_rat(29, 60));
}

TEST(Divisor, Polarization) {
    EXPECT_EQ(model_polarization(make_rat(29, 60)), make_rat(13, 30));
    EXPECT_EQ(model_polarization(make_rat(8, 17)), 0);
    EXPECT_LT(model_polarization(make_rat(2, 5)), 0);
    EXPECT_EQ(affine_root(model_polarization), make_rat(8, 17));
}

TEST(Divisor, MovingSlope) {
    const auto m = moving_slope_certificate();
    EXPECT_EQ(m.divisor, parse_divclass("60λ − 7δ₀ − 24δ₁ − 30δ₂"));
    EXPECT_EQ(m.slope, make_rat(60, 7));
    EXPECT_EQ(m.degree_on_quotient, 2);
    ASSERT_EQ(m.inequalities.size(), 3u);
    EXPECT_EQ(m.inequalities[0], "D.T1 >= 0: a - 12b0 + b1 >= 0");
    EXPECT_EQ(m.inequalities[1], "D.T2 >= 0: 3a - 30b0 + b2 >= 0");
    EXPECT_EQ(m.inequalities[2], "D.T3 >= 0: 7a - 60b0 >= 0");
}

TEST(Divisor, ParseErrors) {
    EXPECT_THROW(parse_divclass("3x"), Error);
    EXPECT_THROW(parse_divclass(""), Error);
    EXPECT_EQ(parse_divclass("60*lambda - 7*delta").str(true), "60*lambda - 7*delta0 - 7*delta1 - 7*delta2");
}

TEST(Divisor, StrRoundTrip) {
    for (long n = 0; n <= 12; ++n) {
        const DivClass d = discrepancy(make_rat(n, 12));
        EXPECT_EQ(parse_divclass(d.str()), d) << d.str();
        EXPECT_EQ(parse_divclass(d.str(true)), d) << d.str(true);
    }
    EXPECT_EQ(discrepancy(make_rat(29, 60)).str(), "(221/60)δ₁ + (299/60)δ₂");
}
