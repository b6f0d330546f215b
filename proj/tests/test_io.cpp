#include <gtest/gtest.h>

#include <random>
#include <set>

#include "git33/io/corpus.hpp"

using namespace git33;
namespace fx = git33::fixtures;

namespace {

BiForm random_form(std::mt19937_64& rng, const Field& k) {
    std::uniform_int_distribution<long> d(-5, 5);
    BiForm F(3, 3, k);
    for (int i = 0; i <= 3; ++i)
        for (int j = 0; j <= 3; ++j) {
            AlgScalar c(d(rng));
            if (!k.is_rational() && rng() % 2) c = c + AlgScalar(d(rng)) * AlgScalar::generator(k);
            F.set(i, j, c.lift(k));
        }
    return F;
}

Errc code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    return Errc::Paradox;
}

} // namespace

TEST(Parse, CurveInputs) {
    const BiForm F = parse_biform("X*Y*(X*W^3 + Y*Z^3)");
    for (int i = 0; i <= 3; ++i)
        for (int j = 0; j <= 3; ++j) {
            const bool one = (i == 2 && j == 0) || (i == 1 && j == 3);
            EXPECT_EQ(F.coeff(i, j), AlgScalar(one ? 1 : 0)) << i << "," << j;
        }
    EXPECT_EQ(parse_biform("(X*Z - Y*W)^3"), fx::triple_conic());
    EXPECT_EQ(code_of([] { parse_biform("X^2"); }), Errc::WrongBidegree);
    EXPECT_EQ(code_of([] { parse_biform("X^3*Z^3 + X^2"); }), Errc::WrongBidegree);
    EXPECT_EQ(code_of([] { parse_biform("X^3*Z^3 +* Y"); }), Errc::ParseError);
    try {
        parse_biform("X^3*Z^3 + Q");
        FAIL();
    } catch (const Error& e) {
        EXPECT_NE(std::string(e.what()).find("position"), std::string::npos);
    }
    EXPECT_EQ(parse_biform("1/2*X^3*Z^3 - 3/4*Y^3*W^3").coeff(3, 3), make_rat(1, 2));
}

TEST(Parse, MatrixRoundTrip) {
    std::mt19937_64 rng(5);
    const Field k = parse_field("t^2 - 2");
    for (int n = 0; n < 20; ++n) {
        const Field f = n % 2 ? k : Field();
        const BiForm F = random_form(rng, f);
        const auto m = json_io::matrix(F);
        EXPECT_EQ(biform_from_json_matrix(nlohmann::json::parse(m.dump()), f), F);
        EXPECT_EQ(parse_biform(F.str(), f), F);
    }
}

TEST(Report, Examples) {
    const Report a = run_report(fx::two_a5_curve());
    ASSERT_TRUE(a.complete());
    EXPECT_EQ(a.verdict->status, Stability::StrictlySemistable);
    EXPECT_EQ(a.orbit->kind, OrbitKind::MaxDegenerateA5);
    EXPECT_EQ(a.labels->front(), "Δ₂");

    const Report b = run_report(fx::triple_conic());
    EXPECT_EQ(b.verdict->status, Stability::StrictlySemistable);
    EXPECT_EQ(b.orbit->kind, OrbitKind::TripleConic);
    EXPECT_EQ(b.labels->front(), "the Petri divisor P");
    EXPECT_FALSE(b.sing);

    std::mt19937_64 rng(2);
    const BiForm D = fx::double_ruling_instance(rng);
    const Report c = run_report(D);
    ASSERT_TRUE(c.complete()) << c.errors.front();
    EXPECT_EQ(c.verdict->status, Stability::Unstable);
    const auto j = report_json(c);
    EXPECT_EQ(j["verdict"]["certificate"]["rho"]["u"], 4);
    EXPECT_EQ(j["verdict"]["certificate"]["rho"]["v"], 1);
    EXPECT_EQ(j["closed_orbit"], nullptr);
    EXPECT_EQ(j["schema_version"], kSchemaVersion);
}

TEST(Report, CertificateReplaysFromJson) {
    // a third party needs only the matrices, the swap flag and (u,v)
    std::mt19937_64 rng(8);
    for (int n = 0; n < 5; ++n) {
        const BiForm F = apply_coord_change(fx::cube_contact_instance(rng), random_coord_change(rng, true));
        const auto j = report_json(run_report(F, {false, true}));
        const auto& c = j["verdict"]["certificate"];
        auto m = [](const nlohmann::ordered_json& x) {
            Mat2 r;
            for (size_t a = 0; a < 2; ++a)
                for (size_t b = 0; b < 2; ++b) r[a][b] = AlgScalar(parse_rat(x[a][b].get<std::string>()));
            return r;
        };
        InstabilityCertificate cert{{m(c["A"]), m(c["B"]), c["swap"].get<bool>()}, {c["rho"]["u"].get<long>(), c["rho"]["v"].get<long>()}};
        EXPECT_EQ(check_certificate(F, cert), CertificateCheck::ValidUnstable);
        const BiForm G = apply_coord_change(F, cert.g);
        for (auto [i, k] : G.support()) EXPECT_GT(monomial_weight(i, k, 3, 3, cert.rho), 0);
    }
}

TEST(Report, Flags) {
    ReportOptions skip;
    skip.skip_sing = true;
    const Report a = run_report(fx::two_a5_curve(), skip);
    EXPECT_FALSE(a.sing);
    EXPECT_TRUE(a.orbit);
    EXPECT_FALSE(a.labels);
    EXPECT_EQ(report_json(a)["stratum"], nullptr);

    ReportOptions cert;
    cert.certify_only = true;
    const Report b = run_report(fx::two_a5_curve(), cert);
    EXPECT_TRUE(b.verdict);
    EXPECT_FALSE(b.sing);
    EXPECT_FALSE(b.orbit);

    ReportOptions timed;
    timed.timing = true;
    EXPECT_TRUE(run_report(fx::two_a5_curve(), timed).elapsed_ms);
    EXPECT_FALSE(run_report(fx::two_a5_curve()).elapsed_ms);
}

TEST(Report, Deterministic) {
    for (const BiForm& F : {fx::two_a5_curve(), fx::double_conic(), fx::a8_curve(), fx::d8_fixture()}) {
        const std::string a = report_json(run_report(F)).dump(), b = report_json(run_report(F)).dump();
        EXPECT_EQ(a, b);
        EXPECT_EQ(report_text(run_report(F)), report_text(run_report(F)));
    }
}

TEST(Report, TowerTooDeepDegrades) {
    // nodes at x^2 = -b/a need a third extension step over Q(a, b)
    const Field ka = parse_field("a^2 - 2");
    const Field kb = make_field(parse_univariate("b^2 - 3", "b", ka), "b");
    const BiForm F = parse_biform("(X*W - Y*Z)*(X*Z - 5*Y*W)*(a*X*Z + b*Y*W)", kb);
    Report r;
    ASSERT_NO_THROW(r = run_report(F));
    ASSERT_FALSE(r.complete());
    for (const auto& e : r.errors) EXPECT_NE(e.find("TOWER_TOO_DEEP"), std::string::npos) << e;
    EXPECT_GE(r.errors.size(), 2u);  // later stages are still attempted
    const auto j = report_json(r);
    EXPECT_EQ(j["verdict"], nullptr);
    EXPECT_EQ(j["errors"].size(), r.errors.size());
    EXPECT_EQ(j["input"]["expression"], F.str());
    EXPECT_NE(report_text(r).find("error: verdict: TOWER_TOO_DEEP"), std::string::npos);
}

TEST(Corpus, FullPassAndProvenance) {
    const auto entries = build_corpus();
    std::set<std::string> names;
    for (const auto& e : entries) {
        EXPECT_TRUE(names.insert(e.name).second) << "duplicate " << e.name;
        EXPECT_FALSE(e.expect.empty()) << e.name;
        for (const auto& x : e.expect) EXPECT_FALSE(x.provenance.empty()) << e.name << " " << x.key;
    }
    const auto results = run_corpus(entries, 2);
    EXPECT_TRUE(std::is_sorted(results.begin(), results.end(),
                               [](const EntryResult& a, const EntryResult& b) { return a.name < b.name; }));
    for (const auto& r : results)
        for (const auto& m : r.mismatches) ADD_FAILURE() << r.name << ": " << m;
    EXPECT_EQ(corpus_json(results, kDefaultCorpusSeed).dump(), corpus_json(run_corpus(entries, 1), kDefaultCorpusSeed).dump());
}

TEST(Corpus, MissingProvenanceFails) {
    auto entries = build_corpus();
    auto it = std::find_if(entries.begin(), entries.end(), [](const CorpusEntry& e) { return e.name == "triple_conic"; });
    ASSERT_NE(it, entries.end());
    it->expect.front().provenance.clear();
    EXPECT_FALSE(run_entry(*it).ok());
}

TEST(Corpus, WrongExpectationFails) {
    auto entries = build_corpus();
    auto it = std::find_if(entries.begin(), entries.end(), [](const CorpusEntry& e) { return e.name == "max_degenerate_a5"; });
    ASSERT_NE(it, entries.end());
    it->expect.push_back({"orbit", "TripleConic", "derived"});
    const auto r = run_entry(*it);
    ASSERT_EQ(r.mismatches.size(), 1u);
    EXPECT_NE(r.mismatches[0].find("MaxDegenerateA5"), std::string::npos);
}

TEST(Corpus, SeedChangesRandomEntriesOnly) {
    const auto a = build_corpus(1), b = build_corpus(2);
    ASSERT_EQ(a.size(), b.size());
    for (size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(a[i].name, b[i].name);
        const bool random = a[i].name.rfind("ruling_cube", 0) == 0 || a[i].name.rfind("double_ruling", 0) == 0 ||
                            a[i].name.rfind("j10_", 0) == 0;
        if (!random) EXPECT_EQ(a[i].constructor, b[i].constructor) << a[i].name;
    }
}
