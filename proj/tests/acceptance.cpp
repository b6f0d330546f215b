// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "git33/classify/oracle.hpp"
#include "git33/io/corpus.hpp"

using namespace git33;
namespace fx = git33::fixtures;

namespace {

using Mono = std::pair<int, int>;

struct Check {
    std::ostringstream detail;
    bool ok = true;

    void expect(bool cond, const std::string& what) {
        if (!cond) {
            if (ok) detail << "failed: ";
            else detail << "; ";
            detail << what;
            ok = false;
        }
    }
};

// positive-weight monomials X^i Y^(3-i) Z^j W^(3-j) for rho_{u,v}, u >= v > 0, as listed in the reference
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

void criterion1(Check& c) {
    for (OneParamSubgroup rho : {OneParamSubgroup{2, 1}, OneParamSubgroup{4, 1}}) {
        const auto t = weight_table(3, 3, rho);
        c.expect(as_set(t.positive) == listed_positive(rho.u, rho.v), "positive list at " + rho.str());
    }
    c.expect(as_set(weight_table(3, 3, {3, 1}).zero) == std::set<Mono>{{2, 0}, {1, 3}}, "zero set at (3,1)");
    c.expect(as_set(weight_table(3, 3, {1, 1}).zero) == std::set<Mono>{{3, 0}, {2, 1}, {1, 2}, {0, 3}}, "zero set at (1,1)");
    c.detail << "positive lists at (2,1), (4,1); zero sets {X^2YW^3, XY^2Z^3} and the four i+j=3 monomials";
}

void criterion2(Check& c) {
    const BiForm F = fx::two_a5_curve();
    const auto v = verdict(F);
    c.expect(v.status == Stability::StrictlySemistable, "status");
    const auto sing = sing_locus(F);
    int sep_a5 = 0;
    for (const auto& r : sing) sep_a5 += (r.type == SingularityType::A(5) && r.separating) ? r.orbit : 0;
    c.expect(sing.size() == 2 && sep_a5 == 2, "two separating A5");
    const auto o = closed_orbit_limit(F, v);
    c.expect(o.kind == OrbitKind::MaxDegenerateA5, "orbit kind");
    c.expect(stratum_label(v, o, sing) == "Δ₂", "stratum label");
    c.detail << "StrictlySemistable, A5 x" << sep_a5 << " separating, " << orbit_kind_name(o.kind) << ", "
             << stratum_label(v, o, sing);
}

void criterion3(Check& c) {
    std::mt19937_64 rng(kDefaultCorpusSeed);
    int n21 = 0, n41 = 0;
    for (int k = 0; k < 50; ++k) {
        const bool cube = k % 2 == 0;
        const BiForm F0 = cube ? fx::cube_contact_instance(rng) : fx::double_ruling_instance(rng);
        const OneParamSubgroup want = cube ? OneParamSubgroup{2, 1} : OneParamSubgroup{4, 1};
        for (const BiForm& F : {F0, apply_coord_change(F0, random_coord_change(rng, true))}) {
            const auto v = verdict(F);
            const bool good = v.status == Stability::Unstable && v.certificate && v.certificate->rho == want &&
                              check_certificate(F, *v.certificate) == CertificateCheck::ValidUnstable;
            c.expect(good, "instance " + F.str());
            if (good && F == F0) (cube ? n21 : n41) += 1;
        }
    }
    c.detail << n21 << " rho(2,1) and " << n41 << " rho(4,1) certificates validated (also under a random g each), seed "
             << kDefaultCorpusSeed;
}

std::vector<std::pair<std::string, BiForm>> corpus_curves() {
    std::vector<std::pair<std::string, BiForm>> out;
    for (const auto& e : build_corpus())
        if (e.curve) out.emplace_back(e.name, e.curve());
    return out;
}

void criterion4(Check& c) {
    auto curves = corpus_curves();
    const size_t from_corpus = curves.size();
    std::mt19937_64 rng(404);
    for (int k = 0; k < 100; ++k) curves.emplace_back("random_" + std::to_string(k), fx::random_split_curve(rng));
    int agree = 0;
    std::map<std::string, int> seen;
    for (const auto& [name, F] : curves) {
        const auto v = verdict(F);
        ++seen[stability_name(v.status)];
        const auto o = brute_force_stability(F);
        const bool same = v.status == o.status;
        c.expect(same, name + ": classifier " + stability_name(v.status) + ", oracle " + stability_name(o.status));
        agree += same;
    }
    c.detail << agree << "/" << curves.size() << " agree (" << from_corpus << " corpus curves + 100 seeded random;";
    for (const auto& [k, n] : seen) c.detail << " " << k << " " << n;
    c.detail << ")";
}

BiPoly random_local_change(const BiPoly& f, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> d(-3, 3);
    const Field k = f.field();
    for (;;) {
        const long a = d(rng), b = d(rng), cc = d(rng), e = d(rng);
        if (a * e - b * cc == 0) continue;
        const BiPoly xs = AlgScalar(a) * BiPoly::x(k) + AlgScalar(b) * BiPoly::z(k) +
                          BiPoly::monomial(AlgScalar(d(rng)), 2, 0) + BiPoly::monomial(AlgScalar(d(rng)), 1, 1);
        const BiPoly zs = AlgScalar(cc) * BiPoly::x(k) + AlgScalar(e) * BiPoly::z(k) + BiPoly::monomial(AlgScalar(d(rng)), 0, 2);
        const BiPoly unit = BiPoly::constant(AlgScalar(1 + static_cast<long>(rng() % 3))) +
                            BiPoly::monomial(AlgScalar(d(rng)), 1, 0) + BiPoly::monomial(AlgScalar(d(rng)), 0, 1);
        return unit * f.substitute(xs, zs);
    }
}

void criterion5(Check& c) {
    std::vector<std::tuple<std::string, std::string, int>> germs;
    for (int k = 1; k <= 9; ++k) germs.emplace_back("z^2 - x^" + std::to_string(k + 1), "A" + std::to_string(k), k);
    for (int k = 2; k <= 4; ++k)
        germs.emplace_back("x*(z^2 - x^" + std::to_string(2 * k - 2) + ")", "D" + std::to_string(2 * k), 2 * k);
    for (int k = 2; k <= 3; ++k)
        germs.emplace_back("x*(z^2 - x^" + std::to_string(2 * k - 1) + ")", "D" + std::to_string(2 * k + 1), 2 * k + 1);
    germs.emplace_back("x^3 + z^4", "E6", 6);
    germs.emplace_back("x^3 + x*z^3", "E7", 7);
    germs.emplace_back("x^3 + z^5", "E8", 8);
    germs.emplace_back("z^3 - x^6", "J10", 10);
    std::mt19937_64 rng(55);
    int checks = 0;
    for (const auto& [src, type, mu] : germs) {
        const BiPoly f = parse_local(src);
        c.expect(classify_singularity(f).str() == type, src + " is not " + type);
        c.expect(milnor_number(f) == mu, src + " milnor");
        for (int k = 0; k < 20; ++k) {
            const BiPoly g = random_local_change(f, rng);
            c.expect(classify_singularity(g).str() == type, src + " changed: " + g.str());
            c.expect(milnor_number(g) == mu, src + " changed milnor: " + g.str());
            ++checks;
        }
    }
    c.detail << germs.size() << " normal forms, " << checks << " random local changes";
}

void criterion6(Check& c) {
    const Parametrization phi = fx::a8_parametrization();
    const BiForm F = implicitize(phi);
    c.expect(F.a() == 3 && F.b() == 3, "bidegree");
    c.expect(substitute_parametrization(F, phi).is_zero(), "parametrization does not vanish");
    const auto sing = sing_locus(F);
    c.expect(sing.size() == 1, "number of singular points");
    if (sing.size() == 1) {
        const auto& r = sing[0];
        c.expect(r.orbit == 1 && r.type == SingularityType::A(8) && r.milnor == 8 && r.branches == 1 && r.delta == 4,
                 "A8 data " + r.type.str());
        c.detail << "one singular point " << r.point.str() << ": " << r.type.str() << " mu=" << r.milnor
                 << " r=" << r.branches << " delta=" << r.delta;
    }
}

// c0 + c1 t + c2 t^2 + c3 t^3 = c3 (t - r)^3 with r != 0
bool perfect_cube(const AlgScalar& c0, const AlgScalar& c1, const AlgScalar& c2, const AlgScalar& c3) {
    if (c3.is_zero() || c0.is_zero()) return false;
    return c2 * c2 == AlgScalar(3) * c1 * c3 && c1 * c1 == AlgScalar(3) * c0 * c2;
}

void criterion7(Check& c) {
    std::mt19937_64 rng(kDefaultCorpusSeed + 7);
    std::uniform_int_distribution<long> d(-20, 20);
    for (int k = 0; k < 3; ++k) {
        long c0 = 0, c1 = 0, c2 = 0;
        do {
            c0 = d(rng), c1 = d(rng), c2 = d(rng);
        } while (c0 == c1 || c1 == c2 || c0 == c2);
        const BiForm F = fx::j10_member(c0, c1, c2);
        const SurfacePoint p{AlgScalar(0), AlgScalar(1), AlgScalar(0), AlgScalar(1)};
        const BiForm L = limit_under_1ps(F, {1, 1}, move_to_origin(p));
        bool cone = true;
        for (auto [i, j] : L.support()) cone = cone && i + j == 3;
        // weight-zero part: coefficients of (XW)^k (YZ)^(3-k)
        const bool cube = cone && perfect_cube(L.coeff(0, 3), L.coeff(1, 2), L.coeff(2, 1), L.coeff(3, 0));
        c.expect(cube, "limit is not a triple conic: " + L.str());
        const auto o = closed_orbit_limit(F);
        c.expect(o.kind == OrbitKind::TripleConic, "closed orbit " + std::string(orbit_kind_name(o.kind)));
        c.detail << (k ? "; " : "") << "c=(" << c0 << "," << c1 << "," << c2 << ") limit " << L.str();
    }
}

void criterion8(Check& c) {
    const BiForm F = fx::d8_fixture();
    const auto sing = sing_locus(F);
    bool d8 = false;
    for (const auto& r : sing) d8 = d8 || r.type == SingularityType::D(8);
    c.expect(d8, "no D8 point");
    const auto o = closed_orbit_limit(F);
    c.expect(o.kind == OrbitKind::DoubleConic, "closed orbit " + std::string(orbit_kind_name(o.kind)));
    std::vector<CrossRatio> crs;
    for (long r = 2; r < 200 && crs.size() < 2; r += 7)
        if (auto cr = cross_ratio_on_ruling(o.form, AlgScalar(r))) crs.push_back(*cr);
    c.expect(crs.size() == 2, "two generic rulings");
    if (crs.size() == 2) {
        c.expect(crs[0].value.has_value() == crs[1].value.has_value() && (!crs[0].value || *crs[0].value == *crs[1].value),
                 "cross-ratio differs: " + crs[0].str() + " vs " + crs[1].str());
        c.detail << "D8 classified, DoubleConic, cross-ratio " << crs[0].str() << " at two rulings";
    }
}

void criterion9(Check& c) {
    c.expect(kappa_on_V() == 14, "kappa");
    const auto [l, d] = lambda_delta_on_V();
    c.expect(l == 4 && d == 34, "lambda, delta");
    c.expect(petri_class() == parse_divclass("17λ - 2δ₀ - 7δ₁ - 9δ₂"), "Petri class");
    const auto pb = pullbacks();
    c.expect(pb.lambda == parse_divclass("λ + δ₁ + 3δ₂ + 7P"), "f*lambda " + pb.lambda.str());
    c.expect(pb.delta == parse_divclass("δ₀ + 12δ₁ + 30δ₂ + 60P"), "f*delta " + pb.delta.str());
    c.expect(test_families()[2].dot[4] == -1, "P.T3");
    const Rat t1 = affine_root([](const Rat& a) { return discrepancy(a)[4]; });
    c.expect(t1 == make_rat(29, 60) && discrepancy(make_rat(29, 60))[4] == 0, "discrepancy threshold");
    const Rat t2 = affine_root(model_polarization);
    c.expect(t2 == make_rat(8, 17) && model_polarization(make_rat(8, 17)) == 0, "polarization threshold");
    const auto m = moving_slope_certificate();
    c.expect(m.slope == make_rat(60, 7), "moving slope");
    c.expect(m.divisor == parse_divclass("60λ - 7δ₀ - 24δ₁ - 30δ₂"), "moving class");
    c.expect(petri_rewrite(pullback(17, 2)).is_zero(), "Petri kernel");
    c.detail << "kappa=14, (4,34), thresholds " << t1.get_str() << " and " << t2.get_str() << ", slope "
             << m.slope.get_str();
}

std::string sing_key(const BiForm& F) {
    if (!is_reduced(F)) return "nonreduced";
    return join(type_multiset(sing_locus(F)));
}

void criterion10(Check& c) {
    std::mt19937_64 rng(1010);
    int trials = 0, swaps = 0;
    for (const auto& [name, F] : corpus_curves()) {
        const auto v = verdict(F);
        const std::string types = sing_key(F);
        const std::optional<OrbitKind> kind =
            v.status == Stability::Unstable ? std::nullopt : std::optional(closed_orbit_limit(F, v).kind);
        for (int k = 0; k < 10; ++k) {
            CoordChange g = random_coord_change(rng, true);
            if (k == 0) g = compose(g, CoordChange::swap_factors());
            swaps += g.swap;
            const BiForm G = apply_coord_change(F, g);
            const auto w = verdict(G);
            c.expect(w.status == v.status, name + " status");
            c.expect(sing_key(G) == types, name + " singularities " + sing_key(G) + " vs " + types);
            if (kind) c.expect(closed_orbit_limit(G, w).kind == *kind, name + " orbit kind");
            ++trials;
        }
    }
    c.detail << trials << " transformed curves (" << swaps << " with the factor swap)";
}

} // namespace

int main() {
    const std::vector<std::pair<int, std::function<void(Check&)>>> criteria = {
        {1, criterion1}, {2, criterion2}, {3, criterion3}, {4, criterion4}, {5, criterion5},
        {6, criterion6}, {7, criterion7}, {8, criterion8}, {9, criterion9}, {10, criterion10}};
    int failed = 0;
    for (const auto& [n, fn] : criteria) {
        Check c;
        try {
            fn(c);
        } catch (const Error& e) {
            c.ok = false;
            c.detail << " exception " << e.what();
        }
        std::cout << "criterion " << n << ": " << (c.ok ? "PASS" : "FAIL") << "  " << c.detail.str() << std::endl;
        failed += !c.ok;
    }
    std::cout << (10 - failed) << "/10 criteria pass" << std::endl;
    return failed == 0 ? 0 : 1;
}
