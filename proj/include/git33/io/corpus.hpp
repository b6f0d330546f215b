#ifndef GIT33_IO_CORPUS_HPP
#define GIT33_IO_CORPUS_HPP

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "git33/io/fixtures.hpp"
#include "git33/io/report.hpp"
#include "git33/pic/divisor.hpp"

namespace git33 {

inline constexpr unsigned long kDefaultCorpusSeed = 1729;

/// Where an expected value comes from: "reference" (stated in the source literature),
/// "derived" (computed independently for this artifact) or "identity" (holds by construction).
struct Expectation {
    std::string key;
    std::string value;
    std::string provenance;
};

using Observed = std::map<std::string, std::string>;

struct CorpusEntry {
    std::string name;
    std::string kind;         // curve, germ, divisor
    std::string constructor;  // expression, parametrization or family parameters
    std::vector<Expectation> expect;
    std::function<Observed()> observe;
    std::function<BiForm()> curve;  // set for curve entries
};

struct EntryResult {
    std::string name;
    std::string kind;
    std::string constructor;
    Observed observed;
    std::vector<std::string> mismatches;
    bool ok() const { return mismatches.empty(); }
};

inline std::string join(const std::vector<std::string>& v, const char* sep = ",") {
    std::string out;
    for (size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
    return out;
}

/// Keys compared by the corpus for a (3,3) curve.
inline Observed observe_curve(const BiForm& F) {
    Observed o;
    const Report r = run_report(F);
    for (const auto& e : r.errors) o["error"] += e + ";";
    if (!r.verdict) return o;
    o["status"] = stability_name(r.verdict->status);
    if (r.verdict->certificate) {
        o["rho"] = r.verdict->certificate->rho.str();
        o["certificate"] = certificate_check_name(check_certificate(F, *r.verdict->certificate));
    }
    o["sing_types"] = r.sing ? join(type_multiset(*r.sing)) : "n/a";
    if (r.sing) {
        int sep = 0;
        for (const auto& s : *r.sing) sep += s.separating ? s.orbit : 0;
        o["separating"] = std::to_string(sep);
    }
    if (r.orbit) {
        o["orbit"] = orbit_kind_name(r.orbit->kind);
        if (r.orbit->dcurve) o["dcurve"] = r.orbit->dcurve->str();
        if (r.orbit->cross_ratio) o["j"] = r.orbit->cross_ratio->j ? r.orbit->cross_ratio->j->str() : "none";
    }
    if (r.labels) o["stratum"] = r.labels->empty() ? (r.verdict->status == Stability::Unstable ? "none" : kNoTableRow)
                                                   : r.labels->front();
    return o;
}

namespace detail {

inline Expectation ref(std::string k, std::string v) { return {std::move(k), std::move(v), "reference"}; }
inline Expectation der(std::string k, std::string v) { return {std::move(k), std::move(v), "derived"}; }
inline Expectation idn(std::string k, std::string v) { return {std::move(k), std::move(v), "identity"}; }

inline CorpusEntry curve_entry(std::string name, std::string ctor, std::function<BiForm()> make,
                               std::vector<Expectation> expect) {
    CorpusEntry e{std::move(name), "curve", std::move(ctor), std::move(expect), {}, make};
    e.observe = [make] { return observe_curve(make()); };
    return e;
}

inline CorpusEntry germ_entry(const std::string& germ, const std::string& type, int mu, const std::string& prov) {
    CorpusEntry e{"germ_" + type + "_" + germ, "germ", germ, {{"type", type, prov}, {"milnor", std::to_string(mu), prov}},
                  {}, {}};
    e.observe = [germ] {
        const BiPoly f = parse_local(germ);
        return Observed{{"type", classify_singularity(f).str()}, {"milnor", std::to_string(milnor_number(f))}};
    };
    return e;
}

inline CorpusEntry divisor_entry(std::string name, std::string ctor, Expectation ex, std::function<std::string()> fn) {
    const std::string key = ex.key;
    CorpusEntry e{std::move(name), "divisor", std::move(ctor), {std::move(ex)}, {}, {}};
    e.observe = [key, fn] { return Observed{{key, fn()}}; };
    return e;
}

} // namespace detail

inline std::vector<CorpusEntry> build_corpus(unsigned long seed = kDefaultCorpusSeed) {
    using namespace detail;
    namespace fx = fixtures;
    std::vector<CorpusEntry> c;
    auto pad = [](int k) { return (k < 10 ? "0" : "") + std::to_string(k); };

    std::mt19937_64 rng(seed);
    for (int k = 0; k < 5; ++k) {
        const BiForm F = fx::cube_contact_instance(rng);
        c.push_back(curve_entry("ruling_cube_contact_" + pad(k), F.str(), [F] { return F; },
                                {ref("status", "Unstable"), ref("rho", "(2,1)"), idn("certificate", "ValidUnstable")}));
    }
    for (int k = 0; k < 5; ++k) {
        const BiForm F = fx::double_ruling_instance(rng);
        c.push_back(curve_entry("double_ruling_" + pad(k), F.str(), [F] { return F; },
                                {ref("status", "Unstable"), ref("rho", "(4,1)"), idn("certificate", "ValidUnstable")}));
    }
    c.push_back(curve_entry("max_degenerate_a5", fx::two_a5_curve().str(), fx::two_a5_curve,
                            {ref("status", "StrictlySemistable"), ref("sing_types", "A5,A5"), ref("separating", "2"),
                             ref("orbit", "MaxDegenerateA5"), ref("stratum", "Δ₂")}));
    c.push_back(curve_entry("smooth_stable", fx::stable_smooth().str(), fx::stable_smooth,
                            {der("status", "Stable"), der("sing_types", ""), der("orbit", "StableOrbit"),
                             der("stratum", kNoTableRow)}));
    for (auto [b, cc, inv] : std::vector<std::tuple<long, long, std::string>>{{1, 2, "(2, 9)"}, {0, 0, "(0, 0)"}, {-1, 5, "(-5, 124)"}}) {
        const std::string n = "d_curve_b" + std::to_string(b) + "_c" + std::to_string(cc);
        c.push_back(curve_entry(n, "f(XW,YZ) with f = x^3 + " + std::to_string(b) + "x^2z + " + std::to_string(cc) + "xz^2 + z^3",
                                [b = b, cc = cc] { return fx::d_curve(b, cc); },
                                {ref("status", "StrictlySemistable"), ref("sing_types", "D4,D4"), ref("orbit", "DCurve"),
                                 der("dcurve", inv), der("stratum", "elliptic triboroughs")}));
    }
    c.push_back(curve_entry("d_curve_degenerate_xz", "f(XW,YZ) with f = xz(x + z)", fx::degenerate_d_curve,
                            {ref("status", "StrictlySemistable"), der("sing_types", "A1,A1,D4,D4"), ref("orbit", "DCurve"),
                             der("dcurve", "DegenerateXZ")}));
    c.push_back(curve_entry("double_conic", fx::double_conic().str(), fx::double_conic,
                            {ref("status", "StrictlySemistable"), ref("orbit", "DoubleConic"), der("j", "1728"),
                             ref("stratum", "curves in Δ₀ with a hyperelliptic normalization")}));
    c.push_back(curve_entry("double_conic_tangent", fx::tangent_double_conic().str(), fx::tangent_double_conic,
                            {der("status", "StrictlySemistable"), der("orbit", "TripleConic")}));
    c.push_back(curve_entry("triple_conic", fx::triple_conic().str(), fx::triple_conic,
                            {ref("status", "StrictlySemistable"), ref("orbit", "TripleConic"),
                             ref("stratum", "the Petri divisor P")}));
    std::uniform_int_distribution<long> cd(-6, 6);
    for (int k = 0; k < 3; ++k) {
        long c0 = 0, c1 = 0, c2 = 0;
        do {
            c0 = cd(rng), c1 = cd(rng), c2 = cd(rng);
        } while (c0 == c1 || c1 == c2 || c0 == c2);
        const std::string ps = std::to_string(c0) + "," + std::to_string(c1) + "," + std::to_string(c2);
        c.push_back(curve_entry("j10_concurrent_conics_" + pad(k), "conics XW + YZ + cXZ for c = " + ps,
                                [=] { return fx::j10_member(c0, c1, c2); },
                                {ref("status", "StrictlySemistable"), ref("sing_types", "J10"), ref("orbit", "TripleConic")}));
    }
    c.push_back(curve_entry("d8_configuration", fx::d8_fixture().str(), fx::d8_fixture,
                            {ref("status", "StrictlySemistable"), der("sing_types", "D8"), ref("orbit", "DoubleConic")}));
    c.push_back(curve_entry("a8_rational_curve", "implicitized parametrization", fx::a8_curve,
                            {ref("sing_types", "A8"), der("status", "Stable"), ref("stratum", "hyperelliptic curves")}));
    c.push_back(curve_entry("a9_two_components", "product of two implicitized parametrizations", fx::a9_curve,
                            {der("sing_types", "A9"), der("separating", "1"), der("status", "Stable"),
                             ref("stratum", "hyperelliptic curves")}));
    c.push_back(curve_entry("cusps_and_ruling", "(Y^3*Z^2 - X^3*W^2)*(Z + W)",
                            [] { return parse_biform("(Y^3*Z^2 - X^3*W^2)*(Z + W)"); },
                            {der("status", "Stable"), der("sing_types", "A1,A1,A1,A2,A2"),
                             der("stratum", "elliptic tails attached nodally")}));

    for (int k = 1; k <= 9; ++k)
        c.push_back(germ_entry("z^2 - x^" + std::to_string(k + 1), "A" + std::to_string(k), k, "identity"));
    for (int k = 4; k <= 8; ++k)
        c.push_back(germ_entry("x*(z^2 - x^" + std::to_string(k - 2) + ")", "D" + std::to_string(k), k, "identity"));
    c.push_back(germ_entry("x^3 + z^4", "E6", 6, "reference"));
    c.push_back(germ_entry("x^3 + x*z^3", "E7", 7, "reference"));
    c.push_back(germ_entry("x^3 + z^5", "E8", 8, "reference"));
    c.push_back(germ_entry("z^3 - x^6", "J10", 10, "reference"));

    c.push_back(divisor_entry("divisor_kappa", "pushforward of (3H1+3H2+H3)(H1+H2+H3)^2", ref("kappa", "14"),
                              [] { return kappa_on_V().get_str(); }));
    c.push_back(divisor_entry("divisor_lambda_delta", "lambda and delta on the parameter space", ref("lambda_delta", "4,34"), [] {
        const auto [l, d] = lambda_delta_on_V();
        return l.get_str() + "," + d.get_str();
    }));
    c.push_back(divisor_entry("divisor_petri_dot_t3", "P.T3 from the Petri class", ref("P.T3", "-1"),
                              [] { return test_families()[2].dot[4].get_str(); }));
    c.push_back(divisor_entry("divisor_pullback_lambda", "solved pullback of lambda", ref("class", "λ + δ₁ + 3δ₂ + 7P"),
                              [] { return pullbacks().lambda.str(); }));
    c.push_back(divisor_entry("divisor_pullback_delta", "solved pullback of delta", ref("class", "δ₀ + 12δ₁ + 30δ₂ + 60P"),
                              [] { return pullbacks().delta.str(); }));
    c.push_back(divisor_entry("divisor_discrepancy_threshold", "root of the P coefficient of the discrepancy",
                              ref("alpha", "29/60"),
                              [] { return affine_root([](const Rat& a) { return discrepancy(a)[4]; }).get_str(); }));
    c.push_back(divisor_entry("divisor_polarization_threshold", "root of the model polarization", ref("alpha", "8/17"),
                              [] { return affine_root(model_polarization).get_str(); }));
    c.push_back(divisor_entry("divisor_moving_slope", "moving slope certificate", ref("slope", "60/7"),
                              [] { return moving_slope_certificate().slope.get_str(); }));
    c.push_back(divisor_entry("divisor_moving_class", "pullback of 60 lambda - 7 delta", ref("class", "60λ − 7δ₀ − 24δ₁ − 30δ₂"),
                              [] { return moving_slope_certificate().divisor.str(); }));
    c.push_back(divisor_entry("divisor_petri_kernel", "pullback of 17 lambda - 2 delta after the Petri rewrite",
                              der("class", "0"), [] { return petri_rewrite(pullback(17, 2)).str(); }));
    return c;
}

inline EntryResult run_entry(const CorpusEntry& e) {
    EntryResult r{e.name, e.kind, e.constructor, {}, {}};
    try {
        r.observed = e.observe();
    } catch (const Error& err) {
        r.observed["error"] = err.what();
    }
    for (const auto& x : e.expect) {
        if (x.provenance.empty()) {
            r.mismatches.push_back(x.key + ": expectation has no provenance");
            continue;
        }
        auto it = r.observed.find(x.key);
        const std::string got = it == r.observed.end() ? "<missing>" : it->second;
        if (got != x.value) r.mismatches.push_back(x.key + ": expected '" + x.value + "' (" + x.provenance + "), got '" + got + "'");
    }
    if (r.observed.count("error")) r.mismatches.push_back("error: " + r.observed["error"]);
    return r;
}

/// Runs all entries on a worker pool; the result order is by entry name.
inline std::vector<EntryResult> run_corpus(const std::vector<CorpusEntry>& entries, unsigned workers = 0) {
    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    std::vector<EntryResult> out(entries.size());
    std::atomic<size_t> next{0};
    auto work = [&] {
        for (size_t i; (i = next++) < entries.size();) out[i] = run_entry(entries[i]);
    };
    std::vector<std::thread> pool;
    for (unsigned k = 1; k < workers; ++k) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    std::sort(out.begin(), out.end(), [](const EntryResult& a, const EntryResult& b) { return a.name < b.name; });
    return out;
}

inline nlohmann::ordered_json corpus_json(const std::vector<EntryResult>& results, unsigned long seed) {
    nlohmann::ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["seed"] = seed;
    size_t bad = 0;
    j["entries"] = nlohmann::ordered_json::array();
    for (const auto& r : results) {
        bad += !r.ok();
        nlohmann::ordered_json e;
        e["name"] = r.name;
        e["kind"] = r.kind;
        e["constructor"] = r.constructor;
        e["ok"] = r.ok();
        e["observed"] = r.observed;
        e["mismatches"] = r.mismatches;
        j["entries"].push_back(e);
    }
    j["summary"] = {{"total", results.size()}, {"passed", results.size() - bad}, {"failed", bad}};
    return j;
}

} // namespace git33

#endif
