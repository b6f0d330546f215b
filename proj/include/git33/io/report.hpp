#ifndef GIT33_IO_REPORT_HPP
#define GIT33_IO_REPORT_HPP

#include <chrono>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "git33/classify/stratum.hpp"
#include "git33/io/parse.hpp"

namespace git33 {

inline constexpr int kSchemaVersion = 1;

struct ReportOptions {
    bool skip_sing = false;
    bool certify_only = false;
    bool timing = false;  // off by default so reports stay byte-identical
    int truncation = kDefaultTruncation;
};

struct Report {
    BiForm input;
    std::optional<StabilityVerdict> verdict;
    std::optional<std::vector<SingularityReport>> sing;
    std::optional<ClosedOrbitRep> orbit;
    std::optional<std::vector<std::string>> labels;
    std::vector<std::string> errors;  // "stage: CODE: message"
    std::optional<double> elapsed_ms;

    bool complete() const { return errors.empty(); }
};

/// Sorted singularity types, each point counted with its Galois orbit.
inline std::vector<std::string> type_multiset(const std::vector<SingularityReport>& sing) {
    std::vector<std::string> out;
    for (const auto& r : sing)
        for (int k = 0; k < r.orbit; ++k) out.push_back(r.type.str());
    std::sort(out.begin(), out.end());
    return out;
}

inline Report run_report(const BiForm& F, const ReportOptions& opt = {}) {
    const auto t0 = std::chrono::steady_clock::now();
    Report r{F, {}, {}, {}, {}, {}, {}};
    auto guarded = [&](const char* stage, auto&& fn) {
        try {
            fn();
            return true;
        } catch (const Error& e) {
            r.errors.push_back(std::string(stage) + ": " + e.what());
        }
        return false;
    };
    guarded("verdict", [&] { r.verdict = verdict(F); });
    if (!opt.certify_only) {
        // an unstable verdict returns before the reducedness check
        bool reduced = true;
        guarded("reduced", [&] { reduced = r.verdict && r.verdict->status != Stability::Unstable ? r.verdict->reduced : is_reduced(F); });
        if (!opt.skip_sing && reduced)
            guarded("sing_locus", [&] { r.sing = sing_locus(F, {opt.truncation, true}); });
        if (r.verdict && r.verdict->status != Stability::Unstable)
            guarded("closed_orbit", [&] { r.orbit = closed_orbit_limit(F, *r.verdict); });
        if (r.verdict && (r.sing || !r.verdict->reduced || r.verdict->status == Stability::Unstable))
            r.labels = stratum_labels(*r.verdict, r.orbit, r.sing.value_or(std::vector<SingularityReport>{}));
    }
    if (opt.timing)
        r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

namespace json_io {

using nlohmann::ordered_json;

inline ordered_json scalar(const AlgScalar& a) { return a.str(); }

inline ordered_json matrix(const BiForm& F) {
    ordered_json m = ordered_json::array();
    for (int i = 0; i <= F.a(); ++i) {
        ordered_json row = ordered_json::array();
        for (int j = 0; j <= F.b(); ++j) row.push_back(scalar(F.coeff(i, j)));
        m.push_back(row);
    }
    return m;
}

inline ordered_json mat2(const Mat2& m) {
    return ordered_json::array({ordered_json::array({scalar(m[0][0]), scalar(m[0][1])}),
                                ordered_json::array({scalar(m[1][0]), scalar(m[1][1])})});
}

inline ordered_json point(const SurfacePoint& p) {
    const auto n = p.normalized();
    return ordered_json::array({ordered_json::array({scalar(n.s), scalar(n.t)}), ordered_json::array({scalar(n.u), scalar(n.v)})});
}

inline ordered_json certificate(const InstabilityCertificate& c) {
    ordered_json j;
    j["A"] = mat2(c.g.A);
    j["B"] = mat2(c.g.B);
    j["swap"] = c.g.swap;
    j["rho"] = {{"u", c.rho.u}, {"v", c.rho.v}};
    return j;
}

inline ordered_json witness(const Witness& w) {
    ordered_json j;
    j["kind"] = witness_kind_name(w.kind);
    j["point"] = w.point ? point(*w.point) : ordered_json(nullptr);
    j["orbit"] = w.orbit;
    j["certificate"] = w.certificate ? certificate(*w.certificate) : ordered_json(nullptr);
    if (!w.note.empty()) j["note"] = w.note;
    return j;
}

inline ordered_json verdict(const StabilityVerdict& v) {
    ordered_json j;
    j["status"] = stability_name(v.status);
    j["reduced"] = v.reduced;
    j["reason"] = v.reason;
    j["certificate"] = v.certificate ? certificate(*v.certificate) : ordered_json(nullptr);
    j["evidence"] = ordered_json::array();
    for (const auto& w : v.evidence) j["evidence"].push_back(witness(w));
    return j;
}

inline ordered_json singularity(const SingularityReport& r) {
    ordered_json j;
    j["point"] = point(r.point);
    j["orbit"] = r.orbit;
    j["type"] = r.type.str();
    j["multiplicity"] = r.multiplicity;
    j["milnor"] = r.milnor;
    j["branches"] = r.branches;
    j["delta"] = r.delta;
    j["tangent_cone"] = cone_shape_name(r.cone);
    j["separating"] = r.separating;
    return j;
}

inline ordered_json orbit(const ClosedOrbitRep& o) {
    ordered_json j;
    j["kind"] = orbit_kind_name(o.kind);
    j["representative"] = o.form.str();
    if (o.dcurve) j["dcurve_invariants"] = o.dcurve->str();
    if (o.cross_ratio) {
        ordered_json c;
        c["lambda"] = o.cross_ratio->str();
        c["j"] = o.cross_ratio->j ? ordered_json(o.cross_ratio->j->str()) : ordered_json(nullptr);
        c["orbit"] = o.cross_ratio->orbit;
        j["cross_ratio"] = c;
    }
    return j;
}

} // namespace json_io

inline nlohmann::ordered_json report_json(const Report& r) {
    using json_io::ordered_json;
    ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["input"] = {{"expression", r.input.str()},
                  {"field", r.input.field().describe()},
                  {"bidegree", {r.input.a(), r.input.b()}},
                  {"matrix", json_io::matrix(r.input)}};
    j["verdict"] = r.verdict ? json_io::verdict(*r.verdict) : ordered_json(nullptr);
    if (r.sing) {
        j["singularities"] = ordered_json::array();
        for (const auto& s : *r.sing) j["singularities"].push_back(json_io::singularity(s));
        j["singularity_types"] = type_multiset(*r.sing);
    } else {
        j["singularities"] = nullptr;
    }
    j["closed_orbit"] = r.orbit ? json_io::orbit(*r.orbit) : ordered_json(nullptr);
    if (r.labels) {
        j["strata"] = *r.labels;
        j["stratum"] = r.labels->empty() ? (r.verdict->status == Stability::Unstable ? ordered_json(nullptr)
                                                                                      : ordered_json(kNoTableRow))
                                         : ordered_json(r.labels->front());
    } else {
        j["strata"] = nullptr;
        j["stratum"] = nullptr;
    }
    j["errors"] = r.errors;
    if (r.elapsed_ms) j["elapsed_ms"] = *r.elapsed_ms;
    return j;
}

inline std::string report_text(const Report& r) {
    std::ostringstream os;
    os << "curve: " << r.input.str() << "\n";
    if (!r.input.field().is_rational()) os << "field: " << r.input.field().describe() << "\n";
    if (r.verdict) {
        const auto& v = *r.verdict;
        os << "status: " << stability_name(v.status) << "\n";
        if (!v.reason.empty()) os << "reason: " << v.reason << "\n";
        if (v.certificate) {
            const auto& c = *v.certificate;
            os << "certificate: rho=" << c.rho.str() << " A=" << json_io::mat2(c.g.A).dump()
               << " B=" << json_io::mat2(c.g.B).dump() << (c.g.swap ? " swap" : "") << "\n";
        }
        for (const auto& w : v.evidence) {
            os << "witness: " << witness_kind_name(w.kind);
            if (w.point) os << " at " << w.point->str();
            if (w.orbit > 1) os << " (x" << w.orbit << " conjugates)";
            if (w.certificate) os << " rho=" << w.certificate->rho.str();
            if (!w.note.empty()) os << " [" << w.note << "]";
            os << "\n";
        }
    }
    if (r.sing) {
        if (r.sing->empty()) os << "singularities: none\n";
        for (const auto& s : *r.sing) {
            os << "singularity: " << s.type.str() << " at " << s.point.str();
            if (s.orbit > 1) os << " (x" << s.orbit << " conjugates)";
            os << " mult=" << s.multiplicity << " mu=" << s.milnor << " r=" << s.branches << " delta=" << s.delta
               << (s.separating ? " separating" : "") << "\n";
        }
    }
    if (r.orbit) {
        os << "closed orbit: " << orbit_kind_name(r.orbit->kind);
        if (r.orbit->dcurve) os << " invariants " << r.orbit->dcurve->str();
        if (r.orbit->cross_ratio) {
            os << " cross-ratio " << r.orbit->cross_ratio->str();
            if (r.orbit->cross_ratio->j) os << " j=" << r.orbit->cross_ratio->j->str();
        }
        os << "\n";
    }
    if (r.labels) {
        if (r.labels->empty()) {
            if (r.verdict->status != Stability::Unstable) os << "stratum: " << kNoTableRow << "\n";
        } else {
            os << "stratum: " << r.labels->front() << "\n";
            for (size_t i = 1; i < r.labels->size(); ++i) os << "also: " << (*r.labels)[i] << "\n";
        }
    }
    for (const auto& e : r.errors) os << "error: " << e << "\n";
    if (r.elapsed_ms) os << "elapsed: " << *r.elapsed_ms << " ms\n";
    return os.str();
}

/// Inverse of json_io::matrix.
inline BiForm biform_from_json_matrix(const nlohmann::json& m, const Field& f = Field()) {
    if (!m.is_array()) fail(Errc::ParseError, "coefficient matrix must be an array of rows at position 0");
    std::vector<std::vector<std::string>> rows;
    for (const auto& row : m) {
        if (!row.is_array()) fail(Errc::ParseError, "coefficient matrix row is not an array at position 0");
        std::vector<std::string> r;
        for (const auto& c : row) r.push_back(c.is_string() ? c.get<std::string>() : c.dump());
        rows.push_back(std::move(r));
    }
    return biform_from_matrix(rows, f);
}

} // namespace git33

#endif
