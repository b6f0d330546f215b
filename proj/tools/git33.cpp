#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "git33/io/corpus.hpp"

using namespace git33;
using nlohmann::json;
using nlohmann::ordered_json;

namespace {

struct Common {
    std::string input;
    std::string field;
    bool json = false;
    int truncation = kDefaultTruncation;
};

void add_common(CLI::App* sub, Common& c, bool with_input = true) {
    if (with_input)
        sub->add_option("input", c.input, "expression in X,Y,Z,W, or a JSON file with a matrix or parametrization")
            ->required();
    sub->add_option("--field", c.field, "minimal polynomial of the base field generator, e.g. \"t^2-2\"");
    sub->add_flag("--json", c.json, "machine-readable output");
    sub->add_option("--truncation", c.truncation, "series and Milnor truncation cap")->check(CLI::PositiveNumber);
}

Field field_of(const std::string& src) { return src.empty() ? Field() : parse_field(src); }

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(Errc::InvalidArgument, "cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        fail(Errc::ParseError, path + ": " + e.what());
    }
}

bool is_json_path(const std::string& s) { return s.size() > 5 && s.substr(s.size() - 5) == ".json"; }

Parametrization parametrization_from_json(const json& j, const Field& f) {
    const std::string var = j.value("var", "t");
    const json& p = j.at("parametrization");
    if (!p.is_array() || p.size() != 4)
        fail(Errc::ParseError, "parametrization must list [p1, q1, p2, q2] at position 0");
    std::vector<UniPoly> polys;
    for (const auto& s : p) polys.push_back(parse_univariate(s.get<std::string>(), var, f));
    return {polys[0], polys[1], polys[2], polys[3]};
}

/// Field named in a JSON input, overridden by --field.
Field json_field(const json& j, const Common& c) {
    if (!c.field.empty()) return field_of(c.field);
    return j.is_object() && j.contains("field") ? field_of(j["field"].get<std::string>()) : Field();
}

BiForm read_curve(const Common& c) {
    if (!is_json_path(c.input)) return parse_biform(c.input, field_of(c.field));
    const json j = read_json_file(c.input);
    const Field f = json_field(j, c);
    BiForm F;
    if (j.is_array()) F = biform_from_json_matrix(j, f);
    else if (j.contains("matrix")) F = biform_from_json_matrix(j["matrix"], f);
    else if (j.contains("expression")) F = parse_biform(j["expression"].get<std::string>(), f);
    else if (j.contains("parametrization")) F = implicitize(parametrization_from_json(j, f));
    else fail(Errc::ParseError, "JSON input needs a matrix, expression or parametrization at position 0");
    if (F.a() != 3 || F.b() != 3)
        fail(Errc::WrongBidegree, "expected bidegree (3,3), got (" + std::to_string(F.a()) + "," + std::to_string(F.b()) + ")");
    if (F.is_zero()) fail(Errc::InvalidArgument, "the zero form is not a curve");
    return F;
}

void emit(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

InstabilityCertificate certificate_from_json(const json& j, const Field& f) {
    auto mat = [&](const json& m) {
        Mat2 r = mat_identity();
        for (size_t a = 0; a < 2; ++a)
            for (size_t b = 0; b < 2; ++b) {
                const json& v = m.at(a).at(b);
                r[a][b] = detail::ExprParser(v.is_string() ? v.get<std::string>() : v.dump(), {}, f).parse().constant_value();
            }
        return r;
    };
    InstabilityCertificate c;
    c.g.A = mat(j.at("A"));
    c.g.B = mat(j.at("B"));
    c.g.swap = j.value("swap", false);
    c.rho = {j.at("rho").at("u").get<long>(), j.at("rho").at("v").get<long>()};
    if (mat_det(c.g.A).is_zero() || mat_det(c.g.B).is_zero()) fail(Errc::InvalidArgument, "certificate matrix is singular");
    return c;
}

int run_divisor(const std::string& sub, const std::string& alpha_src, bool as_json) {
    ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["subcommand"] = sub;
    std::ostringstream os;
    if (sub == "chow") {
        const ChowElt e = ChowElt::linear(3, 3, 1) * ChowElt::linear(1, 1, 1).pow(2);
        j["class"] = e.str();
        j["kappa"] = kappa_on_V().get_str();
        os << "(3H1+3H2+H3)(H1+H2+H3)^2 = " << e.str() << "\n"
           << "kappa = pushforward = " << kappa_on_V().get_str() << "*H3\n";
    } else if (sub == "lambda-delta") {
        const auto [l, d] = lambda_delta_on_V();
        j["lambda"] = l.get_str();
        j["delta"] = d.get_str();
        j["kappa"] = kappa_on_V().get_str();
        os << "lambda = O(" << l.get_str() << "), delta = O(" << d.get_str() << "), kappa = O(" << kappa_on_V().get_str() << ")\n";
    } else if (sub == "pullback") {
        const auto fams = test_families();
        const auto pb = solve_pullback_coeffs(fams);
        j["lambda"] = pb.lambda.str();
        j["delta"] = pb.delta.str();
        j["families"] = ordered_json::array();
        for (const auto& t : fams) {
            j["families"].push_back({{"name", t.name}, {"dot", t.dot.str(true)}});
            os << t.name << ": lambda.T, delta0.T, delta1.T, delta2.T, P.T = ";
            for (size_t i = 0; i < DivClass::kDim; ++i) os << (i ? ", " : "") << t.dot[i].get_str();
            os << "\n";
        }
        os << "f*lambda = " << pb.lambda.str() << "\nf*delta = " << pb.delta.str() << "\n";
    } else if (sub == "discrepancy") {
        if (alpha_src.empty()) fail(Errc::InvalidArgument, "discrepancy needs --alpha");
        const Rat a = parse_rat(alpha_src);
        const DivClass d = discrepancy(a);
        j["alpha"] = a.get_str();
        j["class"] = d.str();
        j["effective"] = is_effective_exceptional(d);
        j["threshold"] = affine_root([](const Rat& x) { return discrepancy(x)[4]; }).get_str();
        os << "alpha = " << a.get_str() << ": " << d.str() << (is_effective_exceptional(d) ? " (effective)" : " (not effective)")
           << "\nP coefficient vanishes at alpha = " << j["threshold"].get<std::string>() << "\n";
    } else if (sub == "polarization") {
        const Rat root = affine_root(model_polarization);
        j["threshold"] = root.get_str();
        os << "degree of K + alpha delta on the quotient: 34 alpha - 16, zero at alpha = " << root.get_str() << "\n";
        if (!alpha_src.empty()) {
            const Rat a = parse_rat(alpha_src);
            const Rat v = model_polarization(a);
            j["alpha"] = a.get_str();
            j["degree"] = v.get_str();
            j["ample"] = v > 0;
            os << "alpha = " << a.get_str() << ": O(" << v.get_str() << ")" << (v > 0 ? " ample" : " not ample") << "\n";
        }
    } else if (sub == "moving-slope") {
        const auto m = moving_slope_certificate();
        j["class"] = m.divisor.str();
        j["slope"] = m.slope.get_str();
        j["degree_on_quotient"] = m.degree_on_quotient.get_str();
        j["inequalities"] = m.inequalities;
        os << "f*(60 lambda - 7 delta) = " << m.divisor.str() << "\nslope = " << m.slope.get_str()
           << "\ndegree on the quotient = " << m.degree_on_quotient.get_str() << "\n";
        for (const auto& s : m.inequalities) os << s << "\n";
    } else if (sub == "petri") {
        j["class"] = petri_class().str();
        j["pullback_17l_2d"] = pullback(17, 2).str();
        j["after_rewrite"] = petri_rewrite(pullback(17, 2)).str();
        os << "P = " << petri_class().str() << "\nf*(17 lambda - 2 delta) = " << pullback(17, 2).str()
           << " = " << petri_rewrite(pullback(17, 2)).str() << " after rewriting P\n";
    } else {
        std::cerr << "unknown divisor subcommand '" << sub << "'\n";
        return 2;
    }
    if (as_json) emit(j);
    else std::cout << os.str();
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"GIT of (3,3) curves on P1 x P1: stability, singularities, closed orbits, divisor arithmetic"};
    app.require_subcommand(1);

    Common c;
    ReportOptions ropt;
    bool timing = false;

    auto* classify = app.add_subcommand("classify", "full report: verdict, singularities, closed orbit, strata");
    add_common(classify, c);
    classify->add_flag("--skip-sing", ropt.skip_sing, "do not compute the singular locus");
    classify->add_flag("--certify-only", ropt.certify_only, "stop after the stability verdict");
    classify->add_flag("--timing", timing, "include wall-clock time (breaks byte-identical output)");

    auto* sing = app.add_subcommand("sing", "singular locus of a (3,3) curve, or of a local germ with --germ");
    add_common(sing, c, false);
    sing->add_option("input", c.input, "curve expression, JSON file, or germ in x,z")->required();
    bool germ = false;
    sing->add_flag("--germ", germ, "treat the input as a germ in the local variables x, z");

    auto* orbit = app.add_subcommand("orbit", "closed orbit in the orbit closure");
    add_common(orbit, c);

    auto* certify = app.add_subcommand("certify", "emit or check an instability certificate");
    add_common(certify, c);
    std::string cert_path;
    certify->add_option("--cert", cert_path, "JSON certificate {A, B, swap, rho:{u,v}} to check");

    auto* impl = app.add_subcommand("implicitize", "bidegree-(3,3) equation of a parametrized curve");
    add_common(impl, c);

    auto* divisor = app.add_subcommand("divisor", "divisor class computations");
    std::string div_sub, alpha;
    bool div_json = false;
    divisor->add_option("what", div_sub, "chow, lambda-delta, pullback, discrepancy, polarization, moving-slope, petri")
        ->required()
        ->check(CLI::IsMember({"chow", "lambda-delta", "pullback", "discrepancy", "polarization", "moving-slope", "petri"}));
    divisor->add_option("--alpha", alpha, "rational alpha, e.g. 29/60");
    divisor->add_flag("--json", div_json, "machine-readable output");

    auto* corpus = app.add_subcommand("corpus", "run the fixture corpus and compare with the expected data");
    unsigned long seed = kDefaultCorpusSeed;
    unsigned jobs = 0;
    bool corpus_json_out = false, verbose = false;
    corpus->add_option("--seed", seed, "seed for the random entries");
    corpus->add_option("--jobs", jobs, "worker threads (0: hardware concurrency)");
    corpus->add_flag("--json", corpus_json_out, "machine-readable output");
    corpus->add_flag("-v,--verbose", verbose, "list every entry");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*classify) {
            ropt.truncation = c.truncation;
            ropt.timing = timing;
            const Report r = run_report(read_curve(c), ropt);
            if (c.json) emit(report_json(r));
            else std::cout << report_text(r);
            return r.verdict ? 0 : 1;
        }
        if (*sing) {
            if (germ) {
                const BiPoly f = parse_local(c.input, field_of(c.field));
                const int mu = milnor_number(f, c.truncation);
                const auto t = classify_with_milnor(f, mu);
                const int m = multiplicity(f), r = branches(f);
                if (c.json) {
                    ordered_json j{{"schema_version", kSchemaVersion}, {"germ", f.str()}, {"type", t.str()}, {"milnor", mu},
                                   {"multiplicity", m}, {"branches", r}, {"delta", (mu + r - 1) / 2}};
                    emit(j);
                } else {
                    std::cout << t.str() << ": mult=" << m << " mu=" << mu << " r=" << r << " delta=" << (mu + r - 1) / 2 << "\n";
                }
                return 0;
            }
            ReportOptions o;
            o.truncation = c.truncation;
            const BiForm F = read_curve(c);
            const auto reps = sing_locus(F, {c.truncation, true});
            Report r{F, {}, reps, {}, {}, {}, {}};
            if (c.json) {
                ordered_json j = report_json(r);
                for (const char* k : {"verdict", "closed_orbit", "strata", "stratum"}) j.erase(k);
                emit(j);
            } else {
                std::cout << report_text(r);
            }
            return 0;
        }
        if (*orbit) {
            const BiForm F = read_curve(c);
            const auto v = verdict(F);
            if (v.status == Stability::Unstable) {
                if (c.json) emit({{"schema_version", kSchemaVersion}, {"status", "Unstable"}, {"closed_orbit", nullptr}});
                else std::cout << "status: Unstable (no closed orbit in the semistable locus)\n";
                return 0;
            }
            const auto o = closed_orbit_limit(F, v);
            if (c.json) {
                emit({{"schema_version", kSchemaVersion}, {"status", stability_name(v.status)}, {"closed_orbit", json_io::orbit(o)}});
            } else {
                Report r{F, v, {}, o, {}, {}, {}};
                std::cout << report_text(r);
                std::cout << "representative: " << o.form.str() << "\n";
            }
            return 0;
        }
        if (*certify) {
            const BiForm F = read_curve(c);
            if (!cert_path.empty()) {
                const json cj = read_json_file(cert_path);
                const auto cert = certificate_from_json(cj.contains("certificate") ? cj["certificate"] : cj, F.field());
                const auto chk = check_certificate(F, cert);
                const long mu = mu_min(apply_coord_change(F, cert.g), cert.rho);
                if (c.json) emit({{"schema_version", kSchemaVersion}, {"check", certificate_check_name(chk)}, {"mu", mu}});
                else std::cout << certificate_check_name(chk) << " (minimal weight " << mu << ")\n";
                return chk == CertificateCheck::Invalid ? 1 : 0;
            }
            ReportOptions o;
            o.certify_only = true;
            const Report r = run_report(F, o);
            if (c.json) {
                ordered_json j{{"schema_version", kSchemaVersion}};
                j["status"] = r.verdict ? stability_name(r.verdict->status) : "error";
                j["certificate"] = r.verdict && r.verdict->certificate ? json_io::certificate(*r.verdict->certificate)
                                                                      : ordered_json(nullptr);
                if (r.verdict && r.verdict->certificate)
                    j["check"] = certificate_check_name(check_certificate(F, *r.verdict->certificate));
                j["errors"] = r.errors;
                emit(j);
            } else {
                std::cout << report_text(r);
                if (r.verdict && r.verdict->certificate)
                    std::cout << "check: " << certificate_check_name(check_certificate(F, *r.verdict->certificate)) << "\n";
            }
            return r.verdict ? 0 : 1;
        }
        if (*impl) {
            if (!is_json_path(c.input)) fail(Errc::InvalidArgument, "implicitize needs a parametrization JSON file");
            const json j = read_json_file(c.input);
            const Parametrization phi = parametrization_from_json(j, json_field(j, c));
            const BiForm F = implicitize(phi);
            const bool vanishes = substitute_parametrization(F, phi).is_zero();
            if (c.json) {
                emit({{"schema_version", kSchemaVersion}, {"expression", F.str()}, {"bidegree", {F.a(), F.b()}},
                      {"matrix", json_io::matrix(F)}, {"parametrization_vanishes", vanishes}});
            } else {
                std::cout << F.str() << "\nbidegree (" << F.a() << "," << F.b() << "), parametrization "
                          << (vanishes ? "vanishes identically" : "does NOT vanish") << "\n";
            }
            return vanishes ? 0 : 1;
        }
        if (*divisor) return run_divisor(div_sub, alpha, div_json);
        if (*corpus) {
            const auto results = run_corpus(build_corpus(seed), jobs);
            const auto j = corpus_json(results, seed);
            if (corpus_json_out) {
                emit(j);
            } else {
                for (const auto& r : results) {
                    if (!verbose && r.ok()) continue;
                    std::cout << (r.ok() ? "ok   " : "FAIL ") << r.name << "\n";
                    for (const auto& m : r.mismatches) std::cout << "     " << m << "\n";
                }
                std::cout << "corpus seed " << seed << ": " << j["summary"]["passed"].get<size_t>() << "/"
                          << results.size() << " entries match\n";
            }
            return j["summary"]["failed"].get<size_t>() == 0 ? 0 : 1;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const json::exception& e) {
        std::cerr << "error: PARSE_ERROR: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
