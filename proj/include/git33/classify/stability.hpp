#ifndef GIT33_CLASSIFY_STABILITY_HPP
#define GIT33_CLASSIFY_STABILITY_HPP

#include <optional>
#include <string>
#include <vector>

#include "git33/biform/components.hpp"
#include "git33/biform/local.hpp"
#include "git33/hm/numerical.hpp"
#include "git33/sing/locus.hpp"

namespace git33 {

enum class Stability { Stable, StrictlySemistable, Unstable };

inline const char* stability_name(Stability s) {
    switch (s) {
    case Stability::Stable: return "Stable";
    case Stability::StrictlySemistable: return "StrictlySemistable";
    case Stability::Unstable: return "Unstable";
    }
    return "?";
}

enum class WitnessKind { TriplePoint, RulingContact, NonReduced };

inline const char* witness_kind_name(WitnessKind k) {
    switch (k) {
    case WitnessKind::TriplePoint: return "triple-point";
    case WitnessKind::RulingContact: return "ruling-contact";
    case WitnessKind::NonReduced: return "non-reduced";
    }
    return "?";
}

/// Evidence for strict semistability. Point witnesses carry a weight-zero certificate.
struct Witness {
    WitnessKind kind = WitnessKind::NonReduced;
    std::optional<SurfacePoint> point;
    int orbit = 1;
    std::optional<InstabilityCertificate> certificate;
    std::string note;
};

struct StabilityVerdict {
    Stability status = Stability::Stable;
    std::optional<InstabilityCertificate> certificate;  // Unstable only
    std::string reason;
    std::vector<Witness> evidence;
    bool reduced = true;
};

namespace detail {

inline BiForm ruling_residual(const BiForm& F, const Ruling& L) {
    const BiForm Lf = L.form();
    const Field k = Field::common(F.field(), Lf.field());
    auto q = F.lift(k).divide(Lf.lift(k));
    if (!q) fail(Errc::Paradox, "ruling " + L.str() + " does not divide the form");
    return *q;
}

inline SurfacePoint ruling_point(const Ruling& L, const AlgScalar& u, const AlgScalar& v) {
    const auto [p0, p1] = L.point();
    if (L.family == 0) return SurfacePoint{p0, p1, u, v}.normalized();
    return SurfacePoint{u, v, p0, p1}.normalized();
}

// Moves p to the origin with the ruling through p of L's family becoming X = 0.
inline CoordChange flag_change(const SurfacePoint& p, int family) {
    const CoordChange g = move_to_origin(p);
    return family == 0 ? g : compose(g, CoordChange::swap_factors());
}

inline InstabilityCertificate checked_certificate(const BiForm& F, const CoordChange& g, OneParamSubgroup rho,
                                                  CertificateCheck expect) {
    InstabilityCertificate c{g, rho};
    if (check_certificate(F, c) != expect)
        fail(Errc::Paradox, "constructed certificate with rho " + rho.str() + " does not verify on " + F.str());
    return c;
}

struct RulingAnalysis {
    Ruling ruling;
    bool cube = false;  // residual meets the ruling in a single point
    SurfacePoint point;
    int residual_mult = 0;
};

inline RulingAnalysis analyze_ruling(const BiForm& F, const Ruling& L) {
    RulingAnalysis r;
    r.ruling = L;
    const BiForm R = ruling_residual(F, L);
    const BinaryForm m = restrict_to_ruling(R, L);
    if (m.is_zero() || !m.is_perfect_power()) return r;
    r.cube = true;
    const auto [u, v] = perfect_power_root(m);
    r.point = ruling_point(L, u, v);
    r.residual_mult = multiplicity(local_expand(R, r.point).f);
    return r;
}

// Binary quadratic in (s:t) whose roots are the X-coordinates of C1 cap C2, C1 an irreducible (1,1) form.
inline BinaryForm conic_meet(const BiForm& C1, const BiForm& C2) {
    const Field k = Field::common(C1.field(), C2.field());
    const AlgScalar al = C1.coeff(1, 1).lift(k), be = C1.coeff(1, 0).lift(k), ga = C1.coeff(0, 1).lift(k),
                    de = C1.coeff(0, 0).lift(k);
    // (X, Y, Z, W) = (s, t, -(be s + de t), al s + ga t)
    const UniPoly s(k, {AlgScalar::zero(k), AlgScalar::one(k)}, "s");
    const UniPoly one(k, {AlgScalar::one(k)}, "s");
    const UniPoly Z = -(s * UniPoly(k, {be}, "s") + UniPoly(k, {de}, "s"));
    const UniPoly W = s * UniPoly(k, {al}, "s") + UniPoly(k, {ga}, "s");
    UniPoly acc(k, {AlgScalar::zero(k)}, "s");
    for (int i = 0; i <= 1; ++i)
        for (int j = 0; j <= 1; ++j) {
            const AlgScalar& c = C2.coeff(i, j);
            if (c.is_zero()) continue;
            acc = acc + UniPoly(k, {c.lift(k)}, "s") * (i ? s : one) * (j ? Z : W);
        }
    std::vector<AlgScalar> cs(3, AlgScalar::zero(k));
    for (int e = 0; e <= acc.degree() && e <= 2; ++e) cs[static_cast<size_t>(e)] = acc.coeff(e);
    return BinaryForm(2, cs);
}

inline SurfacePoint conic_point(const BiForm& C1, const AlgScalar& s, const AlgScalar& t) {
    const AlgScalar z = -(C1.coeff(1, 0) * s + C1.coeff(0, 0) * t);
    const AlgScalar w = C1.coeff(1, 1) * s + C1.coeff(0, 1) * t;
    return SurfacePoint{s, t, z, w}.normalized();
}

struct BinaryRoot {
    AlgScalar s, t;
    int mult = 1;
    int orbit = 1;
};

/// Roots of a binary form, one per Galois orbit.
inline std::vector<BinaryRoot> binary_roots(const BinaryForm& m) {
    std::vector<BinaryRoot> out;
    const UniPoly a = m.affine();
    if (a.degree() >= 1)
        for (const auto& fac : factor_univ(a).factors) {
            const RootField rf = adjoin_root(fac.poly);
            out.push_back({rf.root, AlgScalar::one(rf.field), fac.mult, fac.poly.degree()});
        }
    if (const int inf = m.infinity_multiplicity(); inf > 0) out.push_back({AlgScalar(1), AlgScalar(0), inf, 1});
    return out;
}

// Points of C1 cap C2 with intersection multiplicity, one per orbit.
inline std::vector<BinaryRoot> conic_intersections(const BiForm& C1, const BiForm& C2) {
    const BinaryForm q = conic_meet(C1, C2);
    if (q.is_zero()) fail(Errc::NonIsolated, "the two conics share a component");
    return binary_roots(q);
}

// Some point of an irreducible (1,1) form.
inline SurfacePoint point_on_conic(const BiForm& C) { return conic_point(C, AlgScalar(0), AlgScalar(1)); }

inline Witness triple_point_witness(const BiForm& F, const SurfacePoint& p, int orbit) {
    Witness w;
    w.kind = WitnessKind::TriplePoint;
    w.point = p.normalized();
    w.orbit = orbit;
    w.certificate = checked_certificate(F, move_to_origin(*w.point), {1, 1}, CertificateCheck::ValidStrictWitness);
    return w;
}

inline StabilityVerdict unstable(const BiForm& F, const SurfacePoint& p, int family, OneParamSubgroup rho,
                                 std::string reason) {
    StabilityVerdict v;
    v.status = Stability::Unstable;
    v.certificate = checked_certificate(F, flag_change(p, family), rho, CertificateCheck::ValidUnstable);
    v.reason = std::move(reason);
    return v;
}

// Semistable non-reduced forms: a triple conic, or a double conic with a conic residual.
inline void nonreduced_evidence(const BiForm& F, StabilityVerdict& v) {
    const auto comps = irreducible_components(F);
    const Component* dbl = nullptr;
    for (const auto& c : comps)
        if (c.mult >= 2) dbl = &c;
    if (!dbl || dbl->form.a() != 1 || dbl->form.b() != 1)
        fail(Errc::Paradox, "non-reduced form " + F.str() + " passed the ruling tests without a multiple conic");
    Witness nr;
    nr.kind = WitnessKind::NonReduced;
    nr.note = dbl->mult == 3 ? "triple conic" : "double conic";
    v.evidence.push_back(nr);
    if (dbl->mult == 3) {
        v.evidence.push_back(triple_point_witness(F, point_on_conic(dbl->form), 1));
        return;
    }
    const auto L2 = F.divide(dbl->form.pow(2));
    if (!L2) fail(Errc::Paradox, "double conic does not divide the form");
    for (const auto& r : conic_intersections(dbl->form, *L2))
        v.evidence.push_back(triple_point_witness(F, conic_point(dbl->form.lift(r.s.field()), r.s, r.t), r.orbit));
}

} // namespace detail

/// Stable / strictly semistable / unstable for a (3,3) form, via rulings and triple points.
inline StabilityVerdict verdict(const BiForm& F) {
    if (F.is_zero()) fail(Errc::InvalidArgument, "verdict of the zero form");
    if (F.a() != 3 || F.b() != 3) fail(Errc::WrongBidegree, "verdict needs bidegree (3,3)");
    const RulingSplit rs = ruling_factors(F);

    for (const auto& L : rs.rulings)
        if (L.mult >= 2) {
            const SurfacePoint p = detail::ruling_point(L, AlgScalar(0), AlgScalar(1));
            return detail::unstable(F, p, L.family, {4, 1}, "double ruling " + L.str());
        }

    std::vector<detail::RulingAnalysis> contacts;
    for (const auto& L : rs.rulings) {
        auto r = detail::analyze_ruling(F, L);
        if (!r.cube) continue;
        if (r.residual_mult >= 2)
            return detail::unstable(F, r.point, L.family, {2, 1},
                                    "residual of " + L.str() + " meets it only at " + r.point.str() + ", where it is singular");
        contacts.push_back(r);
    }

    StabilityVerdict v;
    for (const auto& r : contacts) {
        Witness w;
        w.kind = WitnessKind::RulingContact;
        w.point = r.point;
        w.orbit = r.ruling.orbit;
        w.certificate = detail::checked_certificate(F, detail::flag_change(r.point, r.ruling.family), {3, 1},
                                                    CertificateCheck::ValidStrictWitness);
        w.note = "residual of " + r.ruling.str() + " has contact 3";
        v.evidence.push_back(w);
    }

    v.reduced = is_reduced(F);
    if (!v.reduced) {
        detail::nonreduced_evidence(F, v);
    } else {
        for (const auto& [p, orbit] : singular_points(F)) {
            const int m = multiplicity(local_expand(F, p).f);
            if (m >= 4) fail(Errc::Paradox, "point of multiplicity " + std::to_string(m) + " on a semistable form");
            if (m == 3) v.evidence.push_back(detail::triple_point_witness(F, p, orbit));
        }
    }
    v.status = v.evidence.empty() ? Stability::Stable : Stability::StrictlySemistable;
    return v;
}

} // namespace git33

#endif
