#ifndef GIT33_CLASSIFY_ORBIT_HPP
#define GIT33_CLASSIFY_ORBIT_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "git33/classify/stability.hpp"
#include "git33/io/parse.hpp"

namespace git33 {

enum class OrbitKind { StableOrbit, MaxDegenerateA5, DCurve, DoubleConic, TripleConic };

inline const char* orbit_kind_name(OrbitKind k) {
    switch (k) {
    case OrbitKind::StableOrbit: return "StableOrbit";
    case OrbitKind::MaxDegenerateA5: return "MaxDegenerateA5";
    case OrbitKind::DCurve: return "DCurve";
    case OrbitKind::DoubleConic: return "DoubleConic";
    case OrbitKind::TripleConic: return "TripleConic";
    }
    return "?";
}

/// Orbit invariants of the D-curve f(XW, YZ) = 0, f = a x^3 + b x^2 z + c x z^2 + d z^3.
/// Generic: a, d != 0, pair (bc, b^3 + c^3) after scaling to a = d = 1.
/// OneZero: exactly one of a, d vanishes; i1 = c^2/(bd) after moving the zero to a.
/// DegenerateXZ: a = d = 0, the orbit of xz(x + z).
struct DCurveInvariants {
    enum class Kind { Generic, OneZero, DegenerateXZ };
    Kind kind = Kind::Generic;
    AlgScalar i1, i2;

    friend bool operator==(const DCurveInvariants& p, const DCurveInvariants& q) {
        return p.kind == q.kind && p.i1 == q.i1 && p.i2 == q.i2;
    }
    std::string str() const {
        switch (kind) {
        case Kind::Generic: return "(" + i1.str() + ", " + i2.str() + ")";
        case Kind::OneZero: return "one-zero " + i1.str();
        case Kind::DegenerateXZ: return "DegenerateXZ";
        }
        return "?";
    }
};

inline DCurveInvariants dcurve_invariants(const AlgScalar& b, const AlgScalar& c) {
    return {DCurveInvariants::Kind::Generic, b * c, b.pow(3) + c.pow(3)};
}

/// Invariants of a cubic with three distinct roots; coefficient k multiplies x^k z^(3-k).
inline DCurveInvariants dcurve_invariants(const BinaryForm& cubic) {
    if (cubic.degree() != 3) fail(Errc::InvalidArgument, "D-curve invariants need a cubic");
    AlgScalar a = cubic.coeff(3), b = cubic.coeff(2), c = cubic.coeff(1), d = cubic.coeff(0);
    const Field k = cubic.field();
    if (a.is_zero() && d.is_zero()) return {DCurveInvariants::Kind::DegenerateXZ, AlgScalar::zero(k), AlgScalar::zero(k)};
    if (d.is_zero()) {
        std::swap(a, d);
        std::swap(b, c);
    }
    if (a.is_zero()) {
        if (b.is_zero()) fail(Errc::InvalidArgument, "cubic has a repeated factor");
        return {DCurveInvariants::Kind::OneZero, c * c / (b * d), AlgScalar::zero(k)};
    }
    return {DCurveInvariants::Kind::Generic, b * c / (a * d), b.pow(3) / (a * a * d) + c.pow(3) / (a * d * d)};
}

struct CrossRatio {
    std::optional<AlgScalar> value;  // nullopt is infinity
    std::optional<AlgScalar> j;      // S3-invariant; nullopt when the value is 0, 1 or infinity
    std::vector<std::string> orbit;  // the S3 orbit, sorted

    std::string str() const { return value ? value->str() : "inf"; }
};

namespace detail {

inline AlgScalar bracket(const std::pair<AlgScalar, AlgScalar>& p, const std::pair<AlgScalar, AlgScalar>& q) {
    return p.first * q.second - q.first * p.second;
}

inline CrossRatio make_cross_ratio(const AlgScalar& num, const AlgScalar& den) {
    CrossRatio cr;
    if (den.is_zero()) {
        cr.orbit = {"0", "1", "inf"};
        return cr;
    }
    const AlgScalar l = num / den;
    cr.value = l;
    const AlgScalar one = AlgScalar::one(l.field());
    if (l.is_zero() || l == one) {
        cr.orbit = {"0", "1", "inf"};
        return cr;
    }
    const AlgScalar m = l * (l - one);
    cr.j = AlgScalar(256) * (l * l - l + one).pow(3) / (m * m);
    std::vector<AlgScalar> vals{l, one - l, l.inverse(), (one - l).inverse(), (l - one) / l, l / (l - one)};
    for (const auto& v : vals) cr.orbit.push_back(v.str());
    std::sort(cr.orbit.begin(), cr.orbit.end());
    cr.orbit.erase(std::unique(cr.orbit.begin(), cr.orbit.end()), cr.orbit.end());
    return cr;
}

// (Z:W) where the (1,1) form C meets the vertical ruling (X:Y) = (c:1), or nullopt if it contains it.
inline std::optional<std::pair<AlgScalar, AlgScalar>> vertical_meet(const BiForm& C, const AlgScalar& c) {
    const AlgScalar zc = C.coeff(1, 1) * c + C.coeff(0, 1);
    const AlgScalar wc = C.coeff(1, 0) * c + C.coeff(0, 0);
    if (zc.is_zero() && wc.is_zero()) return std::nullopt;
    return std::pair{-wc, zc};
}

struct DoubleConicData {
    BiForm L1, L2;
};

inline DoubleConicData split_double_conic(const BiForm& F) {
    if (F.a() != 3 || F.b() != 3) fail(Errc::NotDoubleConic, "a double conic has bidegree (3,3)");
    const auto comps = irreducible_components(F);
    for (const auto& c : comps)
        if (c.mult == 2 && c.form.a() == 1 && c.form.b() == 1) {
            const auto L2 = F.divide(c.form.pow(2));
            if (!L2) fail(Errc::Paradox, "double conic does not divide the form");
            return {c.form, *L2};
        }
    fail(Errc::NotDoubleConic, "no doubled (1,1) component in " + F.str());
}

} // namespace detail

namespace detail {

struct DoubleConicPoints {
    BiForm L1, L2;
    std::vector<std::pair<AlgScalar, AlgScalar>> H;  // (Z:W) of the triple points
};

inline DoubleConicPoints double_conic_points(const BiForm& F) {
    auto [L1, L2] = split_double_conic(F);
    std::vector<std::pair<AlgScalar, AlgScalar>> H;
    for (const auto& r : conic_intersections(L1, L2)) {
        if (r.mult > 1) fail(Errc::NotDoubleConic, "residual conic is tangent to the double conic");
        const BiForm l1 = L1.lift(r.s.field());
        const SurfacePoint p = conic_point(l1, r.s, r.t);
        H.push_back({p.u, p.v});
        if (r.orbit == 2) {
            // the conjugate root of the quadratic
            const BinaryForm q = conic_meet(L1, L2);
            const AlgScalar s2 = -q.coeff(1) / q.coeff(2) - r.s;
            const SurfacePoint p2 = conic_point(l1, s2, AlgScalar::one(r.s.field()));
            H.push_back({p2.u, p2.v});
        }
    }
    if (H.size() != 2) fail(Errc::NotDoubleConic, "residual conic does not meet the double conic in two points");
    return {L1, L2, H};
}

inline std::optional<CrossRatio> cross_ratio_at(const DoubleConicPoints& d, const AlgScalar& c) {
    const auto p1 = vertical_meet(d.L1, c);
    const auto p2 = vertical_meet(d.L2, c);
    if (!p1 || !p2) return std::nullopt;
    if (bracket(*p1, *p2).is_zero() || bracket(*p1, d.H[0]).is_zero() || bracket(*p1, d.H[1]).is_zero())
        return std::nullopt;
    // forced coincidences of the residual with a horizontal ruling are kept; order so the value stays finite
    auto h3 = d.H[0], h4 = d.H[1];
    if (bracket(*p2, h3).is_zero()) std::swap(h3, h4);
    return make_cross_ratio(bracket(*p1, h3) * bracket(*p2, h4), bracket(*p1, h4) * bracket(*p2, h3));
}

} // namespace detail

/// Cross-ratio on the vertical ruling (X:Y) = (c:1) of the points on the double conic, the residual
/// conic and the two horizontal rulings through the triple points, in that order. Nullopt when the
/// ruling is special.
inline std::optional<CrossRatio> cross_ratio_on_ruling(const BiForm& F, const AlgScalar& c) {
    return detail::cross_ratio_at(detail::double_conic_points(F), c);
}

/// The cross-ratio above, checked at two rulings.
inline CrossRatio double_conic_cross_ratio(const BiForm& F) {
    const auto d = detail::double_conic_points(F);
    std::vector<CrossRatio> samples;
    for (long c = 1; c < 64 && samples.size() < 2; ++c)
        if (auto cr = detail::cross_ratio_at(d, AlgScalar(c))) samples.push_back(*cr);
    if (samples.size() < 2) fail(Errc::NotDoubleConic, "no generic vertical ruling found");
    if (samples[0].value.has_value() != samples[1].value.has_value() ||
        (samples[0].value && *samples[0].value != *samples[1].value))
        fail(Errc::Paradox, "cross-ratio differs between rulings: " + samples[0].str() + " vs " + samples[1].str());
    return samples[0];
}

struct ClosedOrbitRep {
    OrbitKind kind = OrbitKind::StableOrbit;
    BiForm form;  // a member of the closed orbit
    std::optional<DCurveInvariants> dcurve;
    std::optional<CrossRatio> cross_ratio;
};

inline BiForm max_degenerate_a5() { return parse_biform("X*Y*(X*W^3 + Y*Z^3)"); }

inline BiForm triple_conic_form() { return parse_biform("(X*W - Y*Z)^3"); }

namespace detail {

// Closed orbit of a rho_{1,1} limit f(XW, YZ).
inline ClosedOrbitRep classify_cone_limit(const BiForm& L) {
    const Field k = L.field();
    std::vector<AlgScalar> c;
    for (int e = 0; e <= 3; ++e) c.push_back(L.coeff(e, 3 - e).lift(k));
    const BinaryForm cubic(3, c);
    ClosedOrbitRep rep;
    rep.form = L;
    const auto roots = binary_roots(cubic);
    int top = 0;
    for (const auto& r : roots) top = std::max(top, r.mult);
    for (const auto& r : roots)
        if (r.mult >= 2 && (r.s.is_zero() || r.t.is_zero()))
            fail(Errc::Paradox, "triple-point limit " + L.str() + " contains a double ruling");
    if (top == 1) {
        rep.kind = OrbitKind::DCurve;
        rep.dcurve = dcurve_invariants(cubic);
    } else if (top == 2) {
        rep.kind = OrbitKind::DoubleConic;
        rep.cross_ratio = double_conic_cross_ratio(L);
    } else {
        rep.kind = OrbitKind::TripleConic;
    }
    return rep;
}

inline bool same_orbit_data(const ClosedOrbitRep& a, const ClosedOrbitRep& b) {
    if (a.kind != b.kind) return false;
    if (a.dcurve && b.dcurve && !(*a.dcurve == *b.dcurve)) return false;
    if (a.cross_ratio && b.cross_ratio) {
        const auto &ja = a.cross_ratio->j, &jb = b.cross_ratio->j;
        if (ja.has_value() != jb.has_value()) return false;
        if (ja && *ja != *jb) return false;
    }
    return true;
}

} // namespace detail

/// The closed orbit in the orbit closure of a semistable form.
inline ClosedOrbitRep closed_orbit_limit(const BiForm& F, const StabilityVerdict& v) {
    if (v.status == Stability::Unstable) fail(Errc::InvalidArgument, "unstable forms have no closed orbit");
    if (v.status == Stability::Stable) return {OrbitKind::StableOrbit, F, std::nullopt, std::nullopt};
    std::vector<ClosedOrbitRep> reps;
    for (const auto& w : v.evidence) {
        if (w.kind == WitnessKind::RulingContact) {
            reps.push_back({OrbitKind::MaxDegenerateA5, max_degenerate_a5(), std::nullopt, std::nullopt});
        } else if (w.kind == WitnessKind::TriplePoint) {
            reps.push_back(detail::classify_cone_limit(limit_under_1ps(F, {1, 1}, move_to_origin(*w.point))));
        }
    }
    if (!v.reduced) {
        const auto comps = irreducible_components(F);
        const bool triple = std::any_of(comps.begin(), comps.end(), [](const Component& c) { return c.mult == 3; });
        if (triple) {
            reps.insert(reps.begin(), {OrbitKind::TripleConic, F, std::nullopt, std::nullopt});
        } else {
            const auto [L1, L2] = detail::split_double_conic(F);
            bool tangent = false;
            for (const auto& r : detail::conic_intersections(L1, L2)) tangent = tangent || r.mult > 1;
            if (tangent) reps.insert(reps.begin(), {OrbitKind::TripleConic, triple_conic_form(), std::nullopt, std::nullopt});
            else reps.insert(reps.begin(), {OrbitKind::DoubleConic, F, std::nullopt, double_conic_cross_ratio(F)});
        }
    }
    if (reps.empty()) fail(Errc::Paradox, "strictly semistable verdict without usable evidence");
    for (size_t i = 1; i < reps.size(); ++i)
        if (!detail::same_orbit_data(reps[0], reps[i]))
            fail(Errc::Paradox, std::string("inconsistent closed orbits: ") + orbit_kind_name(reps[0].kind) + " vs " +
                                    orbit_kind_name(reps[i].kind));
    return reps[0];
}

inline ClosedOrbitRep closed_orbit_limit(const BiForm& F) { return closed_orbit_limit(F, verdict(F)); }

} // namespace git33

#endif
