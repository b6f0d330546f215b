#ifndef GIT33_SING_LOCUS_HPP
#define GIT33_SING_LOCUS_HPP

#include <numeric>
#include <string>
#include <vector>

#include "git33/biform/components.hpp"
#include "git33/biform/local.hpp"
#include "git33/sing/singularity.hpp"

namespace git33 {

struct SingularityReport {
    SurfacePoint point;
    int orbit = 1;  // number of Galois conjugates of the point
    int multiplicity = 0;
    int milnor = 0;
    int branches = 0;
    int delta = 0;
    SingularityType type;
    ConeShape cone = ConeShape::Other;
    bool separating = false;
};

struct LocusOptions {
    int truncation = kDefaultTruncation;
    bool separating = true;
};

namespace detail {

/// Res_z(f, g) as a polynomial in x, by evaluation and interpolation.
inline UniPoly resultant_z(const BiPoly& f, const BiPoly& g) {
    const Field k = Field::common(f.field(), g.field());
    const int n = f.deg_z(), m = g.deg_z();
    const int D = f.deg_x() * m + g.deg_x() * n;
    std::vector<AlgScalar> xs, ys;
    for (int i = 0; i <= D; ++i) {
        const AlgScalar xv(static_cast<long>(i));
        xs.push_back(xv);
        ys.push_back(resultant(f.at_x(xv).lift(k), g.at_x(xv).lift(k), n, m));
    }
    return interpolate(xs, ys, k, "x");
}

// Polynomial in x vanishing at the x-coordinate of every common zero of f, fx, fz.
inline UniPoly eliminate_z(const BiPoly& f, const BiPoly& fx, const BiPoly& fz) {
    const BiPoly* gens[3] = {&f, &fx, &fz};
    std::optional<UniPoly> acc;
    for (int a = 0; a < 3; ++a)
        for (int b = a + 1; b < 3; ++b) {
            const BiPoly& g = *gens[a];
            const BiPoly& h = *gens[b];
            if (g.is_zero() || h.is_zero()) continue;
            UniPoly c = (g.deg_z() == 0 && h.deg_z() == 0) ? gcd_univ(g.z_coeff(0), h.z_coeff(0)) : resultant_z(g, h);
            if (c.is_zero()) continue;
            acc = acc ? gcd_univ(*acc, c) : c;
        }
    if (!acc) fail(Errc::NonIsolated, "elimination degenerated; singular locus is not finite");
    return *acc;
}

inline UniPoly gcd_nonzero(const std::vector<UniPoly>& ps) {
    std::optional<UniPoly> acc;
    for (const auto& p : ps) {
        if (p.is_zero()) continue;
        acc = acc ? gcd_univ(*acc, p) : p;
    }
    if (!acc) fail(Errc::NonIsolated, "a whole line of singular points");
    return *acc;
}

// Roots of a univariate polynomial as Galois-orbit representatives: (root, orbit size).
inline std::vector<std::pair<AlgScalar, int>> root_orbits(const UniPoly& h) {
    std::vector<std::pair<AlgScalar, int>> out;
    if (h.degree() < 1) return out;
    for (const auto& fac : factor_univ(h).factors) {
        const RootField rf = adjoin_root(fac.poly);
        out.emplace_back(rf.root, fac.poly.degree());
    }
    return out;
}

inline BiForm flip_xy(const BiForm& F) {
    BiForm G(F.a(), F.b(), F.field());
    for (int i = 0; i <= F.a(); ++i)
        for (int j = 0; j <= F.b(); ++j) G.set(F.a() - i, j, F.coeff(i, j));
    return G;
}
inline BiForm flip_zw(const BiForm& F) {
    BiForm G(F.a(), F.b(), F.field());
    for (int i = 0; i <= F.a(); ++i)
        for (int j = 0; j <= F.b(); ++j) G.set(i, F.b() - j, F.coeff(i, j));
    return G;
}

} // namespace detail

/// Singular points of F as (point, Galois orbit size), one representative per orbit.
inline std::vector<std::pair<SurfacePoint, int>> singular_points(const BiForm& F) {
    std::vector<std::pair<SurfacePoint, int>> out;
    const Field k = F.field();
    const AlgScalar one = AlgScalar::one(k), zero = AlgScalar::zero(k);

    // chart Y = W = 1
    {
        const BiPoly f = F.dehomogenize(), fx = f.dx(), fz = f.dz();
        const UniPoly R = detail::eliminate_z(f, fx, fz);
        if (R.degree() >= 1) {
            for (const auto& fac : factor_univ(R).factors) {
                const RootField rx = adjoin_root(fac.poly, "", false);
                const AlgScalar& x0 = rx.root;
                const UniPoly h =
                    detail::gcd_nonzero({f.lift(rx.field).at_x(x0), fx.lift(rx.field).at_x(x0), fz.lift(rx.field).at_x(x0)});
                if (h.degree() < 1) continue;
                if (fac.poly.degree() > 1) check_tower_limits(k, fac.poly.degree());
                for (const auto& [z0, oz] : detail::root_orbits(h))
                    out.push_back({{x0.lift(z0.field()), AlgScalar::one(z0.field()), z0, AlgScalar::one(z0.field())},
                                   fac.poly.degree() * oz});
            }
        }
    }
    // Y = 0, W = 1
    {
        const BiPoly g = detail::flip_xy(F).dehomogenize();
        const AlgScalar x0 = zero;
        const UniPoly h = detail::gcd_nonzero({g.at_x(x0), g.dx().at_x(x0), g.dz().at_x(x0)});
        for (const auto& [z0, oz] : detail::root_orbits(h))
            out.push_back({{AlgScalar::one(z0.field()), AlgScalar::zero(z0.field()), z0, AlgScalar::one(z0.field())}, oz});
    }
    // Y = 1, W = 0
    {
        const BiPoly g = detail::flip_zw(F).dehomogenize();
        const UniPoly h = detail::gcd_nonzero({g.at_z(zero), g.dx().at_z(zero), g.dz().at_z(zero)});
        for (const auto& [x0, ox] : detail::root_orbits(h))
            out.push_back({{x0, AlgScalar::one(x0.field()), AlgScalar::one(x0.field()), AlgScalar::zero(x0.field())}, ox});
    }
    // Y = W = 0
    {
        const BiPoly g = detail::flip_zw(detail::flip_xy(F)).dehomogenize();
        if (g.coeff(0, 0).is_zero() && g.coeff(1, 0).is_zero() && g.coeff(0, 1).is_zero())
            out.push_back({{one, zero, one, zero}, 1});
    }
    return out;
}

/// Whether removing the point from the incidence graph of the components disconnects the curve.
/// Components are taken over the field of the point.
inline bool is_separating(const BiForm& F, const SurfacePoint& p, int cap = kDefaultTruncation) {
    const Field k = Field::common(F.field(), p.field());
    const auto comps = irreducible_components(F, k);
    for (const auto& c : comps)
        if (c.mult > 1) fail(Errc::NonReduced, "separating test needs a reduced curve");
    const size_t n = comps.size();
    if (n <= 1) return false;
    std::vector<BiPoly> local;
    std::vector<bool> through;
    for (const auto& c : comps) {
        local.push_back(local_expand(c.form, p).f);
        through.push_back(local.back().coeff(0, 0).is_zero());
    }
    std::vector<size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            const int global = comps[i].form.a() * comps[j].form.b() + comps[j].form.a() * comps[i].form.b();
            const int at_p = through[i] && through[j] ? intersection_multiplicity(local[i], local[j], cap) : 0;
            if (global > at_p) parent[find(i)] = find(j);
        }
    for (size_t i = 1; i < n; ++i)
        if (find(i) != find(0)) return true;
    return false;
}

/// Full local report at one point of a reduced curve.
inline SingularityReport singularity_report(const BiForm& F, const SurfacePoint& p, int orbit = 1,
                                            const LocusOptions& opt = {}) {
    SingularityReport r;
    r.point = p.normalized();
    r.orbit = orbit;
    const BiPoly f = local_expand(F, p).f;
    r.multiplicity = multiplicity(f);
    if (r.multiplicity == 0) fail(Errc::NotOnCurve, "point " + r.point.str() + " is not on the curve");
    r.cone = tangent_cone_shape(f).shape;
    r.milnor = milnor_number(f, opt.truncation);
    r.branches = branches(f);
    if ((r.milnor + r.branches - 1) % 2 != 0)
        fail(Errc::Paradox, "mu + r - 1 is odd at " + r.point.str());
    r.delta = (r.milnor + r.branches - 1) / 2;
    r.type = classify_with_milnor(f, r.milnor);
    if (opt.separating && r.multiplicity >= 2) r.separating = is_separating(F, p, opt.truncation);
    return r;
}

/// All singular points of a reduced form with their reports.
inline std::vector<SingularityReport> sing_locus(const BiForm& F, const LocusOptions& opt = {}) {
    if (F.is_zero()) fail(Errc::InvalidArgument, "singular locus of the zero form");
    if (!is_reduced(F)) fail(Errc::NonReduced, "form " + F.str() + " is not reduced");
    std::vector<SingularityReport> out;
    for (const auto& [p, orbit] : singular_points(F)) out.push_back(singularity_report(F, p, orbit, opt));
    return out;
}

} // namespace git33

#endif
