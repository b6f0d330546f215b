#ifndef GIT33_CLASSIFY_ORACLE_HPP
#define GIT33_CLASSIFY_ORACLE_HPP

#include <optional>
#include <vector>

#include "git33/classify/stability.hpp"

namespace git33 {

struct OracleResult {
    Stability status = Stability::Stable;
    std::optional<SurfacePoint> point;
    OneParamSubgroup rho;
    size_t candidates = 0;
};

/// Points worth translating to the origin: singular points, points where a ruling meets the rest
/// of the curve, and a point on every multiple component.
inline std::vector<SurfacePoint> candidate_points(const BiForm& F) {
    std::vector<SurfacePoint> out;
    auto add = [&](const SurfacePoint& p) {
        const SurfacePoint q = p.normalized();
        for (const auto& o : out)
            if (o.same_as(q)) return;
        out.push_back(q);
    };
    auto comps = irreducible_components(F);
    std::vector<Component> distinct;
    for (const auto& c : comps) {
        distinct.push_back({c.form, 1});
        if (c.mult < 2) continue;
        for (long x = 0;; ++x) {
            Ruling L;
            L.family = c.form.b() == 0 ? 1 : 0;
            L.alpha = AlgScalar(1);
            L.beta = AlgScalar(-x);
            const BinaryForm m = restrict_to_ruling(c.form, L);
            if (m.is_zero()) continue;
            for (const auto& r : detail::binary_roots(m)) add(detail::ruling_point(L, r.s, r.t));
            break;
        }
    }
    const BiForm R = product_of_components(distinct, F.field());
    for (const auto& [p, orbit] : singular_points(R)) add(p);
    const RulingSplit rs = ruling_factors(F);
    for (const auto& L : rs.rulings) {
        BiForm res = F.lift(Field::common(F.field(), L.form().field()));
        for (int k = 0; k < L.mult; ++k) res = detail::ruling_residual(res, L);
        const BinaryForm m = restrict_to_ruling(res, L);
        if (m.is_zero()) continue;
        for (const auto& r : detail::binary_roots(m)) add(detail::ruling_point(L, r.s, r.t));
    }
    return out;
}

/// Brute-force Hilbert-Mumford search over candidate points and primitive rays with |u|, |v| <= bound.
inline OracleResult brute_force_stability(const BiForm& F, long bound = 4) {
    OracleResult res;
    const auto pts = candidate_points(F);
    res.candidates = pts.size();
    const auto rays = primitive_rays(bound);
    for (const auto& p : pts) {
        const BiForm G = apply_coord_change(F, move_to_origin(p));
        for (const auto& rho : rays) {
            const long m = mu_min(G, rho);
            if (m > 0) return {Stability::Unstable, p, rho, pts.size()};
            if (m == 0 && res.status == Stability::Stable) {
                res.status = Stability::StrictlySemistable;
                res.point = p;
                res.rho = rho;
            }
        }
    }
    return res;
}

} // namespace git33

#endif
