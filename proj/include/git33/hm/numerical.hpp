#ifndef GIT33_HM_NUMERICAL_HPP
#define GIT33_HM_NUMERICAL_HPP

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "git33/biform/coord_change.hpp"

namespace git33 {

/// rho_{u,v}: t.(X, Y, Z, W) = (t^u X, t^-u Y, t^v Z, t^-v W).
struct OneParamSubgroup {
    long u = 0, v = 0;

    OneParamSubgroup primitive() const {
        const long g = std::gcd(u, v);
        return g == 0 ? *this : OneParamSubgroup{u / g, v / g};
    }
    std::string str() const { return "(" + std::to_string(u) + "," + std::to_string(v) + ")"; }
    friend bool operator==(const OneParamSubgroup& a, const OneParamSubgroup& b) { return a.u == b.u && a.v == b.v; }
};

/// Weight of X^i Y^(a-i) Z^j W^(b-j); F is destabilized when every support weight is positive.
inline long monomial_weight(int i, int j, int a, int b, const OneParamSubgroup& rho) {
    return static_cast<long>(2 * i - a) * rho.u + static_cast<long>(2 * j - b) * rho.v;
}

struct WeightTable {
    int a = 3, b = 3;
    OneParamSubgroup rho;
    std::vector<std::vector<long>> weight;  // weight[i][j]
    std::vector<std::pair<int, int>> positive, zero, negative;
};

inline WeightTable weight_table(int a, int b, const OneParamSubgroup& rho) {
    if (rho.u == 0 && rho.v == 0) fail(Errc::InvalidArgument, "trivial one-parameter subgroup");
    WeightTable t{a, b, rho, {}, {}, {}, {}};
    t.weight.assign(static_cast<size_t>(a) + 1, std::vector<long>(static_cast<size_t>(b) + 1));
    for (int i = 0; i <= a; ++i)
        for (int j = 0; j <= b; ++j) {
            const long w = monomial_weight(i, j, a, b, rho);
            t.weight[static_cast<size_t>(i)][static_cast<size_t>(j)] = w;
            (w > 0 ? t.positive : w == 0 ? t.zero : t.negative).emplace_back(i, j);
        }
    return t;
}

/// Minimum weight over the support of F.
inline long mu_min(const BiForm& F, const OneParamSubgroup& rho) {
    if (F.is_zero()) fail(Errc::InvalidArgument, "mu of the zero form");
    long m = 0;
    bool first = true;
    for (auto [i, j] : F.support()) {
        const long w = monomial_weight(i, j, F.a(), F.b(), rho);
        if (first || w < m) m = w;
        first = false;
    }
    return m;
}

enum class OriginPosition { Interior, Boundary, Outside };

inline const char* origin_position_name(OriginPosition p) {
    switch (p) {
    case OriginPosition::Interior: return "Interior";
    case OriginPosition::Boundary: return "Boundary";
    case OriginPosition::Outside: return "Outside";
    }
    return "?";
}

struct StatePolytope {
    std::vector<std::pair<long, long>> vertices;  // counterclockwise, starting at the lexicographic minimum
    OriginPosition origin = OriginPosition::Outside;
};

namespace detail {

using IPt = std::pair<long, long>;

inline long cross(const IPt& o, const IPt& a, const IPt& b) {
    return (a.first - o.first) * (b.second - o.second) - (a.second - o.second) * (b.first - o.first);
}

/// Monotone chain; collinear boundary points are dropped.
inline std::vector<IPt> convex_hull(std::vector<IPt> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() <= 1) return pts;
    std::vector<IPt> h(2 * pts.size());
    size_t k = 0;
    for (const auto& p : pts) {
        while (k >= 2 && cross(h[k - 2], h[k - 1], p) <= 0) --k;
        h[k++] = p;
    }
    for (size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
        while (k >= t && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    return h;
}

} // namespace detail

inline StatePolytope state_polytope(const BiForm& F) {
    if (F.is_zero()) fail(Errc::InvalidArgument, "state polytope of the zero form");
    std::vector<detail::IPt> pts;
    for (auto [i, j] : F.support()) pts.emplace_back(2 * i - F.a(), 2 * j - F.b());
    StatePolytope sp;
    sp.vertices = detail::convex_hull(pts);
    const detail::IPt o{0, 0};
    const auto& v = sp.vertices;
    if (v.size() == 1) {
        sp.origin = v[0] == o ? OriginPosition::Boundary : OriginPosition::Outside;
    } else if (v.size() == 2) {
        const bool collinear = detail::cross(v[0], v[1], o) == 0;
        const bool between = std::min(v[0].first, v[1].first) <= 0 && 0 <= std::max(v[0].first, v[1].first) &&
                             std::min(v[0].second, v[1].second) <= 0 && 0 <= std::max(v[0].second, v[1].second);
        sp.origin = collinear && between ? OriginPosition::Boundary : OriginPosition::Outside;
    } else {
        bool on_edge = false;
        sp.origin = OriginPosition::Interior;
        for (size_t k = 0; k < v.size(); ++k) {
            const long c = detail::cross(v[k], v[(k + 1) % v.size()], o);
            if (c < 0) {
                sp.origin = OriginPosition::Outside;
                break;
            }
            if (c == 0) on_edge = true;
        }
        if (sp.origin == OriginPosition::Interior && on_edge) sp.origin = OriginPosition::Boundary;
    }
    return sp;
}

/// Flat limit under rho after applying g: the minimal-weight part of g.F.
inline BiForm limit_under_1ps(const BiForm& F, const OneParamSubgroup& rho, const CoordChange& g = CoordChange::identity()) {
    const BiForm G = apply_coord_change(F, g);
    const long m = mu_min(G, rho);
    BiForm L(G.a(), G.b(), G.field());
    for (auto [i, j] : G.support())
        if (monomial_weight(i, j, G.a(), G.b(), rho) == m) L.set(i, j, G.coeff(i, j));
    return L;
}

struct InstabilityCertificate {
    CoordChange g;
    OneParamSubgroup rho;
};

enum class CertificateCheck { ValidUnstable, ValidStrictWitness, Invalid };

inline const char* certificate_check_name(CertificateCheck c) {
    switch (c) {
    case CertificateCheck::ValidUnstable: return "ValidUnstable";
    case CertificateCheck::ValidStrictWitness: return "ValidStrictWitness";
    case CertificateCheck::Invalid: return "Invalid";
    }
    return "?";
}

inline CertificateCheck check_certificate(const BiForm& F, const InstabilityCertificate& cert) {
    const long m = mu_min(apply_coord_change(F, cert.g), cert.rho);
    if (m > 0) return CertificateCheck::ValidUnstable;
    if (m == 0) return CertificateCheck::ValidStrictWitness;
    return CertificateCheck::Invalid;
}

/// Primitive (u, v) with |u|, |v| <= bound, not both zero.
inline std::vector<OneParamSubgroup> primitive_rays(long bound) {
    std::vector<OneParamSubgroup> out;
    for (long u = -bound; u <= bound; ++u)
        for (long v = -bound; v <= bound; ++v)
            if ((u != 0 || v != 0) && std::gcd(u, v) == 1) out.push_back({u, v});
    return out;
}

} // namespace git33

#endif
