#ifndef GIT33_BIFORM_COMPONENTS_HPP
#define GIT33_BIFORM_COMPONENTS_HPP

#include <algorithm>
#include <vector>

#include "git33/biform/rulings.hpp"

namespace git33 {

struct Component {
    BiForm form;  // normalized, irreducible over the requested field
    int mult;
};

namespace detail {

inline std::vector<Component> content_components(const BiForm& content, int family, const Field& k) {
    std::vector<Component> out;
    const BinaryForm c = family == 0 ? content.column(0) : content.row(0);
    if (c.degree() == 0) return out;
    const UniPoly g = c.affine().lift(k);
    if (g.degree() > 0) {
        for (const auto& fac : factor_univ(g).factors) {
            const int d = fac.poly.degree();
            BiForm f = family == 0 ? BiForm(d, 0, k) : BiForm(0, d, k);
            for (int i = 0; i <= d; ++i) {
                if (family == 0) f.set(i, 0, fac.poly.coeff(i));
                else f.set(0, i, fac.poly.coeff(i));
            }
            out.push_back({f.normalized(), fac.mult});
        }
    }
    if (const int inf = c.infinity_multiplicity(); inf > 0) {
        BiForm f = family == 0 ? BiForm(1, 0, k) : BiForm(0, 1, k);
        f.set(0, 0, AlgScalar::one(k));
        out.push_back({f, inf});
    }
    return out;
}

inline BiPoly inverse_kronecker(const UniPoly& u, int D) {
    BiPoly h(u.field());
    for (int e = 0; e <= u.degree(); ++e) h.add_term(e % D, e / D, u.coeff(e));
    return h;
}

inline std::vector<Component> primitive_components(BiPoly p, const Field& k) {
    std::vector<Component> out;
    while (p.total_degree() > 0) {
        const int D = p.deg_x() + 1;
        std::vector<AlgScalar> uc(static_cast<size_t>(p.deg_x() + D * p.deg_z()) + 1, AlgScalar::zero(k));
        for (const auto& [key, c] : p.terms()) uc[static_cast<size_t>(key.first + D * key.second)] += c;
        const UniPoly u(k, uc, "t");
        std::vector<UniPoly> items;
        for (const auto& fac : factor_univ(u).factors)
            for (int m = 0; m < fac.mult; ++m) items.push_back(fac.poly);
        bool found = false;
        const size_t n = items.size();
        for (size_t s = 1; s <= n && !found; ++s) {
            std::vector<size_t> idx(s);
            for (size_t i = 0; i < s; ++i) idx[i] = i;
            for (;;) {
                UniPoly prod = UniPoly::constant(AlgScalar::one(k), "t");
                for (auto i : idx) prod = prod * items[i];
                const BiPoly h = inverse_kronecker(prod, D);
                if (h.deg_x() <= p.deg_x() && h.deg_z() <= p.deg_z() && h.total_degree() > 0) {
                    if (auto q = BiPoly::divide(p, h)) {
                        int mult = 0;
                        while (q) {
                            p = *q;
                            ++mult;
                            q = BiPoly::divide(p, h);
                        }
                        out.push_back({BiForm::from_bipoly(h, h.deg_x(), h.deg_z()).normalized(), mult});
                        found = true;
                        break;
                    }
                }
                size_t pos = s;
                while (pos > 0 && idx[pos - 1] == n - s + pos - 1) --pos;
                if (pos == 0) break;
                ++idx[pos - 1];
                for (size_t i = pos; i < s; ++i) idx[i] = idx[i - 1] + 1;
            }
        }
        if (!found) fail(Errc::FactorizationIncomplete, "no bivariate factor recovered from " + p.str());
    }
    return out;
}

inline bool component_less(const Component& x, const Component& y) {
    if (x.form.a() != y.form.a()) return x.form.a() < y.form.a();
    if (x.form.b() != y.form.b()) return x.form.b() < y.form.b();
    const std::string sx = x.form.str(), sy = y.form.str();
    if (sx != sy) return sx < sy;
    return x.mult < y.mult;
}

} // namespace detail

/// Irreducible factors over `k` (a field containing F's field) with multiplicities.
inline std::vector<Component> irreducible_components(const BiForm& F, const Field& k) {
    if (F.is_zero()) fail(Errc::InvalidArgument, "components of the zero form");
    const BiForm G = F.lift(Field::common(F.field(), k));
    const Field kk = G.field();
    const RulingSplit rs = split_contents(G);
    std::vector<Component> out = detail::content_components(rs.content_xy, 0, kk);
    for (auto& c : detail::content_components(rs.content_zw, 1, kk)) out.push_back(std::move(c));
    for (auto& c : detail::primitive_components(rs.residual.dehomogenize(), kk)) out.push_back(std::move(c));
    std::sort(out.begin(), out.end(), detail::component_less);
    return out;
}

inline std::vector<Component> irreducible_components(const BiForm& F) { return irreducible_components(F, F.field()); }

inline bool is_reduced(const BiForm& F) {
    for (const auto& c : irreducible_components(F))
        if (c.mult > 1) return false;
    return true;
}

/// Multiplies the components back together, for reconstruction checks.
inline BiForm product_of_components(const std::vector<Component>& comps, const Field& k) {
    BiForm r(0, 0, k);
    r.set(0, 0, AlgScalar::one(k));
    for (const auto& c : comps) r = r * c.form.pow(static_cast<unsigned>(c.mult));
    return r;
}

} // namespace git33

#endif
