#ifndef GIT33_BIFORM_RULINGS_HPP
#define GIT33_BIFORM_RULINGS_HPP

#include <string>
#include <vector>

#include "git33/biform/coord_change.hpp"

namespace git33 {

/// A ruling alpha*X + beta*Y (family 0, class (1,0)) or alpha*Z + beta*W (family 1, class (0,1)).
/// Irrational rulings are reported once per Galois orbit.
struct Ruling {
    int family = 0;
    AlgScalar alpha, beta;
    int mult = 1;
    int orbit = 1;  // number of conjugate rulings represented

    /// The point of the corresponding P1 cut out by the ruling.
    std::pair<AlgScalar, AlgScalar> point() const { return {-beta, alpha}; }

    BiForm form() const {
        const Field f = Field::common(alpha.field(), beta.field());
        BiForm L = family == 0 ? BiForm(1, 0, f) : BiForm(0, 1, f);
        if (family == 0) {
            L.set(1, 0, alpha);
            L.set(0, 0, beta);
        } else {
            L.set(0, 1, alpha);
            L.set(0, 0, beta);
        }
        return L;
    }

    std::string str() const {
        const char* u = family == 0 ? "X" : "Z";
        const char* v = family == 0 ? "Y" : "W";
        auto term = [](const AlgScalar& c, const char* var) -> std::string {
            if (c.is_zero()) return "";
            if (c.is_one()) return var;
            if (c.is_rational()) return c.str() + "*" + var;
            return "(" + c.str() + ")*" + var;
        };
        std::string a = term(alpha, u), b = term(beta, v);
        if (a.empty()) return b;
        if (b.empty()) return a;
        return a + " + " + b;
    }
};

struct RulingSplit {
    std::vector<Ruling> rulings;
    BiForm content_xy;  // bidegree (k, 0)
    BiForm content_zw;  // bidegree (0, l)
    BiForm residual;    // F / (content_xy * content_zw), over F's field
};

namespace detail {

// gcd over the coefficient forms of one family, as (affine gcd, power of the second variable)
inline BinaryForm family_content(const std::vector<BinaryForm>& forms) {
    UniPoly g;
    bool have = false;
    int inf = -1;
    Field f;
    for (const auto& bf : forms) {
        f = Field::common(f, bf.field());
        if (bf.is_zero()) continue;
        g = have ? gcd_univ(g, bf.affine()) : bf.affine().monic();
        have = true;
        const int m = bf.infinity_multiplicity();
        inf = inf < 0 ? m : std::min(inf, m);
    }
    if (!have) fail(Errc::InvalidArgument, "content of the zero form");
    // V^inf * g has the same affine coefficients as g
    const int k = g.degree() + inf;
    std::vector<AlgScalar> c(static_cast<size_t>(k) + 1, AlgScalar::zero(f));
    for (int i = 0; i <= g.degree(); ++i) c[static_cast<size_t>(i)] = g.coeff(i);
    return BinaryForm(k, c);
}

inline std::vector<Ruling> rulings_of_content(const BinaryForm& c, int family) {
    std::vector<Ruling> out;
    if (c.degree() == 0) return out;
    const UniPoly g = c.affine();
    if (g.degree() > 0) {
        for (const auto& fac : factor_univ(g).factors) {
            Ruling r;
            r.family = family;
            r.mult = fac.mult;
            r.orbit = fac.poly.degree();
            const RootField rf = adjoin_root(fac.poly);
            r.alpha = AlgScalar::one(rf.field);
            r.beta = -rf.root;
            out.push_back(r);
        }
    }
    if (const int inf = c.infinity_multiplicity(); inf > 0) {
        Ruling r;
        r.family = family;
        r.mult = inf;
        r.alpha = AlgScalar(0);
        r.beta = AlgScalar(1);
        out.push_back(r);
    }
    return out;
}

} // namespace detail

/// Ruling contents and residual, without locating the individual rulings.
inline RulingSplit split_contents(const BiForm& F) {
    if (F.is_zero()) fail(Errc::InvalidArgument, "ruling factors of the zero form");
    std::vector<BinaryForm> cols, rows;
    for (int j = 0; j <= F.b(); ++j) cols.push_back(F.column(j));
    for (int i = 0; i <= F.a(); ++i) rows.push_back(F.row(i));
    const BinaryForm cx = detail::family_content(cols);
    const BinaryForm cz = detail::family_content(rows);
    RulingSplit out;
    out.content_xy = BiForm(cx.degree(), 0, F.field());
    for (int i = 0; i <= cx.degree(); ++i) out.content_xy.set(i, 0, cx.coeff(i));
    out.content_zw = BiForm(0, cz.degree(), F.field());
    for (int j = 0; j <= cz.degree(); ++j) out.content_zw.set(0, j, cz.coeff(j));
    auto q = F.divide(out.content_xy * out.content_zw);
    if (!q) fail(Errc::InvalidArgument, "internal: content does not divide the form");
    out.residual = *q;
    return out;
}

/// All ruling factors with multiplicities, and the residual form.
inline RulingSplit ruling_factors(const BiForm& F) {
    RulingSplit out = split_contents(F);
    out.rulings = detail::rulings_of_content(out.content_xy.column(0), 0);
    for (auto& r : detail::rulings_of_content(out.content_zw.row(0), 1)) out.rulings.push_back(std::move(r));
    return out;
}

/// F restricted to the ruling L: a binary form in the other factor's coordinates.
inline BinaryForm restrict_to_ruling(const BiForm& F, const Ruling& L) {
    const auto [p0, p1] = L.point();
    const Field f = Field::common(F.field(), Field::common(p0.field(), p1.field()));
    if (L.family == 0) {
        std::vector<AlgScalar> c;
        for (int j = 0; j <= F.b(); ++j) {
            AlgScalar acc = AlgScalar::zero(f);
            for (int i = 0; i <= F.a(); ++i)
                acc += F.coeff(i, j) * p0.pow(static_cast<unsigned>(i)) * p1.pow(static_cast<unsigned>(F.a() - i));
            c.push_back(acc);
        }
        return BinaryForm(F.b(), c);
    }
    std::vector<AlgScalar> c;
    for (int i = 0; i <= F.a(); ++i) {
        AlgScalar acc = AlgScalar::zero(f);
        for (int j = 0; j <= F.b(); ++j)
            acc += F.coeff(i, j) * p0.pow(static_cast<unsigned>(j)) * p1.pow(static_cast<unsigned>(F.b() - j));
        c.push_back(acc);
    }
    return BinaryForm(F.a(), c);
}

/// Unique root (u:v) of a perfect power binary form.
inline std::pair<AlgScalar, AlgScalar> perfect_power_root(const BinaryForm& m) {
    if (m.infinity_multiplicity() == m.degree()) return {AlgScalar(1), AlgScalar(0)};
    const UniPoly a = m.affine().monic();
    // a = (u - r)^d
    const AlgScalar r = -a.coeff(a.degree() - 1) / AlgScalar(static_cast<long>(a.degree()));
    return {r, AlgScalar(1)};
}

} // namespace git33

#endif
