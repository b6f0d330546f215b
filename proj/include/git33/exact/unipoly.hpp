#ifndef GIT33_EXACT_UNIPOLY_HPP
#define GIT33_EXACT_UNIPOLY_HPP

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "git33/exact/field.hpp"
#include "git33/exact/linalg.hpp"

namespace git33 {

/// Dense univariate polynomial over a Field; coefficients low to high.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(Field f, std::string var = "x") : f_(std::move(f)), var_(std::move(var)) {}
    UniPoly(Field f, std::vector<AlgScalar> coeffs, std::string var = "x")
        : f_(std::move(f)), c_(std::move(coeffs)), var_(std::move(var)) {
        for (const auto& a : c_) f_ = Field::common(f_, a.field());
        for (auto& a : c_) a = a.lift(f_);
        trim();
    }

    static UniPoly from_rats(const std::vector<Rat>& c, std::string var = "x") {
        std::vector<AlgScalar> v(c.begin(), c.end());
        return UniPoly(Field(), std::move(v), std::move(var));
    }
    static UniPoly from_ints(std::initializer_list<long> c, std::string var = "x") {
        std::vector<AlgScalar> v;
        for (long x : c) v.emplace_back(x);
        return UniPoly(Field(), std::move(v), std::move(var));
    }
    static UniPoly constant(const AlgScalar& a, std::string var = "x") {
        return UniPoly(a.field(), {a}, std::move(var));
    }
    /// The polynomial c * x^k.
    static UniPoly monomial(const AlgScalar& c, int k, std::string var = "x") {
        std::vector<AlgScalar> v(static_cast<size_t>(k) + 1, AlgScalar::zero(c.field()));
        v[static_cast<size_t>(k)] = c;
        return UniPoly(c.field(), std::move(v), std::move(var));
    }
    static UniPoly x(const Field& f, std::string var = "x") {
        return UniPoly(f, {AlgScalar::zero(f), AlgScalar::one(f)}, std::move(var));
    }

    const Field& field() const { return f_; }
    const std::string& var() const { return var_; }
    void set_var(std::string v) { var_ = std::move(v); }
    const std::vector<AlgScalar>& coeffs() const { return c_; }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    AlgScalar coeff(int k) const {
        if (k < 0 || k > degree()) return AlgScalar::zero(f_);
        return c_[static_cast<size_t>(k)];
    }
    AlgScalar lc() const { return c_.empty() ? AlgScalar::zero(f_) : c_.back(); }

    UniPoly lift(const Field& target) const {
        UniPoly r(target, var_);
        for (const auto& a : c_) r.c_.push_back(a.lift(target));
        return r;
    }

    AlgScalar eval(const AlgScalar& t) const {
        AlgScalar acc = AlgScalar::zero(Field::common(f_, t.field()));
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
        return acc;
    }

    /// f(g(x)).
    UniPoly compose(const UniPoly& g) const {
        UniPoly acc(Field::common(f_, g.f_), var_);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * g + constant(*it, var_);
        return acc;
    }

    UniPoly monic() const {
        if (is_zero()) return *this;
        const AlgScalar inv = lc().inverse();
        UniPoly r = *this;
        for (auto& a : r.c_) a *= inv;
        return r;
    }

    UniPoly derivative() const {
        UniPoly r(f_, var_);
        for (size_t k = 1; k < c_.size(); ++k) r.c_.push_back(c_[k] * AlgScalar(static_cast<long>(k)));
        r.trim();
        return r;
    }

    UniPoly& operator+=(const UniPoly& o) {
        align(o);
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), AlgScalar::zero(f_));
        for (size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
        trim();
        return *this;
    }
    UniPoly& operator-=(const UniPoly& o) {
        align(o);
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), AlgScalar::zero(f_));
        for (size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
        trim();
        return *this;
    }
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    UniPoly operator-() const {
        UniPoly r = *this;
        for (auto& a : r.c_) a = -a;
        return r;
    }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        const Field f = Field::common(a.f_, b.f_);
        UniPoly r(f, a.var_);
        if (a.is_zero() || b.is_zero()) return r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, AlgScalar::zero(f));
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        r.trim();
        return r;
    }
    friend UniPoly operator*(const AlgScalar& s, const UniPoly& p) {
        UniPoly r(Field::common(s.field(), p.f_), p.var_);
        if (s.is_zero()) return r;
        for (const auto& a : p.c_) r.c_.push_back(s * a);
        for (auto& a : r.c_) a = a.lift(r.f_);
        return r;
    }
    UniPoly pow(unsigned e) const {
        UniPoly r = constant(AlgScalar::one(f_), var_);
        UniPoly b = *this;
        while (e) {
            if (e & 1u) r = r * b;
            e >>= 1u;
            if (e) b = b * b;
        }
        return r;
    }

    friend bool operator==(const UniPoly& a, const UniPoly& b) {
        if (a.c_.size() != b.c_.size()) return false;
        for (size_t k = 0; k < a.c_.size(); ++k)
            if (a.c_[k] != b.c_[k]) return false;
        return true;
    }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    /// Quotient and remainder; divisor must be nonzero.
    std::pair<UniPoly, UniPoly> divrem(const UniPoly& d) const {
        if (d.is_zero()) fail(Errc::DivisionByZero, "polynomial division by zero");
        const Field f = Field::common(f_, d.f_);
        UniPoly r = lift(f);
        UniPoly q(f, var_);
        if (r.degree() < d.degree()) return {q, r};
        q.c_.assign(static_cast<size_t>(r.degree() - d.degree() + 1), AlgScalar::zero(f));
        const AlgScalar inv = d.lc().inverse();
        const int dd = d.degree();
        for (int k = r.degree(); k >= dd; --k) {
            const AlgScalar c = r.c_[static_cast<size_t>(k)] * inv;
            q.c_[static_cast<size_t>(k - dd)] = c;
            if (c.is_zero()) continue;
            for (int j = 0; j <= dd; ++j) r.c_[static_cast<size_t>(k - dd + j)] -= c * d.c_[static_cast<size_t>(j)];
        }
        r.trim();
        q.trim();
        return {q, r};
    }
    UniPoly operator/(const UniPoly& d) const { return divrem(d).first; }
    UniPoly operator%(const UniPoly& d) const { return divrem(d).second; }

    /// Exact quotient; throws INVALID_ARGUMENT if the remainder is nonzero.
    UniPoly exact_div(const UniPoly& d) const {
        auto [q, r] = divrem(d);
        if (!r.is_zero()) fail(Errc::InvalidArgument, "inexact polynomial division");
        return q;
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        for (int k = degree(); k >= 0; --k) {
            const auto& a = c_[static_cast<size_t>(k)];
            if (a.is_zero()) continue;
            std::string cs = a.str();
            const bool compound = !a.is_rational();
            std::string term;
            bool neg = false;
            if (!compound && cs[0] == '-') {
                neg = true;
                cs = cs.substr(1);
            }
            if (compound) cs = "(" + cs + ")";
            if (k == 0) term = cs;
            else {
                term = (cs == "1") ? "" : cs + "*";
                term += var_;
                if (k > 1) term += "^" + std::to_string(k);
            }
            if (out.empty()) out = neg ? "-" + term : term;
            else out += (neg ? " - " : " + ") + term;
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    void align(const UniPoly& o) {
        if (o.f_ == f_) return;
        const Field f = Field::common(f_, o.f_);
        *this = lift(f);
    }

    Field f_;
    std::vector<AlgScalar> c_;
    std::string var_ = "x";
};

/// Monic gcd; gcd(0,0) is rejected.
inline UniPoly gcd_univ(const UniPoly& f, const UniPoly& g) {
    if (f.is_zero() && g.is_zero()) fail(Errc::InvalidArgument, "gcd of two zero polynomials");
    if (!f.field().is_subfield_of(g.field()) && !g.field().is_subfield_of(f.field()))
        fail(Errc::FieldMismatch, "gcd over unrelated fields");
    UniPoly a = f.monic(), b = g.monic();
    while (!b.is_zero()) {
        UniPoly r = a % b;
        a = std::move(b);
        b = r.monic();
    }
    return a.monic();
}

struct SqfFactor {
    UniPoly poly;
    int mult;
};

/// Yun's algorithm; returns monic squarefree parts with strictly increasing multiplicity.
inline std::vector<SqfFactor> squarefree_decomposition(const UniPoly& f) {
    if (f.is_zero()) fail(Errc::InvalidArgument, "squarefree decomposition of zero");
    std::vector<SqfFactor> out;
    if (f.degree() == 0) return out;
    const UniPoly fm = f.monic();
    const UniPoly d = fm.derivative();
    UniPoly a = gcd_univ(fm, d);
    UniPoly b = fm.exact_div(a);
    UniPoly c = d.exact_div(a);
    UniPoly e = c - b.derivative();
    int i = 1;
    while (b.degree() > 0) {
        UniPoly g = e.is_zero() ? b : gcd_univ(b, e);
        if (g.degree() > 0) out.push_back({g.monic(), i});
        const UniPoly b2 = b.exact_div(g);
        c = e.is_zero() ? UniPoly(b.field(), b.var()) : e.exact_div(g);
        b = b2;
        e = c - b.derivative();
        ++i;
    }
    for (auto& s : out) s.poly.set_var(f.var());
    return out;
}

inline bool is_squarefree(const UniPoly& f) {
    if (f.degree() <= 0) return true;
    return gcd_univ(f, f.derivative()).degree() == 0;
}

/// Sylvester matrix of f (formal degree n) and g (formal degree m); f-rows above g-rows.
inline Matrix<AlgScalar> sylvester_matrix(const UniPoly& f, int n, const UniPoly& g, int m) {
    const Field fld = Field::common(f.field(), g.field());
    const size_t sz = static_cast<size_t>(n + m);
    Matrix<AlgScalar> s(sz, std::vector<AlgScalar>(sz, AlgScalar::zero(fld)));
    for (int r = 0; r < m; ++r)
        for (int k = 0; k <= n; ++k) s[static_cast<size_t>(r)][static_cast<size_t>(r + n - k)] = f.coeff(k).lift(fld);
    for (int r = 0; r < n; ++r)
        for (int k = 0; k <= m; ++k)
            s[static_cast<size_t>(m + r)][static_cast<size_t>(r + m - k)] = g.coeff(k).lift(fld);
    return s;
}

/// Resultant as the determinant of the Sylvester matrix with the f-block on top and
/// columns ordered by descending powers. Then Res(f,g) = lc(f)^deg g * prod g(roots of f),
/// so Res(x-a, x-b) = a-b. Formal degrees default to the actual ones.
inline AlgScalar resultant(const UniPoly& f, const UniPoly& g, int n = -1, int m = -1) {
    if (f.is_zero() || g.is_zero()) return AlgScalar::zero(Field::common(f.field(), g.field()));
    if (n < 0) n = f.degree();
    if (m < 0) m = g.degree();
    if (n == 0 && m == 0) return AlgScalar::one(Field::common(f.field(), g.field()));
    return determinant(sylvester_matrix(f, n, g, m));
}

/// Interpolating polynomial through (xs[i], ys[i]) by Newton divided differences.
inline UniPoly interpolate(const std::vector<AlgScalar>& xs, const std::vector<AlgScalar>& ys,
                           const Field& f, const std::string& var = "x") {
    const size_t n = xs.size();
    std::vector<AlgScalar> dd(ys.begin(), ys.end());
    for (auto& y : dd) y = y.lift(Field::common(f, y.field()));
    for (size_t j = 1; j < n; ++j)
        for (size_t i = n - 1; i >= j; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
            if (i == j) break;
        }
    UniPoly r(f, var);
    for (size_t k = n; k-- > 0;) {
        r = r * UniPoly(f, {-xs[k], AlgScalar::one(f)}, var) + UniPoly::constant(dd[k], var);
    }
    return r;
}

/// Deterministic total order on polynomials: degree, then coefficients low to high.
inline bool poly_less(const UniPoly& a, const UniPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int k = 0; k <= a.degree(); ++k) {
        const auto xa = a.coeff(k), ya = b.coeff(k);
        const auto& x = xa.coords();
        const auto& y = ya.coords();
        const size_t n = std::max(x.size(), y.size());
        for (size_t i = 0; i < n; ++i) {
            const Rat xi = i < x.size() ? x[i] : Rat(0);
            const Rat yi = i < y.size() ? y[i] : Rat(0);
            if (xi != yi) return xi < yi;
        }
    }
    return false;
}

} // namespace git33

#endif
