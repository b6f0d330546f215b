#ifndef GIT33_BIFORM_BIFORM_HPP
#define GIT33_BIFORM_BIFORM_HPP

#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "git33/biform/binary_form.hpp"
#include "git33/biform/bipoly.hpp"

namespace git33 {

/// Bihomogeneous form of bidegree (a, b); c[i][j] multiplies X^i Y^(a-i) Z^j W^(b-j).
class BiForm {
public:
    BiForm() : BiForm(0, 0, Field()) {}
    BiForm(int a, int b, const Field& f)
        : a_(a), b_(b), f_(f),
          c_(static_cast<size_t>(a + 1), std::vector<AlgScalar>(static_cast<size_t>(b + 1), AlgScalar::zero(f))) {
        if (a < 0 || b < 0) fail(Errc::InvalidArgument, "negative bidegree");
    }

    /// Rehomogenizes p(x, z) with x = X/Y, z = Z/W into bidegree (a, b).
    static BiForm from_bipoly(const BiPoly& p, int a, int b) {
        if (p.deg_x() > a || p.deg_z() > b)
            fail(Errc::WrongBidegree, "polynomial does not fit bidegree (" + std::to_string(a) + "," + std::to_string(b) + ")");
        BiForm r(a, b, p.field());
        for (const auto& [k, c] : p.terms()) r.c_[static_cast<size_t>(k.first)][static_cast<size_t>(k.second)] = c;
        return r;
    }

    int a() const { return a_; }
    int b() const { return b_; }
    const Field& field() const { return f_; }

    const AlgScalar& coeff(int i, int j) const { return c_[static_cast<size_t>(i)][static_cast<size_t>(j)]; }
    void set(int i, int j, const AlgScalar& v) {
        if (!v.field().is_subfield_of(f_)) *this = lift(Field::common(f_, v.field()));
        c_[static_cast<size_t>(i)][static_cast<size_t>(j)] = v.lift(f_);
    }

    bool is_zero() const {
        for (const auto& row : c_)
            for (const auto& v : row)
                if (!v.is_zero()) return false;
        return true;
    }
    std::vector<std::pair<int, int>> support() const {
        std::vector<std::pair<int, int>> s;
        for (int i = 0; i <= a_; ++i)
            for (int j = 0; j <= b_; ++j)
                if (!coeff(i, j).is_zero()) s.emplace_back(i, j);
        return s;
    }

    BiForm lift(const Field& g) const {
        BiForm r(a_, b_, g);
        for (int i = 0; i <= a_; ++i)
            for (int j = 0; j <= b_; ++j) r.c_[static_cast<size_t>(i)][static_cast<size_t>(j)] = coeff(i, j).lift(g);
        return r;
    }

    /// Affine chart Y = W = 1.
    BiPoly dehomogenize() const {
        BiPoly p(f_);
        for (int i = 0; i <= a_; ++i)
            for (int j = 0; j <= b_; ++j) p.add_term(i, j, coeff(i, j));
        return p;
    }

    friend BiForm operator*(const BiForm& f, const BiForm& g) {
        return from_bipoly(f.dehomogenize() * g.dehomogenize(), f.a_ + g.a_, f.b_ + g.b_);
    }
    friend BiForm operator*(const AlgScalar& s, const BiForm& f) {
        BiForm r = f.lift(Field::common(f.f_, s.field()));
        for (auto& row : r.c_)
            for (auto& v : row) v *= s;
        return r;
    }
    friend BiForm operator+(const BiForm& f, const BiForm& g) {
        if (f.a_ != g.a_ || f.b_ != g.b_) fail(Errc::WrongBidegree, "sum of forms with different bidegrees");
        const Field h = Field::common(f.f_, g.f_);
        BiForm r = f.lift(h);
        for (int i = 0; i <= f.a_; ++i)
            for (int j = 0; j <= f.b_; ++j) r.c_[static_cast<size_t>(i)][static_cast<size_t>(j)] += g.coeff(i, j);
        return r;
    }
    friend BiForm operator-(const BiForm& f, const BiForm& g) { return f + AlgScalar(-1) * g; }

    BiForm pow(unsigned e) const {
        BiForm r = BiForm(0, 0, f_);
        r.c_[0][0] = AlgScalar::one(f_);
        for (unsigned k = 0; k < e; ++k) r = r * *this;
        return r;
    }

    friend bool operator==(const BiForm& f, const BiForm& g) {
        if (f.a_ != g.a_ || f.b_ != g.b_) return false;
        for (int i = 0; i <= f.a_; ++i)
            for (int j = 0; j <= f.b_; ++j)
                if (f.coeff(i, j) != g.coeff(i, j)) return false;
        return true;
    }
    friend bool operator!=(const BiForm& f, const BiForm& g) { return !(f == g); }

    /// Scaled so the first nonzero coefficient (in (i, j) order) is 1.
    BiForm normalized() const {
        for (int i = 0; i <= a_; ++i)
            for (int j = 0; j <= b_; ++j)
                if (!coeff(i, j).is_zero()) return coeff(i, j).inverse() * *this;
        return *this;
    }
    bool equal_up_to_scalar(const BiForm& g) const { return normalized() == g.normalized(); }

    /// Exact quotient by g, or nullopt.
    std::optional<BiForm> divide(const BiForm& g) const {
        if (g.a_ > a_ || g.b_ > b_) return std::nullopt;
        auto q = BiPoly::divide(dehomogenize(), g.dehomogenize());
        if (!q) return std::nullopt;
        if (q->deg_x() > a_ - g.a_ || q->deg_z() > b_ - g.b_) return std::nullopt;
        return from_bipoly(*q, a_ - g.a_, b_ - g.b_);
    }

    // partial derivatives in the homogeneous variables
    BiForm dX() const { return deriv(true, true); }
    BiForm dY() const { return deriv(true, false); }
    BiForm dZ() const { return deriv(false, true); }
    BiForm dW() const { return deriv(false, false); }

    AlgScalar eval(const AlgScalar& X, const AlgScalar& Y, const AlgScalar& Z, const AlgScalar& W) const {
        AlgScalar acc = AlgScalar::zero(f_);
        for (int i = 0; i <= a_; ++i)
            for (int j = 0; j <= b_; ++j) {
                if (coeff(i, j).is_zero()) continue;
                acc += coeff(i, j) * X.pow(static_cast<unsigned>(i)) * Y.pow(static_cast<unsigned>(a_ - i)) *
                       Z.pow(static_cast<unsigned>(j)) * W.pow(static_cast<unsigned>(b_ - j));
            }
        return acc;
    }

    /// Coefficient form of Z^j W^(b-j), a binary form of degree a in X, Y.
    BinaryForm column(int j) const {
        std::vector<AlgScalar> c;
        for (int i = 0; i <= a_; ++i) c.push_back(coeff(i, j));
        return BinaryForm(a_, c);
    }
    /// Coefficient form of X^i Y^(a-i), a binary form of degree b in Z, W.
    BinaryForm row(int i) const { return BinaryForm(b_, c_[static_cast<size_t>(i)]); }

    /// Expression in X, Y, Z, W accepted by the parser.
    std::string str() const {
        std::string out;
        for (int i = a_; i >= 0; --i)
            for (int j = b_; j >= 0; --j) {
                const auto& v = coeff(i, j);
                if (v.is_zero()) continue;
                std::string cs = v.str();
                bool neg = false;
                if (v.is_rational() && cs[0] == '-') {
                    neg = true;
                    cs = cs.substr(1);
                }
                if (!v.is_rational()) cs = "(" + cs + ")";
                std::string mono;
                auto put = [&](const char* s, int e) {
                    if (e == 0) return;
                    if (!mono.empty()) mono += "*";
                    mono += s;
                    if (e > 1) mono += "^" + std::to_string(e);
                };
                put("X", i);
                put("Y", a_ - i);
                put("Z", j);
                put("W", b_ - j);
                std::string term = mono.empty() ? cs : (cs == "1" ? mono : cs + "*" + mono);
                if (out.empty()) out = neg ? "-" + term : term;
                else out += (neg ? " - " : " + ") + term;
            }
        return out.empty() ? "0" : out;
    }

private:
    BiForm deriv(bool first, bool upper) const {
        const int na = first ? a_ - 1 : a_;
        const int nb = first ? b_ : b_ - 1;
        if (na < 0 || nb < 0) return BiForm(std::max(na, 0), std::max(nb, 0), f_);
        BiForm r(na, nb, f_);
        for (int i = 0; i <= a_; ++i)
            for (int j = 0; j <= b_; ++j) {
                const auto& v = coeff(i, j);
                if (v.is_zero()) continue;
                if (first) {
                    const int e = upper ? i : a_ - i;
                    if (e == 0) continue;
                    const int ni = upper ? i - 1 : i;
                    r.c_[static_cast<size_t>(ni)][static_cast<size_t>(j)] += v * AlgScalar(static_cast<long>(e));
                } else {
                    const int e = upper ? j : b_ - j;
                    if (e == 0) continue;
                    const int nj = upper ? j - 1 : j;
                    r.c_[static_cast<size_t>(i)][static_cast<size_t>(nj)] += v * AlgScalar(static_cast<long>(e));
                }
            }
        return r;
    }

    int a_, b_;
    Field f_;
    std::vector<std::vector<AlgScalar>> c_;
};

/// Canonical scalar multiple: over Q coprime integers with the top coefficient positive,
/// otherwise leading coefficient 1 in the order used by str().
inline BiForm primitive_form(const BiForm& F) {
    if (F.is_zero()) return F;
    if (!F.field().is_rational()) {
        for (int i = F.a(); i >= 0; --i)
            for (int j = F.b(); j >= 0; --j)
                if (!F.coeff(i, j).is_zero()) return F.coeff(i, j).inverse() * F;
    }
    Int den = 1, num = 0;
    for (int i = 0; i <= F.a(); ++i)
        for (int j = 0; j <= F.b(); ++j) {
            const Rat& r = F.coeff(i, j).rational();
            den = lcm(den, r.get_den());
            num = gcd(num, r.get_num());
        }
    Rat scale(den, num);
    scale.canonicalize();
    for (int i = F.a(); i >= 0; --i)
        for (int j = F.b(); j >= 0; --j)
            if (!F.coeff(i, j).is_zero()) {
                if (F.coeff(i, j).rational() < 0) scale = -scale;
                return AlgScalar(scale) * F;
            }
    return F;
}

inline std::ostream& operator<<(std::ostream& os, const BiForm& F) { return os << F.str(); }

/// A point ((s:t), (u:v)) of P1 x P1.
struct SurfacePoint {
    AlgScalar s, t, u, v;

    Field field() const {
        return Field::common(Field::common(s.field(), t.field()), Field::common(u.field(), v.field()));
    }
    /// Scaled so the last nonzero coordinate of each pair is 1.
    SurfacePoint normalized() const {
        auto norm = [](const AlgScalar& a, const AlgScalar& b) -> std::pair<AlgScalar, AlgScalar> {
            if (!b.is_zero()) return {a / b, AlgScalar::one(b.field())};
            if (a.is_zero()) fail(Errc::InvalidArgument, "projective pair (0:0)");
            return {AlgScalar::one(a.field()), AlgScalar::zero(a.field())};
        };
        auto [s1, t1] = norm(s, t);
        auto [u1, v1] = norm(u, v);
        return {s1, t1, u1, v1};
    }
    bool same_as(const SurfacePoint& o) const {
        const auto a = normalized(), b = o.normalized();
        return a.s == b.s && a.t == b.t && a.u == b.u && a.v == b.v;
    }
    std::string str() const {
        const auto n = normalized();
        return "((" + n.s.str() + ":" + n.t.str() + "),(" + n.u.str() + ":" + n.v.str() + "))";
    }
};

} // namespace git33

#endif
