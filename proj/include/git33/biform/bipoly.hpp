#ifndef GIT33_BIFORM_BIPOLY_HPP
#define GIT33_BIFORM_BIPOLY_HPP

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <utility>

#include "git33/exact/unipoly.hpp"

namespace git33 {

/// Sparse polynomial in two variables (x, z); key (i, j) is x^i z^j.
class BiPoly {
public:
    using Key = std::pair<int, int>;
    using Terms = std::map<Key, AlgScalar>;

    BiPoly() = default;
    explicit BiPoly(Field f) : f_(std::move(f)) {}

    static BiPoly constant(const AlgScalar& c) {
        BiPoly r(c.field());
        r.add_term(0, 0, c);
        return r;
    }
    static BiPoly monomial(const AlgScalar& c, int i, int j) {
        BiPoly r(c.field());
        r.add_term(i, j, c);
        return r;
    }
    static BiPoly x(const Field& f) { return monomial(AlgScalar::one(f), 1, 0); }
    static BiPoly z(const Field& f) { return monomial(AlgScalar::one(f), 0, 1); }

    const Field& field() const { return f_; }
    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }

    AlgScalar coeff(int i, int j) const {
        auto it = t_.find({i, j});
        return it == t_.end() ? AlgScalar::zero(f_) : it->second;
    }

    void add_term(int i, int j, const AlgScalar& c) {
        if (c.is_zero()) return;
        if (!(c.field() == f_)) {
            const Field g = Field::common(f_, c.field());
            if (!(g == f_)) *this = lift(g);
        }
        auto [it, inserted] = t_.try_emplace({i, j}, c.lift(f_));
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }

    BiPoly lift(const Field& g) const {
        BiPoly r(g);
        for (const auto& [k, c] : t_) r.t_.emplace(k, c.lift(g));
        return r;
    }

    int deg_x() const {
        int d = -1;
        for (const auto& [k, c] : t_) d = std::max(d, k.first);
        return d;
    }
    int deg_z() const {
        int d = -1;
        for (const auto& [k, c] : t_) d = std::max(d, k.second);
        return d;
    }
    int total_degree() const {
        int d = -1;
        for (const auto& [k, c] : t_) d = std::max(d, k.first + k.second);
        return d;
    }
    /// Lowest total degree of a support monomial; -1 for zero.
    int order() const {
        int d = -1;
        for (const auto& [k, c] : t_)
            if (d < 0 || k.first + k.second < d) d = k.first + k.second;
        return d;
    }
    /// Lowest weighted degree wx*i + wz*j over the support.
    int weighted_order(int wx, int wz) const {
        int d = -1;
        for (const auto& [k, c] : t_) {
            const int w = wx * k.first + wz * k.second;
            if (d < 0 || w < d) d = w;
        }
        return d;
    }
    BiPoly weighted_part(int wx, int wz, int w) const {
        BiPoly r(f_);
        for (const auto& [k, c] : t_)
            if (wx * k.first + wz * k.second == w) r.t_.emplace(k, c);
        return r;
    }
    BiPoly homogeneous_part(int d) const { return weighted_part(1, 1, d); }
    BiPoly truncate(int max_total) const {
        BiPoly r(f_);
        for (const auto& [k, c] : t_)
            if (k.first + k.second <= max_total) r.t_.emplace(k, c);
        return r;
    }

    BiPoly& operator+=(const BiPoly& o) {
        for (const auto& [k, c] : o.t_) add_term(k.first, k.second, c);
        return *this;
    }
    BiPoly& operator-=(const BiPoly& o) {
        for (const auto& [k, c] : o.t_) add_term(k.first, k.second, -c);
        return *this;
    }
    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    BiPoly operator-() const {
        BiPoly r = *this;
        for (auto& [k, c] : r.t_) c = -c;
        return r;
    }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
        BiPoly r(Field::common(a.f_, b.f_));
        for (const auto& [ka, ca] : a.t_)
            for (const auto& [kb, cb] : b.t_) r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
        return r;
    }
    friend BiPoly operator*(const AlgScalar& s, const BiPoly& p) {
        BiPoly r(Field::common(s.field(), p.f_));
        if (s.is_zero()) return r;
        for (const auto& [k, c] : p.t_) r.t_.emplace(k, (s * c).lift(r.f_));
        return r;
    }
    /// Product truncated above total degree `max_total`.
    static BiPoly mul_trunc(const BiPoly& a, const BiPoly& b, int max_total) {
        BiPoly r(Field::common(a.f_, b.f_));
        for (const auto& [ka, ca] : a.t_)
            for (const auto& [kb, cb] : b.t_) {
                if (ka.first + kb.first + ka.second + kb.second > max_total) continue;
                r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
            }
        return r;
    }
    BiPoly pow(unsigned e) const {
        BiPoly r = constant(AlgScalar::one(f_));
        BiPoly b = *this;
        while (e) {
            if (e & 1u) r = r * b;
            e >>= 1u;
            if (e) b = b * b;
        }
        return r;
    }

    friend bool operator==(const BiPoly& a, const BiPoly& b) {
        if (a.t_.size() != b.t_.size()) return false;
        auto i = a.t_.begin();
        auto j = b.t_.begin();
        for (; i != a.t_.end(); ++i, ++j)
            if (i->first != j->first || i->second != j->second) return false;
        return true;
    }
    friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

    BiPoly dx() const {
        BiPoly r(f_);
        for (const auto& [k, c] : t_)
            if (k.first > 0) r.t_.emplace(Key{k.first - 1, k.second}, c * AlgScalar(static_cast<long>(k.first)));
        return r;
    }
    BiPoly dz() const {
        BiPoly r(f_);
        for (const auto& [k, c] : t_)
            if (k.second > 0) r.t_.emplace(Key{k.first, k.second - 1}, c * AlgScalar(static_cast<long>(k.second)));
        return r;
    }

    AlgScalar eval(const AlgScalar& xv, const AlgScalar& zv) const {
        AlgScalar acc = AlgScalar::zero(Field::common(Field::common(f_, xv.field()), zv.field()));
        for (const auto& [k, c] : t_) acc += c * xv.pow(static_cast<unsigned>(k.first)) * zv.pow(static_cast<unsigned>(k.second));
        return acc;
    }
    /// Substitutes x = xv, leaving a polynomial in z.
    UniPoly at_x(const AlgScalar& xv, const std::string& var = "z") const {
        const Field g = Field::common(f_, xv.field());
        std::vector<AlgScalar> c(static_cast<size_t>(std::max(deg_z(), 0)) + 1, AlgScalar::zero(g));
        for (const auto& [k, v] : t_) c[static_cast<size_t>(k.second)] += v * xv.pow(static_cast<unsigned>(k.first));
        return UniPoly(g, std::move(c), var);
    }
    /// Substitutes z = zv, leaving a polynomial in x.
    UniPoly at_z(const AlgScalar& zv, const std::string& var = "x") const {
        const Field g = Field::common(f_, zv.field());
        std::vector<AlgScalar> c(static_cast<size_t>(std::max(deg_x(), 0)) + 1, AlgScalar::zero(g));
        for (const auto& [k, v] : t_) c[static_cast<size_t>(k.first)] += v * zv.pow(static_cast<unsigned>(k.second));
        return UniPoly(g, std::move(c), var);
    }
    /// Coefficient of z^j as a polynomial in x.
    UniPoly z_coeff(int j) const {
        std::vector<AlgScalar> c(static_cast<size_t>(std::max(deg_x(), 0)) + 1, AlgScalar::zero(f_));
        for (const auto& [k, v] : t_)
            if (k.second == j) c[static_cast<size_t>(k.first)] = v;
        return UniPoly(f_, std::move(c), "x");
    }
    /// Coefficient of x^i as a polynomial in z.
    UniPoly x_coeff(int i) const {
        std::vector<AlgScalar> c(static_cast<size_t>(std::max(deg_z(), 0)) + 1, AlgScalar::zero(f_));
        for (const auto& [k, v] : t_)
            if (k.first == i) c[static_cast<size_t>(k.second)] = v;
        return UniPoly(f_, std::move(c), "z");
    }

    /// p(X(x,z), Z(x,z)) for polynomial substitutions; optionally truncated.
    BiPoly substitute(const BiPoly& xs, const BiPoly& zs, int max_total = -1) const {
        BiPoly r(Field::common(Field::common(f_, xs.f_), zs.f_));
        std::vector<BiPoly> xp{constant(AlgScalar::one(r.f_))}, zp{constant(AlgScalar::one(r.f_))};
        auto mul = [&](const BiPoly& a, const BiPoly& b) {
            return max_total < 0 ? a * b : mul_trunc(a, b, max_total);
        };
        for (int i = 1; i <= deg_x(); ++i) xp.push_back(mul(xp.back(), xs));
        for (int j = 1; j <= deg_z(); ++j) zp.push_back(mul(zp.back(), zs));
        for (const auto& [k, c] : t_)
            r += c * mul(xp[static_cast<size_t>(k.first)], zp[static_cast<size_t>(k.second)]);
        return r;
    }

    /// Exact quotient a / b, or nullopt if b does not divide a.
    static std::optional<BiPoly> divide(const BiPoly& a, const BiPoly& b) {
        if (b.is_zero()) fail(Errc::DivisionByZero, "bivariate division by zero");
        const Field g = Field::common(a.f_, b.f_);
        BiPoly r = a.lift(g);
        BiPoly q(g);
        // lex order with z major: the last map entry under (j, i) ordering
        auto lead = [](const BiPoly& p) {
            Key best{-1, -1};
            for (const auto& [k, c] : p.t_)
                if (k.second > best.second || (k.second == best.second && k.first > best.first)) best = k;
            return best;
        };
        const Key lb = lead(b);
        const AlgScalar inv = b.coeff(lb.first, lb.second).inverse();
        while (!r.is_zero()) {
            const Key lr = lead(r);
            if (lr.first < lb.first || lr.second < lb.second) return std::nullopt;
            const AlgScalar c = r.coeff(lr.first, lr.second) * inv;
            const BiPoly m = monomial(c, lr.first - lb.first, lr.second - lb.second);
            q += m;
            r -= m * b;
        }
        return q;
    }

    std::string str(const std::string& xv = "x", const std::string& zv = "z") const {
        if (is_zero()) return "0";
        std::string out;
        for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
            const auto& [k, c] = *it;
            std::string cs = c.str();
            bool neg = false;
            if (c.is_rational() && cs[0] == '-') {
                neg = true;
                cs = cs.substr(1);
            }
            if (!c.is_rational()) cs = "(" + cs + ")";
            std::string mono;
            auto put = [&](const std::string& v, int e) {
                if (e == 0) return;
                if (!mono.empty()) mono += "*";
                mono += v;
                if (e > 1) mono += "^" + std::to_string(e);
            };
            put(xv, k.first);
            put(zv, k.second);
            std::string term = mono.empty() ? cs : (cs == "1" ? mono : cs + "*" + mono);
            if (out.empty()) out = neg ? "-" + term : term;
            else out += (neg ? " - " : " + ") + term;
        }
        return out;
    }

private:
    Field f_;
    Terms t_;
};

inline std::ostream& operator<<(std::ostream& os, const BiPoly& p) { return os << p.str(); }

} // namespace git33

#endif
