#ifndef GIT33_EXACT_FIELD_HPP
#define GIT33_EXACT_FIELD_HPP

#include <memory>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "git33/exact/error.hpp"
#include "git33/exact/rational.hpp"

namespace git33 {

/// Maximum number of simple extensions stacked over Q.
inline constexpr int kMaxTowerDepth = 2;
/// Maximum relative degree of one extension step.
inline constexpr int kMaxStepDegree = 6;

namespace detail {

// One layer of the tower K_depth = K_{depth-1}[t]/(m(t)).
// Elements are stored flattened over Q: index = lower + base_total * k for t^k.
struct FieldNode {
    std::shared_ptr<const FieldNode> base;       // null means the base is Q
    std::vector<std::vector<Rat>> minpoly;       // monic; minpoly[k] flattened over base
    int degree = 1;
    int total = 1;
    int depth = 0;
    std::string symbol;
};

inline int node_total(const FieldNode* n) { return n ? n->total : 1; }

inline bool same_node(const FieldNode* a, const FieldNode* b) {
    if (a == b) return true;
    if (!a || !b) return false;
    if (a->depth != b->depth || a->degree != b->degree) return false;
    if (!same_node(a->base.get(), b->base.get())) return false;
    return a->minpoly == b->minpoly;
}

inline std::vector<Rat> node_mul(const FieldNode* n, const std::vector<Rat>& a,
                                 const std::vector<Rat>& b);

inline std::vector<Rat> chunk(const std::vector<Rat>& v, int k, int size) {
    return std::vector<Rat>(v.begin() + k * size, v.begin() + (k + 1) * size);
}

inline bool all_zero(const std::vector<Rat>& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

inline std::vector<Rat> node_mul(const FieldNode* n, const std::vector<Rat>& a,
                                 const std::vector<Rat>& b) {
    if (!n) return {a[0] * b[0]};
    const int d = n->degree;
    const int lo = node_total(n->base.get());
    const FieldNode* base = n->base.get();
    std::vector<std::vector<Rat>> prod(2 * d - 1, std::vector<Rat>(lo));
    for (int i = 0; i < d; ++i) {
        auto ai = chunk(a, i, lo);
        if (all_zero(ai)) continue;
        for (int j = 0; j < d; ++j) {
            auto bj = chunk(b, j, lo);
            if (all_zero(bj)) continue;
            auto p = node_mul(base, ai, bj);
            for (int s = 0; s < lo; ++s) prod[i + j][s] += p[s];
        }
    }
    for (int m = 2 * d - 2; m >= d; --m) {
        if (all_zero(prod[m])) continue;
        for (int k = 0; k < d; ++k) {
            auto t = node_mul(base, prod[m], n->minpoly[k]);
            for (int s = 0; s < lo; ++s) prod[m - d + k][s] -= t[s];
        }
    }
    std::vector<Rat> out(static_cast<size_t>(n->total));
    for (int k = 0; k < d; ++k)
        for (int s = 0; s < lo; ++s) out[k * lo + s] = std::move(prod[k][s]);
    return out;
}

// Solves M x = rhs over Q by Gaussian elimination; M is square and invertible.
inline std::vector<Rat> solve_rational(std::vector<std::vector<Rat>> m, std::vector<Rat> rhs) {
    const size_t n = rhs.size();
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) fail(Errc::DivisionByZero, "inverse of zero field element");
        std::swap(m[piv], m[col]);
        std::swap(rhs[piv], rhs[col]);
        const Rat inv = 1 / m[col][col];
        for (size_t k = col; k < n; ++k) m[col][k] *= inv;
        rhs[col] *= inv;
        for (size_t r = 0; r < n; ++r) {
            if (r == col || m[r][col] == 0) continue;
            const Rat f = m[r][col];
            for (size_t k = col; k < n; ++k) m[r][k] -= f * m[col][k];
            rhs[r] -= f * rhs[col];
        }
    }
    return rhs;
}

} // namespace detail

/// Handle to a coefficient field: Q or a tower of at most two simple extensions.
class Field {
public:
    Field() = default;

    static Field rationals() { return Field(); }

    /// Builds K(t)/(m) without validating m; callers guarantee irreducibility.
    /// `minpoly` is monic, coefficient k flattened over `base`.
    static Field extension_unchecked(const Field& base, std::vector<std::vector<Rat>> minpoly,
                                     std::string symbol) {
        auto node = std::make_shared<detail::FieldNode>();
        node->base = base.node_;
        node->degree = static_cast<int>(minpoly.size()) - 1;
        node->total = node->degree * base.total_degree();
        node->depth = base.depth() + 1;
        node->minpoly = std::move(minpoly);
        node->symbol = std::move(symbol);
        return Field(std::move(node));
    }

    bool is_rational() const { return !node_; }
    int depth() const { return node_ ? node_->depth : 0; }
    int degree() const { return node_ ? node_->degree : 1; }
    int total_degree() const { return detail::node_total(node_.get()); }
    const std::string& symbol() const {
        static const std::string q = "Q";
        return node_ ? node_->symbol : q;
    }
    Field base() const { return node_ ? Field(node_->base) : Field(); }
    const std::vector<std::vector<Rat>>& minpoly() const { return node_->minpoly; }
    const detail::FieldNode* node() const { return node_.get(); }

    /// True when this field is a layer of `other`'s tower (or equal to it).
    bool is_subfield_of(const Field& other) const {
        for (Field f = other;; f = f.base()) {
            if (*this == f) return true;
            if (f.is_rational()) return false;
        }
    }

    friend bool operator==(const Field& a, const Field& b) {
        return detail::same_node(a.node_.get(), b.node_.get());
    }
    friend bool operator!=(const Field& a, const Field& b) { return !(a == b); }

    /// The larger of two fields in a common tower.
    static Field common(const Field& a, const Field& b) {
        if (a.is_subfield_of(b)) return b;
        if (b.is_subfield_of(a)) return a;
        fail(Errc::FieldMismatch, "fields " + a.describe() + " and " + b.describe() +
                                      " do not lie in one tower");
    }

    /// Generator names from bottom to top.
    std::vector<std::string> symbols() const {
        std::vector<std::string> out;
        for (Field f = *this; !f.is_rational(); f = f.base()) out.insert(out.begin(), f.symbol());
        return out;
    }

    std::string describe() const;

private:
    explicit Field(std::shared_ptr<const detail::FieldNode> n) : node_(std::move(n)) {}
    std::shared_ptr<const detail::FieldNode> node_;
};

/// An exact element of a Field, stored by its coordinates over Q.
class AlgScalar {
public:
    AlgScalar() : c_{Rat(0)} {}
    AlgScalar(long v) : c_{Rat(v)} {}                 // NOLINT(google-explicit-constructor)
    AlgScalar(const Rat& v) : c_{v} {}                // NOLINT(google-explicit-constructor)
    AlgScalar(const Int& v) : c_{Rat(v)} {}           // NOLINT(google-explicit-constructor)
    AlgScalar(Field f, std::vector<Rat> coords) : f_(std::move(f)), c_(std::move(coords)) {
        if (static_cast<int>(c_.size()) != f_.total_degree())
            fail(Errc::InvalidArgument, "coordinate vector does not match field degree");
    }

    static AlgScalar zero(const Field& f) {
        return AlgScalar(f, std::vector<Rat>(static_cast<size_t>(f.total_degree())));
    }
    static AlgScalar one(const Field& f) {
        auto z = zero(f);
        z.c_[0] = 1;
        return z;
    }
    /// The generator of the top layer of `f`.
    static AlgScalar generator(const Field& f) {
        auto z = zero(f);
        if (f.is_rational()) fail(Errc::InvalidArgument, "Q has no generator");
        if (f.degree() == 1) {
            // t satisfies t + m0 = 0
            const auto& m0 = f.minpoly()[0];
            for (size_t i = 0; i < m0.size(); ++i) z.c_[i] = -m0[i];
            return z;
        }
        z.c_[static_cast<size_t>(f.base().total_degree())] = 1;
        return z;
    }

    const Field& field() const { return f_; }
    const std::vector<Rat>& coords() const { return c_; }

    bool is_zero() const { return detail::all_zero(c_); }
    bool is_rational() const {
        for (size_t i = 1; i < c_.size(); ++i)
            if (c_[i] != 0) return false;
        return true;
    }
    const Rat& rational() const {
        if (!is_rational()) fail(Errc::InvalidArgument, "element is not rational");
        return c_[0];
    }
    bool is_one() const { return is_rational() && c_[0] == 1; }

    /// Embeds this element into a field containing its own.
    AlgScalar lift(const Field& target) const {
        if (target == f_) return *this;
        if (!f_.is_subfield_of(target))
            fail(Errc::FieldMismatch, "cannot embed " + f_.describe() + " into " + target.describe());
        std::vector<Rat> c(static_cast<size_t>(target.total_degree()));
        for (size_t i = 0; i < c_.size(); ++i) c[i] = c_[i];
        return AlgScalar(target, std::move(c));
    }

    AlgScalar& operator+=(const AlgScalar& o) {
        if (o.f_ == f_) {
            for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
            return *this;
        }
        const Field f = Field::common(f_, o.f_);
        *this = lift(f);
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }
    AlgScalar& operator-=(const AlgScalar& o) {
        if (o.f_ == f_) {
            for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
            return *this;
        }
        const Field f = Field::common(f_, o.f_);
        *this = lift(f);
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        return *this;
    }
    AlgScalar& operator*=(const AlgScalar& o) {
        if (o.is_rational()) {
            for (auto& x : c_) x *= o.c_[0];
            return *this;
        }
        if (is_rational()) {
            const Rat s = c_[0];
            *this = o;
            for (auto& x : c_) x *= s;
            return *this;
        }
        const Field f = Field::common(f_, o.f_);
        const auto a = lift(f);
        const auto b = o.lift(f);
        *this = AlgScalar(f, detail::node_mul(f.node(), a.c_, b.c_));
        return *this;
    }
    AlgScalar& operator/=(const AlgScalar& o) { return *this *= o.inverse(); }

    friend AlgScalar operator+(AlgScalar a, const AlgScalar& b) { return a += b; }
    friend AlgScalar operator-(AlgScalar a, const AlgScalar& b) { return a -= b; }
    friend AlgScalar operator*(AlgScalar a, const AlgScalar& b) { return a *= b; }
    friend AlgScalar operator/(AlgScalar a, const AlgScalar& b) { return a /= b; }
    AlgScalar operator-() const {
        AlgScalar r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }

    AlgScalar inverse() const {
        if (is_zero()) fail(Errc::DivisionByZero, "inverse of zero");
        if (is_rational()) {
            AlgScalar r = AlgScalar::zero(f_);
            r.c_[0] = 1 / c_[0];
            return r;
        }
        const size_t n = c_.size();
        std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n));
        for (size_t k = 0; k < n; ++k) {
            std::vector<Rat> e(n);
            e[k] = 1;
            auto col = detail::node_mul(f_.node(), c_, e);
            for (size_t r = 0; r < n; ++r) m[r][k] = std::move(col[r]);
        }
        std::vector<Rat> rhs(n);
        rhs[0] = 1;
        return AlgScalar(f_, detail::solve_rational(std::move(m), std::move(rhs)));
    }

    AlgScalar pow(unsigned e) const {
        AlgScalar result = AlgScalar::one(f_);
        AlgScalar b = *this;
        while (e) {
            if (e & 1u) result *= b;
            e >>= 1u;
            if (e) b *= b;
        }
        return result;
    }

    friend bool operator==(const AlgScalar& a, const AlgScalar& b) {
        if (a.f_ == b.f_) return a.c_ == b.c_;
        if (a.is_rational() && b.is_rational()) return a.c_[0] == b.c_[0];
        if (!a.f_.is_subfield_of(b.f_) && !b.f_.is_subfield_of(a.f_)) return false;
        const Field f = Field::common(a.f_, b.f_);
        return a.lift(f).c_ == b.lift(f).c_;
    }
    friend bool operator!=(const AlgScalar& a, const AlgScalar& b) { return !(a == b); }

    /// Human-readable form using the tower's generator symbols.
    std::string str() const {
        if (is_rational()) return c_[0].get_str();
        const auto syms = f_.symbols();
        std::vector<int> degs;
        for (Field f = f_; !f.is_rational(); f = f.base()) degs.insert(degs.begin(), f.degree());
        std::ostringstream os;
        bool first = true;
        for (size_t idx = 0; idx < c_.size(); ++idx) {
            if (c_[idx] == 0) continue;
            std::string mono;
            size_t rest = idx;
            for (size_t l = 0; l < degs.size(); ++l) {
                const size_t e = rest % static_cast<size_t>(degs[l]);
                rest /= static_cast<size_t>(degs[l]);
                if (e == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += syms[l];
                if (e > 1) mono += "^" + std::to_string(e);
            }
            Rat coef = c_[idx];
            if (!first) os << (coef < 0 ? " - " : " + ");
            else if (coef < 0) os << "-";
            if (coef < 0) coef = -coef;
            if (mono.empty()) os << coef.get_str();
            else if (coef == 1) os << mono;
            else os << coef.get_str() << "*" << mono;
            first = false;
        }
        return first ? "0" : os.str();
    }

private:
    Field f_;
    std::vector<Rat> c_;
};

inline std::string Field::describe() const {
    if (is_rational()) return "Q";
    std::ostringstream os;
    os << base().describe() << "[" << symbol() << "]/(";
    const auto& m = minpoly();
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        AlgScalar c(base(), m[static_cast<size_t>(k)]);
        if (c.is_zero()) continue;
        std::string cs = c.str();
        if (!first) os << " + ";
        if (k == 0) os << "(" << cs << ")";
        else {
            if (!c.is_one()) os << "(" << cs << ")*";
            os << symbol();
            if (k > 1) os << "^" << k;
        }
        first = false;
    }
    os << ")";
    return os.str();
}

} // namespace git33

#endif
