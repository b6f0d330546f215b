#ifndef GIT33_IO_PARSE_HPP
#define GIT33_IO_PARSE_HPP

#include <array>
#include <cctype>
#include <map>
#include <string>
#include <vector>

#include "git33/biform/biform.hpp"
#include "git33/exact/factor.hpp"

namespace git33 {

namespace detail {

/// Sparse polynomial in up to four named variables.
struct MPoly {
    using Key = std::array<int, 4>;
    Field f;
    std::map<Key, AlgScalar> t;

    static MPoly constant(const AlgScalar& c, const Field& f) {
        MPoly p{f, {}};
        if (!c.is_zero()) p.t[{0, 0, 0, 0}] = c.lift(f);
        return p;
    }
    bool is_constant() const { return t.empty() || (t.size() == 1 && t.begin()->first == Key{0, 0, 0, 0}); }
    AlgScalar constant_value() const { return t.empty() ? AlgScalar::zero(f) : t.begin()->second; }

    friend MPoly operator+(const MPoly& a, const MPoly& b) {
        MPoly r = a;
        for (const auto& [k, c] : b.t) {
            auto it = r.t.find(k);
            if (it == r.t.end()) r.t.emplace(k, c);
            else {
                it->second += c;
                if (it->second.is_zero()) r.t.erase(it);
            }
        }
        return r;
    }
    MPoly neg() const {
        MPoly r = *this;
        for (auto& [k, c] : r.t) c = -c;
        return r;
    }
    friend MPoly operator*(const MPoly& a, const MPoly& b) {
        MPoly r{a.f, {}};
        for (const auto& [ka, ca] : a.t)
            for (const auto& [kb, cb] : b.t) {
                Key k{ka[0] + kb[0], ka[1] + kb[1], ka[2] + kb[2], ka[3] + kb[3]};
                auto it = r.t.find(k);
                if (it == r.t.end()) r.t.emplace(k, ca * cb);
                else {
                    it->second += ca * cb;
                    if (it->second.is_zero()) r.t.erase(it);
                }
            }
        return r;
    }
};

class ExprParser {
public:
    ExprParser(std::string src, std::vector<std::string> vars, const Field& f)
        : s_(std::move(src)), vars_(std::move(vars)), f_(f) {
        Field g = f;
        while (!g.is_rational()) {
            gens_.emplace(g.symbol(), AlgScalar::generator(g).lift(f));
            g = g.base();
        }
    }

    MPoly parse() {
        MPoly p = expr();
        skip();
        if (pos_ != s_.size()) error("unexpected '" + std::string(1, s_[pos_]) + "'");
        return p;
    }

private:
    [[noreturn]] void error(const std::string& msg) const {
        fail(Errc::ParseError, msg + " at position " + std::to_string(pos_));
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    MPoly expr() {
        MPoly acc = term();
        for (;;) {
            if (eat('+')) acc = acc + term();
            else if (eat('-')) acc = acc + term().neg();
            else return acc;
        }
    }
    MPoly term() {
        MPoly acc = unary();
        for (;;) {
            if (eat('*')) {
                acc = acc * unary();
            } else if (eat('/')) {
                const size_t at = pos_;
                const MPoly d = unary();
                if (!d.is_constant() || d.t.empty()) {
                    pos_ = at;
                    error("division by a non-constant or zero expression");
                }
                acc = acc * MPoly::constant(d.constant_value().inverse(), f_);
            } else {
                return acc;
            }
        }
    }
    MPoly unary() {
        if (eat('-')) return unary().neg();
        if (eat('+')) return unary();
        return power();
    }
    MPoly power() {
        MPoly base = atom();
        if (eat('^')) {
            skip();
            const size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) error("expected a non-negative integer exponent");
            const unsigned long e = std::stoul(s_.substr(start, pos_ - start));
            if (e > 64) error("exponent too large");
            MPoly r = MPoly::constant(AlgScalar::one(f_), f_);
            for (unsigned long k = 0; k < e; ++k) r = r * base;
            return r;
        }
        return base;
    }
    MPoly atom() {
        skip();
        if (pos_ >= s_.size()) error("unexpected end of input");
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            MPoly p = expr();
            if (!eat(')')) error("expected ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return MPoly::constant(AlgScalar(Rat(Int(s_.substr(start, pos_ - start)))), f_);
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
            const std::string name = s_.substr(start, pos_ - start);
            for (size_t v = 0; v < vars_.size(); ++v)
                if (vars_[v] == name) {
                    MPoly p{f_, {}};
                    MPoly::Key k{0, 0, 0, 0};
                    k[v] = 1;
                    p.t.emplace(k, AlgScalar::one(f_));
                    return p;
                }
            if (auto it = gens_.find(name); it != gens_.end()) return MPoly::constant(it->second, f_);
            pos_ = start;
            error("unknown symbol '" + name + "'");
        }
        error("unexpected '" + std::string(1, c) + "'");
    }

    std::string s_;
    size_t pos_ = 0;
    std::vector<std::string> vars_;
    Field f_;
    std::map<std::string, AlgScalar> gens_;
};

} // namespace detail

/// Parses a bihomogeneous expression in X, Y, Z, W. A bidegree of (-1, -1) accepts any.
inline BiForm parse_biform(const std::string& src, const Field& f = Field(), int a = 3, int b = 3) {
    const detail::MPoly p = detail::ExprParser(src, {"X", "Y", "Z", "W"}, f).parse();
    if (p.t.empty()) fail(Errc::InvalidArgument, "expression is identically zero");
    const auto& k0 = p.t.begin()->first;
    const int pa = k0[0] + k0[1], pb = k0[2] + k0[3];
    for (const auto& [k, c] : p.t)
        if (k[0] + k[1] != pa || k[2] + k[3] != pb) fail(Errc::WrongBidegree, "expression is not bihomogeneous");
    if (a >= 0 && (pa != a || pb != b))
        fail(Errc::WrongBidegree, "expected bidegree (" + std::to_string(a) + "," + std::to_string(b) + "), got (" +
                                      std::to_string(pa) + "," + std::to_string(pb) + ")");
    BiForm F(pa, pb, f);
    for (const auto& [k, c] : p.t) F.set(k[0], k[2], c);
    return F;
}

/// Parses a polynomial in the local variables x, z.
inline BiPoly parse_local(const std::string& src, const Field& f = Field()) {
    const detail::MPoly p = detail::ExprParser(src, {"x", "z"}, f).parse();
    BiPoly r(f);
    for (const auto& [k, c] : p.t) r.add_term(k[0], k[1], c);
    return r;
}

/// Parses a univariate polynomial in the variable `var` over f.
inline UniPoly parse_univariate(const std::string& src, const std::string& var, const Field& f = Field()) {
    const detail::MPoly p = detail::ExprParser(src, {var}, f).parse();
    int deg = 0;
    for (const auto& [k, c] : p.t) deg = std::max(deg, k[0]);
    std::vector<AlgScalar> c(static_cast<size_t>(deg) + 1, AlgScalar::zero(f));
    for (const auto& [k, v] : p.t) c[static_cast<size_t>(k[0])] = v;
    return UniPoly(f, c, var);
}

/// Field from a minimal polynomial such as "t^2 - 2"; the variable becomes the generator symbol.
inline Field parse_field(const std::string& src) {
    std::string var;
    for (size_t i = 0; i < src.size();) {
        if (std::isalpha(static_cast<unsigned char>(src[i])) || src[i] == '_') {
            size_t j = i;
            while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
            const std::string name = src.substr(i, j - i);
            if (!var.empty() && name != var)
                fail(Errc::ParseError, "minimal polynomial uses two symbols at position " + std::to_string(i));
            var = name;
            i = j;
        } else {
            ++i;
        }
    }
    if (var.empty()) fail(Errc::ParseError, "minimal polynomial has no variable at position 0");
    if (var == "X" || var == "Y" || var == "Z" || var == "W")
        fail(Errc::ParseError, "generator symbol clashes with a coordinate at position 0");
    return make_field(parse_univariate(src, var), var);
}

/// Form from a (a+1) x (b+1) coefficient matrix of rational strings.
inline BiForm biform_from_matrix(const std::vector<std::vector<std::string>>& m, const Field& f = Field()) {
    if (m.empty() || m[0].empty()) fail(Errc::WrongBidegree, "empty coefficient matrix");
    const int a = static_cast<int>(m.size()) - 1, b = static_cast<int>(m[0].size()) - 1;
    BiForm F(a, b, f);
    for (int i = 0; i <= a; ++i) {
        if (static_cast<int>(m[static_cast<size_t>(i)].size()) != b + 1)
            fail(Errc::WrongBidegree, "ragged coefficient matrix");
        for (int j = 0; j <= b; ++j) {
            const detail::MPoly p = detail::ExprParser(m[static_cast<size_t>(i)][static_cast<size_t>(j)], {}, f).parse();
            F.set(i, j, p.constant_value());
        }
    }
    return F;
}

} // namespace git33

#endif
