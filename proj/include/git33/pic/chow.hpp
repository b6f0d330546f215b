#ifndef GIT33_PIC_CHOW_HPP
#define GIT33_PIC_CHOW_HPP

#include <array>
#include <map>
#include <string>
#include <vector>

#include "git33/exact/rational.hpp"

namespace git33 {

/// Element of the Chow ring of P1 x P1 x P15: rational polynomials in H1, H2, H3
/// modulo H1^2, H2^2, H3^16.
class ChowElt {
public:
    static constexpr int kTopH3 = 15;
    using Key = std::array<int, 3>;

    ChowElt() = default;
    static ChowElt constant(const Rat& c) {
        ChowElt e;
        e.add({0, 0, 0}, c);
        return e;
    }
    static ChowElt h(int i, const Rat& c = 1) {
        ChowElt e;
        Key k{0, 0, 0};
        k[static_cast<size_t>(i - 1)] = 1;
        e.add(k, c);
        return e;
    }
    /// a H1 + b H2 + c H3
    static ChowElt linear(const Rat& a, const Rat& b, const Rat& c) { return h(1, a) + h(2, b) + h(3, c); }

    const std::map<Key, Rat>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    Rat coeff(int e1, int e2, int e3) const {
        auto it = t_.find({e1, e2, e3});
        return it == t_.end() ? Rat(0) : it->second;
    }

    friend ChowElt operator+(ChowElt a, const ChowElt& b) {
        for (const auto& [k, c] : b.t_) a.add(k, c);
        return a;
    }
    friend ChowElt operator*(const ChowElt& a, const ChowElt& b) {
        ChowElt r;
        for (const auto& [ka, ca] : a.t_)
            for (const auto& [kb, cb] : b.t_) r.add({ka[0] + kb[0], ka[1] + kb[1], ka[2] + kb[2]}, ca * cb);
        return r;
    }
    ChowElt pow(unsigned e) const {
        ChowElt r = constant(1);
        for (unsigned i = 0; i < e; ++i) r = r * *this;
        return r;
    }
    friend bool operator==(const ChowElt& a, const ChowElt& b) { return a.t_ == b.t_; }

    std::string str() const {
        if (t_.empty()) return "0";
        std::string out;
        for (const auto& [k, c] : t_) {
            std::string mono;
            for (int i = 0; i < 3; ++i) {
                if (k[static_cast<size_t>(i)] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += "H" + std::to_string(i + 1);
                if (k[static_cast<size_t>(i)] > 1) mono += "^" + std::to_string(k[static_cast<size_t>(i)]);
            }
            std::string cs = c.get_str();
            if (!out.empty()) out += c < 0 ? " - " : " + ";
            else if (c < 0) out += "-";
            if (c < 0) cs = Rat(-c).get_str();
            if (mono.empty()) out += cs;
            else out += (cs == "1" ? "" : cs + "*") + mono;
        }
        return out;
    }

private:
    void add(const Key& k, const Rat& c) {
        if (k[0] > 1 || k[1] > 1 || k[2] > kTopH3 || c == 0) return;
        Rat& slot = t_[k];
        slot += c;
        if (slot == 0) t_.erase(k);
    }
    std::map<Key, Rat> t_;
};

/// Push forward to P15: the coefficient of H1*H2, as coefficients of H3^k.
inline std::vector<Rat> chow_pushforward(const ChowElt& e) {
    std::vector<Rat> out;
    for (const auto& [k, c] : e.terms()) {
        if (k[0] != 1 || k[1] != 1) continue;
        if (out.size() <= static_cast<size_t>(k[2])) out.resize(static_cast<size_t>(k[2]) + 1, Rat(0));
        out[static_cast<size_t>(k[2])] = c;
    }
    return out;
}

/// Degree of the H3-linear part of a pushforward.
inline Rat h3_degree(const std::vector<Rat>& p) { return p.size() > 1 ? p[1] : Rat(0); }

/// c1 of the pushforward of O(a, b, c) to P15 for a, b >= 0: rank (a+1)(b+1) sections twisted by cH3.
inline Rat pushforward_c1(int a, int b, int c) {
    if (a < 0 || b < 0) return 0;
    return Rat((a + 1) * (b + 1) * c);
}

/// kappa = pr3_*(omega^2) with omega = O(1,1,1) on the universal (3,3) curve, as a multiple of H3.
inline Rat kappa_on_V() {
    const ChowElt curve = ChowElt::linear(3, 3, 1);
    const ChowElt omega = ChowElt::linear(1, 1, 1);
    return h3_degree(chow_pushforward(curve * omega.pow(2)));
}

/// (lambda, delta) on V as multiples of H3: lambda from c1 of the pushforward of O(1,1,1),
/// delta = 12 lambda - kappa.
inline std::pair<Rat, Rat> lambda_delta_on_V() {
    const Rat lambda = pushforward_c1(1, 1, 1);
    return {lambda, 12 * lambda - kappa_on_V()};
}

} // namespace git33

#endif
