#ifndef GIT33_BIFORM_BINARY_FORM_HPP
#define GIT33_BIFORM_BINARY_FORM_HPP

#include <string>
#include <vector>

#include "git33/exact/factor.hpp"

namespace git33 {

/// Binary form of fixed degree d: sum c[k] U^k V^(d-k).
class BinaryForm {
public:
    BinaryForm() = default;
    BinaryForm(int degree, std::vector<AlgScalar> c) : d_(degree), c_(std::move(c)) {
        if (static_cast<int>(c_.size()) != d_ + 1) fail(Errc::InvalidArgument, "binary form coefficient count");
        f_ = Field();
        for (const auto& a : c_) f_ = Field::common(f_, a.field());
        for (auto& a : c_) a = a.lift(f_);
    }
    static BinaryForm zero(int degree, const Field& f) {
        return BinaryForm(degree, std::vector<AlgScalar>(static_cast<size_t>(degree) + 1, AlgScalar::zero(f)));
    }
    /// Homogenizes p(u) to degree d (requires deg p <= d).
    static BinaryForm from_unipoly(const UniPoly& p, int degree) {
        if (p.degree() > degree) fail(Errc::InvalidArgument, "polynomial exceeds binary form degree");
        std::vector<AlgScalar> c;
        for (int k = 0; k <= degree; ++k) c.push_back(p.coeff(k));
        return BinaryForm(degree, std::move(c));
    }

    int degree() const { return d_; }
    const Field& field() const { return f_; }
    const std::vector<AlgScalar>& coeffs() const { return c_; }
    const AlgScalar& coeff(int k) const { return c_[static_cast<size_t>(k)]; }
    bool is_zero() const {
        for (const auto& a : c_)
            if (!a.is_zero()) return false;
        return true;
    }

    /// Dehomogenization u = U/V.
    UniPoly affine(const std::string& var = "u") const { return UniPoly(f_, c_, var); }
    /// Multiplicity of the root (1:0), i.e. the power of V dividing the form.
    int infinity_multiplicity() const {
        if (is_zero()) fail(Errc::InvalidArgument, "zero binary form");
        return d_ - affine().degree();
    }
    AlgScalar eval(const AlgScalar& u, const AlgScalar& v) const {
        AlgScalar acc = AlgScalar::zero(Field::common(Field::common(f_, u.field()), v.field()));
        for (int k = 0; k <= d_; ++k)
            acc += c_[static_cast<size_t>(k)] * u.pow(static_cast<unsigned>(k)) * v.pow(static_cast<unsigned>(d_ - k));
        return acc;
    }

    /// Multiplicities of distinct roots over the algebraic closure, sorted descending.
    std::vector<int> root_multiplicities() const {
        std::vector<int> out;
        for (const auto& fac : factor_univ(affine()).factors)
            for (int k = 0; k < fac.poly.degree(); ++k) out.push_back(fac.mult);
        if (const int inf = infinity_multiplicity(); inf > 0) out.push_back(inf);
        std::sort(out.rbegin(), out.rend());
        return out;
    }

    /// Is this c * m^d for a single linear form m (one root of full multiplicity)?
    bool is_perfect_power() const { return !is_zero() && root_multiplicities() == std::vector<int>{d_}; }

    friend bool operator==(const BinaryForm& a, const BinaryForm& b) {
        if (a.d_ != b.d_) return false;
        for (int k = 0; k <= a.d_; ++k)
            if (a.c_[static_cast<size_t>(k)] != b.c_[static_cast<size_t>(k)]) return false;
        return true;
    }

    std::string str(const std::string& u = "U", const std::string& v = "V") const {
        std::string out;
        for (int k = d_; k >= 0; --k) {
            const auto& a = c_[static_cast<size_t>(k)];
            if (a.is_zero()) continue;
            std::string cs = a.str();
            bool neg = false;
            if (a.is_rational() && cs[0] == '-') {
                neg = true;
                cs = cs.substr(1);
            }
            if (!a.is_rational()) cs = "(" + cs + ")";
            std::string mono;
            auto put = [&](const std::string& s, int e) {
                if (e == 0) return;
                if (!mono.empty()) mono += "*";
                mono += s;
                if (e > 1) mono += "^" + std::to_string(e);
            };
            put(u, k);
            put(v, d_ - k);
            std::string term = mono.empty() ? cs : (cs == "1" ? mono : cs + "*" + mono);
            if (out.empty()) out = neg ? "-" + term : term;
            else out += (neg ? " - " : " + ") + term;
        }
        return out.empty() ? "0" : out;
    }

private:
    int d_ = 0;
    Field f_;
    std::vector<AlgScalar> c_{AlgScalar(0)};
};

} // namespace git33

#endif
