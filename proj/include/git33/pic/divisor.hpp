#ifndef GIT33_PIC_DIVISOR_HPP
#define GIT33_PIC_DIVISOR_HPP

#include <array>
#include <cctype>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "git33/exact/error.hpp"
#include "git33/exact/linalg.hpp"
#include "git33/pic/chow.hpp"

namespace git33 {

/// Divisor class in the ordered basis (lambda, delta0, delta1, delta2, P).
struct DivClass {
    static constexpr size_t kDim = 5;
    std::array<Rat, kDim> c{};

    static DivClass basis(size_t i) {
        DivClass d;
        d.c[i] = 1;
        return d;
    }
    static DivClass lambda() { return basis(0); }
    static DivClass delta0() { return basis(1); }
    static DivClass delta1() { return basis(2); }
    static DivClass delta2() { return basis(3); }
    static DivClass petri_symbol() { return basis(4); }
    /// delta = delta0 + delta1 + delta2
    static DivClass delta() { return delta0() + delta1() + delta2(); }

    const Rat& operator[](size_t i) const { return c[i]; }
    Rat& operator[](size_t i) { return c[i]; }

    friend DivClass operator+(DivClass a, const DivClass& b) {
        for (size_t i = 0; i < kDim; ++i) a.c[i] += b.c[i];
        return a;
    }
    friend DivClass operator-(DivClass a, const DivClass& b) {
        for (size_t i = 0; i < kDim; ++i) a.c[i] -= b.c[i];
        return a;
    }
    friend DivClass operator*(const Rat& s, DivClass a) {
        for (auto& x : a.c) x *= s;
        return a;
    }
    friend bool operator==(const DivClass& a, const DivClass& b) { return a.c == b.c; }
    bool is_zero() const {
        for (const auto& x : c)
            if (x != 0) return false;
        return true;
    }

    std::string str(bool ascii = false) const {
        static const char* uni[kDim] = {"λ", "δ₀", "δ₁", "δ₂", "P"};
        static const char* asc[kDim] = {"lambda", "delta0", "delta1", "delta2", "P"};
        std::string out;
        for (size_t i = 0; i < kDim; ++i) {
            if (c[i] == 0) continue;
            const Rat a = abs(c[i]);
            if (!out.empty()) out += c[i] < 0 ? (ascii ? " - " : " − ") : " + ";
            else if (c[i] < 0) out += ascii ? "-" : "−";
            if (a != 1 && ascii) out += a.get_str() + "*";
            else if (a != 1) out += a.get_den() == 1 ? a.get_str() : "(" + a.get_str() + ")";
            out += ascii ? asc[i] : uni[i];
        }
        return out.empty() ? "0" : out;
    }
    friend std::ostream& operator<<(std::ostream& os, const DivClass& d) { return os << d.str(true); }
};

/// lambda * T, delta0 * T, delta1 * T, delta2 * T, P * T for a test curve T.
struct TestFamily {
    std::string name;
    DivClass dot;  // intersection numbers, stored in the DivClass slots
};

inline Rat intersect(const DivClass& d, const TestFamily& t) {
    Rat s = 0;
    for (size_t i = 0; i < DivClass::kDim; ++i) s += d[i] * t.dot[i];
    return s;
}

/// Class of the Petri divisor in (lambda, delta0, delta1, delta2).
inline DivClass petri_class() {
    DivClass p;
    p.c = {17, -2, -7, -9, 0};
    return p;
}

/// Replaces the P symbol by its class.
inline DivClass petri_rewrite(const DivClass& d) {
    DivClass r = d;
    r[4] = 0;
    return r + d[4] * petri_class();
}

/// P * T from the Petri class and the other four intersection numbers.
inline Rat petri_dot(const DivClass& t) {
    const DivClass p = petri_class();
    Rat s = 0;
    for (size_t i = 0; i < 4; ++i) s += p[i] * t[i];
    return s;
}

inline std::vector<TestFamily> test_families() {
    auto fam = [](std::string n, long l, long d0, long d1, long d2, std::optional<long> p) {
        TestFamily t{std::move(n), {}};
        t.dot.c = {l, d0, d1, d2, 0};
        t.dot[4] = p ? Rat(*p) : petri_dot(t.dot);
        return t;
    };
    return {fam("T1", 1, 12, -1, 0, 0), fam("T2", 3, 30, 0, -1, 0), fam("T3", 7, 60, 0, 0, std::nullopt)};
}

struct Pullbacks {
    DivClass lambda;  // f^* lambda
    DivClass delta;   // f^* delta
};

/// f^* lambda = lambda + a0 d1 + b0 d2 + c0 P and f^* delta = d0 + a1 d1 + b1 d2 + c1 P with every
/// test family contracted.
inline Pullbacks solve_pullback_coeffs(const std::vector<TestFamily>& fams) {
    if (fams.size() != 3) fail(Errc::InvalidArgument, "three test families are needed");
    Matrix<Rat> m;
    std::vector<Rat> rl, rd;
    for (const auto& t : fams) {
        m.push_back({t.dot[2], t.dot[3], t.dot[4]});
        rl.push_back(-t.dot[0]);
        rd.push_back(-t.dot[1]);
    }
    if (determinant(m) == 0) fail(Errc::SingularSystem, "test family intersection matrix is singular");
    const auto xl = solve_linear(m, rl), xd = solve_linear(m, rd);
    Pullbacks p;
    p.lambda = DivClass::lambda();
    p.delta = DivClass::delta0();
    for (size_t i = 0; i < 3; ++i) {
        p.lambda[i + 2] = (*xl)[i];
        p.delta[i + 2] = (*xd)[i];
    }
    return p;
}

inline Pullbacks pullbacks() { return solve_pullback_coeffs(test_families()); }

/// f^* of a lambda - b delta.
inline DivClass pullback(const Rat& a, const Rat& b, const Pullbacks& pb = pullbacks()) {
    return a * pb.lambda - b * pb.delta;
}

/// (K + alpha delta) - f^* f_* (K + alpha delta) with K = 13 lambda - 2 delta.
inline DivClass discrepancy(const Rat& alpha, const Pullbacks& pb = pullbacks()) {
    const DivClass k = Rat(13) * DivClass::lambda() - (2 - alpha) * DivClass::delta();
    return k - pullback(13, 2 - alpha, pb);
}

inline bool is_effective_exceptional(const DivClass& d) {
    for (const auto& x : d.c)
        if (x < 0) return false;
    return true;
}

/// Degree of f_*(K + alpha delta) = 13 lambda - (2 - alpha) delta on the quotient, in units of O(1).
inline Rat model_polarization(const Rat& alpha) {
    const auto [l, d] = lambda_delta_on_V();
    return 13 * l - (2 - alpha) * d;
}

/// Root of an affine function r(alpha) from two samples.
template <class F>
Rat affine_root(F&& r) {
    const Rat r0 = r(Rat(0)), r1 = r(Rat(1));
    if (r1 == r0) fail(Errc::SingularSystem, "function is constant in alpha");
    return r0 / (r0 - r1);
}

struct MovingSlopeCertificate {
    DivClass divisor;  // f^*(60 lambda - 7 delta)
    Rat slope;
    Rat degree_on_quotient;  // of 60 lambda - 7 delta
    std::vector<std::string> inequalities;
};

inline MovingSlopeCertificate moving_slope_certificate() {
    const auto fams = test_families();
    const Pullbacks pb = solve_pullback_coeffs(fams);
    MovingSlopeCertificate m;
    // the ample class a lambda - b delta on the quotient killing P in the pullback
    const Rat a = pb.delta[4], b = pb.lambda[4];
    m.divisor = pullback(a, b, pb);
    if (m.divisor[4] != 0) fail(Errc::SingularSystem, "pullback keeps a P term");
    const auto [l, d] = lambda_delta_on_V();
    m.degree_on_quotient = a * l - b * d;
    // D = a lambda - b0 d0 - b1 d1 - b2 d2; D.T >= 0 for each covering family
    for (const auto& t : fams) {
        std::string s;
        const char* names[4] = {"a", "b0", "b1", "b2"};
        for (size_t i = 0; i < 4; ++i) {
            const Rat coef = i == 0 ? t.dot[i] : Rat(-t.dot[i]);
            if (coef == 0) continue;
            const Rat mag = abs(coef);
            if (!s.empty()) s += coef < 0 ? " - " : " + ";
            else if (coef < 0) s += "-";
            s += (mag == 1 ? "" : mag.get_str()) + names[i];
        }
        m.inequalities.push_back("D." + t.name + " >= 0: " + s + " >= 0");
    }
    const TestFamily& t3 = fams[2];
    m.slope = t3.dot[1] / t3.dot[0];
    return m;
}

/// Parses "60λ - 7δ", "17*lambda - 2*delta0 - 7*delta1 - 9*delta2", "P"; a bare δ means δ₀ + δ₁ + δ₂.
inline DivClass parse_divclass(const std::string& src) {
    struct Sym {
        const char* name;
        DivClass cls;
    };
    const std::vector<Sym> syms = {
        {"lambda", DivClass::lambda()}, {"λ", DivClass::lambda()},         {"delta0", DivClass::delta0()},
        {"delta1", DivClass::delta1()}, {"delta2", DivClass::delta2()},    {"δ₀", DivClass::delta0()},
        {"δ₁", DivClass::delta1()},     {"δ₂", DivClass::delta2()},        {"δ0", DivClass::delta0()},
        {"δ1", DivClass::delta1()},     {"δ2", DivClass::delta2()},        {"delta", DivClass::delta()},
        {"δ", DivClass::delta()},       {"P", DivClass::petri_symbol()}};
    DivClass out;
    size_t i = 0;
    auto skip = [&] {
        while (i < src.size() && (src[i] == ' ' || src[i] == '\t')) ++i;
    };
    auto err = [&](const std::string& m) { fail(Errc::ParseError, m + " at position " + std::to_string(i)); };
    bool first = true;
    for (;;) {
        skip();
        if (i >= src.size()) break;
        Rat sign = 1;
        if (src.compare(i, 3, "−") == 0) {
            sign = -1;
            i += 3;
        } else if (src[i] == '-' || src[i] == '+') {
            sign = src[i] == '-' ? -1 : 1;
            ++i;
        } else if (!first) {
            err("expected '+' or '-'");
        }
        skip();
        Rat coef = 1;
        const bool paren = i < src.size() && src[i] == '(';
        if (paren) ++i;
        const size_t num0 = i;
        while (i < src.size() && (std::isdigit(static_cast<unsigned char>(src[i])) || src[i] == '/')) ++i;
        if (i > num0) {
            coef = parse_rat(src.substr(num0, i - num0));
            if (paren && (i >= src.size() || src[i++] != ')')) err("expected ')'");
            skip();
            if (i < src.size() && src[i] == '*') ++i;
            skip();
        }
        bool matched = false;
        for (const auto& s : syms) {
            const std::string n = s.name;
            if (src.compare(i, n.size(), n) != 0) continue;
            i += n.size();
            out = out + (sign * coef) * s.cls;
            matched = true;
            break;
        }
        if (!matched) err("expected a divisor symbol");
        first = false;
    }
    if (first) fail(Errc::ParseError, "empty divisor expression at position 0");
    return out;
}

} // namespace git33

#endif
