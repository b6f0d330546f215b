#ifndef GIT33_EXACT_RATIONAL_HPP
#define GIT33_EXACT_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

#include "git33/exact/error.hpp"

namespace git33 {

/// Arbitrary-precision rational, always canonical (lowest terms, positive denominator).
using Rat = mpq_class;
using Int = mpz_class;

inline Rat make_rat(const Int& num, const Int& den = 1) {
    if (den == 0) fail(Errc::DivisionByZero, "rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat make_rat(long num, long den = 1) { return make_rat(Int(num), Int(den)); }

/// Parses "p" or "p/q" (optional sign, decimal digits only).
inline Rat parse_rat(const std::string& s) {
    if (s.empty()) fail(Errc::ParseError, "empty rational literal");
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        return make_rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        fail(Errc::ParseError, "bad rational literal '" + s + "'");
    }
}

inline std::string to_string(const Rat& r) { return r.get_str(); }

inline int sign(const Rat& r) { return sgn(r); }

} // namespace git33

#endif
