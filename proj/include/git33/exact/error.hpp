#ifndef GIT33_EXACT_ERROR_HPP
#define GIT33_EXACT_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace git33 {

/// Typed failure codes shared by every module.
enum class Errc {
    FieldMismatch,
    TowerTooDeep,
    SwapOnAsymmetricBidegree,
    FactorizationIncomplete,
    DegenerateImage,
    NonIsolated,
    NonReduced,
    NotDoubleConic,
    NotOnCurve,
    Paradox,
    SingularSystem,
    ParseError,
    WrongBidegree,
    InvalidArgument,
    DivisionByZero,
};

inline std::string_view errc_name(Errc c) {
    switch (c) {
    case Errc::FieldMismatch: return "FIELD_MISMATCH";
    case Errc::TowerTooDeep: return "TOWER_TOO_DEEP";
    case Errc::SwapOnAsymmetricBidegree: return "SWAP_ON_ASYMMETRIC_BIDEGREE";
    case Errc::FactorizationIncomplete: return "FACTORIZATION_INCOMPLETE";
    case Errc::DegenerateImage: return "DEGENERATE_IMAGE";
    case Errc::NonIsolated: return "NON_ISOLATED";
    case Errc::NonReduced: return "NONREDUCED";
    case Errc::NotDoubleConic: return "NOT_DOUBLE_CONIC";
    case Errc::NotOnCurve: return "NOT_ON_CURVE";
    case Errc::Paradox: return "PARADOX";
    case Errc::SingularSystem: return "SINGULAR_SYSTEM";
    case Errc::ParseError: return "PARSE_ERROR";
    case Errc::WrongBidegree: return "WRONG_BIDEGREE";
    case Errc::InvalidArgument: return "INVALID_ARGUMENT";
    case Errc::DivisionByZero: return "DIVISION_BY_ZERO";
    }
    return "UNKNOWN";
}

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

} // namespace git33

#endif
