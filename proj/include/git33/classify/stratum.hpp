#ifndef GIT33_CLASSIFY_STRATUM_HPP
#define GIT33_CLASSIFY_STRATUM_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "git33/classify/orbit.hpp"

namespace git33 {

inline const std::string kNoTableRow = "no Table-1 row";

/// Rows of the table of stable-limit strata matching the curve, most special first.
inline std::vector<std::string> stratum_labels(const StabilityVerdict& v, const std::optional<ClosedOrbitRep>& orbit,
                                               const std::vector<SingularityReport>& sing) {
    std::vector<std::string> out;
    if (v.status == Stability::Unstable) return out;
    if (!v.reduced) {
        if (std::any_of(v.evidence.begin(), v.evidence.end(),
                        [](const Witness& w) { return w.kind == WitnessKind::NonReduced && w.note == "triple conic"; }))
            out.push_back("the Petri divisor P");
        else
            out.push_back("curves in Δ₀ with a hyperelliptic normalization");
        return out;
    }
    auto count = [&](SingularityType t, std::optional<bool> separating = std::nullopt) {
        int n = 0;
        for (const auto& r : sing)
            if (r.type == t && (!separating || r.separating == *separating)) n += r.orbit;
        return n;
    };
    using T = SingularityType;
    if (count(T::A(5), true) >= 2 && (!orbit || orbit->kind == OrbitKind::MaxDegenerateA5)) out.push_back("Δ₂");
    if (count(T::A(8)) + count(T::A(9)) > 0) out.push_back("hyperelliptic curves");
    if (count(T::D(4)) > 0) out.push_back("elliptic triboroughs");
    if (count(T::A(7)) > 0) out.push_back("hyperelliptic genus 3 tails attached nodally");
    if (count(T::A(6)) > 0) out.push_back("hyperelliptic genus 3 tails attached nodally at a Weierstrass point");
    if (count(T::A(5), false) > 0) out.push_back("genus 2 bridges attached nodally at conjugate points");
    if (count(T::A(4)) > 0) out.push_back("genus 2 tails attached nodally at a Weierstrass point");
    if (count(T::A(3)) > 0) out.push_back("elliptic bridges attached nodally");
    if (count(T::A(2)) > 0) out.push_back("elliptic tails attached nodally");
    return out;
}

inline std::string stratum_label(const StabilityVerdict& v, const std::optional<ClosedOrbitRep>& orbit,
                                 const std::vector<SingularityReport>& sing) {
    const auto rows = stratum_labels(v, orbit, sing);
    return rows.empty() ? kNoTableRow : rows.front();
}

} // namespace git33

#endif
