#ifndef GIT33_SING_LOCAL_ALGEBRA_HPP
#define GIT33_SING_LOCAL_ALGEBRA_HPP

#include <optional>
#include <vector>

#include "git33/biform/bipoly.hpp"

namespace git33 {

/// Default truncation order for local algebra computations.
inline constexpr int kDefaultTruncation = 64;

namespace detail {

// Monomials of total degree < N, ordered by degree then by z-exponent.
inline int mono_index(int i, int j) {
    const int d = i + j;
    return d * (d + 1) / 2 + j;
}
inline int mono_degree(int idx) {
    int d = 0;
    while ((d + 1) * (d + 2) / 2 <= idx) ++d;
    return d;
}

template <class T>
using SparseRow = std::vector<std::pair<int, T>>;  // sorted by index

template <class T>
T to_scalar(const AlgScalar& a);
template <>
inline Rat to_scalar<Rat>(const AlgScalar& a) { return a.rational(); }
template <>
inline AlgScalar to_scalar<AlgScalar>(const AlgScalar& a) { return a; }

// row - c * piv, both sorted
template <class T>
SparseRow<T> axpy(const SparseRow<T>& row, const T& c, const SparseRow<T>& piv) {
    SparseRow<T> out;
    out.reserve(row.size() + piv.size());
    size_t a = 0, b = 0;
    while (a < row.size() || b < piv.size()) {
        if (b == piv.size() || (a < row.size() && row[a].first < piv[b].first)) {
            out.push_back(row[a++]);
        } else if (a == row.size() || piv[b].first < row[a].first) {
            out.emplace_back(piv[b].first, -(c * piv[b].second));
            ++b;
        } else {
            T v = row[a].second - c * piv[b].second;
            if (!is_zero(v)) out.emplace_back(row[a].first, std::move(v));
            ++a;
            ++b;
        }
    }
    return out;
}

/// Number of pivots of each degree in an echelon basis of the truncated ideal span.
template <class T>
std::vector<int> pivot_degrees(const std::vector<BiPoly>& gens, int N) {
    const int nmon = N * (N + 1) / 2;
    std::vector<SparseRow<T>> piv(static_cast<size_t>(nmon));
    std::vector<bool> has(static_cast<size_t>(nmon), false);
    std::vector<int> count(static_cast<size_t>(N), 0);
    for (int shift = 0; shift < N; ++shift) {
        for (const auto& g : gens) {
            const int og = g.order();
            if (og < 0 || og + shift >= N) continue;
            for (int a = 0; a <= shift; ++a) {
                const int b = shift - a;
                SparseRow<T> row;
                for (const auto& [k, c] : g.terms()) {
                    const int i = k.first + a, j = k.second + b;
                    if (i + j >= N) continue;
                    row.emplace_back(mono_index(i, j), to_scalar<T>(c));
                }
                std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
                while (!row.empty()) {
                    const int lead = row.front().first;
                    if (!has[static_cast<size_t>(lead)]) {
                        const T inv = T(1) / row.front().second;
                        for (auto& e : row) e.second *= inv;
                        piv[static_cast<size_t>(lead)] = std::move(row);
                        has[static_cast<size_t>(lead)] = true;
                        ++count[static_cast<size_t>(mono_degree(lead))];
                        break;
                    }
                    const T c = row.front().second;
                    row = axpy(row, c, piv[static_cast<size_t>(lead)]);
                }
            }
        }
    }
    return count;
}

} // namespace detail

/// Dimensions d(n) = dim K[x,z] / (I + m^n) for n = 0..N, I generated by `gens`.
inline std::vector<int> truncated_dimensions(const std::vector<BiPoly>& gens, int N) {
    Field k;
    for (const auto& g : gens) k = Field::common(k, g.field());
    const std::vector<int> count =
        k.is_rational() ? detail::pivot_degrees<Rat>(gens, N) : detail::pivot_degrees<AlgScalar>(gens, N);
    std::vector<int> d(static_cast<size_t>(N) + 1, 0);
    int pivots = 0;
    for (int n = 1; n <= N; ++n) {
        pivots += count[static_cast<size_t>(n - 1)];
        d[static_cast<size_t>(n)] = n * (n + 1) / 2 - pivots;
    }
    return d;
}

/// dim O/(gens) at the origin, certified by three equal consecutive truncated dimensions.
/// Returns nullopt if no certificate is found up to order `cap`.
inline std::optional<int> local_dimension(const std::vector<BiPoly>& gens, int cap = kDefaultTruncation) {
    for (int N = std::min(4, cap);; N = std::min(2 * N, cap)) {
        const auto d = truncated_dimensions(gens, N);
        for (int n = 2; n <= N; ++n)
            if (d[static_cast<size_t>(n)] == d[static_cast<size_t>(n - 1)] &&
                d[static_cast<size_t>(n - 1)] == d[static_cast<size_t>(n - 2)] && n >= 3)
                return d[static_cast<size_t>(n)];
        if (N >= cap) return std::nullopt;
    }
}

/// Milnor number at the origin; NON_ISOLATED when the truncated dimensions do not stabilize.
inline int milnor_number(const BiPoly& f, int cap = kDefaultTruncation) {
    const auto mu = local_dimension({f.dx(), f.dz()}, cap);
    if (!mu) fail(Errc::NonIsolated, "Milnor algebra did not stabilize by order " + std::to_string(cap));
    return *mu;
}

/// Local intersection multiplicity of g and h at the origin.
inline int intersection_multiplicity(const BiPoly& g, const BiPoly& h, int cap = kDefaultTruncation) {
    const auto d = local_dimension({g, h}, cap);
    if (!d) fail(Errc::NonIsolated, "curves share a component through the point");
    return *d;
}

} // namespace git33

#endif
