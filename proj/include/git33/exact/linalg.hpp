#ifndef GIT33_EXACT_LINALG_HPP
#define GIT33_EXACT_LINALG_HPP

#include <optional>
#include <utility>
#include <vector>

#include "git33/exact/field.hpp"

namespace git33 {

inline bool is_zero(const Rat& r) { return r == 0; }
inline bool is_zero(const AlgScalar& a) { return a.is_zero(); }

template <class T>
using Matrix = std::vector<std::vector<T>>;

/// Determinant by Gaussian elimination over a field.
template <class T>
T determinant(Matrix<T> m) {
    const size_t n = m.size();
    if (n == 0) return T(1);
    T det(1);
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && is_zero(m[piv][col])) ++piv;
        if (piv == n) return T(0);
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        det *= m[col][col];
        const T inv = T(1) / m[col][col];
        for (size_t r = col + 1; r < n; ++r) {
            if (is_zero(m[r][col])) continue;
            const T f = m[r][col] * inv;
            for (size_t k = col; k < n; ++k) m[r][k] -= f * m[col][k];
        }
    }
    return det;
}

/// Reduced row echelon form in place; returns pivot columns.
template <class T>
std::vector<size_t> rref(Matrix<T>& m, size_t ncols) {
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < ncols && row < m.size(); ++col) {
        size_t piv = row;
        while (piv < m.size() && is_zero(m[piv][col])) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[row]);
        const T inv = T(1) / m[row][col];
        for (size_t k = col; k < m[row].size(); ++k) m[row][k] *= inv;
        for (size_t r = 0; r < m.size(); ++r) {
            if (r == row || is_zero(m[r][col])) continue;
            const T f = m[r][col];
            for (size_t k = col; k < m[r].size(); ++k) m[r][k] -= f * m[row][k];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

/// Solves A x = b; nullopt when inconsistent. Free variables are set to zero.
template <class T>
std::optional<std::vector<T>> solve_linear(const Matrix<T>& a, const std::vector<T>& b) {
    const size_t n = a.empty() ? 0 : a[0].size();
    Matrix<T> m = a;
    for (size_t r = 0; r < m.size(); ++r) m[r].push_back(b[r]);
    const auto piv = rref(m, n);
    for (size_t r = piv.size(); r < m.size(); ++r)
        if (!is_zero(m[r][n])) return std::nullopt;
    std::vector<T> x(n, T(0));
    for (size_t r = 0; r < piv.size(); ++r) x[piv[r]] = m[r][n];
    return x;
}

/// Basis of the right kernel of A (columns ncols).
template <class T>
Matrix<T> nullspace(Matrix<T> m, size_t ncols) {
    const auto piv = rref(m, ncols);
    std::vector<bool> is_piv(ncols, false);
    for (auto p : piv) is_piv[p] = true;
    Matrix<T> basis;
    for (size_t f = 0; f < ncols; ++f) {
        if (is_piv[f]) continue;
        std::vector<T> v(ncols, T(0));
        v[f] = T(1);
        for (size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m[r][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

template <class T>
size_t rank(Matrix<T> m, size_t ncols) {
    return rref(m, ncols).size();
}

} // namespace git33

#endif
