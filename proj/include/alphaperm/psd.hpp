// Copyright 2026 The alphaperm Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <alphaperm/permanental.hpp>

#include <cmath>
#include <complex>

namespace alphaperm {

/// Largest dimension certified exactly through all principal minors.
inline constexpr std::size_t kExactPsdLimit = 8;

namespace detail {

/// Cholesky with symmetric pivoting on a float copy; pivots below -tol fail,
/// pivots in [-tol, tol] are treated as a zero column (rank deficiency).
template <class F>
bool pivoted_cholesky_psd(Matrix<F> m) {
    const std::size_t n = m.size();
    double trace = 0.0;
    for (std::size_t i = 0; i < n; ++i) trace += std::abs(m(i, i));
    const double tol = 1e-9 * std::max(trace, 1.0);
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        for (std::size_t r = k + 1; r < n; ++r)
            if (std::real(m(r, r)) > std::real(m(p, p))) p = r;
        if (p != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
            for (std::size_t i = 0; i < n; ++i) std::swap(m(i, k), m(i, p));
        }
        const double pivot = std::real(m(k, k));
        if (pivot < -tol) return false;
        if (pivot <= tol) {
            // remaining Schur complement must vanish up to tolerance
            for (std::size_t i = k; i < n; ++i)
                for (std::size_t j = k; j < n; ++j)
                    if (std::abs(m(i, j)) > std::sqrt(tol)) return false;
            return true;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            F f = m(i, k) / m(k, k);
            for (std::size_t j = k + 1; j < n; ++j) m(i, j) -= f * m(k, j);
        }
    }
    return true;
}

}  // namespace detail

/// True iff the Hermitian matrix A is positive semi-definite. Exact matrices up
/// to dimension 8 are decided by the signs of all 2^n - 1 principal minors;
/// larger or float matrices use pivoted Cholesky with tolerance 1e-9 * trace.
template <class T>
bool certify_psd(const Matrix<T>& a) {
    if (!is_hermitian(a)) throw DomainError("certify_psd: matrix is not Hermitian");
    const std::size_t n = a.size();
    if constexpr (is_exact_field_v<T>) {
        if (n <= kExactPsdLimit) {
            for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
                T minor = determinant(submatrix(a, mask));
                if (real_part(minor) < 0) return false;
            }
            return true;
        }
        return detail::pivoted_cholesky_psd(to_float_matrix(a));
    } else {
        return detail::pivoted_cholesky_psd(a);
    }
}

}  // namespace alphaperm
