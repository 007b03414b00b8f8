// Copyright 2026 The alphaperm Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file matrix.hpp
 * @brief Dense square matrices, index subsets, and block operations.
 *
 * Indices are 0-based in code and bitmasks; file formats and user-facing
 * text are 1-based.
 */

#pragma once

#include <alphaperm/ring.hpp>

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace alphaperm {

/// Largest dimension representable by an IndexSet mask.
inline constexpr std::size_t kMaxIndexBits = 64;

/// Subset of {0, ..., n-1} stored as a bitmask (bit i <-> index i).
class IndexSet {
public:
    IndexSet() = default;
    IndexSet(std::uint64_t mask, std::size_t n) : mask_(mask), n_(n) {
        if (n > kMaxIndexBits) throw DimensionError("index set dimension " + std::to_string(n) + " exceeds 64");
        if (n < kMaxIndexBits && (mask >> n) != 0)
            throw DimensionError("index set has a bit at position >= " + std::to_string(n));
    }

    static IndexSet full(std::size_t n) { return {n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1, n}; }
    static IndexSet empty(std::size_t n) { return {0, n}; }

    /// Build from 1-based indices.
    static IndexSet from_one_based(std::initializer_list<std::size_t> idx, std::size_t n) {
        std::uint64_t m = 0;
        for (std::size_t i : idx) {
            if (i == 0 || i > n) throw DimensionError("index " + std::to_string(i) + " outside [1," + std::to_string(n) + "]");
            m |= std::uint64_t{1} << (i - 1);
        }
        return {m, n};
    }

    std::uint64_t mask() const { return mask_; }
    std::size_t dimension() const { return n_; }
    std::size_t size() const { return static_cast<std::size_t>(std::popcount(mask_)); }
    bool empty() const { return mask_ == 0; }
    bool contains(std::size_t i) const { return i < 64 && ((mask_ >> i) & 1u) != 0; }

    /// Members in increasing order.
    std::vector<std::size_t> members() const {
        std::vector<std::size_t> out;
        out.reserve(size());
        for (std::uint64_t m = mask_; m != 0; m &= m - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
        return out;
    }

    friend bool operator==(const IndexSet&, const IndexSet&) = default;

private:
    std::uint64_t mask_ = 0;
    std::size_t n_ = 0;
};

/// Leading block size m of a 2x2 block partition, 1 <= m <= n-1.
struct BlockSplit {
    std::size_t m = 1;
};

template <class T>
class Matrix {
public:
    using value_type = T;

    Matrix() = default;
    explicit Matrix(std::size_t n) : n_(n), a_(n * n, from_int<T>(0)) {}
    Matrix(std::initializer_list<std::initializer_list<T>> rows) : n_(rows.size()) {
        a_.reserve(n_ * n_);
        for (const auto& row : rows) {
            if (row.size() != n_) throw DimensionError("matrix rows must all have length " + std::to_string(n_));
            for (const auto& x : row) a_.push_back(x);
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = from_int<T>(1);
        return m;
    }

    static Matrix ones(std::size_t n) {
        Matrix m(n);
        for (auto& x : m.a_) x = from_int<T>(1);
        return m;
    }

    std::size_t size() const { return n_; }

    T& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

    std::span<const T> entries() const { return a_; }

    friend bool operator==(const Matrix& x, const Matrix& y) { return x.n_ == y.n_ && x.a_ == y.a_; }

private:
    std::size_t n_ = 0;
    std::vector<T> a_;
};

// ---------------------------------------------------------------------------
// Structural predicates
// ---------------------------------------------------------------------------

template <class T>
bool is_symmetric(const Matrix<T>& a) {
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j)
            if (!(a(i, j) == a(j, i))) return false;
    return true;
}

template <class T>
bool is_hermitian(const Matrix<T>& a) {
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i; j < a.size(); ++j)
            if (!(a(j, i) == T(conj(a(i, j))))) return false;
    return true;
}

/// All entries have zero imaginary part.
template <class T>
bool is_real_matrix(const Matrix<T>& a) {
    for (const auto& x : a.entries())
        if (!is_real_value(x)) return false;
    return true;
}

template <class T>
bool is_real_symmetric(const Matrix<T>& a) {
    return is_real_matrix(a) && is_symmetric(a);
}

// ---------------------------------------------------------------------------
// Constructions
// ---------------------------------------------------------------------------

/// Principal submatrix A[I], rows and columns in increasing index order.
template <class T>
Matrix<T> submatrix(const Matrix<T>& a, const IndexSet& idx) {
    if (idx.dimension() != a.size())
        throw DimensionError("index set of dimension " + std::to_string(idx.dimension()) + " applied to " +
                             std::to_string(a.size()) + "x" + std::to_string(a.size()) + " matrix");
    auto members = idx.members();
    Matrix<T> out(members.size());
    for (std::size_t r = 0; r < members.size(); ++r)
        for (std::size_t c = 0; c < members.size(); ++c) out(r, c) = a(members[r], members[c]);
    return out;
}

/// Principal submatrix from a raw mask; the caller guarantees the mask fits.
template <class T>
Matrix<T> submatrix(const Matrix<T>& a, std::uint64_t mask) {
    return submatrix(a, IndexSet(mask, a.size()));
}

template <class T>
Matrix<T> direct_sum(const Matrix<T>& x, const Matrix<T>& y) {
    const std::size_t n1 = x.size();
    Matrix<T> out(n1 + y.size());
    for (std::size_t i = 0; i < n1; ++i)
        for (std::size_t j = 0; j < n1; ++j) out(i, j) = x(i, j);
    for (std::size_t i = 0; i < y.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j) out(n1 + i, n1 + j) = y(i, j);
    return out;
}

/// The 2n x 2n matrix [[A, A], [A, A]] for real symmetric A.
template <class T>
Matrix<T> doubled(const Matrix<T>& a) {
    if (!is_real_symmetric(a)) throw DomainError("doubled: input must be real symmetric");
    const std::size_t n = a.size();
    Matrix<T> out(2 * n);
    for (std::size_t i = 0; i < 2 * n; ++i)
        for (std::size_t j = 0; j < 2 * n; ++j) out(i, j) = a(i % n, j % n);
    return out;
}

template <class T>
Matrix<T> transpose(const Matrix<T>& a) {
    Matrix<T> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) out(j, i) = a(i, j);
    return out;
}

/// P A P^T for the permutation matrix sending index i to perm[i].
template <class T>
Matrix<T> permute_similar(const Matrix<T>& a, std::span<const std::size_t> perm) {
    if (perm.size() != a.size()) throw DimensionError("permutation length does not match matrix");
    Matrix<T> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) out(perm[i], perm[j]) = a(i, j);
    return out;
}

template <class T>
struct BlockParts {
    Matrix<T> leading;   // A'
    Matrix<T> trailing;  // A''
    Matrix<T> diagonal;  // D = A' (+) A''
};

template <class T>
BlockParts<T> split_blocks(const Matrix<T>& a, BlockSplit split) {
    const std::size_t n = a.size();
    if (split.m < 1 || split.m + 1 > n)
        throw DimensionError("block split m=" + std::to_string(split.m) + " needs 1 <= m <= " +
                             std::to_string(n > 0 ? n - 1 : 0));
    std::uint64_t lead = (std::uint64_t{1} << split.m) - 1;
    std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    BlockParts<T> parts{submatrix(a, lead), submatrix(a, all & ~lead), {}};
    parts.diagonal = direct_sum(parts.leading, parts.trailing);
    return parts;
}

template <class T>
T diagonal_product(const Matrix<T>& a) {
    T p = from_int<T>(1);
    for (std::size_t i = 0; i < a.size(); ++i) p *= a(i, i);
    return p;
}

template <class To, class From>
Matrix<To> convert_matrix(const Matrix<From>& a, To (*conv)(const From&)) {
    Matrix<To> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) out(i, j) = conv(a(i, j));
    return out;
}

inline Matrix<double> to_float_matrix(const Matrix<Rational>& a) {
    return convert_matrix<double, Rational>(a, [](const Rational& q) { return q.get_d(); });
}

inline Matrix<std::complex<double>> to_float_matrix(const Matrix<GaussianRational>& a) {
    return convert_matrix<std::complex<double>, GaussianRational>(
        a, [](const GaussianRational& z) { return to_complex_double(z); });
}

inline Matrix<GaussianRational> to_complex_matrix(const Matrix<Rational>& a) {
    return convert_matrix<GaussianRational, Rational>(a, [](const Rational& q) { return GaussianRational(q); });
}

}  // namespace alphaperm
