// Copyright 2026 The alphaperm Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file expansion.hpp
 * @brief Set-partition expansions of the alpha-permanent.
 *
 * Ordered partitions are never materialized. Every summand is a product over
 * blocks and hence independent of block order, so a sum over ordered k-block
 * partitions is k! times the sum over unordered ones.
 */

#pragma once

#include <alphaperm/partitions.hpp>
#include <alphaperm/permanental.hpp>

#include <vector>

namespace alphaperm {

/// per_beta(A[S]) for every mask S, by the selected kernel.
template <class T>
std::vector<T> block_permanents(const Matrix<T>& a, const T& beta, Kernel kernel = Kernel::Dp, const Caps& caps = {}) {
    if (kernel == Kernel::Dp) return subset_alpha_permanents(a, beta, caps);
    const std::size_t count = std::size_t{1} << a.size();
    std::vector<T> out(count);
    for (std::size_t s = 0; s < count; ++s) out[s] = per_alpha_naive(submatrix(a, s), beta, caps);
    return out;
}

/// hafnian(doubled(A[S])) for every mask S of a real symmetric A.
template <class T>
std::vector<T> block_doubled_hafnians(const Matrix<T>& a, const Caps& caps = {}) {
    const std::size_t count = std::size_t{1} << a.size();
    std::vector<T> out(count);
    for (std::size_t s = 0; s < count; ++s) out[s] = hafnian(doubled(submatrix(a, s)), caps);
    return out;
}

/// out[k] = sum over unordered k-block partitions of prod_j table[I_j], k = 0..n.
template <class T>
std::vector<T> unordered_block_sums(std::size_t n, const std::vector<T>& table) {
    std::vector<T> out(n + 1, from_int<T>(0));
    if (n == 0) {
        out[0] = from_int<T>(1);
        return out;
    }
    for_each_partition(n, std::nullopt, [&](const SetPartition& p) {
        const auto& masks = p.block_masks();
        T prod = table[masks[0]];
        for (std::size_t j = 1; j < masks.size() && !is_zero(prod); ++j) prod *= table[masks[j]];
        out[masks.size()] += prod;
    });
    return out;
}

namespace detail {

template <class T>
T factorial_as(std::size_t k) {
    T f = from_int<T>(1);
    for (std::size_t i = 2; i <= k; ++i) f *= from_int<T>(static_cast<long>(i));
    return f;
}

}  // namespace detail

/// per_beta(A, k) for k = 0..n in one pass (entry 0 is unused and zero for n >= 1).
template <class T>
std::vector<T> per_beta_all_k(const Matrix<T>& a, const T& beta, Kernel kernel = Kernel::Dp, const Caps& caps = {}) {
    std::vector<T> sums = unordered_block_sums(a.size(), block_permanents(a, beta, kernel, caps));
    for (std::size_t k = 1; k < sums.size(); ++k) sums[k] *= detail::factorial_as<T>(k);
    return sums;
}

/// Sum over ordered partitions (I_1..I_k) of [n] into nonempty blocks of prod_j per_beta(A[I_j]).
template <class T>
T per_beta_k(const Matrix<T>& a, const T& beta, std::size_t k, Kernel kernel = Kernel::Dp, const Caps& caps = {}) {
    if (k < 1 || k > a.size())
        throw DomainError("per_beta_k: k=" + std::to_string(k) + " outside [1, " + std::to_string(a.size()) + "]");
    return per_beta_all_k(a, beta, kernel, caps)[k];
}

/// det(A, k) = sum over ordered k-block partitions of prod_j det A[I_j] = (-1)^n per_{-1}(A, k).
template <class T>
std::vector<T> det_all_k(const Matrix<T>& a, Kernel kernel = Kernel::Dp, const Caps& caps = {}) {
    std::vector<T> v = per_beta_all_k(a, from_int<T>(-1), kernel, caps);
    if (a.size() % 2 == 1)
        for (auto& x : v) x = T(-x);
    return v;
}

/// Sum over ordered partitions of [n] into m = |betas| possibly empty parts of
/// prod_j per_{beta_j}(A[I_j]), by enumerating all m^n label assignments.
template <class T>
T sum_formula_rhs(const Matrix<T>& a, const std::vector<T>& betas, Kernel kernel = Kernel::Dp,
                  const Caps& caps = {}) {
    const std::size_t m = betas.size();
    const std::size_t n = a.size();
    if (m == 0) throw DomainError("sum_formula_rhs: need at least one beta");
    long double est = 1;
    for (std::size_t i = 0; i < n; ++i) est *= static_cast<long double>(m);
    if (est > static_cast<long double>(caps.assignments))
        throw CapacityError("sum_formula_rhs: " + std::to_string(m) + "^" + std::to_string(n) +
                            " assignments exceed cap " + std::to_string(caps.assignments));
    std::vector<std::vector<T>> tables;
    tables.reserve(m);
    for (const auto& b : betas) tables.push_back(block_permanents(a, b, kernel, caps));

    T total = from_int<T>(0);
    std::vector<std::size_t> label(n, 0);
    std::vector<std::uint64_t> masks(m);
    while (true) {
        std::fill(masks.begin(), masks.end(), 0);
        for (std::size_t i = 0; i < n; ++i) masks[label[i]] |= std::uint64_t{1} << i;
        T prod = tables[0][masks[0]];
        for (std::size_t j = 1; j < m && !is_zero(prod); ++j) prod *= tables[j][masks[j]];
        total += prod;
        std::size_t i = 0;
        while (i < n && ++label[i] == m) label[i++] = 0;
        if (i == n) break;
    }
    return total;
}

/// sum_{k=1}^n binom(alpha, k) per_beta(A, k); equals per_{alpha beta}(A).
template <class T>
T product_formula_rhs(const Matrix<T>& a, const T& alpha, const T& beta, Kernel kernel = Kernel::Dp,
                      const Caps& caps = {}) {
    if (a.size() == 0) throw DomainError("product_formula_rhs: needs n >= 1");
    std::vector<T> pk = per_beta_all_k(a, beta, kernel, caps);
    T total = from_int<T>(0);
    for (std::size_t k = 1; k <= a.size(); ++k) total += gen_binomial(alpha, static_cast<unsigned>(k)) * pk[k];
    return total;
}

/// For each k, the ordered-partition sum of prod_j haf(doubled(A[I_j])) (entry k).
template <class T>
std::vector<T> doubled_hafnian_all_k(const Matrix<T>& a, const Caps& caps = {}) {
    if (!is_real_symmetric(a)) throw DomainError("doubled-hafnian expansion: input must be real symmetric");
    std::vector<T> sums = unordered_block_sums(a.size(), block_doubled_hafnians(a, caps));
    for (std::size_t k = 1; k < sums.size(); ++k) sums[k] *= detail::factorial_as<T>(k);
    return sums;
}

/// 2^{-n} sum_k binom(alpha, k) sum_{ordered k-block partitions} prod_j haf(doubled(A[I_j]));
/// equals per_{alpha/2}(A) for real symmetric A.
template <class T>
T half_formula_rhs(const Matrix<T>& a, const T& alpha, const Caps& caps = {}) {
    const std::size_t n = a.size();
    if (n == 0) throw DomainError("half_formula_rhs: needs n >= 1");
    std::vector<T> hk = doubled_hafnian_all_k(a, caps);
    T total = from_int<T>(0);
    for (std::size_t k = 1; k <= n; ++k) total += gen_binomial(alpha, static_cast<unsigned>(k)) * hk[k];
    total /= power(from_int<T>(2), static_cast<unsigned>(n));
    return total;
}

}  // namespace alphaperm
