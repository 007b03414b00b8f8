// Copyright 2026 The alphaperm Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file permanental.hpp
 * @brief alpha-permanent, permanent, determinant, hafnian and alpha-determinant kernels.
 *
 * per_alpha(A) = sum over permutations pi of alpha^{cycles(pi)} prod_i a_{i,pi(i)}.
 *
 * Two independent routes are provided for per_alpha:
 *
 *   per_alpha_naive   enumerates all n! permutations and counts cycles. Trusted
 *                     oracle; practical up to n ~ 10.
 *   per_alpha_dp      groups permutations by their cycle partition. With C(S) the
 *                     sum of directed cycle products over all cyclic orderings of
 *                     S, per_alpha(A[T]) = sum_{S subset T, min T in S}
 *                     alpha C(S) per_alpha(A[T \ S]). O(3^n + 2^n n^2) ring ops.
 *
 * Exact kernels clear denominators first (A = M / d, alpha = p / q) and run in
 * big-integer arithmetic, dividing once at the end. Float kernels run directly;
 * their reduction order is the fixed sequential loop order below.
 */

#pragma once

#include <alphaperm/matrix.hpp>
#include <alphaperm/scalar.hpp>

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

namespace alphaperm {

/// Problem-size caps (matrix dimension unless noted).
struct Caps {
    std::size_t naive = 10;
    std::size_t dp = 18;
    std::size_t ryser = 24;
    std::size_t hafnian = 20;                  ///< dimension of the (even) hafnian input
    std::uint64_t assignments = 10'000'000;    ///< label assignments m^n in sum_formula_rhs
};

/// Which per_alpha route an evaluation uses.
enum class Kernel { Dp, Naive };

namespace detail {

inline void require_cap(std::size_t n, std::size_t cap, const char* what) {
    if (n > cap)
        throw CapacityError(std::string(what) + ": dimension " + std::to_string(n) + " exceeds cap " +
                            std::to_string(cap));
}

template <class Q>
struct ClearedMatrix {
    Matrix<integer_ring_of_t<Q>> m;
    mpz_class d;  // A = m / d
};

template <class Q>
ClearedMatrix<Q> clear_denominators(const Matrix<Q>& a) {
    mpz_class d = 1;
    for (const auto& x : a.entries()) lcm_into(d, x);
    Matrix<integer_ring_of_t<Q>> m(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) m(i, j) = scale_to_integer(a(i, j), d);
    return {std::move(m), std::move(d)};
}

/// x / d for an integral x of the ring matching Q.
template <class Q>
Q divide_out(const integer_ring_of_t<Q>& x, const mpz_class& d) {
    if constexpr (std::is_same_v<Q, Rational>) {
        Rational r(x, d);
        r.canonicalize();
        return r;
    } else {
        Rational re(x.re, d);
        Rational im(x.im, d);
        re.canonicalize();
        im.canonicalize();
        return {std::move(re), std::move(im)};
    }
}

/// C(S) for every nonempty mask S: sum over cyclic orderings of S of the directed
/// cycle product. Paths are anchored at min(S) and extended only by larger indices.
template <class Z>
std::vector<Z> all_cycle_sums(const Matrix<Z>& m) {
    const std::size_t n = m.size();
    const std::size_t count = std::size_t{1} << n;
    std::vector<Z> cycle(count, from_int<Z>(0));
    std::vector<Z> paths(count * n, from_int<Z>(0));  // paths[mask * n + end]
    for (std::size_t a = 0; a < n; ++a) paths[(std::size_t{1} << a) * n + a] = from_int<Z>(1);

    for (std::size_t mask = 1; mask < count; ++mask) {
        const std::size_t anchor = static_cast<std::size_t>(std::countr_zero(mask));
        Z total = from_int<Z>(0);
        for (std::size_t bits = mask; bits != 0; bits &= bits - 1) {
            const std::size_t v = static_cast<std::size_t>(std::countr_zero(bits));
            const Z& g = paths[mask * n + v];
            if (is_zero(g)) continue;
            total += g * m(v, anchor);
            for (std::size_t w = anchor + 1; w < n; ++w) {
                if ((mask >> w) & 1u) continue;
                paths[(mask | (std::size_t{1} << w)) * n + w] += g * m(v, w);
            }
        }
        cycle[mask] = std::move(total);
    }
    return cycle;
}

/// f(T) = sum_{S subset T, min T in S} weight(S) f(T \ S), f(empty) = 1.
template <class Z>
std::vector<Z> subset_partition_sums(const std::vector<Z>& weight) {
    const std::size_t count = weight.size();
    std::vector<Z> f(count, from_int<Z>(0));
    f[0] = from_int<Z>(1);
    for (std::size_t t = 1; t < count; ++t) {
        const std::size_t low = t & (~t + 1);
        const std::size_t rest = t ^ low;
        Z acc = from_int<Z>(0);
        for (std::size_t sub = rest;; sub = (sub - 1) & rest) {
            const std::size_t s = sub | low;
            if (!is_zero(weight[s]) && !is_zero(f[t ^ s])) acc += weight[s] * f[t ^ s];
            if (sub == 0) break;
        }
        f[t] = std::move(acc);
    }
    return f;
}

/// Integer-scaled alpha-permanents of all principal submatrices:
/// entry S equals per_alpha(A[S]) * (q d)^{|S|}.
template <class Z>
std::vector<Z> scaled_alpha_table(const Matrix<Z>& m, const Z& alpha_num, const mpz_class& alpha_den) {
    const std::size_t n = m.size();
    std::vector<Z> weight = all_cycle_sums(m);
    std::vector<mpz_class> qpow(n + 1, mpz_class(1));
    for (std::size_t k = 1; k <= n; ++k) qpow[k] = qpow[k - 1] * alpha_den;
    for (std::size_t s = 1; s < weight.size(); ++s) {
        if (is_zero(weight[s])) continue;
        const auto size = static_cast<std::size_t>(std::popcount(s));
        weight[s] *= alpha_num;
        if (size > 1) weight[s] *= Z(qpow[size - 1]);
    }
    return subset_partition_sums(weight);
}

template <class T>
std::vector<T> float_alpha_table(const Matrix<T>& a, const T& alpha) {
    std::vector<T> weight = all_cycle_sums(a);
    for (std::size_t s = 1; s < weight.size(); ++s) weight[s] *= alpha;
    return subset_partition_sums(weight);
}

template <class Z>
Z ryser_kernel(const Matrix<Z>& m) {
    const std::size_t n = m.size();
    if (n == 0) return from_int<Z>(1);
    std::vector<Z> row_sums(n, from_int<Z>(0));
    Z total = from_int<Z>(0);
    std::uint64_t gray = 0;
    const std::uint64_t count = std::uint64_t{1} << n;
    for (std::uint64_t k = 1; k < count; ++k) {
        const auto j = static_cast<std::size_t>(std::countr_zero(k));
        gray ^= std::uint64_t{1} << j;
        const bool added = ((gray >> j) & 1u) != 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (added)
                row_sums[i] += m(i, j);
            else
                row_sums[i] -= m(i, j);
        }
        Z prod = row_sums[0];
        for (std::size_t i = 1; i < n && !is_zero(prod); ++i) prod *= row_sums[i];
        if (std::popcount(gray) % 2 == 0)
            total += prod;
        else
            total -= prod;
    }
    // per = (-1)^n sum_S (-1)^{|S|} prod_i rowsum_S(i)
    if (n % 2 == 1) total = Z(-total);
    return total;
}

inline void exact_divide(mpz_class& x, const mpz_class& y) { mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t()); }
template <class T>
void exact_divide(T& x, const T& y) {
    x /= y;
}

/// Fraction-free elimination; every division is exact.
template <class T>
T bareiss(Matrix<T> m) {
    const std::size_t n = m.size();
    if (n == 0) return from_int<T>(1);
    bool negate = false;
    T prev = from_int<T>(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (is_zero(m(k, k))) {
            std::size_t r = k + 1;
            while (r < n && is_zero(m(r, k))) ++r;
            if (r == n) return from_int<T>(0);
            for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(r, j));
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                T v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                exact_divide(v, prev);
                m(i, j) = std::move(v);
            }
        }
        prev = m(k, k);
    }
    T det = m(n - 1, n - 1);
    return negate ? T(-det) : det;
}

template <class T>
T pivoted_elimination_det(Matrix<T> m) {
    const std::size_t n = m.size();
    T det = from_int<T>(1);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        for (std::size_t r = k + 1; r < n; ++r)
            if (std::abs(m(r, k)) > std::abs(m(p, k))) p = r;
        if (m(p, k) == from_int<T>(0)) return from_int<T>(0);
        if (p != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
            det = -det;
        }
        det *= m(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            T f = m(i, k) / m(k, k);
            for (std::size_t j = k + 1; j < n; ++j) m(i, j) -= f * m(k, j);
        }
    }
    return det;
}

/// Hafnian by matching the lowest free vertex, memoized over the free-vertex mask.
template <class Z>
Z hafnian_kernel(const Matrix<Z>& c) {
    const std::size_t dim = c.size();
    if (dim == 0) return from_int<Z>(1);
    const std::size_t count = std::size_t{1} << dim;
    std::vector<Z> f(count, from_int<Z>(0));
    f[0] = from_int<Z>(1);
    for (std::size_t mask = 1; mask < count; ++mask) {
        if (std::popcount(mask) % 2 != 0) continue;
        const auto i = static_cast<std::size_t>(std::countr_zero(mask));
        const std::size_t rest = mask ^ (std::size_t{1} << i);
        Z acc = from_int<Z>(0);
        for (std::size_t bits = rest; bits != 0; bits &= bits - 1) {
            const auto j = static_cast<std::size_t>(std::countr_zero(bits));
            const Z& sub = f[rest ^ (std::size_t{1} << j)];
            if (!is_zero(sub) && !is_zero(c(i, j))) acc += c(i, j) * sub;
        }
        f[mask] = std::move(acc);
    }
    return f[count - 1];
}

template <class T>
T hafnian_recursive(const Matrix<T>& c, std::vector<std::size_t>& free) {
    if (free.empty()) return from_int<T>(1);
    const std::size_t i = free.front();
    T acc = from_int<T>(0);
    for (std::size_t k = 1; k < free.size(); ++k) {
        const std::size_t j = free[k];
        if (is_zero(c(i, j))) continue;
        std::vector<std::size_t> rest;
        rest.reserve(free.size() - 2);
        for (std::size_t t = 1; t < free.size(); ++t)
            if (t != k) rest.push_back(free[t]);
        acc += c(i, j) * hafnian_recursive(c, rest);
    }
    return acc;
}

template <class T>
void require_hafnian_input(const Matrix<T>& c, const Caps& caps) {
    if (c.size() % 2 != 0) throw DimensionError("hafnian: odd dimension " + std::to_string(c.size()));
    if (!is_symmetric(c)) throw DomainError("hafnian: input must be symmetric");
    require_cap(c.size(), caps.hafnian, "hafnian");
}

}  // namespace detail

// ---------------------------------------------------------------------------
// alpha-permanent
// ---------------------------------------------------------------------------

/// Coefficients c[k] = sum over permutations with exactly k cycles of prod a_{i,pi(i)},
/// by direct enumeration of S_n. per_alpha(A) = sum_k c[k] alpha^k.
template <class T>
std::vector<T> cycle_count_coefficients(const Matrix<T>& a, const Caps& caps = {}) {
    const std::size_t n = a.size();
    detail::require_cap(n, caps.naive, "per_alpha_naive");
    std::vector<T> coef(n + 1, from_int<T>(0));
    if (n == 0) {
        coef[0] = from_int<T>(1);
        return coef;
    }
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::vector<char> seen(n);
    do {
        T prod = a(0, perm[0]);
        for (std::size_t i = 1; i < n && !is_zero(prod); ++i) prod *= a(i, perm[i]);
        if (is_zero(prod)) continue;
        std::fill(seen.begin(), seen.end(), 0);
        std::size_t cycles = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (seen[i]) continue;
            ++cycles;
            for (std::size_t j = i; !seen[j]; j = perm[j]) seen[j] = 1;
        }
        coef[cycles] += prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return coef;
}

template <class T>
T per_alpha_naive(const Matrix<T>& a, const T& alpha, const Caps& caps = {}) {
    std::vector<T> coef = cycle_count_coefficients(a, caps);
    T acc = from_int<T>(0);
    for (std::size_t k = coef.size(); k-- > 0;) {
        acc *= alpha;
        acc += coef[k];
    }
    return acc;
}

/// per_alpha(A[S]) for every mask S of [n] (index = mask).
template <class T>
std::vector<T> subset_alpha_permanents(const Matrix<T>& a, const T& alpha, const Caps& caps = {}) {
    detail::require_cap(a.size(), caps.dp, "per_alpha_dp");
    if constexpr (is_exact_field_v<T>) {
        auto cleared = detail::clear_denominators(a);
        auto frac = detail::split_fraction(alpha);
        auto table = detail::scaled_alpha_table(cleared.m, frac.numerator, frac.denominator);
        const mpz_class unit = frac.denominator * cleared.d;
        std::vector<mpz_class> upow(a.size() + 1, mpz_class(1));
        for (std::size_t k = 1; k <= a.size(); ++k) upow[k] = upow[k - 1] * unit;
        std::vector<T> out(table.size());
        for (std::size_t s = 0; s < table.size(); ++s)
            out[s] = detail::divide_out<T>(table[s], upow[static_cast<std::size_t>(std::popcount(s))]);
        return out;
    } else {
        return detail::float_alpha_table(a, alpha);
    }
}

template <class T>
T per_alpha_dp(const Matrix<T>& a, const T& alpha, const Caps& caps = {}) {
    const std::size_t n = a.size();
    detail::require_cap(n, caps.dp, "per_alpha_dp");
    if (n == 0) return from_int<T>(1);
    if constexpr (is_exact_field_v<T>) {
        auto cleared = detail::clear_denominators(a);
        auto frac = detail::split_fraction(alpha);
        auto table = detail::scaled_alpha_table(cleared.m, frac.numerator, frac.denominator);
        mpz_class unit = frac.denominator * cleared.d;
        mpz_class denom;
        mpz_pow_ui(denom.get_mpz_t(), unit.get_mpz_t(), n);
        return detail::divide_out<T>(table.back(), denom);
    } else {
        return detail::float_alpha_table(a, alpha).back();
    }
}

template <class T>
T per_alpha(const Matrix<T>& a, const T& alpha, Kernel kernel = Kernel::Dp, const Caps& caps = {}) {
    return kernel == Kernel::Dp ? per_alpha_dp(a, alpha, caps) : per_alpha_naive(a, alpha, caps);
}

/// Sum over all cyclic orderings of S of prod_{i in S} a_{i, next(i)}.
template <class T>
T cycle_sum(const Matrix<T>& a, const IndexSet& s, const Caps& caps = {}) {
    if (s.empty()) throw DomainError("cycle_sum: empty index set");
    Matrix<T> sub = submatrix(a, s);
    detail::require_cap(sub.size(), caps.dp, "cycle_sum");
    return detail::all_cycle_sums(sub).back();
}

// ---------------------------------------------------------------------------
// Permanent, determinant
// ---------------------------------------------------------------------------

/// Ryser inclusion-exclusion with Gray-code row-sum updates.
template <class T>
T permanent(const Matrix<T>& a, const Caps& caps = {}) {
    const std::size_t n = a.size();
    detail::require_cap(n, caps.ryser, "permanent");
    if constexpr (is_exact_field_v<T>) {
        auto cleared = detail::clear_denominators(a);
        mpz_class denom;
        mpz_pow_ui(denom.get_mpz_t(), cleared.d.get_mpz_t(), n);
        return detail::divide_out<T>(detail::ryser_kernel(cleared.m), denom);
    } else {
        return detail::ryser_kernel(a);
    }
}

template <class T>
T determinant(const Matrix<T>& a) {
    if constexpr (std::is_same_v<T, Rational>) {
        auto cleared = detail::clear_denominators(a);
        mpz_class denom;
        mpz_pow_ui(denom.get_mpz_t(), cleared.d.get_mpz_t(), a.size());
        return detail::divide_out<T>(detail::bareiss(cleared.m), denom);
    } else if constexpr (std::is_same_v<T, GaussianRational>) {
        return detail::bareiss(a);
    } else {
        return detail::pivoted_elimination_det(a);
    }
}

// ---------------------------------------------------------------------------
// Hafnian
// ---------------------------------------------------------------------------

/// Sum over perfect matchings of the products of matched entries. Diagonal
/// entries never contribute; the 0x0 hafnian is 1.
template <class T>
T hafnian(const Matrix<T>& c, const Caps& caps = {}) {
    detail::require_hafnian_input(c, caps);
    if constexpr (is_exact_field_v<T>) {
        auto cleared = detail::clear_denominators(c);
        mpz_class denom;
        mpz_pow_ui(denom.get_mpz_t(), cleared.d.get_mpz_t(), c.size() / 2);
        return detail::divide_out<T>(detail::hafnian_kernel(cleared.m), denom);
    } else {
        return detail::hafnian_kernel(c);
    }
}

/// Unmemoized matching recursion, computed directly in T. Slow; used as an oracle.
template <class T>
T hafnian_naive(const Matrix<T>& c, const Caps& caps = {}) {
    detail::require_hafnian_input(c, caps);
    std::vector<std::size_t> free(c.size());
    std::iota(free.begin(), free.end(), std::size_t{0});
    return detail::hafnian_recursive(c, free);
}

// ---------------------------------------------------------------------------
// alpha-determinant
// ---------------------------------------------------------------------------

/// det_alpha(A) = alpha^n per_{1/alpha}(A).
template <class T>
T alpha_determinant(const Matrix<T>& a, const T& alpha, const Caps& caps = {}) {
    if (is_zero(alpha)) throw DomainError("alpha_determinant: alpha must be nonzero");
    T inv = from_int<T>(1);
    inv /= alpha;
    return power(alpha, static_cast<unsigned>(a.size())) * per_alpha_dp(a, inv, caps);
}

// ---------------------------------------------------------------------------
// Polynomial structure in alpha
// ---------------------------------------------------------------------------

/// Monomial coefficients of alpha -> per_alpha(A), recovered by evaluating
/// per_alpha_dp at alpha = 0, 1, ..., n and interpolating (Newton form).
template <class T>
std::vector<T> alpha_polynomial(const Matrix<T>& a, const Caps& caps = {}) {
    static_assert(is_exact_field_v<T>, "interpolation is exact-only");
    const std::size_t n = a.size();
    std::vector<T> dd(n + 1);
    for (std::size_t k = 0; k <= n; ++k) dd[k] = per_alpha_dp(a, from_int<T>(static_cast<long>(k)), caps);
    // divided differences on nodes 0..n: dd[k] <- f[0..k]
    for (std::size_t level = 1; level <= n; ++level)
        for (std::size_t k = n; k >= level; --k) {
            dd[k] = T(dd[k] - dd[k - 1]);
            dd[k] /= from_int<T>(static_cast<long>(level));
        }
    // Horner expansion of sum_k dd[k] prod_{j<k} (x - j)
    std::vector<T> coef(n + 1, from_int<T>(0));
    coef[0] = dd[n];
    for (std::size_t k = n; k-- > 0;) {
        // coef <- coef * (x - k) + dd[k]
        std::vector<T> next(n + 1, from_int<T>(0));
        for (std::size_t i = 0; i <= n; ++i) {
            if (is_zero(coef[i])) continue;
            if (i + 1 <= n) next[i + 1] += coef[i];
            next[i] -= T(coef[i] * from_int<T>(static_cast<long>(k)));
        }
        next[0] += dd[k];
        coef = std::move(next);
    }
    return coef;
}

}  // namespace alphaperm
