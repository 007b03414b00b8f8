// Copyright 2026 The alphaperm Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file random.hpp
 * @brief Seeded, platform-independent generation of rational test instances.
 *
 * All draws go through Rng::uniform, which uses rejection sampling on the raw
 * mt19937_64 stream, so generated instances are identical across standard
 * library implementations for a given seed.
 */

#pragma once

#include <alphaperm/matrix.hpp>

#include <cstdint>
#include <random>

namespace alphaperm {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

    /// Generator for trial `index` of a run seeded with `seed`.
    static Rng for_trial(std::uint64_t seed, std::uint64_t index) { return Rng(seed ^ splitmix64(index)); }

    /// Uniform integer in [lo, hi].
    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
        if (span == ~std::uint64_t{0}) return static_cast<std::int64_t>(engine_());
        const std::uint64_t range = span + 1;
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % range);
        std::uint64_t r = 0;
        do {
            r = engine_();
        } while (r >= limit);
        return lo + static_cast<std::int64_t>(r % range);
    }

    std::uint64_t next() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

/// p/q with |p| <= num_bound and 1 <= q <= den_bound.
inline Rational random_rational(Rng& rng, std::int64_t num_bound, std::int64_t den_bound) {
    std::int64_t p = rng.uniform(-num_bound, num_bound);
    std::int64_t q = rng.uniform(1, den_bound);
    Rational r{mpz_class(static_cast<long>(p)), mpz_class(static_cast<long>(q))};
    r.canonicalize();
    return r;
}

/// Rational in [lo, hi] with denominator <= max_den.
inline Rational random_rational_in(Rng& rng, const Rational& lo, const Rational& hi, std::int64_t max_den) {
    std::int64_t q = rng.uniform(1, max_den);
    mpz_class lo_num = lo.get_num() * q;
    mpz_class hi_num = hi.get_num() * q;
    // ceil(lo*q), floor(hi*q)
    mpz_class a, b;
    mpz_cdiv_q(a.get_mpz_t(), lo_num.get_mpz_t(), lo.get_den_mpz_t());
    mpz_fdiv_q(b.get_mpz_t(), hi_num.get_mpz_t(), hi.get_den_mpz_t());
    if (a > b) return lo;
    std::int64_t p = rng.uniform(a.get_si(), b.get_si());
    Rational r{mpz_class(static_cast<long>(p)), mpz_class(static_cast<long>(q))};
    r.canonicalize();
    return r;
}

inline GaussianRational random_gaussian_rational(Rng& rng, std::int64_t num_bound, std::int64_t den_bound) {
    Rational re = random_rational(rng, num_bound, den_bound);
    Rational im = random_rational(rng, num_bound, den_bound);
    return {re, im};
}

/// Dense matrix with independent random rational entries (no structure).
inline Matrix<Rational> random_rational_matrix(std::size_t n, Rng& rng, std::int64_t num_bound = 9,
                                               std::int64_t den_bound = 9) {
    Matrix<Rational> a(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = random_rational(rng, num_bound, den_bound);
    return a;
}

inline Matrix<Rational> random_symmetric_matrix(std::size_t n, Rng& rng, std::int64_t num_bound = 9,
                                                std::int64_t den_bound = 9) {
    Matrix<Rational> a(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) a(i, j) = a(j, i) = random_rational(rng, num_bound, den_bound);
    return a;
}

inline Matrix<GaussianRational> random_gaussian_matrix(std::size_t n, Rng& rng, std::int64_t num_bound = 9,
                                                       std::int64_t den_bound = 9) {
    Matrix<GaussianRational> a(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = random_gaussian_rational(rng, num_bound, den_bound);
    return a;
}

enum class PsdKind { RealSymmetric, Hermitian };

/// G = B B^* for an n x cols factor B given row-major.
template <class T>
Matrix<T> gram(const std::vector<T>& factor, std::size_t n, std::size_t cols) {
    Matrix<T> g(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            T s = from_int<T>(0);
            for (std::size_t k = 0; k < cols; ++k) s += factor[i * cols + k] * T(conj(factor[j * cols + k]));
            g(i, j) = s;
            g(j, i) = T(conj(s));
        }
    }
    return g;
}

/// Exactly PSD real Gram matrix B B^T with rational B (entries p/q, |p|,q <= scale).
inline Matrix<Rational> random_gram_real(std::size_t n, std::int64_t scale, Rng& rng) {
    std::vector<Rational> b(n * n);
    for (auto& x : b) x = random_rational(rng, scale, scale);
    return gram(b, n, n);
}

/// Exactly PSD Hermitian Gram matrix B B^* with Gaussian-rational B.
inline Matrix<GaussianRational> random_gram_hermitian(std::size_t n, std::int64_t scale, Rng& rng) {
    std::vector<GaussianRational> b(n * n);
    for (auto& x : b) x = random_gaussian_rational(rng, scale, scale);
    return gram(b, n, n);
}

namespace detail {

/// Rational point on the unit sphere in R^dim via inverse stereographic projection
/// of a random rational point of R^(dim-1).
inline std::vector<Rational> random_unit_vector(std::size_t dim, std::int64_t scale, Rng& rng) {
    if (dim == 1) return {Rational(rng.uniform(0, 1) == 0 ? 1 : -1)};
    std::vector<Rational> t(dim - 1);
    Rational norm2 = 0;
    for (auto& x : t) {
        x = random_rational(rng, scale, scale);
        norm2 += x * x;
    }
    Rational denom = norm2 + 1;
    std::vector<Rational> v(dim);
    for (std::size_t i = 0; i + 1 < dim; ++i) v[i] = 2 * t[i] / denom;
    v[dim - 1] = (norm2 - 1) / denom;
    return v;
}

}  // namespace detail

/// Exactly PSD Gram matrix with unit diagonal: rows of B are rational unit
/// vectors in R^rank (real) or C^rank (Hermitian, realised in R^(2 rank)).
inline Matrix<Rational> random_unit_gram_real(std::size_t n, std::size_t rank, std::int64_t scale, Rng& rng) {
    std::vector<Rational> b(n * rank);
    for (std::size_t i = 0; i < n; ++i) {
        auto v = detail::random_unit_vector(rank, scale, rng);
        for (std::size_t k = 0; k < rank; ++k) b[i * rank + k] = v[k];
    }
    return gram(b, n, rank);
}

inline Matrix<GaussianRational> random_unit_gram_hermitian(std::size_t n, std::size_t rank, std::int64_t scale,
                                                           Rng& rng) {
    std::vector<GaussianRational> b(n * rank);
    for (std::size_t i = 0; i < n; ++i) {
        auto v = detail::random_unit_vector(2 * rank, scale, rng);
        for (std::size_t k = 0; k < rank; ++k) b[i * rank + k] = GaussianRational(v[2 * k], v[2 * k + 1]);
    }
    return gram(b, n, rank);
}

}  // namespace alphaperm
