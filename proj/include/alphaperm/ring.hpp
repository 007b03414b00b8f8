// Copyright 2026 The alphaperm Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file ring.hpp
 * @brief Exact number types and the small trait layer the kernels are written against.
 *
 * Every kernel in this library is a template over a commutative ring T. The
 * supported instantiations are
 *
 *   - mpz_class                  big integers (internal, after clearing denominators)
 *   - mpq_class  (Rational)      big rationals, always canonical
 *   - Gaussian<mpz_class>        Gaussian integers (internal)
 *   - Gaussian<mpq_class>        Gaussian rationals (GaussianRational)
 *   - double, std::complex<double>
 *
 * The helpers below (from_int, is_zero, conj, ...) give those types a uniform
 * surface so the kernels stay free of per-type branches.
 */

#pragma once

#include <gmpxx.h>

#include <complex>
#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <type_traits>

namespace alphaperm {

using Integer = mpz_class;
using Rational = mpq_class;

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Index or shape does not fit the matrix it is applied to.
struct DimensionError : Error {
    using Error::Error;
};

/// Argument outside the mathematical domain of the operation (e.g. alpha = 0 for det_alpha).
struct DomainError : Error {
    using Error::Error;
};

/// Problem size beyond a configured capacity cap.
struct CapacityError : Error {
    using Error::Error;
};

/// Malformed textual input (scalars, matrix files, shapes).
struct ParseError : Error {
    using Error::Error;
};

/// Exact and floating scalars combined without an explicit conversion.
struct FieldMismatchError : Error {
    using Error::Error;
};

// ---------------------------------------------------------------------------
// Gaussian numbers over an exact base ring
// ---------------------------------------------------------------------------

template <class R>
struct Gaussian {
    R re{0};
    R im{0};

    Gaussian() = default;
    Gaussian(R r) : re(std::move(r)), im(0) {}  // NOLINT(google-explicit-constructor)
    Gaussian(R r, R i) : re(std::move(r)), im(std::move(i)) {}
    Gaussian(long v) : re(v), im(0) {}  // NOLINT(google-explicit-constructor)
    Gaussian(int v) : re(v), im(0) {}   // NOLINT(google-explicit-constructor)

    Gaussian& operator+=(const Gaussian& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    Gaussian& operator-=(const Gaussian& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    Gaussian& operator*=(const Gaussian& o) {
        R r = re * o.re - im * o.im;
        R i = re * o.im + im * o.re;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }

    friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
    friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
    friend Gaussian operator*(Gaussian a, const Gaussian& b) { return a *= b; }
    friend Gaussian operator-(const Gaussian& a) { return Gaussian(R(-a.re), R(-a.im)); }

    friend Gaussian operator/(const Gaussian& a, const Gaussian& b)
        requires std::same_as<R, mpq_class>
    {
        R norm = b.re * b.re + b.im * b.im;
        if (sgn(norm) == 0) throw DomainError("division by zero");
        R r = (a.re * b.re + a.im * b.im) / norm;
        R i = (a.im * b.re - a.re * b.im) / norm;
        return Gaussian(std::move(r), std::move(i));
    }
    Gaussian& operator/=(const Gaussian& o)
        requires std::same_as<R, mpq_class>
    {
        return *this = *this / o;
    }

    friend bool operator==(const Gaussian& a, const Gaussian& b) { return a.re == b.re && a.im == b.im; }
};

using GaussianInteger = Gaussian<mpz_class>;
using GaussianRational = Gaussian<mpq_class>;

// ---------------------------------------------------------------------------
// Type classification
// ---------------------------------------------------------------------------

template <class T>
inline constexpr bool is_exact_field_v = std::is_same_v<T, Rational> || std::is_same_v<T, GaussianRational>;

template <class T>
inline constexpr bool is_float_v = std::is_same_v<T, double> || std::is_same_v<T, std::complex<double>>;

template <class T>
inline constexpr bool is_complex_v =
    std::is_same_v<T, GaussianRational> || std::is_same_v<T, GaussianInteger> || std::is_same_v<T, std::complex<double>>;

/// Ordered real type associated with a scalar type (where verdicts are decided).
template <class T>
struct real_of;
template <>
struct real_of<Rational> {
    using type = Rational;
};
template <>
struct real_of<GaussianRational> {
    using type = Rational;
};
template <>
struct real_of<double> {
    using type = double;
};
template <>
struct real_of<std::complex<double>> {
    using type = double;
};
template <class T>
using real_of_t = typename real_of<T>::type;

/// Integer ring obtained by clearing denominators of an exact field.
template <class T>
struct integer_ring_of;
template <>
struct integer_ring_of<Rational> {
    using type = Integer;
};
template <>
struct integer_ring_of<GaussianRational> {
    using type = GaussianInteger;
};
template <class T>
using integer_ring_of_t = typename integer_ring_of<T>::type;

// ---------------------------------------------------------------------------
// Uniform helpers
// ---------------------------------------------------------------------------

template <class T>
T from_int(long v) {
    if constexpr (std::is_same_v<T, mpz_class> || std::is_same_v<T, mpq_class>) {
        return T(v);
    } else if constexpr (std::is_same_v<T, double>) {
        return static_cast<double>(v);
    } else if constexpr (std::is_same_v<T, std::complex<double>>) {
        return {static_cast<double>(v), 0.0};
    } else {
        return T(v);
    }
}

inline bool is_zero(const mpz_class& x) { return sgn(x) == 0; }
inline bool is_zero(const mpq_class& x) { return sgn(x) == 0; }
template <class R>
bool is_zero(const Gaussian<R>& x) {
    return sgn(x.re) == 0 && sgn(x.im) == 0;
}
inline bool is_zero(double x) { return x == 0.0; }
inline bool is_zero(const std::complex<double>& x) { return x == std::complex<double>(0.0, 0.0); }

inline const mpz_class& conj(const mpz_class& x) { return x; }
inline const mpq_class& conj(const mpq_class& x) { return x; }
inline double conj(double x) { return x; }
template <class R>
Gaussian<R> conj(const Gaussian<R>& x) {
    return Gaussian<R>(x.re, R(-x.im));
}
using std::conj;

/// True when the value has no imaginary component.
template <class T>
bool is_real_value(const T& x) {
    if constexpr (std::is_same_v<T, std::complex<double>>) {
        return x.imag() == 0.0;
    } else if constexpr (is_complex_v<T>) {
        return sgn(x.im) == 0;
    } else {
        (void)x;
        return true;
    }
}

/// Real part, in the ordered type real_of_t<T>.
template <class T>
real_of_t<T> real_part(const T& x) {
    if constexpr (std::is_same_v<T, GaussianRational>) {
        return x.re;
    } else if constexpr (std::is_same_v<T, std::complex<double>>) {
        return x.real();
    } else {
        return x;
    }
}

/// Embed a real value into T.
template <class T>
T from_real(const real_of_t<T>& r) {
    if constexpr (std::is_same_v<T, GaussianRational>) {
        return GaussianRational(r);
    } else if constexpr (std::is_same_v<T, std::complex<double>>) {
        return {r, 0.0};
    } else {
        return r;
    }
}

/// x^k by repeated squaring; k >= 0.
template <class T>
T power(T base, unsigned k) {
    T result = from_int<T>(1);
    while (k > 0) {
        if (k & 1u) result *= base;
        k >>= 1u;
        if (k > 0) base *= base;
    }
    return result;
}

inline double to_double(const Rational& q) { return q.get_d(); }
inline double to_double(double x) { return x; }

inline std::complex<double> to_complex_double(const GaussianRational& z) { return {z.re.get_d(), z.im.get_d()}; }

// ---------------------------------------------------------------------------
// Denominator clearing for the exact fast paths
// ---------------------------------------------------------------------------

namespace detail {

inline void lcm_into(mpz_class& acc, const mpq_class& q) { mpz_lcm(acc.get_mpz_t(), acc.get_mpz_t(), q.get_den_mpz_t()); }

inline void lcm_into(mpz_class& acc, const GaussianRational& z) {
    lcm_into(acc, z.re);
    lcm_into(acc, z.im);
}

inline mpz_class scale_to_integer(const mpq_class& q, const mpz_class& d) {
    mpz_class out = d / q.get_den();
    out *= q.get_num();
    return out;
}

inline GaussianInteger scale_to_integer(const GaussianRational& z, const mpz_class& d) {
    return {scale_to_integer(z.re, d), scale_to_integer(z.im, d)};
}

inline Rational to_field(const mpz_class& z) { return Rational(z); }
inline GaussianRational to_field(const GaussianInteger& z) { return {Rational(z.re), Rational(z.im)}; }

/// value = numerator / denominator with an integral numerator in the matching ring.
template <class Q>
struct SplitFraction {
    integer_ring_of_t<Q> numerator;
    mpz_class denominator;
};

template <class Q>
SplitFraction<Q> split_fraction(const Q& value) {
    mpz_class d = 1;
    lcm_into(d, value);
    return {scale_to_integer(value, d), d};
}

}  // namespace detail

}  // namespace alphaperm
