// Copyright 2026 The alphaperm Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file scalar.hpp
 * @brief Tagged scalar value, its textual syntax, and the generalized binomial.
 *
 * Text syntax (locale independent):
 *   rational          "p" or "p/q"                e.g. "-3/4"
 *   complex rational  "p/q+r/s i"                 e.g. "1/2-3 i", "0+1 i"
 *   float             decimal literal             e.g. "0.5", "1e-3", "2.0"
 *   complex float     "x+y i" with decimal parts  e.g. "1.5-0.25 i"
 *
 * Formatting always produces the canonical form: rationals reduced with a
 * positive denominator, complex values with both parts, floats in shortest
 * round-trip form with a '.' or exponent so they never read back as exact.
 */

#pragma once

#include <alphaperm/ring.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <complex>
#include <string>
#include <string_view>
#include <system_error>
#include <variant>

namespace alphaperm {

enum class ScalarKind { ExactRational, ExactComplexRational, Float, ComplexFloat };

inline const char* to_string(ScalarKind k) {
    switch (k) {
        case ScalarKind::ExactRational: return "rational";
        case ScalarKind::ExactComplexRational: return "complex-rational";
        case ScalarKind::Float: return "float";
        case ScalarKind::ComplexFloat: return "complex-float";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Formatting
// ---------------------------------------------------------------------------

inline std::string format_value(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline std::string format_value(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, x);
    std::string s(buf, res.ptr);
    if (s.find_first_of(".e") == std::string::npos) s += ".0";
    return s;
}

namespace detail {

template <class R>
std::string format_complex(const R& re, bool im_negative, const R& im_abs) {
    return format_value(re) + (im_negative ? "-" : "+") + format_value(im_abs) + " i";
}

}  // namespace detail

inline std::string format_value(const GaussianRational& z) {
    bool neg = sgn(z.im) < 0;
    Rational a = abs(z.im);
    return detail::format_complex(z.re, neg, a);
}

inline std::string format_value(const std::complex<double>& z) {
    bool neg = std::signbit(z.imag());
    double a = std::fabs(z.imag());
    return detail::format_complex(z.real(), neg, a);
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\n' || s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

inline bool looks_like_float(std::string_view s) {
    if (s.find_first_of(".eE") != std::string_view::npos) return true;
    std::string_view body = s;
    if (!body.empty() && (body.front() == '+' || body.front() == '-')) body.remove_prefix(1);
    return body == "inf" || body == "nan";
}

inline bool all_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

inline Rational parse_rational(std::string_view text) {
    std::string_view s = trim(text);
    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    std::string_view num = s;
    std::string_view den = "1";
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        num = s.substr(0, slash);
        den = s.substr(slash + 1);
    }
    if (!all_digits(num) || !all_digits(den)) throw ParseError("malformed rational '" + std::string(text) + "'");
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    Rational q(negative ? mpz_class(-n) : n, d);
    q.canonicalize();
    return q;
}

inline double parse_double(std::string_view text) {
    std::string_view s = trim(text);
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    double v = 0.0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size() || s.empty())
        throw ParseError("malformed float '" + std::string(text) + "'");
    return v;
}

/// Position of the sign separating real and imaginary parts, or npos.
inline std::size_t complex_split(std::string_view s) {
    for (std::size_t i = s.size(); i-- > 1;) {
        if (s[i] != '+' && s[i] != '-') continue;
        char prev = s[i - 1];
        if (prev == 'e' || prev == 'E') continue;
        return i;
    }
    return std::string_view::npos;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Scalar
// ---------------------------------------------------------------------------

/// Immutable tagged number. Exact/exact arithmetic stays exact, float/float stays
/// float, and mixing the two raises FieldMismatchError.
class Scalar {
public:
    using Value = std::variant<Rational, GaussianRational, double, std::complex<double>>;

    Scalar() : value_(Rational(0)) {}
    Scalar(Rational q) : value_(std::move(q)) {}                // NOLINT(google-explicit-constructor)
    Scalar(GaussianRational z) : value_(std::move(z)) {}        // NOLINT(google-explicit-constructor)
    Scalar(double x) : value_(x) {}                             // NOLINT(google-explicit-constructor)
    Scalar(std::complex<double> z) : value_(z) {}               // NOLINT(google-explicit-constructor)
    Scalar(long v) : value_(Rational(v)) {}                     // NOLINT(google-explicit-constructor)
    Scalar(int v) : value_(Rational(v)) {}                      // NOLINT(google-explicit-constructor)

    static Scalar parse(std::string_view text) {
        std::string_view s = detail::trim(text);
        if (s.empty()) throw ParseError("empty scalar");
        if (s.back() == 'i') {
            s = detail::trim(s.substr(0, s.size() - 1));
            std::size_t cut = detail::complex_split(s);
            std::string_view re = cut == std::string_view::npos ? std::string_view("0") : detail::trim(s.substr(0, cut));
            std::string_view im = cut == std::string_view::npos ? s : detail::trim(s.substr(cut));
            std::string im_text(im);
            if (im_text.empty() || im_text == "+" || im_text == "-") im_text += "1";
            bool fr = detail::looks_like_float(re);
            bool fi = detail::looks_like_float(im_text);
            if (cut != std::string_view::npos && fr != fi)
                throw ParseError("complex scalar mixes exact and float parts: '" + std::string(text) + "'");
            if (fi) return Scalar(std::complex<double>(fr ? detail::parse_double(re) : 0.0, detail::parse_double(im_text)));
            return Scalar(GaussianRational(detail::parse_rational(re), detail::parse_rational(im_text)));
        }
        if (detail::looks_like_float(s)) return Scalar(detail::parse_double(s));
        return Scalar(detail::parse_rational(s));
    }

    ScalarKind kind() const { return static_cast<ScalarKind>(value_.index()); }
    bool is_exact() const { return kind() == ScalarKind::ExactRational || kind() == ScalarKind::ExactComplexRational; }
    bool is_complex() const { return kind() == ScalarKind::ExactComplexRational || kind() == ScalarKind::ComplexFloat; }
    const Value& value() const { return value_; }

    std::string str() const {
        return std::visit([](const auto& v) { return format_value(v); }, value_);
    }

    /// Convert to T. Real-to-complex widening is allowed; narrowing requires a
    /// zero imaginary part; exact <-> float requires the explicit to_float().
    template <class T>
    T as() const {
        if constexpr (std::is_same_v<T, Rational>) {
            if (const auto* q = std::get_if<Rational>(&value_)) return *q;
            if (const auto* z = std::get_if<GaussianRational>(&value_)) {
                if (sgn(z->im) != 0) throw DomainError("scalar " + str() + " is not real");
                return z->re;
            }
        } else if constexpr (std::is_same_v<T, GaussianRational>) {
            if (const auto* q = std::get_if<Rational>(&value_)) return GaussianRational(*q);
            if (const auto* z = std::get_if<GaussianRational>(&value_)) return *z;
        } else if constexpr (std::is_same_v<T, double>) {
            if (const auto* x = std::get_if<double>(&value_)) return *x;
            if (const auto* z = std::get_if<std::complex<double>>(&value_)) {
                if (z->imag() != 0.0) throw DomainError("scalar " + str() + " is not real");
                return z->real();
            }
        } else if constexpr (std::is_same_v<T, std::complex<double>>) {
            if (const auto* x = std::get_if<double>(&value_)) return {*x, 0.0};
            if (const auto* z = std::get_if<std::complex<double>>(&value_)) return *z;
        }
        throw FieldMismatchError(std::string("cannot use ") + to_string(kind()) + " scalar " + str() + " here");
    }

    /// Explicit exact -> float conversion.
    Scalar to_float() const {
        switch (kind()) {
            case ScalarKind::ExactRational: return Scalar(to_double(std::get<Rational>(value_)));
            case ScalarKind::ExactComplexRational: return Scalar(to_complex_double(std::get<GaussianRational>(value_)));
            default: return *this;
        }
    }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        return combine(a, b, [](auto x, const auto& y) { return x += y; });
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b) {
        return combine(a, b, [](auto x, const auto& y) { return x -= y; });
    }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        return combine(a, b, [](auto x, const auto& y) { return x *= y; });
    }
    friend Scalar operator/(const Scalar& a, const Scalar& b) {
        return combine(a, b, [](auto x, const auto& y) {
            if (is_zero(y)) throw DomainError("division by zero");
            return x /= y;
        });
    }
    friend Scalar operator-(const Scalar& a) {
        return std::visit(
            [](const auto& v) {
                using V = std::decay_t<decltype(v)>;
                return Scalar(V(-v));
            },
            a.value_);
    }

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.value_ == b.value_; }

private:
    template <class Op>
    static Scalar combine(const Scalar& a, const Scalar& b, Op op) {
        if (a.is_exact() != b.is_exact())
            throw FieldMismatchError("mixed exact/float arithmetic: " + a.str() + " and " + b.str());
        if (a.is_exact()) {
            if (!a.is_complex() && !b.is_complex()) return Scalar(op(a.as<Rational>(), b.as<Rational>()));
            return Scalar(op(a.as<GaussianRational>(), b.as<GaussianRational>()));
        }
        if (!a.is_complex() && !b.is_complex()) return Scalar(op(a.as<double>(), b.as<double>()));
        return Scalar(op(a.as<std::complex<double>>(), b.as<std::complex<double>>()));
    }

    Value value_;
};

// ---------------------------------------------------------------------------
// Generalized binomial coefficient
// ---------------------------------------------------------------------------

/// alpha (alpha-1) ... (alpha-k+1) / k!, for any alpha in a field T.
template <class T>
T gen_binomial(const T& alpha, unsigned k) {
    T num = from_int<T>(1);
    T fact = from_int<T>(1);
    for (unsigned i = 0; i < k; ++i) {
        num *= T(alpha - from_int<T>(static_cast<long>(i)));
        fact *= from_int<T>(static_cast<long>(i + 1));
    }
    return T(num / fact);
}

inline Scalar gen_binomial(const Scalar& alpha, unsigned k) {
    return std::visit([k](const auto& a) { return Scalar(gen_binomial(a, k)); }, alpha.value());
}

}  // namespace alphaperm
