// Copyright 2026 The alphaperm Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file inequalities.hpp
 * @brief Inequality checks on positive semi-definite Hermitian matrices.
 *
 * Every check returns a ComparisonResult whose slack is oriented so that
 * slack >= 0 means the inequality holds. Exact inputs give exact verdicts;
 * float inputs compare the slack against a tolerance.
 *
 * All checks take the PSD property as a precondition and do not re-certify it.
 */

#pragma once

#include <alphaperm/expansion.hpp>
#include <alphaperm/partitions.hpp>
#include <alphaperm/permanental.hpp>
#include <alphaperm/scalar.hpp>

#include <string>
#include <vector>

namespace alphaperm {

enum class Verdict { Holds, Equality, Violated };
enum class Relation { GreaterEq, LessEq };

/// How a verdict should be read. Theorem: the inequality is proven for these
/// inputs. Conjecture: claimed for alpha >= 1 but unproven. Ungated: evidence only.
enum class Regime { Theorem, Conjecture, Ungated };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Holds: return "holds";
        case Verdict::Equality: return "equality";
        case Verdict::Violated: return "violated";
    }
    return "?";
}

inline const char* to_string(Regime r) {
    switch (r) {
        case Regime::Theorem: return "theorem";
        case Regime::Conjecture: return "conjecture";
        case Regime::Ungated: return "ungated";
    }
    return "?";
}

struct ComparisonResult {
    std::string name;
    Scalar lhs;
    Scalar rhs;
    Scalar slack;  ///< lhs - rhs for GreaterEq, rhs - lhs for LessEq
    Relation relation = Relation::GreaterEq;
    Verdict verdict = Verdict::Holds;
    bool exact = true;
    double tolerance = 0.0;
    Regime regime = Regime::Theorem;

    bool violated() const { return verdict == Verdict::Violated; }
    bool gated() const { return regime != Regime::Ungated; }

    std::string str() const {
        std::string rel = relation == Relation::GreaterEq ? " >= " : " <= ";
        return name + ": " + lhs.str() + rel + rhs.str() + " slack=" + slack.str() + " [" + to_string(verdict) +
               ", " + to_string(regime) + (exact ? ", exact" : ", float tol=" + format_value(tolerance)) + "]";
    }
};

struct CheckOptions {
    Kernel kernel = Kernel::Dp;
    double tolerance = 1e-9;  ///< float inputs only
    Caps caps{};
};

namespace detail {

template <class R>
ComparisonResult compare(std::string name, const R& lhs, const R& rhs, Relation rel, const CheckOptions& opt,
                         Regime regime = Regime::Theorem) {
    R slack = rel == Relation::GreaterEq ? R(lhs - rhs) : R(rhs - lhs);
    ComparisonResult out;
    out.name = std::move(name);
    out.relation = rel;
    out.regime = regime;
    if constexpr (std::is_same_v<R, Rational>) {
        out.exact = true;
        int s = sgn(slack);
        out.verdict = s > 0 ? Verdict::Holds : s == 0 ? Verdict::Equality : Verdict::Violated;
    } else {
        out.exact = false;
        out.tolerance = opt.tolerance;
        out.verdict = slack > opt.tolerance    ? Verdict::Holds
                      : slack < -opt.tolerance ? Verdict::Violated
                                               : Verdict::Equality;
    }
    out.lhs = Scalar(lhs);
    out.rhs = Scalar(rhs);
    out.slack = Scalar(slack);
    return out;
}

/// Real value of a quantity that must be real for Hermitian input.
template <class T>
real_of_t<T> real_value(const T& x, const char* what) {
    if constexpr (is_exact_field_v<T>) {
        if (!is_real_value(x)) throw DomainError(std::string(what) + " is not real; is the input Hermitian?");
    }
    return real_part(x);
}

template <class T>
T per_of(const Matrix<T>& a, const CheckOptions& opt) {
    return opt.kernel == Kernel::Dp ? permanent(a, opt.caps) : per_alpha_naive(a, from_int<T>(1), opt.caps);
}

template <class T>
T det_of(const Matrix<T>& a, const CheckOptions& opt) {
    if (opt.kernel == Kernel::Dp) return determinant(a);
    T v = per_alpha_naive(a, from_int<T>(-1), opt.caps);
    return a.size() % 2 == 1 ? T(-v) : v;
}

template <class T>
T haf_of(const Matrix<T>& c, const CheckOptions& opt) {
    return opt.kernel == Kernel::Dp ? hafnian(c, opt.caps) : hafnian_naive(c, opt.caps);
}

template <class T>
real_of_t<T> per_alpha_real(const Matrix<T>& a, const real_of_t<T>& alpha, const CheckOptions& opt) {
    return real_value(per_alpha(a, from_real<T>(alpha), opt.kernel, opt.caps), "per_alpha");
}

inline bool is_nonneg_integer(const Rational& a) { return a.get_den() == 1 && sgn(a) >= 0; }
inline bool is_nonneg_integer(double a) { return a >= 0 && a == std::floor(a); }

template <class R>
R signed_power(std::size_t n, R v) {
    return n % 2 == 1 ? R(-v) : v;
}

}  // namespace detail

/// alpha is a nonnegative integer or alpha >= n - 1.
template <class R>
bool lieb_type_hypothesis(const R& alpha, std::size_t n) {
    return detail::is_nonneg_integer(alpha) || alpha >= R(static_cast<long>(n) - 1);
}

/// Regime for the Lieb-type family. The leftmost signed inequality is never
/// part of the alpha >= 1 conjecture.
template <class R>
Regime lieb_type_regime(const R& alpha, std::size_t n, bool neg_positivity) {
    if (lieb_type_hypothesis(alpha, n)) return Regime::Theorem;
    if (!neg_positivity && alpha >= R(1)) return Regime::Conjecture;
    return Regime::Ungated;
}

/// Regime for the Marcus chain: additionally proven for alpha >= 1 and n <= 5.
template <class R>
Regime marcus_regime(const R& alpha, std::size_t n, bool half) {
    if (lieb_type_hypothesis(alpha, n)) return Regime::Theorem;
    if (!half && alpha >= R(1) && n <= 5) return Regime::Theorem;
    if (alpha >= R(1)) return Regime::Conjecture;
    return Regime::Ungated;
}

// ---------------------------------------------------------------------------
// Classical inequalities
// ---------------------------------------------------------------------------

/// per A >= per A' per A''.
template <class T>
ComparisonResult check_lieb(const Matrix<T>& a, BlockSplit split, const CheckOptions& opt = {}) {
    auto parts = split_blocks(a, split);
    auto lhs = detail::real_value(detail::per_of(a, opt), "per");
    auto rhs = detail::real_value(T(detail::per_of(parts.leading, opt) * detail::per_of(parts.trailing, opt)), "per");
    return detail::compare("lieb", lhs, rhs, Relation::GreaterEq, opt);
}

/// det A <= det A' det A''.
template <class T>
ComparisonResult check_fischer(const Matrix<T>& a, BlockSplit split, const CheckOptions& opt = {}) {
    auto parts = split_blocks(a, split);
    auto lhs = detail::real_value(detail::det_of(a, opt), "det");
    auto rhs = detail::real_value(T(detail::det_of(parts.leading, opt) * detail::det_of(parts.trailing, opt)), "det");
    return detail::compare("fischer", lhs, rhs, Relation::LessEq, opt);
}

/// haf [[A, A], [A, A]] >= per A for real symmetric PSD A.
template <class T>
ComparisonResult check_haf_per(const Matrix<T>& a, const CheckOptions& opt = {}) {
    if (!is_real_symmetric(a)) throw DomainError("check_haf_per: input must be real symmetric");
    auto lhs = detail::real_value(detail::haf_of(doubled(a), opt), "haf");
    auto rhs = detail::real_value(detail::per_of(a, opt), "per");
    return detail::compare("haf-per", lhs, rhs, Relation::GreaterEq, opt);
}

/// per(A, k) >= per(D, k) and det(A, k) <= det(D, k) for k = 1..n, D = A' (+) A''.
template <class T>
std::vector<ComparisonResult> check_lifts(const Matrix<T>& a, BlockSplit split, const CheckOptions& opt = {}) {
    auto parts = split_blocks(a, split);
    const T one = from_int<T>(1);
    auto per_a = per_beta_all_k(a, one, opt.kernel, opt.caps);
    auto per_d = per_beta_all_k(parts.diagonal, one, opt.kernel, opt.caps);
    auto det_a = det_all_k(a, opt.kernel, opt.caps);
    auto det_d = det_all_k(parts.diagonal, opt.kernel, opt.caps);
    std::vector<ComparisonResult> out;
    for (std::size_t k = 1; k <= a.size(); ++k) {
        out.push_back(detail::compare("per-lift(k=" + std::to_string(k) + ")", detail::real_value(per_a[k], "per(A,k)"),
                                      detail::real_value(per_d[k], "per(D,k)"), Relation::GreaterEq, opt));
        out.push_back(detail::compare("det-lift(k=" + std::to_string(k) + ")", detail::real_value(det_a[k], "det(A,k)"),
                                      detail::real_value(det_d[k], "det(D,k)"), Relation::LessEq, opt));
    }
    return out;
}

/// Ordered k-block sums of doubled-block hafnian products dominate per(A, k), real A.
template <class T>
std::vector<ComparisonResult> check_haf_lifts(const Matrix<T>& a, const CheckOptions& opt = {}) {
    auto haf_k = doubled_hafnian_all_k(a, opt.caps);
    auto per_k = per_beta_all_k(a, from_int<T>(1), opt.kernel, opt.caps);
    std::vector<ComparisonResult> out;
    for (std::size_t k = 1; k <= a.size(); ++k)
        out.push_back(detail::compare("haf-lift(k=" + std::to_string(k) + ")", detail::real_value(haf_k[k], "haf sum"),
                                      detail::real_value(per_k[k], "per(A,k)"), Relation::GreaterEq, opt));
    return out;
}

// ---------------------------------------------------------------------------
// Lieb-type inequalities for alpha-permanents
// ---------------------------------------------------------------------------

/// 0 <= (-1)^n per_{-a} A.
template <class T>
ComparisonResult check_neg_positivity(const Matrix<T>& a, const real_of_t<T>& alpha, const CheckOptions& opt = {}) {
    using R = real_of_t<T>;
    const std::size_t n = a.size();
    R signed_a = detail::signed_power(n, detail::per_alpha_real(a, R(-alpha), opt));
    return detail::compare("neg-positivity", signed_a, R(0), Relation::GreaterEq, opt, lieb_type_regime(alpha, n, true));
}

/// per_{a/2} A >= 2^{-n} per_a A, real A.
template <class T>
ComparisonResult check_half(const Matrix<T>& a, const real_of_t<T>& alpha, const CheckOptions& opt = {}) {
    using R = real_of_t<T>;
    if (!is_real_matrix(a)) throw DomainError("check_half: input must be real");
    const std::size_t n = a.size();
    R half = detail::per_alpha_real(a, R(alpha / 2), opt);
    R scaled = R(detail::per_alpha_real(a, alpha, opt) / power(R(2), static_cast<unsigned>(n)));
    return detail::compare("half", half, scaled, Relation::GreaterEq, opt, lieb_type_regime(alpha, n, false));
}

/// per_a A >= per_a A' per_a A''.
template <class T>
ComparisonResult check_lieb_type_split(const Matrix<T>& a, BlockSplit split, const real_of_t<T>& alpha,
                                       const CheckOptions& opt = {}) {
    using R = real_of_t<T>;
    auto parts = split_blocks(a, split);
    R per_a = detail::per_alpha_real(a, alpha, opt);
    R per_d = R(detail::per_alpha_real(parts.leading, alpha, opt) * detail::per_alpha_real(parts.trailing, alpha, opt));
    return detail::compare("lieb-type", per_a, per_d, Relation::GreaterEq, opt, lieb_type_regime(alpha, a.size(), false));
}

/// (-1)^n per_{-a} A <= (-1)^n per_{-a} A' per_{-a} A''.
template <class T>
ComparisonResult check_neg_lieb_type(const Matrix<T>& a, BlockSplit split, const real_of_t<T>& alpha,
                                     const CheckOptions& opt = {}) {
    using R = real_of_t<T>;
    const std::size_t n = a.size();
    auto parts = split_blocks(a, split);
    const R neg = R(-alpha);
    R signed_a = detail::signed_power(n, detail::per_alpha_real(a, neg, opt));
    R signed_d = detail::signed_power(
        n, R(detail::per_alpha_real(parts.leading, neg, opt) * detail::per_alpha_real(parts.trailing, neg, opt)));
    return detail::compare("neg-lieb-type", signed_a, signed_d, Relation::LessEq, opt, lieb_type_regime(alpha, n, false));
}

/// The Lieb-type family for one split, in order: lieb-type, neg-positivity,
/// neg-lieb-type, and half (real A only).
template <class T>
std::vector<ComparisonResult> check_lieb_type(const Matrix<T>& a, BlockSplit split, const real_of_t<T>& alpha,
                                              const CheckOptions& opt = {}) {
    std::vector<ComparisonResult> out;
    out.push_back(check_lieb_type_split(a, split, alpha, opt));
    out.push_back(check_neg_positivity(a, alpha, opt));
    out.push_back(check_neg_lieb_type(a, split, alpha, opt));
    if (is_real_matrix(a)) out.push_back(check_half(a, alpha, opt));
    return out;
}

/// Comparisons, in order:
///   marcus-upper  per_a A >= a^n prod a_ii
///   marcus-lower  a^n prod a_ii >= (-1)^n per_{-a} A
///   half-marcus   per_{a/2} A >= (a/2)^n prod a_ii          (real A only)
template <class T>
std::vector<ComparisonResult> check_marcus(const Matrix<T>& a, const real_of_t<T>& alpha, const CheckOptions& opt = {}) {
    using R = real_of_t<T>;
    const std::size_t n = a.size();
    const R diag = detail::real_value(diagonal_product(a), "diagonal product");
    const R middle = R(power(R(alpha), static_cast<unsigned>(n)) * diag);
    std::vector<ComparisonResult> out;

    R per_a = detail::per_alpha_real(a, alpha, opt);
    out.push_back(detail::compare("marcus-upper", per_a, middle, Relation::GreaterEq, opt, marcus_regime(alpha, n, false)));
    R signed_neg = detail::signed_power(n, detail::per_alpha_real(a, R(-alpha), opt));
    out.push_back(
        detail::compare("marcus-lower", middle, signed_neg, Relation::GreaterEq, opt, marcus_regime(alpha, n, false)));

    if (is_real_matrix(a)) {
        const R half_alpha = R(alpha / 2);
        R half = detail::per_alpha_real(a, half_alpha, opt);
        R half_middle = R(power(half_alpha, static_cast<unsigned>(n)) * diag);
        out.push_back(
            detail::compare("half-marcus", half, half_middle, Relation::GreaterEq, opt, marcus_regime(alpha, n, true)));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Shape averages p(lambda)
// ---------------------------------------------------------------------------

/// Average over the set partitions of [n] with block-size shape lambda of
/// prod_j per_{sign}(A[I_j]), sign = +1 (permanents) or -1 (per_{-1} = (-1)^{|I|} det).
template <class T>
real_of_t<T> p_shape(const Matrix<T>& a, const Shape& lambda, int sign, const CheckOptions& opt = {}) {
    using R = real_of_t<T>;
    if (sign != 1 && sign != -1) throw DomainError("p_shape: sign must be +1 or -1");
    const std::size_t n = a.size();
    validate_shape(n, lambda);
    const std::size_t count = std::size_t{1} << n;
    std::vector<R> table(count);
    for (std::size_t s = 1; s < count; ++s) {
        Matrix<T> sub = submatrix(a, s);
        T v = sign == 1 ? detail::per_of(sub, opt) : detail::signed_power(sub.size(), detail::det_of(sub, opt));
        table[s] = detail::real_value(v, "block value");
    }
    R total = R(0);
    std::size_t terms = 0;
    for_each_shape_partition(n, lambda, [&](const SetPartition& p) {
        R prod = R(1);
        for (auto m : p.block_masks()) prod *= table[m];
        total += prod;
        ++terms;
    });
    return R(total / R(static_cast<long>(terms)));
}

/// p(lambda) against p(mu) where lambda merges two parts of mu. For sign +1 the
/// merge cannot decrease p; for sign -1 the determinant products cannot increase,
/// so p moves in direction (-1)^n.
template <class T>
ComparisonResult check_majorization_step(const Matrix<T>& a, const Shape& lambda, const Shape& mu, int sign,
                                         const CheckOptions& opt = {}) {
    if (!is_merge_of(lambda, mu))
        throw DomainError("shape " + shape_str(lambda) + " does not merge two parts of " + shape_str(mu));
    auto pl = p_shape(a, lambda, sign, opt);
    auto pm = p_shape(a, mu, sign, opt);
    Relation rel = (sign == 1 || a.size() % 2 == 1) ? Relation::GreaterEq : Relation::LessEq;
    std::string name = std::string("majorization") + (sign == 1 ? "+" : "-") + shape_str(lambda) + "<-" + shape_str(mu);
    return detail::compare(std::move(name), pl, pm, rel, opt);
}

}  // namespace alphaperm
