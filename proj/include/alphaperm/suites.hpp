// Copyright 2026 The alphaperm Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file suites.hpp
 * @brief Property suites behind the `check` command.
 *
 * The identity suite compares the fast kernels and the partition expansions
 * against independent evaluations on random instances. The inequality suite
 * evaluates every inequality family on random Gram instances.
 *
 * Like the hunter, trial t draws from Rng::for_trial(seed, t) and the report is
 * assembled in trial order, so it does not depend on the number of jobs.
 */

#pragma once

#include <alphaperm/any_matrix.hpp>
#include <alphaperm/expansion.hpp>
#include <alphaperm/hunt.hpp>
#include <alphaperm/inequalities.hpp>
#include <alphaperm/parallel.hpp>
#include <alphaperm/random.hpp>

#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace alphaperm {

enum class AlphaSet { Theorem2, Conjecture };

inline AlphaSet parse_alpha_set(std::string_view s) {
    if (s == "theorem2") return AlphaSet::Theorem2;
    if (s == "conjecture") return AlphaSet::Conjecture;
    throw DomainError("unknown alpha set '" + std::string(s) + "' (expected theorem2 or conjecture)");
}

struct SuiteConfig {
    bool identities = true;
    bool inequalities = true;
    std::size_t n_max = 5;
    std::uint64_t trials = 50;
    std::uint64_t seed = 0;
    AlphaSet alpha_set = AlphaSet::Theorem2;
    unsigned jobs = 1;
    bool float_mode = false;
    double tolerance = 1e-9;
    Caps caps{};
    std::vector<AnyMatrix> extra;  ///< user instances, run through the inequality checks

    void validate() const {
        if (n_max < 1) throw DomainError("check: n-max must be >= 1");
        if (n_max > caps.naive) throw CapacityError("check: n-max exceeds the naive cap");
    }
};

/// One evaluated property.
struct SuiteRecord {
    std::string family;
    bool ok = true;
    bool gated = true;
    std::optional<Scalar> slack;  ///< inequalities only
    std::string matrix;           ///< serialized instance, kept for failures
    std::optional<Rational> alpha;
    std::optional<std::size_t> split;
    std::optional<Scalar> diff;   ///< identities: lhs - rhs
};

struct FamilyTally {
    std::uint64_t evaluated = 0;
    std::uint64_t passed = 0;
    std::uint64_t failed = 0;
    std::optional<Scalar> min_slack;
};

struct SuiteReport {
    std::map<std::string, FamilyTally> identities;
    std::map<std::string, FamilyTally> inequalities;
    std::vector<std::string> findings;  ///< one JSON line per gated failure
    std::uint64_t gated_failures = 0;
    std::uint64_t ungated_failures = 0;
};

namespace detail {

template <class T>
T lift_rational(const Rational& q) {
    if constexpr (is_exact_field_v<T>)
        return T(q);
    else
        return T(q.get_d());
}

template <class T>
bool values_agree(const T& lhs, const T& rhs, double tol) {
    if constexpr (is_exact_field_v<T>) {
        return lhs == rhs;
    } else {
        const double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
        return std::abs(lhs - rhs) <= tol * scale;
    }
}

template <class T>
AnyMatrix to_any(const Matrix<T>& a) {
    const bool rs = is_real_symmetric(a);
    return AnyMatrix(a, {rs, is_hermitian(a)});
}

/// Instances are always drawn exactly and then converted, so float runs see the
/// same matrices as exact runs.
template <class T>
Matrix<T> lift_matrix(const Matrix<Rational>& a) {
    if constexpr (std::is_same_v<T, Rational>)
        return a;
    else
        return to_float_matrix(a);
}

template <class T>
Matrix<T> lift_matrix(const Matrix<GaussianRational>& a) {
    if constexpr (std::is_same_v<T, GaussianRational>)
        return a;
    else
        return to_float_matrix(a);
}

class IdentityRecorder {
public:
    IdentityRecorder(std::vector<SuiteRecord>& out, double tol) : out_(out), tol_(tol) {}

    template <class T>
    void operator()(std::string family, const Matrix<T>& a, std::optional<Rational> alpha, const T& lhs, const T& rhs) {
        SuiteRecord r;
        r.family = std::move(family);
        r.ok = values_agree(lhs, rhs, tol_);
        r.alpha = std::move(alpha);
        if (!r.ok) {
            r.matrix = serialize_matrix(to_any(a));
            r.diff = Scalar(T(lhs - rhs));
        }
        out_.push_back(std::move(r));
    }

private:
    std::vector<SuiteRecord>& out_;
    double tol_;
};

template <class T, class C>
std::vector<SuiteRecord> identity_trial_typed(const SuiteConfig& cfg, std::uint64_t trial) {
    Rng rng = Rng::for_trial(cfg.seed, trial);
    std::vector<SuiteRecord> out;
    IdentityRecorder record(out, cfg.tolerance);
    const Caps& caps = cfg.caps;
    auto pick_n = [&](std::size_t lo, std::size_t hi) {
        hi = std::min(hi, cfg.n_max);
        return static_cast<std::size_t>(rng.uniform(static_cast<std::int64_t>(lo), static_cast<std::int64_t>(hi)));
    };
    auto pick_alpha = [&] { return random_rational(rng, 16, 16); };

    {
        const auto n = pick_n(0, 8);
        const Rational q = pick_alpha();
        const auto a = lift_matrix<T>(random_rational_matrix(n, rng));
        const T alpha = lift_rational<T>(q);
        record("dp=naive", a, q, per_alpha_dp(a, alpha, caps), per_alpha_naive(a, alpha, caps));
        record("alpha=1", a, Rational(1), per_alpha_dp(a, from_int<T>(1), caps), permanent(a, caps));
        T det = determinant(a);
        if (n % 2 == 1) det = T(-det);
        record("alpha=-1", a, Rational(-1), per_alpha_dp(a, from_int<T>(-1), caps), det);
    }
    {
        const auto n = pick_n(0, 6);
        const auto s = lift_matrix<T>(random_symmetric_matrix(n, rng));
        const T rhs = T(hafnian(doubled(s), caps) / power(from_int<T>(2), static_cast<unsigned>(n)));
        record("wick", s, Rational(1, 2), per_alpha_dp(s, lift_rational<T>(Rational(1, 2)), caps), rhs);
    }
    {
        const auto n = pick_n(0, 4);
        const auto a = lift_matrix<T>(random_rational_matrix(n, rng));
        std::vector<T> betas;
        T total = from_int<T>(0);
        for (int j = 0; j < 3; ++j) {
            betas.push_back(lift_rational<T>(pick_alpha()));
            total += betas.back();
        }
        record("lemma", a, std::nullopt, per_alpha_dp(a, total, caps), sum_formula_rhs(a, betas, Kernel::Dp, caps));
    }
    {
        const auto n = pick_n(1, 5);
        const auto a = lift_matrix<T>(random_rational_matrix(n, rng));
        const Rational qa = pick_alpha();
        const Rational qb = pick_alpha();
        const T alpha = lift_rational<T>(qa);
        const T beta = lift_rational<T>(qb);
        record("product", a, qa, per_alpha_dp(a, T(alpha * beta), caps),
               product_formula_rhs(a, alpha, beta, Kernel::Dp, caps));
        record("product-pos", a, qa, per_alpha_dp(a, alpha, caps),
               product_formula_rhs(a, alpha, from_int<T>(1), Kernel::Dp, caps));
        record("product-neg", a, qa, per_alpha_dp(a, T(-alpha), caps),
               product_formula_rhs(a, alpha, from_int<T>(-1), Kernel::Dp, caps));
    }
    {
        const auto n = pick_n(1, 5);
        const auto s = lift_matrix<T>(random_symmetric_matrix(n, rng));
        const Rational qa = pick_alpha();
        const T alpha = lift_rational<T>(qa);
        record("half", s, qa, per_alpha_dp(s, T(alpha / from_int<T>(2)), caps), half_formula_rhs(s, alpha, caps));
    }
    {
        const auto n = pick_n(1, 5);
        const auto h = lift_matrix<C>(random_gram_hermitian(n, 3, rng));
        const Rational qa = pick_alpha();
        const C v = per_alpha_dp(h, lift_rational<C>(qa), caps);
        record("hermitian-real", h, qa, v, from_real<C>(real_part(v)));
    }
    return out;
}

inline std::vector<Rational> alpha_values(const SuiteConfig& cfg, std::size_t n, Rng& rng) {
    std::vector<Rational> out;
    if (cfg.alpha_set == AlphaSet::Theorem2) {
        const long m = static_cast<long>(n);
        out = {Rational(0), Rational(1), Rational(2), Rational(3),
               Rational(m - 1), Rational(2 * m - 1, 2), Rational(2 * m + 1, 2), Rational(m)};
    } else {
        out = {Rational(1), Rational(2)};
        for (int i = 0; i < 2; ++i) out.push_back(random_rational_in(rng, Rational(1), Rational(2), 16));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

template <class T>
void inequality_records(const Matrix<T>& a, const std::vector<Rational>& alphas, const CheckOptions& opt,
                        std::vector<SuiteRecord>& out) {
    using R = real_of_t<T>;
    const std::size_t n = a.size();
    std::string text;
    auto push = [&](ComparisonResult r, std::optional<Rational> alpha, std::optional<std::size_t> split) {
        SuiteRecord rec;
        rec.family = r.name;
        rec.ok = !r.violated();
        rec.gated = r.gated();
        rec.slack = r.slack;
        rec.alpha = std::move(alpha);
        rec.split = split;
        if (!rec.ok) {
            if (text.empty()) text = serialize_matrix(to_any(a));
            rec.matrix = text;
        }
        out.push_back(std::move(rec));
    };
    const bool real = is_real_matrix(a);
    for (std::size_t m = 1; m < n; ++m) {
        push(check_lieb(a, {m}, opt), std::nullopt, m);
        push(check_fischer(a, {m}, opt), std::nullopt, m);
        for (auto& r : check_lifts(a, {m}, opt)) push(std::move(r), std::nullopt, m);
    }
    if (real && n >= 1) {
        push(check_haf_per(a, opt), std::nullopt, std::nullopt);
        for (auto& r : check_haf_lifts(a, opt)) push(std::move(r), std::nullopt, std::nullopt);
    }
    for (const auto& q : alphas) {
        const R alpha = lift_rational<R>(q);
        push(check_neg_positivity(a, alpha, opt), q, std::nullopt);
        if (real) push(check_half(a, alpha, opt), q, std::nullopt);
        for (std::size_t m = 1; m < n; ++m) {
            push(check_lieb_type_split(a, {m}, alpha, opt), q, m);
            push(check_neg_lieb_type(a, {m}, alpha, opt), q, m);
        }
        for (auto& r : check_marcus(a, alpha, opt)) push(std::move(r), q, std::nullopt);
    }
    if (n >= 2) {
        for (const auto& mu : integer_partitions(n))
            for (const auto& lambda : merges_of(mu))
                for (int sign : {1, -1}) push(check_majorization_step(a, lambda, mu, sign, opt), std::nullopt, std::nullopt);
    }
}

template <class Real, class Complex>
std::vector<SuiteRecord> inequality_trial_typed(const SuiteConfig& cfg, std::uint64_t trial, Kernel kernel) {
    Rng rng = Rng::for_trial(cfg.seed ^ 0x9e3779b97f4a7c15ull, trial);
    const auto n = static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(cfg.n_max)));
    CheckOptions opt;
    opt.kernel = kernel;
    opt.tolerance = cfg.tolerance;
    opt.caps = cfg.caps;
    std::vector<SuiteRecord> out;
    if (trial % 2 == 0) {
        auto a = lift_matrix<Real>(random_gram_real(n, 3, rng));
        inequality_records(a, alpha_values(cfg, n, rng), opt, out);
    } else {
        auto a = lift_matrix<Complex>(random_gram_hermitian(n, 3, rng));
        inequality_records(a, alpha_values(cfg, n, rng), opt, out);
    }
    return out;
}

inline std::vector<SuiteRecord> inequality_trial(const SuiteConfig& cfg, std::uint64_t trial, Kernel kernel) {
    if (cfg.float_mode) return inequality_trial_typed<double, std::complex<double>>(cfg, trial, kernel);
    return inequality_trial_typed<Rational, GaussianRational>(cfg, trial, kernel);
}

inline std::vector<SuiteRecord> extra_instance(const SuiteConfig& cfg, const AnyMatrix& m, Kernel kernel) {
    CheckOptions opt;
    opt.kernel = kernel;
    opt.tolerance = cfg.tolerance;
    opt.caps = cfg.caps;
    std::vector<SuiteRecord> out;
    Rng rng(cfg.seed);
    auto alphas = alpha_values(cfg, m.size(), rng);
    std::visit(
        [&](const auto& a) {
            if (!is_hermitian(a)) throw DomainError("check: --matrix instances must be Hermitian");
            inequality_records(a, alphas, opt, out);
        },
        m.storage());
    return out;
}

inline void tally(std::map<std::string, FamilyTally>& map, const SuiteRecord& r) {
    auto& t = map[r.family];
    ++t.evaluated;
    if (r.ok)
        ++t.passed;
    else
        ++t.failed;
    if (r.slack && (!t.min_slack || real_less(*r.slack, *t.min_slack))) t.min_slack = r.slack;
}

inline std::string record_json(const SuiteRecord& r, const char* suite, std::uint64_t seed, bool has_trial,
                               std::uint64_t trial, std::optional<bool> verified) {
    nlohmann::ordered_json j;
    j["suite"] = suite;
    j["check"] = r.family;
    if (verified) j["verified"] = *verified;
    j["seed"] = seed;
    j["trial"] = has_trial ? nlohmann::ordered_json(trial) : nlohmann::ordered_json(nullptr);
    j["alpha"] = r.alpha ? nlohmann::ordered_json(format_value(*r.alpha)) : nlohmann::ordered_json(nullptr);
    j["split"] = r.split ? nlohmann::ordered_json(*r.split) : nlohmann::ordered_json(nullptr);
    if (r.slack) j["slack"] = r.slack->str();
    if (r.diff) j["difference"] = r.diff->str();
    j["matrix"] = r.matrix.empty() ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json::parse(r.matrix);
    return j.dump();
}

/// Failures of the dp evaluation that the naive evaluation of the same trial reproduces.
inline std::vector<bool> verify_with_oracle(const std::vector<SuiteRecord>& dp, const std::vector<SuiteRecord>& naive) {
    std::vector<bool> out(dp.size(), false);
    for (std::size_t i = 0; i < dp.size() && i < naive.size(); ++i)
        out[i] = !dp[i].ok && !naive[i].ok && dp[i].family == naive[i].family;
    return out;
}

}  // namespace detail

inline SuiteReport run_suites(const SuiteConfig& cfg) {
    cfg.validate();
    SuiteReport report;
    const unsigned jobs = std::max(1u, cfg.jobs);
    const bool gate = !cfg.float_mode;

    if (cfg.identities) {
        auto trials = parallel_map(0, cfg.trials, jobs, [&](std::uint64_t t) {
            if (cfg.float_mode) return detail::identity_trial_typed<double, std::complex<double>>(cfg, t);
            return detail::identity_trial_typed<Rational, GaussianRational>(cfg, t);
        });
        for (std::uint64_t t = 0; t < trials.size(); ++t) {
            for (const auto& r : trials[t]) {
                detail::tally(report.identities, r);
                if (r.ok) continue;
                if (gate) ++report.gated_failures;
                report.findings.push_back(detail::record_json(r, "identities", cfg.seed, true, t, std::nullopt));
            }
        }
    }

    if (cfg.inequalities) {
        struct Trial {
            std::vector<SuiteRecord> records;
            std::vector<bool> verified;
        };
        auto evaluate = [&](auto&& produce) {
            Trial out;
            out.records = produce(Kernel::Dp);
            const bool flagged = std::any_of(out.records.begin(), out.records.end(),
                                             [](const SuiteRecord& r) { return !r.ok && r.gated; });
            if (flagged && gate) out.verified = detail::verify_with_oracle(out.records, produce(Kernel::Naive));
            else out.verified.assign(out.records.size(), false);
            return out;
        };
        auto trials = parallel_map(0, cfg.trials, jobs, [&](std::uint64_t t) {
            return evaluate([&](Kernel k) { return detail::inequality_trial(cfg, t, k); });
        });
        for (const auto& m : cfg.extra)
            trials.push_back(evaluate([&](Kernel k) { return detail::extra_instance(cfg, m, k); }));
        for (std::uint64_t t = 0; t < trials.size(); ++t) {
            const auto& tr = trials[t];
            for (std::size_t i = 0; i < tr.records.size(); ++i) {
                const auto& r = tr.records[i];
                detail::tally(report.inequalities, r);
                if (r.ok) continue;
                if (!r.gated || !gate) {
                    ++report.ungated_failures;
                    continue;
                }
                ++report.gated_failures;
                report.findings.push_back(detail::record_json(r, "inequalities", cfg.seed, t < cfg.trials, t, tr.verified[i]));
            }
        }
    }
    return report;
}

/// Plain-text table: one row per check family, then a result line.
inline std::string format_report(const SuiteConfig& cfg, const SuiteReport& report) {
    std::string out;
    out += "# seed " + std::to_string(cfg.seed) + " trials " + std::to_string(cfg.trials) + " n-max " +
           std::to_string(cfg.n_max) + " mode " + (cfg.float_mode ? "float" : "exact") + "\n";
    auto table = [&](const char* suite, const std::map<std::string, FamilyTally>& map) {
        for (const auto& [family, t] : map) {
            out += std::string(suite) + "\t" + family + "\t" + std::to_string(t.evaluated) + "\t" +
                   std::to_string(t.passed) + "\t" + std::to_string(t.failed) + "\t" +
                   (t.min_slack ? t.min_slack->str() : "-") + "\n";
        }
    };
    out += "suite\tcheck\tevaluated\tpassed\tfailed\tmin_slack\n";
    table("identities", report.identities);
    table("inequalities", report.inequalities);
    out += "gated_failures\t" + std::to_string(report.gated_failures) + "\n";
    out += "ungated_failures\t" + std::to_string(report.ungated_failures) + "\n";
    return out;
}

}  // namespace alphaperm
