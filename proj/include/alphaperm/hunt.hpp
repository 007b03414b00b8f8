// Copyright 2026 The alphaperm Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file hunt.hpp
 * @brief Randomized counterexample search for the alpha-permanent inequalities.
 *
 * Trial i draws everything (dimension, Gram instance, alpha) from
 * Rng::for_trial(seed, i), so any trial can be replayed in isolation and the
 * output is independent of how trials are spread over threads.
 *
 * A dp-kernel violation is re-evaluated with the naive permutation-sum oracle
 * before it is reported as verified.
 */

#pragma once

#include <alphaperm/any_matrix.hpp>
#include <alphaperm/inequalities.hpp>
#include <alphaperm/parallel.hpp>
#include <alphaperm/random.hpp>

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <ctime>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace alphaperm {

enum class HuntTarget { Marcus, HalfMarcus, LiebType, NegLiebType, NegPositivity, Half };

inline const char* to_string(HuntTarget t) {
    switch (t) {
        case HuntTarget::Marcus: return "marcus";
        case HuntTarget::HalfMarcus: return "half-marcus";
        case HuntTarget::LiebType: return "lieb-type";
        case HuntTarget::NegLiebType: return "neg-lieb-type";
        case HuntTarget::NegPositivity: return "neg-positivity";
        case HuntTarget::Half: return "half";
    }
    return "?";
}

inline std::vector<HuntTarget> all_hunt_targets() {
    return {HuntTarget::Marcus,      HuntTarget::HalfMarcus,    HuntTarget::LiebType,
            HuntTarget::NegLiebType, HuntTarget::NegPositivity, HuntTarget::Half};
}

inline HuntTarget parse_hunt_target(std::string_view s) {
    for (auto t : all_hunt_targets())
        if (s == to_string(t)) return t;
    throw DomainError("unknown hunt target '" + std::string(s) + "'");
}

struct HuntConfig {
    std::vector<HuntTarget> targets{HuntTarget::Marcus};
    std::size_t n_min = 5;
    std::size_t n_max = 5;
    PsdKind kind = PsdKind::RealSymmetric;
    std::int64_t scale = 4;
    std::optional<std::size_t> rank;  ///< columns of the Gram factor; default n
    bool normalize = true;            ///< unit diagonal
    std::vector<Rational> alpha_grid; ///< when nonempty, trial i uses alpha_grid[i % size]
    Rational alpha_lo{1};
    Rational alpha_hi{2};
    std::int64_t max_den = 16;
    std::uint64_t trials = 1000;
    std::uint64_t seed = 0;
    std::size_t keep_smallest = 0;   ///< also emit the k trials with the smallest slack
    unsigned jobs = 1;
    bool float_mode = false;
    double tolerance = 1e-9;
    bool timestamps = false;
    Caps caps{};

    void validate() const {
        if (targets.empty()) throw DomainError("hunt: no targets");
        if (n_min < 1 || n_min > n_max) throw DomainError("hunt: need 1 <= n_min <= n_max");
        if (n_max > caps.dp) throw CapacityError("hunt: n_max exceeds the dp cap");
        if (scale < 1) throw DomainError("hunt: scale must be >= 1");
        if (rank && *rank < 1) throw DomainError("hunt: rank must be >= 1");
        if (alpha_grid.empty() && (alpha_lo > alpha_hi || max_den < 1)) throw DomainError("hunt: bad alpha range");
    }
};

/// Evidence record for one evaluated inequality.
struct Finding {
    std::string kind;  ///< "violation" or "min-slack"
    std::string inequality;
    Regime regime = Regime::Theorem;
    bool verified = false;  ///< violation confirmed by the naive oracle
    std::string matrix;     ///< serialized matrix file text
    Rational alpha;
    std::optional<std::size_t> split;
    Scalar slack;
    std::uint64_t seed = 0;
    std::uint64_t trial = 0;
    std::optional<std::string> timestamp;
};

struct TargetStats {
    std::uint64_t evaluations = 0;
    std::uint64_t violations = 0;
    std::optional<Scalar> min_slack;
};

struct HuntSummary {
    std::uint64_t trials = 0;
    std::uint64_t evaluations = 0;
    std::uint64_t gated_violations = 0;    ///< verified, in the theorem or conjecture regime
    std::uint64_t ungated_violations = 0;  ///< evidence-only (e.g. neg-positivity off the theorem regime)
    std::uint64_t unverified = 0;          ///< flagged by dp but refuted by the oracle (kernel bug)
    std::optional<Finding> argmin;         ///< smallest gated slack seen
    std::map<std::string, TargetStats> per_inequality;
};

namespace detail {

/// Strict order on real scalars (Rational or double).
inline bool real_less(const Scalar& a, const Scalar& b) {
    if (a.is_exact() && b.is_exact()) return a.as<Rational>() < b.as<Rational>();
    return a.to_float().as<double>() < b.to_float().as<double>();
}

struct EvaluatedCheck {
    ComparisonResult result;
    std::optional<std::size_t> split;
};

struct HuntInstance {
    AnyMatrix matrix;
    Rational alpha;
};

inline HuntInstance make_hunt_instance(const HuntConfig& cfg, std::uint64_t trial) {
    Rng rng = Rng::for_trial(cfg.seed, trial);
    const auto n = static_cast<std::size_t>(rng.uniform(static_cast<std::int64_t>(cfg.n_min), static_cast<std::int64_t>(cfg.n_max)));
    const std::size_t rank = cfg.rank.value_or(n);
    HuntInstance inst;
    if (cfg.kind == PsdKind::RealSymmetric) {
        Matrix<Rational> a;
        if (cfg.normalize) {
            a = random_unit_gram_real(n, rank, cfg.scale, rng);
        } else {
            std::vector<Rational> b(n * rank);
            for (auto& x : b) x = random_rational(rng, cfg.scale, cfg.scale);
            a = gram(b, n, rank);
        }
        inst.matrix = AnyMatrix(std::move(a), {true, true});
    } else {
        Matrix<GaussianRational> a;
        if (cfg.normalize) {
            a = random_unit_gram_hermitian(n, rank, cfg.scale, rng);
        } else {
            std::vector<GaussianRational> b(n * rank);
            for (auto& x : b) x = random_gaussian_rational(rng, cfg.scale, cfg.scale);
            a = gram(b, n, rank);
        }
        const bool real = is_real_symmetric(a);
        inst.matrix = AnyMatrix(std::move(a), {real, true});
    }
    if (!cfg.alpha_grid.empty()) {
        inst.alpha = cfg.alpha_grid[trial % cfg.alpha_grid.size()];
    } else if (trial % 16 == 0) {
        inst.alpha = cfg.alpha_lo;
    } else if (trial % 16 == 1) {
        inst.alpha = cfg.alpha_hi;
    } else {
        inst.alpha = random_rational_in(rng, cfg.alpha_lo, cfg.alpha_hi, cfg.max_den);
    }
    return inst;
}

template <class T>
std::vector<EvaluatedCheck> evaluate_targets(const Matrix<T>& a, const real_of_t<T>& alpha,
                                             const std::vector<HuntTarget>& targets, const CheckOptions& opt) {
    std::vector<EvaluatedCheck> out;
    const std::size_t n = a.size();
    const bool real = is_real_matrix(a);
    for (auto target : targets) {
        switch (target) {
            case HuntTarget::Marcus:
            case HuntTarget::HalfMarcus: {
                if (target == HuntTarget::HalfMarcus && !real) break;
                for (auto& r : check_marcus(a, alpha, opt)) {
                    const bool is_half = r.name == "half-marcus";
                    if (is_half == (target == HuntTarget::HalfMarcus)) out.push_back({std::move(r), std::nullopt});
                }
                break;
            }
            case HuntTarget::LiebType:
                for (std::size_t m = 1; m < n; ++m) out.push_back({check_lieb_type_split(a, {m}, alpha, opt), m});
                break;
            case HuntTarget::NegLiebType:
                for (std::size_t m = 1; m < n; ++m) out.push_back({check_neg_lieb_type(a, {m}, alpha, opt), m});
                break;
            case HuntTarget::NegPositivity: out.push_back({check_neg_positivity(a, alpha, opt), std::nullopt}); break;
            case HuntTarget::Half:
                if (real) out.push_back({check_half(a, alpha, opt), std::nullopt});
                break;
        }
    }
    return out;
}

inline std::vector<EvaluatedCheck> evaluate_instance(const HuntConfig& cfg, const HuntInstance& inst, Kernel kernel) {
    CheckOptions opt;
    opt.kernel = kernel;
    opt.tolerance = cfg.tolerance;
    opt.caps = cfg.caps;
    if (cfg.float_mode) {
        const double alpha = inst.alpha.get_d();
        if (inst.matrix.field() == Field::Rational)
            return evaluate_targets(to_float_matrix(inst.matrix.get<Rational>()), alpha, cfg.targets, opt);
        return evaluate_targets(to_float_matrix(inst.matrix.get<GaussianRational>()), alpha, cfg.targets, opt);
    }
    if (inst.matrix.field() == Field::Rational)
        return evaluate_targets(inst.matrix.get<Rational>(), inst.alpha, cfg.targets, opt);
    return evaluate_targets(inst.matrix.get<GaussianRational>(), inst.alpha, cfg.targets, opt);
}

struct TrialOutcome {
    std::vector<EvaluatedCheck> checks;
    std::vector<bool> verified;  ///< per check; meaningful for violations only
    std::string matrix_text;
    Rational alpha;
};

inline TrialOutcome run_trial(const HuntConfig& cfg, std::uint64_t trial) {
    HuntInstance inst = make_hunt_instance(cfg, trial);
    TrialOutcome out;
    out.checks = evaluate_instance(cfg, inst, Kernel::Dp);
    out.verified.assign(out.checks.size(), false);
    bool any_violation = std::any_of(out.checks.begin(), out.checks.end(),
                                     [](const EvaluatedCheck& c) { return c.result.violated(); });
    if (any_violation && !cfg.float_mode && inst.matrix.size() <= cfg.caps.naive) {
        auto oracle = evaluate_instance(cfg, inst, Kernel::Naive);
        for (std::size_t i = 0; i < out.checks.size(); ++i)
            out.verified[i] = out.checks[i].result.violated() && oracle[i].result.violated() &&
                              oracle[i].result.slack == out.checks[i].result.slack;
    }
    out.matrix_text = serialize_matrix(inst.matrix);
    out.alpha = inst.alpha;
    return out;
}

inline std::string utc_timestamp() {
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

inline Finding make_finding(const HuntConfig& cfg, std::uint64_t trial, const TrialOutcome& t, std::size_t idx,
                            std::string kind) {
    const auto& c = t.checks[idx];
    Finding f;
    f.kind = std::move(kind);
    f.inequality = c.result.name;
    f.regime = c.result.regime;
    f.verified = t.verified[idx];
    f.matrix = t.matrix_text;
    f.alpha = t.alpha;
    f.split = c.split;
    f.slack = c.result.slack;
    f.seed = cfg.seed;
    f.trial = trial;
    if (cfg.timestamps) f.timestamp = utc_timestamp();
    return f;
}

}  // namespace detail

/// Re-evaluates a single trial with the dp kernel (same instance, same alpha).
inline std::vector<ComparisonResult> replay_trial(const HuntConfig& cfg, std::uint64_t trial) {
    auto inst = detail::make_hunt_instance(cfg, trial);
    std::vector<ComparisonResult> out;
    for (auto& c : detail::evaluate_instance(cfg, inst, Kernel::Dp)) out.push_back(std::move(c.result));
    return out;
}

/// Runs cfg.trials trials and streams Findings to `sink` in trial order:
/// every violation as it is found, then the keep_smallest lowest-slack trials.
inline HuntSummary hunt(const HuntConfig& cfg, const std::function<void(const Finding&)>& sink) {
    cfg.validate();
    HuntSummary summary;
    struct Candidate {
        Scalar slack;
        Finding finding;
    };
    std::vector<Candidate> smallest;

    const unsigned jobs = std::max(1u, cfg.jobs);
    const std::uint64_t batch = 64ull * jobs;
    for (std::uint64_t start = 0; start < cfg.trials; start += batch) {
        const std::uint64_t stop = std::min(cfg.trials, start + batch);
        auto outcomes = parallel_map(start, stop, jobs, [&](std::uint64_t i) { return detail::run_trial(cfg, i); });
        for (std::uint64_t k = 0; k < outcomes.size(); ++k) {
            const std::uint64_t trial = start + k;
            const auto& t = outcomes[k];
            ++summary.trials;
            std::optional<std::size_t> trial_min;
            for (std::size_t i = 0; i < t.checks.size(); ++i) {
                const auto& r = t.checks[i].result;
                ++summary.evaluations;
                auto& stats = summary.per_inequality[r.name];
                ++stats.evaluations;
                if (!stats.min_slack || detail::real_less(r.slack, *stats.min_slack)) stats.min_slack = r.slack;
                if (r.gated() && (!trial_min || detail::real_less(r.slack, t.checks[*trial_min].result.slack)))
                    trial_min = i;
                if (!r.violated()) continue;
                ++stats.violations;
                if (!r.gated())
                    ++summary.ungated_violations;
                else if (t.verified[i])
                    ++summary.gated_violations;
                else if (!cfg.float_mode)
                    ++summary.unverified;
                sink(detail::make_finding(cfg, trial, t, i, "violation"));
            }
            if (!trial_min) continue;
            const Scalar& slack = t.checks[*trial_min].result.slack;
            if (!summary.argmin || detail::real_less(slack, summary.argmin->slack))
                summary.argmin = detail::make_finding(cfg, trial, t, *trial_min, "min-slack");
            if (cfg.keep_smallest > 0) {
                smallest.push_back({slack, detail::make_finding(cfg, trial, t, *trial_min, "min-slack")});
                std::stable_sort(smallest.begin(), smallest.end(),
                                 [](const Candidate& a, const Candidate& b) { return detail::real_less(a.slack, b.slack); });
                if (smallest.size() > cfg.keep_smallest) smallest.pop_back();
            }
        }
    }
    for (const auto& c : smallest) sink(c.finding);
    return summary;
}

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------

/// One finding as a single-line JSON object (no trailing newline).
inline std::string finding_to_json(const Finding& f, const std::optional<std::string>& matrix_hash = std::nullopt) {
    nlohmann::ordered_json j;
    j["kind"] = f.kind;
    j["inequality"] = f.inequality;
    j["regime"] = to_string(f.regime);
    j["verified"] = f.verified;
    j["seed"] = f.seed;
    j["trial"] = f.trial;
    j["alpha"] = format_value(f.alpha);
    j["split"] = f.split ? nlohmann::ordered_json(*f.split) : nlohmann::ordered_json(nullptr);
    j["slack"] = f.slack.str();
    j["matrix"] = nlohmann::ordered_json::parse(f.matrix);
    if (matrix_hash) j["matrix_sha256"] = *matrix_hash;
    j["timestamp"] = f.timestamp ? nlohmann::ordered_json(*f.timestamp) : nlohmann::ordered_json(nullptr);
    return j.dump();
}

inline Finding finding_from_json(std::string_view line) {
    nlohmann::ordered_json j;
    try {
        j = nlohmann::ordered_json::parse(line);
        Finding f;
        f.kind = j.at("kind").get<std::string>();
        f.inequality = j.at("inequality").get<std::string>();
        const auto regime = j.at("regime").get<std::string>();
        f.regime = regime == "theorem" ? Regime::Theorem : regime == "conjecture" ? Regime::Conjecture : Regime::Ungated;
        f.verified = j.at("verified").get<bool>();
        f.seed = j.at("seed").get<std::uint64_t>();
        f.trial = j.at("trial").get<std::uint64_t>();
        f.alpha = Scalar::parse(j.at("alpha").get<std::string>()).as<Rational>();
        if (!j.at("split").is_null()) f.split = j.at("split").get<std::size_t>();
        f.slack = Scalar::parse(j.at("slack").get<std::string>());
        f.matrix = serialize_matrix(parse_matrix(j.at("matrix").dump()));
        if (j.contains("timestamp") && !j.at("timestamp").is_null()) f.timestamp = j.at("timestamp").get<std::string>();
        return f;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed finding: ") + e.what());
    }
}

}  // namespace alphaperm
