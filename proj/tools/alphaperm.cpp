// Copyright 2026 The alphaperm Authors
// SPDX-License-Identifier: Apache-2.0

// alphaperm command-line front end.
//
// Exit codes: 0 ok, 1 violation, 2 usage, 3 malformed input, 4 capacity.

#include <alphaperm/any_matrix.hpp>
#include <alphaperm/hunt.hpp>
#include <alphaperm/permanental.hpp>
#include <alphaperm/suites.hpp>

#include <CLI11.hpp>
#include <openssl/evp.h>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace ap = alphaperm;

namespace {

enum Exit { kOk = 0, kViolation = 1, kUsage = 2, kInput = 3, kCapacity = 4 };

struct UsageError : ap::Error {
    using ap::Error::Error;
};

std::string sha256_hex(const std::string& data) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr);
    std::ostringstream out;
    for (unsigned i = 0; i < len; ++i) out << std::hex << std::setw(2) << std::setfill('0') << int(md[i]);
    return out.str();
}

// "dp=20,naive=11" style overrides
void apply_caps(ap::Caps& caps, const std::string& text) {
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        auto eq = item.find('=');
        if (eq == std::string::npos) throw UsageError("bad cap '" + item + "' (expected name=value)");
        const std::string key = item.substr(0, eq);
        std::uint64_t value = 0;
        try {
            value = std::stoull(item.substr(eq + 1));
        } catch (const std::exception&) {
            throw UsageError("bad cap value in '" + item + "'");
        }
        if (key == "naive") caps.naive = value;
        else if (key == "dp") caps.dp = value;
        else if (key == "ryser") caps.ryser = value;
        else if (key == "hafnian") caps.hafnian = value;
        else if (key == "assignments") caps.assignments = value;
        else throw UsageError("unknown cap '" + key + "'");
    }
}

ap::Scalar parse_cli_scalar(const std::string& text, const char* what) {
    try {
        return ap::Scalar::parse(text);
    } catch (const ap::ParseError& e) {
        throw UsageError(std::string(what) + ": " + e.what());
    }
}

ap::Rational parse_real_exact(const std::string& text, const char* what) {
    ap::Scalar s = parse_cli_scalar(text, what);
    if (!s.is_exact() || s.is_complex()) throw UsageError(std::string(what) + " must be an exact rational, got '" + text + "'");
    return s.as<ap::Rational>();
}

// ---------------------------------------------------------------------------
// compute
// ---------------------------------------------------------------------------

struct ComputeArgs {
    std::string quantity;
    std::string matrix;
    std::string alpha = "1";
    std::string algo = "dp";
    std::string mode = "exact";
};

template <class T>
std::string compute_typed(const ComputeArgs& args, const ap::Matrix<T>& a, const T& alpha, const ap::Caps& caps) {
    const ap::Kernel kernel = args.algo == "naive" ? ap::Kernel::Naive : ap::Kernel::Dp;
    if (args.quantity == "per-alpha") return ap::format_value(ap::per_alpha(a, alpha, kernel, caps));
    if (args.quantity == "per") return ap::format_value(ap::permanent(a, caps));
    if (args.quantity == "det") return ap::format_value(ap::determinant(a));
    if (args.quantity == "haf") return ap::format_value(args.algo == "naive" ? ap::hafnian_naive(a, caps) : ap::hafnian(a, caps));
    return ap::format_value(ap::alpha_determinant(a, alpha, caps));
}

int cmd_compute(const ComputeArgs& args, const ap::Caps& caps) {
    const bool float_mode = args.mode == "float";
    ap::AnyMatrix m = ap::read_matrix_file(args.matrix);
    if (!float_mode && !m.is_exact()) throw UsageError("exact mode rejects float matrices; pass --mode float");
    ap::Scalar alpha = parse_cli_scalar(args.alpha, "--alpha");
    if (!float_mode && !alpha.is_exact()) throw UsageError("exact mode needs an exact --alpha");
    if (float_mode) alpha = alpha.to_float();

    const bool complex = alpha.is_complex() || m.field() == ap::Field::ComplexRational || m.field() == ap::Field::ComplexFloat;
    std::string out;
    if (!float_mode) {
        if (complex) {
            auto a = m.field() == ap::Field::Rational ? ap::to_complex_matrix(m.get<ap::Rational>())
                                                      : m.get<ap::GaussianRational>();
            out = compute_typed(args, a, alpha.as<ap::GaussianRational>(), caps);
        } else {
            out = compute_typed(args, m.get<ap::Rational>(), alpha.as<ap::Rational>(), caps);
        }
    } else {
        using C = std::complex<double>;
        ap::Matrix<C> ac;
        ap::Matrix<double> ar;
        switch (m.field()) {
            case ap::Field::Rational: ar = ap::to_float_matrix(m.get<ap::Rational>()); break;
            case ap::Field::ComplexRational: ac = ap::to_float_matrix(m.get<ap::GaussianRational>()); break;
            case ap::Field::Float: ar = m.get<double>(); break;
            case ap::Field::ComplexFloat: ac = m.get<C>(); break;
        }
        if (complex) {
            if (ac.size() == 0 && ar.size() > 0) {
                ac = ap::Matrix<C>(ar.size());
                for (std::size_t i = 0; i < ar.size(); ++i)
                    for (std::size_t j = 0; j < ar.size(); ++j) ac(i, j) = ar(i, j);
            }
            out = compute_typed(args, ac, alpha.as<C>(), caps);
        } else {
            out = compute_typed(args, ar, alpha.as<double>(), caps);
        }
    }
    std::cout << out << "\n";
    return kOk;
}

// ---------------------------------------------------------------------------
// gen
// ---------------------------------------------------------------------------

struct GenArgs {
    std::size_t n = 3;
    std::string kind = "real";
    std::uint64_t seed = 0;
    std::int64_t scale = 3;
    std::string out;
};

int cmd_gen(const GenArgs& args) {
    const auto kind = args.kind == "real" ? ap::PsdKind::RealSymmetric : ap::PsdKind::Hermitian;
    ap::AnyMatrix m = ap::random_psd(args.n, kind, args.scale, args.seed);
    const std::string path = args.out.empty()
                                 ? "gram-" + args.kind + "-n" + std::to_string(args.n) + "-seed" + std::to_string(args.seed) + ".json"
                                 : args.out;
    if (path == "-") {
        std::cout << ap::serialize_matrix(m);
        return kOk;
    }
    ap::write_matrix_file(path, m);
    std::cout << path << "\n";
    return kOk;
}

// ---------------------------------------------------------------------------
// check
// ---------------------------------------------------------------------------

struct CheckArgs {
    std::string suite = "all";
    std::size_t n_max = 5;
    std::uint64_t trials = 50;
    std::uint64_t seed = 0;
    std::string alpha_set = "theorem2";
    unsigned jobs = 1;
    std::vector<std::string> matrices;
    std::string mode = "exact";
    double tol = 1e-9;
};

int cmd_check(const CheckArgs& args, const ap::Caps& caps) {
    ap::SuiteConfig cfg;
    cfg.identities = args.suite != "inequalities";
    cfg.inequalities = args.suite != "identities";
    cfg.n_max = args.n_max;
    cfg.trials = args.trials;
    cfg.seed = args.seed;
    cfg.alpha_set = ap::parse_alpha_set(args.alpha_set);
    cfg.jobs = args.jobs;
    cfg.float_mode = args.mode == "float";
    cfg.tolerance = args.tol;
    cfg.caps = caps;
    for (const auto& path : args.matrices) {
        ap::AnyMatrix m = ap::read_matrix_file(path);
        if (!cfg.float_mode && !m.is_exact()) throw UsageError("exact mode rejects float matrices; pass --mode float");
        if (cfg.float_mode && m.is_exact()) {
            if (m.field() == ap::Field::Rational) m = ap::AnyMatrix(ap::to_float_matrix(m.get<ap::Rational>()), m.flags());
            else m = ap::AnyMatrix(ap::to_float_matrix(m.get<ap::GaussianRational>()), m.flags());
        }
        cfg.extra.push_back(std::move(m));
    }
    ap::SuiteReport report = ap::run_suites(cfg);
    for (const auto& line : report.findings) std::cout << line << "\n";
    std::cout << ap::format_report(cfg, report);
    const bool failed = report.gated_failures > 0;
    std::cout << "result\t" << (failed ? "FAIL" : "PASS") << "\n";
    return failed ? kViolation : kOk;
}

// ---------------------------------------------------------------------------
// hunt
// ---------------------------------------------------------------------------

struct HuntArgs {
    std::vector<std::string> targets{"marcus"};
    std::size_t n = 5;
    std::size_t n_min = 0;
    std::size_t n_max = 0;
    std::string kind = "real";
    std::int64_t scale = 4;
    std::size_t rank = 0;
    bool no_normalize = false;
    std::string alpha_range = "1:2";
    std::vector<std::string> alphas;
    std::int64_t max_den = 16;
    std::uint64_t trials = 1000;
    std::uint64_t seed = 0;
    std::string out = "findings.jsonl";
    std::string argmin_out;
    unsigned jobs = 1;
    std::size_t keep_smallest = 0;
    bool timestamp = false;
    std::string mode = "exact";
    double tol = 1e-9;
};

int cmd_hunt(const HuntArgs& args, const ap::Caps& caps) {
    ap::HuntConfig cfg;
    cfg.targets.clear();
    for (const auto& t : args.targets) {
        std::stringstream ss(t);
        std::string item;
        while (std::getline(ss, item, ','))
            if (!item.empty()) cfg.targets.push_back(ap::parse_hunt_target(item));
    }
    cfg.n_min = args.n_min ? args.n_min : args.n;
    cfg.n_max = args.n_max ? args.n_max : args.n;
    if (args.n_min && !args.n_max) cfg.n_max = std::max(args.n_min, args.n);
    cfg.kind = args.kind == "real" ? ap::PsdKind::RealSymmetric : ap::PsdKind::Hermitian;
    cfg.scale = args.scale;
    if (args.rank) cfg.rank = args.rank;
    cfg.normalize = !args.no_normalize;
    for (const auto& a : args.alphas) cfg.alpha_grid.push_back(parse_real_exact(a, "--alpha"));
    const auto colon = args.alpha_range.find(':');
    if (colon == std::string::npos) throw UsageError("--alpha-range must look like lo:hi");
    cfg.alpha_lo = parse_real_exact(args.alpha_range.substr(0, colon), "--alpha-range");
    cfg.alpha_hi = parse_real_exact(args.alpha_range.substr(colon + 1), "--alpha-range");
    cfg.max_den = args.max_den;
    cfg.trials = args.trials;
    cfg.seed = args.seed;
    cfg.keep_smallest = args.keep_smallest;
    cfg.jobs = args.jobs;
    cfg.float_mode = args.mode == "float";
    cfg.tolerance = args.tol;
    cfg.timestamps = args.timestamp;
    cfg.caps = caps;
    cfg.validate();

    std::ofstream out(args.out, std::ios::binary | std::ios::trunc);
    if (!out) throw ap::Error("cannot write '" + args.out + "'");
    ap::HuntSummary summary = ap::hunt(cfg, [&](const ap::Finding& f) {
        out << ap::finding_to_json(f, sha256_hex(f.matrix)) << "\n";
    });
    out.close();

    std::cout << "trials\t" << summary.trials << "\n";
    std::cout << "evaluations\t" << summary.evaluations << "\n";
    std::cout << "inequality\tevaluated\tviolations\tmin_slack\n";
    for (const auto& [name, s] : summary.per_inequality)
        std::cout << name << "\t" << s.evaluations << "\t" << s.violations << "\t" << (s.min_slack ? s.min_slack->str() : "-")
                  << "\n";
    std::cout << "verified_violations\t" << summary.gated_violations << "\n";
    std::cout << "unverified_flags\t" << summary.unverified << "\n";
    std::cout << "ungated_violations\t" << summary.ungated_violations << "\n";
    if (summary.argmin) {
        const std::string path = args.argmin_out.empty() ? args.out + ".argmin.json" : args.argmin_out;
        std::ofstream am(path, std::ios::binary | std::ios::trunc);
        if (!am) throw ap::Error("cannot write '" + path + "'");
        am << summary.argmin->matrix;
        std::cout << "min_slack\t" << summary.argmin->slack.str() << "\t" << summary.argmin->inequality << "\ttrial "
                  << summary.argmin->trial << "\talpha " << ap::format_value(summary.argmin->alpha) << "\n";
        std::cout << "argmin\t" << path << "\tsha256 " << sha256_hex(summary.argmin->matrix) << "\n";
    }
    std::cout << "findings\t" << args.out << "\n";
    if (summary.unverified > 0)
        std::cerr << "warning: " << summary.unverified << " flagged violation(s) failed naive re-verification\n";
    return summary.gated_violations > 0 && !cfg.float_mode ? kViolation : kOk;
}

// ---------------------------------------------------------------------------
// bench
// ---------------------------------------------------------------------------

struct BenchArgs {
    std::vector<std::string> kernels{"dp", "naive"};
    std::size_t n_min = 2;
    std::size_t n_max = 8;
    unsigned reps = 3;
    std::uint64_t seed = 0;
    std::string alpha = "3/2";
};

int cmd_bench(const BenchArgs& args, const ap::Caps& caps) {
    const ap::Rational alpha = parse_real_exact(args.alpha, "--alpha");
    for (const auto& k : args.kernels)
        if (k != "dp" && k != "naive" && k != "ryser" && k != "det" && k != "haf" && k != "haf-naive")
            throw UsageError("unknown kernel '" + k + "'");
    std::cout << "kernel\tn\treps\tseconds\n";
    for (const auto& kernel : args.kernels) {
        for (std::size_t n = args.n_min; n <= args.n_max; ++n) {
            ap::Rng rng(args.seed ^ n);
            double total = 0;
            for (unsigned r = 0; r < args.reps; ++r) {
                const bool haf = kernel == "haf" || kernel == "haf-naive";
                auto a = haf ? ap::random_symmetric_matrix(n, rng) : ap::random_rational_matrix(n, rng);
                const auto t0 = std::chrono::steady_clock::now();
                if (kernel == "dp") ap::per_alpha_dp(a, alpha, caps);
                else if (kernel == "naive") ap::per_alpha_naive(a, alpha, caps);
                else if (kernel == "ryser") ap::permanent(a, caps);
                else if (kernel == "det") ap::determinant(a);
                else if (kernel == "haf") ap::hafnian(a, caps);
                else ap::hafnian_naive(a, caps);
                total += std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            }
            std::cout << kernel << "\t" << n << "\t" << args.reps << "\t" << std::fixed << std::setprecision(6)
                      << total / args.reps << "\n";
            std::cout.unsetf(std::ios::floatfield);
        }
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"alpha-permanents, hafnians and permanental inequalities"};
    app.require_subcommand(1, 1);
    std::string caps_text;
    app.add_option("--caps", caps_text, "size caps, e.g. dp=20,naive=11 (also ALPHAPERM_CAPS)");

    ComputeArgs compute;
    auto* c = app.add_subcommand("compute", "evaluate a kernel on a matrix file");
    c->add_option("quantity", compute.quantity, "per-alpha | per | det | haf | det-alpha")
        ->required()
        ->check(CLI::IsMember({"per-alpha", "per", "det", "haf", "det-alpha"}));
    c->add_option("matrix", compute.matrix, "matrix file, or - for stdin")->required();
    c->add_option("--alpha", compute.alpha, "alpha (exact syntax)");
    c->add_option("--algo", compute.algo, "dp | naive")->check(CLI::IsMember({"dp", "naive"}));
    c->add_option("--mode", compute.mode, "exact | float")->check(CLI::IsMember({"exact", "float"}));

    GenArgs gen;
    auto* g = app.add_subcommand("gen", "write a random Gram PSD matrix file");
    g->add_option("--n", gen.n)->required()->check(CLI::Range(0, 64));
    g->add_option("--kind", gen.kind)->check(CLI::IsMember({"real", "hermitian"}));
    g->add_option("--seed", gen.seed);
    g->add_option("--scale", gen.scale)->check(CLI::PositiveNumber);
    g->add_option("--out", gen.out, "output path, - for stdout");

    CheckArgs check;
    auto* k = app.add_subcommand("check", "run the identity and inequality suites");
    k->add_option("--suite", check.suite)->check(CLI::IsMember({"identities", "inequalities", "all"}));
    k->add_option("--n-max", check.n_max);
    k->add_option("--trials", check.trials);
    k->add_option("--seed", check.seed);
    k->add_option("--alpha-set", check.alpha_set)->check(CLI::IsMember({"theorem2", "conjecture"}));
    k->add_option("--jobs", check.jobs)->check(CLI::PositiveNumber);
    k->add_option("--matrix", check.matrices, "extra instances for the inequality suite");
    k->add_option("--mode", check.mode)->check(CLI::IsMember({"exact", "float"}));
    k->add_option("--tol", check.tol);

    HuntArgs hunt;
    auto* h = app.add_subcommand("hunt", "randomized counterexample search");
    h->add_option("--target", hunt.targets, "marcus, half-marcus, lieb-type, neg-lieb-type, neg-positivity, half")
        ->delimiter(',');
    h->add_option("--n", hunt.n);
    h->add_option("--n-min", hunt.n_min);
    h->add_option("--n-max", hunt.n_max);
    h->add_option("--kind", hunt.kind)->check(CLI::IsMember({"real", "hermitian"}));
    h->add_option("--scale", hunt.scale);
    h->add_option("--rank", hunt.rank, "columns of the Gram factor (default n)");
    h->add_flag("--no-normalize", hunt.no_normalize, "do not force a unit diagonal");
    h->add_option("--alpha-range", hunt.alpha_range, "lo:hi");
    h->add_option("--alpha", hunt.alphas, "fixed alpha value(s), cycled over trials")->delimiter(',');
    h->add_option("--max-den", hunt.max_den);
    h->add_option("--trials", hunt.trials);
    h->add_option("--seed", hunt.seed);
    h->add_option("--out", hunt.out, "findings file (line-delimited JSON)");
    h->add_option("--argmin-out", hunt.argmin_out, "matrix file for the smallest slack");
    h->add_option("--jobs", hunt.jobs)->check(CLI::PositiveNumber);
    h->add_option("--keep-smallest", hunt.keep_smallest);
    h->add_flag("--timestamp", hunt.timestamp, "stamp findings with the wall clock");
    h->add_option("--mode", hunt.mode)->check(CLI::IsMember({"exact", "float"}));
    h->add_option("--tol", hunt.tol);

    BenchArgs bench;
    auto* b = app.add_subcommand("bench", "time the kernels");
    b->add_option("--kernel", bench.kernels, "dp, naive, ryser, det, haf, haf-naive")->delimiter(',');
    b->add_option("--n-min", bench.n_min);
    b->add_option("--n-max", bench.n_max);
    b->add_option("--reps", bench.reps)->check(CLI::PositiveNumber);
    b->add_option("--seed", bench.seed);
    b->add_option("--alpha", bench.alpha);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        ap::Caps caps;
        if (const char* env = std::getenv("ALPHAPERM_CAPS")) apply_caps(caps, env);
        apply_caps(caps, caps_text);
        if (*c) return cmd_compute(compute, caps);
        if (*g) return cmd_gen(gen);
        if (*k) return cmd_check(check, caps);
        if (*h) return cmd_hunt(hunt, caps);
        if (*b) return cmd_bench(bench, caps);
    } catch (const ap::CapacityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kCapacity;
    } catch (const ap::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInput;
    } catch (const ap::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
