// Copyright 2026 The alphaperm Authors
// SPDX-License-Identifier: Apache-2.0

// Small tour: alpha-permanents of a Gram matrix, the Marcus chain, and a
// short hunt over unit-diagonal 4x4 instances.

#include <alphaperm/expansion.hpp>
#include <alphaperm/hunt.hpp>
#include <alphaperm/inequalities.hpp>

#include <iostream>

using namespace alphaperm;

int main() {
    Rng rng(2026);
    Matrix<Rational> a = random_gram_real(4, 3, rng);
    std::cout << serialize_matrix(AnyMatrix(a, {true, true}));

    for (const Rational& alpha : {Rational(-1), Rational(1, 2), Rational(1), Rational(3, 2), Rational(2)})
        std::cout << "per_" << alpha << " = " << per_alpha_dp(a, alpha) << "\n";
    std::cout << "per = " << permanent(a) << ", det = " << determinant(a) << "\n";
    std::cout << "haf of the doubled matrix / 2^4 = " << hafnian(doubled(a)) / 16 << "\n";

    std::cout << "alpha polynomial coefficients:";
    for (const auto& c : alpha_polynomial(a)) std::cout << " " << c;
    std::cout << "\n";

    for (const auto& r : check_marcus(a, Rational(3, 2))) std::cout << r.str() << "\n";

    HuntConfig cfg;
    cfg.n_min = cfg.n_max = 4;
    cfg.trials = 200;
    cfg.seed = 7;
    HuntSummary s = hunt(cfg, [](const Finding& f) { std::cout << finding_to_json(f) << "\n"; });
    std::cout << s.trials << " trials, " << s.gated_violations << " violations, smallest slack "
              << s.argmin->slack.str() << " (" << s.argmin->inequality << ")\n";
}
