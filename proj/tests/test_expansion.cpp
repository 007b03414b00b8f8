// Copyright 2026 The alphaperm Authors
// SPDX-License-Identifier: Apache-2.0

#include <alphaperm/expansion.hpp>
#include <alphaperm/random.hpp>

#include <gtest/gtest.h>

using namespace alphaperm;
using Q = Rational;

namespace {

Q factorial(std::size_t n) {
    Q f = 1;
    for (std::size_t i = 2; i <= n; ++i) f *= Q(static_cast<long>(i));
    return f;
}

// brute force over ordered k-tuples of disjoint nonempty blocks
Q ordered_block_sum(const Matrix<Q>& a, const Q& beta, std::size_t k) {
    const std::size_t n = a.size();
    std::vector<std::size_t> label(n, 0);
    Q total = 0;
    while (true) {
        std::vector<std::uint64_t> masks(k, 0);
        for (std::size_t i = 0; i < n; ++i) masks[label[i]] |= std::uint64_t{1} << i;
        bool nonempty = true;
        for (auto m : masks) nonempty = nonempty && m != 0;
        if (nonempty) {
            Q prod = 1;
            for (auto m : masks) prod *= per_alpha_naive(submatrix(a, m), beta);
            total += prod;
        }
        std::size_t i = 0;
        while (i < n && ++label[i] == k) label[i++] = 0;
        if (i == n) break;
    }
    return total;
}

}  // namespace

TEST(PerBetaK, Examples) {
    Rng rng(200);
    auto a = random_rational_matrix(4, rng);
    Q beta(2, 5);
    EXPECT_EQ(per_beta_k(a, beta, 1), per_alpha_dp(a, beta));
    EXPECT_EQ(per_beta_k(a, beta, 4), factorial(4) * power(beta, 4) * diagonal_product(a));
    EXPECT_EQ(per_beta_k(Matrix<Q>::identity(3), Q(1), 2), 6);
    EXPECT_THROW(per_beta_k(a, beta, 0), DomainError);
    EXPECT_THROW(per_beta_k(a, beta, 5), DomainError);
}

TEST(PerBetaK, MatchesOrderedEnumeration) {
    Rng rng(201);
    for (int t = 0; t < 10; ++t) {
        const auto n = static_cast<std::size_t>(rng.uniform(1, 4));
        auto a = random_rational_matrix(n, rng);
        Q beta = random_rational(rng, 9, 8);
        auto all = per_beta_all_k(a, beta);
        auto naive = per_beta_all_k(a, beta, Kernel::Naive);
        EXPECT_EQ(all, naive);
        for (std::size_t k = 1; k <= n; ++k) EXPECT_EQ(all[k], ordered_block_sum(a, beta, k));
    }
}

TEST(SumFormula, Examples) {
    Rng rng(202);
    auto a = random_rational_matrix(4, rng);
    Q b1(1, 3), b2(-7, 4);
    EXPECT_EQ(sum_formula_rhs(a, std::vector<Q>{b1}), per_alpha_dp(a, b1));
    EXPECT_EQ(sum_formula_rhs(a, std::vector<Q>{b1, b2}), per_alpha_dp(a, Q(b1 + b2)));
    EXPECT_EQ(sum_formula_rhs(Matrix<Q>(), std::vector<Q>{b1, b2}), 1);
    EXPECT_THROW(sum_formula_rhs(a, std::vector<Q>{}), DomainError);
    Caps tiny;
    tiny.assignments = 10;
    EXPECT_THROW(sum_formula_rhs(a, std::vector<Q>{b1, b2}, Kernel::Dp, tiny), CapacityError);
}

TEST(SumFormula, LemmaIdentity) {
    Rng rng(203);
    for (int t = 0; t < 30; ++t) {
        const auto n = static_cast<std::size_t>(rng.uniform(0, 5));
        const auto m = static_cast<std::size_t>(rng.uniform(1, 3));
        auto a = random_rational_matrix(n, rng);
        std::vector<Q> betas;
        Q total = 0;
        for (std::size_t j = 0; j < m; ++j) {
            betas.push_back(random_rational(rng, 9, 16));
            total += betas.back();
        }
        EXPECT_EQ(sum_formula_rhs(a, betas), per_alpha_dp(a, total));
    }
}

TEST(ProductFormula, Examples) {
    EXPECT_EQ(product_formula_rhs(Matrix<Q>::identity(2), Q(2), Q(3)), 36);
    EXPECT_EQ(per_alpha_naive(Matrix<Q>::identity(2), Q(6)), 36);
    EXPECT_THROW(product_formula_rhs(Matrix<Q>(), Q(1), Q(1)), DomainError);
}

TEST(ProductFormula, Identity) {
    Rng rng(204);
    for (int t = 0; t < 40; ++t) {
        const auto n = static_cast<std::size_t>(rng.uniform(1, 5));
        auto a = random_rational_matrix(n, rng);
        Q alpha = random_rational(rng, 9, 16);
        Q beta = random_rational(rng, 9, 16);
        EXPECT_EQ(product_formula_rhs(a, alpha, beta), per_alpha_dp(a, Q(alpha * beta)));
        EXPECT_EQ(product_formula_rhs(a, alpha, Q(1)), per_alpha_dp(a, alpha));
        EXPECT_EQ(product_formula_rhs(a, alpha, Q(-1)), per_alpha_dp(a, Q(-alpha)));
    }
}

TEST(ProductFormula, NegSpecializationViaBlockDeterminants) {
    Rng rng(205);
    for (int t = 0; t < 20; ++t) {
        const auto n = static_cast<std::size_t>(rng.uniform(1, 5));
        auto a = random_rational_matrix(n, rng);
        Q alpha = random_rational(rng, 9, 16);
        auto dk = det_all_k(a);
        Q sum = 0;
        for (std::size_t k = 1; k <= n; ++k) sum += gen_binomial(alpha, static_cast<unsigned>(k)) * dk[k];
        if (n % 2 == 1) sum = -sum;
        EXPECT_EQ(per_alpha_dp(a, Q(-alpha)), sum);
        if (n < 2) continue;
        // det(A, 2) as an explicit sum of block determinants
        Q direct = 0;
        for_each_partition(n, 2, [&](const SetPartition& p) {
            Q prod = 1;
            for (auto m : p.block_masks()) prod *= determinant(submatrix(a, m));
            direct += 2 * prod;
        });
        EXPECT_EQ(dk[2], direct);
    }
}

TEST(HalfFormula, Examples) {
    Q c(5, 3), alpha(7, 2);
    Matrix<Q> one{{c}};
    EXPECT_EQ(half_formula_rhs(one, alpha), alpha * c / 2);
    EXPECT_EQ(half_formula_rhs(one, alpha), per_alpha_dp(one, Q(alpha / 2)));
    // I_2: per_{a/2} = a^2 / 4
    Q a(3, 5);
    EXPECT_EQ(half_formula_rhs(Matrix<Q>::identity(2), a), a * a / 4);
    Rng rng(206);
    EXPECT_THROW(half_formula_rhs(random_rational_matrix(3, rng), a), DomainError);
}

TEST(HalfFormula, Identity) {
    Rng rng(207);
    for (int t = 0; t < 30; ++t) {
        const auto n = static_cast<std::size_t>(rng.uniform(1, 5));
        auto s = random_symmetric_matrix(n, rng);
        Q alpha = random_rational(rng, 9, 16);
        EXPECT_EQ(half_formula_rhs(s, alpha), per_alpha_dp(s, Q(alpha / 2)));
    }
}
