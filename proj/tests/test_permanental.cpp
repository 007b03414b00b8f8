// Copyright 2026 The alphaperm Authors
// SPDX-License-Identifier: Apache-2.0

#include <alphaperm/permanental.hpp>
#include <alphaperm/random.hpp>

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

using namespace alphaperm;
using Q = Rational;

namespace {

// haf(C) = (1 / (m! 2^m)) sum over all orderings s of prod c[s0,s1] c[s2,s3] ...
Q hafnian_by_orderings(const Matrix<Q>& c) {
    std::vector<std::size_t> s(c.size());
    std::iota(s.begin(), s.end(), 0);
    Q total = 0;
    do {
        Q prod = 1;
        for (std::size_t i = 0; i < s.size(); i += 2) prod *= c(s[i], s[i + 1]);
        total += prod;
    } while (std::next_permutation(s.begin(), s.end()));
    const std::size_t m = c.size() / 2;
    Q norm = 1;
    for (std::size_t i = 1; i <= m; ++i) norm *= 2 * i;
    return total / norm;
}

Q leibniz(const Matrix<Q>& a) {
    std::vector<std::size_t> p(a.size());
    std::iota(p.begin(), p.end(), 0);
    Q total = 0;
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < p.size(); ++i)
            for (std::size_t j = i + 1; j < p.size(); ++j) inversions += p[i] > p[j];
        Q prod = inversions % 2 ? -1 : 1;
        for (std::size_t i = 0; i < p.size(); ++i) prod *= a(i, p[i]);
        total += prod;
    } while (std::next_permutation(p.begin(), p.end()));
    return total;
}

Q pow_q(const Q& x, unsigned n) { return power(x, n); }

}  // namespace

TEST(PerAlpha, EmptyMatrixIsOne) {
    Matrix<Q> e;
    EXPECT_EQ(per_alpha_naive(e, Q(5)), 1);
    EXPECT_EQ(per_alpha_dp(e, Q(5)), 1);
    EXPECT_EQ(permanent(e), 1);
    EXPECT_EQ(determinant(e), 1);
    EXPECT_EQ(hafnian(e), 1);
}

TEST(PerAlpha, NaiveExamples) {
    Q a(3, 7);
    EXPECT_EQ(per_alpha_naive(Matrix<Q>::identity(3), a), pow_q(a, 3));
    EXPECT_EQ(per_alpha_naive(Matrix<Q>::ones(2), a), a * a + a);
    EXPECT_EQ(per_alpha_naive(Matrix<Q>::ones(3), a), a * (a + 1) * (a + 2));
    EXPECT_THROW(per_alpha_naive(Matrix<Q>::identity(11), a), CapacityError);
}

TEST(PerAlpha, DpExamples) {
    EXPECT_EQ(per_alpha_dp(Matrix<Q>::identity(5), Q(5, 2)), Q(3125, 32));
    Q a(-5, 9);
    EXPECT_EQ(per_alpha_dp(Matrix<Q>::ones(3), a), a * (a + 1) * (a + 2));
    Caps small;
    small.dp = 4;
    EXPECT_THROW(per_alpha_dp(Matrix<Q>::identity(5), a, small), CapacityError);
}

TEST(PerAlpha, TwoByTwoMinusOne) {
    Matrix<Q> a{{Q(1), Q(2)}, {Q(3), Q(4)}};
    EXPECT_EQ(per_alpha_naive(a, Q(-1)), -2);
    EXPECT_EQ(per_alpha_dp(a, Q(-1)), -2);
}

TEST(PerAlpha, DpMatchesNaive) {
    Rng rng(100);
    for (int t = 0; t < 120; ++t) {
        const auto n = static_cast<std::size_t>(rng.uniform(0, 7));
        auto a = random_rational_matrix(n, rng);
        Q alpha = random_rational(rng, 20, 16);
        EXPECT_EQ(per_alpha_dp(a, alpha), per_alpha_naive(a, alpha)) << "trial " << t;
    }
}

TEST(PerAlpha, GaussianDpMatchesNaive) {
    Rng rng(101);
    for (int t = 0; t < 40; ++t) {
        const auto n = static_cast<std::size_t>(rng.uniform(1, 5));
        auto a = random_gaussian_matrix(n, rng);
        GaussianRational alpha(random_rational(rng, 9, 5), random_rational(rng, 9, 5));
        EXPECT_EQ(per_alpha_dp(a, alpha), per_alpha_naive(a, alpha));
    }
}

TEST(PerAlpha, FloatAgreesWithExact) {
    Rng rng(102);
    for (int t = 0; t < 20; ++t) {
        auto a = random_rational_matrix(6, rng);
        Q alpha = random_rational(rng, 9, 8);
        const double exact = per_alpha_dp(a, alpha).get_d();
        const double approx = per_alpha_dp(to_float_matrix(a), alpha.get_d());
        EXPECT_NEAR(approx, exact, 1e-9 * std::max(1.0, std::abs(exact)));
    }
}

TEST(PerAlpha, TransposeAndSimilarityInvariance) {
    Rng rng(103);
    for (int t = 0; t < 30; ++t) {
        const auto n = static_cast<std::size_t>(rng.uniform(1, 6));
        auto a = random_rational_matrix(n, rng);
        Q alpha = random_rational(rng, 9, 16);
        const Q v = per_alpha_dp(a, alpha);
        EXPECT_EQ(per_alpha_dp(transpose(a), alpha), v);
        std::vector<std::size_t> p(n);
        std::iota(p.begin(), p.end(), 0);
        for (std::size_t i = n; i > 1; --i) std::swap(p[i - 1], p[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(i) - 1))]);
        EXPECT_EQ(per_alpha_dp(permute_similar(a, p), alpha), v);
    }
}

TEST(PerAlpha, DegreeStructure) {
    Rng rng(104);
    for (int t = 0; t < 20; ++t) {
        const auto n = static_cast<std::size_t>(rng.uniform(1, 6));
        auto a = random_rational_matrix(n, rng);
        auto coeffs = alpha_polynomial(a);
        ASSERT_EQ(coeffs.size(), n + 1);
        EXPECT_EQ(coeffs[0], 0);
        EXPECT_EQ(coeffs[n], diagonal_product(a));
        EXPECT_EQ(coeffs[1], cycle_sum(a, IndexSet::full(n)));
        EXPECT_EQ(coeffs, cycle_count_coefficients(a));
        Q alpha = random_rational(rng, 9, 7);
        Q horner = 0;
        for (std::size_t k = n + 1; k-- > 0;) horner = horner * alpha + coeffs[k];
        EXPECT_EQ(horner, per_alpha_dp(a, alpha));
    }
}

TEST(PerAlpha, HermitianGivesReal) {
    Rng rng(105);
    for (int t = 0; t < 20; ++t) {
        auto h = random_gram_hermitian(4, 3, rng);
        auto v = per_alpha_dp(h, GaussianRational(random_rational(rng, 9, 16)));
        EXPECT_EQ(v.im, 0);
    }
}

TEST(CycleSum, Examples) {
    Rng rng(106);
    auto a = random_rational_matrix(4, rng);
    EXPECT_EQ(cycle_sum(a, IndexSet(0b100, 4)), a(2, 2));
    EXPECT_EQ(cycle_sum(a, IndexSet(0b1010, 4)), a(1, 3) * a(3, 1));
    EXPECT_EQ(cycle_sum(Matrix<Q>::ones(4), IndexSet::full(4)), 6);
    EXPECT_THROW(cycle_sum(a, IndexSet::empty(4)), DomainError);
}

TEST(Permanent, Examples) {
    EXPECT_EQ(permanent(Matrix<Q>::identity(6)), 1);
    EXPECT_EQ(permanent(Matrix<Q>::ones(3)), 6);
    Rng rng(107);
    for (int t = 0; t < 20; ++t) {
        auto a = random_rational_matrix(5, rng);
        EXPECT_EQ(permanent(a), per_alpha_naive(a, Q(1)));
    }
}

TEST(Determinant, Examples) {
    EXPECT_EQ(determinant(Matrix<Q>::identity(7)), 1);
    EXPECT_EQ(determinant(Matrix<Q>{{Q(1), Q(2)}, {Q(3), Q(4)}}), -2);
    Rng rng(108);
    for (int t = 0; t < 20; ++t) {
        auto a = random_rational_matrix(5, rng);
        EXPECT_EQ(determinant(a), -per_alpha_naive(a, Q(-1)));
        EXPECT_EQ(determinant(a), leibniz(a));
    }
    Matrix<Q> singular{{Q(1), Q(2)}, {Q(2), Q(4)}};
    EXPECT_EQ(determinant(singular), 0);
    Matrix<Q> pivot{{Q(0), Q(1)}, {Q(1), Q(0)}};
    EXPECT_EQ(determinant(pivot), -1);
}

TEST(Determinant, GaussianAndFloat) {
    Rng rng(109);
    for (int t = 0; t < 10; ++t) {
        auto g = random_gaussian_matrix(4, rng);
        EXPECT_EQ(determinant(g), per_alpha_naive(g, GaussianRational(Q(-1))));  // n = 4
        auto a = random_rational_matrix(5, rng);
        EXPECT_NEAR(determinant(to_float_matrix(a)), determinant(a).get_d(), 1e-6 * std::max(1.0, std::abs(determinant(a).get_d())));
    }
}

TEST(Hafnian, Examples) {
    Q b(7, 3);
    EXPECT_EQ(hafnian(Matrix<Q>{{Q(5), b}, {b, Q(-1)}}), b);
    Rng rng(110);
    auto c = random_symmetric_matrix(4, rng);
    EXPECT_EQ(hafnian(c), c(0, 1) * c(2, 3) + c(0, 2) * c(1, 3) + c(0, 3) * c(1, 2));
    EXPECT_EQ(hafnian(doubled(Matrix<Q>{{Q(1)}})), 1);
    EXPECT_THROW(hafnian(Matrix<Q>::identity(3)), DimensionError);
    EXPECT_THROW(hafnian(Matrix<Q>{{Q(0), Q(1)}, {Q(2), Q(0)}}), DomainError);
}

TEST(Hafnian, MatchesOracles) {
    Rng rng(111);
    for (int t = 0; t < 30; ++t) {
        const auto m = static_cast<std::size_t>(rng.uniform(1, 4));
        auto c = random_symmetric_matrix(2 * m, rng);
        const Q v = hafnian(c);
        EXPECT_EQ(v, hafnian_naive(c));
        if (m <= 3) {
            EXPECT_EQ(v, hafnian_by_orderings(c));
        }
    }
    auto c = random_symmetric_matrix(10, rng);
    EXPECT_EQ(hafnian(c), hafnian_naive(c));
}

TEST(Hafnian, SimilarityInvariance) {
    Rng rng(112);
    auto c = random_symmetric_matrix(8, rng);
    std::vector<std::size_t> p{3, 0, 7, 1, 6, 2, 5, 4};
    EXPECT_EQ(hafnian(permute_similar(c, p)), hafnian(c));
}

TEST(Hafnian, DoubledIdentity) {
    Rng rng(113);
    for (int t = 0; t < 30; ++t) {
        const auto n = static_cast<std::size_t>(rng.uniform(0, 6));
        auto s = random_symmetric_matrix(n, rng);
        EXPECT_EQ(per_alpha_dp(s, Q(1, 2)), hafnian(doubled(s)) / power(Q(2), static_cast<unsigned>(n)));
    }
}

TEST(AlphaDeterminant, Examples) {
    Rng rng(114);
    auto a = random_rational_matrix(4, rng);
    EXPECT_EQ(alpha_determinant(a, Q(1)), permanent(a));
    EXPECT_EQ(alpha_determinant(a, Q(-1)), determinant(a));
    EXPECT_EQ(alpha_determinant(Matrix<Q>::identity(5), Q(3, 7)), 1);
    EXPECT_THROW(alpha_determinant(a, Q(0)), DomainError);
}
