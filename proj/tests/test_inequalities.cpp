// Copyright 2026 The alphaperm Authors
// SPDX-License-Identifier: Apache-2.0

#include <alphaperm/inequalities.hpp>
#include <alphaperm/random.hpp>

#include <gtest/gtest.h>

using namespace alphaperm;
using Q = Rational;

namespace {

Matrix<Q> block_diagonal(Rng& rng) {
    return direct_sum(random_gram_real(2, 3, rng), random_gram_real(3, 3, rng));
}

const ComparisonResult& named(const std::vector<ComparisonResult>& v, const std::string& name) {
    for (const auto& r : v)
        if (r.name == name) return r;
    throw std::runtime_error("no result " + name);
}

}  // namespace

TEST(Lieb, Examples) {
    Rng rng(300);
    EXPECT_EQ(check_lieb(block_diagonal(rng), {2}).verdict, Verdict::Equality);
    auto r = check_lieb(Matrix<Q>::ones(2), {1});
    EXPECT_EQ(r.lhs.str(), "2");
    EXPECT_EQ(r.rhs.str(), "1");
    EXPECT_EQ(r.verdict, Verdict::Holds);
    EXPECT_EQ(r.slack.str(), "1");
    for (int t = 0; t < 20; ++t) {
        auto g = random_gram_real(4, 3, rng);
        for (std::size_t m = 1; m < 4; ++m) EXPECT_FALSE(check_lieb(g, {m}).violated());
    }
    EXPECT_THROW(check_lieb(Matrix<Q>::ones(2), {2}), DimensionError);
}

TEST(Fischer, Examples) {
    Rng rng(301);
    EXPECT_EQ(check_fischer(block_diagonal(rng), {2}).verdict, Verdict::Equality);
    auto r = check_fischer(Matrix<Q>::ones(2), {1});
    EXPECT_EQ(r.lhs.str(), "0");
    EXPECT_EQ(r.relation, Relation::LessEq);
    EXPECT_EQ(r.verdict, Verdict::Holds);
    for (int t = 0; t < 20; ++t) {
        auto h = random_gram_hermitian(5, 3, rng);
        for (std::size_t m = 1; m < 5; ++m) EXPECT_FALSE(check_fischer(h, {m}).violated());
    }
}

TEST(HafPer, Examples) {
    EXPECT_EQ(check_haf_per(Matrix<Q>{{Q(1)}}).verdict, Verdict::Equality);
    // only the matching {1,3}{2,4} of the doubled identity is nonzero
    auto r = check_haf_per(Matrix<Q>::identity(2));
    EXPECT_EQ(r.lhs.str(), "1");
    EXPECT_EQ(r.verdict, Verdict::Equality);
    EXPECT_EQ(check_haf_per(Matrix<Q>::ones(2)).lhs.str(), "3");
    Rng rng(302);
    for (int t = 0; t < 20; ++t) EXPECT_FALSE(check_haf_per(random_gram_real(4, 3, rng)).violated());
    EXPECT_THROW(check_haf_per(random_rational_matrix(2, rng)), DomainError);
}

TEST(Lifts, HoldOnGramInstances) {
    Rng rng(303);
    for (int t = 0; t < 10; ++t) {
        auto g = random_gram_real(5, 3, rng);
        for (std::size_t m = 1; m < 5; ++m)
            for (const auto& r : check_lifts(g, {m})) EXPECT_FALSE(r.violated()) << r.str();
        for (const auto& r : check_haf_lifts(g)) EXPECT_FALSE(r.violated()) << r.str();
    }
}

TEST(LiebType, Examples) {
    Rng rng(304);
    auto d = block_diagonal(rng);
    for (Q alpha : {Q(0), Q(1), Q(2), Q(4), Q(9, 2)})
        EXPECT_EQ(check_lieb_type_split(d, {2}, alpha).verdict, Verdict::Equality);
    auto g = random_gram_real(5, 5, rng);
    for (const auto& r : check_lieb_type(g, {2}, Q(0))) EXPECT_EQ(r.verdict, Verdict::Equality) << r.str();
    for (std::size_t m = 1; m < 5; ++m) {
        auto results = check_lieb_type(g, {m}, Q(4));
        ASSERT_EQ(results.size(), 4u);
        for (const auto& r : results) {
            EXPECT_FALSE(r.violated()) << r.str();
            EXPECT_EQ(r.regime, Regime::Theorem);
        }
    }
}

TEST(LiebType, Regimes) {
    EXPECT_EQ(lieb_type_regime(Q(3), 5, false), Regime::Theorem);
    EXPECT_EQ(lieb_type_regime(Q(7, 2), 5, false), Regime::Conjecture);
    EXPECT_EQ(lieb_type_regime(Q(7, 2), 5, true), Regime::Ungated);
    EXPECT_EQ(lieb_type_regime(Q(1, 2), 5, false), Regime::Ungated);
    EXPECT_EQ(lieb_type_regime(Q(9, 2), 5, true), Regime::Theorem);
    EXPECT_EQ(marcus_regime(Q(3, 2), 5, false), Regime::Theorem);
    EXPECT_EQ(marcus_regime(Q(3, 2), 6, false), Regime::Conjecture);
    EXPECT_EQ(marcus_regime(Q(3, 2), 5, true), Regime::Conjecture);
}

TEST(Marcus, Examples) {
    Matrix<Q> d(4);
    d(0, 0) = 2;
    d(1, 1) = Q(1, 3);
    d(2, 2) = 5;
    d(3, 3) = 1;
    for (Q alpha : {Q(1), Q(3, 2), Q(3)})
        for (const auto& r : check_marcus(d, alpha)) EXPECT_EQ(r.verdict, Verdict::Equality) << r.str();
    auto r = check_marcus(Matrix<Q>::ones(2), Q(1));
    EXPECT_EQ(named(r, "marcus-upper").lhs.str(), "2");
    EXPECT_EQ(named(r, "marcus-upper").rhs.str(), "1");
    EXPECT_EQ(named(r, "marcus-lower").rhs.str(), "0");
    Rng rng(305);
    for (int t = 0; t < 20; ++t) {
        auto g = random_gram_hermitian(5, 5, rng);
        auto res = check_marcus(g, Q(3, 2));
        EXPECT_EQ(res.size(), 2u);
        for (const auto& c : res) EXPECT_FALSE(c.violated()) << c.str();
    }
}

TEST(Float, VerdictUsesTolerance) {
    Matrix<double> d{{2.0, 0.0}, {0.0, 3.0}};
    auto r = check_marcus(d, 1.5);
    for (const auto& c : r) {
        EXPECT_FALSE(c.exact);
        EXPECT_EQ(c.verdict, Verdict::Equality);
    }
}

TEST(PShape, Examples) {
    Rng rng(306);
    auto g = random_unit_gram_real(5, 5, 4, rng);
    EXPECT_EQ(p_shape(g, {1, 1, 1, 1, 1}, 1), 1);
    EXPECT_EQ(p_shape(g, {1, 1, 1, 1, 1}, -1), -1);
    EXPECT_EQ(p_shape(g, {5}, 1), permanent(g));
    EXPECT_EQ(p_shape(g, {5}, -1), -determinant(g));
    for (const auto& shape : integer_partitions(5)) {
        EXPECT_EQ(p_shape(Matrix<Q>::identity(5), shape, 1), 1);
        EXPECT_EQ(p_shape(Matrix<Q>::identity(5), shape, -1), -1);
    }
    EXPECT_THROW(p_shape(g, {3, 1}, 1), DomainError);
}

TEST(Majorization, Steps) {
    Rng rng(307);
    auto r = check_majorization_step(Matrix<Q>::identity(5), {2, 1, 1, 1}, {1, 1, 1, 1, 1}, 1);
    EXPECT_EQ(r.verdict, Verdict::Equality);
    for (int t = 0; t < 10; ++t) {
        auto g = random_gram_hermitian(5, 5, rng);
        EXPECT_FALSE(check_majorization_step(g, {5}, {3, 2}, 1).violated());
        for (const auto& mu : integer_partitions(5))
            for (const auto& lambda : merges_of(mu))
                for (int sign : {1, -1}) EXPECT_FALSE(check_majorization_step(g, lambda, mu, sign).violated());
        auto g4 = random_gram_real(4, 4, rng);
        for (const auto& mu : integer_partitions(4))
            for (const auto& lambda : merges_of(mu))
                for (int sign : {1, -1}) EXPECT_FALSE(check_majorization_step(g4, lambda, mu, sign).violated());
    }
    EXPECT_THROW(check_majorization_step(Matrix<Q>::identity(5), {3, 2}, {1, 1, 1, 1, 1}, 1), DomainError);
}

TEST(ComparisonResult, Formatting) {
    auto r = check_lieb(Matrix<Q>::ones(2), {1});
    EXPECT_EQ(r.str(), "lieb: 2 >= 1 slack=1 [holds, theorem, exact]");
}
