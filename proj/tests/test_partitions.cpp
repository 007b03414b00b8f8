// Copyright 2026 The alphaperm Authors
// SPDX-License-Identifier: Apache-2.0

#include <alphaperm/partitions.hpp>

#include <gtest/gtest.h>

#include <set>

using namespace alphaperm;

TEST(Partitions, Examples) {
    EXPECT_EQ(enumerate_partitions(3).size(), 5u);
    EXPECT_EQ(enumerate_partitions(4, 2).size(), 7u);
    auto one = enumerate_partitions(1);
    ASSERT_EQ(one.size(), 1u);
    EXPECT_EQ(one[0].str(), "{1}");
    EXPECT_THROW(enumerate_partitions(3, 4), DomainError);
    EXPECT_THROW(enumerate_partitions(3, 0), DomainError);
}

TEST(Partitions, OrderAndUniqueness) {
    auto all = enumerate_partitions(3);
    std::vector<std::string> names;
    for (const auto& p : all) names.push_back(p.str());
    EXPECT_EQ(names, (std::vector<std::string>{"{1,2,3}", "{1,2}{3}", "{1,3}{2}", "{1}{2,3}", "{1}{2}{3}"}));
    std::set<std::vector<std::uint8_t>> seen;
    for (const auto& p : enumerate_partitions(7)) EXPECT_TRUE(seen.insert(p.rgs()).second);
}

TEST(Partitions, CountsMatchRecurrences) {
    // Bell(n+1) = sum_k C(n,k) Bell(k); S(n,k) = k S(n-1,k) + S(n-1,k-1)
    std::vector<mpz_class> bell{1};
    for (std::size_t n = 0; n < 10; ++n) {
        mpz_class next = 0, binom = 1;
        for (std::size_t k = 0; k <= n; ++k) {
            next += binom * bell[k];
            binom = binom * (n - k) / (k + 1);
        }
        bell.push_back(next);
    }
    for (std::size_t n = 1; n <= 10; ++n) {
        EXPECT_EQ(bell_number(n), bell[n]);
        EXPECT_EQ(mpz_class(enumerate_partitions(n).size()), bell[n]);
        for (std::size_t k = 1; k <= n; ++k) {
            EXPECT_EQ(stirling2(n, k), k * stirling2(n - 1, k) + stirling2(n - 1, k - 1));
            std::size_t count = 0;
            for_each_partition(n, k, [&](const SetPartition& p) {
                EXPECT_EQ(p.block_count(), k);
                ++count;
            });
            EXPECT_EQ(mpz_class(count), stirling2(n, k)) << "n=" << n << " k=" << k;
        }
    }
}

TEST(Partitions, BlocksCoverEverythingOnce) {
    for (const auto& p : enumerate_partitions(6)) {
        std::uint64_t seen = 0;
        for (auto m : p.block_masks()) {
            EXPECT_NE(m, 0u);
            EXPECT_EQ(seen & m, 0u);
            seen |= m;
        }
        EXPECT_EQ(seen, 0b111111u);
    }
}

TEST(Partitions, RejectsBadRgs) {
    EXPECT_THROW(SetPartition({1, 0}), DomainError);
    EXPECT_THROW(SetPartition({0, 2}), DomainError);
}

TEST(ShapePartitions, ProofCoefficients) {
    EXPECT_EQ(enumerate_shape_partitions(5, {2, 1, 1, 1}).size(), 10u);
    EXPECT_EQ(enumerate_shape_partitions(5, {3, 2}).size(), 10u);
    EXPECT_EQ(enumerate_shape_partitions(5, {4, 1}).size(), 5u);
    EXPECT_EQ(enumerate_shape_partitions(5, {3, 1, 1}).size(), 10u);
    EXPECT_EQ(enumerate_shape_partitions(5, {2, 2, 1}).size(), 15u);
    EXPECT_EQ(enumerate_shape_partitions(5, {5}).size(), 1u);
    EXPECT_THROW(enumerate_shape_partitions(5, {3, 1}), DomainError);
}

TEST(ShapePartitions, CountFormula) {
    for (std::size_t n = 1; n <= 8; ++n) {
        mpz_class total = 0;
        for (const auto& shape : integer_partitions(n)) {
            EXPECT_EQ(mpz_class(enumerate_shape_partitions(n, shape).size()), shape_partition_count(n, shape));
            total += shape_partition_count(n, shape);
        }
        EXPECT_EQ(total, bell_number(n));
    }
}

TEST(Shapes, IntegerPartitionsAndMerges) {
    EXPECT_EQ(integer_partitions(5).size(), 7u);
    EXPECT_EQ(integer_partitions(5).front(), (Shape{5}));
    EXPECT_EQ(merges_of({2, 1, 1, 1}), (std::vector<Shape>{{3, 1, 1}, {2, 2, 1}}));
    EXPECT_TRUE(is_merge_of({2, 1, 1, 1}, {1, 1, 1, 1, 1}));
    EXPECT_FALSE(is_merge_of({3, 2}, {1, 1, 1, 1, 1}));
    EXPECT_EQ(shape_str({3, 1, 1}), "(3,1,1)");
}
