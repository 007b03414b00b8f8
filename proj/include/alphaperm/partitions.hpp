// Copyright 2026 The alphaperm Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file partitions.hpp
 * @brief Set partitions of [n] as restricted growth strings.
 *
 * A partition is encoded by rgs[0..n-1] with rgs[0] = 0 and
 * rgs[i] <= 1 + max(rgs[0..i-1]); element i lies in block rgs[i]. Generators
 * visit partitions in lexicographic rgs order, each unordered partition once.
 */

#pragma once

#include <alphaperm/matrix.hpp>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace alphaperm {

/// Block sizes sorted in non-increasing order, e.g. {3, 1, 1}.
using Shape = std::vector<std::size_t>;

class SetPartition {
public:
    SetPartition() = default;
    explicit SetPartition(std::vector<std::uint8_t> rgs) : rgs_(std::move(rgs)) {
        std::uint8_t top = 0;
        for (std::size_t i = 0; i < rgs_.size(); ++i) {
            if ((i == 0 && rgs_[i] != 0) || (i > 0 && rgs_[i] > top + 1))
                throw DomainError("not a restricted growth string");
            top = std::max(top, rgs_[i]);
        }
        const std::size_t k = rgs_.empty() ? 0 : std::size_t{top} + 1;
        masks_.assign(k, 0);
        for (std::size_t i = 0; i < rgs_.size(); ++i) masks_[rgs_[i]] |= std::uint64_t{1} << i;
    }

    std::size_t size() const { return rgs_.size(); }
    std::size_t block_count() const { return masks_.size(); }
    const std::vector<std::uint8_t>& rgs() const { return rgs_; }

    /// Block masks in order of first appearance (block j holds the elements labelled j).
    const std::vector<std::uint64_t>& block_masks() const { return masks_; }

    std::vector<IndexSet> blocks() const {
        std::vector<IndexSet> out;
        out.reserve(masks_.size());
        for (auto m : masks_) out.emplace_back(m, rgs_.size());
        return out;
    }

    Shape shape() const {
        Shape s;
        s.reserve(masks_.size());
        for (auto m : masks_) s.push_back(static_cast<std::size_t>(std::popcount(m)));
        std::sort(s.begin(), s.end(), std::greater<>());
        return s;
    }

    /// "{1,3}{2}" with 1-based indices.
    std::string str() const {
        std::string out;
        for (auto m : masks_) {
            out += '{';
            bool first = true;
            for (std::uint64_t b = m; b != 0; b &= b - 1) {
                if (!first) out += ',';
                out += std::to_string(std::countr_zero(b) + 1);
                first = false;
            }
            out += '}';
        }
        return out;
    }

private:
    std::vector<std::uint8_t> rgs_;
    std::vector<std::uint64_t> masks_;
};

/// Stream of the set partitions of [n] (optionally with exactly k blocks).
class PartitionGenerator {
public:
    PartitionGenerator(std::size_t n, std::optional<std::size_t> k = std::nullopt) : n_(n), k_(k) {
        if (n < 1 || n > kMaxIndexBits) throw DomainError("partition size must be in [1, 64]");
        if (k && (*k < 1 || *k > n))
            throw DomainError("block count " + std::to_string(*k) + " outside [1, " + std::to_string(n) + "]");
    }

    /// Advance to the next partition; false when exhausted.
    bool next(SetPartition& out) {
        while (advance()) {
            if (!k_ || block_count() == *k_) {
                out = SetPartition(rgs_);
                return true;
            }
        }
        return false;
    }

private:
    std::size_t block_count() const { return std::size_t{prefix_max_.back()} + 1; }

    bool advance() {
        if (!started_) {
            started_ = true;
            rgs_.assign(n_, 0);
            prefix_max_.assign(n_, 0);
            if (k_) fill_tail_for_k(1);
            return true;
        }
        // rightmost position that can still grow
        for (std::size_t i = n_; i-- > 1;) {
            if (rgs_[i] <= prefix_max_[i - 1]) {
                ++rgs_[i];
                prefix_max_[i] = std::max(prefix_max_[i - 1], rgs_[i]);
                for (std::size_t j = i + 1; j < n_; ++j) {
                    rgs_[j] = 0;
                    prefix_max_[j] = prefix_max_[j - 1];
                }
                if (k_) {
                    // prune: not enough positions left to reach k blocks
                    const std::size_t have = std::size_t{prefix_max_[i]} + 1;
                    if (have > *k_) continue;
                    if (have + (n_ - 1 - i) < *k_) continue;
                    fill_tail_for_k(i + 1);
                }
                return true;
            }
        }
        return false;
    }

    /// Smallest completion from position `from` that reaches exactly k blocks.
    void fill_tail_for_k(std::size_t from) {
        std::size_t have = (from == 0 ? std::size_t{0} : std::size_t{prefix_max_[from - 1]}) + 1;
        const std::size_t need = *k_ > have ? *k_ - have : 0;
        const std::size_t first_new = n_ - need;
        for (std::size_t j = from; j < n_; ++j) {
            rgs_[j] = j < first_new ? 0 : static_cast<std::uint8_t>(have + (j - first_new));
            prefix_max_[j] = j == 0 ? rgs_[0] : std::max<std::uint8_t>(prefix_max_[j - 1], rgs_[j]);
        }
    }

    std::size_t n_;
    std::optional<std::size_t> k_;
    bool started_ = false;
    std::vector<std::uint8_t> rgs_;
    std::vector<std::uint8_t> prefix_max_;
};

/// Calls fn(partition) for each set partition of [n] (with exactly k blocks if given).
template <class Fn>
void for_each_partition(std::size_t n, std::optional<std::size_t> k, Fn&& fn) {
    PartitionGenerator gen(n, k);
    SetPartition p;
    while (gen.next(p)) fn(p);
}

inline std::vector<SetPartition> enumerate_partitions(std::size_t n, std::optional<std::size_t> k = std::nullopt) {
    std::vector<SetPartition> out;
    for_each_partition(n, k, [&](const SetPartition& p) { out.push_back(p); });
    return out;
}

inline void validate_shape(std::size_t n, const Shape& shape) {
    if (shape.empty()) throw DomainError("empty shape");
    if (!std::is_sorted(shape.begin(), shape.end(), std::greater<>()))
        throw DomainError("shape must be sorted in non-increasing order");
    if (shape.back() < 1) throw DomainError("shape parts must be positive");
    if (std::accumulate(shape.begin(), shape.end(), std::size_t{0}) != n)
        throw DomainError("shape does not sum to " + std::to_string(n));
}

/// Every unordered partition of [n] whose multiset of block sizes is `shape`.
template <class Fn>
void for_each_shape_partition(std::size_t n, const Shape& shape, Fn&& fn) {
    validate_shape(n, shape);
    for_each_partition(n, shape.size(), [&](const SetPartition& p) {
        if (p.shape() == shape) fn(p);
    });
}

inline std::vector<SetPartition> enumerate_shape_partitions(std::size_t n, const Shape& shape) {
    std::vector<SetPartition> out;
    for_each_shape_partition(n, shape, [&](const SetPartition& p) { out.push_back(p); });
    return out;
}

/// All shapes (integer partitions) of n in reverse lexicographic order: (n), (n-1,1), ...
inline std::vector<Shape> integer_partitions(std::size_t n) {
    std::vector<Shape> out;
    Shape cur;
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t left, std::size_t max_part) {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (std::size_t p = std::min(left, max_part); p >= 1; --p) {
            cur.push_back(p);
            rec(left - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

/// Shapes obtained from mu by replacing two of its parts with their sum (deduplicated).
inline std::vector<Shape> merges_of(const Shape& mu) {
    std::vector<Shape> out;
    for (std::size_t i = 0; i < mu.size(); ++i)
        for (std::size_t j = i + 1; j < mu.size(); ++j) {
            Shape s;
            for (std::size_t t = 0; t < mu.size(); ++t)
                if (t != i && t != j) s.push_back(mu[t]);
            s.push_back(mu[i] + mu[j]);
            std::sort(s.begin(), s.end(), std::greater<>());
            if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
        }
    return out;
}

inline bool is_merge_of(const Shape& lambda, const Shape& mu) {
    auto m = merges_of(mu);
    return std::find(m.begin(), m.end(), lambda) != m.end();
}

// ---------------------------------------------------------------------------
// Counts
// ---------------------------------------------------------------------------

/// Stirling numbers of the second kind S(n, k).
inline mpz_class stirling2(std::size_t n, std::size_t k) {
    std::vector<mpz_class> row(k + 1, mpz_class(0));
    row[0] = 1;
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = std::min(i, k); j >= 1; --j) row[j] = j * row[j] + row[j - 1];
        row[0] = 0;
    }
    return row[k];
}

inline mpz_class bell_number(std::size_t n) {
    mpz_class total = 0;
    for (std::size_t k = 0; k <= n; ++k) total += stirling2(n, k);
    return total;
}

/// n! / (prod_j lambda_j! * prod_s m_s!), m_s the multiplicity of part size s.
inline mpz_class shape_partition_count(std::size_t n, const Shape& shape) {
    validate_shape(n, shape);
    mpz_class num, den = 1, f;
    mpz_fac_ui(num.get_mpz_t(), n);
    for (std::size_t part : shape) {
        mpz_fac_ui(f.get_mpz_t(), part);
        den *= f;
    }
    for (std::size_t i = 0; i < shape.size();) {
        std::size_t j = i;
        while (j < shape.size() && shape[j] == shape[i]) ++j;
        mpz_fac_ui(f.get_mpz_t(), j - i);
        den *= f;
        i = j;
    }
    return num / den;
}

inline std::string shape_str(const Shape& s) {
    std::string out = "(";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
    return out + ")";
}

}  // namespace alphaperm
