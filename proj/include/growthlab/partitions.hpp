#pragma once

// Brute-force set partition enumeration (restricted growth strings). Used as
// ground truth for the Bell-type counts and for the trivial-meet pair count.

#include "growthlab/numeric.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace growthlab {

/// A partition of {0..n-1} as a restricted growth string: block[0] = 0 and
/// block[i] <= 1 + max(block[0..i-1]).
using SetPartition = std::vector<std::uint8_t>;

template <class Fn>
void for_each_set_partition(std::size_t n, Fn&& fn) {
    SetPartition rgs(n, 0);
    if (n == 0) {
        fn(static_cast<const SetPartition&>(rgs));
        return;
    }
    std::vector<std::uint8_t> maxv(n, 0); // maxv[i] = max(rgs[0..i])
    for (;;) {
        fn(static_cast<const SetPartition&>(rgs));
        std::size_t i = n - 1;
        while (i > 0 && rgs[i] > maxv[i - 1]) --i;
        if (i == 0) return;
        ++rgs[i];
        maxv[i] = std::max(maxv[i - 1], rgs[i]);
        for (std::size_t j = i + 1; j < n; ++j) {
            rgs[j] = 0;
            maxv[j] = maxv[i];
        }
    }
}

inline std::vector<SetPartition> all_set_partitions(std::size_t n) {
    std::vector<SetPartition> out;
    for_each_set_partition(n, [&](const SetPartition& p) { out.push_back(p); });
    return out;
}

/// True iff every block of fine lies inside a block of coarse.
inline bool refines(const SetPartition& fine, const SetPartition& coarse) {
    for (std::size_t i = 0; i < fine.size(); ++i)
        for (std::size_t j = i + 1; j < fine.size(); ++j)
            if (fine[i] == fine[j] && coarse[i] != coarse[j]) return false;
    return true;
}

/// True iff the common refinement of p and q is the partition into singletons.
inline bool meet_is_discrete(const SetPartition& p, const SetPartition& q) {
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (p[i] == p[j] && q[i] == q[j]) return false;
    return true;
}

inline BigInt count_refinement_pairs(std::size_t n) {
    auto parts = all_set_partitions(n);
    std::uint64_t count = 0;
    for (const auto& p : parts)
        for (const auto& q : parts)
            if (refines(p, q)) ++count;
    return count;
}

/// Ordered pairs (P, Q) of partitions of [n] whose meet is discrete.
inline BigInt count_trivial_meet_pairs(std::size_t n) {
    auto parts = all_set_partitions(n);
    std::uint64_t count = 0;
    for (const auto& p : parts)
        for (const auto& q : parts)
            if (meet_is_discrete(p, q)) ++count;
    return count;
}

} // namespace growthlab
