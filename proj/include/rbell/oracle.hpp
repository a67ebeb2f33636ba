#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "rbell/errors.hpp"
#include "rbell/exact.hpp"

namespace rbell {

/// Restricted partitions of an (n + r)-set histogrammed by block count.
struct PartitionCounts {
    unsigned long n = 0;
    unsigned long r = 0;
    std::map<unsigned long, ExactInt> by_blocks;
    ExactInt total = 0;
};

inline constexpr unsigned long kOracleMaxElements = 13;

namespace detail {

/// Restricted growth strings: each free element joins one of the blocks
/// 0..used-1 or opens block `used`. Every partition is visited as one leaf.
inline void count_rgs(unsigned long remaining, unsigned long used, std::vector<std::uint64_t>& hist) {
    if (remaining == 0) {
        ++hist[used];
        return;
    }
    for (unsigned long b = 0; b <= used; ++b) count_rgs(remaining - 1, b == used ? used + 1 : used, hist);
}

inline void walk_rgs(std::vector<unsigned long>& labels, std::size_t position, unsigned long used,
                     const std::vector<std::size_t>& separated, std::vector<std::uint64_t>& hist) {
    if (position == labels.size()) {
        // Accept only if the separated elements sit in pairwise distinct blocks.
        std::uint64_t seen = 0;
        for (std::size_t e : separated) {
            const std::uint64_t bit = std::uint64_t{1} << labels[e];
            if (seen & bit) return;
            seen |= bit;
        }
        ++hist[used];
        return;
    }
    for (unsigned long b = 0; b <= used; ++b) {
        labels[position] = b;
        walk_rgs(labels, position + 1, b == used ? used + 1 : used, separated, hist);
    }
}

inline PartitionCounts to_counts(unsigned long n, unsigned long r, const std::vector<std::uint64_t>& hist) {
    PartitionCounts out;
    out.n = n;
    out.r = r;
    for (std::size_t k = 0; k < hist.size(); ++k) {
        if (hist[k] == 0) continue;
        const ExactInt v(static_cast<unsigned long>(hist[k]));
        out.by_blocks[static_cast<unsigned long>(k)] = v;
        out.total += v;
    }
    return out;
}

inline void check_guard(unsigned long elements) {
    if (elements > kOracleMaxElements)
        throw DomainError("oracle: n + r = " + std::to_string(elements) + " exceeds the enumeration guard of " +
                          std::to_string(kOracleMaxElements));
}

}  // namespace detail

/// Partitions of {1..n+r} with 1..r in distinct blocks, by total block count.
/// Elements 1..r are pinned to blocks 0..r-1; the free elements then follow
/// the restricted-growth rule.
inline PartitionCounts enumerate_restricted_partitions(unsigned long n, unsigned long r) {
    detail::check_guard(n + r);
    std::vector<std::uint64_t> hist(n + r + 1);
    detail::count_rgs(n, r, hist);
    return detail::to_counts(n, r, hist);
}

/// Brute force over every partition of an `elements`-set, keeping those that
/// put the listed elements (0-based) in distinct blocks. Slower than the
/// pinned enumeration; used to check label independence.
inline PartitionCounts enumerate_partitions_separating(unsigned long elements,
                                                       const std::vector<std::size_t>& separated) {
    detail::check_guard(elements);
    for (std::size_t e : separated)
        if (e >= elements) throw DomainError("oracle: separated element out of range");
    std::vector<std::uint64_t> hist(elements + 1);
    std::vector<unsigned long> labels(elements);
    if (elements == 0) hist[0] = 1;
    else detail::walk_rgs(labels, 0, 0, separated, hist);
    const unsigned long r = static_cast<unsigned long>(separated.size());
    return detail::to_counts(elements >= r ? elements - r : 0, r, hist);
}

}  // namespace rbell
