#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "rbell/oracle.hpp"
#include "rbell/rbell.hpp"

using namespace rbell;

TEST(Oracle, Examples) {
    const PartitionCounts a = enumerate_restricted_partitions(2, 2);
    EXPECT_EQ(a.by_blocks, (std::map<unsigned long, ExactInt>{{2, 4}, {3, 5}, {4, 1}}));
    EXPECT_EQ(a.total, 10);
    EXPECT_EQ(enumerate_restricted_partitions(0, 5).total, 1);
    const PartitionCounts c = enumerate_restricted_partitions(3, 0);
    EXPECT_EQ(c.by_blocks, (std::map<unsigned long, ExactInt>{{1, 1}, {2, 3}, {3, 1}}));
    EXPECT_EQ(c.total, 5);
}

TEST(Oracle, EmptySet) {
    const PartitionCounts e = enumerate_restricted_partitions(0, 0);
    EXPECT_EQ(e.total, 1);
    EXPECT_EQ(e.by_blocks.at(0), 1);
}

TEST(Oracle, Guard) {
    EXPECT_THROW(enumerate_restricted_partitions(10, 4), DomainError);
    EXPECT_THROW(enumerate_partitions_separating(14, {}), DomainError);
    EXPECT_THROW(enumerate_partitions_separating(4, {4}), DomainError);
}

TEST(Oracle, MatchesStirlingAndRBell) {
    for (unsigned long r = 0; r <= 12; ++r)
        for (unsigned long n = 0; n + r <= 12; ++n) {
            const PartitionCounts counts = enumerate_restricted_partitions(n, r);
            EXPECT_EQ(counts.total, rbell_number(n, r));
            ExactInt sum = 0;
            for (const auto& [k, v] : counts.by_blocks) {
                EXPECT_EQ(v, stirling2r(n + r, k, r));
                sum += v;
            }
            EXPECT_EQ(sum, counts.total);
        }
}

TEST(Oracle, LabelIndependence) {
    std::mt19937 rng(99);
    for (unsigned long total = 1; total <= 8; ++total)
        for (unsigned long r = 0; r <= total; ++r)
            for (int rep = 0; rep < 2; ++rep) {
                std::vector<std::size_t> labels(total);
                for (std::size_t i = 0; i < total; ++i) labels[i] = i;
                std::shuffle(labels.begin(), labels.end(), rng);
                const std::vector<std::size_t> sep(labels.begin(), labels.begin() + static_cast<long>(r));
                const PartitionCounts a = enumerate_partitions_separating(total, sep);
                const PartitionCounts b = enumerate_restricted_partitions(total - r, r);
                EXPECT_EQ(a.by_blocks, b.by_blocks);
                EXPECT_EQ(a.total, b.total);
            }
}

TEST(Oracle, MoreAnchorsNeverFewerPartitions) {
    for (unsigned long r = 0; r < 12; ++r)
        for (unsigned long n = 0; n + r + 1 <= 12; ++n)
            EXPECT_GE(enumerate_restricted_partitions(n, r + 1).total, enumerate_restricted_partitions(n, r).total);
}
