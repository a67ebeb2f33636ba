#include <gtest/gtest.h>

#include <random>

#include "rbell/transforms.hpp"

using namespace rbell;

namespace {
IntSequence ints(std::initializer_list<long> v) {
    IntSequence out;
    for (long x : v) out.emplace_back(x);
    return out;
}
}  // namespace

TEST(BinomialTransform, Examples) {
    EXPECT_EQ(inverse_binomial_transform(ints({1, 3, 10, 37})), ints({1, 4, 17, 77}));
    EXPECT_EQ(inverse_binomial_transform(ints({1, 0, 0, 0})), ints({1, 1, 1, 1}));
    EXPECT_EQ(binomial_transform(ints({1, 4, 17, 77})), ints({1, 3, 10, 37}));
}

TEST(BinomialTransform, MutualInverses) {
    std::mt19937 rng(13);
    std::uniform_int_distribution<long> v(-1000, 1000);
    for (int trial = 0; trial < 30; ++trial) {
        IntSequence a(static_cast<std::size_t>(trial % 12));
        for (auto& x : a) x = v(rng);
        EXPECT_EQ(binomial_transform(inverse_binomial_transform(a)), a);
        EXPECT_EQ(inverse_binomial_transform(binomial_transform(a)), a);
    }
}

TEST(BinomialTransform, RBellPolynomialRelations) {
    for (unsigned long r = 0; r <= 6; ++r) {
        const PolySequence base = rbell_poly_sequence(11, r);
        const PolySequence next = rbell_poly_sequence(11, r + 1);
        EXPECT_EQ(inverse_binomial_transform(base), next);
        EXPECT_EQ(binomial_transform(next), base);
    }
}

TEST(HankelDet, Examples) {
    EXPECT_EQ(hankel_det(ints({1, 3, 10}), 2), 1);
    EXPECT_EQ(hankel_det(ints({42}), 1), 42);
    EXPECT_EQ(hankel_det(ints({1, 3, 10, 37, 151}), 3), 2);
    EXPECT_EQ(hankel_det(ints({5, 1, 3, 10}), 2, 1), 1);
}

TEST(HankelDet, InsufficientTerms) {
    EXPECT_THROW(hankel_det(ints({1, 3}), 2), DomainError);
    EXPECT_THROW(hankel_det(ints({1, 3, 10}), 2, 1), DomainError);
    EXPECT_THROW(hankel_det(ints({1}), 0), DomainError);
}

TEST(HankelTransform, RBellIsSuperfactorial) {
    EXPECT_EQ(hankel_transform_rbell(2, 2), ints({1, 1, 2}));
    EXPECT_EQ(hankel_transform_rbell(0, 3), ints({1, 1, 2, 12}));
    for (unsigned long r = 0; r <= 6; ++r) {
        EXPECT_EQ(hankel_transform_rbell(r, 0), ints({1}));
        const IntSequence h = hankel_transform_rbell(r, 5);
        for (unsigned long n = 0; n <= 5; ++n) EXPECT_EQ(h[n], superfactorial(n));
    }
}

TEST(HankelTransform, LaymanInvariance) {
    for (unsigned long r = 0; r <= 5; ++r) {
        const IntSequence a = rbell_sequence(11, r);
        const IntSequence b = rbell_sequence(11, r + 1);
        for (std::size_t size = 1; size <= 5; ++size) EXPECT_EQ(hankel_det(a, size), hankel_det(b, size));
    }
    // Holds for arbitrary integer sequences too.
    std::mt19937 rng(17);
    std::uniform_int_distribution<long> v(-9, 9);
    for (int trial = 0; trial < 20; ++trial) {
        IntSequence a(9);
        for (auto& x : a) x = v(rng);
        for (std::size_t size = 1; size <= 5; ++size) EXPECT_EQ(hankel_det(a, size), hankel_det(binomial_transform(a), size));
    }
}

TEST(LogConvexity, Examples) {
    EXPECT_TRUE(log_convexity_check(ints({1, 3, 10, 37})));
    EXPECT_TRUE(log_convexity_check(ints({1, 1, 1})));
    EXPECT_FALSE(log_convexity_check(ints({1, 3, 8})));
    EXPECT_THROW(log_convexity_check(ints({1, 2})), DomainError);
    for (unsigned long r = 0; r <= 8; ++r) EXPECT_TRUE(log_convexity_check(rbell_sequence(13, r)));
}

TEST(Cigler, Examples) {
    const CiglerPair a = cigler_d(2, 0, 2);
    EXPECT_EQ(a.computed, IntPolynomial::x());
    EXPECT_EQ(a.expected, IntPolynomial::x());
    const CiglerPair b = cigler_d(2, 1, 0);
    EXPECT_EQ(b.computed, IntPolynomial::monomial(1, 3));
    EXPECT_EQ(b.expected, IntPolynomial::monomial(1, 3));
    for (unsigned long r = 0; r <= 4; ++r) {
        const CiglerPair c = cigler_d(1, 1, r);
        EXPECT_EQ(c.computed, (IntPolynomial{ExactInt(r), 1}));
        EXPECT_EQ(c.expected, c.computed);
    }
    EXPECT_THROW(cigler_d(2, 2, 0), DomainError);
    EXPECT_THROW(cigler_d(0, 0, 0), DomainError);
}

TEST(Cigler, ClosedFormsHold) {
    for (unsigned long r = 0; r <= 4; ++r)
        for (unsigned long n = 1; n <= 5; ++n)
            for (unsigned long k = 0; k <= 1; ++k) {
                const CiglerPair p = cigler_d(n, k, r);
                EXPECT_EQ(p.computed, p.expected) << n << "," << k << "," << r;
            }
}
