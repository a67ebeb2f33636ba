#include <gtest/gtest.h>

#include "rbell/rbell.hpp"
#include "rbell/verify.hpp"

using namespace rbell;

TEST(RBellPoly, Examples) {
    EXPECT_EQ(rbell_poly(2, 2).poly, (IntPolynomial{4, 5, 1}));
    for (unsigned long r = 0; r <= 5; ++r) {
        EXPECT_EQ(rbell_poly(0, r).poly, IntPolynomial{1});
        EXPECT_EQ(rbell_poly(1, r).poly, (IntPolynomial{ExactInt(r), 1}));
    }
}

TEST(RBellPoly, PublishedClosedForms) {
    for (unsigned long r = 0; r <= 6; ++r)
        for (unsigned long n = 0; n <= 4; ++n) EXPECT_EQ(rbell_poly(n, r).poly, verify::published_rbell_poly(n, r));
}

TEST(RBellPoly, DerivativeRecurrence) {
    EXPECT_EQ(rbell_poly_rec(2, 2).poly, (IntPolynomial{4, 5, 1}));
    EXPECT_EQ(rbell_poly_rec(1, 7).poly, (IntPolynomial{7, 1}));
    EXPECT_EQ(rbell_poly_rec(3, 1).poly, (IntPolynomial{1, 7, 6, 1}));
}

TEST(RBellPoly, Invariants) {
    for (unsigned long r = 0; r <= 8; ++r)
        for (unsigned long n = 0; n <= 12; ++n) {
            const RBellPoly b = rbell_poly(n, r);
            EXPECT_EQ(b.poly.leading(), 1);
            EXPECT_EQ(b.poly.degree(), static_cast<long>(n));
            EXPECT_EQ(b.poly.coeff(0), pow_int(ExactInt(r), n));
            for (unsigned long k = 1; k <= n; ++k) EXPECT_GT(b.poly.coeff(k), 0);
        }
}

TEST(RBellPoly, AllRoutesAgree) {
    for (unsigned long r = 0; r <= 8; ++r)
        for (unsigned long n = 0; n <= 12; ++n) {
            const IntPolynomial base = rbell_poly(n, r).poly;
            EXPECT_EQ(rbell_poly_rec(n, r).poly, base);
            EXPECT_EQ(rbell_from_bell(n, r), base);
            if (r >= 1) {
                EXPECT_EQ(cross_r_step(n, r), base);
            }
        }
}

TEST(RBellPoly, DerivativeRelationTimesX) {
    for (unsigned long r = 0; r <= 8; ++r)
        for (unsigned long n = 0; n <= 12; ++n) {
            const IntPolynomial b = rbell_poly(n, r).poly;
            EXPECT_EQ(b.derivative().shifted_up(1), rbell_poly(n + 1, r).poly - b * ExactInt(r) - b.shifted_up(1));
        }
}

TEST(RBellNumber, Examples) {
    EXPECT_EQ(rbell_number(2, 2), 10);
    EXPECT_EQ(rbell_number(6, 6), 163967);
    EXPECT_EQ(rbell_number(5, 0), 52);
}

TEST(RBellNumber, BellShift) {
    for (unsigned long n = 0; n <= 12; ++n) EXPECT_EQ(rbell_number(n, 1), rbell_number(n + 1, 0));
}

TEST(BellPoly, Examples) {
    EXPECT_EQ(bell_poly(0), IntPolynomial{1});
    EXPECT_EQ(bell_poly(2), (IntPolynomial{0, 1, 1}));
    EXPECT_EQ(bell_poly(3), (IntPolynomial{0, 1, 3, 1}));
}

TEST(BellPoly, AdditionFormulaAtRationalPoints) {
    const ExactRational pts[] = {ExactRational(1, 2), ExactRational(1), ExactRational(2)};
    for (unsigned long n = 0; n <= 10; ++n)
        for (const auto& x : pts)
            for (const auto& y : pts) {
                ExactRational rhs = 0;
                for (unsigned long k = 0; k <= n; ++k)
                    rhs += ExactRational(binomial(n, k)) * bell_poly(k).evaluate(x) * bell_poly(n - k).evaluate(y);
                EXPECT_EQ(bell_poly(n).evaluate(ExactRational(x + y)), rhs);
            }
}

TEST(RBellFromBell, Examples) {
    EXPECT_EQ(rbell_from_bell(2, 2), (IntPolynomial{4, 5, 1}));
    for (unsigned long n = 0; n <= 6; ++n) EXPECT_EQ(rbell_from_bell(n, 0), bell_poly(n));
    EXPECT_EQ(rbell_from_bell(1, 5), (IntPolynomial{5, 1}));
}

TEST(Carlitz, ComposeExamples) {
    EXPECT_EQ(carlitz_compose(1, 1, 2), 10);
    for (unsigned long n = 0; n <= 5; ++n) EXPECT_EQ(carlitz_compose(n, 0, 3), rbell_number(n, 3));
    EXPECT_EQ(carlitz_compose(0, 2, 2), 10);
}

TEST(Carlitz, InverseExamples) {
    EXPECT_EQ(carlitz_inverse(1, 1, 2), 4);
    EXPECT_EQ(carlitz_inverse(1, 2, 2), 5);
    for (unsigned long n = 0; n <= 5; ++n) EXPECT_EQ(carlitz_inverse(n, 0, 3), rbell_number(n, 3));
}

TEST(Carlitz, IdentitiesAndRoundTrip) {
    for (unsigned long r = 0; r <= 6; ++r)
        for (unsigned long n = 0; n <= 10; ++n)
            for (unsigned long m = 0; n + m <= 10; ++m) {
                EXPECT_EQ(carlitz_compose(n, m, r), rbell_number(n + m, r));
                EXPECT_EQ(carlitz_inverse(n, m, r), rbell_number(n, r + m));
                // Arbitrary column through compose and back through inverse.
                std::vector<ExactInt> column(m + 1);
                for (unsigned long j = 0; j <= m; ++j) column[j] = ExactInt(static_cast<long>(3 * j * j) - 7 + static_cast<long>(n));
                std::vector<ExactInt> row(m + 1);
                for (unsigned long j = 0; j <= m; ++j)
                    row[j] = carlitz_compose_from(std::vector<ExactInt>(column.begin(), column.begin() + static_cast<long>(j) + 1), r);
                EXPECT_EQ(carlitz_inverse_from(row, r), column[m]);
            }
}

TEST(CrossR, CorrectedFormExamples) {
    EXPECT_EQ(cross_r_step(2, 2), (IntPolynomial{4, 5, 1}));
    for (unsigned long r = 1; r <= 6; ++r) {
        EXPECT_EQ(cross_r_step(1, r), (IntPolynomial{ExactInt(r), 1}));
        EXPECT_EQ(cross_r_step(0, r), IntPolynomial{1});
    }
    EXPECT_THROW(cross_r_step(2, 0), DomainError);
}

TEST(CrossR, PrintedFormContradictsTable) {
    const IntPolynomial printed = cross_r_step_printed(2, 2);
    EXPECT_EQ(printed.evaluate(ExactInt(1)), 3);
    EXPECT_NE(printed, rbell_poly(2, 2).poly);
}

TEST(Whitehead, StepExamples) {
    EXPECT_EQ(whitehead_step(2, 2), 37);
    for (unsigned long r = 0; r <= 6; ++r) EXPECT_EQ(whitehead_step(0, r), r + 1);
    EXPECT_EQ(whitehead_step(5, 0), 203);
    for (unsigned long r = 0; r <= 8; ++r)
        for (unsigned long n = 1; n <= 12; ++n) EXPECT_EQ(whitehead_step(n, r), rbell_number(n + 1, r));
}

TEST(Whitehead, RowSums) {
    EXPECT_EQ(whitehead_row_sum(1), 1);
    EXPECT_EQ(whitehead_row_sum(2), 4);
    EXPECT_EQ(whitehead_row_sum(3), 13);
    EXPECT_THROW(whitehead_row_sum(0), DomainError);
}

TEST(Table, MatchesPublishedTable) {
    const auto table = rbell_table(6, 6);
    const auto& published = verify::published_rbell_table();
    for (unsigned long r = 0; r <= 6; ++r)
        for (unsigned long n = 0; n <= 6; ++n) EXPECT_EQ(table[r][n], published[r][n]);
    for (unsigned long n = 0; n < 6; ++n) EXPECT_EQ(table[1][n], table[0][n + 1]);
}
