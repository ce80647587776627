#include <gtest/gtest.h>

#include "support.hpp"

using namespace resint;
using namespace resint::testing;

TEST(ShiftedDiagHilbert, Examples) {
    EXPECT_EQ(shifted_diag_hilbert(0, 0, {3, 2}, 3, 5).at(0), 1);
    EXPECT_EQ(shifted_diag_hilbert(2, 4, {1, 1}, 3, 5).at(2), 0);
    EXPECT_EQ(shifted_diag_hilbert(1, 1, {1, 1}, 3, 5).at(1), 1);
    EXPECT_EQ(shifted_diag_hilbert(0, 0, {1, 1}, 3, 5).krull_dim(), 7);
}

TEST(ShiftedDiagIsCm, Examples) {
    EXPECT_TRUE(shifted_diag_is_cm(2, 4, {5, 1}, 3, 5));
    for (int c = 1; c <= 4; ++c)
        for (int e = 1; e <= 4; ++e) EXPECT_FALSE(shifted_diag_is_cm(3, 0, {c, e}, 3, 5));
    EXPECT_TRUE(shifted_diag_is_cm(0, 0, {1, 1}, 3, 5));
    EXPECT_THROW(DiagonalSpec(0, 1), HypothesisError);
}

TEST(ShiftedDiagReg, ExamplesAndMonotonicity) {
    EXPECT_EQ(shifted_diag_reg(0, 0, {1, 1}), 0);
    EXPECT_EQ(shifted_diag_reg(2, 4, {1, 2}), 2);
    EXPECT_EQ(shifted_diag_reg(5, 0, {2, 1}), 3);
    for (int a = 0; a <= 6; ++a)
        for (int b = 0; b <= 6; ++b)
            for (int c = 1; c <= 4; ++c)
                for (int e = 1; e <= 4; ++e) {
                    const auto r = shifted_diag_reg(a, b, {c, e});
                    EXPECT_LE(r, shifted_diag_reg(a + 1, b, {c, e}));
                    EXPECT_LE(r, shifted_diag_reg(a, b + 1, {c, e}));
                    EXPECT_GE(r, shifted_diag_reg(a, b, {c + 1, e}));
                    EXPECT_GE(r, shifted_diag_reg(a, b, {c, e + 1}));
                }
}

TEST(ShiftedDiagIsCm, SmallShiftsGridProperty) {
    for (int n = 1; n <= 8; ++n)
        for (int p = 1; p <= 8; ++p)
            for (int c = 1; c <= 6; ++c)
                for (int e = 1; e <= 6; ++e)
                    for (int a = 0; a < n; ++a)
                        for (int b = 0; b < p; ++b) ASSERT_TRUE(shifted_diag_is_cm(a, b, {c, e}, n, p));
}

TEST(DepthLowerBound, Examples) {
    EXPECT_EQ(depth_lower_bound(bkm_shifts(3, 4), {1, 1}, 5).bound, 3);
    EXPECT_EQ(depth_lower_bound(bkm_shifts(2, 2), {2, 3}, 4).bound, 3);
    const auto bad = depth_lower_bound(bkm_shifts(3, 4), {1, 1}, 4);
    EXPECT_FALSE(bad.bound.has_value());
    EXPECT_FALSE(bad.hypotheses[0].holds);
}

TEST(DepthLowerBound, GridProperty) {
    for (int n = 1; n <= 5; ++n)
        for (int m = n; m <= 6; ++m)
            for (int p = m + 1; p <= 8; ++p)
                for (int c = 1; c <= 4; ++c)
                    for (int e = 1; e <= 4; ++e)
                        EXPECT_EQ(depth_lower_bound(bkm_shifts(n, m), {c, e}, p).bound, p + n - (m + 1));
}

TEST(CmCertificate, Examples) {
    const auto s = bkm_shifts(3, 4);
    EXPECT_EQ(cm_certificate(3, s, {5, 1}, 5).verdict, Verdict::Certified);
    const auto over = cm_certificate(5 + 3 - 4, s, {5, 1}, 5);
    EXPECT_EQ(over.verdict, Verdict::Inconclusive);
    const auto gate = cm_certificate(3, s, {5, 1}, 4);
    EXPECT_EQ(gate.verdict, Verdict::Inconclusive);
    EXPECT_FALSE(gate.hypotheses[0].holds);
}

TEST(KoszulCertificate, Examples) {
    EXPECT_EQ(koszul_certificate(bkm_shifts(3, 4), {1, 2}).verdict, Verdict::Certified);
    for (int m = 2; m <= 6; ++m)
        for (int c = 1; c <= 4; ++c)
            for (int e = 1; e <= 4; ++e)
                EXPECT_EQ(koszul_certificate(bkm_shifts(2, m), {c, e}).verdict, Verdict::Certified);
    const auto k = koszul_certificate(bkm_shifts(3, 4), {1, 1});
    EXPECT_FALSE(k.e_threshold);
    EXPECT_EQ(k.reg_bound, 2);
    EXPECT_EQ(k.verdict, Verdict::Inconclusive);
}

TEST(KoszulCertificate, ThresholdGridProperty) {
    for (int n = 1; n <= 8; ++n)
        for (int m = n; m <= 8; ++m)
            for (int c = 1; c <= 8; ++c)
                for (int e = static_cast<int>(ceil_div(n, 2)); e <= 8; ++e) {
                    const auto k = koszul_certificate(bkm_shifts(n, m), {c, e});
                    ASSERT_LE(k.reg_bound, 1) << n << m << c << e;
                    EXPECT_TRUE(k.e_threshold);
                }
}

TEST(QuotientDiagHilbert, Examples) {
    const auto s = bkm_shifts(2, 2);
    const auto h = quotient_diag_hilbert(s, {1, 1}, 2, 4, 3);
    EXPECT_EQ(h[0], 1);
    EXPECT_EQ(h[1], 6);
    // BettiTable overload agrees
    EXPECT_EQ(quotient_diag_hilbert(bkm_betti_table(2, 2), {1, 1}, 2, 4, 3), h);
}

TEST(QuotientDiagHilbert, MatchesOracleProperty) {
    const auto J = example_J();
    TorOracle<P> oracle(J);
    for (const DiagonalSpec d : {DiagonalSpec{1, 1}, DiagonalSpec{1, 2}, DiagonalSpec{2, 1}}) {
        const auto h = quotient_diag_hilbert(bkm_shifts(3, 4), d, 3, 5, 3);
        for (int i = 0; i <= 3; ++i)
            if (d.at(i).a <= 4 && d.at(i).b <= 4)
                EXPECT_EQ(static_cast<std::size_t>(h[static_cast<std::size_t>(i)]), oracle.quotient_dim(d.at(i)));
    }
    const auto small = small_J();
    TorOracle<P> so(small);
    const auto h = quotient_diag_hilbert(bkm_shifts(2, 2), {1, 1}, 2, 4, 4);
    for (int i = 0; i <= 4; ++i) EXPECT_EQ(static_cast<std::size_t>(h[static_cast<std::size_t>(i)]), so.quotient_dim({i, i}));
}

TEST(QuotientDiagHilbert, InconsistentTableRejected) {
    BettiTable t;
    t.insert_unique(0, {0, 0}, 1);
    t.insert_unique(1, {0, 0}, 2);
    EXPECT_THROW(quotient_diag_hilbert(t, {1, 1}, 1, 1, 2), InconsistentTable);
}
