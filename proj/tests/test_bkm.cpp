#include <gtest/gtest.h>

#include "support.hpp"

using namespace resint;
using namespace resint::testing;

namespace {

using ShiftMap = std::map<Bidegree, std::int64_t>;

// Resolution of the n=3, m=4, p=5 worked example, transcribed from its display.
std::vector<ShiftMap> example_display() {
    return {{{{0, 0}, 1}},
            {{{0, 3}, 4}, {{1, 1}, 4}},
            {{{1, 3}, 12}, {{0, 4}, 3}, {{2, 2}, 6}},
            {{{2, 3}, 12}, {{1, 4}, 8}},
            {{{2, 4}, 6}}};
}

}  // namespace

TEST(BkmShifts, WorkedExampleDisplay) {
    const auto s = bkm_shifts(3, 4);
    EXPECT_EQ(s.by_index, example_display());
}

TEST(BkmShifts, SmallSquareCase) {
    const auto s = bkm_shifts(2, 2);
    ASSERT_EQ(s.length(), 2);
    EXPECT_EQ(s.by_index[2], (ShiftMap{{{1, 2}, 2}}));
}

TEST(BkmShifts, RejectsMLessThanN) {
    EXPECT_THROW(bkm_shifts(4, 3), HypothesisError);
    EXPECT_THROW(bkm_betti_table(0, 3), HypothesisError);
}

TEST(RMultiplicity, Examples) {
    EXPECT_EQ(r_multiplicity(2, 1, 3, 4), 12);
    EXPECT_EQ(r_multiplicity(4, 2, 3, 4), 6);
    EXPECT_EQ(r_multiplicity(1, 0, 3, 4), 4);
    EXPECT_THROW(r_multiplicity(1, 1, 3, 4), HypothesisError);
    EXPECT_THROW(r_multiplicity(5, 2, 3, 4), HypothesisError);
}

TEST(BettiTable, Examples) {
    const auto t = bkm_betti_table(3, 4);
    EXPECT_EQ(t.at(3, {1, 4}), 8);
    EXPECT_EQ(t.at(0, {0, 0}), 1);
    EXPECT_EQ(t.at(2, {0, 4}), 3);
    EXPECT_EQ(t.at(2, {0, 3}), 0);
    EXPECT_TRUE(t.field_independent());
    EXPECT_EQ(t.n(), 3);
}

TEST(BettiTable, DuplicateKeyGuard) {
    BettiTable t;
    t.insert_unique(1, {1, 1}, 2);
    EXPECT_THROW(t.insert_unique(1, {1, 1}, 2), std::logic_error);
    EXPECT_THROW(t.insert_unique(2, {1, 1}, 0), std::invalid_argument);
}

TEST(RegXY, Examples) {
    EXPECT_EQ(reg_xy_from_table(bkm_betti_table(3, 4)), (RegXY{0, 2}));
    EXPECT_EQ(reg_xy_from_table(bkm_betti_table(2, 2)), (RegXY{0, 1}));
    // Koszul resolution of k over k[x1,x2]: entries (i,(i,0))
    BettiTable k;
    k.insert_unique(0, {0, 0}, 1);
    k.insert_unique(1, {1, 0}, 2);
    k.insert_unique(2, {2, 0}, 1);
    EXPECT_EQ(reg_xy_from_table(k), (RegXY{0, -0}));
}

TEST(RegXY, ClosedFormProperty) {
    for (int n = 1; n <= 8; ++n)
        for (int m = n; m <= 8; ++m) EXPECT_EQ(reg_xy_from_table(bkm_betti_table(n, m)), (RegXY{0, n - 1}));
}

TEST(AbMax, Examples) {
    const auto a = ab_max_sequences(bkm_shifts(3, 4));
    EXPECT_EQ(a.a_max, (std::vector<int>{0, 1, 2, 2, 2}));
    EXPECT_EQ(a.b_max, (std::vector<int>{0, 3, 4, 4, 4}));
    const auto b = ab_max_sequences(bkm_shifts(2, 2));
    EXPECT_EQ(b.a_max, (std::vector<int>{0, 1, 1}));
    EXPECT_EQ(b.b_max, (std::vector<int>{0, 2, 2}));
}

TEST(AbMax, ClosedFormsProperty) {
    for (int n = 1; n <= 8; ++n)
        for (int m = n; m <= 8; ++m) {
            const auto ab = ab_max_sequences(bkm_shifts(n, m));
            EXPECT_EQ(ab.a_max[0], 0);
            EXPECT_EQ(ab.b_max[0], 0);
            for (int i = 1; i <= m; ++i) {
                EXPECT_EQ(ab.a_max[static_cast<std::size_t>(i)], std::min(i, n - 1)) << n << m << i;
                EXPECT_EQ(ab.b_max[static_cast<std::size_t>(i)], std::min(n - 1 + i, m)) << n << m << i;
            }
        }
}

TEST(Shifts, BoundsProperty) {
    for (int n = 1; n <= 8; ++n)
        for (int m = n; m <= 8; ++m)
            for (const auto& e : bkm_betti_table(n, m).rows()) {
                EXPECT_GE(e.deg.a, 0);
                EXPECT_LT(e.deg.a, n);
                EXPECT_GE(e.deg.b, 0);
                EXPECT_LE(e.deg.b, m);
                if (e.i > 0 && e.deg.a != e.i) EXPECT_EQ(e.deg.a + e.deg.b, n + e.i - 1);
            }
}

TEST(Shifts, EulerCharacteristicVanishesProperty) {
    // S/J has positive codimension, so the alternating sum of ranks is 0
    for (int n = 1; n <= 8; ++n)
        for (int m = n; m <= 8; ++m) {
            const auto s = bkm_shifts(n, m);
            std::int64_t alt = 0;
            for (int i = 0; i <= s.length(); ++i) alt += (i % 2 == 0 ? 1 : -1) * s.rank(i);
            EXPECT_EQ(alt, 0) << n << "," << m;
        }
}

TEST(KabRank, Examples) {
    EXPECT_EQ(kab_rank(3, 0, 0).strand_rank, 1);
    EXPECT_EQ(kab_rank(3, 1, 1).strand_rank, 8);
    EXPECT_EQ(kab_rank(3, 1, 0).strand_rank, 3);
    EXPECT_THROW(kab_rank(3, 1, 3), HypothesisError);
}

TEST(KabRank, StrandKernelEqualsClosedFormProperty) {
    int cases = 0;
    for (int n = 1; n <= 4; ++n)
        for (int a = 0; a <= 3; ++a)
            for (int b = 0; b <= n - 1; ++b) {
                const auto r = kab_rank(n, a, b);
                EXPECT_TRUE(r.agree()) << "n=" << n << " a=" << a << " b=" << b << " strand " << r.strand_rank
                                       << " formula " << r.formula_rank;
                ++cases;
            }
    EXPECT_EQ(cases, 40);
}

TEST(KabRank, RankBookkeepingProperty) {
    // rank F_i = sum_{a+b=i-1} rank K_a^b * C(m, n+a) + [i <= n-1] C(m, i)
    for (int n = 1; n <= 4; ++n)
        for (int m = n; m <= 6; ++m) {
            const auto s = bkm_shifts(n, m);
            for (int i = 1; i <= m; ++i) {
                std::int64_t want = i <= n - 1 ? binomial(m, i) : 0;
                for (int a = 0; a <= i - 1; ++a) {
                    const int b = i - 1 - a;
                    if (b > n - 1) continue;
                    want += kab_formula_rank(n, a, b) * binomial(m, n + a);
                }
                EXPECT_EQ(s.rank(i), want) << n << "," << m << "," << i;
            }
        }
}

TEST(HilbertFromShifts, NonnegativeAndOneAtOrigin) {
    for (int n = 1; n <= 4; ++n)
        for (int m = n; m <= 5; ++m) {
            const auto s = bkm_shifts(n, m);
            EXPECT_EQ(hilbert_from_shifts(s, n, m + 1, {0, 0}), 1);
            for (int u = 0; u <= 3; ++u)
                for (int v = 0; v <= 4; ++v) EXPECT_GE(hilbert_from_shifts(s, n, m + 1, {u, v}), 0);
        }
}

TEST(ShiftsFromTable, RoundTrip) {
    const auto s = shifts_from_table(bkm_betti_table(3, 4));
    EXPECT_EQ(s.by_index, bkm_shifts(3, 4).by_index);
}
