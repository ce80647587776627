#include <gtest/gtest.h>

#include <algorithm>

#include "support.hpp"

using namespace resint;
using namespace resint::testing;

namespace {

template <CoefficientField F>
IdealSpec<F> ideal(const RingSpec<F>& r, const std::vector<std::string>& gens) {
    std::vector<BiPoly<F>> g;
    for (const auto& s : gens) g.push_back(poly(r, s));
    return IdealSpec<F>(r, g);
}

IdealSpec<P> maximal_ideal(int n, int p) {
    const auto r = ring(n, p);
    std::vector<BiPoly<P>> g;
    for (int i = 0; i < n; ++i) g.push_back(BiPoly<P>::variable(r, Var::x(i)));
    for (int j = 0; j < p; ++j) g.push_back(BiPoly<P>::variable(r, Var::y(j)));
    return IdealSpec<P>(r, g);
}

}  // namespace

TEST(IdealSpec, RejectsNonBihomogeneous) {
    const auto r = ring(2, 2);
    EXPECT_THROW(ideal(r, {"x1 + y1"}), RingError);
}

TEST(IdealPiece, Examples) {
    const auto r = ring(3, 5);
    const auto p1 = ideal_piece(ideal(r, {"x1"}), 1, 0);
    EXPECT_EQ(p1.ideal_dim(), 1u);
    EXPECT_EQ(p1.quotient_dim(), 2u);
    const auto p2 = ideal_piece(example_J(), 1, 1);
    EXPECT_EQ(p2.ideal_dim(), 4u);
    EXPECT_EQ(p2.quotient_dim(), 11u);
    const auto p3 = ideal_piece(example_J(), 0, 0);
    EXPECT_EQ(p3.ideal_dim(), 0u);
    EXPECT_EQ(p3.quotient_dim(), 1u);
    EXPECT_THROW(ideal_piece(example_J(), -1, 0), std::invalid_argument);
}

TEST(IdealPiece, DimensionsAddUpProperty) {
    const auto J = example_J();
    for (int u = 0; u <= 3; ++u)
        for (int v = 0; v <= 3; ++v) {
            const auto pc = ideal_piece(J, u, v);
            EXPECT_EQ(static_cast<std::int64_t>(pc.quotient_dim() + pc.ideal_dim()), piece_dim(3, 5, {u, v}));
            // standard monomials are exactly the non-pivot columns
            EXPECT_EQ(pc.standard_monomials().size(), pc.quotient_dim());
        }
}

TEST(IdealPiece, NormalFormOfIdealElementsIsZeroProperty) {
    Gen g(31);
    const auto J = example_J();
    const auto& r = J.ring;
    for (int t = 0; t < 30; ++t) {
        const Bidegree d{g.uniform(1, 2), g.uniform(1, 3)};
        BiPoly<P> f(r);
        for (const auto& gen : J.generators) {
            const Bidegree rest = d - *gen.bidegree();
            if (!rest.nonnegative()) continue;
            f += gen * g.bihomogeneous(r, rest, 2);
        }
        EXPECT_TRUE(ideal_contains(J, f));
    }
    EXPECT_FALSE(ideal_contains(J, poly(r, "x1*y1")));
}

TEST(TorBetti, ResidueField) {
    const auto k = maximal_ideal(3, 2);
    EXPECT_EQ(tor_betti(k, 1, 1, 0), 3u);
    EXPECT_EQ(tor_betti(k, 1, 0, 1), 2u);
    EXPECT_EQ(tor_betti(k, 2, 1, 1), 6u);
    const auto reg = reg_window(k, 5, 3, 2);
    EXPECT_EQ(reg.reg_x, 0);
    EXPECT_EQ(reg.reg_y, 0);
}

TEST(TorBetti, WorkedExampleEntries) {
    const auto J = example_J();
    EXPECT_EQ(tor_betti(J, 2, 1, 3), 12u);
    EXPECT_EQ(tor_betti(J, 4, 2, 4), 6u);
}

TEST(BettiWindow, Principal) {
    const auto r = ring(2, 2);
    const auto t = betti_window(ideal(r, {"x1"}), 3, 2, 2);
    BettiTable want;
    want.insert_unique(0, {0, 0}, 1);
    want.insert_unique(1, {1, 0}, 1);
    EXPECT_TRUE(t.same_entries(want));
}

TEST(BettiWindow, SmallInstanceMatchesClosedForm) {
    const auto t = betti_window(small_J(), 2, 1, 2);
    BettiTable want;
    want.insert_unique(0, {0, 0}, 1);
    want.insert_unique(1, {1, 1}, 2);
    want.insert_unique(1, {0, 2}, 1);
    want.insert_unique(2, {1, 2}, 2);
    EXPECT_TRUE(t.same_entries(want));
    EXPECT_TRUE(t.same_entries(bkm_betti_table(2, 2)));
    const auto reg = reg_window(small_J(), 2, 1, 2);
    EXPECT_EQ(reg.reg_x, 0);
    EXPECT_EQ(reg.reg_y, 1);
}

TEST(BettiWindow, SmallInstanceOverRationals) {
    const auto t = betti_window(small_J(RationalField{}), 2, 1, 2);
    EXPECT_TRUE(t.same_entries(bkm_betti_table(2, 2)));
}

TEST(BettiWindow, DeterministicUnderThreadsAndGeneratorOrder) {
    auto J = example_J();
    TorOracle<P> one(J);
    const auto single = one.betti_window(3, 1, 3, 1);
    TorOracle<P> many(J);
    EXPECT_TRUE(many.betti_window(3, 1, 3, 4).same_entries(single));
    std::reverse(J.generators.begin(), J.generators.end());
    TorOracle<P> rev(J);
    EXPECT_TRUE(rev.betti_window(3, 1, 3, 2).same_entries(single));
}

TEST(BettiWindow, ZerothBettiProperty) {
    const auto t = betti_window(example_J(), 1, 2, 3);
    for (const auto& e : t.rows())
        if (e.i == 0) EXPECT_EQ(e.deg, (Bidegree{0, 0}));
    EXPECT_EQ(t.at(0, {0, 0}), 1);
}

TEST(BettiWindow, AlternatingSumReproducesHilbertFunction) {
    // with all Betti numbers up to bidegree (2,4) known, the Hilbert function
    // is determined for (u,v) <= (2,4)
    const auto J = example_J();
    TorOracle<P> oracle(J);
    const auto t = oracle.betti_window(8, 2, 4);
    const auto s = shifts_from_table(t);
    for (int u = 0; u <= 2; ++u)
        for (int v = 0; v <= 4; ++v)
            EXPECT_EQ(hilbert_from_shifts(s, 3, 5, {u, v}), static_cast<std::int64_t>(oracle.quotient_dim({u, v})));
}

TEST(GradedBettiX, VariablesGiveKoszul) {
    const auto k = [] {
        const auto r = ring(4, 1);
        std::vector<BiPoly<P>> g;
        for (int i = 0; i < 4; ++i) g.push_back(BiPoly<P>::variable(r, Var::x(i)));
        return IdealSpec<P>(r, g);
    }();
    for (int i = 0; i <= 4; ++i) EXPECT_EQ(graded_betti_x(k, i, i), static_cast<std::size_t>(binomial(4, i)));
    EXPECT_THROW(graded_betti_x(maximal_ideal(2, 1), 1, 1), RingError);
}

TEST(GradedBettiX, QuarticsOfWorkedExample) {
    const auto r = ring(3, 5);
    const auto I = ideal(r, {"x2^4 - 3*x1*x2^2*x3 + x1^2*x3^2", "-x1*x2^3 + 2*x1^2*x2*x3", "x1^2*x2^2 - x1^3*x3",
                             "-x1^3*x2", "x1^4"});
    EXPECT_EQ(graded_betti_x(I, 1, 4), 5u);
    const auto t = graded_betti_x_window(I, 6, 12);
    EXPECT_TRUE(linear_in_window(t, 4));
    EXPECT_EQ(ideal_reg_in_window(t), 4);
    EXPECT_EQ(t.at(2, {5, 0}), 4);
}
