#include <gtest/gtest.h>

#include "support.hpp"

using namespace resint;
using namespace resint::testing;

TEST(PrimeField, ArithmeticAndInverses) {
    const PrimeField f5(5);
    EXPECT_EQ(f5.mul(2, 3), 1u);
    EXPECT_EQ(f5.from_int(-1), 4u);
    EXPECT_EQ(f5.to_string(4), "-1");
    for (std::uint32_t a = 1; a < 5; ++a) EXPECT_EQ(f5.mul(a, f5.inv(a)), 1u);
    EXPECT_THROW(f5.inv(0), std::domain_error);
    EXPECT_THROW(PrimeField(6), std::invalid_argument);
}

TEST(PrimeField, InverseProperty) {
    Gen g(11);
    const PrimeField f;
    for (int t = 0; t < 500; ++t) {
        const auto a = f.from_int(g.uniform(1, 1000000));
        if (f.is_zero(a)) continue;
        EXPECT_EQ(f.mul(a, f.inv(a)), f.one());
    }
}

TEST(RationalField, Fractions) {
    const RationalField q;
    const auto h = q.from_fraction("1", "2");
    EXPECT_EQ(q.to_string(q.add(h, h)), "1");
    EXPECT_EQ(q.to_string(q.inv(q.from_int(-3))), "-1/3");
}

TEST(PieceDim, Examples) {
    EXPECT_EQ(piece_dim(3, 5, {0, 0}), 1);
    EXPECT_EQ(piece_dim(3, 5, {2, 4}), 420);
    EXPECT_EQ(piece_dim(3, 5, {-1, 0}), 0);
}

TEST(MonomialBasis, Examples) {
    const auto r = ring(3, 5);
    const auto b = monomial_basis(r, {1, 0});
    ASSERT_EQ(b.size(), 3u);
    EXPECT_EQ(b[0].str(), "x1");
    EXPECT_EQ(b[1].str(), "x2");
    EXPECT_EQ(b[2].str(), "x3");
    EXPECT_EQ(monomial_basis(r, {0, 1}).size(), 5u);
    EXPECT_EQ(monomial_basis(r, {1, 1}).size(), 15u);
}

TEST(MonomialBasis, SizeMatchesPieceDimProperty) {
    for (int n = 1; n <= 3; ++n)
        for (int p = 1; p <= 4; ++p)
            for (int a = 0; a <= 3; ++a)
                for (int b = 0; b <= 3; ++b) {
                    const auto r = ring(n, p);
                    const auto basis = monomial_basis(r, {a, b});
                    EXPECT_EQ(static_cast<std::int64_t>(basis.size()), bidegree_piece_dim(r, {a, b}));
                    for (std::size_t i = 1; i < basis.size(); ++i) EXPECT_TRUE(drl_greater(basis[i - 1], basis[i]));
                }
}

TEST(BiPoly, ProductExamples) {
    const auto r = ring(3, 5);
    const auto xy = poly(r, "x1") * poly(r, "y1");
    EXPECT_EQ(xy.str(), "x1*y1");
    EXPECT_EQ(xy.bidegree(), (Bidegree{1, 1}));
    EXPECT_EQ((poly(r, "x1+x2") * poly(r, "x1-x2")), poly(r, "x1^2-x2^2"));
    const auto r5 = ring(3, 5, PrimeField(5));
    EXPECT_EQ(poly(r5, "2*x1") * poly(r5, "3*x1"), poly(r5, "x1^2"));
}

TEST(BiPoly, RingAxiomsProperty) {
    Gen g(2024);
    const auto r = ring(2, 3);
    for (int t = 0; t < 60; ++t) {
        const auto a = g.mixed(r, 2, 4), b = g.mixed(r, 2, 4), c = g.mixed(r, 2, 4);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_TRUE((a - a).is_zero());
    }
}

TEST(BiPoly, BihomogeneityProperty) {
    Gen g(7);
    const auto r = ring(3, 2);
    for (int t = 0; t < 60; ++t) {
        const Bidegree d1{g.uniform(0, 2), g.uniform(0, 2)}, d2{g.uniform(0, 2), g.uniform(0, 2)};
        const auto f = g.bihomogeneous(r, d1, 3), h = g.bihomogeneous(r, d2, 3);
        const auto prod = f * h;
        EXPECT_TRUE(prod.is_bihomogeneous());
        if (!prod.is_zero()) EXPECT_EQ(*prod.bidegree(), d1 + d2);
    }
}

TEST(BiPoly, RationalCoefficients) {
    const auto r = ring<Q>(1, 1);
    const auto f = poly(r, "1/2*x1 + 1/2*x1");
    EXPECT_EQ(f, poly(r, "x1"));
    EXPECT_EQ(poly(r, "-3/4*x1*y1").str(), "-3/4*x1*y1");
}

TEST(Parser, RoundTripProperty) {
    Gen g(99);
    const auto r = ring(3, 3);
    for (int t = 0; t < 100; ++t) {
        const auto f = g.mixed(r, 3, 5);
        EXPECT_EQ(poly(r, f.str()), f) << f.str();
    }
}

TEST(Parser, AcceptedAndRejectedInput) {
    const auto r = ring(2, 2);
    EXPECT_TRUE(poly(r, "0").is_zero());
    EXPECT_EQ(poly(r, "-x1 + 3"), poly(r, "3 - x1"));
    EXPECT_EQ(poly(r, "x1*x1"), poly(r, "x1^2"));
    EXPECT_THROW(poly(r, "x3"), ParseError);
    EXPECT_THROW(poly(r, "x1 +"), ParseError);
    EXPECT_THROW(poly(r, "z1"), ParseError);
}

TEST(CoeffOfVariable, Examples) {
    const auto r = ring(3, 5);
    EXPECT_EQ(coeff_of_variable(poly(r, "x1*y1+x2*y2+x3*y3"), Var::x(1)), poly(r, "y2"));
    EXPECT_TRUE(coeff_of_variable(poly(r, "x1"), Var::x(1)).is_zero());
    EXPECT_EQ(coeff_of_variable(poly(r, "x1*y2+x2*y3+x3*y4"), Var::x(2)), poly(r, "y4"));
    EXPECT_THROW(coeff_of_variable(poly(r, "x1^2"), Var::x(0)), RingError);
}

TEST(CoeffOfVariable, ReconstructionProperty) {
    Gen g(5);
    const auto r = ring(3, 4);
    for (int t = 0; t < 40; ++t) {
        const auto f = g.bihomogeneous(r, {1, g.uniform(0, 2)}, 5);
        BiPoly<P> back(r);
        for (int i = 0; i < r.n; ++i) back += poly(r, "x" + std::to_string(i + 1)) * coeff_of_variable(f, Var::x(i));
        EXPECT_EQ(back, f);
    }
}

TEST(Determinant, SmallCases) {
    const auto r = ring(2, 4);
    EXPECT_EQ(determinant(r, grid(r, {{"y1", "y3"}, {"y2", "y4"}})), poly(r, "y1*y4 - y2*y3"));
    EXPECT_TRUE(determinant(r, grid(r, {{"y1", "y1"}, {"y2", "y2"}})).is_zero());
}
