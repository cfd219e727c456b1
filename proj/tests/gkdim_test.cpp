#include <gtest/gtest.h>

#include <random>

#include "socular.hpp"
#include "support/brute.hpp"

using namespace socular;

namespace {

std::int64_t gk(Family f, int n, const char* w) { return gk_dimension(parse_weight(w), LieFamily(f, n)); }

} // namespace

TEST(LieFamily, RankBounds)
{
    EXPECT_THROW(LieFamily(Family::A, 1), domain_error);
    EXPECT_THROW(LieFamily(Family::D, 1), domain_error);
    EXPECT_NO_THROW(LieFamily(Family::B, 1));
    EXPECT_NO_THROW(LieFamily(Family::C, 1));
    EXPECT_EQ(parse_family("C"), Family::C);
    EXPECT_THROW(parse_family("E"), parse_error);
}

TEST(GkDimension, Examples)
{
    EXPECT_EQ(gk(Family::B, 4, "-5,-6,-4,2"), 14);
    EXPECT_EQ(gk(Family::D, 5, "-6,-4,-5,-2,-3"), 18);
    EXPECT_EQ(gk(Family::D, 5, "-9,-5,-6,-7,8"), 14);
    EXPECT_EQ(gk(Family::B, 2, "2,1"), 0);
    EXPECT_EQ(gk(Family::A, 3, "2,1,3"), 2);
}

TEST(GkDimension, LengthMismatch)
{
    EXPECT_THROW(gk(Family::B, 3, "1,2"), domain_error);
}

TEST(GkDimension, NonIntegralBreakdown)
{
    // integral part (-5,-6,-4) gives F_b of [4,2] = 1, half-integral (1/2) gives F_b of [1,1] = 1
    auto b = gk_breakdown(parse_weight("-5,-6,-4,1/2"), LieFamily(Family::B, 4));
    EXPECT_EQ(b.value, 14);
    ASSERT_EQ(b.classes.size(), 2u);
    EXPECT_EQ(b.classes[0].value, 1);
    EXPECT_EQ(b.classes[1].value, 1);
    EXPECT_EQ(b.classes[1].positions, (std::vector<std::size_t>{3}));

    // type C takes F_d on the half-integral part: [1,1] has no even cell below row 1
    EXPECT_EQ(gk(Family::C, 4, "-5,-6,-4,1/2"), 15);
    EXPECT_EQ(gk(Family::D, 4, "-5,-6,-4,1/2"), 16 - 4 - 1 - 0);
}

TEST(GkDimension, OtherClassUsesTilde)
{
    // class (1/4, 3/4): tilde = (1/4, -3/4), strictly decreasing, F_a = 1
    auto b = gk_breakdown(parse_weight("1/4,3/4"), LieFamily(Family::C, 2));
    ASSERT_EQ(b.classes.size(), 1u);
    EXPECT_EQ(b.classes[0].kind, ClassContribution::Kind::other);
    EXPECT_EQ(b.classes[0].value, 1);
    EXPECT_EQ(b.value, 3);
    // (1/4, -3/4) is already of that form; (3/4, 1/4) gives (3/4,-1/4), F_a = 1
    EXPECT_EQ(gk(Family::C, 2, "3/4,1/4"), 3);
    // (1/4, 5/4): increasing, F_a = 0
    EXPECT_EQ(gk(Family::B, 2, "1/4,5/4"), 4);
}

TEST(GkDimension, TypeAClasses)
{
    // classes (1,0) and (1/2,3/2): F_a = 1 + 0
    EXPECT_EQ(gk(Family::A, 4, "1,1/2,0,3/2"), 6 - 1);
    EXPECT_EQ(gk(Family::A, 3, "3,2,1"), 0);
    EXPECT_EQ(gk(Family::A, 3, "1,2,3"), 3);
}

TEST(GkDimension, GeneralFormulaReducesOnIntegralWeights)
{
    for (auto f : {Family::A, Family::B, Family::C, Family::D}) {
        for (int n = (f == Family::A || f == Family::D) ? 2 : 1; n <= 4; ++n) {
            LieFamily g(f, n);
            auto top = positive_roots(g);
            oracle::for_each_integral_weight(n, -4, 4, [&](const Weight& w) {
                auto a = gk_dimension(w, g);
                ASSERT_EQ(a, gk_dimension_integral(w, g)) << to_string(w);
                ASSERT_GE(a, 0);
                ASSERT_LE(a, top);
            });
        }
    }
}

TEST(GkDimension, DependsOnlyOnClassShapes)
{
    auto w = parse_weight("-5,1/3,-6,2/3,1/2,-4,7/3,-1/2");
    LieFamily g(Family::C, 8);
    auto b = gk_breakdown(w, g);
    std::int64_t again = positive_roots(g);
    for (const auto& c : b.classes) {
        auto sh = rs_shape(std::span<const Rational>(c.sequence));
        EXPECT_EQ(sh, c.shape);
        again -= f_stat(sh, c.statistic);
    }
    EXPECT_EQ(again, b.value);
}

TEST(GkDimension, BoundsOnRationalWeights)
{
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 4);
    for (int trial = 0; trial < 2000; ++trial) {
        auto f = static_cast<Family>(trial % 4);
        int n = 2 + trial % 4;
        std::vector<Rational> v;
        for (int i = 0; i < n; ++i)
            v.emplace_back(num(rng), den(rng));
        LieFamily g(f, n);
        auto d = gk_dimension(Weight(v), g);
        EXPECT_GE(d, 0);
        EXPECT_LE(d, positive_roots(g));
    }
}
