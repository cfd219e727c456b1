#include <gtest/gtest.h>

#include <random>

#include "socular.hpp"

using namespace socular;

namespace {

std::vector<Rational> rats(std::initializer_list<Rational> xs) { return xs; }

Rational R(std::int64_t a, std::int64_t b = 1) { return Rational(a, b); }

} // namespace

TEST(Rational, ParsesIntegersAndFractions)
{
    EXPECT_EQ(parse_rational("3"), R(3));
    EXPECT_EQ(parse_rational("-5"), R(-5));
    EXPECT_EQ(parse_rational("6/4"), R(3, 2));
    EXPECT_EQ(parse_rational("-1/2"), R(-1, 2));
    EXPECT_EQ(parse_rational(" 7 "), R(7));
}

TEST(Rational, RejectsMalformed)
{
    for (const char* bad : {"", "1.5", "1/0", "1/-2", "a", "1/", "/2", "--1"})
        EXPECT_THROW(parse_rational(bad), parse_error) << bad;
}

TEST(Rational, FloorAndFrac)
{
    EXPECT_EQ(floor(R(-1, 2)), -1);
    EXPECT_EQ(floor(R(7, 3)), 2);
    EXPECT_EQ(frac(R(-1, 4)), R(3, 4));
    EXPECT_EQ(frac(R(-3)), R(0));
    EXPECT_EQ(to_string(R(-3, 4)), "-3/4");
    EXPECT_EQ(to_string(R(8, 4)), "2");
}

TEST(Weight, ParseAndFormat)
{
    auto w = parse_weight("-5,-6,-4,1/2");
    ASSERT_EQ(w.size(), 4u);
    EXPECT_EQ(w[3], R(1, 2));
    EXPECT_FALSE(w.all_integer());
    EXPECT_EQ(to_string(w), "-5,-6,-4,1/2");
    EXPECT_THROW(parse_weight("1,,2"), parse_error);
    EXPECT_THROW(parse_weight("0.5"), parse_error);
}

TEST(Double, Examples)
{
    EXPECT_EQ(doubled(parse_weight("1")), rats({1, -1}));
    EXPECT_EQ(doubled(parse_weight("-5,-6,-4,2")), rats({-5, -6, -4, 2, -2, 4, 6, 5}));
    EXPECT_EQ(doubled(parse_weight("-6,-4,-5,-2,-3")), rats({-6, -4, -5, -2, -3, 3, 2, 5, 4, 6}));
    EXPECT_EQ(doubled(parse_weight("-5,-6,-4,2"), Side::front), rats({-2, 4, 6, 5, -5, -6, -4, 2}));
}

TEST(Double, FrontAndBackRelation)
{
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> d(-9, 9);
    auto reverse_negate = [](const std::vector<Rational>& v) {
        std::vector<Rational> out;
        for (auto it = v.rbegin(); it != v.rend(); ++it)
            out.push_back(-*it);
        return out;
    };
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Rational> v;
        for (int i = 0, n = 1 + trial % 6; i < n; ++i)
            v.emplace_back(d(rng), 1 + trial % 3);
        Weight w(v);
        auto back = doubled(w, Side::back);
        auto front = doubled(w, Side::front);
        EXPECT_EQ(reverse_negate(back), back);
        EXPECT_EQ(reverse_negate(front), front);
        EXPECT_EQ(front, doubled(Weight(reverse_negate(v)), Side::back));
        EXPECT_EQ(back.size(), 2 * v.size());
    }
}

TEST(Congruence, AllIntegerWeight)
{
    auto s = congruence_decompose(parse_weight("2,0,-3"), Grouping::bcd);
    ASSERT_TRUE(s.integral_class);
    EXPECT_EQ(values(*s.integral_class), rats({2, 0, -3}));
    EXPECT_FALSE(s.half_integral_class);
    EXPECT_TRUE(s.other_classes.empty());
}

TEST(Congruence, MixedBcd)
{
    auto s = congruence_decompose(parse_weight("1/2,1,1/4,3/4"), Grouping::bcd);
    ASSERT_TRUE(s.integral_class);
    ASSERT_TRUE(s.half_integral_class);
    EXPECT_EQ(values(*s.integral_class), rats({1}));
    EXPECT_EQ(values(*s.half_integral_class), rats({R(1, 2)}));
    ASSERT_EQ(s.other_classes.size(), 1u);
    EXPECT_EQ(values(s.other_classes[0]), rats({R(1, 4), R(3, 4)}));
    EXPECT_EQ(s.other_classes[0][0].position, 2u);
    EXPECT_EQ(s.other_classes[0][1].position, 3u);
}

TEST(Congruence, TypeAGroupsByDifference)
{
    auto s = congruence_decompose(parse_weight("1,1/2,0,3/2"), Grouping::type_a);
    ASSERT_EQ(s.other_classes.size(), 2u);
    EXPECT_EQ(values(s.other_classes[0]), rats({1, 0}));
    EXPECT_EQ(values(s.other_classes[1]), rats({R(1, 2), R(3, 2)}));
    EXPECT_FALSE(s.integral_class);
}

TEST(Congruence, ClassesPartitionPositionsAndAreMaximal)
{
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> num(-12, 12);
    std::uniform_int_distribution<int> den(1, 6);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<Rational> v;
        for (int i = 0; i < 1 + trial % 7; ++i)
            v.emplace_back(num(rng), den(rng));
        Weight w(v);
        for (auto g : {Grouping::bcd, Grouping::type_a}) {
            auto s = congruence_decompose(w, g);
            std::vector<IndexedSubsequence> all = s.other_classes;
            if (s.integral_class)
                all.push_back(*s.integral_class);
            if (s.half_integral_class)
                all.push_back(*s.half_integral_class);
            std::vector<int> seen(w.size(), 0);
            auto related = [&](const Rational& a, const Rational& b) {
                return is_integer(a - b) || (g == Grouping::bcd && is_integer(a + b));
            };
            for (const auto& cls : all) {
                for (std::size_t i = 0; i < cls.size(); ++i) {
                    ++seen[cls[i].position];
                    EXPECT_EQ(cls[i].value, w[cls[i].position]);
                    if (i > 0) {
                        EXPECT_LT(cls[i - 1].position, cls[i].position);
                    }
                    for (const auto& other : cls)
                        EXPECT_TRUE(related(cls[i].value, other.value));
                }
            }
            for (int c : seen)
                EXPECT_EQ(c, 1);
            for (std::size_t a = 0; a < all.size(); ++a)
                for (std::size_t b = a + 1; b < all.size(); ++b)
                    EXPECT_FALSE(related(all[a][0].value, all[b][0].value));
            if (s.integral_class) {
                for (const auto& e : *s.integral_class)
                    EXPECT_TRUE(is_integer(e.value));
            }
            if (s.half_integral_class) {
                for (const auto& e : *s.half_integral_class)
                    EXPECT_TRUE(is_half_integer(e.value));
            }
        }
    }
}

TEST(Tilde, Examples)
{
    EXPECT_EQ(tilde(rats({R(1, 4), R(-3, 4)})), rats({R(1, 4), R(-3, 4)}));
    EXPECT_EQ(tilde(rats({R(1, 4), R(3, 4)})), rats({R(1, 4), R(-3, 4)}));
    EXPECT_EQ(tilde(rats({R(1, 3), R(4, 3), R(2, 3)})), rats({R(1, 3), R(4, 3), R(-2, 3)}));
    EXPECT_EQ(tilde(rats({R(1, 3), R(2, 3), R(5, 3), R(7, 3)})), rats({R(1, 3), R(7, 3), R(-5, 3), R(-2, 3)}));
}

TEST(Tilde, ResultHasIntegralDifferences)
{
    auto s = congruence_decompose(parse_weight("1/3,2/3,-4/3,5/3,1/4,-7/4,9/4"), Grouping::bcd);
    ASSERT_EQ(s.other_classes.size(), 2u);
    for (const auto& cls : s.other_classes) {
        auto t = tilde(cls);
        EXPECT_EQ(t.size(), cls.size());
        for (const auto& x : t)
            EXPECT_TRUE(is_integer(x - t.front()));
    }
}
