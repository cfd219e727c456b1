#include <gtest/gtest.h>

#include <random>

#include "socular.hpp"
#include "support/brute.hpp"

using namespace socular;

namespace {

std::vector<Rational> seq(std::initializer_list<int> xs) { return {xs.begin(), xs.end()}; }

std::vector<std::vector<Rational>> rows(std::initializer_list<std::initializer_list<int>> rs)
{
    std::vector<std::vector<Rational>> out;
    for (auto r : rs)
        out.push_back(seq(r));
    return out;
}

} // namespace

TEST(RsInsert, Examples)
{
    YoungTableau t;
    t.insert(3);
    EXPECT_EQ(t.rows(), rows({{3}}));

    auto u = rs_tableau(seq({-6, -5}));
    EXPECT_EQ(rs_insert(u, Rational(-4)).rows(), rows({{-6, -5, -4}}));
    EXPECT_EQ(rs_insert(u, Rational(-7)).rows(), rows({{-7, -5}, {-6}}));
}

TEST(RsInsert, EqualEntriesAppend)
{
    auto t = rs_tableau(seq({0, 0, 0}));
    EXPECT_EQ(t.rows(), rows({{0, 0, 0}}));
    auto u = rs_tableau(seq({1, 0, 0}));
    EXPECT_EQ(u.rows(), rows({{0, 0}, {1}}));
}

TEST(RsTableau, PaperTableaux)
{
    auto a = rs_tableau(seq({-5, -6, -4, 2, -2, 4, 6, 5}));
    EXPECT_EQ(a.rows(), rows({{-6, -4, -2, 4, 5}, {-5, 2, 6}}));
    EXPECT_EQ(shape(a), (Partition{5, 3}));

    auto b = rs_tableau(seq({-6, -4, -5, -2, -3, 3, 2, 5, 4, 6}));
    EXPECT_EQ(b.rows(), rows({{-6, -5, -3, 2, 4, 6}, {-4, -2, 3, 5}}));
    EXPECT_EQ(shape(b), (Partition{6, 4}));

    auto c = rs_tableau(seq({-9, -5, -6, -7, 8, -8, 7, 6, 5, 9}));
    EXPECT_EQ(c.rows(), rows({{-9, -8, 5, 9}, {-7, 6}, {-6, 7}, {-5, 8}}));
    EXPECT_EQ(shape(c), (Partition{4, 2, 2, 2}));
}

TEST(RsTableau, SingleRow)
{
    EXPECT_EQ(rs_shape(seq({1, 2, 3, 4})), (Partition{4}));
    EXPECT_EQ(render(rs_tableau(seq({-7, -6, -5}))), "-7 -6 -5\n");
}

TEST(RsTableau, Render)
{
    auto t = rs_tableau(seq({-5, -6, -4, 2, -2, 4, 6, 5}));
    EXPECT_EQ(render(t), "-6 -4 -2 4 5\n-5 2 6\n");
    std::vector<Rational> half{Rational(1, 2), Rational(-3, 2)};
    EXPECT_EQ(render(rs_tableau(half)), "-3/2\n1/2\n");
}

TEST(RsTableau, GreeneAndInvariants)
{
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 600; ++trial) {
        int len = 1 + trial % 10;
        std::uniform_int_distribution<int> d(-4, 4);
        std::vector<Rational> x;
        for (int i = 0; i < len; ++i)
            x.emplace_back(d(rng), trial % 4 == 0 ? 2 : 1);

        YoungTableau t;
        for (const auto& v : x) {
            t.insert(v);
            ASSERT_TRUE(t.is_valid());
        }
        auto sh = shape(t);
        EXPECT_EQ(t.cell_count(), x.size());
        EXPECT_EQ(sh.total(), len);
        EXPECT_EQ(sh[0], brute::longest_subsequence(x, true));
        EXPECT_EQ(transpose(sh)[0], brute::longest_subsequence(x, false));
    }
}
