#include <gtest/gtest.h>

#include <random>

#include "sbtree/tipcalc.hpp"
#include "walk_oracle.hpp"

using namespace sbtree;
using sbtree::testing::tail;
using sbtree::testing::walk;

TEST(TreeParams, RejectsOutOfRange)
{
    EXPECT_THROW(TreeParams(0.0, 0.5), DomainError);
    EXPECT_THROW(TreeParams(180.0, 0.5), DomainError);
    EXPECT_THROW(TreeParams(90.0, 0.0), DomainError);
    EXPECT_THROW(TreeParams(90.0, 1.0), DomainError);
    EXPECT_THROW(TreeParams(90.0, std::nan("")), DomainError);
    EXPECT_NO_THROW(TreeParams(179.9, 0.999));
}

TEST(TipPosition, ReferenceTipHeights)
{
    EXPECT_NEAR(tip_position({120, 0.9}, parse_address("(LR)^inf")).y, 2.89474, 1e-5);
    EXPECT_NEAR(tip_position({150, 0.8}, parse_address("R^3(LR)^inf")).y, 1.19607, 1e-5);
    EXPECT_NEAR(tip_position({100, 0.95}, parse_address("R(LR)^inf")).x, 9.59556, 1e-5);
}

TEST(TipPosition, TrunkAndSingleTurn)
{
    const TipPoint trunk = tip_position({47, 0.3}, Address{});
    EXPECT_DOUBLE_EQ(trunk.x, 0.0);
    EXPECT_DOUBLE_EQ(trunk.y, 1.0);
    const TipPoint right = tip_position({90, 0.5}, parse_address("R"));
    EXPECT_NEAR(right.x, 0.5, 1e-15);
    EXPECT_NEAR(right.y, 1.0, 1e-15);
}

TEST(TipPosition, MatchesDirectWalkWithinTail)
{
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> theta(1.0, 179.0);
    std::uniform_real_distribution<double> scale(0.05, 0.9);
    for (const char* text : {"R^3(LR)^inf", "(LR)^inf", "L(RRL)^inf", "RL^2R(LLRLR)^inf", "RLLRLR"}) {
        const Address a = parse_address(text);
        for (int trial = 0; trial < 20; ++trial) {
            const double t = theta(rng);
            const double r = scale(rng);
            const int depth = a.is_finite() ? static_cast<int>(a.prefix().size()) : 400;
            const auto w = walk(t, r, to_string(expand(a, depth, 400)));
            const TipPoint tp = tip_position({t, r}, a);
            const double bound = a.is_finite() ? 1e-12 : tail(r, depth) + 1e-12;
            EXPECT_NEAR(tp.x, w.x, bound) << text << " theta=" << t << " r=" << r;
            EXPECT_NEAR(tp.y, w.y, bound) << text << " theta=" << t << " r=" << r;
        }
    }
}

TEST(ClosedForms, ReferenceValues)
{
    EXPECT_NEAR(y_LR_inf({120, 0.9}), 2.89474, 1e-5);
    EXPECT_NEAR(y_LR_inf({150, 0.8}), 0.85328, 1e-5);
    EXPECT_NEAR(y_LR_inf({60, 1e-9}), 1.0, 1e-8);
    EXPECT_NEAR(y_Rk_LR_inf({150, 0.8}, 3), 1.19607, 1e-5);
    EXPECT_NEAR(y_Rk_LR_inf({120, 0.9}, 3), 2.25526, 1e-5);
    EXPECT_NEAR(y_Rk_LR_inf({160, 0.8}, 2), 0.27365, 1e-5);
    EXPECT_NEAR(y_Rk_LR_inf({160, 0.8}, 4), 0.22498, 1e-5);
    EXPECT_NEAR(x_Rk_LR_inf({100, 0.95}, 1), 9.59556, 1e-5);
    EXPECT_NEAR(x_Rk_LR_inf({100, 0.95}, 5), 10.35548, 1e-5);
}

TEST(ClosedForms, SideMaximumForWideAngles)
{
    for (double t : {90.0, 100.0, 135.0, 170.0}) {
        for (double r : {0.2, 0.5, 0.8}) {
            const TreeParams p(t, r);
            EXPECT_NEAR(x_Rk_LR_inf(p, 1), r * std::sin(p.theta_rad()) / (1 - r * r), 1e-12);
        }
    }
}

TEST(ClosedForms, AgreeWithTipPositionOnGrid)
{
    for (double t = 5.0; t < 180.0; t += 7.0) {
        for (double r = 0.05; r < 0.99; r += 0.07) {
            const TreeParams p(t, r);
            EXPECT_NEAR(y_LR_inf(p), tip_position(p, Address::wound(0)).y, 1e-12);
            for (int k = 0; k <= 12; ++k) {
                const TipPoint tp = tip_position(p, Address::wound(static_cast<std::size_t>(k)));
                const double scale = std::max(1.0, std::abs(tp.y));
                EXPECT_NEAR(y_Rk_LR_inf(p, k), tp.y, 1e-12 * scale) << t << " " << r << " " << k;
                EXPECT_NEAR(x_Rk_LR_inf(p, k), tp.x, 1e-12 * std::max(1.0, std::abs(tp.x)));
            }
        }
    }
}

TEST(TipProperties, MirrorSymmetry)
{
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> theta(0.5, 179.5);
    std::uniform_real_distribution<double> scale(0.01, 0.95);
    std::uniform_int_distribution<int> bit(0, 1);
    for (int trial = 0; trial < 300; ++trial) {
        TurnSequence prefix(static_cast<std::size_t>(bit(rng) * 5 + bit(rng) * 3));
        for (auto& t : prefix) {
            t = bit(rng) ? Turn::R : Turn::L;
        }
        TurnSequence cycle(static_cast<std::size_t>(1 + bit(rng) + 2 * bit(rng)));
        for (auto& t : cycle) {
            t = bit(rng) ? Turn::R : Turn::L;
        }
        const Address a(prefix, trial % 3 == 0 ? TurnSequence{} : cycle);
        const TreeParams p(theta(rng), scale(rng));
        const TipPoint tp = tip_position(p, a);
        const TipPoint mp = tip_position(p, mirror(a));
        EXPECT_NEAR(mp.x, -tp.x, 1e-12);
        EXPECT_NEAR(mp.y, tp.y, 1e-12);
    }
}

TEST(TipProperties, FlatTop)
{
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> theta(1.0, 179.0);
    std::uniform_real_distribution<double> scale(0.05, 0.95);
    std::uniform_int_distribution<int> bit(0, 1);
    for (int trial = 0; trial < 100; ++trial) {
        const TreeParams p(theta(rng), scale(rng));
        std::string word;
        for (int i = 0; i < 20; ++i) {
            word += bit(rng) ? "LR" : "RL";
        }
        const double y = tip_position(p, parse_address(word)).y;
        const double y_ref = tip_position(p, parse_address("(LR)^20")).y;
        EXPECT_NEAR(y, y_ref, 1e-12) << word;
    }
}

TEST(TipProperties, SameTipDifferentSpelling)
{
    for (double t : {30.0, 72.0, 110.0, 150.0}) {
        for (double r : {0.3, 0.6, 0.9}) {
            const TipPoint a = tip_position({t, r}, parse_address("R(LR)^inf"));
            const TipPoint b = tip_position({t, r}, parse_address("(RL)^inf"));
            EXPECT_NEAR(a.x, b.x, 1e-12);
            EXPECT_NEAR(a.y, b.y, 1e-12);
        }
    }
}

TEST(PartialPath, TrunkOnly)
{
    const PartialPath path = partial_path({60, 0.4}, parse_address("(LR)^inf"), 0);
    ASSERT_EQ(path.points.size(), 2u);
    EXPECT_EQ(path.points[0], (TipPoint{0.0, 0.0}));
    EXPECT_EQ(path.points[1], (TipPoint{0.0, 1.0}));
    EXPECT_NEAR(path.tail_bound, 0.4 / 0.6, 1e-15);
}

TEST(PartialPath, SingleRightTurn)
{
    const PartialPath path = partial_path({90, 0.5}, parse_address("R"), 1);
    EXPECT_NEAR(path.points.back().x, 0.5, 1e-15);
    EXPECT_NEAR(path.points.back().y, 1.0, 1e-15);
    EXPECT_THROW(partial_path({90, 0.5}, parse_address("R"), 2), ExpansionError);
}

TEST(PartialPath, WoundPathFourteenBranches)
{
    for (double r : {0.5, 0.7, 0.9}) {
        const TreeParams p(70, r);
        const Address a = parse_address("R^6(LR)^inf");
        const PartialPath path = partial_path(p, a, 14);
        ASSERT_EQ(path.points.size(), 16u);
        // The sixth right turn passes the upward vertical (6 * 70 = 420 degrees).
        const auto& p5 = path.points[6];
        const auto& p6 = path.points[7];
        EXPECT_GT(p6.y - p5.y, 0.0);
        EXPECT_LE(distance(path.points.back(), tip_position(p, a)), path.tail_bound);
    }
}

TEST(PartialPath, WithinTailBoundOfTip)
{
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> theta(1.0, 179.0);
    std::uniform_real_distribution<double> scale(0.05, 0.97);
    for (const char* text : {"R^3(LR)^inf", "(RRL)^inf", "L^5(R)^inf"}) {
        const Address a = parse_address(text);
        for (int trial = 0; trial < 30; ++trial) {
            const TreeParams p(theta(rng), scale(rng));
            for (std::size_t depth : {0u, 3u, 17u, 64u}) {
                const PartialPath path = partial_path(p, a, depth);
                EXPECT_LE(distance(path.points.back(), tip_position(p, a)), path.tail_bound + 1e-12);
            }
        }
    }
}
