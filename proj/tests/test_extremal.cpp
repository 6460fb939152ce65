#include <gtest/gtest.h>

#include <numbers>
#include <random>

#include "sbtree/extremal.hpp"
#include "walk_oracle.hpp"

using namespace sbtree;
using sbtree::testing::tail;
using sbtree::testing::walk;
using sbtree::testing::wound_word;

namespace {

double rad(double deg) { return deg * std::numbers::pi / 180.0; }

}  // namespace

TEST(TurnCount, Examples)
{
    EXPECT_EQ(turn_count(ExtremeKind::Top, 70), 6);
    EXPECT_EQ(turn_count(ExtremeKind::Top, 150), 3);
    EXPECT_EQ(turn_count(ExtremeKind::Bottom, 160), 2);
    EXPECT_EQ(second_turn_count(ExtremeKind::Bottom, 160), 4);
    EXPECT_EQ(turn_count(ExtremeKind::Side, 100), 1);
    EXPECT_EQ(second_turn_count(ExtremeKind::Side, 100), 5);
}

TEST(TurnCount, ExactMultiplesSnap)
{
    EXPECT_EQ(turn_count(ExtremeKind::Top, 120), 3);
    EXPECT_EQ(turn_count(ExtremeKind::Top, 360.0 / 7.0), 7);
    EXPECT_EQ(turn_count(ExtremeKind::Bottom, 90), 2);
    EXPECT_EQ(turn_count(ExtremeKind::Side, 90), 1);
    EXPECT_EQ(second_turn_count(ExtremeKind::Bottom, 135), 4);
    EXPECT_EQ(turn_count(ExtremeKind::Top, 120.001), 3);
    EXPECT_EQ(turn_count(ExtremeKind::Top, 119.999), 4);
    EXPECT_THROW(second_turn_count(ExtremeKind::Top, 100), std::invalid_argument);
    EXPECT_THROW(turn_count(ExtremeKind::Top, 0.0), DomainError);
}

TEST(TurnCount, SmallestSatisfyingMultiple)
{
    for (double t = 0.7; t < 180.0; t += 0.9) {
        for (auto kind : {ExtremeKind::Top, ExtremeKind::Bottom, ExtremeKind::Side}) {
            const int k = turn_count(kind, t);
            EXPECT_GE(k * t, threshold_deg(kind) - 1e-9);
            EXPECT_LT((k - 1) * t, threshold_deg(kind));
        }
    }
}

TEST(DifferenceFunctions, ReferenceValues)
{
    EXPECT_NEAR(f_top(150, 0.8), 1.19607 - 0.85328, 2e-5);
    EXPECT_NEAR(f_top(120, 0.9), 2.25526 - 2.89474, 2e-5);
    EXPECT_NEAR(f_bottom(160, 0.8), 0.22498 - 0.27365, 2e-5);
    EXPECT_NEAR(f_side(100, 0.95), 10.35548 - 9.59556, 2e-5);
    for (double t : {10.0, 60.0, 100.0, 170.0}) {
        EXPECT_EQ(f_top(t, 0.0), 0.0);
        EXPECT_EQ(f_bottom(t, 0.0), 0.0);
        EXPECT_EQ(f_side(t, 0.0), 0.0);
    }
    EXPECT_THROW(f_top(100, 1.0), DomainError);
    EXPECT_THROW(f_top(100, -0.1), DomainError);
}

TEST(DifferenceFunctions, SignsAgreeWithDirectWalk)
{
    // Bottom at 60 degrees: R^k(LR)^inf is the lower tip, so f_bottom > 0.
    {
        const int k = turn_count(ExtremeKind::Bottom, 60);
        const int m = second_turn_count(ExtremeKind::Bottom, 60);
        const double r = 0.5;
        const int depth = 60;
        const double yk = walk(60, r, wound_word(k, depth)).y;
        const double ym = walk(60, r, wound_word(m, depth)).y;
        ASSERT_GT(ym - yk, 2 * tail(r, depth));
        EXPECT_GT(f_bottom(60, r), 0.0);
        EXPECT_NEAR(f_bottom(60, r), ym - yk, 2 * tail(r, depth) + 1e-15);
    }
    // Side at 100 degrees, small r: R(LR)^inf reaches further right.
    {
        const int k = turn_count(ExtremeKind::Side, 100);
        const int m = second_turn_count(ExtremeKind::Side, 100);
        const double r = 0.5;
        const int depth = 60;
        const double xk = walk(100, r, wound_word(k, depth)).x;
        const double xm = walk(100, r, wound_word(m, depth)).x;
        ASSERT_LT(xm - xk, -2 * tail(r, depth));
        EXPECT_LT(f_side(100, r), 0.0);
    }
}

TEST(DifferenceFunctions, DefinitionConsistency)
{
    for (double t = 3.0; t < 180.0; t += 4.0) {
        for (double r = 0.02; r < 0.97; r += 0.05) {
            const TreeParams p(t, r);
            const double scale = std::max(1.0, std::abs(y_LR_inf(p)));
            const int kt = turn_count(ExtremeKind::Top, t);
            EXPECT_NEAR(f_top(t, r), y_Rk_LR_inf(p, kt) - y_LR_inf(p), 1e-12 * scale);
            const int kb = turn_count(ExtremeKind::Bottom, t);
            const int mb = second_turn_count(ExtremeKind::Bottom, t);
            EXPECT_NEAR(f_bottom(t, r), y_Rk_LR_inf(p, mb) - y_Rk_LR_inf(p, kb), 1e-12 * scale);
            const int ks = turn_count(ExtremeKind::Side, t);
            const int ms = second_turn_count(ExtremeKind::Side, t);
            EXPECT_NEAR(f_side(t, r), x_Rk_LR_inf(p, ms) - x_Rk_LR_inf(p, ks), 1e-12 * scale);
        }
    }
}

TEST(DifferenceFunctions, SmallRTopLaw)
{
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> theta(1.0, 179.0);
    for (int trial = 0; trial < 200; ++trial) {
        const double t = theta(rng);
        const double law = std::cos(2 * rad(t)) - 1.0;
        EXPECT_NEAR(f_top(t, 1e-4) / 1e-8 / law, 1.0, 1e-3) << t;
    }
}

TEST(DifferenceFunctions, SmallRBottomLawConverges)
{
    // The relative error of the leading-order law is about
    // r * |sin((k+1)theta) / sin(k theta)|, so it vanishes linearly in r.
    for (double t = 10.0; t < 180.0; t += 1.0) {
        const int k = turn_count(ExtremeKind::Bottom, t);
        const bool exact = std::abs(k * t - 180.0) < 1e-9;
        const int order = exact ? k + 2 : k + 1;
        const double coeff = exact ? 1.0 - std::cos(2 * rad(t)) : -2.0 * std::sin(rad(t)) * std::sin(k * rad(t));
        ASSERT_GT(coeff, 0.0) << t;
        double prev_err = std::numeric_limits<double>::infinity();
        for (double r : {1e-3, 1e-4, 1e-5, 1e-6}) {
            const double err = std::abs(f_bottom(t, r) / std::pow(r, order) / coeff - 1.0);
            EXPECT_LT(err, prev_err * 0.2 + 1e-9) << "theta=" << t << " r=" << r;
            prev_err = err;
        }
        EXPECT_LT(prev_err, 1e-3) << t;
    }
}

TEST(DifferenceFunctions, CaseOneLimitAndNegativity)
{
    for (int k = 3; k <= 12; ++k) {
        const double t = 360.0 / k;
        EXPECT_NEAR(f_top(t, 1 - 1e-6), -0.5 * k * (1 + std::cos(rad(t))), 1e-2) << k;
    }
    for (double t : {120.0, 90.0, 72.0, 60.0}) {
        for (int i = 1; i <= 99; ++i) {
            EXPECT_LT(f_top(t, i / 100.0), 0.0) << t << " " << i;
        }
    }
}

TEST(Numerators, TopClosedForms)
{
    EXPECT_NEAR(N_top(120), 0.0, 1e-12);
    EXPECT_NEAR(N_top(90), 0.0, 1e-12);
    for (double t = 120.5; t < 180.0; t += 0.5) {
        const double s = std::sin(rad(t));
        EXPECT_NEAR(N_top(t), -2 * s * s * (2 * std::cos(rad(t)) + 1), 1e-12) << t;
        EXPECT_GT(N_top(t), 0.0);
    }
}

TEST(Numerators, TopPositiveBetweenSpecialAngles)
{
    for (int k = 3; k <= 20; ++k) {
        EXPECT_LT(std::abs(N_top(360.0 / k)), 1e-12) << k;
        const double lo = 360.0 / k;
        const double hi = 360.0 / (k - 1);
        for (int i = 1; i <= 9; ++i) {
            const double t = lo + (hi - lo) * i / 10.0;
            if (t < 180.0) {
                EXPECT_GT(N_top(t), 0.0) << t;
            }
        }
    }
}

TEST(Numerators, BottomZerosAndNegativeIntervals)
{
    EXPECT_NEAR(N_bottom(144), 0.0, 1e-12);
    EXPECT_NEAR(N_bottom(120), 0.0, 1e-12);
    EXPECT_LT(N_bottom(160), 0.0);
    EXPECT_NEAR(N_bottom(180), 0.0, 1e-12);
    EXPECT_THROW(N_bottom(180.5), DomainError);
    for (int p = 5; p <= 20; ++p) {
        EXPECT_LT(std::abs(N_bottom(720.0 / p)), 1e-12) << p;
    }
    for (int n = 0; n <= 5; ++n) {
        const double a = 720.0 / (4 * n + 5);
        const double b = 720.0 / (4 * n + 4);
        const double c = 720.0 / (4 * n + 3);
        EXPECT_LT(N_bottom(0.5 * (a + b)), 0.0) << n;
        if (n > 0) {
            EXPECT_LT(N_bottom(0.5 * (b + c)), 0.0) << n;
        }
    }
}

TEST(Numerators, SignPredictsLimitOfDifference)
{
    const double r = 1 - 1e-6;
    for (auto kind : {ExtremeKind::Top, ExtremeKind::Bottom, ExtremeKind::Side}) {
        for (double t = 1.5; t < 180.0; t += 1.0) {
            const double n = numerator(kind, t);
            if (std::abs(n) < 1e-3) {
                continue;
            }
            EXPECT_EQ(n > 0, f_difference(kind, t, r) > 0) << to_string(kind) << " " << t;
        }
    }
    EXPECT_GT(N_side(100), 0.0);
    EXPECT_GT(f_side(100, r), 0.0);
    // 60 and 135 are zeros of N_side: f_side then tends to a finite limit.
    for (double t : {60.0, 135.0}) {
        EXPECT_LT(std::abs(N_side(t)), 1e-12) << t;
        EXPECT_NEAR(f_side(t, 1 - 1e-6), f_side(t, 1 - 1e-5), 1e-3) << t;
    }
    EXPECT_GT(std::abs(f_side(100, 1 - 1e-6) - f_side(100, 1 - 1e-5)), 1e3);
}

TEST(Extent, ThirtyFiveDegreeTree)
{
    const Extent e = extent({35, 0.65});
    EXPECT_NEAR(e.right, 1.51964, 1e-5);
    EXPECT_NEAR(e.bottom, 1.15588, 1e-5);
    EXPECT_NEAR(e.top, 2.653591, 1e-6);
    EXPECT_EQ(e.left, -e.right);
    EXPECT_EQ(e.witness_top, Address::wound(0));
    EXPECT_EQ(e.witness_bottom, Address::wound(6));
    EXPECT_EQ(e.witness_right, Address::wound(3));
    EXPECT_FALSE(e.certified);
}

TEST(Extent, OvertakenTop)
{
    const Extent e = extent({150, 0.8});
    EXPECT_EQ(e.witness_top, parse_address("R^3(LR)^inf"));
    EXPECT_NEAR(e.top, 1.19607, 1e-5);
}

TEST(Extent, CornerPointsAtOneHundredTen)
{
    const TreeParams p(110, 0.60);
    const Extent e = extent(p);
    EXPECT_TRUE(same_path(e.witness_right, parse_address("(RL)^inf")));
    EXPECT_TRUE(same_path(e.witness_bottom, parse_address("R(RL)^inf")));
    EXPECT_NEAR(tip_position(p, parse_address("(RL)^inf")).x, e.right, 1e-12);
    EXPECT_NEAR(tip_position(p, parse_address("R(RL)^inf")).y, e.bottom, 1e-12);
}

TEST(Extent, WitnessesReproduceCoordinates)
{
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> theta(1.0, 179.0);
    std::uniform_real_distribution<double> scale(0.05, 0.97);
    for (int trial = 0; trial < 300; ++trial) {
        const TreeParams p(theta(rng), scale(rng));
        const Extent e = extent(p);
        EXPECT_EQ(e.left, -e.right);
        EXPECT_GE(e.top, e.bottom);
        EXPECT_NEAR(tip_position(p, e.witness_top).y, e.top, 1e-9);
        EXPECT_NEAR(tip_position(p, e.witness_bottom).y, e.bottom, 1e-9);
        EXPECT_NEAR(tip_position(p, e.witness_right).x, e.right, 1e-9);
    }
}
