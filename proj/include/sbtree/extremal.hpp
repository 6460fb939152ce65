#pragma once

#include <string_view>

#include "sbtree/address.hpp"
#include "sbtree/tipcalc.hpp"

namespace sbtree {

enum class ExtremeKind { Top, Bottom, Side };

std::string_view to_string(ExtremeKind kind) noexcept;

/// Angle (degrees) the classical wound path R^k must reach: 360 for the top,
/// 180 for the bottom, 90 for the side.
double threshold_deg(ExtremeKind kind) noexcept;

/// Smallest k with k*theta >= threshold. Quotients within 1e-9 of an
/// integer snap to it, so theta = 120 gives exactly k = 3 for the top.
int turn_count(ExtremeKind kind, double theta_deg);

/// Smallest m with m*theta >= threshold + 360 (bottom and side only; the top's
/// competing path is (LR)^inf). Throws std::invalid_argument for Top.
int second_turn_count(ExtremeKind kind, double theta_deg);

/// y_k - y_0 for the top pair R^k(LR)^inf vs (LR)^inf; 0 <= r < 1.
double f_top(double theta_deg, double r);

/// y_m - y_k for the bottom pair; negative means R^m(LR)^inf sits lower.
double f_bottom(double theta_deg, double r);

/// x_m - x_k for the side pair; positive means R^m(LR)^inf reaches further.
double f_side(double theta_deg, double r);

/// Numerators of the f functions at r = 1. Their sign decides whether f
/// diverges to +inf or -inf as r -> 1-. Defined on (0, 180].
double N_top(double theta_deg);
double N_bottom(double theta_deg);
double N_side(double theta_deg);

/// Dispatch by kind.
double f_difference(ExtremeKind kind, double theta_deg, double r);
double numerator(ExtremeKind kind, double theta_deg);

struct Extent {
    double top = 0.0;
    double bottom = 0.0;
    double right = 0.0;
    double left = 0.0;
    Address witness_top;
    Address witness_bottom;
    Address witness_right;
    bool certified = false;
};

/// Best of the two candidate paths for each side of the tree. Not a global
/// optimum claim; see certify_extent() for the brute-force check.
Extent extent(const TreeParams& p);

}  // namespace sbtree
