#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sbtree/extremal.hpp"

namespace sbtree {

enum class CriticalStatus { Found, NoSolutionBelowOne, UndefinedSpecialAngle };
enum class SolveMethod { ClosedForm, Numeric };

std::string_view to_string(CriticalStatus status) noexcept;
std::string_view to_string(SolveMethod method) noexcept;

/// Critical scaling factor for one side of the tree at one angle: the r at
/// which the classical extremal path is overtaken by the wound competitor.
struct CriticalResult {
    ExtremeKind kind = ExtremeKind::Top;
    double theta_deg = 0.0;
    CriticalStatus status = CriticalStatus::NoSolutionBelowOne;
    SolveMethod method = SolveMethod::Numeric;
    std::optional<double> r_value;   // present iff Found
    std::optional<double> residual;  // |f(r_value)|, present iff Found
    /// Sign changes of f seen by the scan beyond the first one. The root is
    /// reported as the smallest; a nonzero count flags a multi-root f.
    int extra_sign_changes = 0;
};

/// Scan step and upper cap of the numeric root search.
inline constexpr double kScanStep = 1e-3;
inline constexpr double kScanCap = 1.0 - 1e-9;

/// k when theta is within 1e-9 (in 360/theta) of 360/k, k >= 3.
std::optional<int> is_case1_angle(double theta_deg);

/// Closed forms, valid on (90,120) u (120,180) for the top and (144,180) for
/// the bottom. Empty outside their intervals.
std::optional<double> top_closed_form(double theta_deg);
std::optional<double> bottom_closed_form(double theta_deg);

/// Smallest root of f_kind in (0, kScanCap): sign-change scan then bisection
/// to machine precision. Never uses a closed form.
CriticalResult solve_numeric(ExtremeKind kind, double theta_deg);

CriticalResult critical_top(double theta_deg);
CriticalResult critical_bottom(double theta_deg);
CriticalResult critical_side(double theta_deg);
CriticalResult critical(ExtremeKind kind, double theta_deg);

struct SweepRow {
    double theta_deg = 0.0;
    CriticalResult result;
    double numerator = 0.0;
};

/// One row per theta_min + i*step <= theta_max. Rows are computed on up to
/// `workers` threads and always returned in theta order.
std::vector<SweepRow> sweep(ExtremeKind kind, double theta_min, double theta_max, double step,
                            unsigned workers = 1);

}  // namespace sbtree
