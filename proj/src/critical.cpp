#include "sbtree/critical.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>

namespace sbtree {

namespace {

double cos_deg(double deg) { return std::cos(deg * std::numbers::pi / 180.0); }

void check_theta(double theta_deg)
{
    if (!(theta_deg > 0.0 && theta_deg < 180.0)) {
        throw DomainError("theta must lie in (0, 180) degrees, got " + std::to_string(theta_deg));
    }
}

int sign_of(double v) { return (v > 0.0) - (v < 0.0); }

struct Bracket {
    double lo;
    double hi;
};

struct ScanResult {
    std::vector<Bracket> brackets;
};

template <class F>
ScanResult scan_sign_changes(F f)
{
    ScanResult out;
    double prev_r = 0.0;
    int prev_sign = 0;
    auto visit = [&](double r) {
        const int s = sign_of(f(r));
        if (s == 0) {
            return;
        }
        if (prev_sign != 0 && s != prev_sign) {
            out.brackets.push_back({prev_r, r});
        }
        prev_sign = s;
        prev_r = r;
    };
    const int steps = static_cast<int>(std::floor(kScanCap / kScanStep));
    for (int i = 1; i <= steps; ++i) {
        const double r = i * kScanStep;
        if (r >= kScanCap) {
            break;
        }
        visit(r);
    }
    visit(kScanCap);
    return out;
}

// Bisection until the bracket cannot be split further in double precision.
template <class F>
double bisect(F f, Bracket b)
{
    double lo = b.lo;
    double hi = b.hi;
    double f_lo = f(lo);
    double f_hi = f(hi);
    for (int iter = 0; iter < 200; ++iter) {
        const double mid = lo + 0.5 * (hi - lo);
        if (mid <= lo || mid >= hi) {
            break;
        }
        const double f_mid = f(mid);
        if (f_mid == 0.0) {
            return mid;
        }
        if (sign_of(f_mid) == sign_of(f_lo)) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
            f_hi = f_mid;
        }
    }
    return std::abs(f_lo) <= std::abs(f_hi) ? lo : hi;
}

CriticalResult found(ExtremeKind kind, double theta_deg, SolveMethod method, double r,
                     int extra_sign_changes)
{
    CriticalResult out;
    out.kind = kind;
    out.theta_deg = theta_deg;
    out.status = CriticalStatus::Found;
    out.method = method;
    out.r_value = r;
    out.residual = std::abs(f_difference(kind, theta_deg, r));
    out.extra_sign_changes = extra_sign_changes;
    return out;
}

CriticalResult with_status(ExtremeKind kind, double theta_deg, CriticalStatus status,
                           SolveMethod method)
{
    CriticalResult out;
    out.kind = kind;
    out.theta_deg = theta_deg;
    out.status = status;
    out.method = method;
    return out;
}

// Closed-form root, cross-checked by the scan for extra sign changes.
CriticalResult closed_form_result(ExtremeKind kind, double theta_deg, double r)
{
    const CriticalResult numeric = solve_numeric(kind, theta_deg);
    const int extra = numeric.status == CriticalStatus::Found ? numeric.extra_sign_changes : 0;
    return found(kind, theta_deg, SolveMethod::ClosedForm, r, extra);
}

}  // namespace

std::string_view to_string(CriticalStatus status) noexcept
{
    switch (status) {
    case CriticalStatus::Found: return "Found";
    case CriticalStatus::NoSolutionBelowOne: return "NoSolutionBelowOne";
    case CriticalStatus::UndefinedSpecialAngle: return "UndefinedSpecialAngle";
    }
    return "?";
}

std::string_view to_string(SolveMethod method) noexcept
{
    return method == SolveMethod::ClosedForm ? "closed-form" : "numeric";
}

std::optional<int> is_case1_angle(double theta_deg)
{
    check_theta(theta_deg);
    const double q = 360.0 / theta_deg;
    const double k = std::round(q);
    if (std::abs(q - k) < 1e-9 && k >= 3.0) {
        return static_cast<int>(k);
    }
    return std::nullopt;
}

std::optional<double> top_closed_form(double theta_deg)
{
    if (theta_deg > 90.0 && theta_deg < 120.0 && !is_case1_angle(theta_deg)) {
        const double c = cos_deg(theta_deg);
        return -(c + std::sqrt(1.0 - 3.0 * c * c)) / (4.0 * c * c - 1.0);
    }
    if (theta_deg > 120.0 && theta_deg < 180.0 && !is_case1_angle(theta_deg)) {
        return -1.0 / (2.0 * cos_deg(theta_deg));
    }
    return std::nullopt;
}

std::optional<double> bottom_closed_form(double theta_deg)
{
    if (theta_deg > 144.0 + 1e-9 && theta_deg < 180.0) {
        const double c = cos_deg(theta_deg);
        return 2.0 * c / (1.0 - 4.0 * c * c);
    }
    return std::nullopt;
}

CriticalResult solve_numeric(ExtremeKind kind, double theta_deg)
{
    check_theta(theta_deg);
    auto f = [kind, theta_deg](double r) { return f_difference(kind, theta_deg, r); };
    const ScanResult scan = scan_sign_changes(f);
    if (scan.brackets.empty()) {
        return with_status(kind, theta_deg, CriticalStatus::NoSolutionBelowOne,
                           SolveMethod::Numeric);
    }
    const double r = bisect(f, scan.brackets.front());
    return found(kind, theta_deg, SolveMethod::Numeric, r,
                 static_cast<int>(scan.brackets.size()) - 1);
}

CriticalResult critical_top(double theta_deg)
{
    check_theta(theta_deg);
    if (is_case1_angle(theta_deg)) {
        return with_status(ExtremeKind::Top, theta_deg, CriticalStatus::UndefinedSpecialAngle,
                           SolveMethod::ClosedForm);
    }
    if (auto r = top_closed_form(theta_deg)) {
        return closed_form_result(ExtremeKind::Top, theta_deg, *r);
    }
    return solve_numeric(ExtremeKind::Top, theta_deg);
}

CriticalResult critical_bottom(double theta_deg)
{
    check_theta(theta_deg);
    if (std::abs(theta_deg - 144.0) <= 1e-9) {
        // N_bottom vanishes here and the closed form reaches exactly 1.
        return with_status(ExtremeKind::Bottom, theta_deg, CriticalStatus::NoSolutionBelowOne,
                           SolveMethod::ClosedForm);
    }
    if (auto r = bottom_closed_form(theta_deg)) {
        return closed_form_result(ExtremeKind::Bottom, theta_deg, *r);
    }
    return solve_numeric(ExtremeKind::Bottom, theta_deg);
}

CriticalResult critical_side(double theta_deg) { return solve_numeric(ExtremeKind::Side, theta_deg); }

CriticalResult critical(ExtremeKind kind, double theta_deg)
{
    switch (kind) {
    case ExtremeKind::Top: return critical_top(theta_deg);
    case ExtremeKind::Bottom: return critical_bottom(theta_deg);
    case ExtremeKind::Side: return critical_side(theta_deg);
    }
    throw std::invalid_argument("unknown extreme kind");
}

std::vector<SweepRow> sweep(ExtremeKind kind, double theta_min, double theta_max, double step,
                            unsigned workers)
{
    if (!(theta_min > 0.0 && theta_min < theta_max && theta_max < 180.0)) {
        throw DomainError("sweep range must satisfy 0 < from < to < 180");
    }
    if (!(step > 0.0)) {
        throw DomainError("sweep step must be positive");
    }
    const auto count = static_cast<std::size_t>(std::floor((theta_max - theta_min) / step + 1e-9)) + 1;
    std::vector<SweepRow> rows(count);
    auto fill = [&](std::size_t first, std::size_t stride) {
        for (std::size_t i = first; i < count; i += stride) {
            const double theta = theta_min + static_cast<double>(i) * step;
            rows[i] = SweepRow{theta, critical(kind, theta), numerator(kind, theta)};
        }
    };
    workers = std::clamp(workers, 1u, static_cast<unsigned>(std::max<std::size_t>(count, 1)));
    if (workers == 1) {
        fill(0, 1);
        return rows;
    }
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back(fill, w, workers);
    }
    pool.clear();  // joins
    return rows;
}

}  // namespace sbtree
