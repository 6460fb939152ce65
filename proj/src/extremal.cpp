#include "sbtree/extremal.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace sbtree {

namespace {

double radians(double deg) { return deg * std::numbers::pi / 180.0; }

void check_theta(double theta_deg)
{
    if (!(theta_deg > 0.0 && theta_deg < 180.0)) {
        throw DomainError("theta must lie in (0, 180) degrees, got " + std::to_string(theta_deg));
    }
}

void check_r(double r)
{
    if (!(r >= 0.0 && r < 1.0)) {
        throw DomainError("r must lie in [0, 1), got " + std::to_string(r));
    }
}

int guarded_ceil(double x)
{
    const double nearest = std::round(x);
    if (std::abs(x - nearest) < 1e-9) {
        return static_cast<int>(nearest);
    }
    return static_cast<int>(std::ceil(x));
}

// Sum_{n=from}^{to} r^n trig(n t).
template <class Trig>
double power_sum(double r, double t, int from, int to, Trig trig)
{
    double sum = 0.0;
    double rn = std::pow(r, from);
    for (int n = from; n <= to; ++n) {
        sum += rn * trig(n * t);
        rn *= r;
    }
    return sum;
}

// r^(j+1) trig((j-1)t) + r^(j+2) trig(j t): the (LR)^inf tail after R^j,
// times (1 - r^2).
template <class Trig>
double tail_numerator(double r, double t, int j, Trig trig)
{
    return std::pow(r, j + 1) * trig((j - 1) * t) + std::pow(r, j + 2) * trig(j * t);
}

const auto cosine = [](double a) { return std::cos(a); };
const auto sine = [](double a) { return std::sin(a); };

}  // namespace

std::string_view to_string(ExtremeKind kind) noexcept
{
    switch (kind) {
    case ExtremeKind::Top: return "top";
    case ExtremeKind::Bottom: return "bottom";
    case ExtremeKind::Side: return "side";
    }
    return "?";
}

double threshold_deg(ExtremeKind kind) noexcept
{
    switch (kind) {
    case ExtremeKind::Top: return 360.0;
    case ExtremeKind::Bottom: return 180.0;
    case ExtremeKind::Side: return 90.0;
    }
    return 0.0;
}

int turn_count(ExtremeKind kind, double theta_deg)
{
    check_theta(theta_deg);
    return guarded_ceil(threshold_deg(kind) / theta_deg);
}

int second_turn_count(ExtremeKind kind, double theta_deg)
{
    if (kind == ExtremeKind::Top) {
        throw std::invalid_argument("the top has no second wound candidate");
    }
    check_theta(theta_deg);
    return guarded_ceil((threshold_deg(kind) + 360.0) / theta_deg);
}

double f_top(double theta_deg, double r)
{
    check_r(r);
    const int k = turn_count(ExtremeKind::Top, theta_deg);
    const double t = radians(theta_deg);
    // The n = 0 term and the constant of y_0 are folded together:
    // 1 - 1/(1 - r^2) = -r^2/(1 - r^2).
    return power_sum(r, t, 1, k, cosine) +
           (tail_numerator(r, t, k, cosine) - r * std::cos(t) - r * r) / ((1.0 - r) * (1.0 + r));
}

double f_bottom(double theta_deg, double r)
{
    check_r(r);
    const int k = turn_count(ExtremeKind::Bottom, theta_deg);
    const int m = second_turn_count(ExtremeKind::Bottom, theta_deg);
    const double t = radians(theta_deg);
    return power_sum(r, t, k + 1, m, cosine) +
           (tail_numerator(r, t, m, cosine) - tail_numerator(r, t, k, cosine)) /
               ((1.0 - r) * (1.0 + r));
}

double f_side(double theta_deg, double r)
{
    check_r(r);
    const int k = turn_count(ExtremeKind::Side, theta_deg);
    const int m = second_turn_count(ExtremeKind::Side, theta_deg);
    const double t = radians(theta_deg);
    return power_sum(r, t, k + 1, m, sine) +
           (tail_numerator(r, t, m, sine) - tail_numerator(r, t, k, sine)) /
               ((1.0 - r) * (1.0 + r));
}

namespace {

// Numerators are trig polynomials and stay defined at the closed end
// theta = 180, which is the first listed zero of N_bottom.
int numerator_count(ExtremeKind kind, double theta_deg, bool second)
{
    if (theta_deg == 180.0) {
        return guarded_ceil((threshold_deg(kind) + (second ? 360.0 : 0.0)) / theta_deg);
    }
    return second ? second_turn_count(kind, theta_deg) : turn_count(kind, theta_deg);
}

}  // namespace

double N_top(double theta_deg)
{
    const int k = numerator_count(ExtremeKind::Top, theta_deg, false);
    const double t = radians(theta_deg);
    return std::cos((k - 1) * t) + std::cos(k * t) - 1.0 - std::cos(t);
}

double N_bottom(double theta_deg)
{
    const int k = numerator_count(ExtremeKind::Bottom, theta_deg, false);
    const int m = numerator_count(ExtremeKind::Bottom, theta_deg, true);
    const double t = radians(theta_deg);
    return std::cos((m - 1) * t) + std::cos(m * t) - std::cos((k - 1) * t) - std::cos(k * t);
}

double N_side(double theta_deg)
{
    const int k = numerator_count(ExtremeKind::Side, theta_deg, false);
    const int m = numerator_count(ExtremeKind::Side, theta_deg, true);
    const double t = radians(theta_deg);
    return std::sin((m - 1) * t) + std::sin(m * t) - std::sin((k - 1) * t) - std::sin(k * t);
}

double f_difference(ExtremeKind kind, double theta_deg, double r)
{
    switch (kind) {
    case ExtremeKind::Top: return f_top(theta_deg, r);
    case ExtremeKind::Bottom: return f_bottom(theta_deg, r);
    case ExtremeKind::Side: return f_side(theta_deg, r);
    }
    throw std::invalid_argument("unknown extreme kind");
}

double numerator(ExtremeKind kind, double theta_deg)
{
    switch (kind) {
    case ExtremeKind::Top: return N_top(theta_deg);
    case ExtremeKind::Bottom: return N_bottom(theta_deg);
    case ExtremeKind::Side: return N_side(theta_deg);
    }
    throw std::invalid_argument("unknown extreme kind");
}

Extent extent(const TreeParams& p)
{
    const double theta = p.theta_deg();
    Extent e;

    const int k_top = turn_count(ExtremeKind::Top, theta);
    const double y0 = y_LR_inf(p);
    const double yk = y_Rk_LR_inf(p, k_top);
    if (yk > y0) {
        e.top = yk;
        e.witness_top = Address::wound(k_top);
    } else {
        e.top = y0;
        e.witness_top = Address::wound(0);
    }

    const int k_bot = turn_count(ExtremeKind::Bottom, theta);
    const int m_bot = second_turn_count(ExtremeKind::Bottom, theta);
    const double yk_bot = y_Rk_LR_inf(p, k_bot);
    const double ym_bot = y_Rk_LR_inf(p, m_bot);
    const bool bottom_overtaken = ym_bot < yk_bot;
    e.bottom = bottom_overtaken ? ym_bot : yk_bot;
    e.witness_bottom = Address::wound(static_cast<std::size_t>(bottom_overtaken ? m_bot : k_bot));

    const int k_side = turn_count(ExtremeKind::Side, theta);
    const int m_side = second_turn_count(ExtremeKind::Side, theta);
    const double xk = x_Rk_LR_inf(p, k_side);
    const double xm = x_Rk_LR_inf(p, m_side);
    const bool side_overtaken = xm > xk;
    e.right = side_overtaken ? xm : xk;
    e.left = -e.right;
    e.witness_right = Address::wound(static_cast<std::size_t>(side_overtaken ? m_side : k_side));
    return e;
}

}  // namespace sbtree
