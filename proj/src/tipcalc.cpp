#include "sbtree/tipcalc.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace sbtree {

TreeParams::TreeParams(double theta_deg, double r) : theta_deg_(theta_deg), r_(r)
{
    if (!(theta_deg > 0.0 && theta_deg < 180.0)) {
        throw DomainError("theta must lie in (0, 180) degrees, got " + std::to_string(theta_deg));
    }
    if (!(r > 0.0 && r < 1.0)) {
        throw DomainError("r must lie in (0, 1), got " + std::to_string(r));
    }
    theta_rad_ = theta_deg * std::numbers::pi / 180.0;
    alpha_ = std::polar(1.0, theta_rad_);
}

Complex TreeParams::heading(int turns) const
{
    const double angle = turns * theta_rad_;
    return {-std::sin(angle), std::cos(angle)};
}

double TreeParams::scale(int level) const { return std::pow(r_, level); }

double distance(const TipPoint& a, const TipPoint& b) noexcept
{
    return std::hypot(a.x - b.x, a.y - b.y);
}

TipPoint tip_position(const TreeParams& p, const Address& a)
{
    Complex w = p.heading(0);
    int net = 0;
    int level = 0;
    for (Turn t : a.prefix()) {
        net += rotation(t);
        ++level;
        w += p.scale(level) * p.heading(net);
    }
    if (a.cycle().empty()) {
        return TipPoint::from_complex(w);
    }

    // One period of the cycle, then the geometric series over periods.
    Complex period{0.0, 0.0};
    int cycle_net = 0;
    int cycle_level = 0;
    for (Turn t : a.cycle()) {
        cycle_net += rotation(t);
        ++cycle_level;
        period += p.scale(level + cycle_level) * p.heading(net + cycle_net);
    }
    const Complex ratio = p.scale(cycle_level) * std::polar(1.0, cycle_net * p.theta_rad());
    const Complex denom = 1.0 - ratio;
    if (std::abs(denom) < 1e-14) {
        throw NearSingularError("cycle " + format(Address({}, a.cycle())) +
                                " has a geometric ratio too close to 1");
    }
    w += period / denom;
    return TipPoint::from_complex(w);
}

double y_LR_inf(const TreeParams& p)
{
    return (1.0 + p.r() * std::cos(p.theta_rad())) / p.one_minus_r2();
}

double y_Rk_LR_inf(const TreeParams& p, int k)
{
    if (k < 0) {
        throw std::invalid_argument("k must be non-negative");
    }
    const double t = p.theta_rad();
    double sum = 0.0;
    for (int n = 0; n <= k; ++n) {
        sum += p.scale(n) * std::cos(n * t);
    }
    return sum + (p.scale(k + 1) * std::cos((k - 1) * t) + p.scale(k + 2) * std::cos(k * t)) /
                     p.one_minus_r2();
}

double x_Rk_LR_inf(const TreeParams& p, int k)
{
    if (k < 0) {
        throw std::invalid_argument("k must be non-negative");
    }
    const double t = p.theta_rad();
    double sum = 0.0;
    for (int n = 1; n <= k; ++n) {
        sum += p.scale(n) * std::sin(n * t);
    }
    return sum + (p.scale(k + 1) * std::sin((k - 1) * t) + p.scale(k + 2) * std::sin(k * t)) /
                     p.one_minus_r2();
}

PartialPath partial_path(const TreeParams& p, const Address& a, std::size_t depth,
                         std::size_t limit)
{
    const TurnSequence turns = expand(a, depth, limit);
    PartialPath out;
    out.points.reserve(depth + 2);
    out.points.push_back({0.0, 0.0});
    Complex w = p.heading(0);
    out.points.push_back(TipPoint::from_complex(w));
    int net = 0;
    int level = 0;
    for (Turn t : turns) {
        net += rotation(t);
        ++level;
        w += p.scale(level) * p.heading(net);
        out.points.push_back(TipPoint::from_complex(w));
    }
    out.tail_bound = p.scale(static_cast<int>(depth) + 1) / (1.0 - p.r());
    return out;
}

}  // namespace sbtree
