#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

#include "sbtree/address.hpp"

namespace sbtree {

using Complex = std::complex<double>;

class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Branching angle (degrees, 0 < theta < 180) and scaling factor (0 < r < 1)
/// of a symmetric binary tree. The angle is converted to radians once here.
class TreeParams {
public:
    TreeParams(double theta_deg, double r);

    double theta_deg() const noexcept { return theta_deg_; }
    double theta_rad() const noexcept { return theta_rad_; }
    double r() const noexcept { return r_; }

    /// Unit rotation by theta (counterclockwise).
    Complex alpha() const noexcept { return alpha_; }

    /// Direction of a branch whose heading is `turns` net left turns from
    /// vertical: i * alpha^turns.
    Complex heading(int turns) const;

    /// Length of a branch at `level` (trunk is level 0).
    double scale(int level) const;

    /// 1 - r^2, evaluated as (1 - r)(1 + r).
    double one_minus_r2() const noexcept { return (1.0 - r_) * (1.0 + r_); }

private:
    double theta_deg_;
    double theta_rad_;
    double r_;
    Complex alpha_;
};

struct TipPoint {
    double x = 0.0;
    double y = 0.0;

    static TipPoint from_complex(Complex w) noexcept { return {w.real(), w.imag()}; }
    Complex to_complex() const noexcept { return {x, y}; }

    friend bool operator==(const TipPoint&, const TipPoint&) = default;
};

double distance(const TipPoint& a, const TipPoint& b) noexcept;

/// Raised when a cycle's geometric ratio is too close to 1 to sum.
class NearSingularError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Exact position of the point an address leads to: the limit point for a
/// periodic address, the last branch endpoint for a finite one. The trunk
/// runs from (0,0) to (0,1).
TipPoint tip_position(const TreeParams& p, const Address& a);

/// y of the (LR)^inf tip: (1 + r cos theta) / (1 - r^2).
double y_LR_inf(const TreeParams& p);

/// y of the R^k (LR)^inf tip.
double y_Rk_LR_inf(const TreeParams& p, int k);

/// x of the R^k (LR)^inf tip.
double x_Rk_LR_inf(const TreeParams& p, int k);

struct PartialPath {
    std::vector<TipPoint> points;  // (0,0), (0,1), then one joint per branch
    double tail_bound = 0.0;       // r^(depth+1) / (1 - r)
};

PartialPath partial_path(const TreeParams& p, const Address& a, std::size_t depth,
                         std::size_t limit = kDefaultExpansionLimit);

}  // namespace sbtree
