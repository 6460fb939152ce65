#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "sbtree/address.hpp"
#include "sbtree/extremal.hpp"
#include "sbtree/tipcalc.hpp"

namespace sbtree {

inline constexpr int kMaxEnumerationDepth = 24;
inline constexpr int kMaxClassifyDepth = 16;

/// A depth-d branch endpoint. Bit j of `turns` (j = 0 is the first turn) is
/// set for R.
struct Endpoint {
    std::uint32_t turns = 0;
    TipPoint point;
};

Address endpoint_address(std::uint32_t turns, int depth);

/// All 2^depth endpoints in lexicographic L<R order of their turn words.
std::vector<Endpoint> enumerate_tips(const TreeParams& p, int depth);

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
    bool contains(double v) const noexcept { return lo <= v && v <= hi; }
    double width() const noexcept { return hi - lo; }
};

/// Brute-force enclosure of the true extremes over all branch tips.
struct CertifiedBox {
    Interval top;
    Interval bottom;
    Interval right;
    double tail = 0.0;      // r^(depth+1) / (1 - r)
    double rounding = 0.0;  // floating-point allowance, added to tail in each half-width
    Extent analytic;
    bool consistent = false;  // analytic values lie in every interval
};

CertifiedBox certify_extent(const TreeParams& p, int depth);

/// extent() with `certified` set from certify_extent(p, depth).
Extent certified_extent(const TreeParams& p, int depth);

enum class OverlapKind { SelfAvoiding, NearContact, Overlapping };

std::string_view to_string(OverlapKind kind) noexcept;

struct OverlapClass {
    OverlapKind kind = OverlapKind::SelfAvoiding;
    std::optional<double> min_separation;  // SelfAvoiding and NearContact
    std::optional<std::pair<Address, Address>> witness_pair;  // NearContact and Overlapping
};

/// Builds every branch segment down to `depth` and looks for proper
/// crossings between non-adjacent segments (parent/child and siblings share
/// a vertex by construction and are skipped).
OverlapClass classify_overlap(const TreeParams& p, int depth, double contact_tol = 1e-6);

}  // namespace sbtree
