#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sbtree/address.hpp"
#include "sbtree/critical.hpp"
#include "sbtree/tipcalc.hpp"

namespace sbtree {

inline constexpr int kMaxSceneDepth = 16;
inline constexpr int kMinCanvasPx = 64;

struct Highlight {
    Address address;
    std::string color;
};

struct SceneSpec {
    TreeParams params;
    int depth = 10;
    std::vector<Highlight> highlights;
    int width = 800;
    int height = 800;
    int margin = 20;
};

/// Standalone SVG 1.1 document: one <line> per branch (2^(depth+1) - 1 of
/// them), highlighted paths drawn last as <polyline>s. The viewport fits the
/// analytic extent together with the trunk; y points up in tree space.
std::string render_tree(const SceneSpec& spec);

/// Depth a highlighted path is drawn to: at least 40 branches, more until the
/// remaining tail is under a quarter pixel at `px_per_unit`.
std::size_t highlight_depth(const TreeParams& p, const Address& a, double px_per_unit);

struct PlotSample {
    double x = 0.0;
    std::optional<double> y;  // empty (or non-finite) breaks the curve
};

struct PlotSpec {
    std::string title;
    std::string x_label;
    std::string y_label;
    int width = 640;
    int height = 400;
};

std::string plot_function(std::span<const PlotSample> samples, const PlotSpec& spec);

/// Fixed 6-decimal coordinate formatting used throughout the SVG output.
std::string format_coord(double v);

/// Fixed 9-decimal formatting used by CSV, text and JSON output.
std::string format_value(double v);

enum class SweepQuantity { Critical, Numerator };

/// CSV with header `theta_deg,value,status`.
std::string sweep_csv(std::span<const SweepRow> rows, SweepQuantity quantity);

/// Plot samples for a sweep: r values (gaps where not Found) or N(theta).
std::vector<PlotSample> sweep_samples(std::span<const SweepRow> rows, SweepQuantity quantity);

}  // namespace sbtree
