#include "sbtree/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "sbtree/extremal.hpp"

namespace sbtree {

namespace {

constexpr std::size_t kMaxHighlightDepth = 4096;

// printf rounds the exact binary value, so ties resolve half-to-even.
std::string fixed(double v, int decimals)
{
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
    std::string out(buf);
    if (out.front() == '-' && out.find_first_not_of("-0.") == std::string::npos) {
        out.erase(0, 1);
    }
    return out;
}

std::string xml_escape(const std::string& s)
{
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

void check_color(const std::string& color)
{
    const bool ok = !color.empty() && std::ranges::all_of(color, [](char c) {
        return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '#';
    });
    if (!ok) {
        throw std::invalid_argument("invalid color name '" + color + "'");
    }
}

std::string svg_header(int width, int height)
{
    return "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n"
           "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
           std::to_string(width) + "\" height=\"" + std::to_string(height) + "\" viewBox=\"0 0 " +
           std::to_string(width) + " " + std::to_string(height) + "\">\n" +
           "<rect x=\"0\" y=\"0\" width=\"" + std::to_string(width) + "\" height=\"" +
           std::to_string(height) + "\" fill=\"white\"/>\n";
}

// Maps tree coordinates (y up) onto the canvas (y down), preserving aspect.
class Viewport {
public:
    Viewport(double x_min, double x_max, double y_min, double y_max, int width, int height, int margin)
        : x_min_(x_min), y_min_(y_min), height_(height), margin_(margin)
    {
        const double span_x = std::max(x_max - x_min, 1e-12);
        const double span_y = std::max(y_max - y_min, 1e-12);
        scale_ = std::min((width - 2.0 * margin) / span_x, (height - 2.0 * margin) / span_y);
        offset_x_ = 0.5 * ((width - 2.0 * margin) - span_x * scale_);
        offset_y_ = 0.5 * ((height - 2.0 * margin) - span_y * scale_);
    }

    double scale() const { return scale_; }
    double sx(double x) const { return margin_ + offset_x_ + (x - x_min_) * scale_; }
    double sy(double y) const { return height_ - margin_ - offset_y_ - (y - y_min_) * scale_; }

private:
    double x_min_, y_min_;
    int height_, margin_;
    double scale_ = 1.0, offset_x_ = 0.0, offset_y_ = 0.0;
};

std::string tick_label(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4g", std::abs(v) < 1e-12 ? 0.0 : v);
    return buf;
}

}  // namespace

std::string format_coord(double v) { return fixed(v, 6); }

std::string format_value(double v) { return fixed(v, 9); }

std::size_t highlight_depth(const TreeParams& p, const Address& a, double px_per_unit)
{
    if (a.is_finite()) {
        return a.prefix().size();
    }
    std::size_t depth = 40;
    while (depth < kMaxHighlightDepth &&
           p.scale(static_cast<int>(depth) + 1) / (1.0 - p.r()) * px_per_unit >= 0.25) {
        ++depth;
    }
    return depth;
}

std::string render_tree(const SceneSpec& spec)
{
    if (spec.width < kMinCanvasPx || spec.height < kMinCanvasPx) {
        throw std::invalid_argument("canvas must be at least " + std::to_string(kMinCanvasPx) +
                                    " px in each dimension");
    }
    if (spec.depth < 0 || spec.depth > kMaxSceneDepth) {
        throw std::out_of_range("scene depth must lie in [0, " + std::to_string(kMaxSceneDepth) + "]");
    }
    if (spec.margin < 0 || 2 * spec.margin >= std::min(spec.width, spec.height)) {
        throw std::invalid_argument("margin leaves no drawing area");
    }
    for (const auto& h : spec.highlights) {
        check_color(h.color);
    }

    const TreeParams& p = spec.params;
    const Extent e = extent(p);
    const Viewport view(std::min(e.left, 0.0), std::max(e.right, 0.0), std::min(e.bottom, 0.0),
                        std::max(e.top, 1.0), spec.width, spec.height, spec.margin);
    const double base_width = 0.03 * view.scale();

    std::string out = svg_header(spec.width, spec.height);
    out += "<!-- theta=" + format_coord(p.theta_deg()) + " r=" + format_coord(p.r()) +
           " depth=" + std::to_string(spec.depth) + " -->\n";
    out += "<g stroke=\"#3b5323\" stroke-linecap=\"round\">\n";

    // Heap-ordered joints: node 1 is the trunk, children of n are 2n (L), 2n+1 (R).
    const std::size_t count = (std::size_t{1} << (spec.depth + 1)) - 1;
    std::vector<Complex> ends(count + 1);
    std::vector<int> net(count + 1, 0);
    auto emit = [&](Complex a, Complex b, int level) {
        out += "<line x1=\"" + format_coord(view.sx(a.real())) + "\" y1=\"" +
               format_coord(view.sy(a.imag())) + "\" x2=\"" + format_coord(view.sx(b.real())) +
               "\" y2=\"" + format_coord(view.sy(b.imag())) + "\" stroke-width=\"" +
               format_coord(base_width * p.scale(level)) + "\"/>\n";
    };
    ends[1] = p.heading(0);
    emit({0.0, 0.0}, ends[1], 0);
    int level = 0;
    for (std::size_t id = 2; id <= count; ++id) {
        if ((id & (id - 1)) == 0) {
            ++level;
        }
        const std::size_t parent = id / 2;
        net[id] = net[parent] + ((id & 1u) ? -1 : +1);
        ends[id] = ends[parent] + p.scale(level) * p.heading(net[id]);
        emit(ends[parent], ends[id], level);
    }
    out += "</g>\n";

    for (const auto& h : spec.highlights) {
        const std::size_t depth = highlight_depth(p, h.address, view.scale());
        const PartialPath path = partial_path(p, h.address, depth, kMaxHighlightDepth);
        out += "<polyline fill=\"none\" stroke=\"" + xml_escape(h.color) +
               "\" stroke-linejoin=\"round\" stroke-width=\"" + format_coord(0.6 * base_width) +
               "\" points=\"";
        for (std::size_t i = 0; i < path.points.size(); ++i) {
            if (i > 0) {
                out += ' ';
            }
            out += format_coord(view.sx(path.points[i].x)) + ',' +
                   format_coord(view.sy(path.points[i].y));
        }
        out += "\"/>\n";
    }
    out += "</svg>\n";
    return out;
}

std::string plot_function(std::span<const PlotSample> samples, const PlotSpec& spec)
{
    if (spec.width < kMinCanvasPx || spec.height < kMinCanvasPx) {
        throw std::invalid_argument("plot must be at least " + std::to_string(kMinCanvasPx) + " px");
    }
    auto finite = [](const PlotSample& s) { return s.y && std::isfinite(*s.y); };
    const auto n_finite = std::ranges::count_if(samples, finite);
    if (n_finite == 0) {
        throw std::invalid_argument("all plot samples are gaps");
    }
    if (n_finite < 2) {
        throw std::invalid_argument("plot needs at least two finite samples");
    }

    double x_min = samples.front().x, x_max = samples.front().x;
    double y_min = std::numeric_limits<double>::infinity();
    double y_max = -std::numeric_limits<double>::infinity();
    for (const auto& s : samples) {
        x_min = std::min(x_min, s.x);
        x_max = std::max(x_max, s.x);
        if (finite(s)) {
            y_min = std::min(y_min, *s.y);
            y_max = std::max(y_max, *s.y);
        }
    }
    if (x_max == x_min) {
        x_min -= 0.5;
        x_max += 0.5;
    }
    if (y_max == y_min) {
        const double pad = std::max(0.5, 0.5 * std::abs(y_min));
        y_min -= pad;
        y_max += pad;
    }

    const double left = 70.0, right = 20.0, top = 40.0, bottom = 50.0;
    const double plot_w = spec.width - left - right;
    const double plot_h = spec.height - top - bottom;
    auto px = [&](double x) { return left + (x - x_min) / (x_max - x_min) * plot_w; };
    auto py = [&](double y) { return top + (y_max - y) / (y_max - y_min) * plot_h; };

    std::string out = svg_header(spec.width, spec.height);
    out += "<g font-family=\"sans-serif\" font-size=\"12\" fill=\"black\">\n";
    out += "<text x=\"" + format_coord(spec.width / 2.0) + "\" y=\"24\" text-anchor=\"middle\">" +
           xml_escape(spec.title) + "</text>\n";
    out += "<text x=\"" + format_coord(left + plot_w / 2.0) + "\" y=\"" +
           format_coord(spec.height - 12.0) + "\" text-anchor=\"middle\">" +
           xml_escape(spec.x_label) + "</text>\n";
    out += "<text x=\"16\" y=\"" + format_coord(top + plot_h / 2.0) +
           "\" text-anchor=\"middle\" transform=\"rotate(-90 16 " +
           format_coord(top + plot_h / 2.0) + ")\">" + xml_escape(spec.y_label) + "</text>\n";
    for (int i = 0; i <= 4; ++i) {
        const double xv = x_min + (x_max - x_min) * i / 4.0;
        const double yv = y_min + (y_max - y_min) * i / 4.0;
        out += "<text x=\"" + format_coord(px(xv)) + "\" y=\"" + format_coord(top + plot_h + 18.0) +
               "\" text-anchor=\"middle\">" + tick_label(xv) + "</text>\n";
        out += "<text x=\"" + format_coord(left - 6.0) + "\" y=\"" + format_coord(py(yv) + 4.0) +
               "\" text-anchor=\"end\">" + tick_label(yv) + "</text>\n";
    }
    out += "</g>\n";
    out += "<rect x=\"" + format_coord(left) + "\" y=\"" + format_coord(top) + "\" width=\"" +
           format_coord(plot_w) + "\" height=\"" + format_coord(plot_h) +
           "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";
    if (y_min < 0.0 && y_max > 0.0) {
        out += "<line x1=\"" + format_coord(left) + "\" y1=\"" + format_coord(py(0.0)) + "\" x2=\"" +
               format_coord(left + plot_w) + "\" y2=\"" + format_coord(py(0.0)) +
               "\" stroke=\"gray\" stroke-width=\"0.5\" stroke-dasharray=\"4 3\"/>\n";
    }

    std::vector<const PlotSample*> run;
    auto flush = [&] {
        if (run.size() == 1) {
            out += "<circle cx=\"" + format_coord(px(run[0]->x)) + "\" cy=\"" +
                   format_coord(py(*run[0]->y)) + "\" r=\"1.500000\" fill=\"#1f4e9c\"/>\n";
        } else if (run.size() > 1) {
            out += "<polyline fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"1.5\" points=\"";
            for (std::size_t i = 0; i < run.size(); ++i) {
                if (i > 0) {
                    out += ' ';
                }
                out += format_coord(px(run[i]->x)) + ',' + format_coord(py(*run[i]->y));
            }
            out += "\"/>\n";
        }
        run.clear();
    };
    for (const auto& s : samples) {
        if (finite(s)) {
            run.push_back(&s);
        } else {
            flush();
        }
    }
    flush();
    out += "</svg>\n";
    return out;
}

std::vector<PlotSample> sweep_samples(std::span<const SweepRow> rows, SweepQuantity quantity)
{
    std::vector<PlotSample> out;
    out.reserve(rows.size());
    for (const auto& row : rows) {
        if (quantity == SweepQuantity::Numerator) {
            out.push_back({row.theta_deg, row.numerator});
        } else {
            out.push_back({row.theta_deg, row.result.r_value});
        }
    }
    return out;
}

std::string sweep_csv(std::span<const SweepRow> rows, SweepQuantity quantity)
{
    std::string out = "theta_deg,value,status\n";
    for (const auto& row : rows) {
        out += format_value(row.theta_deg);
        out += ',';
        if (quantity == SweepQuantity::Numerator) {
            out += format_value(row.numerator);
            out += ',';
            out += std::abs(row.numerator) < 1e-12 ? "zero"
                   : row.numerator > 0.0          ? "positive"
                                                  : "negative";
        } else {
            if (row.result.r_value) {
                out += format_value(*row.result.r_value);
            }
            out += ',';
            out += to_string(row.result.status);
            if (row.result.extra_sign_changes > 0) {
                out += ";extra_sign_changes=" + std::to_string(row.result.extra_sign_changes);
            }
        }
        out += '\n';
    }
    return out;
}

}  // namespace sbtree
