#include "sbtree/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace sbtree {

namespace {

void check_depth(int depth, int max_depth)
{
    if (depth < 1 || depth > max_depth) {
        throw std::out_of_range("depth must lie in [1, " + std::to_string(max_depth) + "], got " +
                                std::to_string(depth));
    }
}

// Branch vectors scale(level) * heading(net) for every reachable
// (level, net), tabulated once so the traversal does no trigonometry.
class BranchTable {
public:
    BranchTable(const TreeParams& p, int depth) : depth_(depth)
    {
        headings_.reserve(2 * depth + 1);
        for (int net = -depth; net <= depth; ++net) {
            headings_.push_back(p.heading(net));
        }
        scales_.reserve(depth + 1);
        for (int level = 0; level <= depth; ++level) {
            scales_.push_back(p.scale(level));
        }
    }

    Complex branch(int level, int net) const { return scales_[level] * headings_[net + depth_]; }

private:
    int depth_;
    std::vector<Complex> headings_;
    std::vector<double> scales_;
};

// Depth-first over all 2^depth turn words, L before R. Accumulation order
// matches tip_position() so endpoints agree with it exactly.
template <class Visit>
void for_each_endpoint(const TreeParams& p, int depth, Visit&& visit)
{
    const BranchTable table(p, depth);
    struct Frame {
        int level;
        int net;
        std::uint32_t turns;
        Complex w;
    };
    std::vector<Frame> stack;
    stack.reserve(2 * static_cast<std::size_t>(depth) + 2);
    stack.push_back({0, 0, 0u, table.branch(0, 0)});
    while (!stack.empty()) {
        const Frame f = stack.back();
        stack.pop_back();
        if (f.level == depth) {
            visit(f.turns, f.w);
            continue;
        }
        const int level = f.level + 1;
        const std::uint32_t r_bit = 1u << f.level;
        stack.push_back({level, f.net - 1, f.turns | r_bit, f.w + table.branch(level, f.net - 1)});
        stack.push_back({level, f.net + 1, f.turns, f.w + table.branch(level, f.net + 1)});
    }
}

struct Segment {
    Complex a;
    Complex b;
    std::uint32_t id;  // heap index: trunk 1, children of n are 2n (L), 2n+1 (R)
    double min_x, max_x, min_y, max_y;
};

bool adjacent(std::uint32_t u, std::uint32_t v)
{
    if (u == v / 2 || v == u / 2) {
        return true;
    }
    return u > 1 && v > 1 && u / 2 == v / 2;
}

double cross(Complex u, Complex v) { return u.real() * v.imag() - u.imag() * v.real(); }

double orient(Complex a, Complex b, Complex c) { return cross(b - a, c - a); }

constexpr double kOrientEps = 1e-12;

bool straddles(double o1, double o2)
{
    return (o1 > kOrientEps && o2 < -kOrientEps) || (o1 < -kOrientEps && o2 > kOrientEps);
}

bool properly_cross(const Segment& s, const Segment& t)
{
    return straddles(orient(s.a, s.b, t.a), orient(s.a, s.b, t.b)) &&
           straddles(orient(t.a, t.b, s.a), orient(t.a, t.b, s.b));
}

double point_segment_distance(Complex q, Complex a, Complex b)
{
    const Complex ab = b - a;
    const double len2 = std::norm(ab);
    double t = len2 > 0.0 ? ((q - a).real() * ab.real() + (q - a).imag() * ab.imag()) / len2 : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    return std::abs(q - (a + t * ab));
}

// Distance between segments known not to cross properly.
double segment_distance(const Segment& s, const Segment& t)
{
    return std::min({point_segment_distance(s.a, t.a, t.b), point_segment_distance(s.b, t.a, t.b),
                     point_segment_distance(t.a, s.a, s.b), point_segment_distance(t.b, s.a, s.b)});
}

Address segment_address(std::uint32_t id)
{
    TurnSequence turns;
    int bits = 0;
    while ((id >> (bits + 1)) != 0) {
        ++bits;
    }
    for (int j = bits - 1; j >= 0; --j) {
        turns.push_back(((id >> j) & 1u) ? Turn::R : Turn::L);
    }
    return Address(std::move(turns));
}

std::vector<Segment> build_segments(const TreeParams& p, int depth)
{
    const BranchTable table(p, depth);
    const std::uint32_t count = (1u << (depth + 1)) - 1;
    std::vector<Segment> segs(count + 1);
    std::vector<int> net(count + 1, 0);
    auto make = [](Complex a, Complex b, std::uint32_t id) {
        return Segment{a, b, id, std::min(a.real(), b.real()), std::max(a.real(), b.real()),
                       std::min(a.imag(), b.imag()), std::max(a.imag(), b.imag())};
    };
    segs[1] = make({0.0, 0.0}, table.branch(0, 0), 1);
    for (std::uint32_t id = 2; id <= count; ++id) {
        const std::uint32_t parent = id / 2;
        net[id] = net[parent] + ((id & 1u) ? -1 : +1);
        int level = 0;
        while ((id >> (level + 1)) != 0) {
            ++level;
        }
        const Complex start = segs[parent].b;
        segs[id] = make(start, start + table.branch(level, net[id]), id);
    }
    segs.erase(segs.begin());
    return segs;
}

}  // namespace

Address endpoint_address(std::uint32_t turns, int depth)
{
    TurnSequence out;
    out.reserve(static_cast<std::size_t>(depth));
    for (int j = 0; j < depth; ++j) {
        out.push_back(((turns >> j) & 1u) ? Turn::R : Turn::L);
    }
    return Address(std::move(out));
}

std::vector<Endpoint> enumerate_tips(const TreeParams& p, int depth)
{
    check_depth(depth, kMaxEnumerationDepth);
    std::vector<Endpoint> out;
    out.reserve(std::size_t{1} << depth);
    for_each_endpoint(p, depth, [&](std::uint32_t turns, Complex w) {
        out.push_back({turns, TipPoint::from_complex(w)});
    });
    return out;
}

CertifiedBox certify_extent(const TreeParams& p, int depth)
{
    check_depth(depth, kMaxEnumerationDepth);
    double max_y = -std::numeric_limits<double>::infinity();
    double min_y = std::numeric_limits<double>::infinity();
    double max_x = -std::numeric_limits<double>::infinity();
    for_each_endpoint(p, depth, [&](std::uint32_t, Complex w) {
        max_y = std::max(max_y, w.imag());
        min_y = std::min(min_y, w.imag());
        max_x = std::max(max_x, w.real());
    });
    CertifiedBox box;
    box.tail = p.scale(depth + 1) / (1.0 - p.r());
    // Both the enumerated sums and the closed forms round; every partial sum
    // is bounded by the total branch length 1/(1-r). Sized for the deepest
    // enumeration so widths still shrink with depth.
    box.rounding =
        8.0 * (kMaxEnumerationDepth + 8) * std::numeric_limits<double>::epsilon() / (1.0 - p.r());
    const double half = box.tail + box.rounding;
    box.top = {max_y - half, max_y + half};
    box.bottom = {min_y - half, min_y + half};
    box.right = {max_x - half, max_x + half};
    box.analytic = extent(p);
    box.consistent = box.top.contains(box.analytic.top) &&
                     box.bottom.contains(box.analytic.bottom) &&
                     box.right.contains(box.analytic.right);
    box.analytic.certified = box.consistent;
    return box;
}

Extent certified_extent(const TreeParams& p, int depth) { return certify_extent(p, depth).analytic; }

std::string_view to_string(OverlapKind kind) noexcept
{
    switch (kind) {
    case OverlapKind::SelfAvoiding: return "SelfAvoiding";
    case OverlapKind::NearContact: return "NearContact";
    case OverlapKind::Overlapping: return "Overlapping";
    }
    return "?";
}

OverlapClass classify_overlap(const TreeParams& p, int depth, double contact_tol)
{
    check_depth(depth, kMaxClassifyDepth);
    if (!(contact_tol > 0.0)) {
        throw std::invalid_argument("contact tolerance must be positive");
    }
    std::vector<Segment> segs = build_segments(p, depth);
    std::ranges::sort(segs, [](const Segment& s, const Segment& t) {
        return s.min_x != t.min_x ? s.min_x < t.min_x : s.id < t.id;
    });

    double best = std::numeric_limits<double>::infinity();
    std::pair<std::uint32_t, std::uint32_t> best_pair{0, 0};
    for (std::size_t i = 0; i < segs.size(); ++i) {
        const Segment& s = segs[i];
        for (std::size_t j = i + 1; j < segs.size() && segs[j].min_x <= s.max_x + best; ++j) {
            const Segment& t = segs[j];
            if (t.min_y > s.max_y + best || s.min_y > t.max_y + best || adjacent(s.id, t.id)) {
                continue;
            }
            if (properly_cross(s, t)) {
                OverlapClass out;
                out.kind = OverlapKind::Overlapping;
                const auto [lo, hi] = std::minmax(s.id, t.id);
                out.witness_pair = std::pair{segment_address(lo), segment_address(hi)};
                return out;
            }
            const double d = segment_distance(s, t);
            if (d < best) {
                best = d;
                best_pair = std::minmax(s.id, t.id);
            }
        }
    }

    OverlapClass out;
    out.min_separation = best;
    if (best < contact_tol) {
        out.kind = OverlapKind::NearContact;
        out.witness_pair = std::pair{segment_address(best_pair.first), segment_address(best_pair.second)};
    } else {
        out.kind = OverlapKind::SelfAvoiding;
    }
    return out;
}

}  // namespace sbtree
