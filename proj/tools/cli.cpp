#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <thread>

#include "sbtree/address.hpp"
#include "sbtree/critical.hpp"
#include "sbtree/extremal.hpp"
#include "sbtree/oracle.hpp"
#include "sbtree/render.hpp"
#include "sbtree/tipcalc.hpp"

namespace sbtree::cli {

namespace {

using json = nlohmann::ordered_json;

// Raised for an output file that cannot be written.
struct OutputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// JSON numbers carry the same 9-decimal value the text output prints.
double rounded(double v) { return std::stod(format_value(v)); }

std::string_view critical_symbol(ExtremeKind kind)
{
    switch (kind) {
    case ExtremeKind::Top: return "r_T";
    case ExtremeKind::Bottom: return "r_B";
    case ExtremeKind::Side: return "r_S";
    }
    return "r";
}

const std::map<std::string, ExtremeKind> kKindNames{
    {"top", ExtremeKind::Top}, {"bottom", ExtremeKind::Bottom}, {"side", ExtremeKind::Side}};

const std::map<std::string, SweepQuantity> kQuantityNames{
    {"critical", SweepQuantity::Critical}, {"numerator", SweepQuantity::Numerator}};

void write_file(const std::string& path, const std::string& contents)
{
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) {
        throw OutputError("cannot open '" + path + "' for writing");
    }
    file << contents;
    file.flush();
    if (!file) {
        throw OutputError("failed writing '" + path + "'");
    }
}

void check_theta(double theta)
{
    if (!(theta > 0.0 && theta < 180.0)) {
        throw DomainError("theta must lie in (0, 180) degrees");
    }
}

void check_r(double r)
{
    if (!(r > 0.0 && r < 1.0)) {
        throw DomainError("r must lie in (0, 1)");
    }
}

json interval_json(const Interval& i) { return json::array({rounded(i.lo), rounded(i.hi)}); }

std::string interval_text(const Interval& i)
{
    return "[" + format_value(i.lo) + ", " + format_value(i.hi) + "]";
}

json critical_json(const CriticalResult& c)
{
    json j;
    j["kind"] = std::string(to_string(c.kind));
    j["theta"] = rounded(c.theta_deg);
    j["status"] = std::string(to_string(c.status));
    j["method"] = std::string(to_string(c.method));
    j["r_value"] = c.r_value ? json(rounded(*c.r_value)) : json(nullptr);
    j["residual"] = c.residual ? json(*c.residual) : json(nullptr);
    j["extra_sign_changes"] = c.extra_sign_changes;
    return j;
}

json extent_json(const Extent& e)
{
    json j;
    j["top"] = rounded(e.top);
    j["bottom"] = rounded(e.bottom);
    j["right"] = rounded(e.right);
    j["left"] = rounded(e.left);
    j["witness_top"] = format(e.witness_top);
    j["witness_bottom"] = format(e.witness_bottom);
    j["witness_right"] = format(e.witness_right);
    j["certified"] = e.certified;
    return j;
}

void print_extent(std::ostream& out, const Extent& e)
{
    out << "top = " << format_value(e.top) << "  (" << format(e.witness_top) << ")\n"
        << "bottom = " << format_value(e.bottom) << "  (" << format(e.witness_bottom) << ")\n"
        << "right = " << format_value(e.right) << "  (" << format(e.witness_right) << ")\n"
        << "left = " << format_value(e.left) << "\n"
        << "certified = " << (e.certified ? "true" : "false") << "\n";
}

std::pair<Address, std::string> parse_highlight(const std::string& spec)
{
    const auto colon = spec.rfind(':');
    if (colon == std::string::npos || colon == 0 || colon + 1 == spec.size()) {
        throw CLI::ValidationError("--highlight", "expected ADDRESS:COLOR, got '" + spec + "'");
    }
    return {parse_address(spec.substr(0, colon)), spec.substr(colon + 1)};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact geometry of symmetric binary fractal trees"};
    app.require_subcommand(1);

    double theta = 0.0;
    double r = 0.0;
    bool as_json = false;

    // tip
    std::string address_text;
    auto* tip = app.add_subcommand("tip", "Position of the point an address leads to");
    tip->add_option("--theta", theta, "Branching angle in degrees")->required();
    tip->add_option("--r", r, "Scaling factor")->required();
    tip->add_option("--address", address_text, "Address, e.g. R^3(LR)^inf")->required();
    tip->add_flag("--json", as_json, "Emit JSON");

    // extent
    bool certify_flag = false;
    int depth = 14;
    auto* ext = app.add_subcommand("extent", "Top, bottom and side of the tree with witnesses");
    ext->add_option("--theta", theta)->required();
    ext->add_option("--r", r)->required();
    ext->add_flag("--certify", certify_flag, "Confirm with the brute-force oracle");
    ext->add_option("--depth", depth, "Oracle depth for --certify")->capture_default_str();
    ext->add_flag("--json", as_json);

    // critical
    std::string kind_name;
    auto* crit = app.add_subcommand("critical", "Critical scaling factor at one angle");
    crit->add_option("--kind", kind_name, "top | bottom | side")
        ->required()
        ->check(CLI::IsMember({"top", "bottom", "side"}));
    crit->add_option("--theta", theta)->required();
    crit->add_flag("--json", as_json);

    // sweep
    double from = 0.0;
    double to = 0.0;
    double step = 1.0;
    unsigned workers = 1;
    std::string quantity_name = "critical";
    std::string out_path;
    std::string svg_path;
    auto* sw = app.add_subcommand("sweep", "Critical factors (or numerators) over an angle grid, as CSV");
    sw->add_option("--kind", kind_name)
        ->required()
        ->check(CLI::IsMember({"top", "bottom", "side"}));
    sw->add_option("--from", from)->required();
    sw->add_option("--to", to)->required();
    sw->add_option("--step", step)->required();
    sw->add_option("--quantity", quantity_name, "critical | numerator")
        ->check(CLI::IsMember({"critical", "numerator"}))
        ->capture_default_str();
    sw->add_option("--workers", workers, "Worker threads (0 = hardware concurrency)");
    sw->add_option("--out", out_path, "CSV output file (default stdout)");
    sw->add_option("--svg", svg_path, "Also plot the sweep to this SVG file");

    // render
    std::vector<std::string> highlights;
    int width = 800;
    int height = 800;
    int margin = 20;
    int render_depth = 10;
    auto* ren = app.add_subcommand("render", "Draw the tree as SVG");
    ren->add_option("--theta", theta)->required();
    ren->add_option("--r", r)->required();
    ren->add_option("--depth", render_depth)->capture_default_str();
    ren->add_option("--highlight", highlights, "ADDRESS:COLOR, repeatable");
    ren->add_option("--width", width)->capture_default_str();
    ren->add_option("--height", height)->capture_default_str();
    ren->add_option("--margin", margin)->capture_default_str();
    ren->add_option("--out", out_path, "SVG output file")->required();

    // classify
    double tol = 1e-6;
    int classify_depth = 12;
    auto* cls = app.add_subcommand("classify", "Self-avoiding / near-contact / overlapping");
    cls->add_option("--theta", theta)->required();
    cls->add_option("--r", r)->required();
    cls->add_option("--depth", classify_depth)->capture_default_str();
    cls->add_option("--tol", tol, "Contact tolerance")->capture_default_str();
    cls->add_flag("--json", as_json);

    // certify
    auto* cert = app.add_subcommand("certify", "Brute-force interval box for the extent");
    cert->add_option("--theta", theta)->required();
    cert->add_option("--r", r)->required();
    cert->add_option("--depth", depth)->capture_default_str();
    cert->add_flag("--json", as_json);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }

    const ExtremeKind kind = kind_name.empty() ? ExtremeKind::Top : kKindNames.at(kind_name);
    const SweepQuantity quantity = kQuantityNames.at(quantity_name);

    try {
        if (app.got_subcommand(tip)) {
            check_theta(theta);
            check_r(r);
            const Address a = parse_address(address_text);
            const TipPoint pt = tip_position(TreeParams(theta, r), a);
            if (as_json) {
                out << json{{"address", format(a)}, {"x", rounded(pt.x)}, {"y", rounded(pt.y)}}.dump()
                    << "\n";
            } else {
                out << "x = " << format_value(pt.x) << "\ny = " << format_value(pt.y) << "\n";
            }
        } else if (app.got_subcommand(ext)) {
            check_theta(theta);
            check_r(r);
            const TreeParams p(theta, r);
            Extent e = extent(p);
            std::optional<CertifiedBox> box;
            if (certify_flag) {
                box = certify_extent(p, depth);
                e = box->analytic;
            }
            if (as_json) {
                json j = extent_json(e);
                if (box) {
                    j["certify_depth"] = depth;
                    j["tail"] = rounded(box->tail);
                }
                out << j.dump() << "\n";
            } else {
                print_extent(out, e);
                if (box) {
                    out << "certify depth = " << depth << ", tail = " << format_value(box->tail) << "\n";
                }
            }
        } else if (app.got_subcommand(crit)) {
            check_theta(theta);
            const CriticalResult c = critical(kind, theta);
            if (as_json) {
                out << critical_json(c).dump() << "\n";
            } else if (c.status == CriticalStatus::Found) {
                out << critical_symbol(kind) << " = " << format_value(*c.r_value) << " ("
                    << to_string(c.method) << ")\n"
                    << "residual = " << *c.residual << "\n";
                if (c.extra_sign_changes > 0) {
                    out << "extra sign changes = " << c.extra_sign_changes << "\n";
                }
            } else {
                out << critical_symbol(kind) << ": " << to_string(c.status) << "\n";
            }
        } else if (app.got_subcommand(sw)) {
            check_theta(from);
            check_theta(to);
            if (workers == 0) {
                workers = std::max(1u, std::thread::hardware_concurrency());
            }
            const auto rows = sweep(kind, from, to, step, workers);
            const std::string csv = sweep_csv(rows, quantity);
            if (!svg_path.empty()) {
                const auto samples = sweep_samples(rows, quantity);
                const std::string what = quantity == SweepQuantity::Numerator
                                             ? "N(theta)"
                                             : std::string(critical_symbol(kind));
                PlotSpec ps{what + " (" + std::string(to_string(kind)) + ")", "theta (degrees)", what};
                write_file(svg_path, plot_function(samples, ps));
            }
            if (out_path.empty()) {
                out << csv;
            } else {
                write_file(out_path, csv);
            }
        } else if (app.got_subcommand(ren)) {
            check_theta(theta);
            check_r(r);
            SceneSpec scene{TreeParams(theta, r), render_depth, {}, width, height, margin};
            for (const auto& h : highlights) {
                auto [a, color] = parse_highlight(h);
                scene.highlights.push_back({std::move(a), std::move(color)});
            }
            write_file(out_path, render_tree(scene));
        } else if (app.got_subcommand(cls)) {
            check_theta(theta);
            check_r(r);
            const OverlapClass c = classify_overlap(TreeParams(theta, r), classify_depth, tol);
            if (as_json) {
                json j;
                j["kind"] = std::string(to_string(c.kind));
                j["min_separation"] = c.min_separation ? json(*c.min_separation) : json(nullptr);
                j["witness_pair"] = c.witness_pair ? json::array({format(c.witness_pair->first),
                                                                  format(c.witness_pair->second)})
                                                   : json(nullptr);
                out << j.dump() << "\n";
            } else {
                out << "class = " << to_string(c.kind) << "\n";
                if (c.min_separation) {
                    out << "min_separation = " << format_value(*c.min_separation) << "\n";
                }
                if (c.witness_pair) {
                    out << "witness_pair = " << format(c.witness_pair->first) << " "
                        << format(c.witness_pair->second) << "\n";
                }
            }
        } else if (app.got_subcommand(cert)) {
            check_theta(theta);
            check_r(r);
            const CertifiedBox box = certify_extent(TreeParams(theta, r), depth);
            if (as_json) {
                json j;
                j["depth"] = depth;
                j["tail"] = rounded(box.tail);
                j["top"] = interval_json(box.top);
                j["bottom"] = interval_json(box.bottom);
                j["right"] = interval_json(box.right);
                j["analytic"] = extent_json(box.analytic);
                j["consistent"] = box.consistent;
                out << j.dump() << "\n";
            } else {
                out << "tail = " << format_value(box.tail) << "\n"
                    << "top in " << interval_text(box.top) << " (analytic " << format_value(box.analytic.top) << ")\n"
                    << "bottom in " << interval_text(box.bottom) << " (analytic "
                    << format_value(box.analytic.bottom) << ")\n"
                    << "right in " << interval_text(box.right) << " (analytic "
                    << format_value(box.analytic.right) << ")\n"
                    << "consistent = " << (box.consistent ? "true" : "false") << "\n";
            }
        }
    } catch (const AddressParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const CLI::ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const OutputError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::logic_error& e) {
        // DomainError, out-of-range depths, bad canvas sizes
        err << "error: " << e.what() << "\n";
        return kDomain;
    }
    return kOk;
}

}  // namespace sbtree::cli
