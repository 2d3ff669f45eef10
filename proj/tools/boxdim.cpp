// boxdim: packing/box-counting dimensions of box-like planar self-affine sets.
//
// Subcommands: classify, check-rosc, proj-dims, dim, affinity, gap, render.
// Exit codes: 0 success, 2 invalid config or arguments, 3 when --strict is
// set and the run produced only non-rigorous results.

#include "boxlike/config.hpp"
#include "boxlike/ifs.hpp"
#include "boxlike/pressure.hpp"
#include "boxlike/projections.hpp"
#include "boxlike/render.hpp"
#include "boxlike/report.hpp"
#include "boxlike/version.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using namespace boxlike;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitNonRigorous = 3;

struct GlobalOptions {
    std::string config_path;
    std::string json_out;
    bool strict = false;
    int threads = 1;
};

struct DimOptionsCli {
    std::string schedule_text;
    int k_max = 0;
    double tol = 1e-10;
    std::optional<double> override_s1, override_s2;
    std::string rosc_text;
};

std::vector<int> parse_schedule(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw std::invalid_argument("bad schedule entry '" + item + "'");
        }
    }
    return out;
}

Rect parse_rosc_rect(const std::string& text) {
    std::vector<Rational> vals;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto r = Rational::parse(item);
        if (!r) throw std::invalid_argument("bad --rosc entry '" + item + "'");
        vals.push_back(*r);
    }
    if (vals.size() != 4) throw std::invalid_argument("--rosc needs x0,x1,y0,y1");
    return Rect{vals[0], vals[1], vals[2], vals[3]};
}

EstimateOptions make_estimate_options(const DimOptionsCli& dim, const GlobalOptions& global) {
    EstimateOptions opts;
    if (!dim.schedule_text.empty()) {
        opts.schedule = parse_schedule(dim.schedule_text);
    } else if (dim.k_max > 0) {
        std::vector<int> schedule;
        for (int k : {6, 12, 24, 48}) {
            if (k <= dim.k_max) schedule.push_back(k);
        }
        if (schedule.empty() || schedule.back() != dim.k_max) schedule.push_back(dim.k_max);
        opts.schedule = schedule;
    }
    opts.tol = dim.tol;
    opts.threads = global.threads;
    return opts;
}

DimOverrides make_overrides(const DimOptionsCli& dim) {
    DimOverrides o;
    o.s1 = dim.override_s1;
    o.s2 = dim.override_s2;
    return o;
}

void write_output(const nlohmann::json& doc, const GlobalOptions& global, bool to_stdout) {
    const std::string text = doc.dump(2) + "\n";
    if (!global.json_out.empty()) {
        std::ofstream out(global.json_out, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open " + global.json_out + " for writing");
        out << text;
    } else if (to_stdout) {
        std::cout << text;
    }
}

int finish(const RunReport& report, const GlobalOptions& global, bool json_to_stdout) {
    const nlohmann::json doc = report_to_json(report);
    write_output(doc, global, json_to_stdout);
    if (global.strict && !doc["warnings"].empty()) return kExitNonRigorous;
    return kExitOk;
}

int run_classify(const GlobalOptions& global) {
    const BoxLikeIFS ifs = load_ifs_config(global.config_path);
    RunReport report;
    report.ifs = ifs;
    report.system_type = classify_system(ifs);
    report.block_type = detect_block_type(ifs);

    std::cout << "system: "
              << (report.system_type == SystemType::Separated ? "separated" : "non-separated")
              << "\n";
    for (std::size_t i = 0; i < ifs.size(); ++i) {
        std::cout << "map " << i << ": class " << map_class_char(classify_map(ifs.maps[i]))
                  << " (" << dihedral_name(ifs.maps[i].iso) << ", image "
                  << image_rect(ifs.maps[i]).str() << ")\n";
    }
    std::cout << "block type: " << (report.block_type ? "yes" : "no") << "\n";
    return finish(report, global, false);
}

int run_check_rosc(const GlobalOptions& global, const std::string& rosc_text) {
    const BoxLikeIFS ifs = load_ifs_config(global.config_path);
    const Rect r = rosc_text.empty() ? unit_square() : parse_rosc_rect(rosc_text);
    RunReport report;
    report.ifs = ifs;
    report.system_type = classify_system(ifs);
    report.block_type = detect_block_type(ifs);
    report.rosc_rect = r;
    report.rosc = check_rosc(ifs, r);

    if (report.rosc->satisfied) {
        std::cout << "ROSC satisfied with R = " << r.str() << "\n";
    } else {
        std::cout << "ROSC violated with R = " << r.str() << ": "
                  << report.rosc->witness->describe() << "\n";
    }
    return finish(report, global, false);
}

int run_proj_dims(const GlobalOptions& global, const DimOptionsCli& dim) {
    const BoxLikeIFS ifs = load_ifs_config(global.config_path);
    RunReport report;
    report.ifs = ifs;
    report.system_type = classify_system(ifs);
    report.block_type = detect_block_type(ifs);
    report.projections = projection_dims(ifs, make_overrides(dim));

    std::cout << "s1 = " << round_sig(report.projections->s1) << " ("
              << proj_method_name(report.projections->method_s1) << ")\n";
    std::cout << "s2 = " << round_sig(report.projections->s2) << " ("
              << proj_method_name(report.projections->method_s2) << ")\n";
    std::cout << "rigorous: " << (report.projections->rigorous ? "yes" : "no") << "\n";
    return finish(report, global, false);
}

int run_dim(const GlobalOptions& global, const DimOptionsCli& dim, bool affinity_only) {
    const BoxLikeIFS ifs = load_ifs_config(global.config_path);
    const EstimateOptions opts = make_estimate_options(dim, global);

    RunReport report;
    report.ifs = ifs;
    report.system_type = classify_system(ifs);
    report.block_type = detect_block_type(ifs);

    if (affinity_only) {
        report.affinity = affinity_dimension(ifs, opts);
        return finish(report, global, true);
    }

    const Rect rosc_rect =
        dim.rosc_text.empty() ? unit_square() : parse_rosc_rect(dim.rosc_text);
    report.rosc_rect = rosc_rect;
    report.rosc = check_rosc(ifs, rosc_rect);
    report.projections = projection_dims(ifs, make_overrides(dim));
    report.dimension = estimate_dimension(ifs, *report.projections, opts);
    report.affinity = affinity_dimension(ifs, opts);
    report.gap = gap_diagnostic(ifs, *report.projections, opts.schedule.front(), opts);
    return finish(report, global, true);
}

int run_gap(const GlobalOptions& global, const DimOptionsCli& dim, int level) {
    const BoxLikeIFS ifs = load_ifs_config(global.config_path);
    EstimateOptions opts = make_estimate_options(dim, global);
    RunReport report;
    report.ifs = ifs;
    report.system_type = classify_system(ifs);
    report.block_type = detect_block_type(ifs);
    report.projections = projection_dims(ifs, make_overrides(dim));
    report.gap = gap_diagnostic(ifs, *report.projections, level, opts);

    const GapReport& g = *report.gap;
    std::cout << "level k = " << g.k << ", affinity upper bound d_hat = " << round_sig(g.d_hat)
              << ", epsilon = " << round_sig(g.epsilon) << "\n";
    if (g.epsilon > 0.0) {
        std::cout << "eta_hat = " << round_sig(g.eta_hat) << ", bound = " << round_sig(g.bound)
                  << "\n";
    }
    std::cout << (g.gap_detected ? "gap detected: dimension is strictly below the affinity bound"
                                 : "no gap certified")
              << "\n";
    return finish(report, global, false);
}

int run_render(const GlobalOptions& global, int level, const std::string& out_path,
               const SvgStyle& style, int depth_guard) {
    const BoxLikeIFS ifs = load_ifs_config(global.config_path);
    const std::vector<OrientedRect> rects = level_rects(ifs, level, depth_guard);
    emit_svg(rects, out_path, style);
    std::cout << "wrote " << rects.size() << " rectangles to " << out_path << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"box-counting/packing dimensions of box-like planar self-affine sets"};
    app.set_version_flag("--version", std::string(kToolVersion));
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    GlobalOptions global;
    app.add_option("--config", global.config_path, "IFS config file (TOML)");
    app.add_option("--json-out", global.json_out, "write the JSON report to this file");
    app.add_flag("--strict", global.strict, "exit 3 when results carry non-rigorous flags");
    app.add_option("--threads", global.threads, "worker threads for level sums")
        ->check(CLI::PositiveNumber);

    DimOptionsCli dim;
    int gap_level = 6;
    int render_level = 1;
    int depth_guard = kDefaultDepthGuard;
    std::string render_out;
    SvgStyle style;

    CLI::App* classify = app.add_subcommand("classify", "system type, per-map classes, block type");
    CLI::App* check_rosc_cmd =
        app.add_subcommand("check-rosc", "verify the rectangular open set condition");
    check_rosc_cmd->add_option("--rosc", dim.rosc_text, "rectangle x0,x1,y0,y1 (default unit square)");
    CLI::App* proj = app.add_subcommand("proj-dims", "projection dimensions s1, s2");
    CLI::App* dim_cmd = app.add_subcommand("dim", "full pipeline: dimension report (JSON)");
    CLI::App* affinity_cmd = app.add_subcommand("affinity", "affinity dimension estimate (JSON)");
    CLI::App* gap_cmd = app.add_subcommand("gap", "dimension-gap diagnostic");
    CLI::App* render_cmd = app.add_subcommand("render", "SVG of one construction level");

    for (CLI::App* cmd : {proj, dim_cmd, gap_cmd}) {
        cmd->add_option("--override-s1", dim.override_s1, "use this s1 instead of solving");
        cmd->add_option("--override-s2", dim.override_s2, "use this s2 instead of solving");
    }
    for (CLI::App* cmd : {dim_cmd, affinity_cmd, gap_cmd}) {
        cmd->add_option("--schedule", dim.schedule_text, "comma-separated levels (default 6,12,24,48)");
        cmd->add_option("--k-max", dim.k_max, "truncate the default schedule at this level");
        cmd->add_option("--tol", dim.tol, "bisection tolerance (default 1e-10)");
    }
    dim_cmd->add_option("--rosc", dim.rosc_text, "ROSC rectangle x0,x1,y0,y1 (default unit square)");
    gap_cmd->add_option("--k", gap_level, "probe level (default 6)");

    render_cmd->add_option("--level", render_level, "construction level")->required();
    render_cmd->add_option("--out", render_out, "output SVG path")->required();
    render_cmd->add_option("--viewport", style.viewport, "pixel size (default 800)");
    render_cmd->add_option("--fill", style.fill, "rectangle fill color");
    render_cmd->add_option("--opacity", style.opacity, "fill opacity");
    render_cmd->add_option("--depth-guard", depth_guard, "max allowed level (default 10)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (global.config_path.empty()) throw std::invalid_argument("--config is required");
        if (classify->parsed()) return run_classify(global);
        if (check_rosc_cmd->parsed()) return run_check_rosc(global, dim.rosc_text);
        if (proj->parsed()) return run_proj_dims(global, dim);
        if (dim_cmd->parsed()) return run_dim(global, dim, false);
        if (affinity_cmd->parsed()) return run_dim(global, dim, true);
        if (gap_cmd->parsed()) return run_gap(global, dim, gap_level);
        if (render_cmd->parsed()) return run_render(global, render_level, render_out, style, depth_guard);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kExitOk;
}
