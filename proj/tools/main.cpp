// Command-line driver for the reference-point quality-indicator library.

#include <CLI11.hpp>
#include <iostream>

#include "rpqi/io.hpp"

namespace {

using rpqi::ExperimentConfig;

struct RawOptions {
    std::string preset;
    std::string config_file;
    std::string problem;
    int m = 0;
    std::string layout;
    std::string z, w, hv_ref;
    double rho = -1, zeta = -1, r = -1, zw_offset = -1;
    double pmod_alpha = -1, pmda_alpha = -1, pmda_gamma = -1;
    bool r_metric_anchor_from_set = false;
    std::vector<std::string> sets;
    std::string indicators;
    std::string sweep;
    std::string sweep_from, sweep_to;
    double sweep_step = -1;
    long long sample_size = -1, front_size = -1, n_dense = -1;
    std::string roi_kind;
    std::string out;
};

void add_common_options(CLI::App* cmd, RawOptions& raw) {
    cmd->add_option("--preset", raw.preset, "named scenario preset");
    cmd->add_option("--config", raw.config_file, "flat key = value configuration file");
    cmd->add_option("--problem", raw.problem, "front family: dtlz1|dtlz2|convdtlz2|zdt3");
    cmd->add_option("-m,--objectives", raw.m, "objective count (2 or 3)");
    cmd->add_option("-z,--ref-point", raw.z, "reference point, e.g. '0.5,0.5'");
    cmd->add_option("-w,--weights", raw.w, "weight vector (default: equal weights)");
    cmd->add_option("--rho", raw.rho, "augmentation coefficient")->check(CLI::PositiveNumber);
    cmd->add_option("--zeta", raw.zeta, "region-of-interest radius")->check(CLI::PositiveNumber);
    cmd->add_option("-r,--radius", raw.r, "preferred-region radius")->check(CLI::PositiveNumber);
    cmd->add_option("--zw-offset", raw.zw_offset, "worst-point offset along the unit diagonal")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--hv-ref", raw.hv_ref, "hypervolume reference point");
    cmd->add_option("--pmod-alpha", raw.pmod_alpha, "outside-region penalty factor")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--pmda-alpha", raw.pmda_alpha, "beam spread factor")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--pmda-gamma", raw.pmda_gamma, "angle penalty weight")
        ->check(CLI::PositiveNumber);
    cmd->add_flag("--r-metric-set-anchor", raw.r_metric_anchor_from_set,
                  "trim the R-metric reference set around each set's own anchor");
    cmd->add_option("--front-size", raw.front_size, "reference front sample size");
    cmd->add_option("-o,--out", raw.out, "output file ('-' for stdout)");
}

void merge(ExperimentConfig& cfg, const RawOptions& raw) {
    if (!raw.preset.empty()) cfg.apply_preset(raw.preset);
    if (!raw.config_file.empty()) cfg.apply_config_file(raw.config_file);

    // Command-line flags override preset and file values.
    std::string overrides;
    auto add = [&overrides](const std::string& key, const std::string& value) {
        overrides += key + " = " + value + "\n";
    };
    if (!raw.problem.empty()) add("problem", raw.problem);
    if (raw.m > 0) add("m", std::to_string(raw.m));
    if (!raw.layout.empty()) add("layout", raw.layout);
    if (!raw.z.empty()) add("z", raw.z);
    if (!raw.w.empty()) add("w", raw.w);
    if (raw.rho >= 0) add("rho", rpqi::format_double(raw.rho));
    if (raw.zeta >= 0) add("zeta", rpqi::format_double(raw.zeta));
    if (raw.r >= 0) add("r", rpqi::format_double(raw.r));
    if (raw.zw_offset >= 0) add("zw_offset", rpqi::format_double(raw.zw_offset));
    if (!raw.hv_ref.empty()) add("hv_ref", raw.hv_ref);
    if (raw.pmod_alpha >= 0) add("pmod_alpha", rpqi::format_double(raw.pmod_alpha));
    if (raw.pmda_alpha >= 0) add("pmda_alpha", rpqi::format_double(raw.pmda_alpha));
    if (raw.pmda_gamma >= 0) add("pmda_gamma", rpqi::format_double(raw.pmda_gamma));
    if (raw.r_metric_anchor_from_set) add("r_metric_anchor_from_set", "true");
    if (!raw.indicators.empty()) add("indicators", raw.indicators);
    if (!raw.sweep.empty()) add("sweep", raw.sweep);
    if (!raw.sweep_from.empty()) add("sweep_from", raw.sweep_from);
    if (!raw.sweep_to.empty()) add("sweep_to", raw.sweep_to);
    if (raw.sweep_step >= 0) add("sweep_step", rpqi::format_double(raw.sweep_step));
    if (raw.sample_size >= 0) add("sample_size", std::to_string(raw.sample_size));
    if (raw.front_size >= 0) add("front_size", std::to_string(raw.front_size));
    if (raw.n_dense >= 0) add("n_dense", std::to_string(raw.n_dense));
    if (!raw.roi_kind.empty()) add("roi_kind", raw.roi_kind);
    if (!raw.out.empty()) add("out", raw.out);
    if (!overrides.empty()) cfg.apply_config_text(overrides, "<cli>");
    for (const std::string& s : raw.sets) cfg.set_paths.emplace_back(s);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quality indicators for reference-point multi-objective optimization"};
    app.require_subcommand(1);

    RawOptions raw;
    std::string mode;

    CLI::App* compute = app.add_subcommand("compute", "evaluate indicators on point-set files");
    compute->add_option("sets", raw.sets, "point-set files")->required();
    compute->add_option("-i,--indicators", raw.indicators,
                        "comma-separated indicator names (default: all)");
    add_common_options(compute, raw);

    CLI::App* rank = app.add_subcommand("rank", "rank point sets by every selected indicator");
    rank->add_option("sets", raw.sets, "point-set files (or use --layout)");
    rank->add_option("--layout", raw.layout,
                     "synthetic layout: two-objective-10|zdt3-7|three-objective-13");
    rank->add_option("-i,--indicators", raw.indicators, "indicator selection");
    add_common_options(rank, raw);

    CLI::App* synth = app.add_subcommand("synth", "emit the synthetic point-set layouts");
    synth->add_option("--layout", raw.layout, "layout name")->required();
    add_common_options(synth, raw);

    CLI::App* front = app.add_subcommand("front", "emit a front sample with ideal/nadir");
    add_common_options(front, raw);

    CLI::App* roi = app.add_subcommand("roi", "emit front-sample membership for a region");
    roi->add_option("--kind", raw.roi_kind, "region kind: c|a|p")->required();
    add_common_options(roi, raw);

    CLI::App* consistency =
        app.add_subcommand("consistency", "distance-vs-scalarization rank correlation sweeps");
    consistency->add_option("--sweep", raw.sweep, "line or grid");
    consistency->add_option("--from", raw.sweep_from, "sweep start corner");
    consistency->add_option("--to", raw.sweep_to, "sweep end corner");
    consistency->add_option("--step", raw.sweep_step, "grid step");
    consistency->add_option("-n,--sample-size", raw.sample_size, "on-front sample size");
    add_common_options(consistency, raw);

    CLI::App* segments = app.add_subcommand("segments", "detect the disconnected front pieces");
    segments->add_option("--n-dense", raw.n_dense, "dense sampling resolution (>= 1e5)");
    add_common_options(segments, raw);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (compute->parsed()) mode = "compute";
    if (rank->parsed()) mode = "rank";
    if (synth->parsed()) mode = "synth";
    if (front->parsed()) mode = "front";
    if (roi->parsed()) mode = "roi";
    if (consistency->parsed()) mode = "consistency";
    if (segments->parsed()) mode = "segments";

    ExperimentConfig cfg;
    try {
        merge(cfg, raw);
        cfg.mode = mode;
        cfg.validate();
    } catch (const std::exception& e) {
        std::cerr << "configuration error: " << e.what() << '\n';
        return 2;
    }
    try {
        return rpqi::run_experiment(cfg, std::cerr);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
}
