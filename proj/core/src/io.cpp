#include "rpqi/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

namespace rpqi {

std::string format_double(double value) {
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    if (std::isnan(value)) return "nan";
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

namespace {

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char c : line) {
        if (c == ',' || c == ' ' || c == '\t' || c == '\r') {
            if (!cur.empty()) fields.push_back(std::move(cur));
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) fields.push_back(std::move(cur));
    return fields;
}

double parse_number(const std::string& token, const std::string& origin, std::size_t line_no) {
    double value = 0.0;
    const char* begin = token.data();
    const char* end = begin + token.size();
    const auto res = std::from_chars(begin, end, value);
    if (res.ec != std::errc() || res.ptr != end) {
        throw std::invalid_argument(origin + ":" + std::to_string(line_no) +
                                    ": not a number: '" + token + "'");
    }
    if (!std::isfinite(value)) {
        throw std::invalid_argument(origin + ":" + std::to_string(line_no) +
                                    ": non-finite value");
    }
    return value;
}

}  // namespace

PointSet parse_point_set(std::istream& in, const std::string& origin) {
    std::vector<Point> points;
    std::string line;
    std::size_t line_no = 0;
    std::size_t dim = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        const std::vector<std::string> fields = split_fields(line);
        if (fields.empty()) continue;
        Point p;
        p.reserve(fields.size());
        for (const std::string& f : fields) p.push_back(parse_number(f, origin, line_no));
        if (dim == 0) {
            dim = p.size();
            if (dim < 2) {
                throw std::invalid_argument(origin + ":" + std::to_string(line_no) +
                                            ": points need at least 2 objectives");
            }
        } else if (p.size() != dim) {
            throw std::invalid_argument(origin + ":" + std::to_string(line_no) +
                                        ": expected " + std::to_string(dim) + " values, got " +
                                        std::to_string(p.size()));
        }
        points.push_back(std::move(p));
    }
    return PointSet(std::move(points));
}

PointSet load_point_set(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path.string());
    return parse_point_set(in, path.string());
}

void save_point_set(const PointSet& set, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    for (const Point& p : set) {
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (i) out << ' ';
            out << format_double(p[i]);
        }
        out << '\n';
    }
}

namespace {

FrontProblem problem_from_name(const std::string& name) {
    if (name == "dtlz1") return FrontProblem::Dtlz1;
    if (name == "dtlz2") return FrontProblem::Dtlz2;
    if (name == "convdtlz2") return FrontProblem::ConvDtlz2;
    if (name == "zdt3") return FrontProblem::Zdt3;
    throw ConfigError("unknown problem: " + name + " (expected dtlz1|dtlz2|convdtlz2|zdt3)");
}

std::string problem_name(FrontProblem p) {
    switch (p) {
        case FrontProblem::Dtlz1: return "dtlz1";
        case FrontProblem::Dtlz2: return "dtlz2";
        case FrontProblem::ConvDtlz2: return "convdtlz2";
        case FrontProblem::Zdt3: return "zdt3";
    }
    return "?";
}

SynthLayout layout_from_name(const std::string& name) {
    if (name == "two-objective-10") return SynthLayout::TwoObjective10;
    if (name == "zdt3-7") return SynthLayout::Zdt37;
    if (name == "three-objective-13") return SynthLayout::ThreeObjective13;
    throw ConfigError("unknown layout: " + name);
}

Point parse_point_option(const std::string& text) {
    const std::vector<std::string> fields = split_fields(text);
    Point p;
    for (const std::string& f : fields) p.push_back(parse_number(f, "<option>", 1));
    if (p.size() < 2) throw ConfigError("expected at least 2 coordinates in '" + text + "'");
    return p;
}

bool parse_bool(const std::string& text) {
    if (text == "true" || text == "1" || text == "yes") return true;
    if (text == "false" || text == "0" || text == "no") return false;
    throw ConfigError("expected a boolean, got '" + text + "'");
}

}  // namespace

void ExperimentConfig::apply_preset(const std::string& name) {
    if (name == "table2a" || name == "table2b") {
        mode = "rank";
        problem = FrontProblem::Dtlz2;
        m = 2;
        layout = SynthLayout::TwoObjective10;
        z = (name == "table2a") ? Point{0.5, 0.5} : Point{-0.1, -0.1};
        return;
    }
    if (name == "tables9" || name == "zdt3-roi") {
        mode = "rank";
        problem = FrontProblem::Zdt3;
        m = 2;
        layout = SynthLayout::Zdt37;
        z = Point{0.55, 0.6};
        r = 0.25;
        zeta = 0.25;
        return;
    }
    if (name == "fig3d" || name == "figs1" || name == "fig3d-convdtlz2") {
        mode = "consistency";
        problem = (name == "figs1") ? FrontProblem::Dtlz1
                                    : (name == "fig3d" ? FrontProblem::Dtlz2
                                                       : FrontProblem::ConvDtlz2);
        m = 2;
        sweep = "line";
        sweep_from = {-3.0, 3.0};
        sweep_to = {3.0, -3.0};
        sweep_step = 0.01;
        sample_size = 100;
        return;
    }
    if (name == "grid-dtlz1" || name == "grid-dtlz2" || name == "grid-convdtlz2") {
        mode = "consistency";
        problem = problem_from_name(name.substr(5));
        m = 2;
        sweep = "grid";
        sweep_from = {-3.0, -3.0};
        sweep_to = {3.0, 3.0};
        sweep_step = 0.01;
        sample_size = 100;
        return;
    }
    throw ConfigError("unknown preset: " + name);
}

std::vector<std::string> preset_names() {
    return {"table2a", "table2b",  "tables9",   "zdt3-roi",      "fig3d",
            "figs1",   "fig3d-convdtlz2", "grid-dtlz1", "grid-dtlz2", "grid-convdtlz2"};
}

void ExperimentConfig::apply_config_text(const std::string& text, const std::string& origin) {
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos) {
            if (!split_fields(line).empty()) {
                throw ConfigError(origin + ":" + std::to_string(line_no) +
                                  ": expected 'key = value'");
            }
            continue;
        }
        auto trim = [](std::string s) {
            const auto b = s.find_first_not_of(" \t\r");
            const auto e = s.find_last_not_of(" \t\r");
            return (b == std::string::npos) ? std::string() : s.substr(b, e - b + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        try {
            if (key == "preset") apply_preset(value);
            else if (key == "mode") mode = value;
            else if (key == "problem") problem = problem_from_name(value);
            else if (key == "m") m = static_cast<int>(parse_number(value, origin, line_no));
            else if (key == "layout") layout = layout_from_name(value);
            else if (key == "z") z = parse_point_option(value);
            else if (key == "w") weights = parse_point_option(value);
            else if (key == "rho") rho = parse_number(value, origin, line_no);
            else if (key == "zeta") zeta = parse_number(value, origin, line_no);
            else if (key == "r") r = parse_number(value, origin, line_no);
            else if (key == "zw_offset") zw_offset = parse_number(value, origin, line_no);
            else if (key == "hv_ref") hv_ref = parse_point_option(value);
            else if (key == "pmod_alpha") pmod_alpha = parse_number(value, origin, line_no);
            else if (key == "pmda_alpha") pmda_alpha = parse_number(value, origin, line_no);
            else if (key == "pmda_gamma") pmda_gamma = parse_number(value, origin, line_no);
            else if (key == "r_metric_anchor_from_set") r_metric_anchor_from_set = parse_bool(value);
            else if (key == "front_size") front_size = static_cast<std::size_t>(parse_number(value, origin, line_no));
            else if (key == "sample_size") sample_size = static_cast<std::size_t>(parse_number(value, origin, line_no));
            else if (key == "n_dense") n_dense = static_cast<std::size_t>(parse_number(value, origin, line_no));
            else if (key == "sweep") sweep = value;
            else if (key == "sweep_from") sweep_from = parse_point_option(value);
            else if (key == "sweep_to") sweep_to = parse_point_option(value);
            else if (key == "sweep_step") sweep_step = parse_number(value, origin, line_no);
            else if (key == "roi_kind") roi_kind = value;
            else if (key == "out") out = value;
            else if (key == "indicators") {
                indicators.clear();
                for (const std::string& f : split_fields(value)) {
                    indicators.push_back(indicator_from_name(f));
                }
            } else if (key == "sets") {
                set_paths.clear();
                for (const std::string& f : split_fields(value)) set_paths.emplace_back(f);
            } else {
                throw ConfigError(origin + ":" + std::to_string(line_no) + ": unknown key '" +
                                  key + "'");
            }
        } catch (const std::invalid_argument& e) {
            throw ConfigError(e.what());
        }
    }
}

void ExperimentConfig::apply_config_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    apply_config_text(buf.str(), path.string());
}

void ExperimentConfig::validate() const {
    static const std::vector<std::string> modes = {"compute", "rank",        "synth", "front",
                                                   "roi",     "consistency", "segments"};
    if (std::find(modes.begin(), modes.end(), mode) == modes.end()) {
        throw ConfigError("unknown mode '" + mode + "'");
    }
    if (mode != "segments" && mode != "compute") {
        if (!problem.has_value()) throw ConfigError("a front problem is required");
        try {
            front_model().validate();
        } catch (const std::invalid_argument& e) {
            throw ConfigError(e.what());
        }
    }
    if ((mode == "rank" || mode == "compute" || mode == "roi") && !z.has_value()) {
        throw ConfigError("a reference point (z) is required");
    }
    if (z.has_value()) {
        try {
            preference().validate();
        } catch (const std::invalid_argument& e) {
            throw ConfigError(e.what());
        }
    } else {
        if (!(zeta > 0.0) || !(r > 0.0) || !(rho > 0.0)) {
            throw ConfigError("radii and rho must be positive");
        }
    }
    if (!(pmod_alpha > 1.0)) throw ConfigError("pmod_alpha must exceed 1");
    if (!(pmda_alpha > 0.0) || !(pmda_gamma > 0.0)) throw ConfigError("beam parameters must be positive");
    if (mode == "rank" && !layout.has_value() && set_paths.size() < 2) {
        throw ConfigError("ranking needs a layout or at least 2 set files");
    }
    if (mode == "compute" && set_paths.empty()) throw ConfigError("compute needs set files");
    if (mode == "roi" && roi_kind != "c" && roi_kind != "a" && roi_kind != "p") {
        throw ConfigError("roi kind must be one of c|a|p");
    }
    if (mode == "consistency" && sweep != "line" && sweep != "grid") {
        throw ConfigError("sweep must be line or grid");
    }
    if (mode == "segments" && n_dense < 100000) {
        throw ConfigError("segment detection needs n_dense >= 100000");
    }
}

FrontModel ExperimentConfig::front_model() const {
    if (!problem.has_value()) throw ConfigError("a front problem is required");
    return FrontModel{*problem, m};
}

PreferenceSpec ExperimentConfig::preference() const {
    if (!z.has_value()) throw ConfigError("a reference point (z) is required");
    PreferenceSpec pref = PreferenceSpec::defaults_for(*z);
    if (weights.has_value()) pref.w = *weights;
    pref.rho = rho;
    pref.zeta = zeta;
    pref.r = r;
    const double step = zw_offset / std::sqrt(static_cast<double>(z->size()));
    pref.z_w = *z;
    for (double& v : pref.z_w) v += step;
    return pref;
}

IndicatorContext ExperimentConfig::context() const {
    PointSet sample;
    Point ideal, nadir;
    if (problem.has_value()) {
        const FrontModel model = front_model();
        sample = sample_front(model, front_size);
        ideal = front_ideal(model);
        nadir = front_nadir(model);
    }
    IndicatorContext ctx = IndicatorContext::defaults_for(preference(), std::move(sample));
    if (!ideal.empty()) {
        ctx.ideal = ideal;
        ctx.nadir = nadir;
    }
    if (hv_ref.has_value()) ctx.hv_ref = *hv_ref;
    ctx.pmod_alpha = pmod_alpha;
    ctx.pmda_alpha = pmda_alpha;
    ctx.pmda_gamma = pmda_gamma;
    ctx.r_metric_anchor_from_set = r_metric_anchor_from_set;
    return ctx;
}

namespace {

class OutputTarget {
 public:
    explicit OutputTarget(const std::filesystem::path& path) {
        if (!path.empty() && path != "-") {
            file_.open(path);
            if (!file_) throw std::runtime_error("cannot write " + path.string());
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
    std::ofstream file_;
};

void write_table_header(std::ostream& os, std::span<const Indicator> columns) {
    os << "set";
    for (Indicator ind : columns) os << '\t' << indicator_name(ind);
    os << '\n';
}

std::vector<PointSet> gather_sets(const ExperimentConfig& cfg) {
    std::vector<PointSet> sets;
    if (cfg.layout.has_value()) {
        sets = synth_sets(cfg.front_model(), *cfg.layout);
    }
    for (const std::filesystem::path& p : cfg.set_paths) sets.push_back(load_point_set(p));
    return sets;
}

int run_rank(const ExperimentConfig& cfg, std::ostream& log) {
    const std::vector<PointSet> sets = gather_sets(cfg);
    const IndicatorContext ctx = cfg.context();
    const RankTable table = rank_table(sets, ctx, cfg.indicators);

    OutputTarget target(cfg.out);
    std::ostream& os = target.stream();
    os << "# indicator values\n";
    write_table_header(os, table.columns);
    for (std::size_t s = 0; s < sets.size(); ++s) {
        os << 'P' << (s + 1);
        for (std::size_t c = 0; c < table.columns.size(); ++c) {
            os << '\t' << (table.values[c].empty() ? "NA" : format_double(table.values[c][s]));
        }
        os << '\n';
    }
    os << "# competition ranks (1 = best)\n";
    write_table_header(os, table.columns);
    for (std::size_t s = 0; s < sets.size(); ++s) {
        os << 'P' << (s + 1);
        for (std::size_t c = 0; c < table.columns.size(); ++c) {
            if (table.ranks[c].empty()) {
                os << "\tNA";
            } else {
                os << '\t' << table.ranks[c][s];
            }
        }
        os << '\n';
    }
    bool failed = false;
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
        if (!table.column_errors[c].empty()) {
            log << "column " << indicator_name(table.columns[c])
                << " failed: " << table.column_errors[c] << '\n';
            failed = true;
        }
    }
    return failed ? 3 : 0;
}

int run_compute(const ExperimentConfig& cfg, std::ostream&) {
    std::vector<PointSet> sets;
    for (const std::filesystem::path& p : cfg.set_paths) sets.push_back(load_point_set(p));
    const IndicatorContext ctx = cfg.context();

    OutputTarget target(cfg.out);
    std::ostream& os = target.stream();
    write_table_header(os, cfg.indicators);
    std::vector<std::vector<double>> columns;
    for (Indicator ind : cfg.indicators) {
        RankTable one;
        // Reuse the tabulation path for a single column; K-ary indicators need
        // the sets jointly either way.
        std::vector<Indicator> sel = {ind};
        if (sets.size() == 1) {
            // rank_table requires K >= 2; evaluate single sets directly.
            std::vector<PointSet> twice = {sets[0], sets[0]};
            one = rank_table(twice, ctx, sel);
            if (!one.column_errors[0].empty()) throw std::runtime_error(one.column_errors[0]);
            columns.push_back({one.values[0][0]});
        } else {
            one = rank_table(sets, ctx, sel);
            if (!one.column_errors[0].empty()) throw std::runtime_error(one.column_errors[0]);
            columns.push_back(one.values[0]);
        }
    }
    for (std::size_t s = 0; s < sets.size(); ++s) {
        os << 'P' << (s + 1);
        for (const std::vector<double>& col : columns) os << '\t' << format_double(col[s]);
        os << '\n';
    }
    return 0;
}

int run_front(const ExperimentConfig& cfg, std::ostream&) {
    const FrontModel model = cfg.front_model();
    const PointSet sample = sample_front(model, cfg.front_size);
    OutputTarget target(cfg.out);
    std::ostream& os = target.stream();
    const Point ideal = front_ideal(model), nadir = front_nadir(model);
    os << "# problem " << problem_name(model.problem) << " m " << model.m << '\n';
    auto put_point = [&os](const char* tag, const Point& p) {
        os << "# " << tag;
        for (double v : p) os << ' ' << format_double(v);
        os << '\n';
    };
    put_point("ideal", ideal);
    put_point("nadir", nadir);
    for (const Point& p : sample) {
        for (std::size_t i = 0; i < p.size(); ++i) os << (i ? " " : "") << format_double(p[i]);
        os << '\n';
    }
    return 0;
}

int run_synth(const ExperimentConfig& cfg, std::ostream& log) {
    if (!cfg.layout.has_value()) throw ConfigError("synth needs a layout");
    const std::vector<PointSet> sets = synth_sets(cfg.front_model(), *cfg.layout);
    if (cfg.out.empty() || cfg.out == "-") {
        for (std::size_t s = 0; s < sets.size(); ++s) {
            std::cout << "# set P" << (s + 1) << '\n';
            for (const Point& p : sets[s]) {
                for (std::size_t i = 0; i < p.size(); ++i) {
                    std::cout << (i ? " " : "") << format_double(p[i]);
                }
                std::cout << '\n';
            }
        }
        return 0;
    }
    std::filesystem::create_directories(cfg.out);
    for (std::size_t s = 0; s < sets.size(); ++s) {
        const std::filesystem::path file = cfg.out / ("p" + std::to_string(s + 1) + ".txt");
        save_point_set(sets[s], file);
        log << "wrote " << file.string() << '\n';
    }
    return 0;
}

int run_roi(const ExperimentConfig& cfg, std::ostream&) {
    const FrontModel model = cfg.front_model();
    const PointSet sample = sample_front(model, cfg.front_size);
    const PreferenceSpec pref = cfg.preference();
    RoiSample roi;
    if (cfg.roi_kind == "c") roi = roi_closest(sample, pref);
    else if (cfg.roi_kind == "a") roi = roi_asf(sample, pref);
    else roi = roi_dominance(sample, pref.z);

    std::vector<bool> member(sample.size(), false);
    for (std::size_t idx : roi.member_indices) member[idx] = true;

    OutputTarget target(cfg.out);
    std::ostream& os = target.stream();
    if (roi.center.has_value()) {
        os << "# center";
        for (double v : *roi.center) os << ' ' << format_double(v);
        os << '\n';
    }
    os << "# feasible " << (is_feasible(pref.z, sample) ? 1 : 0) << '\n';
    for (std::size_t i = 0; i < sample.size(); ++i) {
        for (double v : sample[i]) os << format_double(v) << ' ';
        os << (member[i] ? 1 : 0) << '\n';
    }
    return 0;
}

int run_consistency(const ExperimentConfig& cfg, std::ostream&) {
    const FrontModel model = cfg.front_model();
    const PointSet sample = sample_front(model, cfg.sample_size);
    Point anchor = cfg.z.value_or(Point(static_cast<std::size_t>(model.m), 0.0));
    PreferenceSpec base = PreferenceSpec::defaults_for(anchor);
    if (cfg.weights.has_value()) base.w = *cfg.weights;

    std::vector<Point> grid;
    if (cfg.sweep == "line") {
        grid = line_grid(cfg.sweep_from, cfg.sweep_to, cfg.sweep_step);
    } else {
        Point lo = {std::min(cfg.sweep_from[0], cfg.sweep_to[0]),
                    std::min(cfg.sweep_from[1], cfg.sweep_to[1])};
        Point hi = {std::max(cfg.sweep_from[0], cfg.sweep_to[0]),
                    std::max(cfg.sweep_from[1], cfg.sweep_to[1])};
        grid = rect_grid(lo, hi, cfg.sweep_step);
    }
    const std::vector<ConsistencyEntry> entries = consistency_sweep(sample, grid, base);

    OutputTarget target(cfg.out);
    std::ostream& os = target.stream();
    os << "# z1 z2 tau\n";
    for (const ConsistencyEntry& e : entries) {
        for (double v : e.z) os << format_double(v) << ' ';
        os << (e.valid ? format_double(e.tau) : "NA") << '\n';
    }
    return 0;
}

int run_segments(const ExperimentConfig& cfg, std::ostream&) {
    const std::vector<Interval> segs = zdt3_segments(cfg.n_dense);
    OutputTarget target(cfg.out);
    std::ostream& os = target.stream();
    os << "# f1 intervals of the disconnected front pieces\n";
    for (const Interval& s : segs) {
        os << format_double(s.lo) << ' ' << format_double(s.hi) << '\n';
    }
    return 0;
}

}  // namespace

int run_experiment(const ExperimentConfig& cfg, std::ostream& log) {
    cfg.validate();
    if (cfg.weights.has_value()) {
        for (double wi : *cfg.weights) {
            if (wi == 0.0) {
                log << "warning: zero objective weight; scalarization-based regions and "
                       "indicators will reject it\n";
                break;
            }
        }
    }
    if (cfg.mode == "rank") return run_rank(cfg, log);
    if (cfg.mode == "compute") return run_compute(cfg, log);
    if (cfg.mode == "front") return run_front(cfg, log);
    if (cfg.mode == "synth") return run_synth(cfg, log);
    if (cfg.mode == "roi") return run_roi(cfg, log);
    if (cfg.mode == "consistency") return run_consistency(cfg, log);
    if (cfg.mode == "segments") return run_segments(cfg, log);
    throw ConfigError("unknown mode '" + cfg.mode + "'");
}

}  // namespace rpqi
