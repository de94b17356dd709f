#ifndef RPQI_IO_HPP
#define RPQI_IO_HPP

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "rpqi/analysis.hpp"
#include "rpqi/fronts.hpp"

namespace rpqi {

/// Shortest decimal rendering that round-trips the exact double.
std::string format_double(double value);

/// Parses the plain-text point-set format: one point per line, coordinates
/// separated by whitespace or commas, '#' starts a comment. Errors carry the
/// offending line number.
PointSet parse_point_set(std::istream& in, const std::string& origin = "<stream>");
PointSet load_point_set(const std::filesystem::path& path);
void save_point_set(const PointSet& set, const std::filesystem::path& path);

/// Thrown for malformed configuration, before any computation starts.
class ConfigError : public std::runtime_error {
 public:
    using std::runtime_error::runtime_error;
};

/// A fully described experiment: what to run and with which parameters.
/// Built from defaults, an optional preset, an optional flat key=value file
/// and command-line overrides, in that order.
struct ExperimentConfig {
    std::string mode;  ///< compute | rank | synth | front | roi | consistency | segments

    std::optional<FrontProblem> problem;
    int m = 2;
    std::size_t front_size = 1000;
    std::optional<SynthLayout> layout;

    std::optional<Point> z;
    std::optional<std::vector<double>> weights;
    double rho = 1e-6;
    double zeta = 0.1;
    double r = 0.1;
    double zw_offset = 2.0;  ///< z_w = z + offset * unit diagonal
    std::optional<Point> hv_ref;
    double pmod_alpha = 1.5;
    double pmda_alpha = 0.2;
    double pmda_gamma = 0.3183098861837907;
    bool r_metric_anchor_from_set = false;

    std::vector<Indicator> indicators = all_indicators();
    std::vector<std::filesystem::path> set_paths;

    std::string sweep = "line";  ///< line | grid
    Point sweep_from = {-3.0, 3.0};
    Point sweep_to = {3.0, -3.0};
    double sweep_step = 0.01;
    std::size_t sample_size = 100;  ///< on-front sample for consistency sweeps

    std::string roi_kind = "c";  ///< c | a | p
    std::size_t n_dense = 200001;
    std::size_t synth_count = 0;  ///< informative; filled by layout

    std::filesystem::path out;  ///< output file or directory ("-" = stdout)

    /// Applies a named preset. Throws ConfigError for unknown names.
    void apply_preset(const std::string& name);

    /// Merges a flat key=value document.
    void apply_config_file(const std::filesystem::path& path);
    void apply_config_text(const std::string& text, const std::string& origin);

    /// Validates cross-field invariants; throws ConfigError.
    void validate() const;

    PreferenceSpec preference() const;
    IndicatorContext context() const;
    FrontModel front_model() const;
};

std::vector<std::string> preset_names();

/// Runs the configured experiment, writing artifacts to cfg.out (stdout when
/// empty or "-"). Returns the process exit status: 0 on success.
int run_experiment(const ExperimentConfig& cfg, std::ostream& log);

}  // namespace rpqi

#endif  // RPQI_IO_HPP
