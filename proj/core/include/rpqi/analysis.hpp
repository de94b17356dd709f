#ifndef RPQI_ANALYSIS_HPP
#define RPQI_ANALYSIS_HPP

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rpqi/kary.hpp"

namespace rpqi {

/// Tie-corrected (tau-b) Kendall rank correlation of two value sequences.
/// Throws std::invalid_argument when either sequence is all-equal.
double kendall_tau(std::span<const double> u, std::span<const double> v);

/// Competition ("1224") ranks from a value vector, 1 = best. Values whose
/// relative gap is below the tolerance are grouped as ties, which keeps
/// rankings stable across floating-point noise on symmetric inputs.
std::vector<int> competition_ranks(std::span<const double> values, bool maximize,
                                   double rel_tol = 1e-9, double abs_tol = 1e-12);

/// Kendall tau between the by-distance and by-scalarized-value orderings of
/// an on-front sample.
double dist_asf_consistency(const PointSet& sample, const PreferenceSpec& spec);

struct ConsistencyEntry {
    Point z;
    double tau = 0.0;
    bool valid = false;  ///< false when tau is undefined for this z
};

/// Evaluates dist_asf_consistency for every grid reference point; failures
/// are recorded as invalid entries. Grid order is preserved; large grids are
/// evaluated in parallel.
std::vector<ConsistencyEntry> consistency_sweep(const PointSet& sample,
                                                std::span<const Point> z_grid,
                                                const PreferenceSpec& base);

/// Reference points along the segment from `from` to `to`, advancing every
/// coordinate by +-step.
std::vector<Point> line_grid(const Point& from, const Point& to, double step);

/// Two-dimensional rectangular grid over [lo, hi]^2 with the given step.
std::vector<Point> rect_grid(const Point& lo, const Point& hi, double step);

/// All indicators the ranking experiments know about.
enum class Indicator {
    Masf,
    Med,
    IgdC,
    IgdA,
    IgdP,
    HvZ,
    Pr,
    Pmod,
    IgdCf,
    HvCf,
    Pmda,
    RIgd,
    RHv,
    Eh,
    Hv,
    Igd,
};

std::string_view indicator_name(Indicator ind);
bool indicator_maximizes(Indicator ind);
std::vector<Indicator> all_indicators();
Indicator indicator_from_name(std::string_view name);

struct RankTable {
    std::vector<Indicator> columns;
    std::vector<std::vector<double>> values;  ///< [column][set]
    std::vector<std::vector<int>> ranks;      ///< [column][set]; empty on error
    std::vector<std::string> column_errors;   ///< empty string when the column succeeded
};

/// Evaluates the selected indicators over K point sets and converts each
/// column to competition ranks, orientation-aware. A column that fails keeps
/// a diagnostic instead of aborting the table.
RankTable rank_table(std::span<const PointSet> sets, const IndicatorContext& ctx,
                     std::span<const Indicator> selection);

/// 1-based indices of the sample point closest to z and of the point with
/// the minimum scalarized value (lowest index on ties).
std::pair<std::size_t, std::size_t> argmin_reports(const PointSet& sample,
                                                   const PreferenceSpec& spec);

}  // namespace rpqi

#endif  // RPQI_ANALYSIS_HPP
