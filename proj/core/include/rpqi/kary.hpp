#ifndef RPQI_KARY_HPP
#define RPQI_KARY_HPP

#include <span>
#include <vector>

#include "rpqi/indicators.hpp"

namespace rpqi {

/// Per-set diagnostics attached to a K-ary evaluation.
struct SetDiagnostics {
    bool trimmed_empty = false;        ///< the set lost every point before scoring
    std::size_t duplicates_removed = 0;
};

/// One value per input set, aligned with the input order.
struct KaryResult {
    std::vector<double> values;
    std::vector<SetDiagnostics> diagnostics;
};

struct CompositeFrontResult {
    KaryResult igd_cf;
    KaryResult hv_cf;
};

/// Joint evaluation against the composite front (the nondominated union of
/// all sets): each set is restricted to the ball of radius r around the
/// composite-front point closest to z, then scored by IGD against the whole
/// composite front and by hypervolume against ctx.hv_ref. Sets left empty
/// score +infinity / 0.
CompositeFrontResult composite_front_eval(std::span<const PointSet> sets,
                                          const IndicatorContext& ctx);

/// Light-beam metric: distances to the beam anchor points scaled by the
/// smallest in-cone objective value, plus an angle penalty for points outside
/// the beam cone.
KaryResult pmda(std::span<const PointSet> sets, const IndicatorContext& ctx);

struct RMetricResult {
    KaryResult r_igd;
    KaryResult r_hv;
};

/// R-metric pipeline: per set, drop points dominated within the union, trim
/// to the hypercube of half-width r around the set's best scalarized point,
/// translate that anchor onto the z -> z_w line, then score by IGD against
/// the equally trimmed reference set and by hypervolume against z_w.
RMetricResult r_metric_eval(std::span<const PointSet> sets, const IndicatorContext& ctx,
                            const PointSet& S);

/// Expanding-hypercube metric from sorted Chebyshev distances to z, with a
/// cross-set adjustment by the largest hypercube size. Sets emptied by the
/// duplicate/dominance removal score 0.
KaryResult eh(std::span<const PointSet> sets, const Point& z);

}  // namespace rpqi

#endif  // RPQI_KARY_HPP
