#ifndef RPQI_INDICATORS_HPP
#define RPQI_INDICATORS_HPP

#include <functional>

#include "rpqi/points.hpp"
#include "rpqi/roi.hpp"
#include "rpqi/scalarize.hpp"

namespace rpqi {

/// Shared evaluation context: the preference, the front sample used by the
/// IGD family and the region constructions, and per-indicator parameters.
struct IndicatorContext {
    PreferenceSpec pref;
    PointSet front_sample;
    Point hv_ref;   ///< hypervolume reference point, default (1.1, ..., 1.1)
    Point ideal;
    Point nadir;
    double pmod_alpha = 1.5;     ///< penalty for mapped points outside the region, > 1
    double pmda_alpha = 0.2;     ///< beam spread factor
    double pmda_gamma = 0.3183098861837907;  ///< angle penalty, 1/pi
    bool r_metric_anchor_from_set = false;   ///< trim the reference set around the
                                             ///< evaluated set's anchor instead of its own

    /// Defaults for a given preference and front sample: hv_ref = 1.1s,
    /// ideal/nadir = unit box corners.
    static IndicatorContext defaults_for(PreferenceSpec pref, PointSet front_sample);

    void validate() const;
};

/// Lebesgue measure of the region dominated by P and bounding ref. Exact
/// sweep algorithms for two and three objectives; points not dominating ref
/// contribute nothing; an empty set scores 0.
double hypervolume(const PointSet& P, const Point& ref);

/// Mean distance from each reference-set point to its nearest member of P.
/// Empty P yields +infinity; an empty reference set is an error.
double igd(const PointSet& P, const PointSet& S);

/// Minimum achievement scalarizing function value over P.
double masf(const PointSet& P, const PreferenceSpec& spec);

/// Mean ideal/nadir-normalized Euclidean distance from P to z.
double med(const PointSet& P, const IndicatorContext& ctx);

/// IGD against the reference subset selected by the given region kind
/// (radius r balls for Closest/Asf, dominance selection otherwise).
double igd_roi(const PointSet& P, const IndicatorContext& ctx, RoiKind kind);

/// Hypervolume against z itself when z is feasible, otherwise against the
/// componentwise maximum of the dominance region. Errors when that region is
/// empty.
double hv_z(const PointSet& P, const IndicatorContext& ctx);

/// Percentage of points of P satisfying the region membership predicate.
double pr(const PointSet& P, const std::function<bool(const Point&)>& in_region);

/// Region predicate for PR built from the context: a zeta-ball around the
/// region center for Closest/Asf, the dominance test against z otherwise.
std::function<bool(const Point&)> pr_region(const IndicatorContext& ctx, RoiKind kind);

/// Hyperplane-projection metric: mean of [distance of the mapped point to z
/// plus a penalized distance of the raw point to the origin] plus the
/// unbiased deviation of nearest-neighbour Manhattan distances between
/// mapped points.
double pmod(const PointSet& P, const IndicatorContext& ctx);

}  // namespace rpqi

#endif  // RPQI_INDICATORS_HPP
