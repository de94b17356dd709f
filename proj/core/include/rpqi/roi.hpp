#ifndef RPQI_ROI_HPP
#define RPQI_ROI_HPP

#include <optional>
#include <vector>

#include "rpqi/points.hpp"
#include "rpqi/scalarize.hpp"

namespace rpqi {

/// The three region-of-interest constructions over a front sample.
enum class RoiKind {
    Closest,    ///< ball around the front point closest to z
    Asf,        ///< ball around the front point with minimum scalarized value
    Dominance,  ///< front points in dominance relation with z
};

struct RoiSample {
    RoiKind kind = RoiKind::Closest;
    PointSet members;
    std::vector<std::size_t> member_indices;  ///< indices into the source sample
    std::optional<Point> center;              ///< absent for the dominance region
};

/// A reference point is feasible when it dominates no point of the front
/// sample.
bool is_feasible(const Point& z, const PointSet& S);

/// Ball of radius zeta around the sample point closest to z (lowest index on
/// distance ties).
RoiSample roi_closest(const PointSet& S, const PreferenceSpec& spec);

/// Ball of radius zeta around the sample point minimizing the achievement
/// scalarizing function (lowest index on ties).
RoiSample roi_asf(const PointSet& S, const PreferenceSpec& spec);

/// Sample points dominating z when z is feasible, otherwise the points
/// dominated by z. May be empty (z on the front or inside a gap).
RoiSample roi_dominance(const PointSet& S, const Point& z);

namespace detail {
std::size_t argmin_distance(const PointSet& S, const Point& z);
std::size_t argmin_asf(const PointSet& S, const PreferenceSpec& spec);
}  // namespace detail

}  // namespace rpqi

#endif  // RPQI_ROI_HPP
