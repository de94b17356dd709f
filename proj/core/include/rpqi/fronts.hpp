#ifndef RPQI_FRONTS_HPP
#define RPQI_FRONTS_HPP

#include <vector>

#include "rpqi/points.hpp"

namespace rpqi {

/// Analytic Pareto-front families. The DTLZ1 front is normalized to the unit
/// simplex, ZDT3 is normalized to the unit box; DTLZ2 and convDTLZ2 already
/// live in [0,1]^m.
enum class FrontProblem { Dtlz1, Dtlz2, ConvDtlz2, Zdt3 };

struct FrontModel {
    FrontProblem problem = FrontProblem::Dtlz2;
    int m = 2;

    /// Throws std::invalid_argument for unsupported (problem, m) pairs.
    void validate() const;
};

Point front_ideal(const FrontModel& model);
Point front_nadir(const FrontModel& model);

/// n points exactly on the front, uniform in the front parameter and indexed
/// in sweep order. Two-objective DTLZ1/DTLZ2 samples are exactly mirror
/// symmetric so equidistant ties resolve deterministically.
PointSet sample_front(const FrontModel& model, std::size_t n);

/// Closed f1-interval of one disconnected piece of the ZDT3 front.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;
};

/// Densely samples the ZDT3 curve, filters dominated points and returns the
/// maximal contiguous f1-intervals of survivors in increasing order. Throws
/// std::runtime_error when the count differs from the expected five pieces.
std::vector<Interval> zdt3_segments(std::size_t n_dense);

/// Synthetic point-set families used by the ranking experiments.
enum class SynthLayout {
    TwoObjective10,    ///< 10 sets of 20 points on a two-objective front
    Zdt37,             ///< 7 sets of 20 points on the ZDT3 front
    ThreeObjective13,  ///< 13 sets of 21 points on a three-objective front
};

std::vector<PointSet> synth_sets(const FrontModel& model, SynthLayout layout);

namespace detail {
/// Single front point at parameter t in [0,1] for two-objective models.
Point front_point_2d(const FrontModel& model, double t);
/// Scale factor mapping raw ZDT3 f2 onto [0,1].
struct Zdt3Norm {
    double f2_min = 0.0;
    double f2_max = 1.0;
    double normalize(double raw_f2) const { return (raw_f2 - f2_min) / (f2_max - f2_min); }
};
const Zdt3Norm& zdt3_norm();
const std::vector<Interval>& zdt3_cached_segments();
double zdt3_curve(double f1);
}  // namespace detail

}  // namespace rpqi

#endif  // RPQI_FRONTS_HPP
