#ifndef RPQI_SCALARIZE_HPP
#define RPQI_SCALARIZE_HPP

#include "rpqi/points.hpp"

namespace rpqi {

/// Reference-point preference: the aspiration vector z, objective weights,
/// augmentation coefficient, region radii and the worst point used by the
/// R-metric family.
struct PreferenceSpec {
    Point z;
    std::vector<double> w;  ///< nonnegative, sums to 1
    double rho = 1e-6;      ///< augmentation coefficient, > 0
    double zeta = 0.1;      ///< region-of-interest radius, > 0
    double r = 0.1;         ///< preferred-region radius, > 0
    Point z_w;              ///< worst point, componentwise > z

    /// Equal weights 1/m and z_w = z + 2u with u = (1/sqrt(m), ...).
    static PreferenceSpec defaults_for(Point z);

    /// Throws std::invalid_argument when any invariant is violated.
    void validate() const;
};

/// Achievement scalarizing function max_i w_i (p_i - z_i). May be negative
/// when p dominates z.
double asf(const Point& p, const PreferenceSpec& spec);

/// Augmented variant asf(p) + rho * sum_i (p_i - z_i); strictly
/// order-preserving under Pareto dominance for any rho > 0.
double aasf(const Point& p, const PreferenceSpec& spec);

}  // namespace rpqi

#endif  // RPQI_SCALARIZE_HPP
