#include "rpqi/scalarize.hpp"

#include <cmath>
#include <stdexcept>

namespace rpqi {

PreferenceSpec PreferenceSpec::defaults_for(Point z) {
    if (z.size() < 2) throw std::invalid_argument("reference point needs at least 2 objectives");
    detail::require_finite(z);
    const std::size_t m = z.size();
    PreferenceSpec spec;
    spec.z = std::move(z);
    spec.w.assign(m, 1.0 / static_cast<double>(m));
    const double step = 2.0 / std::sqrt(static_cast<double>(m));
    spec.z_w = spec.z;
    for (double& v : spec.z_w) v += step;
    return spec;
}

void PreferenceSpec::validate() const {
    if (z.size() < 2) throw std::invalid_argument("reference point needs at least 2 objectives");
    detail::require_finite(z);
    if (w.size() != z.size()) throw std::invalid_argument("weight vector dimension mismatch");
    double sum = 0.0;
    for (double wi : w) {
        if (!(wi >= 0.0)) throw std::invalid_argument("weights must be nonnegative");
        sum += wi;
    }
    if (std::fabs(sum - 1.0) > 1e-12) throw std::invalid_argument("weights must sum to 1");
    if (!(rho > 0.0)) throw std::invalid_argument("rho must be positive");
    if (!(zeta > 0.0)) throw std::invalid_argument("zeta must be positive");
    if (!(r > 0.0)) throw std::invalid_argument("r must be positive");
    if (z_w.size() != z.size()) throw std::invalid_argument("worst point dimension mismatch");
    for (std::size_t i = 0; i < z.size(); ++i) {
        if (!(z_w[i] > z[i])) throw std::invalid_argument("worst point must exceed z componentwise");
    }
}

double asf(const Point& p, const PreferenceSpec& spec) {
    detail::require_same_dim(p, spec.z);
    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < p.size(); ++i) {
        best = std::max(best, spec.w[i] * (p[i] - spec.z[i]));
    }
    return best;
}

double aasf(const Point& p, const PreferenceSpec& spec) {
    detail::require_same_dim(p, spec.z);
    double sum = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) sum += p[i] - spec.z[i];
    return asf(p, spec) + spec.rho * sum;
}

}  // namespace rpqi
