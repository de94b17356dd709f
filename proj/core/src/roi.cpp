#include "rpqi/roi.hpp"

#include <limits>
#include <stdexcept>

namespace rpqi {

namespace detail {

std::size_t argmin_distance(const PointSet& S, const Point& z) {
    std::size_t best = 0;
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < S.size(); ++i) {
        const double d = dist_euclid(S[i], z);
        if (d < best_d) {
            best_d = d;
            best = i;
        }
    }
    return best;
}

std::size_t argmin_asf(const PointSet& S, const PreferenceSpec& spec) {
    std::size_t best = 0;
    double best_s = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < S.size(); ++i) {
        const double s = asf(S[i], spec);
        if (s < best_s) {
            best_s = s;
            best = i;
        }
    }
    return best;
}

}  // namespace detail

bool is_feasible(const Point& z, const PointSet& S) {
    for (const Point& s : S) {
        if (dominates(z, s)) return false;
    }
    return true;
}

namespace {

RoiSample ball_roi(const PointSet& S, std::size_t center_idx, double radius, RoiKind kind) {
    RoiSample roi;
    roi.kind = kind;
    roi.center = S[center_idx];
    for (std::size_t i = 0; i < S.size(); ++i) {
        if (dist_euclid(S[i], *roi.center) < radius) {
            roi.members.push_back(S[i]);
            roi.member_indices.push_back(i);
        }
    }
    return roi;
}

}  // namespace

RoiSample roi_closest(const PointSet& S, const PreferenceSpec& spec) {
    if (S.empty()) throw std::invalid_argument("front sample is empty");
    spec.validate();
    return ball_roi(S, detail::argmin_distance(S, spec.z), spec.zeta, RoiKind::Closest);
}

RoiSample roi_asf(const PointSet& S, const PreferenceSpec& spec) {
    if (S.empty()) throw std::invalid_argument("front sample is empty");
    spec.validate();
    // Zero weights break the order preservation this region relies on.
    for (double wi : spec.w) {
        if (wi == 0.0) {
            throw std::invalid_argument("scalarized region requires strictly positive weights");
        }
    }
    return ball_roi(S, detail::argmin_asf(S, spec), spec.zeta, RoiKind::Asf);
}

RoiSample roi_dominance(const PointSet& S, const Point& z) {
    if (S.empty()) throw std::invalid_argument("front sample is empty");
    RoiSample roi;
    roi.kind = RoiKind::Dominance;
    const bool feasible = is_feasible(z, S);
    for (std::size_t i = 0; i < S.size(); ++i) {
        const bool member = feasible ? dominates(S[i], z) : dominates(z, S[i]);
        if (member) {
            roi.members.push_back(S[i]);
            roi.member_indices.push_back(i);
        }
    }
    return roi;
}

}  // namespace rpqi
