#include "rpqi/indicators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace rpqi {

IndicatorContext IndicatorContext::defaults_for(PreferenceSpec pref, PointSet front_sample) {
    IndicatorContext ctx;
    const std::size_t m = pref.z.size();
    ctx.pref = std::move(pref);
    ctx.front_sample = std::move(front_sample);
    ctx.hv_ref.assign(m, 1.1);
    ctx.ideal.assign(m, 0.0);
    ctx.nadir.assign(m, 1.0);
    return ctx;
}

void IndicatorContext::validate() const {
    pref.validate();
    detail::require_finite(hv_ref);
    if (hv_ref.size() != pref.z.size()) throw std::invalid_argument("hv_ref dimension mismatch");
    if (!(pmod_alpha > 1.0)) throw std::invalid_argument("pmod_alpha must exceed 1");
    if (!(pmda_gamma > 0.0)) throw std::invalid_argument("pmda_gamma must be positive");
    if (!(pmda_alpha > 0.0)) throw std::invalid_argument("pmda_alpha must be positive");
    if (ideal.size() != nadir.size()) throw std::invalid_argument("ideal/nadir dimension mismatch");
}

namespace {

// Sort-and-sweep over the nondominated staircase. Handles dominated points
// and duplicates by skipping anything not improving f2.
double hv_2d(std::vector<Point> pts, const Point& ref) {
    std::sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) {
        return a[0] < b[0] || (a[0] == b[0] && a[1] < b[1]);
    });
    double volume = 0.0;
    double last_f2 = ref[1];
    for (const Point& p : pts) {
        if (p[1] < last_f2) {
            volume += (ref[0] - p[0]) * (last_f2 - p[1]);
            last_f2 = p[1];
        }
    }
    return volume;
}

// Sweep-plane slicing along the third objective: each slab contributes the
// 2-d hypervolume of the points active below it times the slab height.
double hv_3d(const std::vector<Point>& pts, const Point& ref) {
    std::vector<std::size_t> order(pts.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return pts[a][2] < pts[b][2]; });

    double volume = 0.0;
    std::vector<Point> active;
    for (std::size_t k = 0; k < order.size(); ++k) {
        active.push_back({pts[order[k]][0], pts[order[k]][1]});
        const double level = pts[order[k]][2];
        const double next = (k + 1 < order.size()) ? pts[order[k + 1]][2] : ref[2];
        if (next > level) {
            volume += hv_2d(active, {ref[0], ref[1]}) * (next - level);
        }
    }
    return volume;
}

}  // namespace

double hypervolume(const PointSet& P, const Point& ref) {
    detail::require_finite(ref);
    if (P.empty()) return 0.0;
    if (P.dim() != ref.size()) throw std::invalid_argument("reference point dimension mismatch");
    if (ref.size() != 2 && ref.size() != 3) {
        throw std::invalid_argument("hypervolume supports 2 or 3 objectives");
    }

    std::vector<Point> contributing;
    for (const Point& p : P) {
        bool inside = true;
        for (std::size_t i = 0; i < ref.size(); ++i) {
            if (!(p[i] < ref[i])) {
                inside = false;
                break;
            }
        }
        if (inside) contributing.push_back(p);
    }
    if (contributing.empty()) return 0.0;
    return ref.size() == 2 ? hv_2d(std::move(contributing), ref) : hv_3d(contributing, ref);
}

double igd(const PointSet& P, const PointSet& S) {
    if (S.empty()) throw std::invalid_argument("IGD reference set is empty");
    if (P.empty()) return std::numeric_limits<double>::infinity();
    if (P.dim() != S.dim()) throw std::invalid_argument("dimension mismatch");
    double sum = 0.0;
    for (const Point& s : S) {
        double best = std::numeric_limits<double>::infinity();
        for (const Point& p : P) best = std::min(best, dist_euclid(s, p));
        sum += best;
    }
    return sum / static_cast<double>(S.size());
}

double masf(const PointSet& P, const PreferenceSpec& spec) {
    if (P.empty()) throw std::invalid_argument("point set is empty");
    double best = std::numeric_limits<double>::infinity();
    for (const Point& p : P) best = std::min(best, asf(p, spec));
    return best;
}

double med(const PointSet& P, const IndicatorContext& ctx) {
    if (P.empty()) throw std::invalid_argument("point set is empty");
    const Point& z = ctx.pref.z;
    if (ctx.ideal.size() != z.size() || ctx.nadir.size() != z.size()) {
        throw std::invalid_argument("ideal/nadir dimension mismatch");
    }
    for (std::size_t i = 0; i < z.size(); ++i) {
        if (!(ctx.nadir[i] > ctx.ideal[i])) {
            throw std::invalid_argument("degenerate ideal/nadir range");
        }
    }
    double sum = 0.0;
    for (const Point& p : P) {
        detail::require_same_dim(p, z);
        double acc = 0.0;
        for (std::size_t i = 0; i < z.size(); ++i) {
            const double d = (p[i] - z[i]) / (ctx.nadir[i] - ctx.ideal[i]);
            acc += d * d;
        }
        sum += std::sqrt(acc);
    }
    return sum / static_cast<double>(P.size());
}

namespace {

PointSet igd_reference_subset(const IndicatorContext& ctx, RoiKind kind) {
    const PointSet& S = ctx.front_sample;
    if (S.empty()) throw std::invalid_argument("front sample is empty");
    PointSet subset;
    switch (kind) {
        case RoiKind::Closest: {
            const Point& c = S[detail::argmin_distance(S, ctx.pref.z)];
            for (const Point& s : S) {
                if (dist_euclid(s, c) < ctx.pref.r) subset.push_back(s);
            }
            break;
        }
        case RoiKind::Asf: {
            for (double wi : ctx.pref.w) {
                if (wi == 0.0) {
                    throw std::invalid_argument(
                        "scalarized region requires strictly positive weights");
                }
            }
            const Point& c = S[detail::argmin_asf(S, ctx.pref)];
            for (const Point& s : S) {
                if (dist_euclid(s, c) < ctx.pref.r) subset.push_back(s);
            }
            break;
        }
        case RoiKind::Dominance:
            subset = roi_dominance(S, ctx.pref.z).members;
            break;
    }
    return subset;
}

}  // namespace

double igd_roi(const PointSet& P, const IndicatorContext& ctx, RoiKind kind) {
    const PointSet subset = igd_reference_subset(ctx, kind);
    if (subset.empty()) {
        throw std::domain_error("region selected no reference points; indicator undefined");
    }
    return igd(P, subset);
}

double hv_z(const PointSet& P, const IndicatorContext& ctx) {
    const Point& z = ctx.pref.z;
    Point ref = z;
    if (!is_feasible(z, ctx.front_sample)) {
        const RoiSample roi = roi_dominance(ctx.front_sample, z);
        if (roi.members.empty()) {
            throw std::domain_error("dominance region is empty; reference point undefined");
        }
        for (std::size_t i = 0; i < ref.size(); ++i) {
            double hi = -std::numeric_limits<double>::infinity();
            for (const Point& p : roi.members) hi = std::max(hi, p[i]);
            ref[i] = hi;
        }
    }
    return hypervolume(P, ref);
}

double pr(const PointSet& P, const std::function<bool(const Point&)>& in_region) {
    if (P.empty()) throw std::invalid_argument("point set is empty");
    std::size_t count = 0;
    for (const Point& p : P) {
        if (in_region(p)) ++count;
    }
    return 100.0 * static_cast<double>(count) / static_cast<double>(P.size());
}

std::function<bool(const Point&)> pr_region(const IndicatorContext& ctx, RoiKind kind) {
    if (kind == RoiKind::Dominance) {
        const Point z = ctx.pref.z;
        const bool feasible = is_feasible(z, ctx.front_sample);
        return [z, feasible](const Point& p) {
            return feasible ? dominates(p, z) : dominates(z, p);
        };
    }
    const RoiSample roi = (kind == RoiKind::Closest) ? roi_closest(ctx.front_sample, ctx.pref)
                                                     : roi_asf(ctx.front_sample, ctx.pref);
    const Point center = *roi.center;
    const double zeta = ctx.pref.zeta;
    return [center, zeta](const Point& p) { return dist_euclid(p, center) < zeta; };
}

double pmod(const PointSet& P, const IndicatorContext& ctx) {
    if (P.empty()) throw std::invalid_argument("point set is empty");
    const Point& z = ctx.pref.z;
    double z_norm_sq = 0.0;
    for (double v : z) z_norm_sq += v * v;
    if (z_norm_sq == 0.0) throw std::invalid_argument("reference point at the origin");
    const double z_norm = std::sqrt(z_norm_sq);

    // Map every point onto the hyperplane through z orthogonal to z.
    std::vector<Point> mapped;
    mapped.reserve(P.size());
    for (const Point& p : P) {
        detail::require_same_dim(p, z);
        double proj = 0.0;
        for (std::size_t i = 0; i < z.size(); ++i) proj += (z[i] - p[i]) * z[i] / z_norm;
        Point q = p;
        for (std::size_t i = 0; i < z.size(); ++i) q[i] += proj * z[i] / z_norm;
        mapped.push_back(std::move(q));
    }

    const Point origin(z.size(), 0.0);
    double mean_term = 0.0;
    for (std::size_t i = 0; i < P.size(); ++i) {
        const double d_plane = dist_euclid(mapped[i], z);
        const double alpha = (d_plane <= ctx.pref.r) ? 1.0 : ctx.pmod_alpha;
        mean_term += d_plane + alpha * dist_euclid(P[i], origin);
    }
    mean_term /= static_cast<double>(P.size());

    double spread = 0.0;
    if (P.size() >= 2) {
        std::vector<double> nn(P.size());
        for (std::size_t i = 0; i < mapped.size(); ++i) {
            double best = std::numeric_limits<double>::infinity();
            for (std::size_t j = 0; j < mapped.size(); ++j) {
                if (j != i) best = std::min(best, dist_manhattan(mapped[i], mapped[j]));
            }
            nn[i] = best;
        }
        const double mean_nn = std::accumulate(nn.begin(), nn.end(), 0.0) /
                               static_cast<double>(nn.size());
        double ss = 0.0;
        for (double d : nn) ss += (d - mean_nn) * (d - mean_nn);
        spread = std::sqrt(ss / static_cast<double>(nn.size() - 1));
    }
    return mean_term + spread;
}

}  // namespace rpqi
