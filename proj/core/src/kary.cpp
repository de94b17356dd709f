#include "rpqi/kary.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace rpqi {

namespace {

// Keep the points of `set` that survive in the nondominated union. A point
// survives iff nothing in the union front dominates it (transitivity makes
// checking the front sufficient).
PointSet intersect_with_front(const PointSet& set, const PointSet& union_front) {
    PointSet kept;
    for (const Point& p : set) {
        bool dominated = false;
        for (const Point& q : union_front) {
            if (dominates(q, p)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) kept.push_back(p);
    }
    return kept;
}

// Solve A x = b for a small dense system with partial pivoting.
bool solve_linear(std::vector<std::vector<double>> A, std::vector<double> b,
                  std::vector<double>& x) {
    const std::size_t n = b.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t row = col + 1; row < n; ++row) {
            if (std::fabs(A[row][col]) > std::fabs(A[pivot][col])) pivot = row;
        }
        if (std::fabs(A[pivot][col]) < 1e-14) return false;
        std::swap(A[pivot], A[col]);
        std::swap(b[pivot], b[col]);
        for (std::size_t row = col + 1; row < n; ++row) {
            const double f = A[row][col] / A[col][col];
            for (std::size_t k = col; k < n; ++k) A[row][k] -= f * A[col][k];
            b[row] -= f * b[col];
        }
    }
    x.assign(n, 0.0);
    for (std::size_t i = n; i-- > 0;) {
        double acc = b[i];
        for (std::size_t k = i + 1; k < n; ++k) acc -= A[i][k] * x[k];
        x[i] = acc / A[i][i];
    }
    return true;
}

double angle_between(const Point& a, const Point& b) {
    double dot = 0.0, na = 0.0, nb = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        dot += a[i] * b[i];
        na += a[i] * a[i];
        nb += b[i] * b[i];
    }
    const double denom = std::sqrt(na) * std::sqrt(nb);
    if (denom == 0.0) return 0.0;
    return std::acos(std::clamp(dot / denom, -1.0, 1.0));
}

}  // namespace

CompositeFrontResult composite_front_eval(std::span<const PointSet> sets,
                                          const IndicatorContext& ctx) {
    if (sets.empty()) throw std::invalid_argument("no point sets given");
    const PointSet composite = nondominated_filter(concat(sets));
    const Point center = composite[detail::argmin_distance(composite, ctx.pref.z)];

    CompositeFrontResult out;
    for (const PointSet& set : sets) {
        PointSet inside;
        for (const Point& p : set) {
            if (dist_euclid(p, center) < ctx.pref.r) inside.push_back(p);
        }
        SetDiagnostics diag;
        diag.trimmed_empty = inside.empty();
        out.igd_cf.values.push_back(inside.empty() ? std::numeric_limits<double>::infinity()
                                                   : igd(inside, composite));
        out.hv_cf.values.push_back(inside.empty() ? 0.0 : hypervolume(inside, ctx.hv_ref));
        out.igd_cf.diagnostics.push_back(diag);
        out.hv_cf.diagnostics.push_back(diag);
    }
    return out;
}

KaryResult pmda(std::span<const PointSet> sets, const IndicatorContext& ctx) {
    if (sets.empty()) throw std::invalid_argument("no point sets given");
    const Point& z = ctx.pref.z;
    const std::size_t m = z.size();
    double z_norm = 0.0;
    for (double v : z) z_norm += v * v;
    if (z_norm == 0.0) throw std::invalid_argument("reference point at the origin");
    for (const PointSet& set : sets) {
        for (const Point& p : set) {
            detail::require_same_dim(p, z);
            for (double v : p) {
                if (v < 0.0) throw std::invalid_argument("metric assumes nonnegative objectives");
            }
        }
    }

    // Beam anchors on the hyperplane through z plus z itself.
    std::vector<Point> beams;
    for (std::size_t i = 0; i < m; ++i) {
        Point q = z;
        for (std::size_t j = 0; j < m; ++j) {
            const double e = (i == j) ? 1.0 : 0.0;
            q[j] = z[j] + ctx.pmda_alpha * (e - z[j]);
        }
        beams.push_back(std::move(q));
    }

    // Membership in the cone spanned by the beam directions: nonnegative
    // coordinates in the beam basis.
    std::vector<std::vector<double>> basis(m, std::vector<double>(m));
    for (std::size_t col = 0; col < m; ++col) {
        for (std::size_t row = 0; row < m; ++row) basis[row][col] = beams[col][row];
    }
    auto in_cone = [&](const Point& p) {
        std::vector<double> coeff;
        if (!solve_linear(basis, p, coeff)) {
            throw std::domain_error("beam directions are degenerate");
        }
        for (double c : coeff) {
            if (c < -1e-12) return false;
        }
        return true;
    };

    double beta = std::numeric_limits<double>::infinity();
    bool any_in_cone = false;
    for (const PointSet& set : sets) {
        for (const Point& p : set) {
            if (!in_cone(p)) continue;
            any_in_cone = true;
            for (double v : p) beta = std::min(beta, v);
        }
    }
    if (!any_in_cone) throw std::domain_error("no point lies inside the beam cone");
    if (!(beta > 0.0)) throw std::domain_error("cone points reach a zero objective; scaling undefined");

    std::vector<Point> anchors = beams;
    anchors.push_back(z);
    for (Point& q : anchors) {
        for (double& v : q) v *= beta;
    }

    KaryResult out;
    for (const PointSet& set : sets) {
        if (set.empty()) throw std::invalid_argument("point set is empty");
        double sum = 0.0;
        for (const Point& p : set) {
            double nearest = std::numeric_limits<double>::infinity();
            for (const Point& q : anchors) nearest = std::min(nearest, dist_euclid(p, q));
            const double theta = in_cone(p) ? 0.0 : angle_between(p, z);
            sum += nearest + ctx.pmda_gamma * theta;
        }
        out.values.push_back(sum / static_cast<double>(set.size()));
        out.diagnostics.push_back({});
    }
    return out;
}

RMetricResult r_metric_eval(std::span<const PointSet> sets, const IndicatorContext& ctx,
                            const PointSet& S) {
    if (sets.empty()) throw std::invalid_argument("no point sets given");
    ctx.pref.validate();
    const Point& z = ctx.pref.z;
    const Point& zw = ctx.pref.z_w;
    const double r = ctx.pref.r;

    const PointSet union_front = nondominated_filter(concat(sets));

    auto trim_box = [r](const PointSet& pts, const Point& anchor) {
        PointSet kept;
        for (const Point& p : pts) {
            bool inside = true;
            for (std::size_t j = 0; j < p.size(); ++j) {
                if (std::fabs(p[j] - anchor[j]) > r) {
                    inside = false;
                    break;
                }
            }
            if (inside) kept.push_back(p);
        }
        return kept;
    };

    PointSet default_trimmed_S;
    if (!ctx.r_metric_anchor_from_set) {
        if (S.empty()) throw std::invalid_argument("IGD reference set is empty");
        default_trimmed_S = trim_box(S, S[detail::argmin_asf(S, ctx.pref)]);
        if (default_trimmed_S.empty()) {
            throw std::domain_error("trimming left the reference set empty");
        }
    }

    RMetricResult out;
    for (const PointSet& set : sets) {
        const PointSet survivors = intersect_with_front(set, union_front);
        SetDiagnostics diag;
        if (survivors.empty()) {
            diag.trimmed_empty = true;
            out.r_igd.values.push_back(std::numeric_limits<double>::infinity());
            out.r_hv.values.push_back(0.0);
            out.r_igd.diagnostics.push_back(diag);
            out.r_hv.diagnostics.push_back(diag);
            continue;
        }
        const Point anchor = survivors[detail::argmin_asf(survivors, ctx.pref)];
        const PointSet trimmed = trim_box(survivors, anchor);

        // Project the anchor onto the z -> z_w line at equal scalarized value
        // and translate the trimmed set by the same offset.
        std::size_t k = 0;
        double best_ratio = -std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < z.size(); ++j) {
            const double ratio = (anchor[j] - z[j]) / (zw[j] - z[j]);
            if (ratio > best_ratio) {
                best_ratio = ratio;
                k = j;
            }
        }
        const double lambda = (anchor[k] - z[k]) / (zw[k] - z[k]);
        Point shift(z.size());
        for (std::size_t j = 0; j < z.size(); ++j) {
            shift[j] = (z[j] + lambda * (zw[j] - z[j])) - anchor[j];
        }
        PointSet shifted;
        for (const Point& p : trimmed) {
            Point q = p;
            for (std::size_t j = 0; j < q.size(); ++j) q[j] += shift[j];
            shifted.push_back(std::move(q));
        }

        diag.trimmed_empty = shifted.empty();
        const PointSet& trimmed_S =
            ctx.r_metric_anchor_from_set ? trim_box(S, anchor) : default_trimmed_S;
        if (trimmed_S.empty()) throw std::domain_error("trimming left the reference set empty");
        out.r_igd.values.push_back(shifted.empty() ? std::numeric_limits<double>::infinity()
                                                   : igd(shifted, trimmed_S));
        out.r_hv.values.push_back(shifted.empty() ? 0.0 : hypervolume(shifted, zw));
        out.r_igd.diagnostics.push_back(diag);
        out.r_hv.diagnostics.push_back(diag);
    }
    return out;
}

KaryResult eh(std::span<const PointSet> sets, const Point& z) {
    if (sets.empty()) throw std::invalid_argument("no point sets given");
    detail::require_finite(z);

    std::vector<PointSet> unique(sets.size());
    std::vector<std::size_t> removed(sets.size(), 0);
    for (std::size_t i = 0; i < sets.size(); ++i) {
        unique[i] = dedupe(sets[i]);
        removed[i] = sets[i].size() - unique[i].size();
    }
    const PointSet union_front = nondominated_filter(concat(std::span<const PointSet>(unique)));

    std::vector<std::vector<double>> cube_sizes(sets.size());
    std::vector<double> own_max(sets.size(), 0.0);
    double global_max = 0.0;
    bool any = false;
    for (std::size_t i = 0; i < sets.size(); ++i) {
        const PointSet kept = intersect_with_front(unique[i], union_front);
        for (const Point& p : kept) cube_sizes[i].push_back(dist_chebyshev(p, z));
        if (cube_sizes[i].empty()) continue;
        std::sort(cube_sizes[i].begin(), cube_sizes[i].end());
        own_max[i] = cube_sizes[i].back();
        global_max = any ? std::max(global_max, own_max[i]) : own_max[i];
        any = true;
    }

    KaryResult out;
    for (std::size_t i = 0; i < sets.size(); ++i) {
        SetDiagnostics diag;
        diag.duplicates_removed = removed[i];
        diag.trimmed_empty = cube_sizes[i].empty();
        if (cube_sizes[i].empty()) {
            out.values.push_back(0.0);
        } else {
            const std::size_t n = cube_sizes[i].size();
            double area = 0.0;
            double prev = 0.0;
            for (std::size_t l = 0; l < n; ++l) {
                area += (static_cast<double>(l + 1) / static_cast<double>(n)) *
                        (cube_sizes[i][l] - prev);
                prev = cube_sizes[i][l];
            }
            out.values.push_back(area + (global_max - own_max[i]));
        }
        out.diagnostics.push_back(diag);
    }
    return out;
}

}  // namespace rpqi
