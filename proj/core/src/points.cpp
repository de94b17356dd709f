#include "rpqi/points.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace rpqi {

namespace detail {

void require_same_dim(const Point& a, const Point& b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("dimension mismatch between points");
    }
}

void require_finite(const Point& p) {
    for (double v : p) {
        if (!std::isfinite(v)) {
            throw std::invalid_argument("objective value is not finite");
        }
    }
}

}  // namespace detail

PointSet::PointSet(std::vector<Point> points) : points_(std::move(points)) {
    if (points_.empty()) return;
    const std::size_t m = points_.front().size();
    if (m < 2) throw std::invalid_argument("points must have at least 2 objectives");
    for (const Point& p : points_) {
        if (p.size() != m) throw std::invalid_argument("mixed dimensionality in point set");
        detail::require_finite(p);
    }
}

void PointSet::push_back(Point p) {
    if (!points_.empty() && p.size() != dim()) {
        throw std::invalid_argument("mixed dimensionality in point set");
    }
    if (points_.empty() && p.size() < 2) {
        throw std::invalid_argument("points must have at least 2 objectives");
    }
    detail::require_finite(p);
    points_.push_back(std::move(p));
}

PointSet PointSet::shifted(double offset) const {
    std::vector<Point> out = points_;
    for (Point& p : out) {
        for (double& v : p) v += offset;
    }
    return PointSet(std::move(out));
}

bool dominates(const Point& a, const Point& b) {
    detail::require_same_dim(a, b);
    bool strict = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) return false;
        if (a[i] < b[i]) strict = true;
    }
    return strict;
}

bool weakly_dominates(const Point& a, const Point& b) {
    detail::require_same_dim(a, b);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) return false;
    }
    return true;
}

namespace {

// Sweep over f1-sorted indices; a 2-d point is dominated iff some point has
// strictly smaller f1 and f2 no larger, or f1 no larger and f2 strictly
// smaller.
std::vector<bool> dominated_mask_2d(const PointSet& P) {
    const std::size_t n = P.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        return P[i][0] < P[j][0];
    });

    std::vector<bool> dominated(n, false);
    double min_f2_before = std::numeric_limits<double>::infinity();
    std::size_t g = 0;
    while (g < n) {
        std::size_t h = g;
        double group_min_f2 = std::numeric_limits<double>::infinity();
        while (h < n && P[order[h]][0] == P[order[g]][0]) {
            group_min_f2 = std::min(group_min_f2, P[order[h]][1]);
            ++h;
        }
        const double min_f2_upto = std::min(min_f2_before, group_min_f2);
        for (std::size_t k = g; k < h; ++k) {
            const double f2 = P[order[k]][1];
            if (min_f2_before <= f2 || min_f2_upto < f2) dominated[order[k]] = true;
        }
        min_f2_before = min_f2_upto;
        g = h;
    }
    return dominated;
}

std::vector<bool> dominated_mask_pairwise(const PointSet& P) {
    const std::size_t n = P.size();
    std::vector<bool> dominated(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n && !dominated[i]; ++j) {
            if (j != i && dominates(P[j], P[i])) dominated[i] = true;
        }
    }
    return dominated;
}

}  // namespace

PointSet nondominated_filter(const PointSet& P) {
    if (P.empty()) return P;
    const std::vector<bool> dominated =
        (P.dim() == 2) ? dominated_mask_2d(P) : dominated_mask_pairwise(P);
    std::vector<Point> kept;
    kept.reserve(P.size());
    for (std::size_t i = 0; i < P.size(); ++i) {
        if (!dominated[i]) kept.push_back(P[i]);
    }
    return PointSet(std::move(kept));
}

PointSet dedupe(const PointSet& P) {
    std::vector<Point> kept;
    kept.reserve(P.size());
    for (const Point& p : P) {
        bool seen = false;
        for (const Point& q : kept) {
            if (p == q) {
                seen = true;
                break;
            }
        }
        if (!seen) kept.push_back(p);
    }
    return PointSet(std::move(kept));
}

double dist_euclid(const Point& a, const Point& b) {
    detail::require_same_dim(a, b);
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        sum += d * d;
    }
    return std::sqrt(sum);
}

double dist_manhattan(const Point& a, const Point& b) {
    detail::require_same_dim(a, b);
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) sum += std::fabs(a[i] - b[i]);
    return sum;
}

double dist_chebyshev(const Point& a, const Point& b) {
    detail::require_same_dim(a, b);
    double best = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) best = std::max(best, std::fabs(a[i] - b[i]));
    return best;
}

PointSet concat(std::span<const PointSet> sets) {
    std::vector<Point> all;
    for (const PointSet& s : sets) {
        all.insert(all.end(), s.begin(), s.end());
    }
    return PointSet(std::move(all));
}

}  // namespace rpqi
