#include "rpqi/fronts.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rpqi {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

// Layout constants for the synthetic ranking sets. The outer windows share
// one width and are packed from the extremes inward; the center window is
// wider and the reduced-extent variant much tighter, which separates the
// sets the way the ranking experiments need.
constexpr double kWindowWidth = 0.1;
constexpr double kWindowPitch = (1.0 - kWindowWidth) / 4.0;
constexpr double kCenterWidth = 0.18;
constexpr double kNarrowWidth = 0.02;  // reduced-extent variant of the center set
constexpr std::size_t kTwoObjSetSize = 20;

// Scenario constants for the ZDT3 layout (disconnected region of interest).
constexpr double kZdt3RefF1 = 0.55;
constexpr double kZdt3RefF2 = 0.6;
constexpr double kZdt3Radius = 0.25;

Point swap2(Point p) {
    std::swap(p[0], p[1]);
    return p;
}

bool mirror_symmetric(const FrontModel& model) {
    return model.m == 2 &&
           (model.problem == FrontProblem::Dtlz1 || model.problem == FrontProblem::Dtlz2);
}

Point self_mirror_midpoint(const FrontModel& model) {
    if (model.problem == FrontProblem::Dtlz1) return {0.5, 0.5};
    const double s = std::sqrt(0.5);
    return {s, s};
}

// Uniform parameter grid over [lo, hi], evaluated directly.
std::vector<Point> window_points(const FrontModel& model, double lo, double hi, std::size_t count) {
    std::vector<Point> pts;
    pts.reserve(count);
    for (std::size_t j = 0; j < count; ++j) {
        const double t = (count == 1) ? 0.5 * (lo + hi)
                                      : lo + (hi - lo) * static_cast<double>(j) /
                                                static_cast<double>(count - 1);
        pts.push_back(detail::front_point_2d(model, t));
    }
    return pts;
}

// For windows symmetric about t = 0.5 on a mirror-symmetric front, build the
// lower half and reflect it so equidistant pairs are bitwise ties.
std::vector<Point> symmetric_window_points(const FrontModel& model, double lo, double hi,
                                           std::size_t count) {
    std::vector<Point> pts(count);
    for (std::size_t j = 0; j < count / 2; ++j) {
        const double t = lo + (hi - lo) * static_cast<double>(j) / static_cast<double>(count - 1);
        pts[j] = detail::front_point_2d(model, t);
        pts[count - 1 - j] = swap2(pts[j]);
    }
    if (count % 2 == 1) pts[count / 2] = self_mirror_midpoint(model);
    return pts;
}

std::vector<Point> mirrored_copy(const std::vector<Point>& pts) {
    std::vector<Point> out(pts.rbegin(), pts.rend());
    for (Point& p : out) p = swap2(p);
    return out;
}

std::vector<Point> front_window(const FrontModel& model, double lo, double hi, std::size_t count) {
    if (mirror_symmetric(model) && std::fabs((lo + hi) - 1.0) < 1e-15) {
        return symmetric_window_points(model, lo, hi, count);
    }
    return window_points(model, lo, hi, count);
}

// Deterministic simplex lattice {(i, j, k) / H : i + j + k = H} in
// lexicographic (i, j) order.
std::vector<Point> simplex_lattice(int H) {
    std::vector<Point> pts;
    pts.reserve(static_cast<std::size_t>((H + 1) * (H + 2) / 2));
    for (int i = 0; i <= H; ++i) {
        for (int j = 0; j <= H - i; ++j) {
            const int k = H - i - j;
            pts.push_back({static_cast<double>(i) / H, static_cast<double>(j) / H,
                           static_cast<double>(k) / H});
        }
    }
    return pts;
}

Point project_simplex_point(const FrontModel& model, const Point& u) {
    switch (model.problem) {
        case FrontProblem::Dtlz1:
            return u;
        case FrontProblem::Dtlz2: {
            double norm = std::sqrt(u[0] * u[0] + u[1] * u[1] + u[2] * u[2]);
            return {u[0] / norm, u[1] / norm, u[2] / norm};
        }
        case FrontProblem::ConvDtlz2: {
            double norm = std::sqrt(u[0] * u[0] + u[1] * u[1] + u[2] * u[2]);
            const double s0 = u[0] / norm, s1 = u[1] / norm, s2 = u[2] / norm;
            return {s0 * s0 * s0 * s0, s1 * s1 * s1 * s1, s2 * s2};
        }
        default:
            throw std::invalid_argument("three-objective sampling is undefined for this front");
    }
}

std::vector<Point> project_all(const FrontModel& model, const std::vector<Point>& bary) {
    std::vector<Point> out;
    out.reserve(bary.size());
    for (const Point& u : bary) out.push_back(project_simplex_point(model, u));
    return out;
}

// Barycentric cluster: lattice shrunk toward an anchor.
std::vector<Point> shrunk_lattice(const Point& anchor, double spread, int H = 5) {
    std::vector<Point> out;
    for (const Point& v : simplex_lattice(H)) {
        Point u(3);
        for (int i = 0; i < 3; ++i) u[i] = anchor[i] + spread * (v[i] - anchor[i]);
        out.push_back(u);
    }
    return out;
}

// 21 barycentric points along the (a, b) edge, centered at parameter t0.
std::vector<Point> edge_strip(int a, int b, double t0, double half_extent, std::size_t count) {
    std::vector<Point> out;
    for (std::size_t j = 0; j < count; ++j) {
        const double t = t0 - half_extent +
                         2.0 * half_extent * static_cast<double>(j) / static_cast<double>(count - 1);
        Point u(3, 0.0);
        u[a] = 1.0 - t;
        u[b] = t;
        out.push_back(u);
    }
    return out;
}

double zdt3_union_length(const std::vector<Interval>& segs) {
    double len = 0.0;
    for (const Interval& s : segs) len += s.hi - s.lo;
    return len;
}

// Maps an arc position in [0, total length] onto an f1 value in the union of
// the disconnected intervals.
double zdt3_position_to_f1(const std::vector<Interval>& segs, double pos) {
    for (const Interval& s : segs) {
        const double len = s.hi - s.lo;
        if (pos <= len) return s.lo + pos;
        pos -= len;
    }
    return segs.back().hi;
}

}  // namespace

namespace detail {

double zdt3_curve(double f1) {
    return 1.0 - std::sqrt(f1) - f1 * std::sin(10.0 * std::numbers::pi * f1);
}

const std::vector<Interval>& zdt3_cached_segments() {
    static const std::vector<Interval> segs = zdt3_segments(200001);
    return segs;
}

const Zdt3Norm& zdt3_norm() {
    static const Zdt3Norm norm = [] {
        const std::vector<Interval>& segs = zdt3_cached_segments();
        Zdt3Norm n;
        n.f2_max = zdt3_curve(segs.front().lo);
        n.f2_min = zdt3_curve(segs.back().hi);
        return n;
    }();
    return norm;
}

Point front_point_2d(const FrontModel& model, double t) {
    switch (model.problem) {
        case FrontProblem::Dtlz1:
            return {t, 1.0 - t};
        case FrontProblem::Dtlz2: {
            const double theta = t * kHalfPi;
            return {std::cos(theta), std::sin(theta)};
        }
        case FrontProblem::ConvDtlz2: {
            const double theta = t * kHalfPi;
            const double c = std::cos(theta), s = std::sin(theta);
            return {c * c * c * c, s * s};
        }
        case FrontProblem::Zdt3: {
            const std::vector<Interval>& segs = zdt3_cached_segments();
            const double f1 = zdt3_position_to_f1(segs, t * zdt3_union_length(segs));
            return {f1, zdt3_norm().normalize(zdt3_curve(f1))};
        }
    }
    throw std::invalid_argument("unknown front problem");
}

}  // namespace detail

void FrontModel::validate() const {
    if (problem == FrontProblem::Zdt3) {
        if (m != 2) throw std::invalid_argument("ZDT3 front is two-objective only");
        return;
    }
    if (m != 2 && m != 3) throw std::invalid_argument("supported objective counts are 2 and 3");
}

Point front_ideal(const FrontModel& model) {
    model.validate();
    return Point(static_cast<std::size_t>(model.m), 0.0);
}

Point front_nadir(const FrontModel& model) {
    model.validate();
    return Point(static_cast<std::size_t>(model.m), 1.0);
}

PointSet sample_front(const FrontModel& model, std::size_t n) {
    model.validate();
    if (n < 2) throw std::invalid_argument("front sample needs at least 2 points");

    if (model.m == 2) {
        return PointSet(front_window(model, 0.0, 1.0, n));
    }

    // Smallest simplex lattice with at least n nodes, truncated in sweep
    // order.
    int H = 1;
    while (static_cast<std::size_t>((H + 1) * (H + 2) / 2) < n) ++H;
    std::vector<Point> bary = simplex_lattice(H);
    bary.resize(n);
    return PointSet(project_all(model, bary));
}

std::vector<Interval> zdt3_segments(std::size_t n_dense) {
    if (n_dense < 100000) throw std::invalid_argument("dense sampling needs at least 1e5 points");

    std::vector<Point> curve;
    curve.reserve(n_dense);
    for (std::size_t i = 0; i < n_dense; ++i) {
        const double f1 = static_cast<double>(i) / static_cast<double>(n_dense - 1);
        curve.push_back({f1, detail::zdt3_curve(f1)});
    }
    const PointSet survivors = nondominated_filter(PointSet(std::move(curve)));

    std::vector<Interval> segs;
    std::size_t idx = 0;
    const double step = 1.0 / static_cast<double>(n_dense - 1);
    for (std::size_t i = 0; i < survivors.size(); ++i) {
        const double f1 = survivors[i][0];
        if (i == 0 || f1 - survivors[i - 1][0] > 1.5 * step) {
            segs.push_back({f1, f1});
            idx = segs.size() - 1;
        }
        segs[idx].hi = f1;
    }
    if (segs.size() != 5) {
        throw std::runtime_error("front segmentation produced " + std::to_string(segs.size()) +
                                 " pieces instead of 5");
    }
    return segs;
}

namespace {

std::vector<PointSet> synth_two_objective_10(const FrontModel& model) {
    const std::size_t n = kTwoObjSetSize;
    auto window_start = [](int k) { return static_cast<double>(k - 1) * kWindowPitch; };

    std::vector<std::vector<Point>> raw(10);
    raw[0] = front_window(model, window_start(1), window_start(1) + kWindowWidth, n);
    raw[1] = front_window(model, window_start(2), window_start(2) + kWindowWidth, n);
    raw[2] = front_window(model, 0.5 - kCenterWidth / 2.0, 0.5 + kCenterWidth / 2.0, n);
    if (mirror_symmetric(model)) {
        raw[3] = mirrored_copy(raw[1]);
        raw[4] = mirrored_copy(raw[0]);
    } else {
        raw[3] = front_window(model, window_start(4), window_start(4) + kWindowWidth, n);
        raw[4] = front_window(model, window_start(5), window_start(5) + kWindowWidth, n);
    }

    std::vector<PointSet> sets(10);
    for (int k = 0; k < 5; ++k) sets[k] = PointSet(std::move(raw[k]));
    sets[5] = sets[1].shifted(0.1);
    sets[6] = sets[2].shifted(0.1);
    sets[7] = sets[3].shifted(0.1);
    sets[8] = PointSet(
        front_window(model, 0.5 - kNarrowWidth / 2.0, 0.5 + kNarrowWidth / 2.0, n));
    sets[9] = sample_front(model, n);
    return sets;
}

std::vector<PointSet> synth_zdt3_7(const FrontModel& model) {
    const std::size_t n = kTwoObjSetSize;
    const std::vector<Interval>& segs = detail::zdt3_cached_segments();

    std::vector<PointSet> sets(7);
    for (int k = 0; k < 5; ++k) {
        std::vector<Point> pts;
        for (std::size_t j = 0; j < n; ++j) {
            const double f1 = segs[k].lo + (segs[k].hi - segs[k].lo) * static_cast<double>(j) /
                                               static_cast<double>(n - 1);
            pts.push_back({f1, detail::zdt3_norm().normalize(detail::zdt3_curve(f1))});
        }
        sets[k] = PointSet(std::move(pts));
    }

    // Region of interest of the scenario: front points within the preferred
    // radius of the closest front point to the reference point. On this front
    // the region straddles two disconnected pieces, so the sampling positions
    // live in the arc coordinate of the piece union, never in raw f1.
    const Point ref = {kZdt3RefF1, kZdt3RefF2};
    const std::size_t n_dense = 20001;
    const PointSet dense = sample_front(model, n_dense);
    std::size_t center = 0;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < dense.size(); ++i) {
        const double d = dist_euclid(dense[i], ref);
        if (d < best) {
            best = d;
            center = i;
        }
    }
    const double arc_total = zdt3_union_length(segs);
    auto arc_at = [&](std::size_t i) {
        return arc_total * static_cast<double>(i) / static_cast<double>(n_dense - 1);
    };
    std::vector<std::pair<double, double>> runs;  // in-region pieces, arc coordinates
    bool in_run = false;
    for (std::size_t i = 0; i < dense.size(); ++i) {
        const bool inside = dist_euclid(dense[i], dense[center]) < kZdt3Radius;
        if (inside && !in_run) {
            runs.push_back({arc_at(i), arc_at(i)});
            in_run = true;
        } else if (inside) {
            runs.back().second = arc_at(i);
        } else {
            in_run = false;
        }
    }
    double total = 0.0;
    for (const auto& run : runs) total += run.second - run.first;
    std::vector<Point> roi_pts;
    for (std::size_t j = 0; j < n; ++j) {
        double pos = total * static_cast<double>(j) / static_cast<double>(n - 1);
        double arc = runs.back().second;
        for (const auto& run : runs) {
            const double len = run.second - run.first;
            if (pos <= len) {
                arc = run.first + pos;
                break;
            }
            pos -= len;
        }
        const double f1 = zdt3_position_to_f1(segs, arc);
        roi_pts.push_back({f1, detail::zdt3_norm().normalize(detail::zdt3_curve(f1))});
    }
    sets[5] = PointSet(std::move(roi_pts));
    sets[6] = sample_front(model, n);
    return sets;
}

std::vector<PointSet> synth_three_objective_13(const FrontModel& model) {
    const Point centroid = {1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0};
    const Point e1 = {1.0, 0.0, 0.0}, e2 = {0.0, 1.0, 0.0}, e3 = {0.0, 0.0, 1.0};

    std::vector<std::vector<Point>> bary(13);
    bary[0] = shrunk_lattice(e1, 0.35);                  // extreme 1
    bary[1] = edge_strip(0, 1, 0.3, 0.1, 21);            // edge sets
    bary[2] = edge_strip(0, 1, 0.7, 0.1, 21);
    bary[3] = shrunk_lattice(e2, 0.35);                  // extreme 2
    bary[4] = edge_strip(0, 2, 0.3, 0.1, 21);
    bary[5] = shrunk_lattice(centroid, 0.35);            // central cluster
    bary[6] = edge_strip(0, 2, 0.7, 0.1, 21);
    bary[7] = edge_strip(1, 2, 0.3, 0.1, 21);
    bary[8] = edge_strip(1, 2, 0.7, 0.1, 21);
    bary[9] = shrunk_lattice(e3, 0.35);                  // extreme 3
    bary[11] = shrunk_lattice(centroid, 0.15);           // reduced spread
    bary[12] = simplex_lattice(5);                       // whole front

    std::vector<PointSet> sets(13);
    for (int k = 0; k < 13; ++k) {
        if (k == 10) continue;
        sets[k] = PointSet(project_all(model, bary[k]));
    }
    sets[10] = sets[5].shifted(0.1);
    return sets;
}

}  // namespace

std::vector<PointSet> synth_sets(const FrontModel& model, SynthLayout layout) {
    model.validate();
    switch (layout) {
        case SynthLayout::TwoObjective10:
            if (model.m != 2 || model.problem == FrontProblem::Zdt3) {
                throw std::invalid_argument("layout requires a two-objective DTLZ-family front");
            }
            return synth_two_objective_10(model);
        case SynthLayout::Zdt37:
            if (model.problem != FrontProblem::Zdt3) {
                throw std::invalid_argument("layout requires the ZDT3 front");
            }
            return synth_zdt3_7(model);
        case SynthLayout::ThreeObjective13:
            if (model.m != 3) {
                throw std::invalid_argument("layout requires a three-objective front");
            }
            return synth_three_objective_13(model);
    }
    throw std::invalid_argument("unknown layout");
}

}  // namespace rpqi
