#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "rpqi/fronts.hpp"
#include "rpqi/roi.hpp"

using namespace rpqi;

namespace {

const PointSet& dtlz2_sample() {
    static const PointSet S = sample_front({FrontProblem::Dtlz2, 2}, 1000);
    return S;
}

}  // namespace

TEST_CASE("reference-point feasibility") {
    const PointSet& S = dtlz2_sample();
    CHECK(is_feasible({0.9, 0.9}, S));
    CHECK_FALSE(is_feasible({0.5, 0.5}, S));

    // A point of the sample itself is feasible: it cannot strictly dominate
    // itself and the sample is mutually nondominated.
    for (std::size_t i = 0; i < S.size(); i += 97) {
        CHECK(is_feasible(S[i], S));
        for (const Point& other : S) CHECK_FALSE(dominates(S[i], other));
    }
}

TEST_CASE("closest-point region") {
    const PointSet& S = dtlz2_sample();
    PreferenceSpec spec = PreferenceSpec::defaults_for({0.5, 0.5});
    const RoiSample roi = roi_closest(S, spec);
    REQUIRE(roi.center.has_value());
    CHECK((*roi.center)[0] == doctest::Approx(std::sqrt(0.5)).epsilon(1e-3));
    CHECK((*roi.center)[1] == doctest::Approx(std::sqrt(0.5)).epsilon(1e-3));
    CHECK_FALSE(roi.members.empty());
    for (const Point& p : roi.members) CHECK(dist_euclid(p, *roi.center) < spec.zeta);

    // A reference point dominating the whole front pulls the center to one of
    // the extremes.
    spec = PreferenceSpec::defaults_for({-0.1, -0.1});
    const RoiSample extreme = roi_closest(S, spec);
    const bool at_extreme = (*extreme.center == Point{1.0, 0.0}) ||
                            (*extreme.center == Point{0.0, 1.0});
    CHECK(at_extreme);

    // An unbounded radius captures the whole sample.
    spec = PreferenceSpec::defaults_for({0.5, 0.5});
    spec.zeta = 1e9;
    CHECK(roi_closest(S, spec).members.size() == S.size());
}

TEST_CASE("scalarized region") {
    const PointSet& S = dtlz2_sample();
    const PreferenceSpec near_spec = PreferenceSpec::defaults_for({0.5, 0.5});
    const PreferenceSpec far_spec = PreferenceSpec::defaults_for({-0.1, -0.1});
    const RoiSample a_near = roi_asf(S, near_spec);
    const RoiSample c_near = roi_closest(S, near_spec);
    CHECK(*a_near.center == *c_near.center);
    CHECK(a_near.member_indices == c_near.member_indices);

    // With z dominating the ideal point the two centers split apart.
    const RoiSample a_far = roi_asf(S, far_spec);
    const RoiSample c_far = roi_closest(S, far_spec);
    CHECK((*a_far.center)[0] == doctest::Approx(std::sqrt(0.5)).epsilon(1e-3));
    CHECK(*a_far.center != *c_far.center);

    const PointSet single({{0.3, 0.8}});
    const RoiSample one = roi_asf(single, near_spec);
    CHECK(one.members.size() == 1);
    CHECK(*one.center == single[0]);
}

TEST_CASE("dominance region") {
    const PointSet& S = dtlz2_sample();

    // z dominating the ideal point: the region is the whole front.
    const RoiSample all = roi_dominance(S, {-0.1, -0.1});
    CHECK(all.members.size() == S.size());

    // z exactly on the front: empty region.
    const RoiSample none = roi_dominance(S, S[371]);
    CHECK(none.members.empty());

    // Infeasible z strictly inside: matches the exhaustive dominance scan.
    const RoiSample mid = roi_dominance(S, {0.5, 0.5});
    CHECK_FALSE(mid.members.empty());
    CHECK(mid.members.size() < S.size());
    std::size_t count = 0;
    for (const Point& s : S) {
        if (dominates(Point{0.5, 0.5}, s)) ++count;
    }
    CHECK(mid.members.size() == count);
    for (const Point& p : mid.members) {
        CHECK(p[0] > 0.5);
        CHECK(p[1] > 0.5);
    }
}

TEST_CASE("dominance region grows as z moves away from the front") {
    const PointSet& S = dtlz2_sample();
    std::vector<Point> zs = {{0.55, 0.55}, {0.4, 0.4}, {0.25, 0.25}, {0.1, 0.1}};
    std::size_t prev = 0;
    for (const Point& z : zs) {
        REQUIRE_FALSE(is_feasible(z, S));
        const RoiSample roi = roi_dominance(S, z);
        CHECK(roi.members.size() >= prev);
        prev = roi.members.size();
    }
    // Monotonicity in the weak-dominance sense: z' weakly dominating z keeps
    // every member.
    const auto inner = roi_dominance(S, {0.5, 0.55});
    const auto outer = roi_dominance(S, {0.45, 0.5});
    for (std::size_t idx : inner.member_indices) {
        CHECK(std::find(outer.member_indices.begin(), outer.member_indices.end(), idx) !=
              outer.member_indices.end());
    }
}

TEST_CASE("region centers coincide exactly when member sets coincide") {
    const PointSet& S = dtlz2_sample();
    for (double x : {-0.5, -0.1, 0.2, 0.5, 0.9}) {
        for (double y : {-0.5, 0.1, 0.6}) {
            PreferenceSpec spec = PreferenceSpec::defaults_for({x, y});
            const RoiSample a = roi_asf(S, spec);
            const RoiSample c = roi_closest(S, spec);
            if (*a.center == *c.center) {
                CHECK(a.member_indices == c.member_indices);
            } else {
                CHECK(a.member_indices != c.member_indices);
            }
        }
    }
}

TEST_CASE("empty sample is rejected") {
    const PreferenceSpec spec = PreferenceSpec::defaults_for({0.5, 0.5});
    CHECK_THROWS_AS((void)roi_closest(PointSet{}, spec), std::invalid_argument);
    CHECK_THROWS_AS((void)roi_asf(PointSet{}, spec), std::invalid_argument);
    CHECK_THROWS_AS((void)roi_dominance(PointSet{}, {0.5, 0.5}), std::invalid_argument);
}
