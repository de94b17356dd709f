// Acceptance suite: one pass/fail line per criterion, exit status = number of
// failed criteria. Expected values and tolerances are frozen from the
// published ranking tables and the derivation notes.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <random>
#include <vector>

#include "rpqi/analysis.hpp"
#include "rpqi/fronts.hpp"
#include "rpqi/io.hpp"

using namespace rpqi;

namespace {

int g_subfail = 0;

void check(bool ok, const char* what) {
    if (!ok) {
        std::printf("    FAILED: %s\n", what);
        ++g_subfail;
    }
}

double seconds_since(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

double rank_tau(const std::vector<int>& mine, const std::vector<int>& published) {
    std::vector<double> u(mine.begin(), mine.end());
    std::vector<double> v(published.begin(), published.end());
    return kendall_tau(u, v);
}

// Published rankings of the ten synthetic sets (DTLZ2, z = (0.5, 0.5)).
const std::map<Indicator, std::vector<int>> kPublished2a = {
    {Indicator::Masf, {9, 5, 2, 5, 9, 7, 4, 7, 1, 3}},
    {Indicator::Med, {10, 5, 2, 4, 9, 7, 3, 7, 1, 6}},
    {Indicator::IgdC, {9, 5, 1, 6, 10, 7, 4, 8, 3, 2}},
    {Indicator::IgdA, {9, 5, 1, 6, 10, 7, 4, 8, 3, 2}},
    {Indicator::IgdP, {9, 5, 2, 5, 9, 7, 4, 7, 3, 1}},
    {Indicator::HvZ, {5, 5, 1, 5, 5, 5, 4, 5, 3, 2}},
    {Indicator::Pr, {7, 7, 1, 7, 7, 4, 1, 4, 1, 6}},
    {Indicator::Pmod, {7, 3, 1, 5, 9, 4, 2, 8, 6, 10}},
    {Indicator::IgdCf, {4, 4, 1, 4, 4, 4, 4, 4, 3, 2}},
    {Indicator::HvCf, {4, 4, 1, 4, 4, 4, 4, 4, 3, 2}},
    {Indicator::Pmda, {10, 5, 2, 4, 9, 8, 3, 7, 1, 6}},
    {Indicator::RIgd, {6, 4, 1, 5, 7, 8, 8, 8, 2, 3}},
    {Indicator::RHv, {6, 4, 1, 4, 6, 8, 8, 8, 3, 2}},
    {Indicator::Eh, {6, 4, 2, 4, 6, 8, 8, 8, 1, 3}},
    {Indicator::Hv, {7, 3, 2, 3, 7, 9, 6, 10, 5, 1}},
    {Indicator::Igd, {9, 4, 2, 4, 9, 7, 3, 8, 6, 1}},
};

// Unique top set per column required by criterion 1 (0-based set index).
const std::map<Indicator, std::size_t> kTop2a = {
    {Indicator::Masf, 8}, {Indicator::Med, 8},  {Indicator::IgdC, 2}, {Indicator::IgdA, 2},
    {Indicator::HvZ, 2},  {Indicator::Pmod, 2}, {Indicator::RIgd, 2}, {Indicator::RHv, 2},
    {Indicator::Eh, 8},   {Indicator::Hv, 9},   {Indicator::Igd, 9},
};

struct Tables {
    std::vector<PointSet> sets;
    IndicatorContext ctx_a;   // z = (0.5, 0.5)
    IndicatorContext ctx_b;   // z = (-0.1, -0.1)
    RankTable table_a;
    RankTable table_b;
};

const Tables& dtlz2_tables() {
    static const Tables tables = [] {
        Tables t;
        const FrontModel model{FrontProblem::Dtlz2, 2};
        t.sets = synth_sets(model, SynthLayout::TwoObjective10);
        const PointSet S = sample_front(model, 1000);
        t.ctx_a = IndicatorContext::defaults_for(PreferenceSpec::defaults_for({0.5, 0.5}), S);
        t.ctx_b = IndicatorContext::defaults_for(PreferenceSpec::defaults_for({-0.1, -0.1}), S);
        const auto sel = all_indicators();
        t.table_a = rank_table(t.sets, t.ctx_a, sel);
        t.table_b = rank_table(t.sets, t.ctx_b, sel);
        return t;
    }();
    return tables;
}

bool criterion_1() {
    const auto t0 = std::chrono::steady_clock::now();
    const Tables& t = dtlz2_tables();
    const RankTable& table = t.table_a;
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
        const Indicator ind = table.columns[c];
        const std::string name(indicator_name(ind));
        if (!table.column_errors[c].empty()) {
            check(false, ("column " + name + " errored: " + table.column_errors[c]).c_str());
            continue;
        }
        const double tau = rank_tau(table.ranks[c], kPublished2a.at(ind));
        const double need = (ind == Indicator::Pmda) ? 0.7 : 0.85;
        std::printf("    %-6s tau=%.3f (need >= %.2f)\n", name.c_str(), tau, need);
        check(tau >= need, ("tau too low for " + name).c_str());
        const auto top = kTop2a.find(ind);
        if (top != kTop2a.end()) {
            std::size_t winners = 0, winner = 0;
            for (std::size_t s = 0; s < table.ranks[c].size(); ++s) {
                if (table.ranks[c][s] == 1) {
                    ++winners;
                    winner = s;
                }
            }
            const bool unique_match = winners == 1 && winner == top->second;
            check(unique_match, ("top set mismatch for " + name + " (want P" +
                                 std::to_string(top->second + 1) + ")")
                                    .c_str());
        }
    }
    const double elapsed = seconds_since(t0);
    std::printf("    runtime %.2fs (budget 10s)\n", elapsed);
    check(elapsed < 10.0, "runtime over budget");
    return true;
}

bool criterion_2() {
    const Tables& t = dtlz2_tables();
    for (Indicator ind : {Indicator::Masf, Indicator::IgdA, Indicator::RIgd, Indicator::RHv}) {
        std::size_t c = 0;
        while (t.table_a.columns[c] != ind) ++c;
        const bool same = t.table_a.ranks[c] == t.table_b.ranks[c];
        check(same, ("column " + std::string(indicator_name(ind)) +
                     " not rank-identical across the two reference points")
                        .c_str());
    }
    for (Indicator ind : {Indicator::IgdP, Indicator::Hv, Indicator::Igd}) {
        std::size_t c = 0;
        while (t.table_b.columns[c] != ind) ++c;
        check(!t.table_b.ranks[c].empty() && t.table_b.ranks[c][9] == 1,
              ("whole-front set not first for " + std::string(indicator_name(ind))).c_str());
    }
    std::size_t pr_col = 0;
    while (t.table_b.columns[pr_col] != Indicator::Pr) ++pr_col;
    bool all_tied = !t.table_b.ranks[pr_col].empty();
    for (int rk : t.table_b.ranks[pr_col]) all_tied = all_tied && rk == 1;
    check(all_tied, "PR column is not an all-way tie");
    return true;
}

bool criterion_3() {
    const auto t0 = std::chrono::steady_clock::now();
    const PointSet sample = sample_front({FrontProblem::Dtlz2, 2}, 100);
    const auto near = argmin_reports(sample, PreferenceSpec::defaults_for({0.1, 0.1}));
    const auto far = argmin_reports(sample, PreferenceSpec::defaults_for({-0.1, -0.1}));
    std::printf("    dist argmin: %zu (z=0.1), %zu (z=-0.1); asf argmin: %zu vs %zu\n",
                near.first, far.first, near.second, far.second);
    check(near.first == 50, "closest index for z=(0.1,0.1) is not 50");
    check(far.first == 1 || far.first == 100, "closest index for z=(-0.1,-0.1) not an extreme");
    check(near.second == far.second, "scalarization argmin differs between the two z");
    const double elapsed = seconds_since(t0);
    check(elapsed < 1.0, "runtime over budget");
    return true;
}

bool criterion_4() {
    const auto t0 = std::chrono::steady_clock::now();

    // Linear front: the two orderings agree everywhere on the line sweep.
    {
        const PointSet sample = sample_front({FrontProblem::Dtlz1, 2}, 100);
        const auto grid = line_grid({-3.0, 3.0}, {3.0, -3.0}, 0.01);
        const auto entries =
            consistency_sweep(sample, grid, PreferenceSpec::defaults_for({0.0, 0.0}));
        double min_tau = 2.0;
        bool all_valid = true;
        for (const auto& e : entries) {
            all_valid = all_valid && e.valid;
            if (e.valid) min_tau = std::min(min_tau, e.tau);
        }
        std::printf("    linear front line sweep: min tau %.4f over %zu points\n", min_tau,
                    entries.size());
        check(all_valid && min_tau >= 0.95, "linear front sweep dropped below 0.95");
    }

    // Nonconvex front: the line sweep's grid point nearest the (1,1) line is
    // exactly the origin; the orderings disagree there.
    {
        const PointSet sample = sample_front({FrontProblem::Dtlz2, 2}, 100);
        const auto grid = line_grid({-3.0, 3.0}, {3.0, -3.0}, 0.01);
        const auto entries =
            consistency_sweep(sample, grid, PreferenceSpec::defaults_for({0.0, 0.0}));
        const auto& at_origin = entries[300];
        std::printf("    nonconvex front at origin: tau %.4f\n",
                    at_origin.valid ? at_origin.tau : std::nan(""));
        check(at_origin.valid && at_origin.tau < 0.0,
              "no inconsistency at the grid point nearest the diagonal");

        // Robust form of the same statement on the full grid: strong
        // inconsistency sits on the z1 = z2 <= 0 ray and nowhere inside the
        // nadir-dominated quadrant.
        const auto full = rect_grid({-3.0, -3.0}, {3.0, 3.0}, 0.01);
        const auto sweep =
            consistency_sweep(sample, full, PreferenceSpec::defaults_for({0.0, 0.0}));
        double min_tau = 2.0, min_quadrant = 2.0;
        Point argmin = {0, 0};
        for (const auto& e : sweep) {
            if (!e.valid) continue;
            if (e.tau < min_tau) {
                min_tau = e.tau;
                argmin = e.z;
            }
            if (e.z[0] >= 1.0 && e.z[1] >= 1.0) min_quadrant = std::min(min_quadrant, e.tau);
        }
        std::printf("    nonconvex grid: min tau %.4f at (%.2f,%.2f)\n", min_tau, argmin[0],
                    argmin[1]);
        check(min_tau < -0.9, "grid minimum not strongly negative");
        check(argmin[0] == argmin[1] && argmin[0] <= 0.0, "grid minimum off the diagonal ray");
        check(min_quadrant > 0.0, "inconsistency inside the nadir-dominated quadrant");
        PreferenceSpec witness = PreferenceSpec::defaults_for({-0.1, -0.1});
        check(dist_asf_consistency(sample, witness) < -0.9,
              "witness z=(-0.1,-0.1) not strongly inconsistent");
    }

    // Convex front: negative correlation occurs only among reference points
    // dominated by the nadir point.
    {
        const PointSet sample = sample_front({FrontProblem::ConvDtlz2, 2}, 100);
        const auto full = rect_grid({-3.0, -3.0}, {3.0, 3.0}, 0.01);
        const auto sweep =
            consistency_sweep(sample, full, PreferenceSpec::defaults_for({0.0, 0.0}));
        std::size_t negatives_outside = 0;
        double min_inside = 2.0;
        for (const auto& e : sweep) {
            if (!e.valid) continue;
            const bool dominated_by_nadir =
                e.z[0] >= 1.0 && e.z[1] >= 1.0 && (e.z[0] > 1.0 || e.z[1] > 1.0);
            if (e.tau < 0.0 && !dominated_by_nadir) ++negatives_outside;
            if (dominated_by_nadir) min_inside = std::min(min_inside, e.tau);
        }
        std::printf("    convex grid: %zu negatives outside the quadrant, min inside %.4f\n",
                    negatives_outside, min_inside);
        check(negatives_outside == 0, "inconsistency outside the nadir-dominated region");
        check(min_inside < 0.0, "no inconsistency inside the nadir-dominated region");
    }

    const double elapsed = seconds_since(t0);
    std::printf("    runtime %.2fs (budget 60s)\n", elapsed);
    check(elapsed < 60.0, "runtime over budget");
    return true;
}

bool criterion_5() {
    const Tables& t = dtlz2_tables();
    const auto result = composite_front_eval(t.sets, t.ctx_a);
    const bool expected_empty[10] = {true, true, false, true, true, true, true, true, false, false};
    for (std::size_t i = 0; i < 10; ++i) {
        const bool inf_igd = std::isinf(result.igd_cf.values[i]);
        const bool zero_hv = result.hv_cf.values[i] == 0.0;
        if (expected_empty[i]) {
            check(inf_igd && zero_hv,
                  ("set P" + std::to_string(i + 1) + " should score (inf, 0)").c_str());
        } else {
            check(!inf_igd && !zero_hv,
                  ("set P" + std::to_string(i + 1) + " should score finite/positive").c_str());
        }
    }
    return true;
}

bool criterion_6() {
    const Tables& t = dtlz2_tables();
    for (std::size_t i : {std::size_t{0}, std::size_t{1}, std::size_t{3}, std::size_t{4}}) {
        check(hv_z(t.sets[i], t.ctx_a) == 0.0,
              ("hv_z(P" + std::to_string(i + 1) + ") should be 0").c_str());
    }
    check(hv_z(t.sets[2], t.ctx_a) > 0.0, "hv_z(P3) should be positive");
    check(is_feasible({0.9, 0.9}, t.ctx_a.front_sample), "z=(0.9,0.9) should be feasible");
    check(!is_feasible({0.5, 0.5}, t.ctx_a.front_sample), "z=(0.5,0.5) should be infeasible");
    return true;
}

bool criterion_7() {
    const FrontModel model{FrontProblem::Zdt3, 2};
    const auto sets = synth_sets(model, SynthLayout::Zdt37);
    PreferenceSpec pref = PreferenceSpec::defaults_for({0.55, 0.6});
    pref.r = 0.25;
    pref.zeta = 0.25;
    IndicatorContext ctx = IndicatorContext::defaults_for(pref, sample_front(model, 1000));
    const auto sel = all_indicators();
    const RankTable table = rank_table(sets, ctx, sel);

    const std::map<Indicator, std::size_t> winners = {
        {Indicator::Masf, 5}, {Indicator::IgdC, 5},  {Indicator::IgdA, 5},
        {Indicator::IgdP, 5}, {Indicator::HvZ, 5},   {Indicator::Pmod, 5},
        {Indicator::IgdCf, 5}, {Indicator::HvCf, 5}, {Indicator::RIgd, 5},
        {Indicator::RHv, 5},  {Indicator::Med, 2},   {Indicator::Pmda, 2},
        {Indicator::Eh, 2},
    };
    for (std::size_t c = 0; c < sel.size(); ++c) {
        const auto want = winners.find(sel[c]);
        if (want == winners.end()) continue;
        const std::string name(indicator_name(sel[c]));
        if (!table.column_errors[c].empty()) {
            check(false, ("column " + name + " errored").c_str());
            continue;
        }
        check(table.ranks[c][want->second] == 1,
              ("P" + std::to_string(want->second + 1) + " not first by " + name).c_str());
    }
    check(zdt3_segments(200001).size() == 5, "front does not split into 5 pieces");
    return true;
}

bool criterion_8() {
    std::mt19937 rng(2024);
    std::uniform_real_distribution<double> coord(0.0, 1.0);
    std::uniform_real_distribution<double> offset(1e-3, 0.3);

    // Hypervolume Pareto-compliance on randomized set-dominance pairs.
    {
        std::size_t violations = 0;
        for (int trial = 0; trial < 1000; ++trial) {
            const std::size_t m = (trial % 2 == 0) ? 2 : 3;
            std::vector<Point> better, worse;
            for (int i = 0; i < 6; ++i) {
                Point p(m);
                for (double& v : p) v = coord(rng);
                Point q = p;
                for (double& v : q) v += offset(rng);
                better.push_back(std::move(p));
                worse.push_back(std::move(q));
            }
            const Point ref(m, 2.0);
            const double hv1 = hypervolume(PointSet(std::move(better)), ref);
            const double hv2 = hypervolume(PointSet(std::move(worse)), ref);
            if (hv1 > 0.0 && hv2 > 0.0 && !(hv1 > hv2)) ++violations;
        }
        std::printf("    hypervolume compliance violations: %zu / 1000\n", violations);
        check(violations == 0, "hypervolume preferred a dominated set");
    }

    // Exact hypervolume vs Monte Carlo within 1e-2 relative, m = 2 and 3.
    for (std::size_t m : {std::size_t{2}, std::size_t{3}}) {
        std::mt19937_64 mc_rng(99 + m);
        std::vector<Point> pts;
        for (int i = 0; i < 10; ++i) {
            Point p(m);
            for (double& v : p) v = coord(rng);
            pts.push_back(std::move(p));
        }
        const PointSet P(std::move(pts));
        const Point ref(m, 1.2);
        const double exact = hypervolume(P, ref);

        Point lo(m, 1e300);
        for (const Point& p : P) {
            for (std::size_t i = 0; i < m; ++i) lo[i] = std::min(lo[i], p[i]);
        }
        double box = 1.0;
        for (std::size_t i = 0; i < m; ++i) box *= ref[i] - lo[i];
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        std::size_t hits = 0;
        const std::size_t samples = 10000000;
        Point q(m);
        for (std::size_t s = 0; s < samples; ++s) {
            for (std::size_t i = 0; i < m; ++i) q[i] = lo[i] + (ref[i] - lo[i]) * unit(mc_rng);
            for (const Point& p : P) {
                if (weakly_dominates(p, q)) {
                    ++hits;
                    break;
                }
            }
        }
        const double approx = box * static_cast<double>(hits) / static_cast<double>(samples);
        std::printf("    hypervolume m=%zu: exact %.6f vs monte-carlo %.6f\n", m, exact, approx);
        check(std::fabs(exact - approx) <= 1e-2 * exact, "exact and sampled volumes disagree");
    }

    // Scalarization order preservation on random dominated pairs.
    {
        const PreferenceSpec spec = PreferenceSpec::defaults_for({0.25, 0.75});
        std::size_t weak_bad = 0, strict_bad = 0;
        for (int trial = 0; trial < 10000; ++trial) {
            Point p1 = {coord(rng) * 3 - 1, coord(rng) * 3 - 1};
            Point p2 = p1;
            p2[0] += offset(rng);
            p2[1] += offset(rng);
            if (asf(p1, spec) > asf(p2, spec)) ++weak_bad;
            if (!(aasf(p1, spec) < aasf(p2, spec))) ++strict_bad;
        }
        std::printf("    scalarization violations: weak %zu, strict %zu / 10000\n", weak_bad,
                    strict_bad);
        check(weak_bad == 0, "weak order preservation violated");
        check(strict_bad == 0, "strict order preservation violated");
    }

    // Nondominated filter against the pairwise oracle.
    {
        std::size_t mismatches = 0;
        for (int trial = 0; trial < 200; ++trial) {
            const std::size_t m = (trial % 2 == 0) ? 2 : 3;
            std::uniform_int_distribution<std::size_t> size(1, 40);
            std::vector<Point> pts;
            const std::size_t n = size(rng);
            for (std::size_t i = 0; i < n; ++i) {
                Point p(m);
                for (double& v : p) v = coord(rng);
                pts.push_back(std::move(p));
            }
            const PointSet P(std::move(pts));
            const PointSet fast = nondominated_filter(P);
            std::vector<Point> slow;
            for (std::size_t i = 0; i < P.size(); ++i) {
                bool dominated = false;
                for (std::size_t j = 0; j < P.size(); ++j) {
                    if (j != i && dominates(P[j], P[i])) dominated = true;
                }
                if (!dominated) slow.push_back(P[i]);
            }
            if (fast.points() != slow) ++mismatches;
        }
        std::printf("    filter oracle mismatches: %zu / 200\n", mismatches);
        check(mismatches == 0, "fast filter disagreed with the pairwise oracle");
    }

    // Rank correlation against O(n^2) pair counting.
    {
        std::size_t mismatches = 0;
        std::uniform_int_distribution<int> len(2, 12);
        std::uniform_int_distribution<int> bucket(0, 4);
        for (int trial = 0; trial < 200; ++trial) {
            const int n = len(rng);
            std::vector<double> u(n), v(n);
            for (int i = 0; i < n; ++i) {
                u[i] = bucket(rng);
                v[i] = bucket(rng);
            }
            auto all_equal = [](const std::vector<double>& x) {
                return std::adjacent_find(x.begin(), x.end(), std::not_equal_to<>()) == x.end();
            };
            if (all_equal(u) || all_equal(v)) continue;
            double c = 0, d = 0, tu = 0, tv = 0;
            for (int i = 0; i < n; ++i) {
                for (int j = i + 1; j < n; ++j) {
                    const double du = u[i] - u[j], dv = v[i] - v[j];
                    if (du == 0 && dv == 0) continue;
                    if (du == 0) ++tu;
                    else if (dv == 0) ++tv;
                    else if (du * dv > 0) ++c;
                    else ++d;
                }
            }
            const double expect = (c - d) / std::sqrt((c + d + tu) * (c + d + tv));
            if (std::fabs(kendall_tau(u, v) - expect) > 1e-12) ++mismatches;
        }
        std::printf("    rank-correlation oracle mismatches: %zu / 200\n", mismatches);
        check(mismatches == 0, "rank correlation disagreed with pair counting");
    }
    return true;
}

struct Criterion {
    const char* summary;
    bool (*run)();
};

}  // namespace

int main() {
    const Criterion criteria[] = {
        {"ranking table reproduction, z=(0.5,0.5)", criterion_1},
        {"ranking table consistency, z=(-0.1,-0.1)", criterion_2},
        {"closest/scalarized argmin indices", criterion_3},
        {"distance-vs-scalarization consistency sweeps", criterion_4},
        {"composite-front degenerate scoring", criterion_5},
        {"preference-region hypervolume zeros and feasibility", criterion_6},
        {"disconnected-front ranking table", criterion_7},
        {"property suites (oracles and invariants)", criterion_8},
    };

    int failed = 0;
    int index = 0;
    for (const Criterion& crit : criteria) {
        ++index;
        g_subfail = 0;
        std::printf("criterion %d: %s\n", index, crit.summary);
        crit.run();
        if (g_subfail == 0) {
            std::printf("criterion %d: PASS\n", index);
        } else {
            std::printf("criterion %d: FAIL (%d checks)\n", index, g_subfail);
            ++failed;
        }
    }
    std::printf("%d of 8 criteria passed\n", 8 - failed);
    return failed;
}
