#include "rpqi/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace rpqi {

namespace {

// Counts inversions of v with a merge sort over index ranges.
std::uint64_t count_inversions(std::vector<double>& v, std::vector<double>& buf, std::size_t lo,
                               std::size_t hi) {
    if (hi - lo < 2) return 0;
    const std::size_t mid = lo + (hi - lo) / 2;
    std::uint64_t count = count_inversions(v, buf, lo, mid) + count_inversions(v, buf, mid, hi);
    std::size_t a = lo, b = mid, out = lo;
    while (a < mid && b < hi) {
        if (v[b] < v[a]) {
            count += mid - a;
            buf[out++] = v[b++];
        } else {
            buf[out++] = v[a++];
        }
    }
    std::copy(v.begin() + a, v.begin() + mid, buf.begin() + out);
    std::copy(v.begin() + b, v.begin() + hi, buf.begin() + out + (mid - a));
    std::copy(buf.begin() + lo, buf.begin() + hi, v.begin() + lo);
    return count;
}

std::uint64_t tie_pairs(std::span<const double> sorted) {
    std::uint64_t total = 0;
    std::size_t i = 0;
    while (i < sorted.size()) {
        std::size_t j = i;
        while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
        const std::uint64_t g = j - i;
        total += g * (g - 1) / 2;
        i = j;
    }
    return total;
}

}  // namespace

double kendall_tau(std::span<const double> u, std::span<const double> v) {
    if (u.size() != v.size()) throw std::invalid_argument("sequence length mismatch");
    const std::size_t n = u.size();
    if (n < 2) throw std::invalid_argument("correlation needs at least 2 values");

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return u[a] < u[b] || (u[a] == u[b] && v[a] < v[b]);
    });

    // Tie bookkeeping: pairs tied in u, in v, and in both.
    std::uint64_t ties_u = 0, ties_uv = 0;
    {
        std::size_t i = 0;
        while (i < n) {
            std::size_t j = i;
            while (j < n && u[order[j]] == u[order[i]]) ++j;
            const std::uint64_t g = j - i;
            ties_u += g * (g - 1) / 2;
            std::size_t a = i;
            while (a < j) {
                std::size_t b = a;
                while (b < j && v[order[b]] == v[order[a]]) ++b;
                const std::uint64_t h = b - a;
                ties_uv += h * (h - 1) / 2;
                a = b;
            }
            i = j;
        }
    }
    std::vector<double> v_sorted(n);
    for (std::size_t i = 0; i < n; ++i) v_sorted[i] = v[order[i]];
    std::vector<double> merge_input = v_sorted;
    std::vector<double> buf(n);
    const std::uint64_t discordant = count_inversions(merge_input, buf, 0, n);

    std::sort(v_sorted.begin(), v_sorted.end());
    const std::uint64_t ties_v = tie_pairs(v_sorted);

    const std::uint64_t n0 = static_cast<std::uint64_t>(n) * (n - 1) / 2;
    if (ties_u == n0 || ties_v == n0) {
        throw std::invalid_argument("correlation undefined for an all-equal sequence");
    }
    // Sorting v ascending within u-tie groups leaves no counted inversions
    // inside those groups, so the inversion count is exactly the number of
    // discordant pairs.
    const double concordant_minus_discordant =
        static_cast<double>(n0 - ties_u - ties_v + ties_uv) - 2.0 * static_cast<double>(discordant);
    const double denom = std::sqrt(static_cast<double>(n0 - ties_u)) *
                         std::sqrt(static_cast<double>(n0 - ties_v));
    return concordant_minus_discordant / denom;
}

std::vector<int> competition_ranks(std::span<const double> values, bool maximize, double rel_tol,
                                   double abs_tol) {
    const std::size_t n = values.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return maximize ? values[a] > values[b] : values[a] < values[b];
    });

    auto tied = [&](double a, double b) {
        if (a == b) return true;  // covers equal infinities
        if (std::isinf(a) || std::isinf(b)) return false;
        const double gap = std::fabs(a - b);
        return gap <= abs_tol || gap <= rel_tol * std::max(std::fabs(a), std::fabs(b));
    };

    std::vector<int> ranks(n, 0);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        // Chain adjacent near-ties into one group.
        while (j + 1 < n && tied(values[order[j]], values[order[j + 1]])) ++j;
        for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = static_cast<int>(i) + 1;
        i = j + 1;
    }
    return ranks;
}

double dist_asf_consistency(const PointSet& sample, const PreferenceSpec& spec) {
    if (sample.size() < 2) throw std::invalid_argument("sample needs at least 2 points");
    std::vector<double> dist(sample.size()), scal(sample.size());
    for (std::size_t i = 0; i < sample.size(); ++i) {
        dist[i] = dist_euclid(sample[i], spec.z);
        scal[i] = asf(sample[i], spec);
    }
    return kendall_tau(dist, scal);
}

std::vector<ConsistencyEntry> consistency_sweep(const PointSet& sample,
                                                std::span<const Point> z_grid,
                                                const PreferenceSpec& base) {
    if (z_grid.empty()) throw std::invalid_argument("empty reference-point grid");
    std::vector<ConsistencyEntry> entries(z_grid.size());

    auto eval_range = [&](std::size_t lo, std::size_t hi) {
        PreferenceSpec spec = base;
        for (std::size_t i = lo; i < hi; ++i) {
            spec.z = z_grid[i];
            entries[i].z = z_grid[i];
            try {
                entries[i].tau = dist_asf_consistency(sample, spec);
                entries[i].valid = true;
            } catch (const std::exception&) {
                entries[i].valid = false;
            }
        }
    };

    const std::size_t hw = std::max<std::size_t>(1, std::thread::hardware_concurrency());
    const std::size_t workers = std::min<std::size_t>(hw, (z_grid.size() + 511) / 512);
    if (workers < 2) {
        eval_range(0, z_grid.size());
        return entries;
    }
    std::vector<std::thread> pool;
    const std::size_t chunk = (z_grid.size() + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t lo = w * chunk;
        const std::size_t hi = std::min(z_grid.size(), lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back(eval_range, lo, hi);
    }
    for (std::thread& t : pool) t.join();
    return entries;
}

std::vector<Point> line_grid(const Point& from, const Point& to, double step) {
    if (from.size() != to.size()) throw std::invalid_argument("endpoint dimension mismatch");
    if (!(step > 0.0)) throw std::invalid_argument("step must be positive");
    double span = 0.0;
    for (std::size_t i = 0; i < from.size(); ++i) span = std::max(span, std::fabs(to[i] - from[i]));
    const auto count = static_cast<std::size_t>(std::llround(span / step));
    std::vector<Point> grid;
    grid.reserve(count + 1);
    for (std::size_t k = 0; k <= count; ++k) {
        Point z(from.size());
        for (std::size_t i = 0; i < from.size(); ++i) {
            const double dir = (to[i] > from[i]) ? 1.0 : (to[i] < from[i] ? -1.0 : 0.0);
            z[i] = from[i] + dir * step * static_cast<double>(k);
        }
        grid.push_back(std::move(z));
    }
    return grid;
}

std::vector<Point> rect_grid(const Point& lo, const Point& hi, double step) {
    if (lo.size() != 2 || hi.size() != 2) throw std::invalid_argument("rectangular grids are 2-d");
    if (!(step > 0.0)) throw std::invalid_argument("step must be positive");
    const auto nx = static_cast<std::size_t>(std::llround((hi[0] - lo[0]) / step));
    const auto ny = static_cast<std::size_t>(std::llround((hi[1] - lo[1]) / step));
    std::vector<Point> grid;
    grid.reserve((nx + 1) * (ny + 1));
    for (std::size_t iy = 0; iy <= ny; ++iy) {
        for (std::size_t ix = 0; ix <= nx; ++ix) {
            grid.push_back({lo[0] + step * static_cast<double>(ix),
                            lo[1] + step * static_cast<double>(iy)});
        }
    }
    return grid;
}

std::string_view indicator_name(Indicator ind) {
    switch (ind) {
        case Indicator::Masf: return "MASF";
        case Indicator::Med: return "MED";
        case Indicator::IgdC: return "IGD-C";
        case Indicator::IgdA: return "IGD-A";
        case Indicator::IgdP: return "IGD-P";
        case Indicator::HvZ: return "HV-z";
        case Indicator::Pr: return "PR";
        case Indicator::Pmod: return "PMOD";
        case Indicator::IgdCf: return "IGD-CF";
        case Indicator::HvCf: return "HV-CF";
        case Indicator::Pmda: return "PMDA";
        case Indicator::RIgd: return "R-IGD";
        case Indicator::RHv: return "R-HV";
        case Indicator::Eh: return "EH";
        case Indicator::Hv: return "HV";
        case Indicator::Igd: return "IGD";
    }
    return "?";
}

bool indicator_maximizes(Indicator ind) {
    switch (ind) {
        case Indicator::HvZ:
        case Indicator::Pr:
        case Indicator::HvCf:
        case Indicator::RHv:
        case Indicator::Eh:
        case Indicator::Hv:
            return true;
        default:
            return false;
    }
}

std::vector<Indicator> all_indicators() {
    return {Indicator::Masf, Indicator::Med,  Indicator::IgdC, Indicator::IgdA,
            Indicator::IgdP, Indicator::HvZ,  Indicator::Pr,   Indicator::Pmod,
            Indicator::IgdCf, Indicator::HvCf, Indicator::Pmda, Indicator::RIgd,
            Indicator::RHv,  Indicator::Eh,   Indicator::Hv,   Indicator::Igd};
}

Indicator indicator_from_name(std::string_view name) {
    auto upper_of = [](std::string_view text) {
        std::string out(text);
        std::transform(out.begin(), out.end(), out.begin(),
                       [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
        return out;
    };
    const std::string upper = upper_of(name);
    for (Indicator ind : all_indicators()) {
        if (upper == upper_of(indicator_name(ind))) return ind;
    }
    // A couple of aliases that avoid awkward shell quoting.
    if (upper == "HVZ") return Indicator::HvZ;
    if (upper == "IGDC") return Indicator::IgdC;
    if (upper == "IGDA") return Indicator::IgdA;
    if (upper == "IGDP") return Indicator::IgdP;
    if (upper == "IGDCF") return Indicator::IgdCf;
    if (upper == "HVCF") return Indicator::HvCf;
    if (upper == "RIGD") return Indicator::RIgd;
    if (upper == "RHV") return Indicator::RHv;
    throw std::invalid_argument("unknown indicator: " + std::string(name));
}

namespace {

std::vector<double> evaluate_column(Indicator ind, std::span<const PointSet> sets,
                                    const IndicatorContext& ctx) {
    std::vector<double> column;
    column.reserve(sets.size());
    switch (ind) {
        case Indicator::Masf:
            for (const PointSet& s : sets) column.push_back(masf(s, ctx.pref));
            break;
        case Indicator::Med:
            for (const PointSet& s : sets) column.push_back(med(s, ctx));
            break;
        case Indicator::IgdC:
            for (const PointSet& s : sets) column.push_back(igd_roi(s, ctx, RoiKind::Closest));
            break;
        case Indicator::IgdA:
            for (const PointSet& s : sets) column.push_back(igd_roi(s, ctx, RoiKind::Asf));
            break;
        case Indicator::IgdP:
            for (const PointSet& s : sets) column.push_back(igd_roi(s, ctx, RoiKind::Dominance));
            break;
        case Indicator::HvZ:
            for (const PointSet& s : sets) column.push_back(hv_z(s, ctx));
            break;
        case Indicator::Pr: {
            const auto region = pr_region(ctx, RoiKind::Dominance);
            for (const PointSet& s : sets) column.push_back(pr(s, region));
            break;
        }
        case Indicator::Pmod:
            for (const PointSet& s : sets) column.push_back(pmod(s, ctx));
            break;
        case Indicator::IgdCf:
            column = composite_front_eval(sets, ctx).igd_cf.values;
            break;
        case Indicator::HvCf:
            column = composite_front_eval(sets, ctx).hv_cf.values;
            break;
        case Indicator::Pmda:
            column = pmda(sets, ctx).values;
            break;
        case Indicator::RIgd:
            column = r_metric_eval(sets, ctx, ctx.front_sample).r_igd.values;
            break;
        case Indicator::RHv:
            column = r_metric_eval(sets, ctx, ctx.front_sample).r_hv.values;
            break;
        case Indicator::Eh:
            column = eh(sets, ctx.pref.z).values;
            break;
        case Indicator::Hv:
            for (const PointSet& s : sets) column.push_back(hypervolume(s, ctx.hv_ref));
            break;
        case Indicator::Igd:
            for (const PointSet& s : sets) column.push_back(igd(s, ctx.front_sample));
            break;
    }
    return column;
}

}  // namespace

RankTable rank_table(std::span<const PointSet> sets, const IndicatorContext& ctx,
                     std::span<const Indicator> selection) {
    if (sets.size() < 2) throw std::invalid_argument("ranking needs at least 2 point sets");
    ctx.validate();
    RankTable table;
    for (Indicator ind : selection) {
        table.columns.push_back(ind);
        try {
            std::vector<double> column = evaluate_column(ind, sets, ctx);
            table.ranks.push_back(competition_ranks(column, indicator_maximizes(ind)));
            table.values.push_back(std::move(column));
            table.column_errors.emplace_back();
        } catch (const std::exception& e) {
            table.values.emplace_back();
            table.ranks.emplace_back();
            table.column_errors.emplace_back(e.what());
        }
    }
    return table;
}

std::pair<std::size_t, std::size_t> argmin_reports(const PointSet& sample,
                                                   const PreferenceSpec& spec) {
    if (sample.empty()) throw std::invalid_argument("sample is empty");
    return {detail::argmin_distance(sample, spec.z) + 1, detail::argmin_asf(sample, spec) + 1};
}

}  // namespace rpqi
