#include "trunclab/circle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace trunclab {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t n) {
    std::uint64_t x = seed + 0x9E3779B97F4A7C15ULL * (n + 1);
    x ^= x >> 30;
    x *= 0xBF58476D1CE4E5B9ULL;
    x ^= x >> 27;
    x *= 0x94D049BB133111EBULL;
    x ^= x >> 31;
    return x;
}

std::complex<double> eval_double(const TruncationPolynomial& f, std::complex<double> z) {
    std::complex<double> acc(0.0, 0.0);
    for (size_t j = f.poly.coeff.size(); j-- > 0;)
        acc = acc * z + f.poly.coeff[j].get_d();
    return acc;
}

}  // namespace

CircleStats circle_stats(const ComplexRootSet& rs, double R, int M, int grid, double eps) {
    if (rs.roots.empty()) throw std::invalid_argument("circle_stats: empty root set");
    if (!(R > 0)) throw std::invalid_argument("circle_stats: R must be positive");
    if (M < 1 || grid < 1) throw std::invalid_argument("circle_stats: M and grid must be >= 1");

    CircleStats st;
    st.R = R;
    st.eps = eps;

    long deg = 0, annulus = 0, interior = 0;
    std::vector<std::pair<double, long>> angles;  // (theta in [0, 2pi), multiplicity)
    long angular_total = 0;
    for (const auto& r : rs.roots) {
        deg += r.multiplicity;
        double mod = std::abs(r.value);
        if (std::fabs(mod - R) <= eps) annulus += r.multiplicity;
        if (mod <= R - eps) interior += r.multiplicity;
        if (mod > 1e-12) {
            double theta = std::atan2(r.value.imag(), r.value.real());
            if (theta < 0) theta += kTwoPi;
            angles.emplace_back(theta, r.multiplicity);
            angular_total += r.multiplicity;
        }
    }
    st.annulus_mass = static_cast<double>(annulus) / static_cast<double>(deg);
    st.interior_mass = static_cast<double>(interior) / static_cast<double>(deg);

    st.weyl.assign(static_cast<size_t>(M), {0.0, 0.0});
    if (angular_total > 0) {
        for (const auto& [theta, mult] : angles) {
            std::complex<double> u = std::polar(1.0, theta);
            std::complex<double> upow(1.0, 0.0);
            for (int m = 0; m < M; ++m) {
                upow *= u;
                st.weyl[static_cast<size_t>(m)] += upow * static_cast<double>(mult);
            }
        }
        for (auto& s : st.weyl) s /= static_cast<double>(angular_total);
    }

    // Dyadic arc family, levels 1..10.
    if (angular_total > 0) {
        std::sort(angles.begin(), angles.end());
        std::vector<double> theta_sorted;
        std::vector<long> prefix{0};
        for (const auto& [theta, mult] : angles) {
            theta_sorted.push_back(theta);
            prefix.push_back(prefix.back() + mult);
        }
        auto count_below = [&](double x) {
            size_t idx = static_cast<size_t>(
                std::lower_bound(theta_sorted.begin(), theta_sorted.end(), x) -
                theta_sorted.begin());
            return prefix[idx];
        };
        double disc = 0.0;
        for (int level = 1; level <= 10; ++level) {
            long arcs = 1L << level;
            double uniform = 1.0 / static_cast<double>(arcs);
            for (long t = 0; t < arcs; ++t) {
                double lo = kTwoPi * static_cast<double>(t) / static_cast<double>(arcs);
                double hi = kTwoPi * static_cast<double>(t + 1) / static_cast<double>(arcs);
                long cnt = count_below(hi) - count_below(lo);
                double emp = static_cast<double>(cnt) / static_cast<double>(angular_total);
                disc = std::max(disc, std::fabs(emp - uniform));
            }
        }
        st.arc_discrepancy = disc;

        // Erdos-Turan-type internal consistency bound, documented constant 4.
        double rhs = 1.0 / static_cast<double>(M);
        for (int m = 1; m <= M; ++m)
            rhs += std::abs(st.weyl[static_cast<size_t>(m - 1)]) / static_cast<double>(m);
        if (st.arc_discrepancy > 4.0 * rhs + 1e-12)
            throw std::logic_error("circle_stats: Erdos-Turan consistency bound violated");
    }

    double gap = 0.0;
    for (int t = 0; t < grid; ++t) {
        std::complex<double> pt =
            std::polar(R, kTwoPi * static_cast<double>(t) / static_cast<double>(grid));
        double nearest = 1e300;
        for (const auto& r : rs.roots) nearest = std::min(nearest, std::abs(pt - r.value));
        gap = std::max(gap, nearest);
    }
    st.jentzsch_gap = gap;
    return st;
}

JsTable jentzsch_szego_experiment(const SeriesSpec& spec, double R,
                                  const SubsequenceFilter& filter, long n_min, long n_max,
                                  const JsParams& params, ExecMode mode) {
    std::vector<long> indices = select_indices(spec, n_min, n_max, filter);
    JsTable table;
    table.rows.resize(indices.size());
    for_each_index(indices.size(), mode, [&](size_t i) {
        long n = indices[i];
        TruncationPolynomial f = truncate(spec, n);
        if (f.degree() < 1)
            throw std::invalid_argument("jentzsch experiment: degree < 1 at n=" +
                                        std::to_string(n));
        ComplexRootSet roots = complex_roots(f, params.tol, mix_seed(params.seed, n));
        JsRow row;
        row.n = n;
        row.deg = f.degree();
        row.stats = circle_stats(roots, R, params.M, params.grid, params.eps);
        row.residual_bound = roots.residual_bound;
        table.rows[i] = std::move(row);
    });
    if (table.rows.size() >= 2) {
        table.discrepancy_decreasing =
            table.rows.back().stats.arc_discrepancy < table.rows.front().stats.arc_discrepancy;
        table.gap_decreasing =
            table.rows.back().stats.jentzsch_gap < table.rows.front().stats.jentzsch_gap;
    }
    return table;
}

BwComplexReport bernstein_walsh_complex(const TruncationPolynomial& f, double R,
                                        std::span<const std::complex<double>> samples,
                                        double rel_tol) {
    if (f.poly.is_zero()) throw std::invalid_argument("bernstein_walsh_complex: zero polynomial");
    if (!(R > 0)) throw std::invalid_argument("bernstein_walsh_complex: R must be positive");
    long deg = f.degree();

    auto sup_estimate = [&](long n_points) {
        double sup = 0.0;
        for (long t = 0; t < n_points; ++t) {
            std::complex<double> z =
                std::polar(R, kTwoPi * static_cast<double>(t) / static_cast<double>(n_points));
            sup = std::max(sup, std::abs(eval_double(f, z)));
        }
        return sup;
    };
    auto safety_for = [&](long n_points) {
        double x = std::numbers::pi * static_cast<double>(deg) /
                   (2.0 * static_cast<double>(n_points));
        double c = std::cos(x);
        return 1.0 / (c * c);
    };

    long n_points = std::max<long>(4096, 16 * deg);
    BwComplexReport report;
    for (int attempt = 0; attempt < 2; ++attempt) {
        report.norm_estimate = sup_estimate(n_points);
        report.safety = safety_for(n_points);
        report.refined = attempt > 0;
        report.all_hold = true;
        report.samples.clear();
        double norm = report.norm_estimate * report.safety;
        for (const auto& z : samples) {
            BwComplexSample s;
            s.z = z;
            s.lhs = std::abs(eval_double(f, z));
            double growth = std::pow(std::max(std::abs(z) / R, 1.0), static_cast<double>(deg));
            s.rhs = norm * growth;
            s.slack_rel = s.rhs > 0 ? (s.rhs - s.lhs) / s.rhs : 0.0;
            s.violated = s.lhs > s.rhs * (1.0 + rel_tol);
            if (s.violated) report.all_hold = false;
            report.samples.push_back(s);
        }
        if (report.all_hold) break;
        n_points *= 4;  // one refinement on suspected grid under-resolution
    }
    return report;
}

}  // namespace trunclab
