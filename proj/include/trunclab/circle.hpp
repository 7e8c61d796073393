// circle.hpp -- circle-equidistribution statistics for empirical zero
// measures: annulus masses, Weyl sums, dyadic arc discrepancy, and the
// boundary-gap statistic.
#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "trunclab/aberth.hpp"
#include "trunclab/exec.hpp"
#include "trunclab/series.hpp"

namespace trunclab {

// Angular statistics (weyl, arc_discrepancy) are taken over the roots with
// nonzero modulus, normalized by their count; annulus and interior masses
// are fractions of the full degree.
struct CircleStats {
    double R = 1.0;
    double eps = 1e-8;
    double annulus_mass = 0.0;    // fraction with | |z| - R | <= eps
    double interior_mass = 0.0;   // fraction with |z| <= R - eps
    std::vector<std::complex<double>> weyl;  // S_1 .. S_M
    double arc_discrepancy = 0.0; // sup over dyadic arcs, levels 1..10
    double jentzsch_gap = 0.0;    // max over grid points of R*S^1 of distance to nearest root
};

// Every call asserts the Erdos-Turan-type consistency bound
// arc_discrepancy <= 4 * (sum_{m<=M} |S_m|/m + 1/M); a violation throws
// std::logic_error.
CircleStats circle_stats(const ComplexRootSet& rs, double R, int M, int grid,
                         double eps = 1e-8);

struct JsRow {
    long n = 0;
    long deg = 0;
    CircleStats stats;
    double residual_bound = 0.0;
};

struct JsTable {
    std::vector<JsRow> rows;
    bool discrepancy_decreasing = false;  // last row vs first row
    bool gap_decreasing = false;
};

struct JsParams {
    int M = 32;
    int grid = 256;
    double tol = 1e-8;
    double eps = 1e-8;
    std::uint64_t seed = 0;
};

JsTable jentzsch_szego_experiment(const SeriesSpec& spec, double R,
                                  const SubsequenceFilter& filter, long n_min, long n_max,
                                  const JsParams& params, ExecMode mode = ExecMode::serial);

// Numeric Bernstein-Walsh check |f(z)| <= ||f||_E max(|z|/R, 1)^deg with
// ||f||_E estimated as the max over a circle grid of >= max(4096, 16*deg)
// points times the safety factor 1/cos^2(pi*deg/(2N)).  A violation beyond
// the relative tolerance triggers one grid refinement; if it persists the
// sample is flagged.
struct BwComplexSample {
    std::complex<double> z;
    double lhs = 0.0;
    double rhs = 0.0;
    double slack_rel = 0.0;
    bool violated = false;
};

struct BwComplexReport {
    double norm_estimate = 0.0;
    double safety = 1.0;
    bool refined = false;
    bool all_hold = true;
    std::vector<BwComplexSample> samples;
};

BwComplexReport bernstein_walsh_complex(const TruncationPolynomial& f, double R,
                                        std::span<const std::complex<double>> samples,
                                        double rel_tol = 1e-9);

}  // namespace trunclab
