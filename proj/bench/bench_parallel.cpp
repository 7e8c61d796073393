// bench_parallel: timings of the report kernels, serial loop vs the OpenMP
// line, on mid-size workloads.  Outputs one row per kernel with the speedup.
//
// Usage: bench_parallel [n_max_padic] [n_max_complex]
#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "trunclab/equidist.hpp"
#include "trunclab/factor.hpp"
#include "trunclab/report.hpp"

using namespace trunclab;
using clock_type = std::chrono::steady_clock;

namespace {

double seconds_since(clock_type::time_point t0) {
    return std::chrono::duration<double>(clock_type::now() - t0).count();
}

template <typename Fn>
double timed(Fn&& fn) {
    auto t0 = clock_type::now();
    fn();
    return seconds_since(t0);
}

void row(const char* name, double serial, double parallel) {
    std::printf("%-28s %10.3fs %10.3fs %8.2fx\n", name, serial, parallel,
                parallel > 0 ? serial / parallel : 0.0);
}

}  // namespace

int main(int argc, char** argv) {
    long n_padic = argc > 1 ? std::atol(argv[1]) : 250;
    long n_complex = argc > 2 ? std::atol(argv[2]) : 384;

    std::printf("%-28s %11s %11s %9s\n", "kernel", "serial", "openmp", "speedup");

    {
        SeriesSpec geo = make_geometric_series();
        std::vector<Disk> probes = default_probes(3, Rational(0));
        std::vector<long> degrees;
        for (long n = 1; n <= n_padic; ++n) degrees.push_back(n);
        EquidistReport serial_report, parallel_report;
        double ts = timed([&] {
            serial_report = equidistribution_report(geo, 3, Rational(0), probes, degrees,
                                                    ExecMode::serial);
        });
        double tp = timed([&] {
            parallel_report = equidistribution_report(geo, 3, Rational(0), probes, degrees,
                                                      ExecMode::openmp);
        });
        row("padic-equidistribution", ts, tp);
        if (serial_report.rows.size() != parallel_report.rows.size()) return 1;
    }
    {
        SeriesSpec sg = make_sqrt_gap_series(2);
        SubsequenceFilter primes = SubsequenceFilter::parse("primes", 0, 1.0, {});
        std::vector<SequenceStatsRow> a, b;
        double ts = timed(
            [&] { a = sequence_stats(sg, 2, 2, n_padic, primes, 5, 0, ExecMode::serial); });
        double tp = timed(
            [&] { b = sequence_stats(sg, 2, 2, n_padic, primes, 5, 0, ExecMode::openmp); });
        row("padic-factors (sqrt-gap)", ts, tp);
        if (a.size() != b.size()) return 1;
    }
    {
        SeriesSpec geo = make_geometric_series();
        SubsequenceFilter pow2 = SubsequenceFilter::parse("powers-of-2", 0, 1.0, {});
        JsParams params;
        JsTable a, b;
        double ts = timed([&] {
            a = jentzsch_szego_experiment(geo, 1.0, pow2, 16, n_complex, params,
                                          ExecMode::serial);
        });
        double tp = timed([&] {
            b = jentzsch_szego_experiment(geo, 1.0, pow2, 16, n_complex, params,
                                          ExecMode::openmp);
        });
        row("complex-js (geometric)", ts, tp);
        if (a.rows.size() != b.rows.size()) return 1;
    }
    return 0;
}
