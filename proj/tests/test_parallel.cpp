// Serial reference vs OpenMP kernels: identical results, bit for bit, and
// byte-identical report files across repeated runs with the same seed.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "trunclab/report.hpp"

using namespace trunclab;

namespace {
Rational q(long num, long den = 1) { return make_rational(Int(num), Int(den)); }

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct TempDir {
    std::filesystem::path path;
    explicit TempDir(const std::string& name)
        : path(std::filesystem::temp_directory_path() / name) {
        std::filesystem::remove_all(path);
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
};
}  // namespace

TEST_CASE("equidistribution rows match between serial and OpenMP") {
    SeriesSpec geo = make_geometric_series();
    std::vector<Disk> probes = default_probes(3, q(0));
    std::vector<long> degrees;
    for (long n = 1; n <= 60; ++n) degrees.push_back(n);
    EquidistReport a = equidistribution_report(geo, 3, q(0), probes, degrees, ExecMode::serial);
    EquidistReport b = equidistribution_report(geo, 3, q(0), probes, degrees, ExecMode::openmp);
    REQUIRE(a.rows.size() == b.rows.size());
    CHECK(a.consistent_with_gauss_point == b.consistent_with_gauss_point);
    for (size_t i = 0; i < a.rows.size(); ++i) {
        CHECK(a.rows[i].n == b.rows[i].n);
        CHECK(a.rows[i].boundary_mass == b.rows[i].boundary_mass);
        REQUIRE(a.rows[i].probe_mass.size() == b.rows[i].probe_mass.size());
        for (size_t k = 0; k < a.rows[i].probe_mass.size(); ++k)
            CHECK(a.rows[i].probe_mass[k] == b.rows[i].probe_mass[k]);
    }
}

TEST_CASE("sequence stats match between serial and OpenMP") {
    SeriesSpec sg = make_sqrt_gap_series(2);
    SubsequenceFilter primes = SubsequenceFilter::parse("primes", 0, 1.0, {});
    auto a = sequence_stats(sg, 2, 2, 60, primes, 5, 0, ExecMode::serial);
    auto b = sequence_stats(sg, 2, 2, 60, primes, 5, 0, ExecMode::openmp);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].n == b[i].n);
        CHECK(a[i].qp.count == b[i].qp.count);
        CHECK(a[i].leq_d_lower == b[i].leq_d_lower);
        CHECK(a[i].leq_d_upper == b[i].leq_d_upper);
        CHECK(a[i].ratio_upper_over_n == b[i].ratio_upper_over_n);
        CHECK(a[i].max_degree_lower_bound == b[i].max_degree_lower_bound);
    }
}

TEST_CASE("complex experiment rows match bitwise between serial and OpenMP") {
    SeriesSpec geo = make_geometric_series();
    SubsequenceFilter pow2 = SubsequenceFilter::parse("powers-of-2", 0, 1.0, {});
    JsParams params;
    params.seed = 7;
    JsTable a = jentzsch_szego_experiment(geo, 1.0, pow2, 8, 128, params, ExecMode::serial);
    JsTable b = jentzsch_szego_experiment(geo, 1.0, pow2, 8, 128, params, ExecMode::openmp);
    REQUIRE(a.rows.size() == b.rows.size());
    for (size_t i = 0; i < a.rows.size(); ++i) {
        CHECK(a.rows[i].stats.arc_discrepancy == b.rows[i].stats.arc_discrepancy);
        CHECK(a.rows[i].stats.jentzsch_gap == b.rows[i].stats.jentzsch_gap);
        CHECK(a.rows[i].residual_bound == b.rows[i].residual_bound);
        for (size_t m = 0; m < a.rows[i].stats.weyl.size(); ++m)
            CHECK(a.rows[i].stats.weyl[m] == b.rows[i].stats.weyl[m]);
    }
}

TEST_CASE("experiment outputs are byte-identical across runs and exec modes") {
    ExperimentConfig cfg;
    cfg.mode = "padic-equidistribution";
    cfg.series.rule = "geometric";
    cfg.p = 3;
    cfg.R_exponent = q(0);
    cfg.n_min = 1;
    cfg.n_max = 40;
    cfg.seed = 11;

    TempDir d1("trunclab_det_a"), d2("trunclab_det_b"), d3("trunclab_det_c");
    run_experiment(cfg, d1.path.string());
    run_experiment(cfg, d2.path.string());
    cfg.exec = ExecMode::serial;
    run_experiment(cfg, d3.path.string());
    for (const char* name : {"equidist.csv", "summary.json"}) {
        CHECK(slurp(d1.path / name) == slurp(d2.path / name));
        CHECK(slurp(d1.path / name) == slurp(d3.path / name));
    }

    ExperimentConfig cx;
    cx.mode = "complex-js";
    cx.series.rule = "lacunary";
    cx.R = 1.0;
    cx.n_min = 8;
    cx.n_max = 64;
    cx.filter_id = "powers-of-2";
    cx.seed = 5;
    TempDir c1("trunclab_det_d"), c2("trunclab_det_e"), c3("trunclab_det_f");
    run_experiment(cx, c1.path.string());
    run_experiment(cx, c2.path.string());
    cx.exec = ExecMode::serial;
    run_experiment(cx, c3.path.string());
    for (const char* name : {"complex.csv", "summary.json"}) {
        CHECK(slurp(c1.path / name) == slurp(c2.path / name));
        CHECK(slurp(c1.path / name) == slurp(c3.path / name));
    }
}
