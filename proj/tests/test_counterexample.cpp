#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "trunclab/counterexample.hpp"
#include "trunclab/equidist.hpp"
#include "trunclab/series.hpp"

using namespace trunclab;

namespace {
ZPoly zp(std::vector<long> c) {
    ZPoly f;
    for (long x : c) f.coeff.emplace_back(x);
    return f;
}
Rational q(long num, long den = 1) { return make_rational(Int(num), Int(den)); }
}

TEST_CASE("interpolation step: hand-expanded instances") {
    // (f = 1, n = 2): the unique monic quadratic with F = 1 mod T and
    // (T-1) | F is (T-1)^2
    CHECK(z_equal(interpolation_step(zp({1}), 2), zp({1, -2, 1})));
    // (f = 1, n = 3): (T-1)^2 (T+1) = T^3 - T^2 - T + 1
    CHECK(z_equal(interpolation_step(zp({1}), 3), zp({1, -1, -1, 1})));
    // (f = T^2, n = 6): T^2 (T-1)^4, vanishing order 4 >= 3
    CHECK(z_equal(interpolation_step(zp({0, 0, 1}), 6),
                  zp({0, 0, 1, -4, 6, -4, 1})));
    CHECK_THROWS_AS(interpolation_step(zp({0, 0, 1}), 3), std::invalid_argument);
    CHECK_THROWS_AS(interpolation_step(zp({0}), 5), std::invalid_argument);
}

TEST_CASE("uniqueness: any single-coefficient perturbation breaks a congruence") {
    ZPoly f = zp({1, 3, -2});  // arbitrary integer start, degree 2
    long n = 9;
    ZPoly F = interpolation_step(f, n);
    long m = f.degree();
    long k = n - m - 1;
    for (long i = 0; i < n; ++i) {
        ZPoly G = F;
        G.coeff[static_cast<size_t>(i)] += 1;
        bool truncation_ok = true;
        for (long j = 0; j <= m; ++j) truncation_ok = truncation_ok && G.at(j) == f.at(j);
        bool divisibility_ok = vanishing_order_at_one(G) >= k;
        bool both = truncation_ok && divisibility_ok;
        CHECK_FALSE(both);
    }
}

TEST_CASE("build_sequence base case") {
    CounterexampleSequence seq = build_sequence(0);
    REQUIRE(seq.polys.size() == 1);
    CHECK(z_equal(seq.polys[0], zp({0, 0, 1})));
    CHECK(seq.degrees == std::vector<long>{2});
    CHECK_THROWS_AS(build_sequence(-1), std::invalid_argument);
}

TEST_CASE("build_sequence: degrees, congruences, vanishing orders") {
    CounterexampleSequence seq = build_sequence(3);
    REQUIRE(seq.polys.size() == 4);
    CHECK(seq.degrees == std::vector<long>{2, 6, 14, 30});
    CHECK(z_equal(seq.polys[0], zp({0, 0, 1})));
    CHECK(z_equal(seq.polys[1], zp({0, 0, 1, -4, 6, -4, 1})));

    for (size_t n = 0; n < seq.polys.size(); ++n) {
        const ZPoly& F = seq.polys[n];
        CHECK(F.monic());
        CHECK(F.degree() == seq.degrees[n]);
        long required = n == 0 ? 0 : (2L << n) - 1;
        CHECK(vanishing_order_at_one(F) >= required);
        CHECK(vanishing_order_at_one(F) >= (1L << n) - 1);  // the weaker stated bound
        if (n > 0)
            for (long j = 0; j <= seq.degrees[n - 1]; ++j)
                CHECK(F.at(j) == seq.polys[n - 1].at(j));
    }
    // F_2: degree 14, F_2 = F_1 mod T^7, (T-1)^7 | F_2
    CHECK(seq.degrees[2] == 14);
    CHECK(vanishing_order_at_one(seq.polys[2]) >= 7);
}

TEST_CASE("mass at one") {
    CHECK(mass_at_one(zp({0, 0, 1, -4, 6, -4, 1})) == q(2, 3));  // T^2 (T-1)^4
    CHECK(mass_at_one(zp({1, -2, 1})) == q(1));
    CHECK(mass_at_one(zp({0, 0, 1})) == q(0));
    CounterexampleSequence seq = build_sequence(4);
    for (size_t n = 1; n < seq.polys.size(); ++n)
        CHECK(mass_at_one(seq.polys[n]) >= q(1, 2));
}

TEST_CASE("limit coefficients are stable and match the truncations") {
    CHECK(limit_coefficient(2) == 1);
    CHECK(limit_coefficient(5) == -4);
    CHECK(limit_coefficient(0) == 0);
    CounterexampleSequence seq = build_sequence(4);
    for (size_t n = 0; n + 1 < seq.polys.size(); ++n)
        for (long j = 0; j <= seq.degrees[n]; ++j)
            CHECK(seq.polys[n].at(j) == seq.polys[n + 1].at(j));
    for (long j = 0; j <= seq.degrees[2]; ++j)
        CHECK(limit_coefficient(j) == seq.polys[2].at(j));
}

TEST_CASE("unit radius facts: integer coefficients and unit top coefficients") {
    CounterexampleSequence seq = build_sequence(5);
    for (size_t n = 0; n < seq.polys.size(); ++n) {
        const ZPoly& F = seq.polys[n];
        CHECK(F.at(seq.degrees[n]) == 1);  // |a_{d_n}| = 1
        // integer coefficients: |a_j|_p <= 1 for every p -- nothing to check
        // beyond the type, which stores exact integers
    }
    // series-level facts: growth 0, radius exponent 0 at any prime
    SeriesSpec spec = make_counterexample_limit_series();
    CHECK(*radius_exponent(spec, 2) == q(0));
    CHECK(*radius_exponent(spec, 7) == q(0));
    CHECK(tate_membership(spec, 2, q(0)).status == TateStatus::non_member);
}

TEST_CASE("anti-equidistribution: at least half the mass sits on T = 1") {
    // Feeding the truncations to the equidistribution report with R = 1 and
    // the closed probe E(1, p^-1) shows probe mass >= 1/2 at every n: the
    // roots at T = 1 (valuation +inf) land in every disk around 1.
    SeriesSpec spec = make_counterexample_limit_series();
    CounterexampleSequence seq = build_sequence(4);
    std::vector<TruncationPolynomial> fs;
    for (size_t n = 1; n < seq.polys.size(); ++n)
        fs.push_back(truncate(spec, seq.degrees[n]));
    for (long p : {2L, 5L}) {
        std::vector<Disk> probes = {{q(1), q(1), true}};
        EquidistReport rep = equidistribution_report(fs, p, q(0), probes);
        for (const auto& row : rep.rows) {
            CHECK(row.probe_mass[0] >= q(1, 2));
            CHECK(row.boundary_mass == 1);
        }
        CHECK_FALSE(rep.consistent_with_gauss_point);
    }
}
