#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "oracles.hpp"
#include "trunclab/berkovich.hpp"
#include "trunclab/equidist.hpp"
#include "trunclab/series.hpp"

using namespace trunclab;
using namespace trunclab::testing;

namespace {
Rational q(long num, long den = 1) { return make_rational(Int(num), Int(den)); }
TruncationPolynomial poly(std::vector<Rational> c) { return make_poly(std::move(c)); }
}

TEST_CASE("Gauss seminorm") {
    for (long p : {3L, 7L}) {
        TruncationPolynomial f = poly({Rational(p) * p * p, Rational(p), Rational(1)});
        // at xi(0, p^-1): max(p^-3, p^-2, p^-2) = p^-2
        CHECK(gauss_seminorm(f, {q(0), q(1)}, p).exponent == q(-2));
        // at xi(0, 1) the unit leading coefficient dominates
        CHECK(gauss_seminorm(f, {q(0), q(0)}, p).exponent == q(0));
        // shift: T - 1 at xi(1, p^-5) is the seminorm of T
        CHECK(gauss_seminorm(poly({q(-1), q(1)}), {q(1), q(5)}, p).exponent == q(-5));
    }
}

TEST_CASE("Green function of the disk") {
    for (const Rational& vR : {q(0), q(2), q(-3, 2)}) {
        CHECK(green_disk({q(0), vR}, vR, 5) == q(0));       // vanishes on E(0,R)
        CHECK(green_disk({q(0), vR - 1}, vR, 5) == q(1));   // one step out: log p
        CHECK(green_disk({q(0), vR + 1}, vR, 5) == q(0));   // inside
    }
    // general center: |T|(xi(c,r)) = max(|c|, r)
    CHECK(green_disk({q(25), q(1)}, q(0), 5) == q(0));
    CHECK(green_disk({q(1, 25), q(3)}, q(0), 5) == q(2));
}

TEST_CASE("root counting in disks via shifted polygons") {
    for (long p : {3L, 5L}) {
        // f = T(T-1)(T-p), explicit roots 0, 1, p
        RatPoly f = poly_from_roots({q(0), q(1), Rational(p)});
        TruncationPolynomial t = make_poly(f.coeff);
        CHECK(root_count_in_disk(t, p, {q(0), q(1), true}) == 2);   // {0, p}
        CHECK(root_count_in_disk(t, p, {q(1), q(1), true}) == 1);   // {1}
        CHECK(root_count_in_disk(t, p, {q(0), q(0), true}) == 3);
        CHECK(root_count_in_disk(t, p, {q(0), q(0), false}) == 2);  // open: 0 and p
        CHECK(root_count_in_disk(t, p, {Rational(p), q(2), true}) == 1);
    }
    // all roots of unity: nothing strictly inside the unit sphere
    TruncationPolynomial units = poly({q(1), q(1), q(1), q(1), q(1), q(1)});
    CHECK(root_count_in_disk(units, 3, {q(0), q(0), false}) == 0);
}

TEST_CASE("reduction degree") {
    CHECK(reduction_degree(poly({q(1), q(1), q(1), q(1)}), 3, 0) == 3);
    CHECK(reduction_degree(poly({q(-2), q(0), q(1)}), 2, 0) == 2);
    CHECK(reduction_degree(poly({q(4), q(1), q(2)}), 2, 0) == 1);
}

TEST_CASE("reduction degree equals the closed-disk root count (the proof device)") {
    Rng rng(987654);
    std::vector<long> primes = {2, 3, 5, 7};
    for (int iter = 0; iter < 160; ++iter) {
        long p = primes[static_cast<size_t>(iter % 4)];
        TruncationPolynomial f = random_polynomial(rng, p, 12, -6, 6);
        for (long v = -2; v <= 2; ++v)
            CHECK(reduction_degree(f, p, v) ==
                  root_count_in_disk(f, p, {q(0), q(v), true}));
    }
}

TEST_CASE("Gauss seminorm is multiplicative") {
    Rng rng(13579);
    for (int iter = 0; iter < 60; ++iter) {
        long p = iter % 2 ? 3 : 5;
        TruncationPolynomial f = random_polynomial(rng, p, 7, -4, 4);
        TruncationPolynomial g = random_polynomial(rng, p, 7, -4, 4);
        TruncationPolynomial fg = make_poly((f.poly * g.poly).coeff);
        BerkovichPoint pt{random_rational_with_val(rng, p, rng.uniform(-2, 2)),
                          q(rng.uniform(-3, 3), rng.uniform(1, 3))};
        PAbs lhs = gauss_seminorm(fg, pt, p);
        PAbs rhs = gauss_seminorm(f, pt, p) * gauss_seminorm(g, pt, p);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("disjoint disks: counts add up to at most the degree") {
    Rng rng(1122);
    for (int iter = 0; iter < 40; ++iter) {
        long p = 5;
        TruncationPolynomial f = random_polynomial(rng, p, 10, -4, 4);
        // centers in distinct residue classes: val(c_i - c_j) = 0 < 1
        std::vector<Disk> disks = {{q(0), q(1), true}, {q(1), q(1), true},
                                   {q(2), q(1), true}, {q(3), q(1), true}};
        long total = 0;
        for (const auto& d : disks) total += root_count_in_disk(f, p, d);
        CHECK(total <= f.degree());
    }
    // exact enumeration for a product of linear factors
    RatPoly f = poly_from_roots({q(0), q(5), q(1), q(6), q(2)});
    TruncationPolynomial t = make_poly(f.coeff);
    CHECK(root_count_in_disk(t, 5, {q(0), q(1), true}) == 2);  // 0 and 5
    CHECK(root_count_in_disk(t, 5, {q(1), q(1), true}) == 2);  // 1 and 6
    CHECK(root_count_in_disk(t, 5, {q(2), q(1), true}) == 1);  // 2
}

TEST_CASE("Bernstein-Walsh inequality, exact p-adic form") {
    // tight examples
    for (long p : {2L, 5L}) {
        TruncationPolynomial f = poly({q(0), q(1)});  // T
        BwReport r = bernstein_walsh_check(f, p, q(0), std::vector<BerkovichPoint>{{q(0), q(-1)}});
        CHECK(r.min_slack == q(0));

        TruncationPolynomial g = poly({Rational(p) * p * p, Rational(p), q(1)});
        BwReport r2 = bernstein_walsh_check(g, p, q(0), std::vector<BerkovichPoint>{{q(0), q(0)}});
        CHECK(r2.min_slack == q(0));

        TruncationPolynomial u = poly({q(1), q(1), q(1), q(1), q(1)});
        BwReport r3 = bernstein_walsh_check(u, p, q(0), std::vector<BerkovichPoint>{{q(0), q(-2)}});
        CHECK(r3.min_slack == q(0));
        CHECK(r3.samples[0].lhs_log == q(8));
    }
    // random instances: the theorem must hold at every sampled point
    Rng rng(5150);
    for (int iter = 0; iter < 60; ++iter) {
        long p = iter % 2 ? 2 : 7;
        TruncationPolynomial f = random_polynomial(rng, p, 9, -5, 5);
        std::vector<BerkovichPoint> pts;
        for (int s = 0; s < 6; ++s)
            pts.push_back({random_rational_with_val(rng, p, rng.uniform(-3, 3)),
                           q(rng.uniform(-4, 4), rng.uniform(1, 4))});
        BwReport r = bernstein_walsh_check(f, p, q(rng.uniform(-2, 2)), pts);
        CHECK(r.min_slack >= q(0));
    }
}

TEST_CASE("probe validation") {
    CHECK_THROWS_AS(validate_probe({q(0), q(-1), true}, q(0), 3), std::invalid_argument);
    CHECK_THROWS_AS(validate_probe({q(0), q(0), true}, q(0), 3), std::invalid_argument);
    CHECK_NOTHROW(validate_probe({q(0), q(0), false}, q(0), 3));  // residue disk
    CHECK_NOTHROW(validate_probe({q(1), q(1), true}, q(0), 3));
    CHECK_THROWS_AS(validate_probe({q(1, 3), q(1), true}, q(0), 3),
                    std::invalid_argument);  // center outside E(0,1)
}

TEST_CASE("equidistribution of geometric truncations over Q_3") {
    SeriesSpec geo = make_geometric_series();
    std::vector<Disk> probes = {{q(0), q(1), true},   // E(0, 1/3)
                                {q(1), q(1), true},   // E(1, 1/3)
                                {q(1), q(0), false}}; // D(1, 1): the residue disk of 1
    std::vector<long> degrees;
    for (long n = 1; n <= 40; ++n) degrees.push_back(n);
    EquidistReport rep = equidistribution_report(geo, 3, q(0), probes, degrees);

    for (const auto& row : rep.rows) {
        CHECK(row.boundary_mass == 1);
        CHECK(row.probe_mass[0] == 0);  // no roots near 0
        CHECK(row.probe_mass[1] == 0);  // none within distance 1/3 of 1 either
        // residue disk of 1 catches exactly the p-power part of mu_{n+1}:
        // (3^{v_3(n+1)} - 1)/n roots
        long n = row.n;
        long a = 0, m = n + 1;
        while (m % 3 == 0) {
            ++a;
            m /= 3;
        }
        long expected = 1;
        for (long i = 0; i < a; ++i) expected *= 3;
        CHECK(row.probe_mass[2] == make_rational(Int(expected - 1), Int(n)));
    }

    // cyclotomic cross-check at n+1 = 9: mu_9 minus 1 is 2 roots of
    // valuation 1/2 and 6 of valuation 1/6, all inside D(1,1), none inside
    // E(1, 1/3)
    TruncationPolynomial f8 = truncate(geo, 8);
    CHECK(root_count_in_disk(f8, 3, {q(1), q(0), false}) == 8);
    CHECK(root_count_in_disk(f8, 3, {q(1), q(1, 2), true}) == 2);   // val >= 1/2: cube roots
    CHECK(root_count_in_disk(f8, 3, {q(1), q(1, 6), true}) == 8);   // val >= 1/6: all of them
    CHECK(root_count_in_disk(f8, 3, {q(1), q(1, 6), false}) == 2);  // val > 1/6: cube roots
    CHECK(root_count_in_disk(f8, 3, {q(1), q(1), true}) == 0);
}

TEST_CASE("scaled-geometric truncations live on the sphere of radius p") {
    SeriesSpec s = make_scaled_geometric_series(q(3));
    TruncationPolynomial f = truncate(s, 4);
    // roots zeta/3 for the nontrivial 5th roots of unity: valuation -1
    CHECK(root_count_in_disk(f, 3, {q(0), q(-1), true}) == 4);
    CHECK(root_count_in_disk(f, 3, {q(0), q(-1), false}) == 0);
    std::vector<Disk> probes = {{q(0), q(0), true},      // E(0, 1), proper subdisk of E(0,3)
                                {q(1, 3), q(0), true}};  // boundary residue disk around 1/3
    std::vector<long> degrees = {1, 2, 3, 4};
    EquidistReport rep = equidistribution_report(s, 3, q(-1), probes, degrees);
    for (const auto& row : rep.rows) {
        CHECK(row.boundary_mass == 1);
        for (const auto& m : row.probe_mass) CHECK(m == 0);
    }
    CHECK(rep.consistent_with_gauss_point);
}

TEST_CASE("equidistribution rejects improper probes") {
    SeriesSpec geo = make_geometric_series();
    std::vector<long> degrees = {3, 4};
    std::vector<Disk> bad = {{q(0), q(-1), true}};
    CHECK_THROWS_AS(equidistribution_report(geo, 3, q(0), bad, degrees),
                    std::invalid_argument);
}
