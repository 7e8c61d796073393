#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "oracles.hpp"
#include "trunclab/rational.hpp"

using namespace trunclab;
using namespace trunclab::testing;

TEST_CASE("val_p on integers and fractions") {
    CHECK(val_p(Rational(24), 2) == ExtRational(Rational(3)));  // 24 = 2^3 * 3
    CHECK(val_p(make_rational(Int(1), Int(9)), 3) == ExtRational(Rational(-2)));
    CHECK(val_p(Rational(0), 5).is_infinite());
    CHECK(val_p(Rational(1), 7) == ExtRational(Rational(0)));
    CHECK_THROWS_AS(val_p(Rational(1), 4), std::invalid_argument);
    CHECK_THROWS_AS(val_p(Rational(1), 1), std::invalid_argument);
    CHECK_THROWS_AS(val_p(Rational(1), -3), std::invalid_argument);
}

TEST_CASE("factorial_val matches Legendre and brute force") {
    CHECK(factorial_val(4, 2) == Rational(3));  // 4! = 24
    CHECK(factorial_val(9, 3) == Rational(4));  // 9! = 3^4 * 4480
    CHECK(factorial_val(1, 7) == Rational(0));
    for (long p : {2L, 3L, 5L, 7L})
        for (unsigned long j = 0; j <= 40; ++j)
            CHECK(factorial_val(j, p) == Rational(factorial_val_brute(j, p)));
}

TEST_CASE("ultrametric_abs exponent form") {
    PAbs a = ultrametric_abs(Rational(24), 2);
    CHECK_FALSE(a.zero);
    CHECK(a.exponent == Rational(-3));
    PAbs b = ultrametric_abs(make_rational(Int(1), Int(9)), 3);
    CHECK(b.exponent == Rational(2));
    CHECK(ultrametric_abs(Rational(0), 5).zero);
    CHECK(ultrametric_abs(Rational(0), 5).to_double() == 0.0);
    CHECK(ultrametric_abs(Rational(8), 2).to_double() == doctest::Approx(0.125));
}

TEST_CASE("valuation algebra: multiplicativity and the strong triangle") {
    Rng rng(20240811);
    std::vector<long> primes = {2, 3, 5, 7, 11, 13, 31, 97};
    for (int iter = 0; iter < 300; ++iter) {
        long p = primes[static_cast<size_t>(rng.uniform(0, static_cast<long>(primes.size()) - 1))];
        Rational x = random_rational_with_val(rng, p, rng.uniform(-6, 6));
        Rational y = random_rational_with_val(rng, p, rng.uniform(-6, 6));
        ExtRational vx = val_p(x, p), vy = val_p(y, p);
        CHECK(val_p(x * y, p) == vx + vy);
        ExtRational vsum = val_p(x + y, p);
        CHECK(vsum >= ext_min(vx, vy));
        if (vx != vy) CHECK(vsum == ext_min(vx, vy));
        // |x + y| <= max(|x|, |y|)
        PAbs ax = ultrametric_abs(x, p), ay = ultrametric_abs(y, p);
        PAbs as = ultrametric_abs(x + y, p);
        CHECK(as <= (ax < ay ? ay : ax));
    }
}

TEST_CASE("results are always in lowest terms with positive denominator") {
    Rng rng(7);
    for (int iter = 0; iter < 200; ++iter) {
        Rational x = random_rational_with_val(rng, 3, rng.uniform(-4, 4));
        Rational y = random_rational_with_val(rng, 3, rng.uniform(-4, 4));
        Rational z = x * y + x / y - y;
        Int g;
        mpz_gcd(g.get_mpz_t(), Int(z.get_num()).get_mpz_t(), Int(z.get_den()).get_mpz_t());
        CHECK(g == 1);
        CHECK(z.get_den() > 0);
    }
    CHECK(make_rational(Int(4), Int(-6)) == make_rational(Int(-2), Int(3)));
    CHECK(to_string(make_rational(Int(0), Int(17))) == "0");
}

TEST_CASE("ExtRational ordering and absorption") {
    ExtRational inf = ExtRational::infinity();
    ExtRational two(Rational(2));
    CHECK(two < inf);
    CHECK_FALSE(inf < inf);
    CHECK(inf + two == inf);
    CHECK((two + two) == ExtRational(Rational(4)));
    CHECK(ext_min(inf, two) == two);
    CHECK(inf.str() == "+inf");
    CHECK_THROWS_AS(inf.finite(), std::logic_error);
}
