// fp_poly.hpp -- univariate polynomial arithmetic and factorization over F_p
// (machine-word primes).  Distinct-degree factorization is deterministic;
// equal-degree splitting is randomized with an explicit seed.
#pragma once

#include <cstdint>
#include <vector>

#include "trunclab/rational.hpp"

namespace trunclab {

struct FpPoly {
    long p = 0;
    std::vector<unsigned long> c;  // coefficient of y^i at index i, in [0, p)

    long degree() const;
    bool is_zero() const { return degree() < 0; }
    unsigned long at(long i) const;
    void trim();
};

FpPoly fp_make(long p, std::vector<unsigned long> coeffs);
unsigned long fp_reduce(const Rational& x, long p);  // valuation >= 0 required

FpPoly fp_add(const FpPoly& a, const FpPoly& b);
FpPoly fp_sub(const FpPoly& a, const FpPoly& b);
FpPoly fp_mul(const FpPoly& a, const FpPoly& b);
FpPoly fp_mod(const FpPoly& a, const FpPoly& m);
FpPoly fp_divexact(const FpPoly& a, const FpPoly& b);
FpPoly fp_gcd(FpPoly a, FpPoly b);                   // monic output
FpPoly fp_derivative(const FpPoly& f);
FpPoly fp_monic(FpPoly f);
FpPoly fp_powmod(const FpPoly& base, const Int& e, const FpPoly& m);
unsigned long fp_eval(const FpPoly& f, unsigned long x);
bool fp_equal(const FpPoly& a, const FpPoly& b);
std::string fp_to_string(const FpPoly& f);

bool fp_separable(const FpPoly& f);  // gcd(f, f') = 1

// Roots in F_p with multiplicity.
std::vector<std::pair<unsigned long, long>> fp_roots(const FpPoly& f);

// (degree, count) pairs from deterministic distinct-degree factorization;
// requires a squarefree input.
std::vector<std::pair<long, long>> fp_distinct_degrees(const FpPoly& f);

// Full irreducible factorization, multiplicity-aware (squarefree split,
// then DDF, then seeded equal-degree splitting).  Deterministic given seed.
std::vector<std::pair<FpPoly, long>> fp_factor(const FpPoly& f, std::uint64_t seed);

}  // namespace trunclab
