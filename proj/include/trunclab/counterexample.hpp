// counterexample.hpp -- the monic integer interpolation sequence whose
// truncations pile at least half of their zero mass at T = 1.
//
// Construction: given f in Z[T] of degree m and n > m+1 there is a unique
// monic F in Z[T] of degree n with F = f mod T^(m+1) and (T-1)^(n-m-1) | F,
// namely F = f + T^(m+1) g(T-1) + T^n where g is the truncation mod
// T^(n-m-1) of the integer power series -(f(1+T) + (1+T)^n)/(1+T)^(m+1).
// Iterating from F_0 = T^2 with degrees d_n = 2^(n+1)-2 gives a coefficient-
// stable sequence, hence a power series whose degree-d_n truncations are
// exactly the F_n.
#pragma once

#include <vector>

#include "trunclab/polynomial.hpp"
#include "trunclab/rational.hpp"

namespace trunclab {

// The unique monic degree-n interpolant described above.  Both congruences
// are re-verified exactly before returning; a verification failure throws
// std::logic_error (it would be an implementation bug).
ZPoly interpolation_step(const ZPoly& f, long n);

struct CounterexampleSequence {
    std::vector<ZPoly> polys;    // F_0 .. F_N
    std::vector<long> degrees;   // d_n = 2^(n+1) - 2
};

// F_0 = T^2 (the simplest valid base: monic, degree d_0 = 2, vanishing
// order at 1 at least 2^0 - 1 = 0), then F_{n+1} = interpolation_step(F_n,
// 2^(n+2) - 2).  All sequence invariants are re-checked.
CounterexampleSequence build_sequence(long N);

// Coefficient j of the limit power series: read off any F_n with d_n >= j.
// Memoized, safe for concurrent use.
Int limit_coefficient(long j);

long vanishing_order_at_one(const ZPoly& F);

// (order of vanishing at T = 1) / deg(F), exact.
Rational mass_at_one(const ZPoly& F);

}  // namespace trunclab
