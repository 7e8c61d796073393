// aberth.hpp -- simultaneous (Aberth-Ehrlich) complex root finding for
// exact-rational truncations, double precision with residual reporting.
//
// Coefficients are scaled by an exact power of two chosen from the
// coefficient magnitudes before conversion to double, so truncations with
// extreme coefficient ranges (1/j!, binomials of degree ~500) stay inside
// the double range.  Roots are unscaled on output.
#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "trunclab/polynomial.hpp"

namespace trunclab {

struct RootEntry {
    std::complex<double> value;
    long multiplicity = 1;
};

struct ComplexRootSet {
    std::vector<RootEntry> roots;  // multiplicities sum to deg(f)
    long degree = 0;
    // max_i |g(w_i)| over the computed roots of the scaled polynomial g
    // normalized to max coefficient magnitude 1 (a relative residual).
    double residual_bound = 0.0;
};

struct RootFindError : std::runtime_error {
    ComplexRootSet partial;
    explicit RootFindError(const std::string& what, ComplexRootSet p)
        : std::runtime_error(what), partial(std::move(p)) {}
};

// tol is the cluster-merge radius (computed roots within tol of each other
// collapse to one entry carrying the multiplicity); iterations converge to
// machine-level corrections independently of tol.  Deterministic given seed.
ComplexRootSet complex_roots(const TruncationPolynomial& f, double tol,
                             std::uint64_t seed = 0);

}  // namespace trunclab
