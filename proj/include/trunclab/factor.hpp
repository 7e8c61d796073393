// factor.hpp -- certified irreducible-factor-degree data over Q_p from
// Newton polygons and residual polynomials, Q_p-rational root counting,
// and the per-truncation sequence statistics.
//
// Only the regular case (separable residual) is certified exact; irregular
// segments contribute divisibility constraints, never guesses.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "trunclab/exec.hpp"
#include "trunclab/fp_poly.hpp"
#include "trunclab/newton.hpp"
#include "trunclab/polynomial.hpp"
#include "trunclab/series.hpp"

namespace trunclab {

struct SlopeFactor {
    Rational slope;                 // -h/e in lowest terms
    long h_length = 0;              // l, a multiple of e
    long ram_index = 1;             // e
    std::optional<FpPoly> residual; // degree l/e when computed
};

// One SlopeFactor per polygon segment; residuals not computed.
std::vector<SlopeFactor> slope_decomposition(const NewtonPolygon& np);

// Residual polynomial of the segment between vertices idx and idx+1:
// R(y) = sum_t red(a_{i0+te} * p^{-(u0 - t h)}) y^t, degree l/e, with
// nonzero constant and leading coefficients.
FpPoly residual_polynomial(const TruncationPolynomial& f, long p, const NewtonPolygon& np,
                           std::size_t segment_index);

struct FactorCertificate {
    struct Exact {
        long degree;
        long count;
    };
    struct Constraint {
        long ram_index;             // every factor degree of this part is divisible by e
        long segment_degree_total;  // D, the h_length of the segment
    };
    std::vector<Exact> exact;            // merged, sorted by degree
    std::vector<Constraint> constraints; // irregular segments
    long zero_root_order = 0;            // ord(f): that many degree-1 factors T
    long degree = 0;                     // deg(f)
};

FactorCertificate certified_factor_degrees(const TruncationPolynomial& f, long p,
                                           std::uint64_t seed = 0);

enum class Certainty { certified, undecided };

struct QpRootCount {
    long count = 0;  // certified roots in Q_p, with multiplicity
    Certainty certainty = Certainty::certified;
};

// Hensel lifting of simple residual roots plus bounded-depth branching at
// multiple ones; depth_override < 0 uses the default
// B = min(40, 2*(1 + val_p(disc))) (disc computed exactly for deg <= 32).
QpRootCount qp_root_count(const TruncationPolynomial& f, long p, int depth_override = -1);

// (lower, upper) bounds for the number of irreducible factors of degree <= d.
// The zero_root_order degree-1 factors T are included in both bounds.
std::pair<long, long> count_factors_leq(const FactorCertificate& cert, long d);

// Largest factor degree certified to exist: exact degrees, segment ram
// indices, and 1 when f vanishes at the origin.
long max_certified_degree_bound(const FactorCertificate& cert);

struct SequenceStatsRow {
    long n = 0;
    long deg = 0;
    QpRootCount qp;
    long leq_d_lower = 0;
    long leq_d_upper = 0;
    Rational ratio_upper_over_n;
    long max_degree_lower_bound = 0;
};

std::vector<SequenceStatsRow> sequence_stats(const SeriesSpec& spec, long p, long n_min,
                                             long n_max, const SubsequenceFilter& filter,
                                             long d, std::uint64_t seed = 0,
                                             ExecMode mode = ExecMode::serial);

}  // namespace trunclab
