// equidist.hpp -- zero-measure masses of truncation sequences against
// families of probe disks, with the Gauss-point verdict.
#pragma once

#include <span>
#include <string>
#include <vector>

#include "trunclab/berkovich.hpp"
#include "trunclab/exec.hpp"
#include "trunclab/polynomial.hpp"
#include "trunclab/series.hpp"

namespace trunclab {

// A probe must be a proper subdisk of E(0,R) in the Berkovich sense:
// contained in the disk and avoiding its Gauss point.  Concretely:
// val(center) >= v_R and (radius_exponent > v_R, or an open disk with
// radius_exponent = v_R, i.e. a residue disk of the boundary sphere).
void validate_probe(const Disk& probe, const Rational& vR, long p);

// Default family: the open disk D(0, R/p) plus the closed disks
// E(c p^{v_R}, R/p) for c = 1..min(p-1, 4); integer v_R only.
std::vector<Disk> default_probes(long p, const Rational& vR);

std::string probe_id(const Disk& d);

struct EquidistRow {
    long n = 0;
    long deg = 0;
    std::vector<long> probe_count;
    std::vector<Rational> probe_mass;   // count / deg
    Rational boundary_mass;             // nu(f_n)(E(0,R))
};

struct EquidistReport {
    std::vector<std::string> probe_ids;
    std::vector<EquidistRow> rows;
    // Verdict surrogate for weak-* convergence to the Dirac mass at the
    // Gauss point: over the last quarter of the rows every probe mass is
    // exactly 0 and the boundary mass is exactly 1.
    bool consistent_with_gauss_point = false;
};

EquidistReport equidistribution_report(std::span<const TruncationPolynomial> fs, long p,
                                       const Rational& R_exponent,
                                       std::span<const Disk> probes,
                                       ExecMode mode = ExecMode::serial);

// Convenience: truncations of a series over selected degrees.
EquidistReport equidistribution_report(const SeriesSpec& spec, long p,
                                       const Rational& R_exponent,
                                       std::span<const Disk> probes,
                                       std::span<const long> degrees,
                                       ExecMode mode = ExecMode::serial);

}  // namespace trunclab
