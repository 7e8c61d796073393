// series.hpp -- power-series catalog: coefficient rules, truncation,
// Tate-algebra membership, radius of convergence.
#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "trunclab/polynomial.hpp"
#include "trunclab/rational.hpp"

namespace trunclab {

enum class TateStatus { member, non_member, undetermined };

struct TateVerdict {
    TateStatus status = TateStatus::undetermined;
    std::string witness;
};

// A power series given by closed-form rules.
//
//   coeff_rule        j |-> a_j, total, exact.
//   valuation_rule    (j, p) |-> val_p(a_j) in closed form, optional.
//                     When present it is spot-checked against coeff_rule for
//                     j <= 64 at construction.
//   valuation_growth  p |-> liminf_j val_p(a_j)/j in closed form, optional
//                     (the limit when it exists); determines the radius
//                     exponent v_R = -growth.
//   tate_rule         decides |a_j| R^j -> 0 rigorously from the closed form;
//                     series without one answer "undetermined".
struct SeriesSpec {
    std::string name;
    std::function<Rational(long)> coeff_rule;
    std::function<ExtRational(long, long)> valuation_rule;            // may be null
    std::function<std::optional<Rational>(long)> valuation_growth;    // may be null
    std::function<TateVerdict(long, const Rational&)> tate_rule;      // may be null
};

// Built-in catalog.
SeriesSpec make_exp_series();                              // a_j = 1/j!
SeriesSpec make_geometric_series();                        // a_j = 1
SeriesSpec make_scaled_geometric_series(const Rational& c);// a_j = c^j
SeriesSpec make_sqrt_gap_series(long p);                   // a_j = p^(j + ceil(sqrt(j)))
SeriesSpec make_lacunary_series();                         // a_j = 1 iff j a power of 2
SeriesSpec make_counterexample_limit_series();             // limit of the interpolation sequence
SeriesSpec make_coeff_list_series(std::vector<Rational> coeffs, std::string label = "coeff-list");

// Registry for the CLI: rule id + parameters.
struct SeriesParams {
    std::string rule;
    std::optional<Rational> c;
    std::optional<long> p;
    std::vector<Rational> coefficients;
};
SeriesSpec series_from_params(const SeriesParams& params);
std::vector<std::string> catalog_lines();

Rational coefficient(const SeriesSpec& spec, long j);
TruncationPolynomial truncate(const SeriesSpec& spec, long n);

// Membership of the series in the Tate algebra of the disk of radius
// R = p^(-R_exponent): member iff val_p(a_j) + j R_exponent -> +inf can be
// concluded; non-member iff a bounded subsequence can be concluded;
// undetermined otherwise.  Never decided from a finite prefix.
TateVerdict tate_membership(const SeriesSpec& spec, long p, const Rational& R_exponent);

// v_R with R = p^(-v_R); nullopt when unknown (or the radius is infinite,
// as for polynomial coefficient lists).
std::optional<Rational> radius_exponent(const SeriesSpec& spec, long p);

// Truncation-degree selection for experiments.  near_radius keeps n with
// a_n != 0 and | |a_n|^(1/n) * R - 1 | <= delta (double precision, log scale).
struct SubsequenceFilter {
    enum class Kind { all, primes, powers_of_two, list, near_radius };
    Kind kind = Kind::all;
    std::vector<long> list;
    double delta = 0.1;
    double R = 1.0;  // used by near_radius

    bool keep(long n, const SeriesSpec& spec) const;
    static SubsequenceFilter parse(const std::string& id, double delta, double R,
                                   std::vector<long> list);
};

std::vector<long> select_indices(const SeriesSpec& spec, long n_min, long n_max,
                                 const SubsequenceFilter& filter);

}  // namespace trunclab
