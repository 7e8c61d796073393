// berkovich.hpp -- type-II point seminorms, the Green function of a disk,
// disk-localized root counting and reduction degrees on the p-adic line.
//
// All quantities live in exponent space: a point xi(c, r) is stored as its
// center and the exact exponent with r = p^(-radius_exponent); seminorms are
// exact powers of p; Green values are rationals in units of log p.
#pragma once

#include <span>
#include <vector>

#include "trunclab/newton.hpp"
#include "trunclab/polynomial.hpp"
#include "trunclab/rational.hpp"

namespace trunclab {

// xi(center, r) with r = p^(-radius_exponent).  The Gauss point of E(0,R)
// is xi(0, v_R).
struct BerkovichPoint {
    Rational center;
    Rational radius_exponent;
};

// E(c,r): val(z - c) >= radius_exponent;  D(c,r): strict inequality.
struct Disk {
    Rational center;
    Rational radius_exponent;
    bool closed = true;
};

// |f|(xi(c,r)) = max_j |g_j| r^j for g = f(T + center), exact.
PAbs gauss_seminorm(const TruncationPolynomial& f, const BerkovichPoint& pt, long p);

// Green function of E(0,R) with pole at infinity, R = p^(-R_exponent),
// evaluated at xi(center, r): log_p max(|T|(x)/R, 1) with |T|(x) =
// max(|center|, r).  Returned in units of log p.
Rational green_disk(const BerkovichPoint& pt, const Rational& R_exponent, long p);

// Number of roots (in an algebraic closure, with multiplicity) lying in the
// disk, read off the Newton polygon of the recentered polynomial.
long root_count_in_disk(const TruncationPolynomial& f, long p, const Disk& d);

// Largest index j minimizing val_p(a_j) + j*v: the degree of the reduction
// of the Gauss-normalized rescaling f(p^v T).  Integer exponents only.
long reduction_degree(const TruncationPolynomial& f, long p, long v);

// Exact Bernstein-Walsh check |f|(xi) <= ||f||_{E(0,R)} * p^(deg f * G(xi)).
// The inequality is a theorem; a violation throws std::logic_error.
struct BwSample {
    BerkovichPoint point;
    Rational lhs_log;    // log_p |f|(xi)
    Rational rhs_log;    // log_p ||f||_R + deg * G(xi)
    Rational slack;      // rhs - lhs >= 0
};

struct BwReport {
    std::vector<BwSample> samples;
    Rational min_slack;
};

BwReport bernstein_walsh_check(const TruncationPolynomial& f, long p,
                               const Rational& R_exponent,
                               std::span<const BerkovichPoint> sample);

}  // namespace trunclab
