// polynomial.hpp -- dense exact polynomials over Q and Z.
#pragma once

#include <string>
#include <vector>

#include "trunclab/rational.hpp"

namespace trunclab {

// Dense polynomial over Q, coefficient of T^j at index j.  Trailing zero
// coefficients are allowed; degree() looks past them.
struct RatPoly {
    std::vector<Rational> coeff;

    RatPoly() = default;
    explicit RatPoly(std::vector<Rational> c) : coeff(std::move(c)) {}

    long degree() const;           // -1 for the zero polynomial
    long ord() const;              // index of first nonzero coefficient; -1 if zero
    bool is_zero() const { return degree() < 0; }
    Rational at(long j) const;     // 0 outside the stored range
    Rational eval(const Rational& x) const;
};

RatPoly operator+(const RatPoly& a, const RatPoly& b);
RatPoly operator-(const RatPoly& a, const RatPoly& b);
RatPoly operator*(const RatPoly& a, const RatPoly& b);

RatPoly derivative(const RatPoly& f);

// f(T + a), exact O(n^2) synthetic shift.
RatPoly taylor_shift(const RatPoly& f, const Rational& a);

// Quotient and remainder of f by (T - a).
std::pair<RatPoly, Rational> divide_linear(const RatPoly& f, const Rational& a);

// Largest k with (T - a)^k | f, plus the cofactor.
std::pair<long, RatPoly> vanishing_order_at(const RatPoly& f, const Rational& a);

// Euclidean gcd over Q, monic output (small inputs only; coefficient growth).
RatPoly rat_gcd(RatPoly a, RatPoly b);

// Exact quotient; throws std::logic_error when b does not divide a.
RatPoly rat_divexact(const RatPoly& a, const RatPoly& b);

// Degree-n truncation of a power series: coefficients 0..n stored exactly,
// origin recorded.  The stored tail coefficient may be zero (degree < n).
struct TruncationPolynomial {
    RatPoly poly;
    std::string origin_series;
    long origin_n = -1;

    long degree() const { return poly.degree(); }
    long ord() const { return poly.ord(); }
    Rational at(long j) const { return poly.at(j); }
};

TruncationPolynomial make_poly(std::vector<Rational> coeffs, std::string origin = "adhoc");

// Dense polynomial over Z for the interpolation construction.
struct ZPoly {
    std::vector<Int> coeff;

    ZPoly() = default;
    explicit ZPoly(std::vector<Int> c) : coeff(std::move(c)) {}

    long degree() const;
    bool is_zero() const { return degree() < 0; }
    Int at(long j) const;
    bool monic() const;
};

ZPoly z_add(const ZPoly& a, const ZPoly& b);
ZPoly z_mul(const ZPoly& a, const ZPoly& b);
bool z_equal(const ZPoly& a, const ZPoly& b);
ZPoly z_taylor_shift(const ZPoly& f, const Int& a);   // f(T + a)

// Division by (T - 1): quotient and remainder (= f(1)).
std::pair<ZPoly, Int> z_divide_by_t_minus_1(const ZPoly& f);

TruncationPolynomial to_truncation(const ZPoly& f, std::string origin, long n);

}  // namespace trunclab
