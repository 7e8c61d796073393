// rational.hpp -- exact rational arithmetic and p-adic valuations.
//
// Everything downstream (polygons, seminorms, certificates) works in
// "exponent space": absolute values are kept as exact powers of p and
// valuations as exact rationals extended by +infinity.  Floating point
// enters only when reports are emitted.
#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace trunclab {

using Int = mpz_class;
using Rational = mpq_class;

// Construct a reduced rational with positive denominator.
Rational make_rational(const Int& num, const Int& den);

Rational rational_from_string(const std::string& s);
std::string to_string(const Rational& x);

// p must be a prime >= 2; rejected otherwise.
bool is_prime(long p);
void require_prime(long p);

// Exact power of p in a nonzero integer.
long int_ord(const Int& n, long p);

// Q extended by +infinity.  +inf compares greater than every rational and
// absorbs addition; it is the valuation of 0.
class ExtRational {
public:
    ExtRational() : finite_(true), value_(0) {}
    explicit ExtRational(Rational v) : finite_(true), value_(std::move(v)) {}
    static ExtRational infinity() {
        ExtRational e;
        e.finite_ = false;
        return e;
    }

    bool is_infinite() const { return !finite_; }
    const Rational& finite() const {
        if (!finite_) throw std::logic_error("ExtRational: +infinity has no finite value");
        return value_;
    }

    ExtRational operator+(const ExtRational& o) const {
        if (!finite_ || !o.finite_) return infinity();
        return ExtRational(value_ + o.value_);
    }

    bool operator==(const ExtRational& o) const {
        if (finite_ != o.finite_) return false;
        return !finite_ || value_ == o.value_;
    }
    bool operator!=(const ExtRational& o) const { return !(*this == o); }
    bool operator<(const ExtRational& o) const {
        if (!finite_) return false;        // +inf < x never
        if (!o.finite_) return true;       // finite < +inf
        return value_ < o.value_;
    }
    bool operator<=(const ExtRational& o) const { return *this < o || *this == o; }
    bool operator>(const ExtRational& o) const { return o < *this; }
    bool operator>=(const ExtRational& o) const { return o <= *this; }

    std::string str() const { return finite_ ? to_string(value_) : "+inf"; }

private:
    bool finite_;
    Rational value_;
};

ExtRational ext_min(const ExtRational& a, const ExtRational& b);

// Exponent of p in x; +inf iff x = 0.
ExtRational val_p(const Rational& x, long p);

// val_p(j!) via Legendre's formula (j - s_p(j)) / (p - 1).
Rational factorial_val(unsigned long j, long p);

// |x|_p as the exact pair (p, exponent): |x| = p^exponent, or zero.
// Kept symbolic; to_double converts at report time.
struct PAbs {
    long prime = 0;
    bool zero = true;
    Rational exponent;   // meaningful only when !zero

    bool operator==(const PAbs& o) const {
        if (zero != o.zero) return false;
        return zero || (prime == o.prime && exponent == o.exponent);
    }
    // zero < any nonzero; otherwise compare exponents (same prime assumed).
    bool operator<(const PAbs& o) const;
    bool operator<=(const PAbs& o) const { return *this < o || *this == o; }

    PAbs operator*(const PAbs& o) const;

    double to_double() const;
    std::string str() const;
};

PAbs ultrametric_abs(const Rational& x, long p);

}  // namespace trunclab
