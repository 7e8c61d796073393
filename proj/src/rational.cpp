#include "trunclab/rational.hpp"

#include <cmath>
#include <cstdio>

namespace trunclab {

Rational make_rational(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational rational_from_string(const std::string& s) {
    Rational q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("rational_from_string: cannot parse '" + s + "'");
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& x) { return x.get_str(); }

bool is_prime(long p) {
    if (p < 2) return false;
    Int z(p);
    return mpz_probab_prime_p(z.get_mpz_t(), 40) != 0;
}

void require_prime(long p) {
    if (!is_prime(p))
        throw std::invalid_argument("expected a prime >= 2, got " + std::to_string(p));
}

long int_ord(const Int& n, long p) {
    if (n == 0) throw std::invalid_argument("int_ord: zero argument");
    Int rem, pz(p);
    return static_cast<long>(mpz_remove(rem.get_mpz_t(), n.get_mpz_t(), pz.get_mpz_t()));
}

ExtRational ext_min(const ExtRational& a, const ExtRational& b) { return a < b ? a : b; }

ExtRational val_p(const Rational& x, long p) {
    require_prime(p);
    if (x == 0) return ExtRational::infinity();
    long vn = int_ord(Int(x.get_num()), p);
    long vd = int_ord(Int(x.get_den()), p);
    return ExtRational(Rational(vn - vd));
}

Rational factorial_val(unsigned long j, long p) {
    require_prime(p);
    unsigned long digit_sum = 0;
    for (unsigned long m = j; m > 0; m /= static_cast<unsigned long>(p))
        digit_sum += m % static_cast<unsigned long>(p);
    // (j - s_p(j)) is always divisible by p - 1; keep the Rational type anyway.
    return make_rational(Int(j - digit_sum), Int(p - 1));
}

bool PAbs::operator<(const PAbs& o) const {
    if (zero) return !o.zero;
    if (o.zero) return false;
    return exponent < o.exponent;
}

PAbs PAbs::operator*(const PAbs& o) const {
    if (zero || o.zero) return PAbs{prime ? prime : o.prime, true, Rational(0)};
    if (prime != o.prime) throw std::logic_error("PAbs: mixed primes");
    return PAbs{prime, false, exponent + o.exponent};
}

double PAbs::to_double() const {
    if (zero) return 0.0;
    return std::pow(static_cast<double>(prime), exponent.get_d());
}

std::string PAbs::str() const {
    if (zero) return "0";
    return std::to_string(prime) + "^(" + to_string(exponent) + ")";
}

PAbs ultrametric_abs(const Rational& x, long p) {
    ExtRational v = val_p(x, p);
    if (v.is_infinite()) return PAbs{p, true, Rational(0)};
    return PAbs{p, false, Rational(-v.finite())};
}

}  // namespace trunclab
