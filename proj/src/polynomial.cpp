#include "trunclab/polynomial.hpp"

#include <algorithm>

namespace trunclab {

long RatPoly::degree() const {
    for (long j = static_cast<long>(coeff.size()) - 1; j >= 0; --j)
        if (coeff[j] != 0) return j;
    return -1;
}

long RatPoly::ord() const {
    for (long j = 0; j < static_cast<long>(coeff.size()); ++j)
        if (coeff[j] != 0) return j;
    return -1;
}

Rational RatPoly::at(long j) const {
    if (j < 0 || j >= static_cast<long>(coeff.size())) return Rational(0);
    return coeff[j];
}

Rational RatPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (long j = static_cast<long>(coeff.size()) - 1; j >= 0; --j)
        acc = acc * x + coeff[j];
    return acc;
}

RatPoly operator+(const RatPoly& a, const RatPoly& b) {
    RatPoly r;
    r.coeff.resize(std::max(a.coeff.size(), b.coeff.size()), Rational(0));
    for (size_t j = 0; j < r.coeff.size(); ++j) r.coeff[j] = a.at(j) + b.at(j);
    return r;
}

RatPoly operator-(const RatPoly& a, const RatPoly& b) {
    RatPoly r;
    r.coeff.resize(std::max(a.coeff.size(), b.coeff.size()), Rational(0));
    for (size_t j = 0; j < r.coeff.size(); ++j) r.coeff[j] = a.at(j) - b.at(j);
    return r;
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
    long da = a.degree(), db = b.degree();
    if (da < 0 || db < 0) return RatPoly{};
    RatPoly r;
    r.coeff.assign(static_cast<size_t>(da + db + 1), Rational(0));
    for (long i = 0; i <= da; ++i) {
        if (a.coeff[i] == 0) continue;
        for (long j = 0; j <= db; ++j)
            r.coeff[i + j] += a.coeff[i] * b.coeff[j];
    }
    return r;
}

RatPoly derivative(const RatPoly& f) {
    RatPoly r;
    if (f.coeff.size() <= 1) return r;
    r.coeff.resize(f.coeff.size() - 1);
    for (size_t j = 1; j < f.coeff.size(); ++j) r.coeff[j - 1] = f.coeff[j] * Rational(static_cast<long>(j));
    return r;
}

RatPoly taylor_shift(const RatPoly& f, const Rational& a) {
    RatPoly r = f;
    long n = static_cast<long>(r.coeff.size()) - 1;
    for (long k = 0; k < n; ++k)
        for (long j = n - 1; j >= k; --j)
            r.coeff[j] += a * r.coeff[j + 1];
    return r;
}

std::pair<RatPoly, Rational> divide_linear(const RatPoly& f, const Rational& a) {
    long d = f.degree();
    if (d < 0) return {RatPoly{}, Rational(0)};
    RatPoly q;
    q.coeff.assign(static_cast<size_t>(std::max<long>(d, 1)), Rational(0));
    // Horner: f = (T - a) q + r
    Rational acc = f.at(d);
    for (long j = d - 1; j >= 0; --j) {
        q.coeff[j] = acc;
        acc = f.at(j) + acc * a;
    }
    return {q, acc};
}

std::pair<long, RatPoly> vanishing_order_at(const RatPoly& f, const Rational& a) {
    long order = 0;
    RatPoly g = f;
    if (g.is_zero()) throw std::invalid_argument("vanishing_order_at: zero polynomial");
    while (true) {
        auto [q, r] = divide_linear(g, a);
        if (r != 0) break;
        g = q;
        ++order;
        if (g.is_zero()) break;
    }
    return {order, g};
}

RatPoly rat_gcd(RatPoly a, RatPoly b) {
    auto normalize = [](RatPoly& f) {
        long d = f.degree();
        if (d < 0) return;
        Rational lead = f.at(d);
        f.coeff.resize(static_cast<size_t>(d + 1));
        for (auto& c : f.coeff) c /= lead;
    };
    normalize(a);
    normalize(b);
    while (!b.is_zero()) {
        // remainder of a by b
        long db = b.degree();
        RatPoly r = a;
        while (r.degree() >= db) {
            long dr = r.degree();
            Rational q = r.at(dr) / b.at(db);
            for (long j = 0; j <= db; ++j)
                r.coeff[dr - db + j] -= q * b.coeff[j];
            r.coeff[dr] = 0;
        }
        a = b;
        b = r;
        normalize(b);
    }
    normalize(a);
    return a;
}

RatPoly rat_divexact(const RatPoly& a, const RatPoly& b) {
    long db = b.degree();
    if (db < 0) throw std::invalid_argument("rat_divexact: zero divisor");
    long da = a.degree();
    RatPoly q;
    if (da < db) {
        if (da >= 0) throw std::logic_error("rat_divexact: not divisible");
        return q;
    }
    RatPoly r = a;
    q.coeff.assign(static_cast<size_t>(da - db + 1), Rational(0));
    for (long i = r.degree(); i >= db; i = r.degree()) {
        Rational qc = r.at(i) / b.at(db);
        q.coeff[static_cast<size_t>(i - db)] = qc;
        for (long j = 0; j <= db; ++j)
            r.coeff[static_cast<size_t>(i - db + j)] -= qc * b.at(j);
        r.coeff[static_cast<size_t>(i)] = 0;
    }
    if (!r.is_zero()) throw std::logic_error("rat_divexact: not divisible");
    return q;
}

TruncationPolynomial make_poly(std::vector<Rational> coeffs, std::string origin) {
    TruncationPolynomial t;
    long n = static_cast<long>(coeffs.size()) - 1;
    t.poly = RatPoly(std::move(coeffs));
    t.origin_series = std::move(origin);
    t.origin_n = n;
    return t;
}

long ZPoly::degree() const {
    for (long j = static_cast<long>(coeff.size()) - 1; j >= 0; --j)
        if (coeff[j] != 0) return j;
    return -1;
}

Int ZPoly::at(long j) const {
    if (j < 0 || j >= static_cast<long>(coeff.size())) return Int(0);
    return coeff[j];
}

bool ZPoly::monic() const {
    long d = degree();
    return d >= 0 && coeff[d] == 1;
}

ZPoly z_add(const ZPoly& a, const ZPoly& b) {
    ZPoly r;
    r.coeff.resize(std::max(a.coeff.size(), b.coeff.size()), Int(0));
    for (size_t j = 0; j < r.coeff.size(); ++j) r.coeff[j] = a.at(j) + b.at(j);
    return r;
}

ZPoly z_mul(const ZPoly& a, const ZPoly& b) {
    long da = a.degree(), db = b.degree();
    if (da < 0 || db < 0) return ZPoly{};
    ZPoly r;
    r.coeff.assign(static_cast<size_t>(da + db + 1), Int(0));
    for (long i = 0; i <= da; ++i) {
        if (a.coeff[i] == 0) continue;
        for (long j = 0; j <= db; ++j) r.coeff[i + j] += a.coeff[i] * b.coeff[j];
    }
    return r;
}

bool z_equal(const ZPoly& a, const ZPoly& b) {
    long d = std::max(a.degree(), b.degree());
    for (long j = 0; j <= d; ++j)
        if (a.at(j) != b.at(j)) return false;
    return true;
}

ZPoly z_taylor_shift(const ZPoly& f, const Int& a) {
    ZPoly r = f;
    long n = static_cast<long>(r.coeff.size()) - 1;
    for (long k = 0; k < n; ++k)
        for (long j = n - 1; j >= k; --j)
            r.coeff[j] += a * r.coeff[j + 1];
    return r;
}

std::pair<ZPoly, Int> z_divide_by_t_minus_1(const ZPoly& f) {
    long d = f.degree();
    if (d < 0) return {ZPoly{}, Int(0)};
    ZPoly q;
    q.coeff.assign(static_cast<size_t>(std::max<long>(d, 1)), Int(0));
    Int acc = f.at(d);
    for (long j = d - 1; j >= 0; --j) {
        q.coeff[j] = acc;
        acc = f.at(j) + acc;
    }
    return {q, acc};
}

TruncationPolynomial to_truncation(const ZPoly& f, std::string origin, long n) {
    std::vector<Rational> c(static_cast<size_t>(n + 1), Rational(0));
    for (long j = 0; j <= n; ++j) c[static_cast<size_t>(j)] = Rational(f.at(j));
    TruncationPolynomial t;
    t.poly = RatPoly(std::move(c));
    t.origin_series = std::move(origin);
    t.origin_n = n;
    return t;
}

}  // namespace trunclab
