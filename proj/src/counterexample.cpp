#include "trunclab/counterexample.hpp"

#include <mutex>
#include <stdexcept>

namespace trunclab {

namespace {

// Truncation mod T^k of the integer power series (1+T)^(-(m+1)):
// coefficient of T^i is (-1)^i * C(m+i, i).
ZPoly inverse_one_plus_t_power(long m_plus_1, long k) {
    ZPoly r;
    r.coeff.assign(static_cast<size_t>(k), Int(0));
    Int binom(1);
    for (long i = 0; i < k; ++i) {
        r.coeff[static_cast<size_t>(i)] = (i % 2 == 0) ? binom : Int(-binom);
        // C(m+i+1, i+1) = C(m+i, i) * (m+i+1) / (i+1)
        binom *= Int(m_plus_1 + i);
        binom /= Int(i + 1);
    }
    return r;
}

ZPoly truncate_z(const ZPoly& f, long k) {
    ZPoly r;
    r.coeff.assign(f.coeff.begin(),
                   f.coeff.begin() + std::min<size_t>(f.coeff.size(), static_cast<size_t>(k)));
    return r;
}

ZPoly binomial_row(long n, long k) {  // (1+T)^n truncated mod T^k
    ZPoly r;
    r.coeff.assign(static_cast<size_t>(k), Int(0));
    Int binom(1);
    for (long i = 0; i < k && i <= n; ++i) {
        r.coeff[static_cast<size_t>(i)] = binom;
        binom *= Int(n - i);
        binom /= Int(i + 1);
    }
    return r;
}

}  // namespace

ZPoly interpolation_step(const ZPoly& f, long n) {
    long m = f.degree();
    if (m < 0) throw std::invalid_argument("interpolation_step: zero polynomial");
    if (n <= m + 1)
        throw std::invalid_argument("interpolation_step: need n > deg(f) + 1");

    const long k = n - m - 1;  // congruence length mod T^k

    // g = -(f(1+T) + (1+T)^n) * (1+T)^(-(m+1))  mod T^k
    ZPoly shifted = truncate_z(z_taylor_shift(f, Int(1)), k);
    ZPoly a = z_add(shifted, binomial_row(n, k));
    ZPoly g = truncate_z(z_mul(a, inverse_one_plus_t_power(m + 1, k)), k);
    for (auto& c : g.coeff) c = -c;

    // F = f + T^(m+1) g(T-1) + T^n
    ZPoly g_shift = z_taylor_shift(g, Int(-1));
    ZPoly F;
    F.coeff.assign(static_cast<size_t>(n + 1), Int(0));
    for (long j = 0; j <= m; ++j) F.coeff[static_cast<size_t>(j)] = f.at(j);
    for (long j = 0; j < k; ++j)
        F.coeff[static_cast<size_t>(m + 1 + j)] += g_shift.at(j);
    F.coeff[static_cast<size_t>(n)] += 1;

    // Re-verify both congruences before returning.
    if (!F.monic() || F.degree() != n)
        throw std::logic_error("interpolation_step: output not monic of the requested degree");
    for (long j = 0; j <= m; ++j)
        if (F.at(j) != f.at(j))
            throw std::logic_error("interpolation_step: truncation congruence failed");
    ZPoly rem = F;
    for (long i = 0; i < k; ++i) {
        auto [q, r] = z_divide_by_t_minus_1(rem);
        if (r != 0) throw std::logic_error("interpolation_step: (T-1)^k divisibility failed");
        rem = q;
    }
    return F;
}

CounterexampleSequence build_sequence(long N) {
    if (N < 0) throw std::invalid_argument("build_sequence: N must be nonnegative");
    CounterexampleSequence seq;
    ZPoly f0;
    f0.coeff = {Int(0), Int(0), Int(1)};  // T^2
    seq.polys.push_back(f0);
    seq.degrees.push_back(2);
    for (long n = 0; n < N; ++n) {
        long next_degree = (8L << n) - 2;  // deg F_{n+1} = 2^(n+3) - 2
        seq.polys.push_back(interpolation_step(seq.polys.back(), next_degree));
        seq.degrees.push_back(next_degree);
    }
    // Sequence invariants: degrees, monicity, vanishing order, congruences.
    // With the base F_0 = T^2 the degrees are d_n = 2^(n+2) - 2 and each
    // constructed term (n >= 1) vanishes at T = 1 to order at least
    // d_n - d_{n-1} - 1 = 2^(n+1) - 1, half its degree.
    for (long n = 0; n <= N; ++n) {
        const ZPoly& F = seq.polys[static_cast<size_t>(n)];
        long dn = (4L << n) - 2;
        if (seq.degrees[static_cast<size_t>(n)] != dn || F.degree() != dn || !F.monic())
            throw std::logic_error("build_sequence: degree/monicity invariant failed");
        long required_order = n == 0 ? 0 : (2L << n) - 1;
        if (vanishing_order_at_one(F) < required_order)
            throw std::logic_error("build_sequence: vanishing order invariant failed");
        if (n > 0) {
            const ZPoly& prev = seq.polys[static_cast<size_t>(n - 1)];
            long d_prev = seq.degrees[static_cast<size_t>(n - 1)];
            for (long j = 0; j <= d_prev; ++j)
                if (F.at(j) != prev.at(j))
                    throw std::logic_error("build_sequence: coefficient stability failed");
        }
    }
    return seq;
}

Int limit_coefficient(long j) {
    if (j < 0) throw std::invalid_argument("limit_coefficient: negative index");
    static std::mutex mutex;
    static CounterexampleSequence cache = build_sequence(0);
    std::lock_guard<std::mutex> lock(mutex);
    while (cache.degrees.back() < j) {
        long n = static_cast<long>(cache.polys.size()) - 1;
        long next_degree = (8L << n) - 2;
        cache.polys.push_back(interpolation_step(cache.polys.back(), next_degree));
        cache.degrees.push_back(next_degree);
    }
    return cache.polys.back().at(j);
}

long vanishing_order_at_one(const ZPoly& F) {
    if (F.is_zero()) throw std::invalid_argument("vanishing_order_at_one: zero polynomial");
    long order = 0;
    ZPoly g = F;
    while (true) {
        auto [q, r] = z_divide_by_t_minus_1(g);
        if (r != 0) break;
        g = q;
        ++order;
        if (g.is_zero()) break;
    }
    return order;
}

Rational mass_at_one(const ZPoly& F) {
    if (F.is_zero()) throw std::invalid_argument("mass_at_one: zero polynomial");
    return make_rational(Int(vanishing_order_at_one(F)), Int(F.degree()));
}

}  // namespace trunclab
