#include "trunclab/fp_poly.hpp"

#include <random>
#include <stdexcept>

namespace trunclab {

namespace {

using u64 = unsigned long;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>((u128)a * b % p); }

u64 powmod_u(u64 a, u64 e, u64 p) {
    u64 r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

u64 invmod(u64 a, u64 p) {
    if (a % p == 0) throw std::invalid_argument("invmod: zero element");
    return powmod_u(a % p, p - 2, p);
}

void check_same_prime(const FpPoly& a, const FpPoly& b) {
    if (a.p != b.p) throw std::logic_error("FpPoly: mixed primes");
}

}  // namespace

long FpPoly::degree() const {
    for (long i = static_cast<long>(c.size()) - 1; i >= 0; --i)
        if (c[static_cast<size_t>(i)] != 0) return i;
    return -1;
}

unsigned long FpPoly::at(long i) const {
    if (i < 0 || i >= static_cast<long>(c.size())) return 0;
    return c[static_cast<size_t>(i)];
}

void FpPoly::trim() { c.resize(static_cast<size_t>(degree() + 1)); }

FpPoly fp_make(long p, std::vector<unsigned long> coeffs) {
    require_prime(p);
    FpPoly f;
    f.p = p;
    f.c = std::move(coeffs);
    for (auto& x : f.c) x %= static_cast<u64>(p);
    f.trim();
    return f;
}

unsigned long fp_reduce(const Rational& x, long p) {
    if (x == 0) return 0;
    ExtRational v = val_p(x, p);
    if (v.finite() < 0) throw std::invalid_argument("fp_reduce: negative valuation");
    if (v.finite() > 0) return 0;
    Int num(x.get_num()), den(x.get_den());
    u64 n = mpz_fdiv_ui(num.get_mpz_t(), static_cast<u64>(p));
    u64 d = mpz_fdiv_ui(den.get_mpz_t(), static_cast<u64>(p));
    return mulmod(n, invmod(d, static_cast<u64>(p)), static_cast<u64>(p));
}

FpPoly fp_add(const FpPoly& a, const FpPoly& b) {
    check_same_prime(a, b);
    FpPoly r;
    r.p = a.p;
    r.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < r.c.size(); ++i)
        r.c[i] = (a.at(static_cast<long>(i)) + b.at(static_cast<long>(i))) % static_cast<u64>(a.p);
    r.trim();
    return r;
}

FpPoly fp_sub(const FpPoly& a, const FpPoly& b) {
    check_same_prime(a, b);
    FpPoly r;
    r.p = a.p;
    r.c.resize(std::max(a.c.size(), b.c.size()), 0);
    u64 p = static_cast<u64>(a.p);
    for (size_t i = 0; i < r.c.size(); ++i)
        r.c[i] = (a.at(static_cast<long>(i)) + p - b.at(static_cast<long>(i))) % p;
    r.trim();
    return r;
}

FpPoly fp_mul(const FpPoly& a, const FpPoly& b) {
    check_same_prime(a, b);
    FpPoly r;
    r.p = a.p;
    long da = a.degree(), db = b.degree();
    if (da < 0 || db < 0) return r;
    r.c.assign(static_cast<size_t>(da + db + 1), 0);
    u64 p = static_cast<u64>(a.p);
    for (long i = 0; i <= da; ++i) {
        if (a.c[static_cast<size_t>(i)] == 0) continue;
        for (long j = 0; j <= db; ++j) {
            u64& slot = r.c[static_cast<size_t>(i + j)];
            slot = (slot + (u128)a.c[static_cast<size_t>(i)] * b.c[static_cast<size_t>(j)]) % p;
        }
    }
    return r;
}

FpPoly fp_mod(const FpPoly& a, const FpPoly& m) {
    check_same_prime(a, m);
    long dm = m.degree();
    if (dm < 0) throw std::invalid_argument("fp_mod: zero modulus");
    FpPoly r = a;
    u64 p = static_cast<u64>(a.p);
    u64 lead_inv = invmod(m.c[static_cast<size_t>(dm)], p);
    for (long i = r.degree(); i >= dm; i = r.degree()) {
        u64 q = mulmod(r.c[static_cast<size_t>(i)], lead_inv, p);
        for (long j = 0; j <= dm; ++j) {
            u64& slot = r.c[static_cast<size_t>(i - dm + j)];
            slot = (slot + p - mulmod(q, m.c[static_cast<size_t>(j)], p)) % p;
        }
        r.c[static_cast<size_t>(i)] = 0;  // guard against rounding of the loop head
    }
    r.trim();
    return r;
}

FpPoly fp_divexact(const FpPoly& a, const FpPoly& b) {
    check_same_prime(a, b);
    long db = b.degree();
    if (db < 0) throw std::invalid_argument("fp_divexact: zero divisor");
    FpPoly r = a, q;
    q.p = a.p;
    long da = a.degree();
    if (da < db) {
        if (da >= 0) throw std::logic_error("fp_divexact: not divisible");
        return q;
    }
    q.c.assign(static_cast<size_t>(da - db + 1), 0);
    u64 p = static_cast<u64>(a.p);
    u64 lead_inv = invmod(b.c[static_cast<size_t>(db)], p);
    for (long i = r.degree(); i >= db; i = r.degree()) {
        u64 qc = mulmod(r.c[static_cast<size_t>(i)], lead_inv, p);
        q.c[static_cast<size_t>(i - db)] = qc;
        for (long j = 0; j <= db; ++j) {
            u64& slot = r.c[static_cast<size_t>(i - db + j)];
            slot = (slot + p - mulmod(qc, b.c[static_cast<size_t>(j)], p)) % p;
        }
        r.c[static_cast<size_t>(i)] = 0;
    }
    if (!r.is_zero()) throw std::logic_error("fp_divexact: not divisible");
    return q;
}

FpPoly fp_gcd(FpPoly a, FpPoly b) {
    check_same_prime(a, b);
    while (!b.is_zero()) {
        FpPoly r = fp_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return fp_monic(std::move(a));
}

FpPoly fp_derivative(const FpPoly& f) {
    FpPoly r;
    r.p = f.p;
    if (f.c.size() <= 1) return r;
    r.c.resize(f.c.size() - 1);
    for (size_t i = 1; i < f.c.size(); ++i)
        r.c[i - 1] = mulmod(f.c[i], i % static_cast<u64>(f.p), static_cast<u64>(f.p));
    r.trim();
    return r;
}

FpPoly fp_monic(FpPoly f) {
    long d = f.degree();
    if (d < 0) return f;
    u64 p = static_cast<u64>(f.p);
    u64 inv = invmod(f.c[static_cast<size_t>(d)], p);
    for (auto& x : f.c) x = mulmod(x, inv, p);
    f.trim();
    return f;
}

FpPoly fp_powmod(const FpPoly& base, const Int& e, const FpPoly& m) {
    FpPoly r = fp_make(base.p, {1});
    FpPoly b = fp_mod(base, m);
    Int k = e;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) r = fp_mod(fp_mul(r, b), m);
        b = fp_mod(fp_mul(b, b), m);
        k >>= 1;
    }
    return r;
}

unsigned long fp_eval(const FpPoly& f, unsigned long x) {
    u64 p = static_cast<u64>(f.p);
    u64 acc = 0;
    for (long i = f.degree(); i >= 0; --i)
        acc = (mulmod(acc, x, p) + f.c[static_cast<size_t>(i)]) % p;
    return acc;
}

bool fp_equal(const FpPoly& a, const FpPoly& b) {
    if (a.p != b.p) return false;
    long d = std::max(a.degree(), b.degree());
    for (long i = 0; i <= d; ++i)
        if (a.at(i) != b.at(i)) return false;
    return true;
}

std::string fp_to_string(const FpPoly& f) {
    if (f.is_zero()) return "0";
    std::string s;
    for (long i = f.degree(); i >= 0; --i) {
        if (f.at(i) == 0) continue;
        if (!s.empty()) s += " + ";
        if (i == 0 || f.at(i) != 1) s += std::to_string(f.at(i));
        if (i > 0) s += "y";
        if (i > 1) s += "^" + std::to_string(i);
    }
    return s + " (mod " + std::to_string(f.p) + ")";
}

bool fp_separable(const FpPoly& f) {
    FpPoly d = fp_derivative(f);
    if (d.is_zero()) return f.degree() <= 0;
    return fp_gcd(f, d).degree() == 0;
}

std::vector<std::pair<unsigned long, long>> fp_roots(const FpPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("fp_roots: zero polynomial");
    std::vector<std::pair<unsigned long, long>> roots;
    for (u64 x = 0; x < static_cast<u64>(f.p); ++x) {
        if (fp_eval(f, x) != 0) continue;
        // multiplicity by repeated synthetic division
        FpPoly g = f;
        long mult = 0;
        while (!g.is_zero() && fp_eval(g, x) == 0) {
            // divide by (y - x)
            long d = g.degree();
            FpPoly q;
            q.p = g.p;
            q.c.assign(static_cast<size_t>(std::max<long>(d, 1)), 0);
            u64 acc = g.c[static_cast<size_t>(d)];
            for (long j = d - 1; j >= 0; --j) {
                q.c[static_cast<size_t>(j)] = acc;
                acc = (g.at(j) + mulmod(acc, x, static_cast<u64>(g.p))) % static_cast<u64>(g.p);
            }
            g = std::move(q);
            g.trim();
            ++mult;
        }
        roots.emplace_back(x, mult);
    }
    return roots;
}

std::vector<std::pair<long, long>> fp_distinct_degrees(const FpPoly& f_in) {
    FpPoly f = fp_monic(f_in);
    if (f.degree() <= 0) return {};
    if (!fp_separable(f)) throw std::invalid_argument("fp_distinct_degrees: input not squarefree");
    std::vector<std::pair<long, long>> out;
    FpPoly x = fp_make(f.p, {0, 1});
    FpPoly h = x;  // y^(p^d) mod f, starting at d = 0
    long d = 0;
    while (f.degree() > 0) {
        ++d;
        h = fp_powmod(h, Int(f.p), f);
        FpPoly g = fp_gcd(fp_sub(h, fp_mod(x, f)), f);
        if (g.degree() > 0) {
            out.emplace_back(d, g.degree() / d);
            f = fp_divexact(f, g);
            h = fp_mod(h, f);
        }
        if (2 * (d + 1) > f.degree() && f.degree() > 0) {
            out.emplace_back(f.degree(), 1);  // what remains is irreducible
            break;
        }
    }
    return out;
}

namespace {

// Cantor-Zassenhaus split of a squarefree product of irreducibles of equal
// degree d into the irreducible factors.
void equal_degree_split(const FpPoly& f, long d, std::mt19937_64& rng,
                        std::vector<FpPoly>& out) {
    long n = f.degree();
    if (n == d) {
        out.push_back(fp_monic(f));
        return;
    }
    u64 p = static_cast<u64>(f.p);
    while (true) {
        FpPoly a;
        a.p = f.p;
        a.c.resize(static_cast<size_t>(n));
        for (auto& x : a.c) x = rng() % p;
        a.trim();
        if (a.degree() < 1) continue;

        FpPoly g = fp_gcd(a, f);
        if (g.degree() > 0 && g.degree() < n) {
            equal_degree_split(g, d, rng, out);
            equal_degree_split(fp_divexact(f, g), d, rng, out);
            return;
        }
        FpPoly b;
        if (p == 2) {
            // trace map: a + a^2 + a^4 + ... + a^(2^(d-1)) mod f
            FpPoly t = fp_mod(a, f), term = t;
            for (long i = 1; i < d; ++i) {
                term = fp_mod(fp_mul(term, term), f);
                t = fp_add(t, term);
            }
            b = t;
        } else {
            Int e;
            mpz_ui_pow_ui(e.get_mpz_t(), p, static_cast<unsigned long>(d));
            e = (e - 1) / 2;
            b = fp_sub(fp_powmod(a, e, f), fp_make(f.p, {1}));
        }
        g = fp_gcd(b, f);
        if (g.degree() > 0 && g.degree() < n) {
            equal_degree_split(g, d, rng, out);
            equal_degree_split(fp_divexact(f, g), d, rng, out);
            return;
        }
    }
}

}  // namespace

std::vector<std::pair<FpPoly, long>> fp_factor(const FpPoly& f_in, std::uint64_t seed) {
    FpPoly f = fp_monic(f_in);
    if (f.degree() < 0) throw std::invalid_argument("fp_factor: zero polynomial");
    std::vector<std::pair<FpPoly, long>> factors;
    if (f.degree() == 0) return factors;

    std::mt19937_64 rng(seed);
    u64 p = static_cast<u64>(f.p);

    // Squarefree reduction: peel gcd(f, f'), handling p-th powers.
    std::vector<std::pair<FpPoly, long>> square_free_parts;  // (squarefree, multiplicity)
    std::vector<std::pair<FpPoly, long>> work{{f, 1}};
    while (!work.empty()) {
        auto [g, mult] = work.back();
        work.pop_back();
        if (g.degree() <= 0) continue;
        FpPoly der = fp_derivative(g);
        if (der.is_zero()) {
            // g = h(y^p): p-th root by exponent division
            FpPoly h;
            h.p = g.p;
            h.c.assign(static_cast<size_t>(g.degree() / f.p + 1), 0);
            for (long i = 0; i <= g.degree(); i += f.p)
                h.c[static_cast<size_t>(i / f.p)] = g.at(i);
            work.emplace_back(h, mult * f.p);
            continue;
        }
        FpPoly s = fp_gcd(g, der);
        if (s.degree() == 0) {
            square_free_parts.emplace_back(fp_monic(g), mult);
        } else {
            square_free_parts.emplace_back(fp_divexact(g, s), mult);
            work.emplace_back(s, mult);
        }
    }

    // Merge repeated squarefree parts by multiplying out per multiplicity is
    // unnecessary: factor each part and accumulate multiplicities.
    for (auto& [part, mult] : square_free_parts) {
        if (part.degree() <= 0) continue;
        FpPoly rest = part;
        long d = 0;
        FpPoly x = fp_make(part.p, {0, 1});
        FpPoly h = fp_mod(x, rest);
        while (rest.degree() > 0) {
            ++d;
            if (2 * d > rest.degree()) {
                factors.emplace_back(fp_monic(rest), mult);
                break;
            }
            h = fp_powmod(h, Int(static_cast<long>(p)), rest);
            FpPoly g = fp_gcd(fp_sub(h, fp_mod(x, rest)), rest);
            if (g.degree() > 0) {
                std::vector<FpPoly> pieces;
                equal_degree_split(g, d, rng, pieces);
                for (auto& piece : pieces) factors.emplace_back(piece, mult);
                rest = fp_divexact(rest, g);
                h = fp_mod(h, rest);
            }
        }
    }

    // Deterministic order: by degree, then lexicographic coefficients.
    std::sort(factors.begin(), factors.end(), [](const auto& a, const auto& b) {
        if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
        return a.first.c < b.first.c;
    });

    // Merge duplicates (same factor from different multiplicity layers).
    std::vector<std::pair<FpPoly, long>> merged;
    for (auto& fm : factors) {
        if (!merged.empty() && fp_equal(merged.back().first, fm.first))
            merged.back().second += fm.second;
        else
            merged.push_back(fm);
    }
    return merged;
}

}  // namespace trunclab
