#include "trunclab/factor.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace trunclab {

namespace {

Rational p_power(long p, long e) {
    Int num;
    mpz_ui_pow_ui(num.get_mpz_t(), static_cast<unsigned long>(p),
                  static_cast<unsigned long>(e >= 0 ? e : -e));
    return e >= 0 ? Rational(num) : make_rational(Int(1), num);
}

long as_long(const Rational& x) {
    if (x.get_den() != 1) throw std::logic_error("expected an integer-valued rational");
    return static_cast<long>(x.get_num().get_si());
}

// g(p^v U): coefficient a_j * p^(jv).
RatPoly rescale(const RatPoly& g, long p, long v) {
    RatPoly r = g;
    Rational scale(1);
    Rational step = p_power(p, v);
    for (size_t j = 0; j < r.coeff.size(); ++j) {
        r.coeff[j] *= scale;
        scale *= step;
    }
    return r;
}

// Divide by the p-content so the minimal coefficient valuation is 0.
RatPoly normalize_content(const RatPoly& g, long p) {
    bool found = false;
    Rational minval(0);
    for (const auto& c : g.coeff) {
        if (c == 0) continue;
        Rational v = val_p(c, p).finite();
        if (!found || v < minval) {
            minval = v;
            found = true;
        }
    }
    if (!found) throw std::invalid_argument("normalize_content: zero polynomial");
    RatPoly r = g;
    Rational scale = p_power(p, -as_long(minval));
    for (auto& c : r.coeff) c *= scale;
    return r;
}

FpPoly reduce_poly(const RatPoly& g, long p) {
    FpPoly r;
    r.p = p;
    r.c.resize(g.coeff.size(), 0);
    for (size_t j = 0; j < g.coeff.size(); ++j)
        if (g.coeff[j] != 0) r.c[j] = fp_reduce(g.coeff[j], p);
    r.trim();
    return r;
}

// Resultant over Q via the Euclidean chain; exact, for moderate degrees.
Rational resultant(RatPoly f, RatPoly g) {
    long df = f.degree(), dg = g.degree();
    if (df < 0 || dg < 0) return Rational(0);
    Rational res(1);
    while (true) {
        df = f.degree();
        dg = g.degree();
        if (dg == 0) {
            Rational lg = g.at(0);
            Rational acc(1);
            for (long i = 0; i < df; ++i) acc *= lg;
            return res * acc;
        }
        // remainder of f by g
        RatPoly r = f;
        while (r.degree() >= dg) {
            long dr = r.degree();
            Rational q = r.at(dr) / g.at(dg);
            for (long j = 0; j <= dg; ++j)
                r.coeff[static_cast<size_t>(dr - dg + j)] -= q * g.at(j);
            r.coeff[static_cast<size_t>(dr)] = 0;
        }
        long drem = r.degree();
        if (drem < 0) return Rational(0);
        Rational lg = g.at(dg);
        Rational acc(1);
        for (long i = 0; i < df - drem; ++i) acc *= lg;
        if ((df % 2) && (dg % 2)) res = -res;
        res *= acc;
        f = std::move(g);
        g = std::move(r);
    }
}

// Squarefree certificate mod a machine prime q: gcd(f mod q, f' mod q) = 1
// implies disc(f) != 0.  Returns false on bad reduction (retry with
// another q) or a nontrivial modular gcd.
bool squarefree_mod_q(const RatPoly& f, long q) {
    for (const auto& c : f.coeff)
        if (mpz_fdiv_ui(Int(c.get_den()).get_mpz_t(), static_cast<unsigned long>(q)) == 0)
            return false;
    FpPoly fq;
    fq.p = q;
    fq.c.resize(f.coeff.size(), 0);
    for (size_t j = 0; j < f.coeff.size(); ++j)
        if (f.coeff[j] != 0) fq.c[j] = fp_reduce(f.coeff[j], q);
    fq.trim();
    if (fq.degree() != f.degree()) return false;  // leading coefficient vanished
    return fp_gcd(fq, fp_derivative(fq)).degree() == 0;
}

// Yun's squarefree decomposition over Q: [(g_i, i)] with f = prod g_i^i up
// to a constant, each g_i squarefree.  complete = false means the
// multiplicity structure could not be certified economically (very large
// degree and not squarefree after peeling); callers must report undecided.
struct SquarefreeParts {
    std::vector<std::pair<RatPoly, long>> parts;
    bool complete = true;
};

SquarefreeParts squarefree_decomposition(const RatPoly& f_in) {
    SquarefreeParts out;
    RatPoly f = f_in;

    // Peel the high-multiplicity rational roots the series catalog actually
    // produces (0 and +-1) before any gcd work.
    for (const Rational& root : {Rational(0), Rational(1), Rational(-1)}) {
        if (f.degree() <= 0) break;
        auto [order, cofactor] = vanishing_order_at(f, root);
        if (order > 0) {
            RatPoly lin;
            lin.coeff = {-root, Rational(1)};
            out.parts.emplace_back(lin, order);
            f = std::move(cofactor);
        }
    }
    if (f.degree() <= 0) return out;

    for (long q : {1000003L, 1000033L, 2147483647L})
        if (squarefree_mod_q(f, q)) {
            out.parts.emplace_back(f, 1);
            return out;
        }
    if (f.degree() > 64) {
        out.complete = false;  // exact gcd at this size is not worth a hang
        return out;
    }

    RatPoly fp = derivative(f);
    RatPoly g = rat_gcd(f, fp);
    if (g.degree() <= 0) {
        out.parts.emplace_back(f, 1);
        return out;
    }
    RatPoly w = rat_divexact(f, g);
    long i = 1;
    while (w.degree() > 0) {
        RatPoly y = rat_gcd(w, g);
        RatPoly z = rat_divexact(w, y);
        if (z.degree() > 0) out.parts.emplace_back(z, i);
        g = rat_divexact(g, y);
        w = std::move(y);
        ++i;
    }
    return out;
}

struct CountState {
    long p;
    bool undecided = false;
};

long count_zp_roots(const RatPoly& s, CountState& st, int depth);

// Roots of s in the residue class c + pZ_p (all simple; s squarefree).
long count_in_class(const RatPoly& s, long c, CountState& st, int depth) {
    RatPoly shifted = c == 0 ? s : taylor_shift(s, Rational(c));
    return count_zp_roots(rescale(shifted, st.p, 1), st, depth);
}

// Number of Z_p roots of a squarefree s: simple residual roots lift by
// Hensel; multiple residual roots branch digit by digit down to `depth`.
long count_zp_roots(const RatPoly& s_in, CountState& st, int depth) {
    RatPoly s = s_in;
    long count = 0;
    if (s.is_zero()) throw std::logic_error("count_zp_roots: zero polynomial");
    long k = s.ord();
    if (k > 0) {
        count += 1;  // squarefree: T divides exactly once
        RatPoly reduced;
        reduced.coeff.assign(s.coeff.begin() + k, s.coeff.end());
        s = std::move(reduced);
        if (s.is_zero()) return count;
    }
    s = normalize_content(s, st.p);
    FpPoly sbar = reduce_poly(s, st.p);
    if (sbar.degree() <= 0) return count;  // reduction constant: no residual roots
    for (const auto& [root, mult] : fp_roots(sbar)) {
        if (mult == 1) {
            ++count;
        } else if (depth <= 0) {
            st.undecided = true;
        } else {
            count += count_in_class(s, static_cast<long>(root), st, depth - 1);
        }
    }
    return count;
}

// Roots of g with valuation exactly v (v integer): unit residual classes of
// the rescaled polynomial.
long count_roots_with_valuation(const RatPoly& g, long v, CountState& st, int depth) {
    RatPoly h = normalize_content(rescale(g, st.p, v), st.p);
    FpPoly hbar = reduce_poly(h, st.p);
    long count = 0;
    for (const auto& [root, mult] : fp_roots(hbar)) {
        if (root == 0) continue;  // valuation > v, handled by other slopes
        if (mult == 1) {
            ++count;
        } else if (depth <= 0) {
            st.undecided = true;
        } else {
            count += count_in_class(h, static_cast<long>(root), st, depth - 1);
        }
    }
    return count;
}

int default_branch_depth(const RatPoly& g, long p) {
    if (g.degree() > 32) return 40;
    Rational disc = resultant(g, derivative(g));
    if (disc == 0) return 40;  // not squarefree; callers pass squarefree parts
    ExtRational v = val_p(disc, p);
    long vv = std::max<long>(0, as_long(v.finite()));
    return static_cast<int>(std::min<long>(40, 2 * (1 + vv)));
}

}  // namespace

std::vector<SlopeFactor> slope_decomposition(const NewtonPolygon& np) {
    std::vector<SlopeFactor> out;
    for (const auto& seg : np.segments) {
        SlopeFactor sf;
        sf.slope = seg.slope;
        sf.h_length = seg.h_length;
        sf.ram_index = seg.ram_index;
        out.push_back(std::move(sf));
    }
    return out;
}

FpPoly residual_polynomial(const TruncationPolynomial& f, long p, const NewtonPolygon& np,
                           std::size_t segment_index) {
    if (segment_index >= np.segments.size())
        throw std::invalid_argument("residual_polynomial: segment index out of range");
    const PolygonSegment& seg = np.segments[segment_index];
    long j0 = np.vertices[segment_index].first;
    long u0 = as_long(np.vertices[segment_index].second);
    long e = seg.ram_index;
    long h = -as_long(seg.slope * Rational(e));  // slope = -h/e
    long m = seg.h_length / e;

    FpPoly r;
    r.p = p;
    r.c.assign(static_cast<size_t>(m + 1), 0);
    for (long t = 0; t <= m; ++t) {
        Rational a = f.at(j0 + t * e);
        if (a == 0) continue;
        Rational scaled = a * p_power(p, -(u0 - t * h));
        r.c[static_cast<size_t>(t)] = fp_reduce(scaled, p);
    }
    r.trim();
    if (r.degree() != m || r.at(0) == 0)
        throw std::logic_error("residual_polynomial: endpoints must be units");
    return r;
}

FactorCertificate certified_factor_degrees(const TruncationPolynomial& f, long p,
                                           std::uint64_t seed) {
    NewtonPolygon np = newton_polygon(f, p);
    FactorCertificate cert;
    cert.zero_root_order = np.origin_order;
    cert.degree = np.degree;

    std::map<long, long> exact;  // degree -> count
    for (size_t i = 0; i < np.segments.size(); ++i) {
        const PolygonSegment& seg = np.segments[i];
        FpPoly residual = residual_polynomial(f, p, np, i);
        if (fp_separable(residual)) {
            for (const auto& [factor, mult] : fp_factor(residual, seed)) {
                if (mult != 1)
                    throw std::logic_error("separable residual with repeated factor");
                exact[seg.ram_index * factor.degree()] += 1;
            }
        } else {
            cert.constraints.push_back({seg.ram_index, seg.h_length});
        }
    }
    for (const auto& [degree, count] : exact) cert.exact.push_back({degree, count});
    return cert;
}

QpRootCount qp_root_count(const TruncationPolynomial& f, long p, int depth_override) {
    require_prime(p);
    if (f.poly.is_zero()) throw std::invalid_argument("qp_root_count: zero polynomial");
    QpRootCount result;
    if (f.degree() == 0) return result;

    SquarefreeParts decomposition = squarefree_decomposition(f.poly);
    if (!decomposition.complete) result.certainty = Certainty::undecided;
    for (const auto& [part, mult] : decomposition.parts) {
        if (part.degree() <= 0) continue;
        CountState st{p};
        int depth = depth_override >= 0 ? depth_override : default_branch_depth(part, p);

        long count = 0;
        RatPoly g = part;
        long k = g.ord();
        if (k > 0) {
            count += 1;  // simple root at 0
            RatPoly reduced;
            reduced.coeff.assign(g.coeff.begin() + k, g.coeff.end());
            g = std::move(reduced);
        }
        if (g.degree() >= 1) {
            NewtonPolygon np = newton_polygon(g, p);
            for (const auto& seg : np.segments) {
                Rational lambda = -seg.slope;
                if (lambda.get_den() != 1) continue;  // no Q_p root on ramified slopes
                count += count_roots_with_valuation(g, as_long(lambda), st, depth);
            }
        }
        result.count += mult * count;
        if (st.undecided) result.certainty = Certainty::undecided;
    }
    return result;
}

std::pair<long, long> count_factors_leq(const FactorCertificate& cert, long d) {
    if (d < 1) throw std::invalid_argument("count_factors_leq: d must be positive");
    long lower = cert.zero_root_order;  // degree-1 factors T
    for (const auto& e : cert.exact)
        if (e.degree <= d) lower += e.count;
    long upper = lower;
    for (const auto& c : cert.constraints)
        if (c.ram_index <= d) upper += c.segment_degree_total / c.ram_index;
    return {lower, upper};
}

long max_certified_degree_bound(const FactorCertificate& cert) {
    long best = cert.zero_root_order > 0 ? 1 : 0;
    for (const auto& e : cert.exact) best = std::max(best, e.degree);
    for (const auto& c : cert.constraints) best = std::max(best, c.ram_index);
    return best;
}

std::vector<SequenceStatsRow> sequence_stats(const SeriesSpec& spec, long p, long n_min,
                                             long n_max, const SubsequenceFilter& filter,
                                             long d, std::uint64_t seed, ExecMode mode) {
    require_prime(p);
    std::vector<long> indices = select_indices(spec, n_min, n_max, filter);
    std::vector<SequenceStatsRow> rows(indices.size());
    for_each_index(indices.size(), mode, [&](size_t i) {
        long n = indices[i];
        TruncationPolynomial f = truncate(spec, n);
        if (f.poly.is_zero())
            throw std::invalid_argument("sequence_stats: zero truncation at n=" +
                                        std::to_string(n));
        SequenceStatsRow row;
        row.n = n;
        row.deg = f.degree();
        row.qp = qp_root_count(f, p);
        FactorCertificate cert = certified_factor_degrees(f, p, seed);
        auto [lo, hi] = count_factors_leq(cert, d);
        row.leq_d_lower = lo;
        row.leq_d_upper = hi;
        row.ratio_upper_over_n = make_rational(Int(hi), Int(n == 0 ? 1 : n));
        row.max_degree_lower_bound = max_certified_degree_bound(cert);
        rows[i] = std::move(row);
    });
    return rows;
}

}  // namespace trunclab
