#include "trunclab/berkovich.hpp"

#include <stdexcept>

namespace trunclab {

namespace {

// min_j (val_p(g_j) + j * rexp) over the nonzero coefficients.
Rational min_line_value(const RatPoly& g, long p, const Rational& rexp) {
    bool found = false;
    Rational best(0);
    for (long j = 0; j < static_cast<long>(g.coeff.size()); ++j) {
        const Rational& c = g.coeff[static_cast<size_t>(j)];
        if (c == 0) continue;
        Rational v = val_p(c, p).finite() + Rational(j) * rexp;
        if (!found || v < best) {
            best = v;
            found = true;
        }
    }
    if (!found) throw std::invalid_argument("zero polynomial has no Gauss seminorm");
    return best;
}

}  // namespace

PAbs gauss_seminorm(const TruncationPolynomial& f, const BerkovichPoint& pt, long p) {
    require_prime(p);
    RatPoly g = pt.center == 0 ? f.poly : taylor_shift(f.poly, pt.center);
    return PAbs{p, false, Rational(-min_line_value(g, p, pt.radius_exponent))};
}

Rational green_disk(const BerkovichPoint& pt, const Rational& R_exponent, long p) {
    require_prime(p);
    // log_p |T|(xi(c,r)) = -min(val_p(c), r_exponent), with val_p(0) = +inf.
    ExtRational vc = val_p(pt.center, p);
    Rational log_abs_T = vc.is_infinite() || pt.radius_exponent < vc.finite()
                             ? Rational(-pt.radius_exponent)
                             : Rational(-vc.finite());
    Rational g = log_abs_T + R_exponent;
    return g > 0 ? g : Rational(0);
}

long root_count_in_disk(const TruncationPolynomial& f, long p, const Disk& d) {
    require_prime(p);
    if (f.poly.is_zero()) throw std::invalid_argument("root_count_in_disk: zero polynomial");
    RatPoly g = d.center == 0 ? f.poly : taylor_shift(f.poly, d.center);
    NewtonPolygon np = newton_polygon(g, p);
    long count = np.origin_order;  // roots at the center, valuation +inf
    for (const auto& seg : np.segments) {
        Rational lambda = -seg.slope;
        bool inside = d.closed ? lambda >= d.radius_exponent : lambda > d.radius_exponent;
        if (inside) count += seg.h_length;
    }
    return count;
}

long reduction_degree(const TruncationPolynomial& f, long p, long v) {
    require_prime(p);
    if (f.poly.is_zero()) throw std::invalid_argument("reduction_degree: zero polynomial");
    bool found = false;
    Rational best(0);
    long arg = 0;
    for (long j = 0; j < static_cast<long>(f.poly.coeff.size()); ++j) {
        const Rational& c = f.poly.coeff[static_cast<size_t>(j)];
        if (c == 0) continue;
        Rational value = val_p(c, p).finite() + Rational(j) * Rational(v);
        if (!found || value < best || (value == best && j > arg)) {
            if (!found || value < best) best = value;
            arg = j;
            found = true;
        }
    }
    return arg;
}

BwReport bernstein_walsh_check(const TruncationPolynomial& f, long p,
                               const Rational& R_exponent,
                               std::span<const BerkovichPoint> sample) {
    require_prime(p);
    if (f.poly.is_zero()) throw std::invalid_argument("bernstein_walsh_check: zero polynomial");
    Rational norm_log = -min_line_value(f.poly, p, R_exponent);  // log_p ||f||_R
    Rational deg(f.degree());

    BwReport report;
    bool first = true;
    for (const auto& pt : sample) {
        BwSample s;
        s.point = pt;
        s.lhs_log = gauss_seminorm(f, pt, p).exponent;
        s.rhs_log = norm_log + deg * green_disk(pt, R_exponent, p);
        s.slack = s.rhs_log - s.lhs_log;
        if (s.slack < 0)
            throw std::logic_error("Bernstein-Walsh inequality violated: implementation bug");
        if (first || s.slack < report.min_slack) report.min_slack = s.slack;
        first = false;
        report.samples.push_back(std::move(s));
    }
    if (first) report.min_slack = Rational(0);
    return report;
}

}  // namespace trunclab
