#include "trunclab/series.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

#include "trunclab/counterexample.hpp"

namespace trunclab {

namespace {

long ceil_sqrt(long j) {
    if (j <= 0) return 0;
    long s = static_cast<long>(std::sqrt(static_cast<double>(j)));
    while (s * s > j) --s;
    while ((s + 1) * (s + 1) <= j) ++s;
    return s * s == j ? s : s + 1;
}

bool power_of_two(long j) { return j >= 1 && (j & (j - 1)) == 0; }

Rational pow_rational(const Rational& c, long e) {
    Rational r(1);
    Rational base = c;
    long k = e;
    while (k > 0) {
        if (k & 1) r *= base;
        base *= base;
        k >>= 1;
    }
    return r;
}

Int pow_int(long b, long e) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(b), static_cast<unsigned long>(e));
    return r;
}

// Spot-check agreement of the closed-form valuation rule with the
// coefficient rule for small indices.
void validate_valuation_rule(const SeriesSpec& spec, long extra_prime) {
    if (!spec.valuation_rule) return;
    std::vector<long> primes = {2, 3, 5, 7};
    if (extra_prime > 0 && std::find(primes.begin(), primes.end(), extra_prime) == primes.end())
        primes.push_back(extra_prime);
    for (long p : primes)
        for (long j = 0; j <= 64; ++j)
            if (val_p(spec.coeff_rule(j), p) != spec.valuation_rule(j, p))
                throw std::logic_error("series '" + spec.name +
                                       "': valuation rule disagrees with coefficients at j=" +
                                       std::to_string(j) + ", p=" + std::to_string(p));
}

// log2 |x| for a nonzero rational, safe for huge values.
double log2_abs(const Rational& x) {
    long en = 0, ed = 0;
    double dn = mpz_get_d_2exp(&en, Int(x.get_num()).get_mpz_t());
    double dd = mpz_get_d_2exp(&ed, Int(x.get_den()).get_mpz_t());
    return (std::log2(std::fabs(dn)) + static_cast<double>(en)) -
           (std::log2(std::fabs(dd)) + static_cast<double>(ed));
}

}  // namespace

SeriesSpec make_exp_series() {
    SeriesSpec s;
    s.name = "exp";
    s.coeff_rule = [](long j) {
        Int fact;
        mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(j));
        return make_rational(Int(1), fact);
    };
    s.valuation_rule = [](long j, long p) {
        return ExtRational(-factorial_val(static_cast<unsigned long>(j), p));
    };
    s.valuation_growth = [](long p) {
        return std::optional<Rational>(make_rational(Int(-1), Int(p - 1)));
    };
    s.tate_rule = [](long p, const Rational& rexp) {
        Rational critical = make_rational(Int(1), Int(p - 1));
        TateVerdict v;
        if (rexp > critical) {
            v.status = TateStatus::member;
            v.witness = "val_p(a_j) + j*rexp = j*(rexp - 1/(p-1)) + s_p(j)/(p-1) -> +inf";
        } else {
            v.status = TateStatus::non_member;
            v.witness = rexp == critical
                            ? "on the critical radius the excess is s_p(j)/(p-1), bounded along j = p^k"
                            : "excess -> -inf along j = p^k";
        }
        return v;
    };
    validate_valuation_rule(s, 0);
    return s;
}

SeriesSpec make_geometric_series() {
    SeriesSpec s;
    s.name = "geometric";
    s.coeff_rule = [](long) { return Rational(1); };
    s.valuation_rule = [](long, long) { return ExtRational(Rational(0)); };
    s.valuation_growth = [](long) { return std::optional<Rational>(Rational(0)); };
    s.tate_rule = [](long, const Rational& rexp) {
        TateVerdict v;
        if (rexp > 0) {
            v.status = TateStatus::member;
            v.witness = "excess = j*rexp -> +inf";
        } else {
            v.status = TateStatus::non_member;
            v.witness = "|a_j| R^j = p^(-j*rexp) does not tend to 0 for rexp <= 0";
        }
        return v;
    };
    validate_valuation_rule(s, 0);
    return s;
}

SeriesSpec make_scaled_geometric_series(const Rational& c) {
    if (c == 0) throw std::invalid_argument("scaled-geometric: c must be nonzero");
    SeriesSpec s;
    s.name = "scaled-geometric(" + to_string(c) + ")";
    s.coeff_rule = [c](long j) { return pow_rational(c, j); };
    s.valuation_rule = [c](long j, long p) {
        Rational vc = val_p(c, p).finite();
        return ExtRational(Rational(j) * vc);
    };
    s.valuation_growth = [c](long p) {
        return std::optional<Rational>(val_p(c, p).finite());
    };
    s.tate_rule = [c](long p, const Rational& rexp) {
        Rational slope = val_p(c, p).finite() + rexp;
        TateVerdict v;
        if (slope > 0) {
            v.status = TateStatus::member;
            v.witness = "excess = j*(val_p(c) + rexp) -> +inf";
        } else {
            v.status = TateStatus::non_member;
            v.witness = "excess = j*(val_p(c) + rexp) is nonpositive for all j";
        }
        return v;
    };
    validate_valuation_rule(s, 0);
    return s;
}

SeriesSpec make_sqrt_gap_series(long p0) {
    require_prime(p0);
    SeriesSpec s;
    s.name = "sqrt-gap(" + std::to_string(p0) + ")";
    s.coeff_rule = [p0](long j) { return Rational(pow_int(p0, j + ceil_sqrt(j))); };
    s.valuation_rule = [p0](long j, long p) {
        if (p == p0) return ExtRational(Rational(j + ceil_sqrt(j)));
        return ExtRational(Rational(0));
    };
    s.valuation_growth = [p0](long p) {
        return std::optional<Rational>(Rational(p == p0 ? 1 : 0));
    };
    s.tate_rule = [p0](long p, const Rational& rexp) {
        TateVerdict v;
        if (p == p0) {
            if (rexp >= -1) {
                v.status = TateStatus::member;
                v.witness = "excess = j*(1 + rexp) + ceil(sqrt(j)) -> +inf for rexp >= -1";
            } else {
                v.status = TateStatus::non_member;
                v.witness = "excess = j*(1 + rexp) + ceil(sqrt(j)) -> -inf for rexp < -1";
            }
        } else {
            v.status = rexp > 0 ? TateStatus::member : TateStatus::non_member;
            v.witness = "coefficients are p-adic units away from the defining prime";
        }
        return v;
    };
    validate_valuation_rule(s, p0);
    return s;
}

SeriesSpec make_lacunary_series() {
    SeriesSpec s;
    s.name = "lacunary";
    s.coeff_rule = [](long j) { return Rational(power_of_two(j) ? 1 : 0); };
    s.valuation_rule = [](long j, long) {
        return power_of_two(j) ? ExtRational(Rational(0)) : ExtRational::infinity();
    };
    // liminf over the nonzero coefficients j = 2^k is 0.
    s.valuation_growth = [](long) { return std::optional<Rational>(Rational(0)); };
    s.tate_rule = [](long, const Rational& rexp) {
        TateVerdict v;
        if (rexp > 0) {
            v.status = TateStatus::member;
            v.witness = "excess = j*rexp -> +inf along the nonzero coefficients";
        } else {
            v.status = TateStatus::non_member;
            v.witness = "excess = j*rexp <= 0 along j = 2^k";
        }
        return v;
    };
    validate_valuation_rule(s, 0);
    return s;
}

SeriesSpec make_counterexample_limit_series() {
    SeriesSpec s;
    s.name = "counterexample-limit";
    s.coeff_rule = [](long j) { return Rational(limit_coefficient(j)); };
    // No closed-form valuation rule; the growth/tate facts rest on two
    // verified properties of the construction: all coefficients are
    // integers, and the top coefficient of every F_n is 1.
    s.valuation_growth = [](long) { return std::optional<Rational>(Rational(0)); };
    s.tate_rule = [](long, const Rational& rexp) {
        TateVerdict v;
        if (rexp > 0) {
            v.status = TateStatus::member;
            v.witness = "integer coefficients: excess >= j*rexp -> +inf";
        } else {
            v.status = TateStatus::non_member;
            v.witness = "a_{d_n} = 1 for all n: excess = d_n*rexp <= 0 infinitely often";
        }
        return v;
    };
    return s;
}

SeriesSpec make_coeff_list_series(std::vector<Rational> coeffs, std::string label) {
    SeriesSpec s;
    s.name = std::move(label);
    auto shared = std::make_shared<std::vector<Rational>>(std::move(coeffs));
    s.coeff_rule = [shared](long j) {
        if (j < 0 || j >= static_cast<long>(shared->size())) return Rational(0);
        return (*shared)[static_cast<size_t>(j)];
    };
    s.valuation_rule = [shared](long j, long p) {
        if (j < 0 || j >= static_cast<long>(shared->size())) return ExtRational::infinity();
        return val_p((*shared)[static_cast<size_t>(j)], p);
    };
    // Finite coefficient lists are polynomials: infinite radius, reported as
    // unknown at the exponent level.
    s.valuation_growth = nullptr;
    s.tate_rule = [](long, const Rational&) {
        TateVerdict v;
        v.status = TateStatus::member;
        v.witness = "finitely many nonzero coefficients";
        return v;
    };
    validate_valuation_rule(s, 0);
    return s;
}

SeriesSpec series_from_params(const SeriesParams& params) {
    const std::string& r = params.rule;
    if (r == "exp") return make_exp_series();
    if (r == "geometric") return make_geometric_series();
    if (r == "scaled-geometric") {
        if (!params.c) throw std::invalid_argument("scaled-geometric requires parameter c");
        return make_scaled_geometric_series(*params.c);
    }
    if (r == "sqrt-gap") {
        if (!params.p) throw std::invalid_argument("sqrt-gap requires parameter p");
        return make_sqrt_gap_series(*params.p);
    }
    if (r == "lacunary") return make_lacunary_series();
    if (r == "counterexample-limit") return make_counterexample_limit_series();
    if (r == "coeff-list") {
        if (params.coefficients.empty())
            throw std::invalid_argument("coeff-list requires a nonempty coefficient array");
        return make_coeff_list_series(params.coefficients);
    }
    throw std::invalid_argument("unknown series rule '" + r + "'");
}

std::vector<std::string> catalog_lines() {
    return {
        "exp: a_j = 1/j!  [val_p(a_j) = -(j - s_p(j))/(p-1); v_R = 1/(p-1), R = p^(-1/(p-1))]",
        "geometric: a_j = 1  [val_p(a_j) = 0; v_R = 0, R = 1]",
        "scaled-geometric(c): a_j = c^j  [val_p(a_j) = j*val_p(c); v_R = -val_p(c)]",
        "sqrt-gap(p): a_j = p^(j + ceil(sqrt(j)))  [val_p(a_j) = j + ceil(sqrt(j)); v_R = -1, R = p]",
        "lacunary: a_j = 1 if j is a power of 2, else 0  [v_R = 0, R = 1]",
        "counterexample-limit: integer coefficients from the monic interpolation sequence; "
        "truncations in degree 2^(n+2)-2 put at least half their zero mass at T = 1  [v_R = 0]",
        "coeff-list: user-supplied finite coefficient list (a polynomial; infinite radius)",
    };
}

Rational coefficient(const SeriesSpec& spec, long j) {
    if (j < 0) throw std::invalid_argument("coefficient: negative index");
    return spec.coeff_rule(j);
}

TruncationPolynomial truncate(const SeriesSpec& spec, long n) {
    if (n < 0) throw std::invalid_argument("truncate: negative degree");
    std::vector<Rational> c(static_cast<size_t>(n + 1));
    for (long j = 0; j <= n; ++j) c[static_cast<size_t>(j)] = spec.coeff_rule(j);
    TruncationPolynomial t;
    t.poly = RatPoly(std::move(c));
    t.origin_series = spec.name;
    t.origin_n = n;
    return t;
}

TateVerdict tate_membership(const SeriesSpec& spec, long p, const Rational& R_exponent) {
    require_prime(p);
    // Off the critical radius the growth exponent decides on its own.
    if (spec.valuation_growth) {
        auto g = spec.valuation_growth(p);
        if (g) {
            Rational slope = *g + R_exponent;
            if (slope > 0 && !spec.tate_rule) {
                TateVerdict v;
                v.status = TateStatus::member;
                v.witness = "liminf val_p(a_j)/j + rexp > 0";
                return v;
            }
            if (slope < 0 && !spec.tate_rule) {
                TateVerdict v;
                v.status = TateStatus::non_member;
                v.witness = "liminf val_p(a_j)/j + rexp < 0: excess -> -inf along a subsequence";
                return v;
            }
        }
    }
    if (spec.tate_rule) return spec.tate_rule(p, R_exponent);
    TateVerdict v;
    v.status = TateStatus::undetermined;
    v.witness = "no closed-form rule; a finite prefix can neither prove nor refute membership";
    return v;
}

std::optional<Rational> radius_exponent(const SeriesSpec& spec, long p) {
    require_prime(p);
    if (!spec.valuation_growth) return std::nullopt;
    auto g = spec.valuation_growth(p);
    if (!g) return std::nullopt;
    return Rational(-*g);
}

bool SubsequenceFilter::keep(long n, const SeriesSpec& spec) const {
    switch (kind) {
        case Kind::all:
            return true;
        case Kind::primes:
            return is_prime(n);
        case Kind::powers_of_two:
            return power_of_two(n);
        case Kind::list:
            return std::binary_search(list.begin(), list.end(), n);
        case Kind::near_radius: {
            if (n <= 0) return false;
            Rational a = spec.coeff_rule(n);
            if (a == 0) return false;
            double log2a = log2_abs(a);
            double value = std::exp2(log2a / static_cast<double>(n)) * R;
            return std::fabs(value - 1.0) <= delta;
        }
    }
    return false;
}

SubsequenceFilter SubsequenceFilter::parse(const std::string& id, double delta, double R,
                                           std::vector<long> list) {
    SubsequenceFilter f;
    f.delta = delta;
    f.R = R;
    std::sort(list.begin(), list.end());
    f.list = std::move(list);
    if (id == "all") f.kind = Kind::all;
    else if (id == "primes") f.kind = Kind::primes;
    else if (id == "powers-of-2") f.kind = Kind::powers_of_two;
    else if (id == "list") f.kind = Kind::list;
    else if (id == "near-radius") f.kind = Kind::near_radius;
    else throw std::invalid_argument("unknown subsequence filter '" + id + "'");
    return f;
}

std::vector<long> select_indices(const SeriesSpec& spec, long n_min, long n_max,
                                 const SubsequenceFilter& filter) {
    std::vector<long> out;
    for (long n = n_min; n <= n_max; ++n)
        if (filter.keep(n, spec)) out.push_back(n);
    return out;
}

}  // namespace trunclab
