#include "trunclab/aberth.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace trunclab {

namespace {

double log2_abs_rational(const Rational& x) {
    long en = 0, ed = 0;
    double dn = mpz_get_d_2exp(&en, Int(x.get_num()).get_mpz_t());
    double dd = mpz_get_d_2exp(&ed, Int(x.get_den()).get_mpz_t());
    return (std::log2(std::fabs(dn)) + static_cast<double>(en)) -
           (std::log2(std::fabs(dd)) + static_cast<double>(ed));
}

Rational mul_2exp(const Rational& x, long e) {
    Rational r;
    if (e >= 0)
        mpq_mul_2exp(r.get_mpq_t(), x.get_mpq_t(), static_cast<unsigned long>(e));
    else
        mpq_div_2exp(r.get_mpq_t(), x.get_mpq_t(), static_cast<unsigned long>(-e));
    return r;
}

std::complex<double> horner(const std::vector<double>& c, std::complex<double> z) {
    std::complex<double> acc(0.0, 0.0);
    for (size_t j = c.size(); j-- > 0;) acc = acc * z + c[j];
    return acc;
}

std::complex<double> horner_derivative(const std::vector<double>& c, std::complex<double> z) {
    std::complex<double> acc(0.0, 0.0);
    for (size_t j = c.size(); j-- > 1;) acc = acc * z + c[j] * static_cast<double>(j);
    return acc;
}

}  // namespace

ComplexRootSet complex_roots(const TruncationPolynomial& f, double tol, std::uint64_t seed) {
    if (f.degree() < 1) throw std::invalid_argument("complex_roots: degree must be >= 1");
    if (!(tol > 0)) throw std::invalid_argument("complex_roots: tol must be positive");

    const long deg = f.degree();
    const long ord = f.ord();
    const long k = deg - ord;  // degree after stripping roots at the origin

    ComplexRootSet out;
    out.degree = deg;
    if (ord > 0) out.roots.push_back({{0.0, 0.0}, ord});
    if (k == 0) {
        out.residual_bound = 0.0;
        return out;
    }

    // Scale T = 2^m W so that |c_0| and |c_k| balance, then normalize the
    // largest coefficient to magnitude ~1 by another power of two.
    std::vector<Rational> c(f.poly.coeff.begin() + ord, f.poly.coeff.begin() + (deg + 1));
    double log_c0 = log2_abs_rational(c.front());
    double log_ck = log2_abs_rational(c.back());
    long m = std::lround((log_c0 - log_ck) / static_cast<double>(k));
    double peak = -1e300;
    for (long j = 0; j <= k; ++j) {
        if (c[static_cast<size_t>(j)] == 0) continue;
        peak = std::max(peak, log2_abs_rational(c[static_cast<size_t>(j)]) +
                                  static_cast<double>(j * m));
    }
    long shift = std::lround(peak);
    std::vector<double> g(static_cast<size_t>(k + 1), 0.0);
    for (long j = 0; j <= k; ++j) {
        if (c[static_cast<size_t>(j)] == 0) continue;
        g[static_cast<size_t>(j)] = mul_2exp(c[static_cast<size_t>(j)], j * m - shift).get_d();
    }

    // Initial points: perturbed roots of unity (the scaled polynomial has
    // balanced outer coefficients, so radius 1 is the natural start).
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> perturb(-1e-3, 1e-3);
    std::vector<std::complex<double>> z(static_cast<size_t>(k));
    for (long i = 0; i < k; ++i) {
        double theta = 2.0 * std::numbers::pi * (static_cast<double>(i) + 0.5) /
                           static_cast<double>(k) +
                       perturb(rng);
        z[static_cast<size_t>(i)] = std::polar(1.0, theta);
    }

    // Aberth-Ehrlich sweeps with in-place updates.
    const int max_sweeps = 400;
    const double conv = 1e-13;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double worst = 0.0;
        for (long i = 0; i < k; ++i) {
            std::complex<double>& zi = z[static_cast<size_t>(i)];
            std::complex<double> pv = horner(g, zi);
            std::complex<double> dv = horner_derivative(g, zi);
            if (pv == std::complex<double>(0.0, 0.0)) continue;
            std::complex<double> newton = dv == std::complex<double>(0.0, 0.0)
                                              ? std::complex<double>(1e-3, 1e-3)
                                              : pv / dv;
            std::complex<double> repel(0.0, 0.0);
            for (long j = 0; j < k; ++j) {
                if (j == i) continue;
                std::complex<double> diff = zi - z[static_cast<size_t>(j)];
                if (std::abs(diff) < 1e-300) diff = std::complex<double>(1e-300, 0.0);
                repel += 1.0 / diff;
            }
            std::complex<double> denom = 1.0 - newton * repel;
            std::complex<double> corr = std::abs(denom) < 1e-300 ? newton : newton / denom;
            zi -= corr;
            worst = std::max(worst, std::abs(corr) / std::max(1.0, std::abs(zi)));
        }
        if (worst < conv) break;
    }

    // A few Newton polish steps per root.
    for (long i = 0; i < k; ++i) {
        std::complex<double>& zi = z[static_cast<size_t>(i)];
        for (int step = 0; step < 3; ++step) {
            std::complex<double> pv = horner(g, zi);
            std::complex<double> dv = horner_derivative(g, zi);
            if (std::abs(dv) < 1e-280) break;
            std::complex<double> corr = pv / dv;
            if (!(std::abs(corr) < 1.0)) break;  // multiple-root cluster, keep Aberth value
            zi -= corr;
        }
    }

    double residual = 0.0;
    for (long i = 0; i < k; ++i)
        residual = std::max(residual, std::abs(horner(g, z[static_cast<size_t>(i)])));

    if (!(residual <= 1e-6 * static_cast<double>(k)) || !std::isfinite(residual)) {
        ComplexRootSet partial = out;
        double scale_fail = std::ldexp(1.0, static_cast<int>(m));
        for (long i = 0; i < k; ++i)
            partial.roots.push_back({z[static_cast<size_t>(i)] * scale_fail, 1});
        partial.residual_bound = residual;
        throw RootFindError("complex_roots: iteration did not converge", std::move(partial));
    }

    // Unscale and merge multiplicity clusters of radius tol (transitive).
    double scale = std::ldexp(1.0, static_cast<int>(m));
    std::vector<std::complex<double>> roots;
    roots.reserve(static_cast<size_t>(k));
    for (long i = 0; i < k; ++i) roots.push_back(z[static_cast<size_t>(i)] * scale);
    std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    std::vector<bool> used(roots.size(), false);
    for (size_t i = 0; i < roots.size(); ++i) {
        if (used[i]) continue;
        std::vector<size_t> cluster{i};
        used[i] = true;
        for (size_t a = 0; a < cluster.size(); ++a)
            for (size_t j = 0; j < roots.size(); ++j)
                if (!used[j] && std::abs(roots[j] - roots[cluster[a]]) <= tol) {
                    used[j] = true;
                    cluster.push_back(j);
                }
        std::complex<double> centroid(0.0, 0.0);
        for (size_t idx : cluster) centroid += roots[idx];
        centroid /= static_cast<double>(cluster.size());
        out.roots.push_back({centroid, static_cast<long>(cluster.size())});
    }

    long total = 0;
    for (const auto& r : out.roots) total += r.multiplicity;
    if (total != deg) throw std::logic_error("complex_roots: multiplicities do not sum to deg");
    out.residual_bound = residual;
    return out;
}

}  // namespace trunclab
