#include "trunclab/equidist.hpp"

#include <stdexcept>

namespace trunclab {

void validate_probe(const Disk& probe, const Rational& vR, long p) {
    ExtRational vc = val_p(probe.center, p);
    bool contained = vc >= ExtRational(vR);
    bool proper = probe.radius_exponent > vR ||
                  (!probe.closed && probe.radius_exponent == vR);
    if (!contained || !proper)
        throw std::invalid_argument("probe " + probe_id(probe) +
                                    " is not a proper subdisk of E(0,R)");
}

std::vector<Disk> default_probes(long p, const Rational& vR) {
    if (vR.get_den() != 1)
        throw std::invalid_argument("default probes need an integer radius exponent");
    long v = static_cast<long>(vR.get_num().get_si());
    std::vector<Disk> probes;
    probes.push_back(Disk{Rational(0), vR + 1, false});  // D(0, R/p)
    // Centers c*p^{v_R} on the boundary sphere, one per small residue.
    Rational scale(1);
    if (v >= 0)
        for (long i = 0; i < v; ++i) scale *= p;
    else
        for (long i = 0; i < -v; ++i) scale /= p;
    long cmax = std::min<long>(p - 1, 4);
    for (long c = 1; c <= cmax; ++c)
        probes.push_back(Disk{Rational(c) * scale, vR + 1, true});
    return probes;
}

std::string probe_id(const Disk& d) {
    return std::string(d.closed ? "E(" : "D(") + to_string(d.center) + ",p^-(" +
           to_string(d.radius_exponent) + "))";
}

EquidistReport equidistribution_report(std::span<const TruncationPolynomial> fs, long p,
                                       const Rational& R_exponent,
                                       std::span<const Disk> probes, ExecMode mode) {
    require_prime(p);
    for (const auto& probe : probes) validate_probe(probe, R_exponent, p);

    EquidistReport report;
    for (const auto& probe : probes) report.probe_ids.push_back(probe_id(probe));
    report.rows.resize(fs.size());

    const Disk boundary{Rational(0), R_exponent, true};
    for_each_index(fs.size(), mode, [&](size_t i) {
        const TruncationPolynomial& f = fs[i];
        if (f.poly.is_zero())
            throw std::invalid_argument("equidistribution_report: zero truncation at index " +
                                        std::to_string(i));
        EquidistRow row;
        row.n = f.origin_n;
        row.deg = f.degree();
        Rational deg(row.deg);
        for (const auto& probe : probes) {
            long count = root_count_in_disk(f, p, probe);
            row.probe_count.push_back(count);
            row.probe_mass.push_back(row.deg == 0 ? Rational(0) : Rational(count) / deg);
        }
        long bcount = root_count_in_disk(f, p, boundary);
        row.boundary_mass = row.deg == 0 ? Rational(0) : Rational(bcount) / deg;
        report.rows[i] = std::move(row);
    });

    // Tail verdict: all probe mass gone and full boundary mass over the
    // last quarter of the rows.
    size_t tail = report.rows.size() - std::max<size_t>(report.rows.size() / 4, 1);
    bool ok = !report.rows.empty();
    for (size_t i = tail; i < report.rows.size(); ++i) {
        const auto& row = report.rows[i];
        if (row.boundary_mass != 1) ok = false;
        for (const auto& m : row.probe_mass)
            if (m != 0) ok = false;
    }
    report.consistent_with_gauss_point = ok;
    return report;
}

EquidistReport equidistribution_report(const SeriesSpec& spec, long p,
                                       const Rational& R_exponent,
                                       std::span<const Disk> probes,
                                       std::span<const long> degrees, ExecMode mode) {
    std::vector<TruncationPolynomial> fs;
    fs.reserve(degrees.size());
    for (long n : degrees) fs.push_back(truncate(spec, n));
    return equidistribution_report(std::span<const TruncationPolynomial>(fs), p, R_exponent,
                                   probes, mode);
}

}  // namespace trunclab
