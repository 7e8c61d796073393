#include "trunclab/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>

#include "json.hpp"
#include "trunclab/counterexample.hpp"

namespace trunclab {

namespace {

using ordered_json = nlohmann::ordered_json;

double log2_abs_rational(const Rational& x) {
    long en = 0, ed = 0;
    double dn = mpz_get_d_2exp(&en, Int(x.get_num()).get_mpz_t());
    double dd = mpz_get_d_2exp(&ed, Int(x.get_den()).get_mpz_t());
    return (std::log2(std::fabs(dn)) + static_cast<double>(en)) -
           (std::log2(std::fabs(dd)) + static_cast<double>(ed));
}

void write_text_file(const std::string& path, const std::string& content) {
    std::filesystem::path p(path);
    if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file " + path);
    out << content;
}

void write_json_file(const std::string& path, const ordered_json& j) {
    write_text_file(path, j.dump(2) + "\n");
}

// Tail window: the last quarter of the rows (at least one row).
template <typename Rows>
size_t tail_start(const Rows& rows) {
    return rows.size() - std::max<size_t>(rows.size() / 4, rows.empty() ? 0 : 1);
}

ConditionVerdict sup_condition_verdict(const std::vector<double>& values, double tol,
                                       double margin) {
    // limsup <= 0 surrogate.
    if (values.size() < 2) return ConditionVerdict::inconclusive;
    size_t t0 = values.size() - std::max<size_t>(values.size() / 4, 1);
    double tail_max = values[t0], tail_min = values[t0];
    for (size_t i = t0; i < values.size(); ++i) {
        tail_max = std::max(tail_max, values[i]);
        tail_min = std::min(tail_min, values[i]);
    }
    double head_max = values[0];
    for (size_t i = 0; i < t0; ++i) head_max = std::max(head_max, values[i]);
    if (tail_max <= tol) return ConditionVerdict::consistent;
    if (tail_max < head_max && tail_max <= values[t0] + tol)
        return ConditionVerdict::consistent;  // positive but decaying
    if (tail_min > margin && values.back() >= values[t0])
        return ConditionVerdict::violated_at_n;
    return ConditionVerdict::inconclusive;
}

ConditionVerdict liminf_condition_verdict(const std::vector<double>& values, double tol,
                                          double margin) {
    // liminf >= 0 surrogate.
    if (values.size() < 2) return ConditionVerdict::inconclusive;
    size_t t0 = values.size() - std::max<size_t>(values.size() / 4, 1);
    double tail_max = values[t0], tail_min = values[t0];
    for (size_t i = t0; i < values.size(); ++i) {
        tail_max = std::max(tail_max, values[i]);
        tail_min = std::min(tail_min, values[i]);
    }
    if (tail_min >= -tol) return ConditionVerdict::consistent;
    if (tail_max < -margin) return ConditionVerdict::violated_at_n;
    return ConditionVerdict::inconclusive;
}

}  // namespace

std::string fmt_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
    std::string content;
    for (size_t i = 0; i < header.size(); ++i) {
        if (i) content += ',';
        content += header[i];
    }
    content += '\n';
    for (const auto& row : rows) {
        if (row.size() != header.size())
            throw std::logic_error("write_csv: row width does not match header");
        for (size_t i = 0; i < row.size(); ++i) {
            if (i) content += ',';
            content += row[i];
        }
        content += '\n';
    }
    write_text_file(path, content);
}

std::string verdict_name(ConditionVerdict v) {
    switch (v) {
        case ConditionVerdict::consistent: return "consistent";
        case ConditionVerdict::violated_at_n: return "violated-at-n";
        case ConditionVerdict::inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

PadicConditionReport condition_report_padic(const SeriesSpec& spec, long p,
                                            const Rational& R_exponent, long n_min, long n_max,
                                            const SubsequenceFilter& filter,
                                            std::span<const Disk> probes, ExecMode mode) {
    require_prime(p);
    for (const auto& probe : probes) validate_probe(probe, R_exponent, p);
    std::vector<long> indices = select_indices(spec, n_min, n_max, filter);

    PadicConditionReport report;
    for (const auto& probe : probes) report.probe_ids.push_back(probe_id(probe));
    report.rows.resize(indices.size());

    const Disk boundary{Rational(0), R_exponent, true};
    for_each_index(indices.size(), mode, [&](size_t i) {
        long n = indices[i];
        TruncationPolynomial f = truncate(spec, n);
        if (f.poly.is_zero())
            throw std::invalid_argument("condition report: zero truncation at n=" +
                                        std::to_string(n));
        PadicConditionRow row;
        row.n = n;
        row.deg = f.degree();
        // ||f_n|| at the Gauss point xi(0, v_R), exact exponent over k_n.
        BerkovichPoint gauss{Rational(0), R_exponent};
        Rational norm_log = gauss_seminorm(f, gauss, p).exponent;
        row.norm_log_over_k = norm_log / Rational(row.deg == 0 ? 1 : row.deg);
        Rational an = f.at(n);
        if (an != 0)
            row.lead_diag = -(val_p(an, p).finite() / Rational(n == 0 ? 1 : n) + R_exponent);
        Rational deg(row.deg);
        Rational max_mass(0);
        for (const auto& probe : probes) {
            Rational mass = Rational(root_count_in_disk(f, p, probe)) / deg;
            if (mass > max_mass) max_mass = mass;
        }
        row.max_probe_mass = max_mass;
        row.boundary_mass = Rational(root_count_in_disk(f, p, boundary)) / deg;
        report.rows[i] = std::move(row);
    });

    std::vector<double> c1, c3;
    for (const auto& row : report.rows) {
        c1.push_back(row.norm_log_over_k.get_d());
        if (row.lead_diag) c3.push_back(row.lead_diag->get_d());
    }
    report.condition1 = sup_condition_verdict(c1, 1e-12, 0.25);
    report.condition3 = liminf_condition_verdict(c3, 1e-12, 0.25);

    // Condition (2): probe masses must die out; exact zeros expected.
    if (report.rows.size() >= 2) {
        size_t t0 = tail_start(report.rows);
        bool all_zero = true;
        Rational tail_min(-1);
        for (size_t i = t0; i < report.rows.size(); ++i) {
            const Rational& m = report.rows[i].max_probe_mass;
            if (m != 0) {
                all_zero = false;
                if (report.condition2_witness < 0) report.condition2_witness = report.rows[i].n;
            }
            if (tail_min < 0 || m < tail_min) tail_min = m;
        }
        if (all_zero)
            report.condition2 = ConditionVerdict::consistent;
        else if (tail_min >= make_rational(Int(1), Int(4)))
            report.condition2 = ConditionVerdict::violated_at_n;
        else
            report.condition2 = ConditionVerdict::inconclusive;
    }
    return report;
}

ComplexConditionReport condition_report_complex(const SeriesSpec& spec, double R, long n_min,
                                                long n_max, const SubsequenceFilter& filter,
                                                const JsParams& params, ExecMode mode) {
    std::vector<long> indices = select_indices(spec, n_min, n_max, filter);
    ComplexConditionReport report;
    report.rows.resize(indices.size());
    for_each_index(indices.size(), mode, [&](size_t i) {
        long n = indices[i];
        TruncationPolynomial f = truncate(spec, n);
        if (f.degree() < 1)
            throw std::invalid_argument("condition report: degree < 1 at n=" +
                                        std::to_string(n));
        ComplexConditionRow row;
        row.n = n;
        row.deg = f.degree();
        long n_points = std::max<long>(4096, 16 * row.deg);
        double sup = 0.0;
        for (long t = 0; t < n_points; ++t) {
            double theta =
                2.0 * std::numbers::pi * static_cast<double>(t) / static_cast<double>(n_points);
            std::complex<double> z = std::polar(R, theta);
            std::complex<double> acc(0.0, 0.0);
            for (size_t j = f.poly.coeff.size(); j-- > 0;)
                acc = acc * z + f.poly.coeff[j].get_d();
            sup = std::max(sup, std::abs(acc));
        }
        row.norm_log_over_k = std::log(sup) / static_cast<double>(row.deg);
        Rational an = f.at(n);
        if (an != 0)
            row.lead_diag = (std::log(2.0) * log2_abs_rational(an)) / static_cast<double>(n) +
                            std::log(R);
        ComplexRootSet roots =
            complex_roots(f, params.tol, params.seed * 0x9E3779B97F4A7C15ULL + n);
        long interior = 0, total = 0;
        for (const auto& r : roots.roots) {
            total += r.multiplicity;
            if (std::abs(r.value) <= R - params.eps) interior += r.multiplicity;
        }
        row.interior_mass = static_cast<double>(interior) / static_cast<double>(total);
        report.rows[i] = std::move(row);
    });

    std::vector<double> c1, c2, c3;
    for (const auto& row : report.rows) {
        c1.push_back(row.norm_log_over_k);
        c2.push_back(row.interior_mass);
        if (row.lead_diag) c3.push_back(*row.lead_diag);
    }
    report.condition1 = sup_condition_verdict(c1, 1e-9, 0.25);
    report.condition3 = liminf_condition_verdict(c3, 1e-9, 0.25);
    if (report.rows.size() >= 2) {
        size_t t0 = tail_start(report.rows);
        double tail_max = 0.0, tail_min = 1.0;
        for (size_t i = t0; i < report.rows.size(); ++i) {
            tail_max = std::max(tail_max, report.rows[i].interior_mass);
            tail_min = std::min(tail_min, report.rows[i].interior_mass);
            if (report.rows[i].interior_mass > 0.05 && report.condition2_witness < 0)
                report.condition2_witness = report.rows[i].n;
        }
        if (tail_max <= 0.05)
            report.condition2 = ConditionVerdict::consistent;
        else if (tail_min >= 0.25)
            report.condition2 = ConditionVerdict::violated_at_n;
        else
            report.condition2 = ConditionVerdict::inconclusive;
    }
    return report;
}

void write_equidist_outputs(const EquidistReport& report, const std::string& out_dir) {
    std::vector<std::vector<std::string>> rows;
    std::string verdict = report.consistent_with_gauss_point
                              ? "consistent with delta at the Gauss point"
                              : "not consistent";
    for (const auto& row : report.rows)
        for (size_t k = 0; k < report.probe_ids.size(); ++k)
            rows.push_back({std::to_string(row.n), std::to_string(row.deg),
                            report.probe_ids[k],
                            Int(row.probe_mass[k].get_num()).get_str(),
                            Int(row.probe_mass[k].get_den()).get_str(),
                            to_string(row.boundary_mass), verdict});
    write_csv(out_dir + "/equidist.csv",
              {"n", "deg", "probe_id", "mass_num", "mass_den", "boundary_mass", "verdict"},
              rows);

    ordered_json j;
    j["mode"] = "padic-equidistribution";
    j["probes"] = report.probe_ids;
    j["verdict"] = verdict;
    j["rows"] = ordered_json::array();
    for (const auto& row : report.rows) {
        ordered_json r;
        r["n"] = row.n;
        r["deg"] = row.deg;
        r["boundary_mass"] = to_string(row.boundary_mass);
        ordered_json masses = ordered_json::array();
        for (const auto& m : row.probe_mass) masses.push_back(to_string(m));
        r["probe_mass"] = masses;
        j["rows"].push_back(r);
    }
    write_json_file(out_dir + "/summary.json", j);
}

void write_factor_outputs(const std::vector<SequenceStatsRow>& rows, long d,
                          const std::string& out_dir) {
    std::vector<std::vector<std::string>> csv;
    for (const auto& row : rows)
        csv.push_back({std::to_string(row.n), std::to_string(row.deg),
                       std::to_string(row.qp.count),
                       row.qp.certainty == Certainty::certified ? "certified" : "undecided",
                       std::to_string(row.leq_d_lower), std::to_string(row.leq_d_upper),
                       fmt_double(row.ratio_upper_over_n.get_d()),
                       std::to_string(row.max_degree_lower_bound)});
    write_csv(out_dir + "/factors.csv",
              {"n", "deg", "qp_roots", "qp_certainty", "leq_d_lower", "leq_d_upper",
               "ratio_upper_over_n", "max_degree_lower_bound"},
              csv);

    ordered_json j;
    j["mode"] = "padic-factors";
    j["d"] = d;
    j["rows"] = ordered_json::array();
    for (const auto& row : rows) {
        ordered_json r;
        r["n"] = row.n;
        r["deg"] = row.deg;
        r["qp_roots"] = row.qp.count;
        r["qp_certainty"] = row.qp.certainty == Certainty::certified ? "certified" : "undecided";
        r["leq_d_lower"] = row.leq_d_lower;
        r["leq_d_upper"] = row.leq_d_upper;
        r["ratio_upper_over_n"] = to_string(row.ratio_upper_over_n);
        r["max_degree_lower_bound"] = row.max_degree_lower_bound;
        j["rows"].push_back(r);
    }
    write_json_file(out_dir + "/summary.json", j);
}

void write_complex_outputs(const JsTable& table, const JsParams& params,
                           const std::string& out_dir) {
    std::vector<std::string> header = {"n", "deg", "annulus_mass_eps"};
    for (int m = 1; m <= params.M; ++m) header.push_back("S_" + std::to_string(m));
    header.push_back("arc_discrepancy");
    header.push_back("jentzsch_gap");
    header.push_back("residual_bound");

    std::vector<std::vector<std::string>> csv;
    for (const auto& row : table.rows) {
        std::vector<std::string> line = {std::to_string(row.n), std::to_string(row.deg),
                                         fmt_double(row.stats.annulus_mass)};
        for (const auto& s : row.stats.weyl) line.push_back(fmt_double(std::abs(s)));
        line.push_back(fmt_double(row.stats.arc_discrepancy));
        line.push_back(fmt_double(row.stats.jentzsch_gap));
        line.push_back(fmt_double(row.residual_bound));
        csv.push_back(std::move(line));
    }
    write_csv(out_dir + "/complex.csv", header, csv);

    ordered_json j;
    j["mode"] = "complex-js";
    j["M"] = params.M;
    j["grid"] = params.grid;
    j["discrepancy_decreasing"] = table.discrepancy_decreasing;
    j["gap_decreasing"] = table.gap_decreasing;
    j["rows"] = ordered_json::array();
    for (const auto& row : table.rows) {
        ordered_json r;
        r["n"] = row.n;
        r["deg"] = row.deg;
        r["annulus_mass"] = fmt_double(row.stats.annulus_mass);
        r["interior_mass"] = fmt_double(row.stats.interior_mass);
        r["arc_discrepancy"] = fmt_double(row.stats.arc_discrepancy);
        r["jentzsch_gap"] = fmt_double(row.stats.jentzsch_gap);
        r["residual_bound"] = fmt_double(row.residual_bound);
        j["rows"].push_back(r);
    }
    write_json_file(out_dir + "/summary.json", j);
}

void write_counterexample_outputs(long N, const std::string& out_dir) {
    CounterexampleSequence seq = build_sequence(N);
    ordered_json j;
    j["mode"] = "counterexample";
    j["N"] = N;
    j["polynomials"] = ordered_json::array();
    bool all_mass_ok = true;
    for (long n = 0; n <= N; ++n) {
        const ZPoly& F = seq.polys[static_cast<size_t>(n)];
        ordered_json entry;
        entry["n"] = n;
        entry["degree"] = seq.degrees[static_cast<size_t>(n)];
        ordered_json coeffs = ordered_json::array();
        for (long k = 0; k <= seq.degrees[static_cast<size_t>(n)]; ++k)
            coeffs.push_back(F.at(k).get_str());
        entry["coefficients"] = coeffs;
        long order = vanishing_order_at_one(F);
        Rational mass = mass_at_one(F);
        entry["vanishing_order_at_one"] = order;
        entry["mass_at_one"] = to_string(mass);
        bool ok = n == 0 ? mass == 0 : mass >= make_rational(Int(1), Int(2));
        if (!ok) all_mass_ok = false;
        entry["mass_at_least_half"] = n == 0 ? false : ok;
        j["polynomials"].push_back(entry);
    }
    j["verification"] = {
        {"monic", true},  // enforced by build_sequence
        {"degrees", "2^(n+2) - 2"},
        {"mass_at_one_at_least_half_for_n_ge_1", all_mass_ok},
    };
    if (!all_mass_ok)
        throw std::logic_error("counterexample verification failed: mass at T=1 below 1/2");
    write_json_file(out_dir + "/counterexample.json", j);

    std::vector<std::vector<std::string>> csv;
    for (long n = 0; n <= N; ++n) {
        const ZPoly& F = seq.polys[static_cast<size_t>(n)];
        csv.push_back({std::to_string(n),
                       std::to_string(seq.degrees[static_cast<size_t>(n)]),
                       std::to_string(vanishing_order_at_one(F)),
                       to_string(mass_at_one(F))});
    }
    write_csv(out_dir + "/counterexample.csv",
              {"n", "degree", "vanishing_order_at_one", "mass_at_one"}, csv);
}

void write_padic_condition_outputs(const PadicConditionReport& report,
                                   const std::string& out_dir) {
    std::vector<std::vector<std::string>> csv;
    for (const auto& row : report.rows)
        csv.push_back({std::to_string(row.n), std::to_string(row.deg),
                       to_string(row.norm_log_over_k),
                       fmt_double(row.norm_log_over_k.get_d()),
                       row.lead_diag ? to_string(*row.lead_diag) : "-inf",
                       row.lead_diag ? fmt_double(row.lead_diag->get_d()) : "-inf",
                       to_string(row.max_probe_mass), to_string(row.boundary_mass)});
    write_csv(out_dir + "/conditions.csv",
              {"n", "deg", "norm_log_over_k", "norm_log_over_k_float", "lead_diag",
               "lead_diag_float", "max_probe_mass", "boundary_mass"},
              csv);

    ordered_json j;
    j["mode"] = "condition-report";
    j["side"] = "padic";
    j["probes"] = report.probe_ids;
    j["condition1"] = verdict_name(report.condition1);
    j["condition2"] = verdict_name(report.condition2);
    j["condition3"] = verdict_name(report.condition3);
    if (report.condition2_witness >= 0) j["condition2_witness_n"] = report.condition2_witness;
    j["rows"] = ordered_json::array();
    for (const auto& row : report.rows) {
        ordered_json r;
        r["n"] = row.n;
        r["deg"] = row.deg;
        r["norm_log_over_k"] = to_string(row.norm_log_over_k);
        r["lead_diag"] = row.lead_diag ? to_string(*row.lead_diag) : "-inf";
        r["max_probe_mass"] = to_string(row.max_probe_mass);
        r["boundary_mass"] = to_string(row.boundary_mass);
        j["rows"].push_back(r);
    }
    write_json_file(out_dir + "/summary.json", j);
}

void write_complex_condition_outputs(const ComplexConditionReport& report,
                                     const std::string& out_dir) {
    std::vector<std::vector<std::string>> csv;
    for (const auto& row : report.rows)
        csv.push_back({std::to_string(row.n), std::to_string(row.deg),
                       fmt_double(row.norm_log_over_k),
                       row.lead_diag ? fmt_double(*row.lead_diag) : "-inf",
                       fmt_double(row.interior_mass)});
    write_csv(out_dir + "/conditions.csv",
              {"n", "deg", "norm_log_over_k", "lead_diag", "interior_mass"}, csv);

    ordered_json j;
    j["mode"] = "condition-report";
    j["side"] = "complex";
    j["condition1"] = verdict_name(report.condition1);
    j["condition2"] = verdict_name(report.condition2);
    j["condition3"] = verdict_name(report.condition3);
    if (report.condition2_witness >= 0) j["condition2_witness_n"] = report.condition2_witness;
    j["rows"] = ordered_json::array();
    for (const auto& row : report.rows) {
        ordered_json r;
        r["n"] = row.n;
        r["deg"] = row.deg;
        r["norm_log_over_k"] = fmt_double(row.norm_log_over_k);
        r["lead_diag"] = row.lead_diag ? fmt_double(*row.lead_diag) : "-inf";
        r["interior_mass"] = fmt_double(row.interior_mass);
        j["rows"].push_back(r);
    }
    write_json_file(out_dir + "/summary.json", j);
}

void validate_config(const ExperimentConfig& cfg) {
    const std::vector<std::string> modes = {"padic-equidistribution", "padic-factors",
                                            "complex-js", "counterexample",
                                            "condition-report"};
    if (std::find(modes.begin(), modes.end(), cfg.mode) == modes.end())
        throw std::invalid_argument("unknown mode '" + cfg.mode + "'");
    bool padic = cfg.mode == "padic-equidistribution" || cfg.mode == "padic-factors" ||
                 (cfg.mode == "condition-report" && cfg.condition_side == "padic");
    if (padic) {
        require_prime(cfg.p);
        if (!cfg.R_exponent && cfg.mode != "padic-factors")
            throw std::invalid_argument("p-adic modes require R_exponent");
    }
    if (cfg.mode == "condition-report" && cfg.condition_side != "padic" &&
        cfg.condition_side != "complex")
        throw std::invalid_argument("condition-report side must be 'padic' or 'complex'");
    if (cfg.mode != "counterexample") {
        if (cfg.n_max < cfg.n_min)
            throw std::invalid_argument("empty n range: n_max < n_min");
        if (cfg.series.rule.empty()) throw std::invalid_argument("series rule missing");
    }
    if (cfg.mode == "counterexample" && cfg.counterexample_N < 0)
        throw std::invalid_argument("counterexample N must be nonnegative");
    if (cfg.mode == "complex-js" && !(cfg.R > 0))
        throw std::invalid_argument("complex-js requires R > 0");
}

void run_experiment(const ExperimentConfig& cfg, const std::string& out_dir, bool verbose) {
    validate_config(cfg);
    if (cfg.mode == "counterexample") {
        write_counterexample_outputs(cfg.counterexample_N, out_dir);
        if (verbose) std::fprintf(stderr, "counterexample: N=%ld written\n",
                                  cfg.counterexample_N);
        return;
    }

    SeriesSpec spec = series_from_params(cfg.series);
    SubsequenceFilter filter =
        SubsequenceFilter::parse(cfg.filter_id, cfg.filter_delta, cfg.R, cfg.filter_list);

    if (cfg.mode == "padic-equidistribution") {
        std::vector<Disk> probes =
            cfg.probes.empty() ? default_probes(cfg.p, *cfg.R_exponent) : cfg.probes;
        std::vector<long> indices = select_indices(spec, cfg.n_min, cfg.n_max, filter);
        EquidistReport report = equidistribution_report(
            spec, cfg.p, *cfg.R_exponent, probes, indices, cfg.exec);
        write_equidist_outputs(report, out_dir);
        if (verbose)
            std::fprintf(stderr, "equidistribution: %zu rows, verdict %s\n",
                         report.rows.size(),
                         report.consistent_with_gauss_point ? "consistent" : "not consistent");
        return;
    }
    if (cfg.mode == "padic-factors") {
        auto rows = sequence_stats(spec, cfg.p, cfg.n_min, cfg.n_max, filter, cfg.d, cfg.seed,
                                   cfg.exec);
        write_factor_outputs(rows, cfg.d, out_dir);
        if (verbose) std::fprintf(stderr, "factors: %zu rows\n", rows.size());
        return;
    }
    if (cfg.mode == "complex-js") {
        JsParams params = cfg.js;
        params.seed = cfg.seed;
        JsTable table =
            jentzsch_szego_experiment(spec, cfg.R, filter, cfg.n_min, cfg.n_max, params,
                                      cfg.exec);
        write_complex_outputs(table, params, out_dir);
        if (verbose) std::fprintf(stderr, "complex-js: %zu rows\n", table.rows.size());
        return;
    }
    // condition-report
    if (cfg.condition_side == "padic") {
        std::vector<Disk> probes =
            cfg.probes.empty() ? default_probes(cfg.p, *cfg.R_exponent) : cfg.probes;
        PadicConditionReport report = condition_report_padic(
            spec, cfg.p, *cfg.R_exponent, cfg.n_min, cfg.n_max, filter, probes, cfg.exec);
        write_padic_condition_outputs(report, out_dir);
    } else {
        JsParams params = cfg.js;
        params.seed = cfg.seed;
        ComplexConditionReport report = condition_report_complex(
            spec, cfg.R, cfg.n_min, cfg.n_max, filter, params, cfg.exec);
        write_complex_condition_outputs(report, out_dir);
    }
}

}  // namespace trunclab
