// report.hpp -- experiment configurations, condition diagnostics, and the
// CSV/JSON emitters shared by the CLI and the acceptance suite.
//
// Output is deterministic: rows are assembled in index order regardless of
// execution mode, doubles are printed with "%.17g", exact quantities as
// rational strings, and JSON preserves insertion order.
#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "trunclab/circle.hpp"
#include "trunclab/equidist.hpp"
#include "trunclab/factor.hpp"
#include "trunclab/series.hpp"

namespace trunclab {

std::string fmt_double(double x);  // "%.17g"

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows);

enum class ConditionVerdict { consistent, violated_at_n, inconclusive };
std::string verdict_name(ConditionVerdict v);

// Condition (1): (1/k_n) log ||f_n||_E; (2): probe/interior mass; (3), for
// S = {infinity}: the leading-coefficient diagnostic log(|a_n|^(1/n) R).
// Verdicts are tail diagnostics over the last quarter of the rows, not
// proofs: consistent when the tail satisfies the inequality within
// tolerance, violated-at-n with a witness when it clearly fails, else
// inconclusive.
struct PadicConditionRow {
    long n = 0;
    long deg = 0;
    Rational norm_log_over_k;              // exact, units of log p
    std::optional<Rational> lead_diag;     // -(val_p(a_n)/n + v_R); absent when a_n = 0
    Rational max_probe_mass;
    Rational boundary_mass;
};

struct PadicConditionReport {
    std::vector<std::string> probe_ids;
    std::vector<PadicConditionRow> rows;
    ConditionVerdict condition1 = ConditionVerdict::inconclusive;
    ConditionVerdict condition2 = ConditionVerdict::inconclusive;
    ConditionVerdict condition3 = ConditionVerdict::inconclusive;
    long condition2_witness = -1;  // first tail n with nonzero probe mass
};

PadicConditionReport condition_report_padic(const SeriesSpec& spec, long p,
                                            const Rational& R_exponent, long n_min, long n_max,
                                            const SubsequenceFilter& filter,
                                            std::span<const Disk> probes,
                                            ExecMode mode = ExecMode::serial);

struct ComplexConditionRow {
    long n = 0;
    long deg = 0;
    double norm_log_over_k = 0.0;          // natural log of the grid sup, over k_n
    std::optional<double> lead_diag;       // log(|a_n|^(1/n) R)
    double interior_mass = 0.0;
};

struct ComplexConditionReport {
    std::vector<ComplexConditionRow> rows;
    ConditionVerdict condition1 = ConditionVerdict::inconclusive;
    ConditionVerdict condition2 = ConditionVerdict::inconclusive;
    ConditionVerdict condition3 = ConditionVerdict::inconclusive;
    long condition2_witness = -1;
};

ComplexConditionReport condition_report_complex(const SeriesSpec& spec, double R, long n_min,
                                                long n_max, const SubsequenceFilter& filter,
                                                const JsParams& params,
                                                ExecMode mode = ExecMode::serial);

struct ExperimentConfig {
    std::string mode;  // padic-equidistribution | padic-factors | complex-js |
                       // counterexample | condition-report
    SeriesParams series;
    long p = 0;
    std::optional<Rational> R_exponent;
    double R = 1.0;
    long n_min = 1;
    long n_max = 0;
    std::string filter_id = "all";
    double filter_delta = 0.1;
    std::vector<long> filter_list;
    long d = 1;
    std::vector<Disk> probes;  // empty: defaults from v_R
    long counterexample_N = 4;
    std::string condition_side = "padic";  // condition-report only
    std::uint64_t seed = 0;
    JsParams js;
    ExecMode exec = ExecMode::openmp;
};

void validate_config(const ExperimentConfig& cfg);  // throws std::invalid_argument

// Runs the experiment and writes CSV + JSON summary under out_dir.
// Throws std::invalid_argument on validation errors and std::logic_error /
// std::runtime_error on internal invariant violations.
void run_experiment(const ExperimentConfig& cfg, const std::string& out_dir,
                    bool verbose = false);

// File emitters (also used directly by tests).
void write_equidist_outputs(const EquidistReport& report, const std::string& out_dir);
void write_factor_outputs(const std::vector<SequenceStatsRow>& rows, long d,
                          const std::string& out_dir);
void write_complex_outputs(const JsTable& table, const JsParams& params,
                           const std::string& out_dir);
void write_counterexample_outputs(long N, const std::string& out_dir);
void write_padic_condition_outputs(const PadicConditionReport& report,
                                   const std::string& out_dir);
void write_complex_condition_outputs(const ComplexConditionReport& report,
                                     const std::string& out_dir);

}  // namespace trunclab
