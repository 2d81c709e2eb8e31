#pragma once

#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "ancss/analysis.hpp"
#include "ancss/montecarlo.hpp"

namespace ancss {

// Invalid user configuration; the CLI maps this to exit code 2.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class RunMode { Analytic, Simulate, Both, Verify };

struct RunConfig {
    SweepConfig sweep;
    RunMode mode = RunMode::Both;
    std::string out_path = "ancss_results.csv";
    bool exact_ser = false;
    // test hook: scales the analytic decision variance inside the verify
    // gate; anything but 1.0 must trip the gate
    double variance_scale = 1.0;
};

RunMode parse_mode(const std::string& name);

// "start:step:stop" (inclusive of both endpoints) or a comma list of values
std::vector<double> parse_ebn0_grid(const std::string& text);
std::vector<int> parse_int_list(const std::string& text);

// Simple "key = value" file, one per line, '#' comments. Keys mirror the
// long CLI flags. Flags given on the command line take precedence.
std::map<std::string, std::string> load_config_file(const std::string& path);
void apply_config_entries(const std::map<std::string, std::string>& entries,
                          RunConfig& config);

struct BpskPoint {
    double ebn0_db = 0.0;
    double ber = 0.0;
};

// CSV schema: kind,ebn0_db,L,beta,ber,ci95,trials,errors with
// kind in {analytic, simulated, bpsk}. Analytic and bpsk rows leave
// ci95/trials/errors empty; rows are ordered by (kind, L, beta, ebn0).
// Byte-identical for identical inputs.
std::string render_csv(const std::vector<AnalyticPoint>& analytic,
                       const std::vector<BerPoint>& simulated,
                       const std::vector<BpskPoint>& bpsk);

// Run provenance, written next to the CSV (not inside it, so the CSV stays
// reproducible byte for byte).
std::string render_manifest(const RunConfig& config,
                            const std::string& timestamp_utc);

void write_file(const std::string& path, const std::string& content);

struct VerifyRow {
    BerPoint point;
    double analytic_ber = 0.0;
    double standard_error = 0.0;  // sqrt(p(1-p)/trials) at the analytic p
    double deviation_sigmas = 0.0;
    bool qualifying = false;  // at least min_errors observed errors
    bool pass = true;         // non-qualifying rows pass vacuously
};

struct VerifyOutcome {
    std::vector<VerifyRow> rows;
    bool all_pass = true;
};

// Statistical agreement gate: every point with >= min_errors observed
// errors must sit within 4 standard errors of the analytic value.
// Zero-error and under-resolved points are excluded from gating.
VerifyOutcome verify_points(const std::vector<BerPoint>& points,
                            const StopRule& stop, double variance_scale = 1.0);
VerifyOutcome verify_sweep(const SweepConfig& config,
                           double variance_scale = 1.0);

void print_verify_table(const VerifyOutcome& outcome, std::ostream& os);

}  // namespace ancss
