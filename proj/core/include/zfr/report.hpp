#pragma once

// Run configuration, per-check records, and report serialization for the
// verification suites.  Reports are deterministic for a fixed seed; with
// fixed_clock set, re-running the same configuration produces byte-identical
// JSON (wall-clock fields are omitted).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zfr/jbounds.hpp"
#include "zfr/tolerance.hpp"
#include "zfr/trigpoly.hpp"

namespace zfr {

enum class ReportFormat { json, csv, text };

struct RunConfig {
    PolyParams poly;
    std::int64_t prime_cutoff = 10'000;
    std::uint64_t sweep_seed = 20250810;
    std::int64_t sweep_points = 100'000;
    TolerancePolicy tolerance;
    std::vector<std::string> suites;  // empty = every registered suite
    std::string output_path;          // empty = stdout
    ReportFormat format = ReportFormat::json;
    bool fixed_clock = false;

    // sweep_points >= 1e3, prime_cutoff >= 1e4, valid tolerance and suite
    // names.  Throws std::invalid_argument.
    void validate() const;
};

// Parse a JSON config file; unknown keys are rejected.  Missing keys keep
// the defaults above (which reproduce the settled parameters).
RunConfig load_config(const std::string& path);

// A single computed-vs-expected row.  margin >= 0 iff the check passed;
// for two-sided checks margin = tolerance - |computed - expected|, for
// one-sided checks the distance to the threshold.
struct CheckRecord {
    std::string id;
    double computed = 0.0;
    std::optional<double> expected;
    double tolerance = 0.0;
    double margin = 0.0;
    bool pass = false;
    bool warned = false;
    std::string source;
};

struct SuiteResult {
    std::string name;
    bool pass = true;
    double runtime_seconds = 0.0;
    std::vector<CheckRecord> checks;
};

struct LedgerEntry {
    std::string id;
    double value = 0.0;
    std::string source;
    std::optional<double> margin;  // quoted minus re-derived, where applicable
};

struct Report {
    std::vector<SuiteResult> suites;  // ordered by suite name
    std::vector<LedgerEntry> ledger;
    std::string toolchain;
    std::string build_id;
    std::uint64_t seed = 0;
    std::string timestamp;  // empty under fixed_clock
    bool all_pass = false;
};

// Run the configured suites (concurrently when the THREADS environment
// variable requests it) and assemble the report.  A failing check never
// aborts the run; it lands in the report and flips all_pass.
Report run(const RunConfig& config);

std::string to_json_string(const Report& report);
std::string to_csv_string(const Report& report);
std::string to_text_string(const Report& report);

// Write the report to config.output_path (stdout if empty) in the requested
// format.  Throws std::runtime_error on I/O failure.
void write_report(const Report& report, const RunConfig& config);

// One ledger record per line: id, value, margin (or "-"), source.
void emit_constant_ledger(const Report& report, const std::string& path);

}  // namespace zfr
