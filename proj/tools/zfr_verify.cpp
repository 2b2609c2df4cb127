// Batch verification driver.  Loads an optional JSON config, runs the
// selected suites, writes the report in json/csv/text, and exits 0 iff
// every check passed.

#include <cstdio>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "zfr/report.hpp"
#include "zfr/suites.hpp"

int main(int argc, char** argv) {
    CLI::App app{"zero-free-region constant verification"};

    std::string config_path;
    std::vector<std::string> suites;
    std::string format;
    std::string out_path;
    std::string ledger_path;
    std::uint64_t seed = 0;
    bool seed_set = false;
    std::int64_t points = 0;
    bool fixed_clock = false;
    bool list = false;

    app.add_option("--config", config_path, "JSON config file");
    app.add_option("--suite", suites, "suite to run (repeatable; default all)");
    app.add_option("--format", format, "report format: json, csv, text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--out", out_path, "report output path (default stdout)");
    app.add_option("--ledger", ledger_path, "also write the constant ledger");
    app.add_option("--seed", seed, "sweep RNG seed")
        ->each([&](const std::string&) { seed_set = true; });
    app.add_option("--points", points, "random sweep size (>= 1e3)");
    app.add_flag("--fixed-clock", fixed_clock,
                 "omit wall-clock fields for byte-stable reports");
    app.add_flag("--list-suites", list, "print suite names and exit");

    CLI11_PARSE(app, argc, argv);

    if (list) {
        for (const std::string& name : zfr::suite_names()) {
            std::cout << name << '\n';
        }
        return 0;
    }

    try {
        zfr::RunConfig config;
        if (!config_path.empty()) config = zfr::load_config(config_path);
        if (!suites.empty()) config.suites = suites;
        if (!format.empty()) {
            if (format == "json") config.format = zfr::ReportFormat::json;
            if (format == "csv") config.format = zfr::ReportFormat::csv;
            if (format == "text") config.format = zfr::ReportFormat::text;
        }
        if (!out_path.empty()) config.output_path = out_path;
        if (seed_set) config.sweep_seed = seed;
        if (points > 0) config.sweep_points = points;
        if (fixed_clock) config.fixed_clock = true;

        const zfr::Report report = zfr::run(config);
        zfr::write_report(report, config);
        if (!ledger_path.empty()) {
            zfr::emit_constant_ledger(report, ledger_path);
        }
        return report.all_pass ? 0 : 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "zfr-verify: %s\n", e.what());
        return 2;
    }
}
