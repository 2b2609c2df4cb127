#include "zfr/report.hpp"

#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "zfr/constants.hpp"
#include "zfr/suites.hpp"
#include "zfr/zfr_solver.hpp"

namespace zfr {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string csv_escape(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

ReportFormat parse_format(const std::string& s) {
    if (s == "json") return ReportFormat::json;
    if (s == "csv") return ReportFormat::csv;
    if (s == "text") return ReportFormat::text;
    throw std::invalid_argument("unknown output format: " + s);
}

// Literature inputs, quoted error constants with re-derivation margins, and
// the settled headline parameters, in a fixed order.
std::vector<LedgerEntry> build_ledger() {
    std::vector<LedgerEntry> ledger;
    ledger.push_back({"kappa", kKappa, "1 - 1/sqrt(5)", std::nullopt});
    ledger.push_back({"phi", kPhi, "(1 + sqrt(5))/2", std::nullopt});
    for (const ConstantRecord& rec : literature_constants()) {
        ledger.push_back({rec.id, rec.value, rec.source, std::nullopt});
    }

    struct Case {
        int n;
        int mult;
        Regime regime;
        const char* id;
        const char* source;
    };
    const Case cases[] = {
        {0, 0, Regime::t_ge_1, "error.j0", "error constant, j0 bound"},
        {1, 1, Regime::t_ge_1, "error.j1.t_ge_1",
         "error constant, j1 bound, |t| >= 1"},
        {1, 1, Regime::t_lt_1, "error.j1.t_lt_1",
         "error constant, j1 bound, |t| < 1"},
        {1, 0, Regime::t_eq_0, "error.j1.t_eq_0",
         "error constant, j1 bound at t = 0"},
        {2, 0, Regime::t_lt_1, "error.j2.m0",
         "error constant, j2 bound, m = 0"},
        {2, 0, Regime::t_eq_0, "error.j2.m0.wide",
         "error constant, j2 bound, m = 0, sigma up to phi"},
        {2, 2, Regime::t_ge_1, "error.j2.m2.t_ge_1",
         "error constant, j2 bound, m = 2, |t| >= 1"},
        {2, 2, Regime::t_lt_1, "error.j2.m2.t_lt_1",
         "error constant, j2 bound, m = 2, |t| < 1"},
        {3, 1, Regime::t_ge_1, "error.j3.m1.t_ge_1",
         "error constant, j3 bound, |t| >= 1"},
        {3, 1, Regime::t_lt_1, "error.j3.m1.t_lt_1",
         "error constant, j3 bound, |t| < 1"},
        {3, 3, Regime::t_ge_1, "error.j3.m3.t_ge_1",
         "error constant, j3 bound at 3t, |t| >= 1"},
        {3, 3, Regime::t_lt_1, "error.j3.m3.t_lt_1",
         "error constant, j3 bound at 3t, |t| < 1"},
        {4, 0, Regime::t_lt_1, "error.j4.m0",
         "error constant, j4 bound, m = 0"},
        {4, 2, Regime::t_ge_1, "error.j4.m2.t_ge_1",
         "error constant, j4 bound, m = 2, |t| >= 1"},
        {4, 2, Regime::t_lt_1, "error.j4.m2.t_lt_1",
         "error constant, j4 bound, m = 2, |t| < 1"},
        {4, 4, Regime::t_ge_1, "error.j4.m4.t_ge_1",
         "error constant, j4 bound, m = 4, |t| >= 1"},
        {4, 4, Regime::t_lt_1, "error.j4.m4.t_lt_1",
         "error constant, j4 bound, m = 4, |t| < 1"},
    };
    for (const Case& k : cases) {
        const RederivedConstant r =
            rederive_error_constant(k.n, k.mult, k.regime);
        ledger.push_back({k.id, r.quoted, k.source, r.margin});
    }

    ledger.push_back({"section6.ap_budget", kApBudgetLargeT,
                      "A2 log2 + A3 log3 budget, |t| >= 1", std::nullopt});
    ledger.push_back({"section7.ap_budget", kApBudgetMidT,
                      "A2 log2 + A3 log3 budget, |t| < 1", std::nullopt});
    ledger.push_back({"gamma_cut", kSettledGammaCut,
                      "ordinate cutoff between the small-|t| regimes",
                      std::nullopt});
    ledger.push_back({"radius.tiny", kSettledTinyRadius,
                      "abscissa radius, very small |t|", std::nullopt});
    ledger.push_back({"delta.mid", kSettledDelta,
                      "slack absorbing the Lorentzian leftovers",
                      std::nullopt});
    ledger.push_back({"constant.large_t", kSettledLargeTConstant,
                      "headline zero-free-region constant, |t| >= 1",
                      std::nullopt});
    ledger.push_back({"constant.mid_t", kSettledMidTConstant,
                      "headline zero-free-region constant, mid |t|",
                      std::nullopt});
    ledger.push_back({"constant.prior", kPriorConstant,
                      "previous admissible constant", std::nullopt});
    return ledger;
}

}  // namespace

void RunConfig::validate() const {
    if (sweep_points < 1000) {
        throw std::invalid_argument("RunConfig: sweep_points must be >= 1e3");
    }
    if (prime_cutoff < 10'000) {
        throw std::invalid_argument("RunConfig: prime_cutoff must be >= 1e4");
    }
    tolerance.validate();
    for (const std::string& name : suites) {
        if (!is_suite_name(name)) {
            throw std::invalid_argument("RunConfig: unknown suite " + name);
        }
    }
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    ordered_json doc = ordered_json::parse(in);

    RunConfig config;
    for (const auto& [key, value] : doc.items()) {
        if (key == "poly") {
            for (const auto& [pk, pv] : value.items()) {
                if (pk == "gamma") config.poly.gamma_coeff = pv.get<double>();
                else if (pk == "a") config.poly.a = pv.get<double>();
                else if (pk == "b") config.poly.b = pv.get<double>();
                else throw std::invalid_argument("config: unknown poly key " + pk);
            }
        } else if (key == "prime_cutoff") {
            config.prime_cutoff = value.get<std::int64_t>();
        } else if (key == "sweep_seed") {
            config.sweep_seed = value.get<std::uint64_t>();
        } else if (key == "sweep_points") {
            config.sweep_points = value.get<std::int64_t>();
        } else if (key == "tolerance") {
            for (const auto& [tk, tv] : value.items()) {
                if (tk == "abs_tol") config.tolerance.abs_tol = tv.get<double>();
                else if (tk == "rel_tol") config.tolerance.rel_tol = tv.get<double>();
                else if (tk == "slack_mode") {
                    const std::string mode = tv.get<std::string>();
                    if (mode == "strict") config.tolerance.slack_mode = SlackMode::strict;
                    else if (mode == "logged") config.tolerance.slack_mode = SlackMode::logged;
                    else throw std::invalid_argument("config: slack_mode must be strict|logged");
                } else {
                    throw std::invalid_argument("config: unknown tolerance key " + tk);
                }
            }
        } else if (key == "suites") {
            config.suites = value.get<std::vector<std::string>>();
        } else if (key == "output_path") {
            config.output_path = value.get<std::string>();
        } else if (key == "output_format") {
            config.format = parse_format(value.get<std::string>());
        } else if (key == "fixed_clock") {
            config.fixed_clock = value.get<bool>();
        } else {
            throw std::invalid_argument("config: unknown key " + key);
        }
    }
    config.validate();
    return config;
}

Report run(const RunConfig& config) {
    config.validate();
    std::vector<std::string> names =
        config.suites.empty() ? suite_names() : config.suites;
    std::sort(names.begin(), names.end());
    names.erase(std::unique(names.begin(), names.end()), names.end());

    int threads = 1;
    if (const char* env = std::getenv("THREADS")) {
        threads = std::max(1, std::atoi(env));
    }
    threads = std::min<int>(threads, int(names.size()));

    std::vector<SuiteResult> results(names.size());
    auto work = [&](std::size_t i) {
        const auto start = std::chrono::steady_clock::now();
        SuiteResult result;
        try {
            result = run_suite(names[i], config);
        } catch (const std::exception& e) {
            // A crashing suite is recorded as a single failed check rather
            // than aborting the run.
            result.name = names[i];
            result.pass = false;
            CheckRecord r;
            r.id = "suite.exception";
            r.pass = false;
            r.margin = -1.0;
            r.source = e.what();
            result.checks.push_back(std::move(r));
        }
        if (!config.fixed_clock) {
            result.runtime_seconds =
                std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                              start)
                    .count();
        }
        results[i] = std::move(result);
    };

    if (threads <= 1) {
        for (std::size_t i = 0; i < names.size(); ++i) work(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) {
            pool.emplace_back([&] {
                for (std::size_t i = next.fetch_add(1); i < names.size();
                     i = next.fetch_add(1)) {
                    work(i);
                }
            });
        }
        for (std::thread& t : pool) t.join();
    }

    Report report;
    report.suites = std::move(results);
    report.ledger = build_ledger();
    report.toolchain = std::string("gnu-c++ ") + __VERSION__;
    report.build_id = __DATE__ " " __TIME__;
    report.seed = config.sweep_seed;
    report.all_pass = true;
    for (const SuiteResult& suite : report.suites) {
        report.all_pass = report.all_pass && suite.pass;
    }
    if (!config.fixed_clock) {
        const std::time_t now = std::time(nullptr);
        char buf[32];
        std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ",
                      std::gmtime(&now));
        report.timestamp = buf;
    }
    return report;
}

std::string to_json_string(const Report& report) {
    ordered_json doc;
    doc["tool"] = "zfr-verify";
    doc["environment"] = {{"toolchain", report.toolchain},
                          {"build_id", report.build_id},
                          {"seed", report.seed}};
    if (!report.timestamp.empty()) doc["timestamp"] = report.timestamp;
    doc["all_pass"] = report.all_pass;

    doc["suites"] = ordered_json::array();
    for (const SuiteResult& suite : report.suites) {
        ordered_json s;
        s["name"] = suite.name;
        s["pass"] = suite.pass;
        s["runtime_seconds"] = suite.runtime_seconds;
        s["checks"] = ordered_json::array();
        for (const CheckRecord& check : suite.checks) {
            ordered_json c;
            c["id"] = check.id;
            c["computed"] = check.computed;
            if (check.expected) {
                c["expected"] = *check.expected;
            } else {
                c["expected"] = nullptr;
            }
            c["tolerance"] = check.tolerance;
            c["margin"] = check.margin;
            c["pass"] = check.pass;
            c["warned"] = check.warned;
            c["citation"] = check.source;
            s["checks"].push_back(std::move(c));
        }
        doc["suites"].push_back(std::move(s));
    }

    doc["ledger"] = ordered_json::array();
    for (const LedgerEntry& entry : report.ledger) {
        ordered_json e;
        e["id"] = entry.id;
        e["value"] = entry.value;
        if (entry.margin) {
            e["margin"] = *entry.margin;
        } else {
            e["margin"] = nullptr;
        }
        e["citation"] = entry.source;
        doc["ledger"].push_back(std::move(e));
    }
    return doc.dump(2) + "\n";
}

std::string to_csv_string(const Report& report) {
    std::ostringstream out;
    out << "suite,check_id,computed,expected,tolerance,margin,verdict,citation\n";
    for (const SuiteResult& suite : report.suites) {
        for (const CheckRecord& check : suite.checks) {
            out << suite.name << ',' << check.id << ',' << fmt(check.computed)
                << ',' << (check.expected ? fmt(*check.expected) : "") << ','
                << fmt(check.tolerance) << ',' << fmt(check.margin) << ','
                << (check.pass ? "pass" : (check.warned ? "warn" : "fail"))
                << ',' << csv_escape(check.source) << '\n';
        }
    }
    return out.str();
}

std::string to_text_string(const Report& report) {
    std::ostringstream out;
    for (const SuiteResult& suite : report.suites) {
        out << (suite.pass ? "PASS" : "FAIL") << "  " << suite.name;
        if (suite.runtime_seconds > 0.0) {
            char buf[32];
            std::snprintf(buf, sizeof(buf), "  (%.2fs)", suite.runtime_seconds);
            out << buf;
        }
        out << '\n';
        for (const CheckRecord& check : suite.checks) {
            char line[256];
            std::snprintf(line, sizeof(line), "  [%s] %-28s %.10g",
                          check.pass ? "ok" : (check.warned ? "!!" : "XX"),
                          check.id.c_str(), check.computed);
            out << line;
            if (check.expected) {
                char exp[96];
                std::snprintf(exp, sizeof(exp), "  vs %.10g (tol %.3g)",
                              *check.expected, check.tolerance);
                out << exp;
            }
            char mg[48];
            std::snprintf(mg, sizeof(mg), "  margin %.3g", check.margin);
            out << mg << '\n';
        }
    }
    out << (report.all_pass ? "ALL PASS" : "FAILURES PRESENT") << '\n';
    return out.str();
}

void write_report(const Report& report, const RunConfig& config) {
    std::string payload;
    switch (config.format) {
        case ReportFormat::json: payload = to_json_string(report); break;
        case ReportFormat::csv: payload = to_csv_string(report); break;
        case ReportFormat::text: payload = to_text_string(report); break;
    }
    if (config.output_path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(config.output_path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write report to " +
                                 config.output_path);
    }
    out << payload;
}

void emit_constant_ledger(const Report& report, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write ledger to " + path);
    for (const LedgerEntry& entry : report.ledger) {
        out << entry.id << '\t' << fmt(entry.value) << '\t'
            << (entry.margin ? fmt(*entry.margin) : "-") << '\t'
            << entry.source << '\n';
    }
}

}  // namespace zfr
