#pragma once

// Registry of verification suites.  Each suite is a pure function of the
// run configuration; the per-suite RNG is seeded from (sweep_seed, name).

#include <string>
#include <vector>

#include "zfr/report.hpp"

namespace zfr {

const std::vector<std::string>& suite_names();

bool is_suite_name(const std::string& name);

// Throws std::invalid_argument for an unknown name.
SuiteResult run_suite(const std::string& name, const RunConfig& config);

}  // namespace zfr
