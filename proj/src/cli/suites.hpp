#pragma once

#include "cli/config.hpp"

#include <string>
#include <vector>

namespace critline::cli {

struct CheckRow {
    std::string name;
    std::string params;
    double measured = 0.0;
    double bound = 0.0;
    bool pass = false;
    bool asserted = true;  // report-only rows never fail a suite
};

const std::vector<std::string>& suite_names();
// Throws ConfigError for an unknown suite.
std::vector<CheckRow> run_suite(const std::string& name, const RunConfig& cfg);
bool all_pass(const std::vector<CheckRow>& rows);

}  // namespace critline::cli
