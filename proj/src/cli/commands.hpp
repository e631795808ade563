#pragma once

#include "cli/config.hpp"
#include "cli/report.hpp"

#include <ostream>

namespace critline::cli {

struct ProportionStats {
    i64 windows = 0;
    i64 certified = 0;
    i64 N0 = 0;  // sign changes inside certified windows
    double fraction() const { return windows ? static_cast<double>(certified) / static_cast<double>(windows) : 0.0; }
};

struct ProportionResult {
    Table table;
    ProportionStats plain;
    std::optional<ProportionStats> mollified;
};

// H-windows over [t_min, t_max); the last window is clipped to t_max.
ProportionResult scan_proportion(const RunConfig& cfg, const std::string& checkpoint_path = {});

// Each returns the process exit code; report goes to cfg.out or `out`.
int cmd_zeros(const RunConfig& cfg, std::ostream& out);
int cmd_verify(const RunConfig& cfg, std::ostream& out);
int cmd_scan_proportion(const RunConfig& cfg, std::ostream& out);
int dispatch(const RunConfig& cfg, std::ostream& out);

}  // namespace critline::cli
