#pragma once

#include "cli/config.hpp"

#include <json.hpp>

#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace critline::cli {

using Cell = std::variant<std::string, double, i64, bool>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void add(std::vector<Cell> row);
};

inline constexpr const char* kReportVersion = "1.0.0";

std::string format_cell(const Cell& c);  // doubles with 15 significant digits
void write_csv(std::ostream& os, const Table& t);
nlohmann::ordered_json config_echo(const RunConfig& cfg);
nlohmann::ordered_json to_json(const Table& t, const RunConfig& cfg, const nlohmann::ordered_json& summary,
                               double wall_seconds);

// Writes the table (and summary) to cfg.out, or to `fallback` when cfg.out is empty. File output goes
// through a temporary and a rename so a failed run leaves nothing behind. In CSV mode the summary
// goes to <out>.summary.csv (or after a blank line on the fallback stream).
void emit(const RunConfig& cfg, const Table& t, const Table& summary, double wall_seconds, std::ostream& fallback);

}  // namespace critline::cli
