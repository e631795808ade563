#include "cli/report.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

namespace critline::cli {

void Table::add(std::vector<Cell> row) {
    if (row.size() != columns.size()) throw std::logic_error("Table: row width mismatch");
    rows.push_back(std::move(row));
}

std::string format_cell(const Cell& c) {
    struct Visitor {
        std::string operator()(const std::string& s) const {
            if (s.find_first_of(",\"\n") == std::string::npos) return s;
            std::string q = "\"";
            for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
            return q + "\"";
        }
        std::string operator()(double v) const {
            if (std::isnan(v)) return "nan";
            if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
            char buf[40];
            std::snprintf(buf, sizeof buf, "%.15g", v);
            return buf;
        }
        std::string operator()(i64 v) const { return std::to_string(v); }
        std::string operator()(bool v) const { return v ? "true" : "false"; }
    };
    return std::visit(Visitor{}, c);
}

void write_csv(std::ostream& os, const Table& t) {
    for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
    os << '\n';
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << format_cell(row[i]);
        os << '\n';
    }
}

namespace {

nlohmann::ordered_json cell_json(const Cell& c) {
    return std::visit([](const auto& v) -> nlohmann::ordered_json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, double>) {
            if (!std::isfinite(v)) return format_cell(v);
            // round-trip through the CSV text so both formats carry the same digits
            return std::stod(format_cell(v));
        } else {
            return v;
        }
    }, c);
}

nlohmann::ordered_json records(const Table& t) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& row : t.rows) {
        nlohmann::ordered_json rec;
        for (std::size_t i = 0; i < row.size(); ++i) rec[t.columns[i]] = cell_json(row[i]);
        arr.push_back(std::move(rec));
    }
    return arr;
}

void write_atomically(const std::string& path, const std::string& text) {
    const std::string tmp = path + ".partial";
    {
        std::ofstream f(tmp, std::ios::binary);
        if (!f) throw std::runtime_error("cannot write " + tmp);
        f << text;
        if (!f) throw std::runtime_error("write failed: " + tmp);
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace

nlohmann::ordered_json config_echo(const RunConfig& c) {
    nlohmann::ordered_json j;
    j["command"] = c.command;
    if (c.disc) j["disc"] = *c.disc;
    if (c.form) j["form"] = {c.form->a, c.form->b, c.form->c};
    j["t_min"] = c.t_min;
    j["t_max"] = c.t_max;
    j["step"] = c.step;
    j["H"] = c.H;
    j["X"] = c.X;
    j["T"] = c.T();
    j["theta"] = c.theta;
    j["delta"] = c.delta;
    j["budget"] = c.budget;
    j["threads"] = c.threads;
    j["suite"] = c.suite;
    j["seed"] = c.seed;
    return j;
}

nlohmann::ordered_json to_json(const Table& t, const RunConfig& cfg, const nlohmann::ordered_json& summary,
                               double wall_seconds) {
    nlohmann::ordered_json j;
    j["version"] = kReportVersion;
    j["config"] = config_echo(cfg);
    j["wall_time_s"] = wall_seconds;
    j["summary"] = summary;
    j["rows"] = records(t);
    return j;
}

void emit(const RunConfig& cfg, const Table& t, const Table& summary, double wall_seconds, std::ostream& fallback) {
    std::ostringstream main_text, summary_text;
    if (cfg.format == "json") {
        const auto recs = records(summary);
        main_text << to_json(t, cfg, recs.empty() ? nlohmann::ordered_json::object() : recs.front(), wall_seconds)
                         .dump(2)
                  << '\n';
    } else {
        write_csv(main_text, t);
        write_csv(summary_text, summary);
    }
    if (cfg.out.empty()) {
        fallback << main_text.str();
        if (cfg.format == "csv" && !summary.columns.empty()) fallback << '\n' << summary_text.str();
        return;
    }
    write_atomically(cfg.out, main_text.str());
    if (cfg.format == "csv" && !summary.columns.empty()) write_atomically(cfg.out + ".summary.csv", summary_text.str());
}

}  // namespace critline::cli
