#pragma once

#include "critline/quadfield.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace critline::cli {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string command;  // zeros | verify | scan-proportion
    std::optional<i64> disc;
    std::optional<QuadForm> form;
    double t_min = 0.0, t_max = 50.0;
    double step = 0.0;     // grid step multiplier; 0 picks the default
    double H = 2.0;
    double X = 0.0;        // mollifier length; <= 1 disables it
    double T_param = 0.0;  // 0 means t_max
    double theta = 0.1, delta = 0.01;
    double budget = 1e-6;
    unsigned threads = 1;
    std::string format = "csv";
    std::string out;  // empty: stdout
    std::string suite;
    bool resume = false;
    std::uint64_t seed = 20240601;
    std::size_t checkpoint_every = 10000;

    double T() const { return T_param > 0.0 ? T_param : t_max; }
};

// Largest mollifier length accepted for a given T: X <= T^{1/50} times this factor.
inline constexpr double kMollifierSlack = 16.0;

QuadForm parse_form(const std::string& text);  // "a,b,c"
void validate(const RunConfig& cfg);           // ConfigError
// Parses argv (subcommand plus flags, optional --config file of key = value lines).
RunConfig parse_command_line(int argc, const char* const* argv);

}  // namespace critline::cli
