#include "cli/config.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <sstream>
#include <thread>

namespace critline::cli {

QuadForm parse_form(const std::string& text) {
    std::stringstream ss(text);
    std::string item;
    std::vector<i64> v;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            v.push_back(std::stoll(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw ConfigError("--form: bad coefficient '" + item + "'");
        }
    }
    if (v.size() != 3) throw ConfigError("--form expects a,b,c");
    QuadForm f{v[0], v[1], v[2]};
    if (f.a <= 0 || f.disc() >= 0) throw ConfigError("--form must be positive definite");
    return f;
}

void validate(const RunConfig& c) {
    if (c.command != "zeros" && c.command != "verify" && c.command != "scan-proportion")
        throw ConfigError("unknown command '" + c.command + "'");
    if (c.disc) {
        try {
            Discriminant d(*c.disc);
        } catch (const std::invalid_argument&) {
            throw ConfigError("--disc must be a negative fundamental discriminant");
        }
    }
    if (c.form) {
        if (!is_fundamental(c.form->disc())) throw ConfigError("--form discriminant is not fundamental");
        if (c.disc && *c.disc != c.form->disc()) throw ConfigError("--form does not match --disc");
    }
    if (c.command != "verify" && !c.disc && !c.form) throw ConfigError("--disc or --form required");
    if (!std::isfinite(c.t_min) || !std::isfinite(c.t_max) || c.t_min < 0.0 || c.t_max < c.t_min)
        throw ConfigError("need 0 <= t-min <= t-max");
    if (c.command == "scan-proportion" && !(c.t_max > c.t_min)) throw ConfigError("scan-proportion: t-max > t-min");
    if (!(c.H > 0.0)) throw ConfigError("--H must be positive");
    if (c.step < 0.0) throw ConfigError("--step must be >= 0");
    if (c.T_param < 0.0) throw ConfigError("--T must be >= 0");
    if (!(c.delta > 0.0 && c.delta <= 0.5)) throw ConfigError("--delta in (0, 1/2]");
    if (!(c.budget > 0.0 && c.budget < 1.0)) throw ConfigError("--budget in (0, 1)");
    if (c.threads == 0) throw ConfigError("--threads >= 1");
    if (c.format != "csv" && c.format != "json") throw ConfigError("--format csv|json");
    if (c.command == "verify" && c.suite.empty()) throw ConfigError("verify: --suite required");
    if (c.command == "scan-proportion" && c.X > 1.0) {
        const double cap = std::pow(c.T(), 1.0 / 50.0) * kMollifierSlack;
        if (c.X > cap) throw ConfigError("--X exceeds T^{1/50} slack (" + std::to_string(cap) + ")");
    }
    if (c.checkpoint_every == 0) throw ConfigError("checkpoint interval must be positive");
}

RunConfig parse_command_line(int argc, const char* const* argv) {
    RunConfig c;
    c.threads = std::max(1u, std::thread::hardware_concurrency());
    CLI::App app{"critical-line experiments for Epstein and Hecke L-functions"};
    app.set_config("--config", "", "key = value file; flags override it");
    app.require_subcommand(1);
    std::string form_text;
    i64 disc = 0;
    app.add_option("--disc", disc, "negative fundamental discriminant");
    app.add_option("--form", form_text, "quadratic form a,b,c");
    app.add_option("--t-min", c.t_min);
    app.add_option("--t-max", c.t_max);
    app.add_option("--step", c.step, "grid step multiplier");
    app.add_option("--H", c.H, "window length");
    app.add_option("--X", c.X, "mollifier length");
    app.add_option("--T", c.T_param, "height parameter (default t-max)");
    app.add_option("--theta", c.theta);
    app.add_option("--delta", c.delta);
    app.add_option("--budget", c.budget, "precision budget");
    app.add_option("--threads", c.threads);
    app.add_option("--out", c.out, "output path (default stdout)");
    app.add_option("--format", c.format, "csv or json");
    app.add_option("--suite", c.suite, "verification suite");
    app.add_option("--seed", c.seed);
    app.add_option("--checkpoint-every", c.checkpoint_every);
    app.add_flag("--resume", c.resume, "continue from the checkpoint sidecar");
    for (const char* name : {"zeros", "verify", "scan-proportion"}) app.add_subcommand(name)->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        throw ConfigError(app.help());
    } catch (const CLI::ParseError& e) {
        throw ConfigError(e.what());
    }
    c.command = app.get_subcommands().front()->get_name();
    if (app.count("--disc")) c.disc = disc;
    if (!form_text.empty()) c.form = parse_form(form_text);
    validate(c);
    return c;
}

}  // namespace critline::cli
