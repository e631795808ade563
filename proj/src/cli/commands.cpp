#include "cli/commands.hpp"

#include "cli/suites.hpp"
#include "critline/lseries.hpp"
#include "critline/mollifier.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <thread>

namespace critline::cli {

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

QuadForm target_form(const RunConfig& cfg) { return cfg.form ? *cfg.form : principal_form(*cfg.disc); }

struct WindowOutcome {
    WindowRecord plain, mollified;
};

// Parameters that change the numbers; threads, output and format do not.
std::string fingerprint(const RunConfig& cfg) {
    const QuadForm f = target_form(cfg);
    char buf[256];
    std::snprintf(buf, sizeof buf, "form=%lld,%lld,%lld t=%a,%a H=%a X=%a T=%a budget=%a", (long long)f.a, (long long)f.b,
                  (long long)f.c, cfg.t_min, cfg.t_max, cfg.H, cfg.X, cfg.T(), cfg.budget);
    return buf;
}

void write_record(std::ostream& os, i64 idx, const WindowOutcome& w) {
    char buf[256];
    std::snprintf(buf, sizeof buf, "%lld %a %a %d %d %a %a %d %d\n", (long long)idx, w.plain.I, w.plain.J,
                  int(w.plain.certified), w.plain.sign_changes, w.mollified.I, w.mollified.J, int(w.mollified.certified),
                  w.mollified.sign_changes);
    os << buf;
}

// Returns the windows already on disk; a sidecar for a different run is an error, not silently reused.
std::vector<std::optional<WindowOutcome>> load_checkpoint(const std::string& path, const std::string& fp, i64 n) {
    std::vector<std::optional<WindowOutcome>> done(static_cast<std::size_t>(n));
    std::ifstream in(path);
    if (!in) return done;
    std::string header;
    std::getline(in, header);
    if (header != "# " + fp) throw ConfigError("checkpoint " + path + " belongs to a different run");
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        long long idx;
        std::string a, b, c, d;
        int pc, ps, mc, ms;
        if (!(ls >> idx >> a >> b >> pc >> ps >> c >> d >> mc >> ms)) break;  // torn last line
        if (idx < 0 || idx >= n) continue;
        WindowOutcome w;
        w.plain = {std::strtod(a.c_str(), nullptr), std::strtod(b.c_str(), nullptr), pc != 0, ps};
        w.mollified = {std::strtod(c.c_str(), nullptr), std::strtod(d.c_str(), nullptr), mc != 0, ms};
        done[static_cast<std::size_t>(idx)] = w;
    }
    return done;
}

void accumulate(ProportionStats& s, const WindowRecord& r) {
    ++s.windows;
    if (r.certified) {
        ++s.certified;
        s.N0 += r.sign_changes;
    }
}

}  // namespace

ProportionResult scan_proportion(const RunConfig& cfg, const std::string& checkpoint_path) {
    const QuadForm f = target_form(cfg);
    const LSeries F = LSeries::epstein(f, 4000);
    const bool use_mollifier = cfg.X > 1.0;
    std::optional<MollifierTable> M;
    if (use_mollifier) {
        const DiscriminantSplit trivial{1, f.disc()};
        M = alpha_table(LSeries::from_split(trivial, 2000), cfg.X, trivial);
    }
    const EtaSquared eta_sq = [&](double u) { return std::norm(eta(*M, cplx(0.5, u))); };

    const i64 n = static_cast<i64>(std::ceil((cfg.t_max - cfg.t_min) / cfg.H - 1e-12));
    const auto window = [&](i64 k) {
        const double a = cfg.t_min + static_cast<double>(k) * cfg.H;
        return std::pair{a, std::min(cfg.t_max, a + cfg.H)};
    };

    const std::string fp = fingerprint(cfg);
    std::vector<std::optional<WindowOutcome>> results(static_cast<std::size_t>(n));
    if (cfg.resume && !checkpoint_path.empty()) results = load_checkpoint(checkpoint_path, fp, n);
    std::ofstream sidecar;
    if (!checkpoint_path.empty()) {
        const bool fresh = !cfg.resume || !std::ifstream(checkpoint_path);
        sidecar.open(checkpoint_path, fresh ? std::ios::trunc : std::ios::app);
        if (fresh) sidecar << "# " << fp << '\n';
    }

    const auto chunk = static_cast<i64>(cfg.checkpoint_every);
    for (i64 lo = 0; lo < n; lo += chunk) {
        const i64 hi = std::min(n, lo + chunk);
        std::vector<i64> todo;
        for (i64 k = lo; k < hi; ++k)
            if (!results[static_cast<std::size_t>(k)]) todo.push_back(k);
        std::atomic<std::size_t> next{0};
        const auto worker = [&] {
            for (std::size_t i; (i = next.fetch_add(1)) < todo.size();) {
                const auto [a, b] = window(todo[i]);
                WindowOutcome w;
                w.plain = window_test(F, a, b - a, nullptr, cfg.T(), cfg.budget);
                if (use_mollifier) w.mollified = window_test(F, a, b - a, &eta_sq, cfg.T(), cfg.budget);
                results[static_cast<std::size_t>(todo[i])] = w;
            }
        };
        const unsigned nt = std::min<unsigned>(cfg.threads, static_cast<unsigned>(std::max<std::size_t>(todo.size(), 1)));
        if (nt <= 1) {
            worker();
        } else {
            std::vector<std::jthread> pool;
            for (unsigned i = 0; i < nt; ++i) pool.emplace_back(worker);
        }
        if (sidecar.is_open()) {
            for (i64 k : todo) write_record(sidecar, k, *results[static_cast<std::size_t>(k)]);
            sidecar.flush();
        }
    }

    ProportionResult res;
    res.table.columns = {"t_start", "t_end", "I", "J", "certified", "sign_changes"};
    if (use_mollifier) {
        for (const char* c : {"I_mollified", "J_mollified", "certified_mollified", "sign_changes_mollified"})
            res.table.columns.emplace_back(c);
        res.mollified.emplace();
    }
    for (i64 k = 0; k < n; ++k) {
        const auto [a, b] = window(k);
        const WindowOutcome& w = *results[static_cast<std::size_t>(k)];
        std::vector<Cell> row{a, b, w.plain.I, w.plain.J, w.plain.certified, i64(w.plain.sign_changes)};
        accumulate(res.plain, w.plain);
        if (use_mollifier) {
            for (Cell c : {Cell(w.mollified.I), Cell(w.mollified.J), Cell(w.mollified.certified),
                           Cell(i64(w.mollified.sign_changes))})
                row.push_back(c);
            accumulate(*res.mollified, w.mollified);
        }
        res.table.add(std::move(row));
    }
    return res;
}

int cmd_zeros(const RunConfig& cfg, std::ostream& out) {
    const auto t0 = std::chrono::steady_clock::now();
    const QuadForm f = target_form(cfg);
    Table t{{"t", "width", "certified"}, {}};
    Table s{{"count", "t_min", "t_max", "grid_step"}, {}};
    ScanOptions opt;
    if (cfg.step > 0.0) opt.step_scale = cfg.step;
    double max_step = 0.0;
    i64 count = 0;
    if (cfg.t_max > cfg.t_min) {
        const LSeries F = LSeries::epstein(f, 4000);
        const ZeroScanResult r = scan_zeros(F, cfg.t_min, cfg.t_max, opt);
        for (const auto& z : r.zeros) t.add({z.t, z.width, z.width <= opt.tol * 100.0});
        max_step = r.max_step;
        count = static_cast<i64>(r.zeros.size());
    }
    s.add({count, cfg.t_min, cfg.t_max, max_step});
    emit(cfg, t, s, seconds_since(t0), out);
    return 0;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto rows = run_suite(cfg.suite, cfg);
    Table t{{"name", "params", "measured", "bound", "pass", "asserted"}, {}};
    i64 failed = 0;
    for (const auto& r : rows) {
        t.add({r.name, r.params, r.measured, r.bound, r.pass, r.asserted});
        failed += r.asserted && !r.pass;
    }
    Table s{{"suite", "checks", "failed"}, {}};
    s.add({cfg.suite, static_cast<i64>(rows.size()), failed});
    emit(cfg, t, s, seconds_since(t0), out);
    return failed == 0 ? 0 : 1;
}

int cmd_scan_proportion(const RunConfig& cfg, std::ostream& out) {
    const auto t0 = std::chrono::steady_clock::now();
    const std::string ckpt = (cfg.out.empty() ? std::string("critline-scan") : cfg.out) + ".ckpt";
    const ProportionResult r = scan_proportion(cfg, ckpt);
    Table s{{"windows", "certified", "fraction", "N0"}, {}};
    if (r.mollified)
        for (const char* c : {"certified_mollified", "fraction_mollified", "N0_mollified"}) s.columns.emplace_back(c);
    std::vector<Cell> row{r.plain.windows, r.plain.certified, r.plain.fraction(), r.plain.N0};
    if (r.mollified) {
        row.emplace_back(r.mollified->certified);
        row.emplace_back(r.mollified->fraction());
        row.emplace_back(r.mollified->N0);
    }
    s.add(std::move(row));
    emit(cfg, r.table, s, seconds_since(t0), out);
    std::remove(ckpt.c_str());
    return 0;
}

int dispatch(const RunConfig& cfg, std::ostream& out) {
    if (cfg.command == "zeros") return cmd_zeros(cfg, out);
    if (cfg.command == "verify") return cmd_verify(cfg, out);
    return cmd_scan_proportion(cfg, out);
}

}  // namespace critline::cli
