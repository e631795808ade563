// Acceptance criteria 1-15: one PASS/FAIL line each, at the stated tolerances and time limits.
#include "cli/commands.hpp"
#include "cli/suites.hpp"
#include "critline/lseries.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <algorithm>
#include <functional>

using namespace critline;
using namespace critline::cli;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

RunConfig verify_config(const std::string& suite, std::optional<i64> disc = {}, double X = 0.0) {
    RunConfig c;
    c.command = "verify";
    c.suite = suite;
    c.disc = disc;
    c.X = X;
    return c;
}

// Rows of a suite whose name is in `names` (all rows when empty); every one must pass.
Outcome suite_rows(const std::string& suite, std::optional<i64> disc, std::vector<std::string> names,
                   double X = 0.0) {
    auto rows = run_suite(suite, verify_config(suite, disc, X));
    std::erase_if(rows, [&](const CheckRow& r) {
        if (!r.asserted) return true;
        return !names.empty() && std::find(names.begin(), names.end(), r.name) == names.end();
    });
    if (rows.empty()) return {false, "no rows"};
    const auto ratio = [](const CheckRow& r) { return r.bound > 0 ? r.measured / r.bound : 0.0; };
    const auto failed = std::count_if(rows.begin(), rows.end(), [](const CheckRow& r) { return !r.pass; });
    // first failure, or else the row closest to its bound
    auto worst = std::find_if(rows.begin(), rows.end(), [](const CheckRow& r) { return !r.pass; });
    if (worst == rows.end())
        worst = std::max_element(rows.begin(), rows.end(), [&](const auto& x, const auto& y) { return ratio(x) < ratio(y); });
    return {failed == 0, fmt("checks=%zu failed=%d %s: %s [%s] measured=%.3g bound=%.3g", rows.size(), int(failed),
                             failed ? "first failure" : "tightest", worst->name.c_str(), worst->params.c_str(),
                             worst->measured, worst->bound)};
}

Outcome merge(const std::vector<Outcome>& parts) {
    Outcome o{true, ""};
    for (const auto& p : parts) {
        o.pass = o.pass && p.pass;
        o.detail += (o.detail.empty() ? "" : " | ") + p.detail;
    }
    return o;
}

Outcome zero_oracle() {
    const LSeries E = LSeries::epstein(QuadForm{1, 0, 1}, 4000);
    const ZeroScanResult scan = scan_zeros(E, 0.0, 50.0);
    std::vector<double> oracle;
    for (i64 d : {1, -4}) {
        const RealCharacter chi(d);
        ScanOptions opt;
        opt.tol = 1e-11;
        const auto z = scan_real_function([&](double t) { return hardy_Z_chi(chi, t); }, 0.0, 50.0, chi.modulus(), opt);
        for (const auto& x : z.zeros) oracle.push_back(x.t);
    }
    std::sort(oracle.begin(), oracle.end());
    double worst = 0.0;
    const bool same_count = oracle.size() == scan.zeros.size();
    if (same_count)
        for (std::size_t i = 0; i < oracle.size(); ++i) worst = std::max(worst, std::abs(oracle[i] - scan.zeros[i].t));
    const bool pass = same_count && worst < 1e-6 && scan.max_reality_residual < 1e-9;
    return {pass, fmt("zeros=%zu oracle=%zu max|dt|=%.2e reality=%.2e", scan.zeros.size(), oracle.size(), worst,
                      scan.max_reality_residual)};
}

Outcome proportion_smoke() {
    RunConfig c;
    c.command = "scan-proportion";
    c.disc = -23;
    c.t_min = 100.0;
    c.t_max = 200.0;
    c.H = 2.0;
    c.threads = 1;
    const ProportionResult r = scan_proportion(c);
    return {r.plain.N0 >= 90 && r.plain.fraction() >= 0.6,
            fmt("windows=%lld certified=%lld fraction=%.3f N0=%lld (need N0>=90, fraction>=0.6)", (long long)r.plain.windows,
                (long long)r.plain.certified, r.plain.fraction(), (long long)r.plain.N0)};
}

struct Criterion {
    int id;
    const char* what;
    double limit_s;
    std::function<Outcome()> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "functional equation", 60, [] { return suite_rows("funceq", {}, {"funceq.reflection"}); }},
        {2, "Epstein via Hecke, -23", 60, [] { return suite_rows("epstein", -23, {"epstein.hecke_decomposition"}); }},
        {3, "Kronecker factorization, -4", 30, [] { return suite_rows("epstein", -4, {"epstein.kronecker"}); }},
        {4, "zero scan vs degree-1 oracle, -4", 120, zero_oracle},
        {5, "mollifier vanishing, -15, X=400", 10,
         [] { return suite_rows("mollifier", -15, {"mollifier.c1", "mollifier.vanishing"}, 400.0); }},
        {6, "alpha closed forms vs expansion", 10, [] { return suite_rows("alpha-closed", {}, {}); }},
        {7, "K_11 / K_22 reflection", 30, [] { return suite_rows("kll-reflection", {}, {"kll.reflection"}); }},
        {8, "S~ functional equation and dual routes, -15", 300, [] { return suite_rows("stilde", -15, {}); }},
        {9, "squared-coefficient series", 30,
         [] { return suite_rows("square-series", {}, {"squares.principal_denominator"}); }},
        {10, "Gauss-sum product and anti-symmetry", 5, [] { return suite_rows("gauss-product", {}, {}); }},
        {11, "Z direct vs closed, -15", 120, [] { return suite_rows("zsum", -15, {"zsum.direct_vs_closed"}); }},
        {12, "correlation sums, (1,1,1)", 300,
         [] {
             return suite_rows("correlation", {}, {"correlation.ratio", "correlation.residual_nonincreasing"});
         }},
        {13, "Mellin transform, closed vs quadrature", 60,
         [] { return suite_rows("mellin", {}, {"mellin.closed_vs_quadrature"}); }},
        {14, "K-function bound batteries", 120,
         [] {
             return merge({suite_rows("kbound", {}, {"kbound.tau2000"}),
                           suite_rows("kll-bounds", {}, {"kll.four", "kll.prime_power", "kll.tau_squared", "kll.ramified",
                                                          "k12.tau_squared"}),
                           suite_rows("alpha-k-bounds", {}, {})});
         }},
        {15, "desk-scale proportion smoke test, -23, [100,200], H=2", 600, proportion_smoke},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool in_time = dt <= c.limit_s;
        const bool pass = o.pass && in_time;
        failed += !pass;
        std::printf("criterion %2d: %s  %s  time=%.1fs (limit %.0fs%s)  %s\n", c.id, pass ? "PASS" : "FAIL", c.what, dt,
                    c.limit_s, in_time ? "" : ", exceeded", o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria failed\n", failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
