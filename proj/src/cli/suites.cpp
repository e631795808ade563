#include "cli/suites.hpp"

#include "critline/addprob.hpp"
#include "critline/kfun.hpp"
#include "critline/lseries.hpp"
#include "critline/mollifier.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <sstream>

namespace critline::cli {

namespace {

using Rows = std::vector<CheckRow>;

std::string fmt(const char* f, auto... args) {
    char buf[256];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

std::string split_str(const DiscriminantSplit& sp) { return fmt("d1=%lld;d2=%lld", (long long)sp.d1, (long long)sp.d2); }

CheckRow upper(std::string name, std::string params, double measured, double bound, bool asserted = true) {
    return {std::move(name), std::move(params), measured, bound, measured <= bound, asserted};
}

// A printed alternative that the data must reject: passes when the discrepancy exceeds the bound.
CheckRow excluded(std::string name, std::string params, double measured, double bound) {
    return {std::move(name), std::move(params), measured, bound, measured > bound, true};
}

std::vector<i64> discs_or(const RunConfig& cfg, std::vector<i64> dflt) {
    if (cfg.disc) return {*cfg.disc};
    return dflt;
}

// Unordered splits: (d1, d2) and (d2, d1) give the same product L-function.
std::vector<DiscriminantSplit> unordered_splits(i64 disc) {
    std::vector<DiscriminantSplit> out;
    for (const auto& sp : splits(disc))
        if (std::abs(sp.d1) < std::abs(sp.d2)) out.push_back(sp);
    return out;
}

double rel(cplx a, cplx b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

const std::vector<cplx>& z_grid() {
    static const std::vector<cplx> g = [] {
        std::vector<cplx> v;
        for (double x : {0.0, 0.25, 0.5, 1.0})
            for (double y : {0.0, 0.5, 1.0, 3.0}) v.emplace_back(x, y);
        return v;
    }();
    return g;
}

// ---- L-function level ----

Rows suite_funceq(const RunConfig& cfg) {
    Rows rows;
    for (i64 disc : discs_or(cfg, {-4, -15, -23})) {
        const ClassGroup g{Discriminant(disc)};
        const auto chars = characters(g);
        for (std::size_t k = 0; k < chars.size(); ++k) {
            const LSeries L = LSeries::hecke(g, chars[k], 4000);
            double worst = 0.0;
            for (int i = 0; i < 10; ++i)
                for (int j = 0; j < 10; ++j) {
                    const cplx s(0.2 + 0.6 * i / 9.0, -40.0 + 80.0 * j / 9.0);
                    worst = std::max(worst, rel(L.lambda(1.0 - s, 3.5), L.lambda(s, 5.0)));
                }
            rows.push_back(upper("funceq.reflection", fmt("disc=%lld;psi=%zu;grid=10x10", (long long)disc, k), worst, 1e-8));
        }
    }
    return rows;
}

Rows suite_epstein(const RunConfig& cfg) {
    Rows rows;
    std::vector<cplx> pts;
    for (double x : {0.25, 0.5, 0.75, 1.5, 2.5})
        for (double y : {0.5, 3.0, 10.0, 25.0}) pts.emplace_back(x, y);
    const i64 disc = cfg.form ? cfg.form->disc() : cfg.disc.value_or(-23);
    const ClassGroup g{Discriminant(disc)};
    std::vector<QuadForm> forms = cfg.form ? std::vector<QuadForm>{*cfg.form} : g.forms();
    for (const auto& f : forms) {
        const EpsteinZeta Z = EpsteinZeta::build(g, f, 4000);
        const LSeries direct = LSeries::epstein(f, 4000);
        double worst = 0.0;
        for (cplx s : pts) worst = std::max(worst, rel(epstein_via_hecke(Z, s), direct.value(s)));
        rows.push_back(upper("epstein.hecke_decomposition",
                             fmt("form=%lld,%lld,%lld;points=20", (long long)f.a, (long long)f.b, (long long)f.c), worst,
                             1e-8));
    }
    if (disc == -4) {
        const LSeries direct = LSeries::epstein(QuadForm{1, 0, 1}, 4000);
        const RealCharacter one(1), chi(-4);
        double worst = 0.0;
        for (cplx s : pts) worst = std::max(worst, rel(4.0 * l_chi(one, s) * l_chi(chi, s), direct.value(s)));
        rows.push_back(upper("epstein.kronecker", "form=1,0,1;points=20", worst, 1e-8));
    }
    return rows;
}

// ---- K-functions ----

Rows suite_kbound(const RunConfig& cfg) {
    Rows rows;
    for (i64 disc : discs_or(cfg, {-15, -20, -23, -24})) {
        for (const auto& sp : unordered_splits(disc)) {
            const KContext ctx(sp);
            double worst = 0.0, worst_tail = 0.0;
            for (double sr : {0.5, 0.75, 1.0})
                for (double si : {0.0, 3.0})
                    for (i64 m = 1; m <= 2000; ++m) {
                        double tail = 0.0;
                        const cplx k = ctx.K(m, cplx(sr, si), &tail);
                        worst = std::max(worst, std::abs(k) / tau_k(m, 2000.0));
                        worst_tail = std::max(worst_tail, tail);
                    }
            rows.push_back(upper("kbound.tau2000", split_str(sp) + ";m<=2000;Re s in {1/2,3/4,1}", worst, 1.0));
            rows.push_back(upper("kbound.tail_budget", split_str(sp), worst_tail, ctx.budget() * 64));
            rows.push_back(upper("kbound.K1", split_str(sp), std::abs(ctx.K(1, cplx(0.75, 2.0)) - 1.0), 1e-15));
            // |K(p, 3/4) - r(p)| p^{3/4}; the first-order term r(p) r(p^2) - r(p)(chi1^2 + chi2^2 + 2 chi_D) is at most 2
            double worst_rem = 0.0;
            for (i64 p : primes_up_to(10000))
                worst_rem = std::max(worst_rem,
                                     std::abs(ctx.K(p, 0.75) - static_cast<double>(ctx.r(p))) * std::pow(double(p), 0.75));
            rows.push_back(upper("kbound.prime_remainder", split_str(sp) + ";p<=1e4", worst_rem, 2.0));
        }
    }
    return rows;
}

Rows suite_kll_bounds(const RunConfig& cfg) {
    Rows rows;
    std::mt19937_64 rng(cfg.seed);
    for (i64 disc : discs_or(cfg, {-15, -20, -24, -35})) {
        for (const auto& sp : splits(disc)) {
            const KContext ctx(sp);
            double w_alpha = 0.0, w_tau = 0.0, w_deriv = 0.0, w_pd = 0.0, w_notation = 0.0;
            for (int l = 1; l <= 2; ++l) {
                for (i64 p : primes_up_to(10000)) {
                    i64 q = p;
                    for (int a = 1; q <= 10000; ++a, q *= p) {
                        for (cplx z : z_grid()) {
                            const cplx k = ctx.K_ll(l, q, z);
                            w_alpha = std::max(w_alpha, std::abs(k) / (3.0 * a + 1.0));
                            if (ctx.D() % p == 0) w_pd = std::max(w_pd, std::abs(k));
                            // the product form has a removable singularity at z = 0
                            if (z != 0.0) w_notation = std::max(w_notation, rel(ctx.K_ll_product(l, q, z), k));
                        }
                    }
                }
                for (i64 m = 1; m <= 2000; ++m) {
                    const double t2 = std::pow(static_cast<double>(tau(m)), 2);
                    for (cplx z : z_grid()) {
                        w_tau = std::max(w_tau, std::abs(ctx.K_ll(l, m, z)) / t2);
                        if (m < 2) continue;
                        const double h = 1e-5;
                        const cplx d = (ctx.K_ll(l, m, z + h) - ctx.K_ll(l, m, z - h)) / (2.0 * h);
                        w_deriv = std::max(w_deriv, std::abs(d) / (t2 * std::log(static_cast<double>(m))));
                    }
                }
            }
            rows.push_back(upper("kll.prime_power", split_str(sp) + ";|K|/(3a+1);p^a<=1e4", w_alpha, 1.0));
            rows.push_back(upper("kll.tau_squared", split_str(sp) + ";|K|/tau^2;m<=2000", w_tau, 1.0));
            rows.push_back(upper("kll.derivative", split_str(sp) + ";|K'|/(tau^2 log m);m<=2000", w_deriv, 1.0 + 1e-6));
            rows.push_back(upper("kll.ramified", split_str(sp) + ";p|D;|K(p^a,z)|", w_pd, 1.0 + 1e-12));
            rows.push_back(upper("kll.notation_product", split_str(sp) + ";p^a<=1e4", w_notation, 1e-12));
            if (ctx.chi_D(2) == -1) {
                double w4 = 0.0;
                for (int l = 1; l <= 2; ++l)
                    for (int i = 0; i < 1000; ++i) w4 = std::max(w4, std::abs(ctx.K_ll(l, 4, cplx(0.0, i / 999.0))));
                rows.push_back(upper("kll.four", split_str(sp) + ";chi_D(2)=-1;z=it", w4, 1.0 + 1e-12));
            }
            // K_12 on random admissible arguments
            const i64 a1 = std::abs(sp.d1), a2 = std::abs(sp.d2);
            std::uniform_int_distribution<i64> pick(1, 30);
            double w12 = 0.0, w12_prod = 0.0;
            int done = 0;
            for (int it = 0; it < 4000 && done < 300; ++it) {
                const i64 m1 = a2 * pick(rng), m2 = a1 * pick(rng);
                if (gcd(m1, m2) != 1) continue;
                ++done;
                const cplx z = z_grid()[1 + static_cast<std::size_t>(it) % (z_grid().size() - 1)];
                const cplx k = ctx.K_12(m1, m2, z);
                w12 = std::max(w12, std::abs(k) / std::pow(static_cast<double>(tau(m1 * m2)), 2));
                w12_prod = std::max(w12_prod, std::abs(k - ctx.K_12_product(m1, m2, z)) / std::max(1.0, std::abs(k)));
            }
            if (done > 0) {
                rows.push_back(upper("k12.tau_squared", split_str(sp) + fmt(";samples=%d", done), w12, 1.0));
                rows.push_back(upper("k12.product_form", split_str(sp) + fmt(";samples=%d", done), w12_prod, 1e-12));
            }
        }
    }
    return rows;
}

Rows suite_kll_reflection(const RunConfig& cfg) {
    Rows rows;
    std::mt19937_64 rng(cfg.seed);
    std::uniform_int_distribution<i64> pick_m(1, 10000);
    std::uniform_real_distribution<double> pick_s(-0.3, 0.3), pick_t(-1.0, 1.0);
    for (i64 disc : discs_or(cfg, {-15, -20, -24})) {
        for (const auto& sp : splits(disc)) {
            const KContext ctx(sp);
            double worst = 0.0;
            for (int i = 0; i < 1000; ++i) {
                const i64 m = pick_m(rng);
                const cplx s(pick_s(rng), pick_t(rng));
                const cplx lhs = ctx.K_ll(1, m, -s) * std::exp(-s * std::log(static_cast<double>(m)));
                worst = std::max(worst, rel(lhs, ctx.K_ll(2, m, s)));
            }
            rows.push_back(upper("kll.reflection", split_str(sp) + ";random=1000", worst, 1e-12));
        }
    }
    return rows;
}

Rows suite_square_series(const RunConfig& cfg) {
    Rows rows;
    for (i64 disc : discs_or(cfg, {-15, -20, -24})) {
        for (const auto& sp : splits(disc)) {
            const KContext ctx(sp);
            const auto fixed = squared_coefficient_series(ctx, 10000);
            const auto printed = squared_coefficient_series(ctx, 10000, true);
            i64 bad = 0, bad_printed = 0;
            for (i64 n = 1; n <= 10000; ++n) {
                const i64 r = ctx.r(n);
                bad += fixed[n] != r * r;
                bad_printed += printed[n] != r * r;
            }
            rows.push_back(upper("squares.principal_denominator", split_str(sp) + ";n<=1e4;mismatches", double(bad), 0.0));
            rows.push_back(excluded("squares.printed_denominator_excluded", split_str(sp) + ";n<=1e4;mismatches",
                                    double(bad_printed), 0.0));
        }
    }
    return rows;
}

Rows suite_gauss_product(const RunConfig& cfg) {
    Rows rows;
    for (i64 disc : discs_or(cfg, {-15, -20, -24, -35, -40})) {
        for (const auto& sp : splits(disc)) {
            const GaussSum g1 = gauss_sum(sp.d1), g2 = gauss_sum(sp.d2), gD = gauss_sum(disc);
            const int sign = RealCharacter(sp.d1)(sp.d2) * RealCharacter(sp.d2)(sp.d1);
            const ExactSurd prod = (g1.exact * g2.exact).times_sign(sign);
            rows.push_back({"gauss.product", split_str(sp), prod == gD.exact ? 0.0 : 1.0, 0.0, prod == gD.exact, true});
            // conj(G^2)/|d| = sign(d); the pair must cancel
            const auto term = [](const GaussSum& g, i64 d) {
                const ExactSurd sq = (g.exact * g.exact).conj();
                return cplx(sq.value()) / static_cast<double>(std::abs(d));
            };
            const double anti = std::abs(term(g1, sp.d1) + term(g2, sp.d2));
            rows.push_back(upper("gauss.antisymmetry", split_str(sp), anti, 1e-12));
        }
    }
    return rows;
}

// ---- mollifier ----

Rows suite_alpha_closed(const RunConfig& cfg) {
    Rows rows;
    for (i64 disc : discs_or(cfg, {-4, -15, -20, -23, -24, -35})) {
        for (const auto& sp : splits(disc)) {
            i64 checked = 0, bad = 0;
            for (i64 p : primes_up_to(10000)) {
                i64 q = p;
                for (int k = 1; q <= 10000; ++k, q *= p) {
                    ++checked;
                    bad += alpha_closed(sp, p, k) != alpha_expanded(sp, p, k);
                }
            }
            rows.push_back(upper("alpha.closed_vs_expansion", split_str(sp) + fmt(";prime_powers=%lld", (long long)checked),
                                 double(bad), 0.0));
        }
    }
    return rows;
}

Rows suite_alpha_k_bounds(const RunConfig& cfg) {
    Rows rows;
    for (i64 disc : discs_or(cfg, {-15, -20, -23, -24, -35})) {
        for (const auto& sp : splits(disc)) {
            const KContext ctx(sp);
            for (int l = 1; l <= 2; ++l) {
                const auto pair_sum = [&](i64 p, cplx z) {
                    const double a1 = alpha_closed(sp, p, 1).get_d(), a2 = alpha_closed(sp, p, 2).get_d();
                    const double pd = static_cast<double>(p);
                    return std::abs(a1 * ctx.K_ll(l, p, z)) / pd + std::abs(a2 * ctx.K_ll(l, p * p, z)) / (pd * pd);
                };
                double w2 = 0.0;
                for (int i = 0; i < 1000; ++i) w2 = std::max(w2, pair_sum(2, cplx(0.0, i / 999.0)));
                const bool ram2 = ctx.D() % 2 == 0;
                rows.push_back(upper("alpha_k.p2", split_str(sp) + fmt(";l=%d;z=it", l), w2, ram2 ? 1.0 / 3.0 : 2.0 / 3.0));
                double w_un = 0.0, w_ram = 0.0;
                for (i64 p : primes_up_to(100)) {
                    if (p == 2) continue;
                    for (double x : {0.0, 0.05})
                        for (int i = 0; i < 200; ++i) {
                            const double v = pair_sum(p, cplx(x, i / 199.0));
                            (ctx.D() % p == 0 ? w_ram : w_un) = std::max(ctx.D() % p == 0 ? w_ram : w_un, v);
                        }
                }
                rows.push_back(upper("alpha_k.odd_unramified", split_str(sp) + fmt(";l=%d;p<=100", l), w_un, 5.0 / 9.0));
                rows.push_back(upper("alpha_k.odd_ramified", split_str(sp) + fmt(";l=%d;p<=100", l), w_ram, 0.2));
            }
        }
    }
    return rows;
}

Rows suite_mollifier(const RunConfig& cfg) {
    Rows rows;
    const double X = cfg.X > 1.0 ? cfg.X : 400.0;
    const i64 edge = static_cast<i64>(std::floor(std::sqrt(X)));
    for (i64 disc : discs_or(cfg, {-15})) {
        for (const auto& sp : unordered_splits(disc)) {
            const LSeries L = LSeries::from_split(sp, 2000);
            const MollifierTable M = alpha_table(L, X, sp);
            const i64 N = edge + 5;
            const auto staged = mollified_coeffs(L, M, N, ConvolutionRoute::Staged);
            const auto loop = mollified_coeffs(L, M, N, ConvolutionRoute::TripleLoop);
            i64 nonzero = 0;
            for (i64 n = 2; n < edge; ++n) nonzero += !staged[n].is_zero();
            const std::string p = split_str(sp) + fmt(";X=%g", X);
            rows.push_back({"mollifier.c1", p, staged[1] == LogPoly(mpq_class(1)) ? 1.0 : 0.0, 1.0,
                            staged[1] == LogPoly(mpq_class(1)), true});
            rows.push_back(upper("mollifier.vanishing", p + fmt(";2<=n<%lld;nonzero", (long long)edge), double(nonzero), 0.0));
            i64 differ = 0;
            for (i64 n = 1; n <= N; ++n) differ += !(staged[n] == loop[n]);
            rows.push_back(upper("mollifier.routes_agree", p + fmt(";n<=%lld;differ", (long long)N), double(differ), 0.0));
        }
    }
    return rows;
}

Rows suite_stilde(const RunConfig& cfg) {
    Rows rows;
    for (i64 disc : discs_or(cfg, {-15})) {
        for (const auto& sp : unordered_splits(disc)) {
            const KContext ctx(sp);
            const LSeries L = LSeries::from_split(sp, 2000);
            const MollifierTable M20 = alpha_table(L, 20.0, sp);
            for (double y : {0.1, 0.3, 0.7}) {
                const cplx w(0.0, y);
                const cplx a = s_tilde(ctx, 2, M20, -w), b = s_tilde(ctx, 1, M20, w);
                rows.push_back(upper("stilde.reflection", split_str(sp) + fmt(";X=20;w=%gi", y), rel(a, b), 1e-10));
            }
            const MollifierTable M6 = alpha_table(L, 6.0, sp);
            double w_s = 0.0, w_ll = 0.0;
            for (cplx z : {cplx(0.1, 0.2), cplx(0.3, -0.5), cplx(0.0, 1.0)}) {
                w_s = std::max(w_s, rel(selberg_S(ctx, M6, z, SumRoute::Factored), selberg_S(ctx, M6, z, SumRoute::Naive)));
                for (int l = 1; l <= 2; ++l)
                    w_ll = std::max(w_ll, rel(selberg_Sll(ctx, l, M6, z, SumRoute::Factored),
                                              selberg_Sll(ctx, l, M6, z, SumRoute::Naive)));
            }
            rows.push_back(upper("stilde.S_routes", split_str(sp) + ";X=6", w_s, 1e-10));
            rows.push_back(upper("stilde.Sll_routes", split_str(sp) + ";X=6", w_ll, 1e-10));
        }
    }
    return rows;
}

// ---- additive problem ----

Rows suite_correlation(const RunConfig& cfg) {
    Rows rows;
    const std::vector<i64> Ns{1000, 10000, 100000};
    for (i64 disc : discs_or(cfg, {-15, -23})) {
        for (const auto& sp : unordered_splits(disc)) {
            SingularSeriesParams P{1, 1, 1, sp};
            const std::string p = split_str(sp) + ";l=1;m1=1;m2=1";
            rows.push_back(upper("correlation.eps1_convention", p,
                                 std::abs(eps_q(P, 1) - cplx(sp.d1 == 1 || sp.d2 == 1 ? 1.0 : 0.0)), 1e-14));
            const CorrelationReport rep = correlation_check(P, Ns);
            for (const auto& r : rep.rows)
                rows.push_back({"correlation.residual", p + fmt(";N=%lld;ratio=%.6f", (long long)r.N, r.ratio),
                                r.residual, 0.0, true, false});
            rows.push_back(upper("correlation.ratio", p + ";N=1e5", std::abs(rep.rows.back().ratio - 1.0), 0.05));
            double worst_step = 0.0;
            for (std::size_t i = 1; i < rep.rows.size(); ++i)
                worst_step = std::max(worst_step, rep.rows[i].residual / rep.rows[i - 1].residual);
            rows.push_back(upper("correlation.residual_nonincreasing", p + ";max successive residual ratio", worst_step, 1.0));
            rows.push_back(upper("correlation.sigma_real", p, std::abs(rep.sigma.imag), 1e-10 * std::abs(rep.sigma.value)));
        }
    }
    // m2 scaling of the main term
    rows.push_back(upper("correlation.main_term_m2", "sigma=1;h=2;N=1000;m2=1 vs 2",
                         std::abs(correlation_main_term(1.0, 2, 1000, 2) * 2.0 - correlation_main_term(1.0, 2, 1000, 1)),
                         1e-9));
    // general (m1, m2): report-only, plus the phase anchor
    const DiscriminantSplit g{-3, 5};
    for (auto [l, m1, m2] : std::vector<std::array<i64, 3>>{{1, 1, 2}, {1, 5, 3}, {1, 3, 5}, {2, 5, 3}}) {
        SingularSeriesParams P{l, m1, m2, g};
        const CorrelationReport rep = correlation_check(P, Ns);
        const std::string p = split_str(g) + fmt(";l=%lld;m1=%lld;m2=%lld;N=1e5", (long long)l, (long long)m1, (long long)m2);
        rows.push_back(upper("correlation.general_ratio", p, std::abs(rep.rows.back().ratio - 1.0), 0.05, false));
        if (m1 * m2 % 15 == 0) {
            P.phase = PhaseSign::Negative;
            const double printed = static_cast<double>(rep.rows.back().S) /
                                   correlation_main_term(sigma_truncated(P, 100000).value, rep.h, 100000, m2);
            rows.push_back(excluded("correlation.printed_phase_excluded", p + fmt(";ratio=%.4f", printed),
                                    std::abs(printed - 1.0), 0.5));
        }
    }
    return rows;
}

Rows suite_zsum(const RunConfig& cfg) {
    Rows rows;
    const std::vector<DiscriminantSplit> sps = cfg.disc ? unordered_splits(*cfg.disc)
                                                        : std::vector<DiscriminantSplit>{{-3, 5}, {1, -15}};
    constexpr i64 L = 2000, Q = 2000;
    for (const auto& sp : sps) {
        for (auto [m1, m2] : std::vector<std::pair<i64, i64>>{{1, 1}, {5, 3}, {3, 5}}) {
            const i64 D = std::abs(sp.d1 * sp.d2);
            if (m1 * m2 > 1 && D != 15) continue;
            const SingularSeriesParams P{1, m1, m2, sp};
            for (cplx s : {cplx(2.0, 0.0), cplx(1.7, 0.3)}) {
                const ZValue zd = Z_direct(P, s, L, Q);
                const cplx zc = Z_closed(P, s);
                const double diff = std::abs(zd.value - zc);
                const std::string p = split_str(sp) + fmt(";m1=%lld;m2=%lld;s=%g%+gi", (long long)m1, (long long)m2, s.real(), s.imag());
                rows.push_back(upper("zsum.direct_vs_closed", p + fmt(";bound=%.3g", zd.bound), diff, std::min(1e-3, zd.bound)));
                if (s.imag() != 0.0) continue;
                // an alternative reading is rejected when the direct sum sits clearly closer to the closed form
                const auto alternative = [&](const char* name, ZClosedOptions opt) {
                    const cplx alt = Z_closed(P, s, opt);
                    if (std::abs(alt - zc) < 1e-9) return;  // reading coincides here
                    CheckRow row = excluded(name, p, std::abs(zd.value - alt), 5.0 * diff);
                    // below the resolution of the direct sum the comparison is informative only
                    row.asserted = std::abs(alt - zc) > 10.0 * diff;
                    rows.push_back(row);
                };
                alternative("zsum.printed_normalization_excluded", {.printed_normalization = true});
                alternative("zsum.signed_gauss_excluded", {.signed_gauss_denominator = true});
                alternative("zsum.swapped_product_excluded", {.swapped_euler_product = true});
            }
        }
        const SingularSeriesParams P{1, 1, 1, sp};
        const ZValue a = Z_direct(P, 2.0, L, Q), b = Z_direct(P, 2.0, 2 * L, Q);
        rows.push_back(upper("zsum.doubling_L", split_str(sp) + ";m1=1;m2=1;s=2", std::abs(a.value - b.value), a.bound));
    }
    return rows;
}

Rows suite_mellin(const RunConfig& cfg) {
    Rows rows;
    const PhiKernel k{cfg.delta, cfg.theta};
    rows.push_back(upper("mellin.phi_one", fmt("delta=%g", k.delta), std::abs(phi(k, 1.0) - 1.0), 1e-15));
    double prev = 0.0, worst_drop = 0.0, peak = 0.0;
    for (int i = 0; i <= 4000; ++i) {
        const double v = phi(k, i * 0.005);
        worst_drop = std::max(worst_drop, prev - v);
        peak = std::max(peak, v);
        prev = v;
    }
    rows.push_back(upper("mellin.phi_increasing", "u in [0,20]", worst_drop, 0.0));
    rows.push_back(upper("mellin.phi_bounded", "u in [0,20]", peak, 1.0 + std::pow(k.Delta(), -4)));
    for (double t : {-2.0, 0.0, 2.0}) {
        const cplx w(1.5, t);
        rows.push_back(upper("mellin.closed_vs_quadrature", fmt("delta=%g;theta=%g;w=1.5%+gi", k.delta, k.theta, t),
                             rel(M_numeric(k, w), M_closed(k, w)), 1e-6));
    }
    return rows;
}

using SuiteFn = std::function<Rows(const RunConfig&)>;

const std::map<std::string, SuiteFn>& registry() {
    static const std::map<std::string, SuiteFn> r{
        {"funceq", suite_funceq},
        {"epstein", suite_epstein},
        {"kbound", suite_kbound},
        {"kll-bounds", suite_kll_bounds},
        {"kll-reflection", suite_kll_reflection},
        {"square-series", suite_square_series},
        {"gauss-product", suite_gauss_product},
        {"alpha-closed", suite_alpha_closed},
        {"alpha-k-bounds", suite_alpha_k_bounds},
        {"mollifier", suite_mollifier},
        {"stilde", suite_stilde},
        {"correlation", suite_correlation},
        {"zsum", suite_zsum},
        {"mellin", suite_mellin},
    };
    return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [k, _] : registry()) v.push_back(k);
        return v;
    }();
    return names;
}

std::vector<CheckRow> run_suite(const std::string& name, const RunConfig& cfg) {
    const auto it = registry().find(name);
    if (it == registry().end()) {
        std::string known;
        for (const auto& n : suite_names()) known += (known.empty() ? "" : ", ") + n;
        throw ConfigError("unknown suite '" + name + "' (known: " + known + ")");
    }
    return it->second(cfg);
}

bool all_pass(const std::vector<CheckRow>& rows) {
    return std::all_of(rows.begin(), rows.end(), [](const CheckRow& r) { return !r.asserted || r.pass; });
}

}  // namespace critline::cli
