#include "critline/lseries.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace critline {

namespace {

constexpr double kTailExponent = 45.0;
constexpr double kFitPoint = 4.5;

double rotation_angle(double t, double theta0) {
    const double at = std::abs(t);
    if (at * kPi / 2.0 <= theta0) return 0.0;
    return std::copysign(kPi / 2.0 - theta0 / at, t);
}

std::vector<double> split_coefficients(const DiscriminantSplit& sp, i64 n_max) {
    const RealCharacter c1(sp.d1), c2(sp.d2);
    std::vector<double> r(static_cast<std::size_t>(n_max) + 1, 0.0);
    for (i64 d = 1; d <= n_max; ++d) {
        const int a = c1(d);
        if (!a) continue;
        for (i64 m = 1; d * m <= n_max; ++m) r[static_cast<std::size_t>(d * m)] += a * c2(m);
    }
    return r;
}

}  // namespace

LSeries::LSeries(std::vector<double> coeffs, i64 D, bool has_pole)
    : coeffs_(std::move(coeffs)), D_(D), has_pole_(has_pole) {
    if (coeffs_.size() < 2) throw std::invalid_argument("LSeries: empty coefficient table");
    coeffs_[0] = 0.0;
    if (has_pole_) fit_pole_constant();
}

LSeries LSeries::hecke(const ClassGroup& g, const HeckeCharacter& psi, i64 n_max) {
    const CoefficientTable tab(g, psi, n_max);
    return LSeries(tab.values(), g.disc().abs(), psi.is_principal);
}

LSeries LSeries::from_split(const DiscriminantSplit& sp, i64 n_max) {
    const i64 D = std::abs(sp.d1 * sp.d2);
    return LSeries(split_coefficients(sp, n_max), D, sp.d1 == 1 || sp.d2 == 1);
}

LSeries LSeries::epstein(const QuadForm& f, i64 n_max) {
    const auto counts = representation_counts(f, n_max);
    std::vector<double> c(counts.begin(), counts.end());
    return LSeries(std::move(c), -f.disc(), true);
}

double LSeries::scale() const { return 2.0 * kPi / std::sqrt(static_cast<double>(D_)); }

i64 LSeries::terms_needed(cplx s, double theta0) const {
    const double phi = rotation_angle(s.imag(), theta0);
    const double c = scale();
    const double by_modulus = (std::abs(s) + kTailExponent) / c;
    const double by_real_part = kTailExponent / (c * std::cos(phi));
    return static_cast<i64>(std::ceil(std::max(by_modulus, by_real_part))) + 1;
}

ScaledValue LSeries::lambda_scaled(cplx s, double theta0) const {
    if (has_pole_ && (std::abs(s) < 1e-6 || std::abs(s - 1.0) < 1e-6))
        throw PoleError("Lambda: too close to a pole");
    const double phi = rotation_angle(s.imag(), theta0);
    const cplx rot(std::cos(phi), std::sin(phi));
    const double c = scale();
    const i64 N = terms_needed(s, theta0);
    if (N > n_max()) throw BudgetError("Lambda: coefficient table too short for this height");
    const cplx s1 = 1.0 - s;
    cplx sum1 = 0.0, sum2 = 0.0;
    for (i64 n = 1; n <= N; ++n) {
        const double a = coeffs_[static_cast<std::size_t>(n)];
        if (a == 0.0) continue;
        sum1 += a * incgamma_scaled(s, c * static_cast<double>(n) * rot);
        sum2 += a * incgamma_scaled(s1, c * static_cast<double>(n) * std::conj(rot));
    }
    if (has_pole_) {
        sum1 -= kappa_ / s;
        sum2 += kappa_ / (s - 1.0);
    }
    const double sigma = s.real();
    const cplx ph1(std::cos(phi * sigma), std::sin(phi * sigma));
    const cplx ph2(std::cos(phi * (sigma - 1.0)), std::sin(phi * (sigma - 1.0)));
    return {ph1 * sum1 + ph2 * sum2, -phi * s.imag()};
}

cplx LSeries::value(cplx s) const {
    const ScaledValue v = lambda_scaled(s);
    return v.value * std::exp(v.log_scale + s * std::log(scale()) - log_gamma(s));
}

cplx LSeries::dirichlet_sum(cplx s, i64 n_terms) const {
    n_terms = std::min(n_terms, n_max());
    cplx sum = 0.0;
    for (i64 n = 1; n <= n_terms; ++n) {
        const double a = coeffs_[static_cast<std::size_t>(n)];
        if (a != 0.0) sum += a * std::exp(-s * std::log(static_cast<double>(n)));
    }
    return sum;
}

void LSeries::fit_pole_constant() {
    // Lambda(s0) = P(s0) + kappa (1/(s0-1) - 1/s0); the direct sum gets a mean-density tail correction.
    const double s0 = kFitPoint;
    const double c = scale();
    kappa_ = 0.0;
    const ScaledValue partial = lambda_scaled(cplx(s0, 0.0));
    const i64 N = n_max();
    double direct = 0.0;
    for (i64 n = N; n >= 1; --n) direct += coeffs_[static_cast<std::size_t>(n)] * std::pow(static_cast<double>(n), -s0);
    const double gamma_factor = std::exp(std::lgamma(s0) - s0 * std::log(c));
    const double polar = 1.0 / (s0 - 1.0) - 1.0 / s0;
    double kappa = 0.0;
    for (int it = 0; it < 4; ++it) {
        const double tail = kappa * c * std::pow(static_cast<double>(N) + 0.5, 1.0 - s0) / (s0 - 1.0);
        kappa = (gamma_factor * (direct + tail) - partial.value.real()) / polar;
    }
    kappa_ = kappa;
}

double LSeries::z_normalized(double t, bool check) const {
    const ScaledValue v = lambda_scaled(cplx(0.5, t));
    const cplx z = v.value * std::exp(v.log_scale + kPi * std::abs(t) / 2.0);
    if (check && std::abs(z.imag()) >= 1e-9 * (std::abs(z) + 1e-300))
        throw RealityError("Lambda(1/2+it) not real at t = " + std::to_string(t));
    return z.real();
}

double hardy_Z(const LSeries& F, double t) {
    const cplx z = F.lambda(cplx(0.5, t));
    if (std::abs(z.imag()) >= 1e-9 * (std::abs(z) + 1e-300))
        throw RealityError("Lambda(1/2+it) not real at t = " + std::to_string(t));
    return z.real();
}

EpsteinZeta EpsteinZeta::build(const ClassGroup& g, const QuadForm& f, i64 n_max) {
    EpsteinZeta z;
    z.form = reduce(f);
    const int cls = g.index_of(z.form);
    if (cls < 0) throw std::invalid_argument("EpsteinZeta: form not in the class group");
    const double w = static_cast<double>(epsilon_units(g.disc())) / g.h();
    for (const auto& psi : characters(g)) {
        z.weights.push_back(w * std::conj(psi.value(cls)));
        z.lfuncs.push_back(LSeries::hecke(g, psi, n_max));
    }
    return z;
}

cplx epstein_direct(const QuadForm& f, cplx s, i64 n_max) { return LSeries::epstein(f, n_max).value(s); }

cplx epstein_via_hecke(const EpsteinZeta& z, cplx s) {
    cplx sum = 0.0;
    for (std::size_t j = 0; j < z.lfuncs.size(); ++j) sum += z.weights[j] * z.lfuncs[j].value(s);
    return sum;
}

cplx epstein_via_hecke(const ClassGroup& g, const QuadForm& f, cplx s, i64 n_max) {
    return epstein_via_hecke(EpsteinZeta::build(g, f, n_max), s);
}

DiscriminantSplit split_for_character(const ClassGroup& g, const HeckeCharacter& psi) {
    if (!psi.is_real) throw std::invalid_argument("split_for_character: complex character");
    constexpr i64 n_check = 500;
    const CoefficientTable tab(g, psi, n_check);
    for (const auto& sp : splits(g.disc().value())) {
        const auto r = split_coefficients(sp, n_check);
        bool same = true;
        for (i64 n = 1; n <= n_check && same; ++n) same = static_cast<double>(tab.exact_int(n)) == r[n];
        if (same) return sp;
    }
    throw std::logic_error("split_for_character: no matching split");
}

double scan_step(double t, i64 D) {
    const double x = std::abs(t) * std::sqrt(static_cast<double>(D)) / (2.0 * kPi) + 4.0;
    return kPi / (4.0 * std::log(x));
}

namespace {

double bisect(const std::function<double(double)>& f, double a, double fa, double b, double tol) {
    while (b - a > tol) {
        const double m = 0.5 * (a + b);
        const double fm = f(m);
        if (fm == 0.0) return m;
        if ((fm < 0) == (fa < 0)) {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    return 0.5 * (a + b);
}

// Minimise sgn * f on [a, b]; returns the abscissa of the smallest sample seen.
double golden_min(const std::function<double(double)>& f, double sgn, double a, double b, double& fbest) {
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
    double f1 = sgn * f(x1), f2 = sgn * f(x2);
    for (int it = 0; it < 40; ++it) {
        if (f1 < 0 || f2 < 0) break;
        if (f1 < f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - gr * (b - a);
            f1 = sgn * f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + gr * (b - a);
            f2 = sgn * f(x2);
        }
    }
    if (f1 < f2) {
        fbest = sgn * f1;
        return x1;
    }
    fbest = sgn * f2;
    return x2;
}

}  // namespace

ZeroScanResult scan_real_function(const std::function<double(double)>& f, double t1, double t2, i64 D,
                                  const ScanOptions& opt) {
    if (!(t1 < t2)) throw std::invalid_argument("scan: need t1 < t2");
    ZeroScanResult res;
    std::vector<double> ts, fs;
    for (double t = t1;;) {
        ts.push_back(t);
        fs.push_back(f(t));
        if (t >= t2) break;
        const double step = opt.step_scale * scan_step(std::max(std::abs(t), std::abs(t2)), D);
        res.max_step = std::max(res.max_step, step);
        t = std::min(t + step, t2);
    }
    res.samples = ts.size();
    auto add_bracket = [&](double a, double fa, double b, double fb) {
        if (fa == 0.0) {
            res.zeros.push_back({a, 0.0});
            return;
        }
        if (fb == 0.0) return;  // picked up as the left end of the next bracket
        const double z = bisect(f, a, fa, b, opt.tol);
        res.zeros.push_back({z, opt.tol});
    };
    for (std::size_t i = 0; i + 1 < ts.size(); ++i)
        if (fs[i] == 0.0 || (fs[i] < 0) != (fs[i + 1] < 0)) add_bracket(ts[i], fs[i], ts[i + 1], fs[i + 1]);
    if (fs.back() == 0.0) res.zeros.push_back({ts.back(), 0.0});
    if (opt.refine_minima) {
        for (std::size_t i = 1; i + 1 < ts.size(); ++i) {
            const bool same = (fs[i - 1] < 0) == (fs[i] < 0) && (fs[i] < 0) == (fs[i + 1] < 0);
            if (!same || fs[i] == 0.0) continue;
            if (!(std::abs(fs[i]) < std::abs(fs[i - 1]) && std::abs(fs[i]) < std::abs(fs[i + 1]))) continue;
            const double sgn = fs[i] < 0 ? -1.0 : 1.0;
            double fmin = 0.0;
            const double tm = golden_min(f, sgn, ts[i - 1], ts[i + 1], fmin);
            if ((fmin < 0) == (fs[i] < 0) || fmin == 0.0) continue;
            ++res.pair_refinements;
            res.zeros.push_back({bisect(f, ts[i - 1], fs[i - 1], tm, opt.tol), opt.tol});
            res.zeros.push_back({bisect(f, tm, fmin, ts[i + 1], opt.tol), opt.tol});
        }
    }
    std::sort(res.zeros.begin(), res.zeros.end(), [](const Zero& x, const Zero& y) { return x.t < y.t; });
    res.zeros.erase(std::unique(res.zeros.begin(), res.zeros.end(),
                                [&](const Zero& x, const Zero& y) { return y.t - x.t < 4 * opt.tol; }),
                    res.zeros.end());
    return res;
}

ZeroScanResult scan_zeros(const LSeries& F, double t1, double t2, const ScanOptions& opt) {
    // Reality is checked on the first evaluation at each grid point; bisection and minimisation
    // points sit near zeros where the relative check is meaningless.
    double worst = 0.0;
    std::vector<double> grid;
    for (double t = t1;;) {
        grid.push_back(t);
        if (t >= t2) break;
        t = std::min(t + opt.step_scale * scan_step(std::max(std::abs(t), std::abs(t2)), F.D()), t2);
    }
    std::size_t next_grid = 0;
    auto f = [&](double t) {
        const ScaledValue v = F.lambda_scaled(cplx(0.5, t));
        const cplx z = v.value * std::exp(v.log_scale + kPi * std::abs(t) / 2.0);
        if (next_grid < grid.size() && t == grid[next_grid]) {
            worst = std::max(worst, std::abs(z.imag()) / (std::abs(z) + 1e-300));
            ++next_grid;
        }
        return z.real();
    };
    ZeroScanResult res = scan_real_function(f, t1, t2, F.D(), opt);
    res.max_reality_residual = worst;
    return res;
}

WindowRecord window_test(const LSeries& F, double t, double H, const EtaSquared* eta_sq, double T_param,
                         double budget) {
    if (!(H > 0)) throw std::invalid_argument("window_test: H must be positive");
    const double slope = -1.0 / T_param;
    auto integrand = [&](double u) {
        const ScaledValue v = F.lambda_scaled(cplx(0.5, u));
        const double lead = v.log_scale + kPi * u / 2.0 + slope * u;
        double val = (v.value * std::exp(lead)).real();
        if (eta_sq) val *= (*eta_sq)(u);
        return val;
    };
    ScanOptions opt;
    opt.step_scale = 0.5;
    opt.tol = 1e-10;
    const auto zs = scan_real_function(integrand, t, t + H, F.D(), opt);
    std::vector<double> cuts{t};
    for (const auto& z : zs.zeros)
        if (z.t > t && z.t < t + H) cuts.push_back(z.t);
    cuts.push_back(t + H);
    WindowRecord rec;
    rec.sign_changes = static_cast<int>(cuts.size()) - 2;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const auto piece = integrate(integrand, cuts[i], cuts[i + 1], std::min(1e-9, budget * 1e-2), 20);
        rec.I += piece.value;
        rec.J += std::abs(piece.value);
    }
    rec.certified = rec.J > std::abs(rec.I) * (1.0 + 10.0 * budget);
    return rec;
}

}  // namespace critline
