#include "critline/mollifier.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace critline {

LogPoly::LogPoly(const mpq_class& c) {
    if (c != 0) terms_[{}] = c;
}

LogPoly LogPoly::lambda(i64 p) {
    LogPoly r;
    r.terms_[{p}] = 1;
    return r;
}

void LogPoly::add_term(const std::vector<i64>& key, const mpq_class& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(key, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LogPoly& LogPoly::operator+=(const LogPoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
}

LogPoly LogPoly::operator+(const LogPoly& o) const {
    LogPoly r = *this;
    r += o;
    return r;
}

LogPoly LogPoly::operator*(const LogPoly& o) const {
    LogPoly r;
    for (const auto& [k1, c1] : terms_)
        for (const auto& [k2, c2] : o.terms_) {
            std::vector<i64> key;
            std::merge(k1.begin(), k1.end(), k2.begin(), k2.end(), std::back_inserter(key));
            r.add_term(key, c1 * c2);
        }
    return r;
}

LogPoly LogPoly::operator*(const mpq_class& c) const {
    LogPoly r;
    if (c == 0) return r;
    r.terms_ = terms_;
    for (auto& [k, v] : r.terms_) v *= c;
    return r;
}

mpq_class LogPoly::constant() const {
    auto it = terms_.find({});
    return it == terms_.end() ? mpq_class(0) : it->second;
}

bool LogPoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }

int LogPoly::degree() const {
    int d = 0;
    for (const auto& [k, c] : terms_) d = std::max(d, static_cast<int>(k.size()));
    return d;
}

double LogPoly::evaluate(double log_X) const {
    double sum = 0.0;
    for (const auto& [k, c] : terms_) {
        double m = c.get_d();
        for (i64 p : k) m *= std::log(static_cast<double>(p)) / log_X;
        sum += m;
    }
    return sum;
}

double smoothing_weight(i64 nu, double X) {
    const double v = static_cast<double>(nu);
    if (v * v <= X) return 1.0;
    if (v >= X) return 0.0;
    return 2.0 * std::log(X / v) / std::log(X);
}

LogPoly smoothing_weight_exact(i64 nu, double X) {
    const double v = static_cast<double>(nu);
    if (v * v <= X) return LogPoly(1);
    if (v >= X) return LogPoly();
    // 2 - 2 sum_p e_p lambda_p
    LogPoly r(2);
    for (const auto& pp : factorize(nu)) r += LogPoly::lambda(pp.p) * mpq_class(-2 * pp.e);
    return r;
}

namespace {

// g = f^{-1/2}: g_k = (1/k) sum_{j=1}^k (j/2 - k) f_j g_{k-j}
template <class T>
std::vector<T> inv_sqrt(const std::vector<T>& f, int k_max) {
    std::vector<T> g(static_cast<std::size_t>(k_max) + 1, T(0));
    g[0] = 1;
    for (int k = 1; k <= k_max; ++k) {
        T acc(0);
        for (int j = 1; j <= k && j < static_cast<int>(f.size()); ++j) {
            T w = T(j);
            w /= 2;
            w -= k;
            acc += w * f[j] * g[k - j];
        }
        acc /= k;
        g[k] = acc;
    }
    return g;
}

mpq_class frac(long n, long d) {
    mpq_class q(n, d);
    q.canonicalize();
    return q;
}

mpq_class binomial_half(int k) {
    mpq_class c = 1;
    for (int i = 0; i < k; ++i) c *= frac(1 - 2 * i, 2 * (i + 1));
    return c;
}

bool is_integral(double v) { return std::abs(v - std::nearbyint(v)) < 1e-9; }

}  // namespace

std::vector<mpq_class> inverse_sqrt_series(const std::vector<mpq_class>& f, int k_max) { return inv_sqrt(f, k_max); }
std::vector<double> inverse_sqrt_series(const std::vector<double>& f, int k_max) { return inv_sqrt(f, k_max); }

mpq_class alpha_closed(const DiscriminantSplit& sp, i64 p, int k) {
    if (k == 0) return 1;
    const int c1 = kronecker(sp.d1, p), c2 = kronecker(sp.d2, p);
    const int cD = c1 * c2;
    if (cD == 0) {
        // one factor only: (1 - chi x)^{1/2}
        const int c = c1 + c2;
        return (k % 2 && c > 0) ? mpq_class(-binomial_half(k)) : binomial_half(k);
    }
    if (k == 1) return frac(-(c1 + c2), 2);
    if (k == 2) return frac(-(c1 * c1 + c2 * c2), 8) + frac(cD, 4);
    if (k % 2) return 0;
    if (cD != -1) return 0;
    const int j = k / 2;
    mpq_class v = frac(-1, 2);
    for (int i = 1; i <= j - 1; ++i) v *= frac(2 * i - 1, 2);
    for (int i = 2; i <= j; ++i) v /= i;
    return v;
}

mpq_class alpha_expanded(const DiscriminantSplit& sp, i64 p, int k) {
    const int c1 = kronecker(sp.d1, p), c2 = kronecker(sp.d2, p);
    std::vector<mpq_class> f(static_cast<std::size_t>(k) + 1);
    for (int j = 0; j <= k; ++j) {
        // r(p^j) = sum_{i=0}^{j} c1^i c2^{j-i}
        i64 r = 0;
        int a = 1;
        for (int i = 0; i <= j; ++i) {
            int b = 1;
            for (int m = 0; m < j - i; ++m) b *= c2;
            r += a * b;
            a *= c1;
        }
        f[j] = r;
    }
    return inverse_sqrt_series(f, k)[k];
}

mpq_class alpha_of(const DiscriminantSplit& sp, i64 n) {
    mpq_class v = 1;
    for (const auto& pp : factorize(n)) v *= alpha_closed(sp, pp.p, pp.e);
    return v;
}

MollifierTable alpha_table(const LSeries& L, double X, const std::optional<DiscriminantSplit>& split) {
    if (!(X >= 3.0)) throw std::invalid_argument("alpha_table: X must be >= 3");
    MollifierTable M;
    M.X = X;
    M.nu_max = static_cast<i64>(std::floor(X));
    M.split = split;
    if (M.nu_max > L.n_max()) throw BudgetError("alpha_table: coefficient table shorter than X");
    const i64 n = M.nu_max;
    const std::size_t sz = static_cast<std::size_t>(n) + 1;
    M.exact = true;
    for (i64 k = 1; k <= n; ++k) M.exact = M.exact && is_integral(L.coeff(k));
    const i64 D = L.D();

    M.alpha.assign(sz, 0.0);
    M.weight.assign(sz, 0.0);
    M.beta.assign(sz, 0.0);
    if (M.exact) {
        M.alpha_q.assign(sz, 0);
        M.beta_q.assign(sz, LogPoly());
    }
    // Local values alpha(p^k), keyed by prime power.
    std::vector<mpq_class> local_q(M.exact ? sz : 0);
    std::vector<double> local_d(sz, 0.0);
    for (i64 p : primes_up_to(n)) {
        int kmax = 0;
        for (i64 q = p; q <= n; q *= p) ++kmax;
        if (M.exact) {
            std::vector<mpq_class> f(static_cast<std::size_t>(kmax) + 1);
            f[0] = 1;
            i64 q = 1;
            for (int k = 1; k <= kmax; ++k) {
                q *= p;
                f[k] = mpq_class(static_cast<long>(std::llround(L.coeff(q))));
            }
            const auto g = inverse_sqrt_series(f, kmax);
            q = 1;
            for (int k = 1; k <= kmax; ++k) {
                q *= p;
                mpq_class v = g[k];
                if (split && D % p != 0) {
                    const mpq_class c = alpha_closed(*split, p, k);
                    if (c != v) throw std::logic_error("alpha_table: closed form disagrees with expansion");
                    v = c;
                }
                local_q[q] = v;
                local_d[q] = v.get_d();
            }
        } else {
            std::vector<double> f(static_cast<std::size_t>(kmax) + 1);
            f[0] = 1.0;
            i64 q = 1;
            for (int k = 1; k <= kmax; ++k) {
                q *= p;
                f[k] = L.coeff(q);
            }
            const auto g = inverse_sqrt_series(f, kmax);
            q = 1;
            for (int k = 1; k <= kmax; ++k) {
                q *= p;
                local_d[q] = g[k];
            }
        }
    }
    const SpfSieve sieve(std::max<i64>(n, 2));
    for (i64 nu = 1; nu <= n; ++nu) {
        double a = 1.0;
        mpq_class aq = 1;
        for (const auto& pp : sieve.factorize(nu)) {
            const i64 q = ipow(pp.p, pp.e);
            a *= local_d[q];
            if (M.exact) aq *= local_q[q];
        }
        const double w = smoothing_weight(nu, X);
        M.alpha[nu] = a;
        M.weight[nu] = w;
        M.beta[nu] = a * w;
        if (M.exact) {
            M.alpha_q[nu] = aq;
            M.beta_q[nu] = smoothing_weight_exact(nu, X) * aq;
        }
    }
    return M;
}

cplx eta(const MollifierTable& M, cplx s) {
    cplx sum = 0.0;
    for (i64 nu = 1; nu <= M.nu_max; ++nu) {
        const double b = M.beta[nu];
        if (b != 0.0) sum += b * std::exp(-s * std::log(static_cast<double>(nu)));
    }
    return sum;
}

std::vector<LogPoly> mollified_coeffs(const LSeries& L, const MollifierTable& M, i64 N, ConvolutionRoute route) {
    if (!M.exact) throw std::invalid_argument("mollified_coeffs: needs integer coefficients");
    if (static_cast<double>(N) > M.X) throw std::invalid_argument("mollified_coeffs: N must be <= X");
    const std::size_t sz = static_cast<std::size_t>(N) + 1;
    std::vector<mpq_class> r(sz);
    for (i64 a = 1; a <= N; ++a) r[a] = mpq_class(static_cast<long>(std::llround(L.coeff(a))));
    std::vector<LogPoly> c(sz);
    if (route == ConvolutionRoute::TripleLoop) {
        for (i64 n = 1; n <= N; ++n) {
            LogPoly acc;
            for (i64 a : divisors(n)) {
                if (r[a] == 0) continue;
                const i64 m = n / a;
                for (i64 b : divisors(m)) {
                    const LogPoly& bb = M.beta_q[b];
                    const LogPoly& bc = M.beta_q[m / b];
                    if (bb.is_zero() || bc.is_zero()) continue;
                    acc += (bb * bc) * r[a];
                }
            }
            c[n] = std::move(acc);
        }
        return c;
    }
    std::vector<LogPoly> u(sz);
    for (i64 b = 1; b <= N; ++b) {
        if (M.beta_q[b].is_zero()) continue;
        for (i64 a = 1; a * b <= N; ++a)
            if (r[a] != 0) u[a * b] += M.beta_q[b] * r[a];
    }
    for (i64 b = 1; b <= N; ++b) {
        if (M.beta_q[b].is_zero()) continue;
        for (i64 m = 1; m * b <= N; ++m)
            if (!u[m].is_zero()) c[m * b] += u[m] * M.beta_q[b];
    }
    return c;
}

BHelpers b_helpers(const MollifierTable& M, i64 n) {
    if (n < 1) throw std::invalid_argument("b_helpers: n >= 1");
    if (!M.split) throw std::invalid_argument("b_helpers: needs the discriminant split");
    const auto& sp = *M.split;
    mpq_class b = 0;
    for (i64 d : divisors(n)) b += abs(alpha_of(sp, d) * alpha_of(sp, n / d));
    double B = 1.0;
    for (const auto& pp : factorize(n)) {
        if (pp.e == 1) B *= std::abs(kronecker(sp.d1, pp.p) + kronecker(sp.d2, pp.p));
        else B *= pp.e + 1;
    }
    return {b.get_d(), B};
}

namespace {

template <class F>
double integrate_panels(const F& f, double a, double b, double panel, double rel_tol) {
    const int n = std::max(1, static_cast<int>(std::ceil((b - a) / panel)));
    const double w = (b - a) / n;
    double sum = 0.0;
    for (int i = 0; i < n; ++i) sum += integrate(f, a + i * w, a + (i + 1) * w, rel_tol, 20).value;
    return sum;
}

}  // namespace

WindowIntegrals window_integrals(const LSeries& F, const MollifierTable& M, double t, double H, double T_param,
                                 double rel_tol) {
    if (!(H > 0)) throw std::invalid_argument("window_integrals: H must be positive");
    WindowIntegrals w;
    w.t = t;
    w.H = H;
    w.T_param = T_param;
    const double slope = kPi / 2.0 - 1.0 / T_param;
    const double panel = 0.5 * scan_step(std::abs(t) + H, F.D());
    auto fI = [&](double u) {
        const ScaledValue v = F.lambda_scaled(cplx(0.5, u));
        return (v.value * std::exp(v.log_scale + slope * u)).real() * std::norm(eta(M, cplx(0.5, u)));
    };
    auto prod = [&](double u) {
        const cplx e = eta(M, cplx(0.5, u));
        return F.value(cplx(0.5, u)) * e * e;
    };
    w.I = integrate_panels(fI, t, t + H, panel, rel_tol);
    const double re = integrate_panels([&](double u) { return prod(u).real(); }, t, t + H, panel, rel_tol);
    const double im = integrate_panels([&](double u) { return prod(u).imag(); }, t, t + H, panel, rel_tol);
    w.M = cplx(re, im) - H;
    return w;
}

namespace {

struct FractionWeight {
    i64 num, den;
    double weight;
};

std::vector<FractionWeight> fraction_weights(const MollifierTable& M) {
    std::map<std::pair<i64, i64>, double> acc;
    for (i64 a = 1; a <= M.nu_max; ++a) {
        if (M.beta[a] == 0.0) continue;
        for (i64 b = 1; b <= M.nu_max; ++b) {
            if (M.beta[b] == 0.0) continue;
            const i64 g = std::gcd(a, b);
            acc[{a / g, b / g}] += M.beta[a] * M.beta[b] / static_cast<double>(b);
        }
    }
    std::vector<FractionWeight> out;
    for (const auto& [k, w] : acc) out.push_back({k.first, k.second, w});
    return out;
}

double g_kernel_impl(const LSeries& L, const std::vector<FractionWeight>& fw, double y, double delta) {
    const double c = 2.0 * kPi / std::sqrt(static_cast<double>(L.D()));
    const cplx dir(std::sin(delta), std::cos(delta));
    cplx total = 0.0;
    for (const auto& f : fw) {
        const cplx z = c * static_cast<double>(f.num) / static_cast<double>(f.den) * y * dir;
        const i64 N = static_cast<i64>(std::ceil(46.0 / z.real()));
        if (N > L.n_max()) throw BudgetError("g_kernel: coefficient table too short");
        const cplx w = std::exp(-z);
        cplx pw = 1.0, s = 0.0;
        for (i64 n = 1; n <= N; ++n) {
            pw *= w;
            const double a = L.coeff(n);
            if (a != 0.0) s += a * pw;
        }
        total += f.weight * s;
    }
    return std::norm(total);
}

}  // namespace

double g_kernel(const LSeries& L, const MollifierTable& M, double y, double T_param) {
    if (!(y >= 1.0)) throw std::invalid_argument("g_kernel: y >= 1");
    return g_kernel_impl(L, fraction_weights(M), y, 1.0 / T_param);
}

JEstimate j_estimate(const LSeries& L, const MollifierTable& M, double theta, double T_param, double U_max) {
    const double logT = std::log(T_param);
    if (theta < 1.0 / logT - 1e-15 || theta > 1.0) throw std::invalid_argument("j_estimate: theta out of range");
    const auto fw = fraction_weights(M);
    const double delta = 1.0 / T_param;
    auto f = [&](double u) { return g_kernel_impl(L, fw, u, delta) * std::pow(u, -theta); };
    const double panel = std::sqrt(static_cast<double>(L.D())) / 4.0;
    double value = 0.0, u = 1.0;
    const double peak = f(1.0);
    if (U_max > 0.0) {
        value = integrate_panels(f, 1.0, U_max, panel, 1e-9);
    } else {
        int quiet = 0;
        while (quiet < 3) {
            value += integrate(f, u, u + panel, 1e-9, 20).value;
            u += panel;
            quiet = f(u) < 1e-12 * peak ? quiet + 1 : 0;
        }
        U_max = u;
    }
    return {value, value * std::cbrt(theta * logT) / T_param, U_max};
}

}  // namespace critline
