#include "critline/kfun.hpp"

#include <cmath>
#include <stdexcept>

namespace critline {

namespace {

i64 iabs(i64 v) { return v < 0 ? -v : v; }

cplx cpow_int(i64 base, cplx e) { return std::exp(e * std::log(static_cast<double>(base))); }

int ipow_sign(int c, int e) {
    int v = 1;
    for (int i = 0; i < e; ++i) v *= c;
    return v;
}

}  // namespace

KContext::KContext(DiscriminantSplit sp, double budget)
    : sp_(sp), c1_(sp.d1), c2_(sp.d2), q1_(iabs(sp.d1)), q2_(iabs(sp.d2)), D_(iabs(sp.d1 * sp.d2)),
      budget_(budget) {}

i64 KContext::r_prime_power(i64 p, int k) const {
    const int a = c1_(p), b = c2_(p);
    i64 s = 0;
    for (int i = 0; i <= k; ++i) s += ipow_sign(a, i) * ipow_sign(b, k - i);
    return s;
}

i64 KContext::r(i64 n) const {
    i64 v = 1;
    for (const auto& pp : factorize(n)) v *= r_prime_power(pp.p, pp.e);
    return v;
}

cplx KContext::K(i64 m, cplx s, double* tail_bound) const {
    if (!(s.real() > 0)) throw std::domain_error("K: needs Re s > 0");
    if (m < 1) throw std::invalid_argument("K: m >= 1");
    const double sigma = s.real();
    cplx value = 1.0;
    double tail_total = 0.0;
    for (const auto& pp : factorize(m)) {
        const i64 p = pp.p;
        const int a = pp.e;
        const cplx x = cpow_int(p, -s);
        const double ax = std::pow(static_cast<double>(p), -sigma);
        const int c1 = c1_(p), c2 = c2_(p), cD = c1 * c2;
        const cplx euler = (1.0 - static_cast<double>(c1 * c1) * x) * (1.0 - static_cast<double>(c2 * c2) * x) *
                           (1.0 - static_cast<double>(cD) * x) * (1.0 - static_cast<double>(cD) * x) /
                           (1.0 - static_cast<double>(cD * cD) * x * x);
        cplx series = 0.0, xk = 1.0;
        double axk = 1.0;
        for (int k = 0;; ++k) {
            series += static_cast<double>(r_prime_power(p, a + k) * r_prime_power(p, k)) * xk;
            xk *= x;
            axk *= ax;
            // bound for sum_{j > k} (a+j+1)(j+1) |x|^j, majorised by the first omitted term over (1 - |x|) with
            // the polynomial growth absorbed by the ratio test below
            const double next = static_cast<double>((a + k + 2) * (k + 2)) * axk;
            const double ratio = ax * static_cast<double>((a + k + 3) * (k + 3)) / static_cast<double>((a + k + 2) * (k + 2));
            if (ratio < 1.0) {
                const double bound = next / (1.0 - ratio);
                if (bound < budget_) {
                    tail_total += bound;
                    break;
                }
            }
            if (k > 100000) throw BudgetError("K: series did not reach the budget");
        }
        value *= euler * series;
    }
    if (tail_bound) *tail_bound = tail_total;
    return value;
}

cplx KContext::K_ll(int l, i64 m, cplx z) const {
    if (l != 1 && l != 2) throw std::invalid_argument("K_ll: l must be 1 or 2");
    if (z.real() < -0.4) throw std::domain_error("K_ll: Re z >= -0.4 required");
    const i64 own = modulus(l), other = modulus(3 - l);
    const i64 g_own = gcd_part(m, own), g_other = gcd_part(m, other);
    cplx value = cpow_int(g_own, -z) * static_cast<double>(chi(l, g_other) * chi(3 - l, g_own));
    if (value == 0.0) return value;
    for (const auto& pp : factorize(m)) {
        const i64 p = pp.p;
        if (D_ % p == 0) continue;
        const int a = pp.e;
        const int cD = chi_D(p);
        const cplx x = cpow_int(p, -z);
        cplx full = 0.0, shortp = 0.0, term = 1.0;
        for (int i = 0; i <= a; ++i) {
            full += term;
            if (i <= a - 2) shortp += term;
            term *= static_cast<double>(cD) * x;
        }
        const double pd = static_cast<double>(p);
        value *= static_cast<double>(ipow_sign(chi(l, p), a)) / (1.0 + cD / pd) * (full - x / pd * shortp);
    }
    return value;
}

cplx KContext::K_ll_product(int l, i64 m, cplx z) const {
    const i64 own = modulus(l);
    const i64 g1 = gcd_part(m, q1_), g2 = gcd_part(m, q2_);
    cplx value = cpow_int(gcd_part(m, own), -z) * static_cast<double>(c1_(g2) * c2_(g1));
    if (value == 0.0) return value;
    for (const auto& pp : factorize(m)) {
        const i64 p = pp.p;
        if (D_ % p == 0) continue;
        const int a = pp.e;
        const int cD = chi_D(p);
        const double pd = static_cast<double>(p);
        const cplx x = cpow_int(p, -z);
        const cplx xa = cpow_int(p, -static_cast<double>(a) * z);
        value *= 1.0 / (1.0 - 1.0 / (pd * pd)) / (1.0 - static_cast<double>(cD) * x) * (1.0 - cD / pd) *
                 static_cast<double>(ipow_sign(chi(l, p), a)) *
                 (1.0 - x / pd + static_cast<double>(ipow_sign(cD, a + 1)) * xa / pd * (1.0 - pd * x));
    }
    return value;
}

namespace {

void check_k12(const KContext& ctx, i64 m1, i64 m2) {
    if (gcd(m1, m2) != 1 || m1 % ctx.modulus(2) != 0 || m2 % ctx.modulus(1) != 0)
        throw std::invalid_argument("K_12: needs (m1, m2) = 1, |d2| | m1, |d1| | m2");
}

}  // namespace

cplx KContext::K_12(i64 m1, i64 m2, cplx z) const {
    check_k12(*this, m1, m2);
    const i64 prod = m1 * m2;
    cplx value = static_cast<double>(c1_(m1) * c2_(m2));
    if (value == 0.0) return value;
    cplx qsum = 0.0;
    for (i64 q : divisors(gcd_part(prod / D_, D_))) qsum += cpow_int(q, -z);
    value *= qsum;
    for (const auto& pp : factorize(prod)) {
        const i64 p = pp.p;
        if (D_ % p == 0) continue;
        const int a = pp.e;
        const int cD = chi_D(p);
        const double pd = static_cast<double>(p);
        const cplx x = cpow_int(p, -z);
        cplx full = 0.0, shortp = 0.0, term = 1.0;
        for (int i = 0; i <= a; ++i) {
            full += term;
            if (i <= a - 2) shortp += term;
            term *= x;
        }
        value *= (full - static_cast<double>(cD) * x / pd * shortp) / (1.0 + cD / pd);
    }
    return value;
}

cplx KContext::K_12_product(i64 m1, i64 m2, cplx z) const {
    check_k12(*this, m1, m2);
    const i64 prod = m1 * m2;
    cplx value = static_cast<double>(c1_(m1) * c2_(m2));
    if (value == 0.0) return value;
    cplx qsum = 0.0;
    for (i64 q : divisors(gcd_part(prod / D_, D_))) qsum += cpow_int(q, -z);
    value *= qsum;
    for (const auto& pp : factorize(prod)) {
        const i64 p = pp.p;
        if (D_ % p == 0) continue;
        const int a = pp.e;
        const double cD = chi_D(p);
        const double pd = static_cast<double>(p);
        const cplx x = cpow_int(p, -z);
        const cplx xa = cpow_int(p, -static_cast<double>(a) * z);
        value *= 1.0 / (1.0 - cD * cD / (pd * pd)) / (1.0 - x) * (1.0 - cD / pd) *
                 (1.0 - cD * x / pd + cD * xa / pd * (1.0 - cD * pd * x));
    }
    return value;
}

double G_N(i64 N) {
    if (N < 1) throw std::invalid_argument("G_N: N >= 1");
    double g = 1.0;
    for (const auto& pp : factorize(N)) {
        const double f = 1.0 + std::pow(static_cast<double>(pp.p), -0.75);
        g *= f * f;
    }
    return g;
}

namespace {

// K values indexed by m <= limit.
template <class Fn>
std::vector<cplx> tabulate(i64 limit, Fn fn) {
    std::vector<cplx> t(static_cast<std::size_t>(limit) + 1, 0.0);
    for (i64 m = 1; m <= limit; ++m) t[m] = fn(m);
    return t;
}

std::vector<i64> support(const MollifierTable& M) {
    std::vector<i64> s;
    for (i64 nu = 1; nu <= M.nu_max; ++nu)
        if (M.beta[nu] != 0.0) s.push_back(nu);
    return s;
}

// sum beta1 beta2 beta3 beta4 / (nu2 nu4) (q / (nu1 nu3))^{e} Kt[nu1 nu4 / q] Kt[nu2 nu3 / q]
cplx quadruple_naive(const MollifierTable& M, const std::vector<cplx>& Kt, cplx e) {
    if (M.nu_max > kNaiveSumLimit) throw BudgetError("selberg sum: X above the naive-loop cost guard");
    const auto nus = support(M);
    cplx total = 0.0;
    for (i64 n1 : nus)
        for (i64 n2 : nus)
            for (i64 n3 : nus) {
                const double b123 = M.beta[n1] * M.beta[n2] * M.beta[n3];
                for (i64 n4 : nus) {
                    const i64 q = gcd(n1 * n4, n2 * n3);
                    const double w = b123 * M.beta[n4] / static_cast<double>(n2 * n4);
                    const cplx ratio = std::exp(e * std::log(static_cast<double>(q) / static_cast<double>(n1 * n3)));
                    total += w * ratio * Kt[n1 * n4 / q] * Kt[n2 * n3 / q];
                }
            }
    return total;
}

// sum_{d} sum_{m | d} mu(m) (d/m)^{e} g(d, m)^2,
// g(d, m) = sum_{d | nu1 nu4} beta1 beta4 / (nu1^{e} nu4) Kt[nu1 nu4 m / d]
cplx quadruple_factored(const MollifierTable& M, const std::vector<cplx>& Kt, cplx e) {
    if (M.nu_max > kFactoredSumLimit) throw BudgetError("selberg sum: X above the factored-route cost guard");
    const auto nus = support(M);
    struct Pair {
        i64 prod;
        cplx w;
    };
    std::vector<Pair> pairs;
    for (i64 a : nus)
        for (i64 b : nus)
            pairs.push_back({a * b, M.beta[a] * M.beta[b] / static_cast<double>(b) *
                                        std::exp(-e * std::log(static_cast<double>(a)))});
    const i64 dmax = M.nu_max * M.nu_max;
    std::vector<cplx> wsum(static_cast<std::size_t>(dmax) + 1, 0.0);
    for (const auto& pr : pairs) wsum[pr.prod] += pr.w;
    cplx total = 0.0;
    for (i64 d = 1; d <= dmax; ++d) {
        for (i64 m : divisors(d)) {
            const int mu = mobius(m);
            if (!mu) continue;
            cplx g = 0.0;
            for (i64 P = d; P <= dmax; P += d)
                if (wsum[P] != 0.0) g += wsum[P] * Kt[P / d * m];
            if (g == 0.0) continue;
            total += static_cast<double>(mu) * std::exp(e * std::log(static_cast<double>(d / m))) * g * g;
        }
    }
    return total;
}

}  // namespace

cplx selberg_S(const KContext& ctx, const MollifierTable& M, cplx z, SumRoute route) {
    const i64 lim = M.nu_max * M.nu_max;
    const auto Kt = tabulate(lim, [&](i64 m) { return ctx.K(m, 1.0 - z); });
    return route == SumRoute::Naive ? quadruple_naive(M, Kt, 1.0 - z) : quadruple_factored(M, Kt, 1.0 - z);
}

cplx selberg_Sll(const KContext& ctx, int l, const MollifierTable& M, cplx z, SumRoute route) {
    const i64 lim = M.nu_max * M.nu_max;
    const auto Kt = tabulate(lim, [&](i64 m) { return ctx.K_ll(l, m, z); });
    return route == SumRoute::Naive ? quadruple_naive(M, Kt, 1.0 - z) : quadruple_factored(M, Kt, 1.0 - z);
}

cplx s_tilde(const KContext& ctx, int l, const MollifierTable& M, cplx w, SumRoute route) {
    const i64 own = ctx.modulus(l), other = ctx.modulus(3 - l);
    cplx v = selberg_Sll(ctx, l, M, w, route);
    v *= cpow_int(own, -w / 2.0) * cpow_int(other, w / 2.0);
    for (const auto& pp : factorize(own)) v *= 1.0 - cpow_int(pp.p, w - 1.0);
    for (const auto& pp : factorize(other)) v *= 1.0 - cpow_int(pp.p, -w - 1.0);
    return v;
}

std::vector<i64> squared_coefficient_series(const KContext& ctx, i64 N, bool printed_denominator) {
    const std::size_t sz = static_cast<std::size_t>(N) + 1;
    auto convolve = [&](const std::vector<i64>& a, const std::vector<i64>& b) {
        std::vector<i64> c(sz, 0);
        for (i64 i = 1; i <= N; ++i) {
            if (!a[i]) continue;
            for (i64 j = 1; i * j <= N; ++j) c[i * j] += a[i] * b[j];
        }
        return c;
    };
    std::vector<i64> p1(sz, 0), p2(sz, 0), cd(sz, 0), inv2s(sz, 0);
    for (i64 n = 1; n <= N; ++n) {
        p1[n] = gcd(n, ctx.modulus(1)) == 1 ? 1 : 0;  // chi_{d1}^2: principal character mod |d1|
        p2[n] = gcd(n, ctx.modulus(2)) == 1 ? 1 : 0;
        cd[n] = ctx.chi_D(n);
    }
    // 1 / L(2s, chi_D^2): chi_D^2 is the principal character mod D
    for (i64 k = 1; k * k <= N; ++k)
        inv2s[k * k] = printed_denominator ? mobius(k) * ctx.chi_D(k) : (gcd(k, ctx.D()) == 1 ? mobius(k) : 0);
    return convolve(convolve(convolve(p1, p2), convolve(cd, cd)), inv2s);
}

}  // namespace critline
