#include "critline/addprob.hpp"

#include "critline/kfun.hpp"
#include "critline/quadfield.hpp"

#include <boost/math/quadrature/ooura_fourier_integrals.hpp>

#include <cmath>
#include <map>
#include <stdexcept>

namespace critline {

namespace {

constexpr double kEulerGamma = 0.57721566490153286061;

i64 iabs(i64 x) { return x < 0 ? -x : x; }

// chi(num / den), zero when the quotient is not an integer
int chi_ratio(const RealCharacter& chi, i64 num, i64 den) {
    return num % den == 0 ? chi(num / den) : 0;
}

cplx unit_root(i64 num, i64 q) {
    const double a = -2.0 * kPi * static_cast<double>(mod(num, q)) / static_cast<double>(q);
    return {std::cos(a), std::sin(a)};
}

struct Brackets {
    RealCharacter c1, c2, cD;
    cplx g1, g2;  // G(chi_dj) / sqrt|dj|

    explicit Brackets(const DiscriminantSplit& sp)
        : c1(sp.d1), c2(sp.d2), cD(sp.d1 * sp.d2),
          g1(gauss_sum(sp.d1).numeric / std::sqrt(static_cast<double>(iabs(sp.d1)))),
          g2(gauss_sum(sp.d2).numeric / std::sqrt(static_cast<double>(iabs(sp.d2)))) {}
};

// sum_{l > L} tau(l) l^{-sigma}, leading asymptotic
double tau_tail(double L, double sigma) {
    const double a = sigma - 1.0;
    return std::pow(L, -a) * (std::log(L) + 2.0 * kEulerGamma + 1.0 / a) / a;
}

}  // namespace

void SingularSeriesParams::validate() const {
    if (l < 1 || m1 < 1 || m2 < 1) throw std::invalid_argument("singular series: l, m1, m2 >= 1");
    if (gcd(m1, m2) != 1) throw std::invalid_argument("singular series: (m1, m2) = 1 required");
    if (gcd(l, m1) != 1 || gcd(l, m2) != 1) throw std::invalid_argument("singular series: (l, mj) = 1 required");
    if (!is_fundamental_or_one(split.d1) || !is_fundamental_or_one(split.d2) || gcd(split.d1, split.d2) != 1 ||
        split.d1 * split.d2 >= 0)
        throw std::invalid_argument("singular series: bad split");
}

cplx eps_q(const SingularSeriesParams& P, i64 q) {
    if (q < 1) throw std::invalid_argument("eps_q: q >= 1");
    const i64 sgn = P.phase == PhaseSign::Negative ? 1 : -1;
    const Brackets br(P.split);
    const i64 a1 = iabs(P.split.d1), a2 = iabs(P.split.d2);
    const i64 g1q = gcd(P.m1, q), g2q = gcd(P.m2, q);
    const i64 m1p = P.m1 / g1q, m2p = P.m2 / g2q;
    const i64 q1 = q / g1q, q2 = q / g2q;
    const int f11 = chi_ratio(br.c2, q1, a1), f12 = chi_ratio(br.c1, q1, a2);
    const int f21 = chi_ratio(br.c2, q2, a1), f22 = chi_ratio(br.c1, q2, a2);
    cplx acc = 0.0;
    for (i64 a = 1; a <= q; ++a) {
        if (gcd(a, q) != 1) continue;
        const cplx left = br.g1 * static_cast<double>(br.c1(a) * br.c1(m1p) * f11) +
                          br.g2 * static_cast<double>(br.c2(a) * br.c2(m1p) * f12);
        const cplx right = std::conj(br.g1) * static_cast<double>(br.c1(a) * br.c1(m2p) * f21) +
                           std::conj(br.g2) * static_cast<double>(br.c2(a) * br.c2(m2p) * f22);
        acc += unit_root(sgn * a * P.l, q) * left * right;
    }
    return acc;
}

EpsDecomposition eps_decompose(const SingularSeriesParams& P, i64 q) {
    const Brackets br(P.split);
    const i64 a1 = iabs(P.split.d1), a2 = iabs(P.split.d2), D = a1 * a2;
    const i64 g1q = gcd(P.m1, q), g2q = gcd(P.m2, q);
    const i64 m1p = P.m1 / g1q, m2p = P.m2 / g2q;
    const i64 q1 = q / g1q, q2 = q / g2q;
    const cplx A1 = br.g1 * static_cast<double>(br.c1(m1p) * chi_ratio(br.c2, q1, a1));
    const cplx B1 = br.g2 * static_cast<double>(br.c2(m1p) * chi_ratio(br.c1, q1, a2));
    const cplx A2 = std::conj(br.g1) * static_cast<double>(br.c1(m2p) * chi_ratio(br.c2, q2, a1));
    const cplx B2 = std::conj(br.g2) * static_cast<double>(br.c2(m2p) * chi_ratio(br.c1, q2, a2));
    EpsDecomposition e;
    // a nonzero A forces |d1| | q, so chi_d1(a)^2 = 1 on units; likewise for B
    e.ramanujan = A1 * A2 + B1 * B2;
    e.twisted = A1 * B2 + B1 * A2;
    // e(+al/q) against the odd chi_D reverses the twisted sum
    if (P.phase == PhaseSign::Positive) e.twisted = -e.twisted;
    if (e.ramanujan != 0.0 || e.twisted != 0.0) {
        const auto cls = [&](i64 qq) { const i64 g = gcd(qq, D); return g == a1 ? 1 : (g == a2 ? 2 : 0); };
        e.k = cls(q1);
        e.j = cls(q2);
    }
    return e;
}

i64 ramanujan_sum(i64 q, i64 l) {
    i64 s = 0;
    for (i64 d : divisors(gcd(q, l))) s += d * mobius(q / d);
    return s;
}

cplx twisted_ramanujan_sum(const RealCharacter& chi, i64 q, i64 l) {
    const cplx step = unit_root(l, q);
    cplx rot = 1.0, acc = 0.0;
    for (i64 a = 1; a <= q; ++a) {
        rot *= step;
        if (a % 256 == 0) rot = unit_root(a * l, q);
        const int c = chi(a);
        if (c != 0 && gcd(a, q) == 1) acc += static_cast<double>(c) * rot;
    }
    return acc;
}

cplx eps_q_fast(const SingularSeriesParams& P, i64 q) {
    const EpsDecomposition e = eps_decompose(P, q);
    cplx v = 0.0;
    if (e.ramanujan != 0.0) v += e.ramanujan * static_cast<double>(ramanujan_sum(q, P.l));
    if (e.twisted != 0.0) v += e.twisted * twisted_ramanujan_sum(RealCharacter(P.split.d1 * P.split.d2), q, P.l);
    return v;
}

double sigma_weight(const SingularSeriesParams& P, i64 q) {
    const i64 D = P.D();
    const i64 q1 = q / gcd(q, P.m1), q2 = q / gcd(q, P.m2);
    const double r1 = static_cast<double>(D / gcd(q1, D)), r2 = static_cast<double>(D / gcd(q2, D));
    const double qd = static_cast<double>(q);
    return static_cast<double>(gcd(q, P.m1 * P.m2)) / (qd * qd * std::sqrt(r1 * r2));
}

namespace {

double sigma_tail(const SingularSeriesParams& P, double C, i64 Q) {
    const double Qd = static_cast<double>(Q);
    return C * static_cast<double>(P.m1 * P.m2) * std::sqrt(static_cast<double>(P.l)) * 2.0 / std::sqrt(Qd) *
           (std::log(Qd) + 2.0 * kEulerGamma + 2.0);
}

double fit_eps_constant(const SingularSeriesParams& P, i64 q_max) {
    double C = 0.0;
    for (i64 q = 1; q <= q_max; ++q) {
        const double e = std::abs(eps_q_fast(P, q));
        if (e == 0.0) continue;
        const double ref = static_cast<double>(tau(q)) * std::sqrt(static_cast<double>(q * gcd(P.l, q)));
        C = std::max(C, e / ref);
    }
    return C;
}

}  // namespace

SigmaValue sigma_truncated(const SingularSeriesParams& P, i64 Q) {
    P.validate();
    const RealCharacter chiD(P.split.d1 * P.split.d2);
    std::complex<long double> acc = 0.0L;
    for (i64 q = 1; q <= Q; ++q) {
        const EpsDecomposition e = eps_decompose(P, q);
        if (e.ramanujan == 0.0 && e.twisted == 0.0) continue;
        cplx v = 0.0;
        if (e.ramanujan != 0.0) v += e.ramanujan * static_cast<double>(ramanujan_sum(q, P.l));
        if (e.twisted != 0.0) v += e.twisted * twisted_ramanujan_sum(chiD, q, P.l);
        const cplx t = v * sigma_weight(P, q);
        acc += std::complex<long double>(t.real(), t.imag());
    }
    SigmaValue s;
    s.value = static_cast<double>(acc.real());
    s.imag = static_cast<double>(acc.imag());
    s.Q = Q;
    s.C = fit_eps_constant(P, std::min<i64>(Q, 1000));
    s.bound = sigma_tail(P, s.C, Q);
    return s;
}

SigmaValue sigma(const SingularSeriesParams& P, double budget, i64 Q_cap) {
    P.validate();
    const double C = fit_eps_constant(P, 1000);
    i64 Q = 1000;
    while (sigma_tail(P, C, Q) >= budget) {
        if (Q > Q_cap / 2) throw BudgetError("sigma: budget unreachable within q <= " + std::to_string(Q_cap));
        Q *= 2;
    }
    return sigma_truncated(P, Q);
}

std::vector<i64> exact_r_table(const DiscriminantSplit& sp, i64 n_max) {
    const RealCharacter c1(sp.d1), c2(sp.d2);
    std::vector<i64> r(static_cast<std::size_t>(n_max + 1), 0);
    for (i64 d = 1; d <= n_max; ++d) {
        const int a = c1(d);
        if (a == 0) continue;
        for (i64 k = 1, n = d; n <= n_max; ++k, n += d) r[static_cast<std::size_t>(n)] += a * c2(k);
    }
    return r;
}

i64 brute_S(const SingularSeriesParams& P, i64 N, LoopOrder order) {
    if (N < 2) throw std::invalid_argument("brute_S: N >= 2");
    const i64 n2_max = (P.m1 * (N - 1) + P.l) / P.m2;
    const auto r = exact_r_table(P.split, std::max(n2_max, N));
    i64 S = 0;
    if (order == LoopOrder::N1First) {
        for (i64 n1 = 1; n1 <= N - 1; ++n1) {
            const i64 num = P.m1 * n1 + P.l;
            if (num % P.m2 != 0) continue;
            S += r[static_cast<std::size_t>(num / P.m2)] * r[static_cast<std::size_t>(n1)];
        }
    } else {
        for (i64 n2 = 1; n2 <= n2_max; ++n2) {
            const i64 num = P.m2 * n2 - P.l;
            if (num <= 0 || num % P.m1 != 0) continue;
            const i64 n1 = num / P.m1;
            if (n1 > N - 1) continue;
            S += r[static_cast<std::size_t>(n2)] * r[static_cast<std::size_t>(n1)];
        }
    }
    return S;
}

double correlation_main_term(double sigma, int h, i64 N, i64 m2) {
    return sigma * kPi * kPi * static_cast<double>(h) * h * static_cast<double>(N) / static_cast<double>(m2);
}

CorrelationReport correlation_check(const SingularSeriesParams& P, const std::vector<i64>& Ns, i64 sigma_Q) {
    CorrelationReport rep;
    rep.sigma = sigma_truncated(P, sigma_Q);
    rep.h = ClassGroup(Discriminant(-P.D())).h();
    double prev = INFINITY;
    for (i64 N : Ns) {
        CorrelationRow row;
        row.N = N;
        row.S = brute_S(P, N);
        row.main = correlation_main_term(rep.sigma.value, rep.h, N, P.m2);
        row.ratio = static_cast<double>(row.S) / row.main;
        row.residual = std::abs(static_cast<double>(row.S) - row.main) / std::pow(static_cast<double>(N), 12.0 / 13.0);
        if (row.residual > prev) rep.residual_nonincreasing = false;
        prev = row.residual;
        rep.rows.push_back(row);
    }
    return rep;
}

ZValue Z_direct(const SingularSeriesParams& P0, cplx s, i64 L_max, i64 Q) {
    if (s.real() < 1.4) throw std::domain_error("Z_direct: Re s >= 1.4 required");
    SingularSeriesParams P = P0;
    P.l = 1;
    if (gcd(P.m1, P.m2) != 1) throw std::invalid_argument("Z_direct: (m1, m2) = 1 required");
    const RealCharacter chiD(P.split.d1 * P.split.d2);
    const std::size_t L = static_cast<std::size_t>(L_max);
    std::vector<std::complex<long double>> sig(L + 1, 0.0L);
    std::vector<cplx> table;
    double C_eps = 0.0;
    for (i64 q = 1; q <= Q; ++q) {
        const EpsDecomposition e = eps_decompose(P, q);
        if (e.ramanujan == 0.0 && e.twisted == 0.0) continue;
        const double w = sigma_weight(P, q);
        if (e.ramanujan != 0.0) {
            const cplx coef = e.ramanujan * w;
            // c_q(l) = sum_{d | (q, l)} d mu(q/d)
            for (i64 d : divisors(q)) {
                const int mu = mobius(q / d);
                if (mu == 0) continue;
                const std::complex<long double> add(coef.real() * d * mu, coef.imag() * d * mu);
                for (std::size_t l = static_cast<std::size_t>(d); l <= L; l += static_cast<std::size_t>(d))
                    sig[l] += add;
            }
            if (q <= 1000) C_eps = std::max(C_eps, std::abs(e.ramanujan));
        }
        if (e.twisted != 0.0) {
            const cplx coef = e.twisted * w;
            const i64 span = std::min<i64>(q, L_max + 1);
            table.assign(static_cast<std::size_t>(span), 0.0);
            for (i64 b = 0; b < span; ++b) table[static_cast<std::size_t>(b)] = twisted_ramanujan_sum(chiD, q, b);
            for (std::size_t l = 1; l <= L; ++l) {
                const cplx v = coef * table[l % static_cast<std::size_t>(q)];
                sig[l] += std::complex<long double>(v.real(), v.imag());
            }
            if (q <= 1000) C_eps = std::max(C_eps, std::abs(e.twisted) * std::sqrt(static_cast<double>(P.D())));
        }
    }
    std::complex<long double> acc = 0.0L;
    double C_sigma = 0.0;
    for (std::size_t l = 1; l <= L; ++l) {
        const cplx term = cplx(static_cast<double>(sig[l].real()), static_cast<double>(sig[l].imag())) *
                          std::exp(-s * std::log(static_cast<double>(l)));
        acc += std::complex<long double>(term.real(), term.imag());
        C_sigma = std::max(C_sigma, std::abs(cplx(static_cast<double>(sig[l].real()), static_cast<double>(sig[l].imag()))) /
                                        static_cast<double>(tau(static_cast<i64>(l))));
    }
    ZValue z;
    z.value = {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
    z.L = L_max;
    z.Q = Q;
    // l-tail from |sigma(l)| <= C tau(l); q-tail per l from the eps_q estimate, summed against l^{-Re s}
    const double sr = s.real();
    const double l_tail = C_sigma * tau_tail(static_cast<double>(L_max), sr);
    const double Qd = static_cast<double>(Q);
    const double q_tail = C_eps * static_cast<double>(P.m1 * P.m2) * 2.0 / std::sqrt(Qd) *
                          (std::log(Qd) + 2.0 * kEulerGamma + 2.0) * std::riemann_zeta(sr - 0.5);
    z.bound = l_tail + q_tail;
    return z;
}

ZTerms Z_closed_terms(const SingularSeriesParams& P, cplx s, ZClosedOptions opt) {
    if (gcd(P.m1, P.m2) != 1) throw std::invalid_argument("Z_closed: (m1, m2) = 1 required");
    if (std::abs(s) < 1e-12) throw PoleError("Z_closed: pole at s = 0");
    const DiscriminantSplit& sp = P.split;
    const i64 D = P.D();
    const i64 mod1 = iabs(sp.d1), mod2 = iabs(sp.d2);
    const KContext ctx(sp);
    const RealCharacter one(1), chiD(sp.d1 * sp.d2);
    const auto pw = [](i64 p, cplx e) { return std::exp(e * std::log(static_cast<double>(p))); };
    ZTerms Z;

    double euler_D = 1.0;
    for (const auto& pp : factorize(D)) euler_D /= 1.0 - 1.0 / static_cast<double>(pp.p * pp.p);
    const double L2_principal = kPi * kPi / 6.0 / euler_D;
    if (std::abs(s - 1.0) < 1e-12) {
        // the p | d_j product kills the zeta pole unless d_j = 1
        if (mod1 == 1 || mod2 == 1) throw PoleError("Z_closed: pole at s = 1");
        throw std::domain_error("Z_closed: s = 1 removable, not evaluated");
    }
    const cplx common_jj = l_chi(one, s) * l_chi(one, s + 1.0) / (static_cast<double>(D) * L2_principal);
    for (int j = 1; j <= 2; ++j) {
        const i64 dj = j == 1 ? mod1 : mod2;
        const i64 own = opt.swapped_euler_product ? mod1 : dj;
        const i64 rest = opt.swapped_euler_product ? mod2 : D / dj;
        cplx v = common_jj / pw(dj, s);
        for (const auto& pp : factorize(own)) v *= 1.0 - pw(pp.p, s - 1.0);
        for (const auto& pp : factorize(rest)) v *= 1.0 - pw(pp.p, -s - 1.0);
        v *= ctx.K_ll(j, P.m1 * P.m2, s);
        (j == 1 ? Z.z11 : Z.z22) = v;
    }

    const auto cross = [&](int k, int j) -> cplx {
        const i64 mk = k == 1 ? P.m1 : P.m2, mj = j == 1 ? P.m1 : P.m2;
        const i64 dj = j == 1 ? sp.d1 : sp.d2;
        // K_{1,2}(m_k, m_j, .) needs |d2| | m_k and |d1| | m_j
        if (mk % mod2 != 0 || mj % mod1 != 0) return 0.0;
        const cplx G = gauss_sum(dj).numeric;
        const double den = opt.signed_gauss_denominator ? static_cast<double>(dj) : static_cast<double>(iabs(dj));
        const double Dd = static_cast<double>(D);
        // printed: D^{-1/2} / L(2, chi_D); the l-sum of sigma carries D^{-1} / L(2, chi_D^2) as the diagonal terms do
        const cplx norm = opt.printed_normalization ? 1.0 / (std::sqrt(Dd) * l_chi(chiD, 2.0)) : 1.0 / (Dd * L2_principal);
        const double phase = P.phase == PhaseSign::Positive ? -1.0 : 1.0;
        return phase * std::conj(G * G) / den * norm * l_chi(chiD, s) * l_chi(chiD, s + 1.0) * ctx.K_12(mk, mj, s);
    };
    Z.z12 = cross(1, 2);
    Z.z21 = cross(2, 1);
    return Z;
}

cplx Z_closed(const SingularSeriesParams& P, cplx s, ZClosedOptions opt) { return Z_closed_terms(P, s, opt).total(); }

double PhiKernel::Delta() const { return std::cos(delta); }

void PhiKernel::validate() const {
    if (!(delta > 0.0 && delta <= 0.5)) throw std::domain_error("PhiKernel: delta in (0, 1/2]");
}

double phi(const PhiKernel& k, double u) {
    if (u < 0.0) throw std::domain_error("phi: u >= 0");
    if (u == 0.0) return 0.0;
    const double D4 = std::pow(k.Delta(), 4);
    return (1.0 + D4) / (D4 + std::pow(u, -4.0));
}

cplx Phi_quad(const PhiKernel& k, cplx s, double y, double rel_tol) {
    k.validate();
    if (!(s.real() > 1.0 && s.real() < 5.0)) throw std::domain_error("Phi_quad: 1 < Re s < 5");
    if (!(y > 0.0)) throw std::domain_error("Phi_quad: y > 0");
    // u = x / y turns the frequency into 2 pi
    static thread_local boost::math::quadrature::ooura_fourier_cos<double> ocos(1e-11, 10);
    const auto part = [&](bool imag) {
        const auto f = [&](double x) {
            if (!(x > 0.0) || !std::isfinite(x)) return 0.0;
            const double ph = phi(k, x / y);
            if (ph == 0.0) return 0.0;
            const double lx = std::log(x);
            const double amp = ph * std::exp(-s.real() * lx);
            if (s.imag() == 0.0) return imag ? 0.0 : amp;
            return imag ? -amp * std::sin(s.imag() * lx) : amp * std::cos(s.imag() * lx);
        };
        return ocos.integrate(f, 2.0 * kPi);
    };
    const auto re = part(false);
    cplx v = re.first;
    if (s.imag() != 0.0) v += cplx(0.0, part(true).first);
    (void)rel_tol;
    return v * std::exp((s - 1.0) * std::log(y));
}

cplx M_closed(const PhiKernel& k, cplx w) {
    k.validate();
    if (!(w.real() > 0.0 && w.real() < 2.0)) throw std::domain_error("M_closed: 0 < Re w < 2");
    const double Dl = k.Delta();
    const double D4 = std::pow(Dl, 4);
    return 0.25 * (1.0 + 1.0 / D4) * std::exp((w + k.theta) * std::log(Dl)) * std::exp(-w * std::log(2.0 * kPi)) *
           std::exp(log_gamma(w)) * std::cos(kPi * w / 2.0) * kPi / std::sin(kPi * (w + k.theta) / 4.0);
}

cplx M_numeric(const PhiKernel& k, cplx w, double rel_tol) {
    k.validate();
    if (!(w.real() > 0.0 && w.real() < 2.0)) throw std::domain_error("M_numeric: 0 < Re w < 2");
    const cplx s = 1.0 + k.theta;
    // v = e^x; Phi(1 + theta, v) v^{Re w} is below 1e-16 of its peak outside [-40, 16]
    std::map<double, double> cache;
    const auto Phi = [&](double x) {
        auto it = cache.find(x);
        if (it == cache.end()) it = cache.emplace(x, Phi_quad(k, s, std::exp(x)).real()).first;
        return it->second;
    };
    const auto part = [&](bool imag) {
        const auto f = [&](double x) {
            const double amp = Phi(x) * std::exp(w.real() * x);
            return imag ? amp * std::sin(w.imag() * x) : amp * std::cos(w.imag() * x);
        };
        return integrate(f, -40.0, 16.0, rel_tol).value;
    };
    return {part(false), w.imag() != 0.0 ? part(true) : 0.0};
}

}  // namespace critline
