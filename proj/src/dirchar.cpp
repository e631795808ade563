#include "critline/dirchar.hpp"

#include "critline/quadfield.hpp"

#include <boost/math/special_functions/bernoulli.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>

namespace critline {

namespace {

int jacobi(i64 a, i64 n) {
    // n odd positive
    a = mod(a, n);
    int result = 1;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            const i64 r = n % 8;
            if (r == 3 || r == 5) result = -result;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

int kronecker_two(i64 d) {
    if (d % 2 == 0) return 0;
    const i64 r = mod(d, 8);
    return (r == 1 || r == 7) ? 1 : -1;
}

}  // namespace

int kronecker(i64 d, i64 n) {
    if (n == 0) return (d == 1 || d == -1) ? 1 : 0;
    int result = 1;
    if (n < 0) {
        n = -n;
        if (d < 0) result = -result;
    }
    int v = 0;
    while (n % 2 == 0) {
        n /= 2;
        ++v;
    }
    if (v > 0) {
        const int k2 = kronecker_two(d);
        if (k2 == 0) return 0;
        if (v % 2 == 1) result *= k2;
    }
    if (n == 1) return result;
    return result * jacobi(d, n);
}

bool is_fundamental_or_one(i64 d) { return d == 1 || is_fundamental(d); }

RealCharacter::RealCharacter(i64 d) : d_(d), q_(d < 0 ? -d : d) {
    if (!is_fundamental_or_one(d))
        throw std::invalid_argument("RealCharacter: not a fundamental discriminant: " + std::to_string(d));
    table_.resize(static_cast<std::size_t>(q_));
    for (i64 a = 0; a < q_; ++a) table_[static_cast<std::size_t>(a)] = kronecker(d, a == 0 ? q_ : a);
}

std::vector<DiscriminantSplit> splits(i64 disc) {
    std::vector<DiscriminantSplit> out;
    const i64 D = disc < 0 ? -disc : disc;
    for (i64 m : divisors(D)) {
        for (i64 d1 : {m, -m}) {
            const i64 d2 = disc / d1;
            if (std::gcd(m, d2 < 0 ? -d2 : d2) != 1) continue;
            if (is_fundamental_or_one(d1) && is_fundamental_or_one(d2)) out.push_back({d1, d2});
        }
    }
    std::sort(out.begin(), out.end(), [](const DiscriminantSplit& x, const DiscriminantSplit& y) {
        const i64 ax = x.d1 < 0 ? -x.d1 : x.d1, ay = y.d1 < 0 ? -y.d1 : y.d1;
        return ax != ay ? ax < ay : x.d1 < y.d1;
    });
    return out;
}

cplx ExactSurd::value() const {
    static const cplx units[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return units[unit] * std::sqrt(static_cast<double>(radicand));
}

GaussSum gauss_sum(i64 d) {
    const RealCharacter chi(d);
    const i64 q = chi.modulus();
    cplx sum = 0.0;
    for (i64 a = 1; a <= q; ++a) {
        const int c = chi(a);
        if (c == 0) continue;
        const double ang = 2.0 * kPi * static_cast<double>(a) / static_cast<double>(q);
        sum += static_cast<double>(c) * cplx(std::cos(ang), std::sin(ang));
    }
    const ExactSurd exact = d > 0 ? ExactSurd{0, d} : ExactSurd{1, -d};
    return {exact, sum};
}

namespace {

// sum_{j=1}^{m} B_{2j}/(2j)! (s)_{2j-1} w^{-s-2j+1}
cplx em_corrections(cplx s, double w, int m) {
    const cplx ws = std::pow(cplx(w, 0.0), -s);
    cplx rising = s;  // (s)_{1}
    cplx sum = 0.0;
    double fact = 2.0;  // (2j)!
    double wpow = 1.0 / w;
    for (int j = 1; j <= m; ++j) {
        sum += boost::math::bernoulli_b2n<double>(j) / fact * rising * wpow;
        rising *= (s + static_cast<double>(2 * j - 1)) * (s + static_cast<double>(2 * j));
        fact *= static_cast<double>((2 * j + 1) * (2 * j + 2));
        wpow /= w * w;
    }
    return ws * sum;
}

}  // namespace

cplx hurwitz_zeta(cplx s, double w, int corrections) {
    if (std::abs(s - 1.0) < 1e-12) throw PoleError("hurwitz_zeta: pole at s = 1");
    if (!(w > 0.0)) throw std::invalid_argument("hurwitz_zeta: w > 0");
    // shift w until the Euler-Maclaurin tail is accurate
    const double w_min = 20.0 + std::abs(s);
    cplx head = 0.0;
    for (; w < w_min; w += 1.0) head += std::exp(-s * std::log(w));
    if (head != 0.0) return head + hurwitz_zeta(s, w, corrections);
    const cplx lw = std::log(cplx(w, 0.0));
    return std::exp((1.0 - s) * lw) / (s - 1.0) + 0.5 * std::exp(-s * lw) + em_corrections(s, w, corrections);
}

cplx l_chi(const RealCharacter& chi, cplx s) {
    const i64 q = chi.modulus();
    const i64 N = std::max<i64>(50, static_cast<i64>(std::ceil(10.0 * std::abs(s.imag()))));
    cplx head = 0.0;
    for (i64 n = 1; n <= N * q; ++n) {
        const int c = chi(n);
        if (c) head += static_cast<double>(c) * std::exp(-s * std::log(static_cast<double>(n)));
    }
    if (q == 1) {
        if (std::abs(s - 1.0) < 1e-10) throw PoleError("l_chi: pole of zeta at s = 1");
        return head + hurwitz_zeta(s, static_cast<double>(N + 1));
    }
    // q^{-s} sum_a chi(a) zeta(s, N + a/q); the w^{1-s}/(s-1) pieces are combined using sum chi = 0.
    cplx tail = 0.0;
    for (i64 a = 1; a <= q; ++a) {
        const int c = chi(a);
        if (!c) continue;
        const double w = static_cast<double>(N) + static_cast<double>(a) / static_cast<double>(q);
        const double lw = std::log(w);
        const cplx polar = -lw * expm1_over_x((1.0 - s) * lw);
        tail += static_cast<double>(c) * (polar + 0.5 * std::exp(-s * lw) + em_corrections(s, w, 8));
    }
    return head + std::exp(-s * std::log(static_cast<double>(q))) * tail;
}

double hardy_Z_chi(const RealCharacter& chi, double t) {
    const i64 q = chi.modulus();
    const double a = (q > 1 && chi(q - 1) == -1) ? 1.0 : 0.0;
    const double theta = log_gamma(cplx((0.5 + a) / 2.0, t / 2.0)).imag() +
                         t / 2.0 * std::log(static_cast<double>(q) / kPi);
    return (std::exp(cplx(0.0, theta)) * l_chi(chi, cplx(0.5, t))).real();
}

}  // namespace critline
