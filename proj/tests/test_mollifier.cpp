#include <doctest.h>

#include "critline/mollifier.hpp"

#include <cmath>

using namespace critline;

namespace {

i64 r_split(const DiscriminantSplit& sp, i64 n) {
    const RealCharacter c1(sp.d1), c2(sp.d2);
    i64 s = 0;
    for (i64 d : divisors(n)) s += c1(d) * c2(n / d);
    return s;
}

}  // namespace

TEST_CASE("inverse square root series") {
    const std::vector<mpq_class> f{1, mpq_class(-3, 2), mpq_class(1, 7), 5, mpq_class(-2, 9)};
    const auto g = inverse_sqrt_series(f, 6);
    // g^2 f = 1
    std::vector<mpq_class> g2(7, 0), prod(7, 0);
    for (int i = 0; i <= 6; ++i)
        for (int j = 0; i + j <= 6; ++j) g2[i + j] += g[i] * g[j];
    for (int i = 0; i <= 6; ++i)
        for (int j = 0; i + j <= 6 && j < int(f.size()); ++j) prod[i + j] += g2[i] * f[j];
    CHECK(prod[0] == 1);
    for (int k = 1; k <= 6; ++k) CHECK(prod[k] == 0);
    // (1 - x)^{-1/2} = sum binom(2k, k) 4^{-k} x^k
    const auto h = inverse_sqrt_series(std::vector<mpq_class>{1, -1}, 5);
    CHECK(h[3] == mpq_class(5, 16));
    CHECK(h[5] == mpq_class(63, 256));
}

TEST_CASE("alpha convolves to the inverse of L") {
    // sum_{abc = n} alpha(a) alpha(b) r(c) = [n = 1], exactly
    for (i64 disc : {-15, -20, -23, -24}) {
        for (const auto& sp : splits(disc)) {
            for (i64 n = 1; n <= 240; ++n) {
                mpq_class s = 0;
                for (i64 a : divisors(n))
                    for (i64 b : divisors(n / a)) s += alpha_of(sp, a) * alpha_of(sp, b) * r_split(sp, n / a / b);
                REQUIRE(s == (n == 1 ? 1 : 0));
            }
            for (i64 p : {2, 3, 5, 7, 11, 13})
                for (int k = 1; k <= 5; ++k) CHECK(alpha_closed(sp, p, k) == alpha_expanded(sp, p, k));
        }
    }
}

TEST_CASE("smoothing weight") {
    CHECK(smoothing_weight(1, 100.0) == 1.0);
    CHECK(smoothing_weight(10, 100.0) == 1.0);
    CHECK(smoothing_weight(100, 100.0) == 0.0);
    CHECK(smoothing_weight(200, 100.0) == 0.0);
    CHECK(smoothing_weight(20, 100.0) == doctest::Approx(2.0 * std::log(5.0) / std::log(100.0)));
    CHECK(smoothing_weight_exact(20, 100.0).evaluate(std::log(100.0)) == doctest::Approx(smoothing_weight(20, 100.0)));
    CHECK(smoothing_weight_exact(5, 100.0) == LogPoly(mpq_class(1)));
}

TEST_CASE("LogPoly arithmetic") {
    const LogPoly a = LogPoly::lambda(2), b = LogPoly::lambda(3);
    const LogPoly p = (a + b) * (a + b);
    CHECK(p.degree() == 2);
    CHECK(p.evaluate(std::log(6.0)) == doctest::Approx(1.0));
    CHECK((a * mpq_class(0)).is_zero());
    CHECK(LogPoly(mpq_class(3, 4)).constant() == mpq_class(3, 4));
    CHECK((a + a * mpq_class(-1)).is_zero());
}

TEST_CASE("mollified coefficients") {
    const DiscriminantSplit sp{-3, 5};
    const LSeries L = LSeries::from_split(sp, 500);
    const MollifierTable M = alpha_table(L, 100.0, sp);
    CHECK(M.exact);
    const auto c = mollified_coeffs(L, M, 40, ConvolutionRoute::Staged);
    const auto t = mollified_coeffs(L, M, 40, ConvolutionRoute::TripleLoop);
    CHECK(c[1] == LogPoly(mpq_class(1)));
    for (i64 n = 2; n < 10; ++n) CHECK(c[n].is_zero());
    for (i64 n = 1; n <= 40; ++n) CHECK(c[n] == t[n]);
    // eta is the truncated Dirichlet series of beta
    const cplx s(0.5, 3.0);
    cplx direct = 0.0;
    for (i64 nu = 1; nu <= M.nu_max; ++nu) direct += M.beta[nu] * std::exp(-s * std::log(double(nu)));
    CHECK(std::abs(eta(M, s) - direct) < 1e-12);
}
