#include <doctest.h>

#include "critline/kfun.hpp"

#include <cmath>
#include <random>

using namespace critline;

namespace {

std::vector<i64> r_table(const DiscriminantSplit& sp, i64 n_max) {
    const RealCharacter c1(sp.d1), c2(sp.d2);
    std::vector<i64> r(static_cast<std::size_t>(n_max + 1), 0);
    for (i64 a = 1; a <= n_max; ++a)
        for (i64 b = 1; a * b <= n_max; ++b) r[static_cast<std::size_t>(a * b)] += c1(a) * c2(b);
    return r;
}

}  // namespace

TEST_CASE("K as a ratio of Dirichlet series") {
    // K(m, s) = sum r(mn) r(n) n^{-s} / sum r(n)^2 n^{-s}
    const DiscriminantSplit sp{-3, 5};
    const KContext ctx(sp);
    constexpr i64 N = 20000;
    const auto r = r_table(sp, 60 * N);
    const cplx s(3.5, 1.0);
    cplx den = 0.0;
    for (i64 n = 1; n <= N; ++n) den += double(r[n] * r[n]) * std::exp(-s * std::log(double(n)));
    for (i64 m : {1, 2, 3, 4, 5, 6, 12, 15, 30, 49, 60}) {
        cplx num = 0.0;
        for (i64 n = 1; n <= N; ++n) num += double(r[m * n] * r[n]) * std::exp(-s * std::log(double(n)));
        CHECK(std::abs(ctx.K(m, s) - num / den) < 1e-9);
    }
    CHECK(ctx.K(1, cplx(0.5, 3.0)) == cplx(1.0));
    CHECK_THROWS(ctx.K(2, cplx(0.0, 1.0)));
}

TEST_CASE("squared coefficients") {
    for (const auto& sp : splits(-20)) {
        const KContext ctx(sp);
        const auto sq = squared_coefficient_series(ctx, 3000);
        const auto r = r_table(sp, 3000);
        for (i64 n = 1; n <= 3000; ++n) REQUIRE(sq[n] == r[n] * r[n]);
        for (i64 n = 1; n <= 3000; ++n) CHECK(ctx.r(n) == r[n]);
    }
}

TEST_CASE("K_ll and K_12") {
    const DiscriminantSplit sp{-3, 5};
    const KContext ctx(sp);
    for (int l = 1; l <= 2; ++l) {
        CHECK(std::abs(ctx.K_ll(l, 1, cplx(0.3, 2.0)) - 1.0) < 1e-15);
        for (i64 m = 2; m <= 500; ++m)
            for (cplx z : {cplx(0.2, 1.0), cplx(0.5, -3.0), cplx(1.0, 0.5)})
                CHECK(std::abs(ctx.K_ll(l, m, z) - ctx.K_ll_product(l, m, z)) < 1e-12);
        // ramified primes
        for (i64 q : {3, 9, 27, 5, 25})
            for (double t : {0.0, 0.7, 4.0}) CHECK(std::abs(ctx.K_ll(l, q, cplx(0.1, t))) <= 1.0 + 1e-12);
    }
    // unramified prime: (chi_l(p) + chi_{D/d_l}(p) p^{-z}) (1 + chi_D(p)/p)^{-1}
    for (i64 p : {2, 7, 11, 13, 17}) {
        const cplx z(0.3, 1.1);
        const double cD = ctx.chi_D(p);
        const cplx two_factor = (double(ctx.chi(1, p)) + double(ctx.chi(2, p)) * std::pow(double(p), -z)) / (1.0 + cD / p);
        CHECK(std::abs(ctx.K_ll(1, p, z) - two_factor) < 1e-14);
    }
    // q-sum reduces to q = 1 at m1 = |d2|, m2 = |d1|
    CHECK(std::abs(ctx.K_12(5, 3, 1.0) - ctx.K_12_product(5, 3, 1.0)) < 1e-14);
    CHECK_THROWS_AS(ctx.K_12(3, 5, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(ctx.K_12(10, 6, 1.0), std::invalid_argument);
    for (i64 a : {1, 2, 4, 7, 11})
        for (i64 b : {1, 2, 3, 7, 13}) {
            const i64 m1 = 5 * a, m2 = 3 * b;
            if (gcd(m1, m2) != 1) continue;
            const cplx z(0.5, 2.0);
            CHECK(std::abs(ctx.K_12(m1, m2, z) - ctx.K_12_product(m1, m2, z)) < 1e-12);
            CHECK(std::abs(ctx.K_12(m1, m2, z)) <= std::pow(double(tau(m1 * m2)), 2));
        }
}

TEST_CASE("reflection between K_11 and K_22") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<i64> pick(1, 10000);
    for (const auto& sp : splits(-24)) {
        const KContext ctx(sp);
        for (int i = 0; i < 200; ++i) {
            const i64 m = pick(rng);
            const cplx s(0.1 * (i % 7) - 0.3, 0.01 * i - 1.0);
            const cplx lhs = ctx.K_ll(1, m, -s) * std::exp(-s * std::log(double(m)));
            CHECK(std::abs(lhs - ctx.K_ll(2, m, s)) < 1e-12 * std::abs(lhs));
        }
    }
}

TEST_CASE("G_N") {
    CHECK(G_N(1) == 1.0);
    CHECK(G_N(2) == doctest::Approx(std::pow(1.0 + std::pow(2.0, -0.75), 2)));
    CHECK(G_N(12) == doctest::Approx(G_N(2) * G_N(3)));
    CHECK(G_N(8) == doctest::Approx(G_N(2)));
}

TEST_CASE("Selberg sums") {
    const DiscriminantSplit sp{1, -15};
    const KContext ctx(sp);
    const LSeries L = LSeries::from_split(sp, 500);
    const MollifierTable M = alpha_table(L, 6.0, sp);
    const cplx z(0.15, 0.6);
    CHECK(std::abs(selberg_S(ctx, M, z, SumRoute::Naive) - selberg_S(ctx, M, z, SumRoute::Factored)) < 1e-12);
    for (int l = 1; l <= 2; ++l)
        CHECK(std::abs(selberg_Sll(ctx, l, M, z, SumRoute::Naive) - selberg_Sll(ctx, l, M, z, SumRoute::Factored)) < 1e-12);
    const cplx w(0.0, 0.3);
    CHECK(std::abs(s_tilde(ctx, 2, M, -w) - s_tilde(ctx, 1, M, w)) < 1e-12 * std::abs(s_tilde(ctx, 1, M, w)));
}
