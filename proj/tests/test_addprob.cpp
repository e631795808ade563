#include <doctest.h>

#include "critline/addprob.hpp"

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

TEST_CASE("Ramanujan sums") {
    for (i64 q = 1; q <= 60; ++q) {
        CHECK(ramanujan_sum(q, 1) == mobius(q));
        for (i64 l = 1; l <= 30; ++l) {
            double direct = 0.0;
            for (i64 a = 1; a <= q; ++a)
                if (gcd(a, q) == 1) direct += std::cos(2.0 * kPi * double(a * l) / double(q));
            CHECK(double(ramanujan_sum(q, l)) == doctest::Approx(direct).epsilon(1e-9));
        }
    }
    const RealCharacter chi(-15);
    for (i64 q : {15, 30, 45, 60, 7})
        for (i64 l : {1, 2, 7}) {
            cplx direct = 0.0;
            for (i64 a = 1; a <= q; ++a)
                if (gcd(a, q) == 1) direct += double(chi(a)) * std::polar(1.0, -2.0 * kPi * double(a * l) / double(q));
            CHECK(std::abs(twisted_ramanujan_sum(chi, q, l) - direct) < 1e-10);
        }
}

TEST_CASE("epsilon_q: literal sum and decomposition agree") {
    for (const auto& sp : splits(-15))
        for (auto [l, m1, m2] : std::vector<std::array<i64, 3>>{{1, 1, 1}, {2, 5, 3}, {1, 3, 5}, {7, 1, 2}}) {
            const SingularSeriesParams P{l, m1, m2, sp};
            for (i64 q = 1; q <= 200; ++q) CHECK(std::abs(eps_q(P, q) - eps_q_fast(P, q)) < 1e-11);
        }
    const SingularSeriesParams trivial{1, 1, 1, {1, -15}}, cross{1, 1, 1, {-3, 5}};
    CHECK(std::abs(eps_q(trivial, 1) - 1.0) < 1e-15);
    CHECK(std::abs(eps_q(cross, 1)) < 1e-15);
    SingularSeriesParams bad{1, 2, 4, {-3, 5}};
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("brute correlation sums") {
    const DiscriminantSplit sp{-3, 5};
    const auto r = exact_r_table(sp, 3000);
    for (i64 n = 1; n <= 3000; ++n) REQUIRE(r[n] == r_split(sp, n));
    for (auto [l, m1, m2] : std::vector<std::array<i64, 3>>{{1, 1, 1}, {1, 5, 3}, {2, 1, 3}}) {
        const SingularSeriesParams P{l, m1, m2, sp};
        const i64 N = 500;
        i64 naive = 0;
        for (i64 n1 = 1; n1 < N; ++n1) {
            const i64 t = m1 * n1 + l;
            if (t % m2 == 0) naive += r_split(sp, n1) * r_split(sp, t / m2);
        }
        CHECK(brute_S(P, N, LoopOrder::N1First) == naive);
        CHECK(brute_S(P, N, LoopOrder::N2First) == naive);
    }
}

TEST_CASE("singular series against brute force") {
    const SingularSeriesParams P{1, 1, 1, {-3, 5}};
    const CorrelationReport rep = correlation_check(P, {20000}, 20000);
    REQUIRE(rep.rows.size() == 1);
    CHECK(std::abs(rep.rows[0].ratio - 1.0) < 0.03);
    CHECK(std::abs(rep.sigma.imag) < 1e-10);
    CHECK_THROWS_AS(sigma(P, 1e-14, 1000), BudgetError);
    CHECK(correlation_main_term(2.0, 2, 100, 1) == doctest::Approx(2.0 * kPi * kPi * 4.0 * 100.0));
}

TEST_CASE("Dirichlet series of the singular series") {
    const SingularSeriesParams P{1, 1, 1, {-3, 5}};
    const ZValue zd = Z_direct(P, 2.0, 1000, 1000);
    CHECK(std::abs(zd.value - Z_closed(P, 2.0)) < 1e-4);
    const SingularSeriesParams T{1, 1, 1, {1, -15}};
    CHECK_THROWS_AS(Z_closed(T, 1.0), PoleError);
    CHECK_THROWS(Z_direct(P, 1.2, 100, 100));
}

TEST_CASE("smoothing kernel and its Mellin transform") {
    const PhiKernel k{0.01, 0.1};
    CHECK(phi(k, 1.0) == doctest::Approx(1.0));
    CHECK(phi(k, 0.0) == 0.0);
    CHECK(phi(k, 0.5) < phi(k, 0.9));
    CHECK_THROWS(PhiKernel{0.0, 0.1}.validate());
    const cplx w(1.5, 2.0);
    const cplx closed = M_closed(k, w), numeric = M_numeric(k, w, 1e-8);
    CHECK(std::abs(closed - numeric) < 1e-7 * std::abs(closed));
}
