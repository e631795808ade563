#include <doctest.h>

#include "critline/lseries.hpp"

#include <cmath>

using namespace critline;

namespace {

constexpr double kCatalan = 0.915965594177219015;

i64 r_split(const DiscriminantSplit& sp, i64 n) {
    const RealCharacter c1(sp.d1), c2(sp.d2);
    i64 s = 0;
    for (i64 d : divisors(n)) s += c1(d) * c2(n / d);
    return s;
}

}  // namespace

TEST_CASE("coefficients") {
    const LSeries E = LSeries::epstein(QuadForm{1, 0, 1}, 500);
    for (i64 n = 1; n <= 500; ++n) {
        i64 brute = 0;
        for (i64 x = -23; x <= 23; ++x)
            for (i64 y = -23; y <= 23; ++y) brute += x * x + y * y == n;
        CHECK(E.coeff(n) == double(brute));
    }
    for (const auto& sp : splits(-15)) {
        const LSeries L = LSeries::from_split(sp, 400);
        for (i64 n = 1; n <= 400; ++n) CHECK(L.coeff(n) == double(r_split(sp, n)));
        CHECK(L.has_pole() == (sp.d1 == 1 || sp.d2 == 1));
    }
}

TEST_CASE("values in the half plane of convergence") {
    const LSeries E = LSeries::epstein(QuadForm{1, 0, 1}, 4000);
    CHECK(std::abs(E.value(2.0) - 4.0 * kPi * kPi / 6.0 * kCatalan) < 1e-10);
    const LSeries L = LSeries::from_split({-3, 5}, 4000);
    const cplx s(2.5, 7.0);
    CHECK(std::abs(L.value(s) - L.dirichlet_sum(s, 4000)) < 1e-6);
    const RealCharacter a(-3), b(5);
    CHECK(std::abs(L.value(s) - l_chi(a, s) * l_chi(b, s)) < 1e-10);
    CHECK(std::abs(L.value(cplx(0.5, 10.0)) - l_chi(a, cplx(0.5, 10.0)) * l_chi(b, cplx(0.5, 10.0))) < 1e-9);
}

TEST_CASE("functional equation through two contour parameters") {
    for (i64 d : {-4, -23, -47}) {
        const ClassGroup g{Discriminant(d)};
        for (const auto& psi : characters(g)) {
            const LSeries L = LSeries::hecke(g, psi, 4000);
            for (cplx s : {cplx(0.3, 5.0), cplx(0.7, -12.0), cplx(0.5, 30.0)})
                CHECK(std::abs(L.lambda(s, 5.0) - L.lambda(1.0 - s, 3.0)) < 1e-9 * std::abs(L.lambda(s)));
        }
    }
}

TEST_CASE("Epstein zeta splits into Hecke L-functions") {
    const ClassGroup g{Discriminant(-23)};
    for (const auto& f : g.forms())
        for (cplx s : {cplx(0.5, 3.0), cplx(2.0, 0.0), cplx(0.75, 20.0)})
            CHECK(std::abs(epstein_via_hecke(g, f, s, 4000) - epstein_direct(f, s, 4000)) <
                  1e-8 * std::abs(epstein_direct(f, s, 4000)));
}

TEST_CASE("zero scan") {
    const LSeries E = LSeries::epstein(QuadForm{1, 0, 1}, 4000);
    const auto res = scan_zeros(E, 0.0, 50.0);
    CHECK(res.zeros.size() == 30);
    REQUIRE(!res.zeros.empty());
    CHECK(res.zeros.front().t == doctest::Approx(6.020948904697597).epsilon(1e-9));
    CHECK(res.max_reality_residual < 1e-9);
    const auto empty = scan_zeros(E, 1.0, 5.0);
    CHECK(empty.zeros.empty());
    // |Lambda(1/2 + it)| = (sqrt(D) / 2 pi)^{1/2} |Gamma(1/2 + it)| |L(1/2 + it)|
    for (double t : {3.3, 17.2, 41.0}) {
        const cplx s(0.5, t);
        const double expect = std::sqrt(2.0 / (2.0 * kPi)) * std::exp(log_gamma(s).real()) * std::abs(E.value(s));
        CHECK(std::abs(hardy_Z(E, t)) == doctest::Approx(expect).epsilon(1e-8));
    }
}

TEST_CASE("window test") {
    const LSeries E = LSeries::epstein(QuadForm{1, 0, 1}, 4000);
    // [5, 7] contains the first zero of L(chi_{-4}); [1, 5] contains none
    const WindowRecord w = window_test(E, 5.0, 2.0, nullptr, 50.0);
    CHECK(w.sign_changes >= 1);
    CHECK(w.J >= std::abs(w.I));
    const WindowRecord z = window_test(E, 1.0, 4.0, nullptr, 50.0);
    CHECK(z.sign_changes == 0);
    CHECK_FALSE(z.certified);
    CHECK_THROWS_AS(window_test(E, 1.0, 0.0, nullptr, 50.0), std::invalid_argument);
}
