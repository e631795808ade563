#include <doctest.h>

#include "critline/dirchar.hpp"

#include <cmath>

using namespace critline;

namespace {

// Euler's criterion for odd primes.
int legendre(i64 a, i64 p) {
    a = mod(a, p);
    if (a == 0) return 0;
    i64 r = 1, b = a, e = (p - 1) / 2;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r == 1 ? 1 : -1;
}

}  // namespace

TEST_CASE("Kronecker symbol matches Legendre at odd primes") {
    for (i64 p : primes_up_to(200)) {
        if (p == 2) continue;
        for (i64 a = -50; a <= 50; ++a) CHECK(kronecker(a, p) == legendre(a, p));
    }
    // (d / 2) for d = 1 mod 8 and 5 mod 8
    CHECK(kronecker(-7, 2) == 1);
    CHECK(kronecker(-3, 2) == -1);
    CHECK(kronecker(-4, 2) == 0);
}

TEST_CASE("real characters") {
    for (i64 d : {-3, -4, -8, -15, -23, 5, 8, 12, -24}) {
        const RealCharacter chi(d);
        CHECK(chi.modulus() == std::abs(d));
        CHECK(chi(-1) == (d < 0 ? -1 : 1));
        for (i64 m = 1; m <= 60; ++m)
            for (i64 n = 1; n <= 60; ++n) CHECK(chi(m * n) == chi(m) * chi(n));
    }
    const RealCharacter one(1);
    CHECK(one(17) == 1);
}

TEST_CASE("splits of a discriminant") {
    const auto s = splits(-15);
    CHECK(s.size() == 4);
    for (const auto& sp : s) {
        CHECK(sp.d1 * sp.d2 == -15);
        CHECK(is_fundamental_or_one(sp.d1));
        CHECK(is_fundamental_or_one(sp.d2));
    }
    CHECK(splits(-23).size() == 2);
    CHECK(splits(-84).size() == 8);
}

TEST_CASE("Gauss sums against the defining sum") {
    for (i64 d : {-3, -4, 5, -7, 8, -8, 12, -15, -20, 13, -23, 24}) {
        const RealCharacter chi(d);
        const i64 q = std::abs(d);
        cplx direct = 0.0;
        for (i64 a = 1; a < q; ++a) direct += double(chi(a)) * std::polar(1.0, 2.0 * kPi * double(a) / double(q));
        const GaussSum g = gauss_sum(d);
        CHECK(std::abs(g.numeric - direct) < 1e-11);
        CHECK(std::abs(g.exact.value() - direct) < 1e-11);
        CHECK(std::norm(direct) == doctest::Approx(double(q)));
    }
}

TEST_CASE("Dirichlet L-values") {
    const RealCharacter one(1), m4(-4), m3(-3);
    CHECK(std::abs(l_chi(one, 2.0) - kPi * kPi / 6.0) < 1e-13);
    CHECK(std::abs(l_chi(one, 4.0) - std::pow(kPi, 4) / 90.0) < 1e-13);
    CHECK(std::abs(l_chi(m4, 1.0) - kPi / 4.0) < 1e-13);
    CHECK(std::abs(l_chi(m4, 2.0) - 0.915965594177219015) < 1e-13);  // Catalan
    CHECK(std::abs(l_chi(m3, 1.0) - kPi / std::sqrt(27.0)) < 1e-13);
    CHECK(std::abs(l_chi(one, 0.0) + 0.5) < 1e-13);
    CHECK_THROWS_AS(l_chi(one, 1.0), PoleError);
    // partial sums at s = 3 + i with a tail correction
    cplx s(3.0, 1.0), direct = 0.0;
    for (int n = 1; n <= 200000; ++n) direct += double(m4(n)) * std::exp(-s * std::log(double(n)));
    CHECK(std::abs(l_chi(m4, s) - direct) < 1e-12);
    CHECK(std::abs(hurwitz_zeta(2.0, 0.5) - kPi * kPi / 2.0) < 1e-12);
}

TEST_CASE("Hardy Z is real and vanishes at known zeros") {
    const RealCharacter one(1), m4(-4);
    CHECK(std::abs(hardy_Z_chi(one, 14.134725141734693)) < 1e-8);
    CHECK(std::abs(hardy_Z_chi(one, 21.022039638771555)) < 1e-8);
    CHECK(std::abs(hardy_Z_chi(m4, 6.020948904697597)) < 1e-8);
    CHECK(hardy_Z_chi(one, 10.0) * hardy_Z_chi(one, 16.0) < 0.0);
    // |Z(t)| = |L(1/2 + it)|
    for (double t : {3.0, 7.5, 33.3})
        CHECK(std::abs(hardy_Z_chi(m4, t)) == doctest::Approx(std::abs(l_chi(m4, cplx(0.5, t)))).epsilon(1e-10));
}
