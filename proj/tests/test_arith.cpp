#include <doctest.h>

#include "critline/arith.hpp"

#include <numeric>

using namespace critline;

namespace {

i64 brute_tau(i64 n) {
    i64 c = 0;
    for (i64 d = 1; d <= n; ++d) c += n % d == 0;
    return c;
}

bool brute_prime(i64 n) {
    if (n < 2) return false;
    for (i64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

TEST_CASE("factorization multiplies back") {
    for (i64 n = 1; n <= 5000; ++n) {
        i64 prod = 1;
        for (const auto& pp : factorize(n)) {
            CHECK(brute_prime(pp.p));
            prod *= ipow(pp.p, pp.e);
        }
        REQUIRE(prod == n);
    }
    CHECK(factorize(600851475143LL).back().p == 6857);
}

TEST_CASE("sieve agrees with trial division") {
    const SpfSieve sieve(20000);
    for (i64 n = 2; n <= 20000; n += 7) {
        const auto a = sieve.factorize(n), b = factorize(n);
        REQUIRE(a.size() == b.size());
        for (std::size_t i = 0; i < a.size(); ++i) CHECK((a[i].p == b[i].p && a[i].e == b[i].e));
    }
}

TEST_CASE("divisor functions") {
    for (i64 n = 1; n <= 3000; ++n) {
        REQUIRE(tau(n) == brute_tau(n));
        CHECK(tau_k(n, 2.0) == doctest::Approx(double(brute_tau(n))));
        i64 musum = 0;
        for (i64 d : divisors(n)) musum += mobius(d);
        CHECK(musum == (n == 1 ? 1 : 0));
    }
    // ordered triples with product n
    for (i64 n : {12, 36, 360, 1024}) {
        i64 c = 0;
        for (i64 a = 1; a <= n; ++a)
            if (n % a == 0)
                for (i64 b = 1; b <= n / a; ++b) c += (n / a) % b == 0;
        CHECK(tau_k(n, 3.0) == doctest::Approx(double(c)));
    }
    CHECK(tau_k(2, 2000.0) == doctest::Approx(2000.0));
    CHECK(tau_k(4, 2000.0) == doctest::Approx(2000.0 * 2001.0 / 2.0));
}

TEST_CASE("primes and small helpers") {
    const auto ps = primes_up_to(10000);
    CHECK(ps.size() == 1229);
    for (i64 n = 1; n <= 2000; ++n) CHECK(is_prime(n) == brute_prime(n));
    for (i64 a = 0; a <= 60; ++a)
        for (i64 b = 1; b <= 60; ++b) CHECK(gcd(a, b) == std::gcd(a, b));
    CHECK(gcd_part(360, 6) == 72);
    CHECK(gcd_part(35, 6) == 1);
    CHECK(radical(360) == 30);
    CHECK(mod(-7, 5) == 3);
    CHECK(is_squarefree(30));
    CHECK_FALSE(is_squarefree(12));
}
