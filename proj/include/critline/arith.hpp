#pragma once

#include <cstdint>
#include <vector>

namespace critline {

using i64 = std::int64_t;

struct PrimePower {
    i64 p;
    int e;
};

// Trial division; fine for the sizes used here (n <= ~1e12).
std::vector<PrimePower> factorize(i64 n);

std::vector<i64> primes_up_to(i64 n);
std::vector<i64> divisors(i64 n);  // sorted ascending

i64 tau(i64 n);
// Number of ordered k-fold factorizations, as double (tau_2000 overflows integers).
double tau_k(i64 n, double k);
int mobius(i64 n);
bool is_squarefree(i64 n);
bool is_prime(i64 n);

i64 gcd(i64 a, i64 b);
// Largest divisor of m supported on primes of d, i.e. (m, d^inf).
i64 gcd_part(i64 m, i64 d);
i64 ipow(i64 base, int e);
i64 radical(i64 n);
i64 mod(i64 a, i64 m);

// Smallest-prime-factor sieve for fast repeated factorization below a bound.
class SpfSieve {
public:
    explicit SpfSieve(i64 limit);
    i64 limit() const { return static_cast<i64>(spf_.size()) - 1; }
    i64 spf(i64 n) const { return spf_[static_cast<std::size_t>(n)]; }
    std::vector<PrimePower> factorize(i64 n) const;

private:
    std::vector<i64> spf_;
};

}  // namespace critline
