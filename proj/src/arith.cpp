#include "critline/arith.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace critline {

std::vector<PrimePower> factorize(i64 n) {
    if (n < 1) throw std::invalid_argument("factorize: n must be positive");
    std::vector<PrimePower> out;
    for (i64 p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.push_back({p, e});
    }
    if (n > 1) out.push_back({n, 1});
    return out;
}

std::vector<i64> primes_up_to(i64 n) {
    std::vector<i64> out;
    if (n < 2) return out;
    std::vector<bool> comp(static_cast<std::size_t>(n) + 1, false);
    for (i64 i = 2; i <= n; ++i) {
        if (comp[static_cast<std::size_t>(i)]) continue;
        out.push_back(i);
        for (i64 j = i * i; j <= n; j += i) comp[static_cast<std::size_t>(j)] = true;
    }
    return out;
}

std::vector<i64> divisors(i64 n) {
    std::vector<i64> out{1};
    for (auto [p, e] : factorize(n)) {
        const std::size_t base = out.size();
        i64 pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

i64 tau(i64 n) {
    i64 t = 1;
    for (auto [p, e] : factorize(n)) t *= e + 1;
    return t;
}

double tau_k(i64 n, double k) {
    // prod over p^e || n of C(e + k - 1, e)
    double t = 1.0;
    for (auto [p, e] : factorize(n)) {
        double c = 1.0;
        for (int i = 1; i <= e; ++i) c *= (k - 1.0 + i) / i;
        t *= c;
    }
    return t;
}

int mobius(i64 n) {
    int m = 1;
    for (auto [p, e] : factorize(n)) {
        if (e > 1) return 0;
        m = -m;
    }
    return m;
}

bool is_squarefree(i64 n) {
    if (n < 0) n = -n;
    if (n == 0) return false;
    for (auto [p, e] : factorize(n))
        if (e > 1) return false;
    return true;
}

bool is_prime(i64 n) {
    if (n < 2) return false;
    for (i64 p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

i64 gcd(i64 a, i64 b) { return std::gcd(a, b); }

i64 gcd_part(i64 m, i64 d) {
    if (m == 0) return 0;
    if (m < 0) m = -m;
    if (d < 0) d = -d;
    i64 out = 1;
    for (i64 g = std::gcd(m, d); g > 1; g = std::gcd(m, g)) {
        out *= g;
        m /= g;
    }
    return out;
}

i64 ipow(i64 base, int e) {
    i64 r = 1;
    while (e-- > 0) r *= base;
    return r;
}

i64 radical(i64 n) {
    i64 r = 1;
    for (auto [p, e] : factorize(n)) r *= p;
    return r;
}

i64 mod(i64 a, i64 m) {
    const i64 r = a % m;
    return r < 0 ? r + m : r;
}

SpfSieve::SpfSieve(i64 limit) : spf_(static_cast<std::size_t>(std::max<i64>(limit, 1)) + 1, 0) {
    for (i64 i = 2; i <= this->limit(); ++i) {
        if (spf_[static_cast<std::size_t>(i)]) continue;
        for (i64 j = i; j <= this->limit(); j += i)
            if (!spf_[static_cast<std::size_t>(j)]) spf_[static_cast<std::size_t>(j)] = i;
    }
}

std::vector<PrimePower> SpfSieve::factorize(i64 n) const {
    if (n > limit()) return critline::factorize(n);
    std::vector<PrimePower> out;
    while (n > 1) {
        const i64 p = spf(n);
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.push_back({p, e});
    }
    return out;
}

}  // namespace critline
