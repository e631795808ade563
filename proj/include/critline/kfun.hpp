#pragma once

#include "critline/dirchar.hpp"
#include "critline/mollifier.hpp"

#include <vector>

namespace critline {

// Arithmetic data of L = L_{chi_d1} L_{chi_d2} shared by the K-functions.
class KContext {
public:
    explicit KContext(DiscriminantSplit sp, double budget = 1e-14);

    const DiscriminantSplit& split() const { return sp_; }
    i64 D() const { return D_; }
    i64 modulus(int l) const { return l == 1 ? q1_ : q2_; }
    int chi(int l, i64 n) const { return l == 1 ? c1_(n) : c2_(n); }
    int chi_D(i64 n) const { return c1_(n) * c2_(n); }
    i64 r_prime_power(i64 p, int k) const;
    i64 r(i64 n) const;
    double budget() const { return budget_; }

    // K(m, s) from the local r^2 series; tail_bound (optional) receives the summed truncation bound.
    cplx K(i64 m, cplx s, double* tail_bound = nullptr) const;
    // Closed finite product form.
    cplx K_ll(int l, i64 m, cplx z) const;
    // The defining product of the notation list (used as a consistency check against K_ll).
    cplx K_ll_product(int l, i64 m, cplx z) const;
    cplx K_12(i64 m1, i64 m2, cplx z) const;
    // Defining-product form of K_12.
    cplx K_12_product(i64 m1, i64 m2, cplx z) const;

private:
    DiscriminantSplit sp_;
    RealCharacter c1_, c2_;
    i64 q1_, q2_, D_;
    double budget_;
};

double G_N(i64 N);

enum class SumRoute { Naive, Factored };

// Quadruple Selberg sum with K(., 1 - z) and q = (nu1 nu4, nu2 nu3).
cplx selberg_S(const KContext& ctx, const MollifierTable& M, cplx z, SumRoute route = SumRoute::Naive);
// Same quadruple sum with K_ll(., z) and (q / nu1 nu3)^{1 - z} weights.
cplx selberg_Sll(const KContext& ctx, int l, const MollifierTable& M, cplx z, SumRoute route = SumRoute::Naive);
// Decorated sum of the functional equation S~_{2,2}(-w) = S~_{1,1}(w).
cplx s_tilde(const KContext& ctx, int l, const MollifierTable& M, cplx w, SumRoute route = SumRoute::Naive);

// Dirichlet coefficients of L_{chi1^2}(s) L_{chi2^2}(s) L_{chi_D}(s)^2 / L_{chi_D^2}(2s), n = 0..N.
// printed_denominator uses L_{chi_D}(2s) instead.
std::vector<i64> squared_coefficient_series(const KContext& ctx, i64 N, bool printed_denominator = false);

constexpr i64 kNaiveSumLimit = 60;
constexpr i64 kFactoredSumLimit = 200;

}  // namespace critline
