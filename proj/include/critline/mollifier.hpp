#pragma once

#include "critline/dirchar.hpp"
#include "critline/lseries.hpp"

#include <gmpxx.h>

#include <map>
#include <optional>
#include <vector>

namespace critline {

// Polynomial with rational coefficients in formal symbols lambda_p = log p / log X.
// Keys are sorted prime multisets (the monomial); the empty key is the constant term.
class LogPoly {
public:
    LogPoly() = default;
    LogPoly(const mpq_class& c);  // NOLINT: implicit constant

    static LogPoly lambda(i64 p);

    LogPoly& operator+=(const LogPoly& o);
    LogPoly operator+(const LogPoly& o) const;
    LogPoly operator*(const LogPoly& o) const;
    LogPoly operator*(const mpq_class& c) const;
    bool operator==(const LogPoly& o) const { return terms_ == o.terms_; }

    bool is_zero() const { return terms_.empty(); }
    // Constant term (exact), meaningful when is_constant().
    mpq_class constant() const;
    bool is_constant() const;
    int degree() const;
    double evaluate(double log_X) const;
    const std::map<std::vector<i64>, mpq_class>& terms() const { return terms_; }

private:
    void add_term(const std::vector<i64>& key, const mpq_class& c);
    std::map<std::vector<i64>, mpq_class> terms_;
};

// L(nu): 1 for nu^2 <= X, 2 log(X/nu)/log X up to X, 0 from X on.
double smoothing_weight(i64 nu, double X);
LogPoly smoothing_weight_exact(i64 nu, double X);

// Local coefficients of f^{-1/2} for a power series f = 1 + a_1 x + ...
std::vector<mpq_class> inverse_sqrt_series(const std::vector<mpq_class>& f, int k_max);
std::vector<double> inverse_sqrt_series(const std::vector<double>& f, int k_max);

// alpha(p^k) for L = L_{chi_d1} L_{chi_d2} by the closed forms (p coprime to D), binomial otherwise.
mpq_class alpha_closed(const DiscriminantSplit& sp, i64 p, int k);
// Same quantity from the power series of the local factor of L.
mpq_class alpha_expanded(const DiscriminantSplit& sp, i64 p, int k);
// alpha(n) for any n, multiplicatively from alpha_closed.
mpq_class alpha_of(const DiscriminantSplit& sp, i64 n);

struct MollifierTable {
    double X = 3.0;
    i64 nu_max = 3;
    bool exact = false;                   // integer coefficients: alpha kept as rationals
    std::optional<DiscriminantSplit> split;
    std::vector<mpq_class> alpha_q;       // exact alpha(nu), nu <= nu_max
    std::vector<LogPoly> beta_q;          // exact beta(nu)
    std::vector<double> alpha;
    std::vector<double> weight;           // L(nu)
    std::vector<double> beta;
};

// Mollifier coefficients of L^{-1/2} up to X. With a split, the closed forms are used at primes
// coprime to D and cross-checked against the expansion (std::logic_error on mismatch).
MollifierTable alpha_table(const LSeries& L, double X, const std::optional<DiscriminantSplit>& split = {});

cplx eta(const MollifierTable& M, cplx s);

enum class ConvolutionRoute { TripleLoop, Staged };

// c(n) = sum_{abc = n} r(a) beta(b) beta(c), n = 0..N (index 0 unused), exactly.
std::vector<LogPoly> mollified_coeffs(const LSeries& L, const MollifierTable& M, i64 N,
                                      ConvolutionRoute route = ConvolutionRoute::Staged);

struct BHelpers {
    double b;
    double B;
};
BHelpers b_helpers(const MollifierTable& M, i64 n);

struct WindowIntegrals {
    double I = 0.0;
    cplx M = 0.0;
    double t = 0.0, H = 0.0, T_param = 0.0;
};

WindowIntegrals window_integrals(const LSeries& F, const MollifierTable& M, double t, double H, double T_param,
                                 double rel_tol = 1e-8);

// |sum r(n) beta(nu1) beta(nu2)/nu2 exp(-(2 pi n nu1 / (sqrt(D) nu2)) y (sin d + i cos d))|^2, d = 1/T.
double g_kernel(const LSeries& L, const MollifierTable& M, double y, double T_param);

struct JEstimate {
    double value;
    double ratio;  // value (theta log T)^{1/3} / T
    double U_max;
};

// Integral of G(u) u^{-theta} over [1, U_max]; U_max <= 0 picks the decay cutoff.
JEstimate j_estimate(const LSeries& L, const MollifierTable& M, double theta, double T_param, double U_max = 0.0);

}  // namespace critline
