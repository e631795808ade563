#pragma once

#include "critline/dirchar.hpp"

#include <vector>

namespace critline {

// Sign of the additive phase e(-+ al/q) in epsilon_q. Negative is the printed form; the
// brute-force correlation sums select Positive (they differ only on the chi_D-twisted classes).
enum class PhaseSign { Negative, Positive };

struct SingularSeriesParams {
    i64 l = 1;
    i64 m1 = 1, m2 = 1;
    DiscriminantSplit split{1, -4};
    PhaseSign phase = PhaseSign::Positive;

    i64 D() const { return -split.d1 * split.d2; }
    void validate() const;  // std::invalid_argument
};

// epsilon_q(l) summed literally over the units a mod q.
cplx eps_q(const SingularSeriesParams& P, i64 q);

// Coefficients of the split of epsilon_q(l) into a Ramanujan sum and a chi_D-twisted sum:
// eps_q(l) = ramanujan * c_q(l) + twisted * sum_a chi_D(a) e(-al/q) (phase sign folded into twisted).
struct EpsDecomposition {
    cplx ramanujan = 0.0;
    cplx twisted = 0.0;
    int k = 0, j = 0;  // class Q_{k,j}; 0 when eps_q vanishes identically
};
EpsDecomposition eps_decompose(const SingularSeriesParams& P, i64 q);
cplx eps_q_fast(const SingularSeriesParams& P, i64 q);

i64 ramanujan_sum(i64 q, i64 l);
// sum over units a mod q of chi(a) e(-al/q)
cplx twisted_ramanujan_sum(const RealCharacter& chi, i64 q, i64 l);

// (q, m1 m2) / (q^2 sqrt(r1 r2)).
double sigma_weight(const SingularSeriesParams& P, i64 q);

struct SigmaValue {
    double value = 0.0;
    double imag = 0.0;     // residual imaginary part of the truncated sum
    double bound = 0.0;    // tail estimate C * sum_{q > Q} tau(q) (q, m1 m2) (l, q)^{1/2} q^{-3/2}
    double C = 0.0;        // fitted |eps_q| / (tau(q) sqrt(q (l, q))) over q <= min(Q, 1000)
    i64 Q = 0;
};

SigmaValue sigma_truncated(const SingularSeriesParams& P, i64 Q);
// Picks Q from the tail estimate; BudgetError when Q would exceed Q_cap.
SigmaValue sigma(const SingularSeriesParams& P, double budget, i64 Q_cap = 400000);

// Exact integer r(n) of L_{chi_d1} L_{chi_d2}, n = 0..n_max.
std::vector<i64> exact_r_table(const DiscriminantSplit& sp, i64 n_max);

enum class LoopOrder { N1First, N2First };
// sum over m2 n2 - m1 n1 = l, 1 <= n1 <= N - 1, of r(n2) r(n1).
i64 brute_S(const SingularSeriesParams& P, i64 N, LoopOrder order = LoopOrder::N1First);

struct CorrelationRow {
    i64 N;
    i64 S;
    double main;
    double ratio;     // S m2 / (sigma pi^2 h^2 N)
    double residual;  // |S - main| / N^{12/13}
};

struct CorrelationReport {
    SigmaValue sigma;
    int h = 0;
    std::vector<CorrelationRow> rows;
    bool residual_nonincreasing = true;
};

double correlation_main_term(double sigma, int h, i64 N, i64 m2);
CorrelationReport correlation_check(const SingularSeriesParams& P, const std::vector<i64>& Ns, i64 sigma_Q = 100000);

struct ZValue {
    cplx value = 0.0;
    double bound = 0.0;
    i64 L = 0, Q = 0;
};

// sum_{l <= L_max} sigma(l, m1, m2) l^{-s}, each sigma truncated at q <= Q. P.l is ignored.
ZValue Z_direct(const SingularSeriesParams& P, cplx s, i64 L_max, i64 Q);

struct ZClosedOptions {
    bool printed_normalization = false;     // cross terms with D^{-1/2} L(2, chi_D)^{-1}
    bool signed_gauss_denominator = false;  // divide G^2 by d_j instead of |d_j|
    bool swapped_euler_product = false;     // prod over p | d1 and p | d2 regardless of j
};

struct ZTerms {
    cplx z11 = 0.0, z22 = 0.0, z12 = 0.0, z21 = 0.0;
    cplx total() const { return z11 + z22 + z12 + z21; }
};

ZTerms Z_closed_terms(const SingularSeriesParams& P, cplx s, ZClosedOptions opt = {});
cplx Z_closed(const SingularSeriesParams& P, cplx s, ZClosedOptions opt = {});

struct PhiKernel {
    double delta = 0.01;
    double theta = 0.1;

    double Delta() const;
    void validate() const;
};

double phi(const PhiKernel& k, double u);
// integral_0^inf phi(u) u^{-s} cos(2 pi y u) du, 1 < Re s < 5.
cplx Phi_quad(const PhiKernel& k, cplx s, double y, double rel_tol = 1e-10);
// Closed Mellin transform of Phi(1 + theta, .) at w, 0 < Re w < 2.
cplx M_closed(const PhiKernel& k, cplx w);
// integral_0^inf Phi(1 + theta, v) v^{w-1} dv by nested quadrature.
cplx M_numeric(const PhiKernel& k, cplx w, double rel_tol = 1e-8);

}  // namespace critline
