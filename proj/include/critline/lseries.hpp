#pragma once

#include "critline/dirchar.hpp"
#include "critline/numeric.hpp"
#include "critline/quadfield.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace critline {

// value * exp(log_scale); lets Lambda(1/2 + it) be carried without underflow at large |t|.
struct ScaledValue {
    cplx value;
    double log_scale;

    cplx full() const { return value * std::exp(log_scale); }
};

// Dirichlet series sum a(n) n^{-s} with the degree-2 completion (2 pi / sqrt(D))^{-s} Gamma(s).
class LSeries {
public:
    LSeries(std::vector<double> coeffs, i64 D, bool has_pole);

    // Hecke L-function of psi; principal characters carry a pole.
    static LSeries hecke(const ClassGroup& g, const HeckeCharacter& psi, i64 n_max);
    // L(s, chi_d1) L(s, chi_d2); pole iff the split is trivial.
    static LSeries from_split(const DiscriminantSplit& sp, i64 n_max);
    // Epstein zeta of a positive definite form: coefficients R_Q(n).
    static LSeries epstein(const QuadForm& f, i64 n_max);

    i64 D() const { return D_; }
    i64 n_max() const { return static_cast<i64>(coeffs_.size()) - 1; }
    double coeff(i64 n) const { return coeffs_[static_cast<std::size_t>(n)]; }
    const std::vector<double>& coeffs() const { return coeffs_; }
    bool has_pole() const { return has_pole_; }
    double kappa() const { return kappa_; }
    double scale() const;  // 2 pi / sqrt(D)

    // Terms needed for Lambda(s) at the given contour parameter.
    i64 terms_needed(cplx s, double theta0 = 5.0) const;

    // Completed function. theta0 controls the contour rotation; any value in (0, pi|t|/2] is valid,
    // which gives an independent route for consistency checks.
    ScaledValue lambda_scaled(cplx s, double theta0 = 5.0) const;
    cplx lambda(cplx s, double theta0 = 5.0) const { return lambda_scaled(s, theta0).full(); }
    // L(s) itself, from the completed function.
    cplx value(cplx s) const;
    // Truncated Dirichlet sum over n <= n_terms.
    cplx dirichlet_sum(cplx s, i64 n_terms) const;

    // e^{pi |t| / 2} Lambda(1/2 + it) (real). With check, asserts the imaginary part is negligible.
    double z_normalized(double t, bool check = false) const;

private:
    void fit_pole_constant();

    std::vector<double> coeffs_;
    i64 D_;
    bool has_pole_;
    double kappa_ = 0.0;
};

// Raised by hardy_Z when the computed value is not real.
class RealityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Lambda(1/2 + it), checked real.
double hardy_Z(const LSeries& F, double t);

struct EpsteinZeta {
    QuadForm form;
    std::vector<cplx> weights;
    std::vector<LSeries> lfuncs;

    static EpsteinZeta build(const ClassGroup& g, const QuadForm& f, i64 n_max);
};

cplx epstein_direct(const QuadForm& f, cplx s, i64 n_max = 20000);
cplx epstein_via_hecke(const ClassGroup& g, const QuadForm& f, cplx s, i64 n_max = 20000);
cplx epstein_via_hecke(const EpsteinZeta& z, cplx s);

// Finds the split whose product L-function has the same coefficients as the real character psi.
DiscriminantSplit split_for_character(const ClassGroup& g, const HeckeCharacter& psi);

struct Zero {
    double t;
    double width;
};

struct ZeroScanResult {
    std::vector<Zero> zeros;
    double max_step = 0.0;
    std::size_t samples = 0;
    double max_reality_residual = 0.0;  // over the grid samples
    std::size_t pair_refinements = 0;
};

struct ScanOptions {
    double step_scale = 1.0;  // multiplies the default step bound
    double tol = 1e-8;
    bool refine_minima = true;
};

double scan_step(double t, i64 D);

// Sign-change scan of a real function; step bound from the conductor D.
ZeroScanResult scan_real_function(const std::function<double(double)>& f, double t1, double t2, i64 D,
                                  const ScanOptions& opt = {});
ZeroScanResult scan_zeros(const LSeries& F, double t1, double t2, const ScanOptions& opt = {});

struct WindowRecord {
    double I = 0.0;
    double J = 0.0;
    bool certified = false;
    int sign_changes = 0;
};

// Optional weight |eta(1/2 + iu)|^2 multiplying the real function.
using EtaSquared = std::function<double(double)>;

WindowRecord window_test(const LSeries& F, double t, double H, const EtaSquared* eta_sq, double T_param,
                         double budget = 1e-6);

}  // namespace critline
