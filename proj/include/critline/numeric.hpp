#pragma once

#include <complex>
#include <functional>
#include <stdexcept>
#include <string>

namespace critline {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

// Raised when an evaluation point is too close to a pole.
class PoleError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Raised when a requested accuracy cannot be met within the cost guard.
class BudgetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

cplx log_gamma(cplx z);

// z^{-a} Gamma(a, z), principal branch, Re z > 0 or |arg z| < pi.
cplx incgamma_scaled(cplx a, cplx z);

// (e^x - 1) / x, accurate near 0.
cplx expm1_over_x(cplx x);

struct QuadResult {
    double value;
    double error;
};

// Adaptive Gauss-Kronrod 15/31 on [a, b] to relative tolerance.
QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     double rel_tol = 1e-10, unsigned max_depth = 30);

}  // namespace critline
