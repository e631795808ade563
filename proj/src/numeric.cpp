#include "critline/numeric.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_sf_gamma.h>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <limits>

namespace critline {

namespace {

struct GslQuiet {
    GslQuiet() { gsl_set_error_handler_off(); }
};
const GslQuiet gsl_quiet;

bool near_nonpositive_integer(cplx a) {
    return a.real() < 0.5 && std::abs(a.imag()) < 1e-9 &&
           std::abs(a.real() - std::round(a.real())) < 1e-6;
}

// Legendre continued fraction, modified Lentz.
cplx incgamma_cf(cplx a, cplx z) {
    constexpr double tiny = 1e-300;
    cplx b = z + 1.0 - a;
    cplx c = 1.0 / tiny;
    cplx d = 1.0 / b;
    cplx h = d;
    for (int k = 1; k < 100000; ++k) {
        const cplx an = -static_cast<double>(k) * (static_cast<double>(k) - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const cplx delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < 1e-16) return std::exp(-z) * h;
    }
    throw BudgetError("incomplete gamma continued fraction did not converge");
}

// z^{-a}Gamma(a) - e^{-z} sum_k z^k / (a)_{k+1}
cplx incgamma_series(cplx a, cplx z) {
    cplx term = 1.0 / a;
    cplx sum = term;
    for (int k = 1; k < 100000; ++k) {
        term *= z / (a + static_cast<double>(k));
        sum += term;
        if (std::abs(term) < 1e-17 * std::abs(sum)) {
            const cplx lead = std::exp(log_gamma(a) - a * std::log(z));
            return lead - std::exp(-z) * sum;
        }
    }
    throw BudgetError("incomplete gamma series did not converge");
}

}  // namespace

cplx log_gamma(cplx z) {
    gsl_sf_result lnr, arg;
    const int status = gsl_sf_lngamma_complex_e(z.real(), z.imag(), &lnr, &arg);
    if (status != GSL_SUCCESS) throw PoleError("log_gamma: argument at a pole");
    return {lnr.val, arg.val};
}

cplx incgamma_scaled(cplx a, cplx z) {
    if (std::abs(z) > std::abs(a) + 4.0) return incgamma_cf(a, z);
    if (near_nonpositive_integer(a)) {
        if (z.real() <= 1e-3) throw PoleError("incomplete gamma at integer order near z = 0");
        return incgamma_cf(a, z);
    }
    return incgamma_series(a, z);
}

cplx expm1_over_x(cplx x) {
    if (std::abs(x) > 1e-3) return (std::exp(x) - 1.0) / x;
    // Taylor 1 + x/2 + x^2/6 + x^3/24 + x^4/120
    return 1.0 + x * (0.5 + x * (1.0 / 6.0 + x * (1.0 / 24.0 + x / 120.0)));
}

QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     double rel_tol, unsigned max_depth) {
    double err = 0.0;
    const double v = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
        f, a, b, max_depth, rel_tol, &err);
    return {v, err};
}

}  // namespace critline
