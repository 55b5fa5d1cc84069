#pragma once

#include <cmath>
#include <limits>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include "specforms/errors.hpp"

namespace specforms {

// Adaptive quadrature targets: 1e-12 absolute, 1e-10 relative. The double
// exponential rules converge well past that on the smooth profiles used
// here; the estimates below reject anything that genuinely failed.

namespace detail {

inline void check_quadrature(double err, double l1, const char* what) {
    if (!std::isfinite(err) || !std::isfinite(l1))
        throw integration_error(std::string(what) + ": non-finite quadrature result");
    if (err > 1e-12 && err > 1e-9 * l1)
        throw integration_error(std::string(what) + ": quadrature did not converge (err=" +
                                std::to_string(err) + ", L1=" + std::to_string(l1) + ")");
}

} // namespace detail

/// ∫_a^b f, finite interval, tanh-sinh rule.
template <class F>
double integrate_finite(F&& f, double a, double b) {
    if (a == b) return 0.0;
    thread_local boost::math::quadrature::tanh_sinh<double> rule;
    double err = 0.0, l1 = 0.0;
    const double v = rule.integrate(f, a, b, 1e-10, &err, &l1);
    detail::check_quadrature(err, l1, "integrate_finite");
    return v;
}

/// ∫_0^∞ f, exp-sinh rule. Integrands are expected to decay at infinity;
/// endpoint behaviour at 0 may vanish to all orders (e.g. e^{-1/s}).
template <class F>
double integrate_half_line(F&& f) {
    thread_local boost::math::quadrature::exp_sinh<double> rule;
    double err = 0.0, l1 = 0.0;
    double v = 0.0;
    try {
        v = rule.integrate(f, 1e-10, &err, &l1);
    } catch (const std::exception& e) {
        throw integration_error(std::string("integrate_half_line: ") + e.what());
    }
    detail::check_quadrature(err, l1, "integrate_half_line");
    return v;
}

/// ∫_a^b f by adaptive Gauss-Kronrod. Independent of the tanh-sinh route;
/// used where two quadratures must cross-check each other.
template <class F>
double integrate_gauss_kronrod(F&& f, double a, double b) {
    if (a == b) return 0.0;
    double err = 0.0;
    const double v = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
        f, a, b, 12, 1e-11, &err);
    if (!std::isfinite(v))
        throw integration_error("integrate_gauss_kronrod: non-finite result");
    return v;
}

} // namespace specforms
