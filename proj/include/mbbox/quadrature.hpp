#pragma once

// Numerical integration kernels shared by the contour engine and the oracles.

#include <functional>
#include <vector>

#include "mbbox/complex.hpp"

namespace mbbox::quad {

/// Neumaier-compensated complex accumulator.
class CompensatedSum {
public:
    void add(Complex v) noexcept;
    Complex value() const noexcept { return {re_ + cre_, im_ + cim_}; }

private:
    static void step(double& sum, double& comp, double v) noexcept;
    double re_ = 0.0, cre_ = 0.0, im_ = 0.0, cim_ = 0.0;
};

struct Rule {
    std::vector<double> nodes;    // on [-1, 1]
    std::vector<double> weights;
};

/// n-point Gauss-Legendre rule (cached).
const Rule& gauss_legendre(int n);

using RealIntegrand = std::function<Complex(double)>;

struct QuadResult {
    Complex value;
    double error = 0.0;     // estimate of the absolute error
    double abs_sum = 0.0;   // sum of |f w|, for a rounding floor
    int evaluations = 0;
};

/// Fixed Gauss-Legendre rule on [a, b].
QuadResult gl_fixed(const RealIntegrand& f, double a, double b, int n);

/// Gauss-Legendre on consecutive panels [p_i, p_{i+1}] with n points each.
QuadResult gl_panels(const RealIntegrand& f, const std::vector<double>& breaks, int n);

/// Double-exponential rule on [a, b]. The integrand receives the abscissa and
/// its distances to both ends, computed without cancellation.
using EndpointIntegrand = std::function<Complex(double x, double from_a, double to_b)>;
QuadResult tanh_sinh(const EndpointIntegrand& f, double a, double b, double rel_tol,
                     int max_level = 9);

/// Globally adaptive Gauss-Kronrod (7/15) on [a, b].
QuadResult adaptive_gk(const RealIntegrand& f, double a, double b, double abs_tol, double rel_tol,
                       int max_intervals = 4000);

}  // namespace mbbox::quad
