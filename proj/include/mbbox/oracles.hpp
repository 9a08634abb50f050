#pragma once

// Brute-force references used to check the analytic and contour pipelines.
// Only the specfun Gamma functions are shared with the code under test.

#include <utility>
#include <vector>

#include "mbbox/kinematics.hpp"

namespace mbbox::oracles {

enum class IntegrandKind { MasslessZ, OneMassZ, EulerF21, BetaY, F2DoubleSeries };

struct IntegrandSpec {
    IntegrandKind kind = IntegrandKind::MasslessZ;
    std::vector<std::pair<double, double>> singular_exponents;  // (endpoint, exponent)
};

/// Endpoint behaviour of each integrand. Throws DomainError if not integrable.
IntegrandSpec integrand_spec(IntegrandKind kind, double eps);

struct OracleOptions {
    double rel_tol = 1e-12;
    int max_level = 10;  // tanh-sinh refinement levels
};

/// Gamma^2(eps)/Gamma(2eps) Gamma(1-eps) int_0^1 [A^(eps-1) - B^(eps-1)] / (B - A) dz
/// with A = z(-s), B = (1-z)(-t).
BoxValue feynman_1d_massless(const Kinematics& k, const OracleOptions& opt = {});
/// Same with A = z(-s) + (1-z)(-m^2).
BoxValue feynman_1d_onemass(const Kinematics& k, const OracleOptions& opt = {});

/// The same z-integrals on the raw variable with adaptive Gauss-Kronrod, no substitution.
BoxValue feynman_1d_raw(const Kinematics& k, double rel_tol = 1e-10);

/// int_0^1 z^(eps-1) (1 - w z)^(-1) dz = 2F1(1,eps;eps+1;w)/eps.
/// For w > 1 the pole at z = 1/w is treated by symmetric excision.
Complex euler_f21_oracle(double eps, double w, Cut cut = Cut::PrincipalValue);

/// PV integral with a single excision radius (exposed for the stability check).
double euler_f21_excised(double eps, double w, double radius);

/// int_0^1 (y(1-y))^(eps-1) dy.
double beta_oracle(double eps);

/// Appell F2(alpha; beta, beta'; gamma, gamma'; x, y) by diagonal summation.
Complex f2_double_series(double alpha, double beta, double beta_p, double gamma1, double gamma2,
                         double x, double y);

}  // namespace mbbox::oracles
