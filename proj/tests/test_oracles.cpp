#include <cmath>

#include "doctest.h"
#include "mbbox/closed_form.hpp"
#include "mbbox/oracles.hpp"
#include "mbbox/specfun.hpp"

using namespace mbbox;
using namespace mbbox::oracles;

namespace {
bool close(Complex a, Complex b, double tol) {
    return std::abs(a - b) <= tol * std::max(1e-300, std::abs(b));
}
Kinematics kin(double s, double t, double eps) { return {s, t, std::nullopt, eps}; }
Kinematics kin(double s, double t, double m, double eps) { return {s, t, m, eps}; }
}  // namespace

TEST_CASE("Feynman oracle reproduces the massless closed form") {
    CHECK(close(feynman_1d_massless(kin(-1, -2, 0.3)).value,
                massless_box(kin(-1, -2, 0.3)).value, 1e-9));
    const auto sym = feynman_1d_massless(kin(-1, -1, 0.3));
    CHECK(std::abs(sym.value.imag()) == 0.0);
    CHECK(close(sym.pieces.at("z_below_half"), sym.pieces.at("z_above_half"), 1e-12));
    for (double eps : {0.05, 0.2, 0.5, 0.8, 0.95}) {
        CHECK(close(feynman_1d_massless(kin(-0.3, -4, eps)).value,
                    massless_box(kin(-0.3, -4, eps)).value, 1e-9));
    }
}

TEST_CASE("mild singularity needs few evaluations") {
    const auto base = feynman_1d_massless(kin(-1, -2, 0.3));
    const auto mild = feynman_1d_massless(kin(-1, -2, 0.8));
    CHECK(mild.diagnostics.at("evaluations") <= 2.0 * base.diagnostics.at("evaluations"));
}

TEST_CASE("Feynman oracle reproduces the one-mass closed form") {
    CHECK(close(feynman_1d_onemass(kin(-1, -2, -0.5, 0.3)).value,
                onemass_box(kin(-1, -2, -0.5, 0.3)).value, 1e-9));
    // Small mass tends to the massless integral.
    const auto a = feynman_1d_onemass(kin(-1, -2, -1e-10, 0.3)).value;
    const auto b = feynman_1d_massless(kin(-1, -2, 0.3)).value;
    CHECK(std::abs(a - b) < 1e-2 * std::abs(b));
    // Homogeneity of degree eps - 2.
    const double lam = 3.7;
    const auto c = feynman_1d_onemass(kin(-lam, -2 * lam, -0.5 * lam, 0.3)).value;
    const auto d = feynman_1d_onemass(kin(-1, -2, -0.5, 0.3)).value;
    CHECK(close(c, std::pow(lam, 0.3 - 2.0) * d, 1e-11));
}

TEST_CASE("substitution agrees with raw adaptive quadrature") {
    for (double eps : {0.6, 0.8}) {
        const auto k = kin(-1, -2.5, eps);
        CHECK(close(feynman_1d_raw(k).value, feynman_1d_massless(k).value, 1e-9));
        const auto km = kin(-1, -2.5, -0.7, eps);
        CHECK(close(feynman_1d_raw(km).value, feynman_1d_onemass(km).value, 1e-9));
    }
}

TEST_CASE("Euler integral oracle") {
    CHECK(close(euler_f21_oracle(0.3, 0.0), 1.0 / 0.3, 1e-14));
    CHECK(close(euler_f21_oracle(0.3, 0.5), specfun::f21_1e(0.5, 0.3) / 0.3, 1e-10));
    CHECK(close(euler_f21_oracle(0.3, 2.0), specfun::f21_1e(2.0, 0.3) / 0.3, 1e-8));
    CHECK(close(euler_f21_oracle(0.3, 2.0, Cut::AboveCut),
                specfun::f21_1e(2.0, 0.3, Cut::AboveCut) / 0.3, 1e-8));
    CHECK(close(euler_f21_oracle(0.3, 2.0, Cut::BelowCut),
                specfun::f21_1e(2.0, 0.3, Cut::BelowCut) / 0.3, 1e-8));
    CHECK(close(euler_f21_oracle(0.65, 5.0), specfun::f21_1e(5.0, 0.65) / 0.65, 1e-8));
    CHECK(close(euler_f21_oracle(0.4, -3.0), specfun::f21_1e(-3.0, 0.4) / 0.4, 1e-10));
}

TEST_CASE("excision sequence is Richardson stable") {
    const double eps = 0.3, w = 2.0;
    const double i1 = euler_f21_excised(eps, w, 1e-3);
    const double i2 = euler_f21_excised(eps, w, 1e-4);
    const double i3 = euler_f21_excised(eps, w, 1e-5);
    const double a1 = (10 * i2 - i1) / 9;
    const double a2 = (10 * i3 - i2) / 9;
    CHECK(std::abs(a1 - a2) < 1e-8 * std::abs(a2));
}

TEST_CASE("Beta oracle") {
    CHECK(std::abs(beta_oracle(0.5) - kPi) < 1e-12);
    CHECK(std::abs(beta_oracle(1.0) - 1.0) < 1e-13);
    const double g = specfun::gamma(0.3).real();
    CHECK(std::abs(beta_oracle(0.3) - g * g / specfun::gamma(0.6).real()) <
          1e-10 * beta_oracle(0.3));
}

TEST_CASE("Appell F2 double series") {
    CHECK(close(f2_double_series(1.3, 0.7, 0.4, 1.9, 2.2, 0.0, 0.0), 1.0, 1e-15));
    CHECK(close(f2_double_series(1.3, 0.7, 0.4, 1.9, 2.2, 0.45, 0.0),
                specfun::f21_general_series(1.3, 0.7, 1.9, 0.45), 1e-13));
    const double eps = 0.3;
    const double a = 2.0 - eps;
    CHECK(close(f2_double_series(a, 1, 1, a, a, 0.2, 0.3),
                specfun::appell_f2_reduced(1, 1, a, 0.2, 0.3), 1e-12));
    CHECK(close(f2_double_series(a, 0.6, 1.4, a, a, -0.35, 0.5),
                specfun::appell_f2_reduced(0.6, 1.4, a, -0.35, 0.5), 1e-12));
    CHECK_THROWS_AS(f2_double_series(a, 1, 1, a, a, 0.6, 0.5), NonConvergence);
}

TEST_CASE("integrand specs") {
    CHECK(integrand_spec(IntegrandKind::MasslessZ, 0.3).singular_exponents.size() == 2);
    CHECK_THROWS_AS(integrand_spec(IntegrandKind::BetaY, -0.1), DomainError);
}
