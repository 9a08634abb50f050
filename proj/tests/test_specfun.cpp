#include <cmath>

#include "doctest.h"
#include "mbbox/quadrature.hpp"
#include "mbbox/specfun.hpp"

using namespace mbbox;
using namespace mbbox::specfun;

namespace {

bool close(Complex a, Complex b, double tol) {
    return std::abs(a - b) <= tol * std::max(1.0, std::abs(b));
}

// eps * int_0^1 u^(eps-1) / (1 - z u) du with u = v^(1/eps).
Complex euler_1e(Complex z, double eps) {
    auto f = [&](double v, double, double) { return 1.0 / (1.0 - z * std::pow(v, 1.0 / eps)); };
    return quad::tanh_sinh(f, 0.0, 1.0, 1e-15).value;
}

// (1-eps) int_0^1 (1-u)^(-eps) / (1 - z u) du
Complex euler_11(Complex z, double eps) {
    auto f = [&](double u, double, double to_b) {
        return (1.0 - eps) * std::pow(to_b, -eps) / (1.0 - z * u);
    };
    return quad::tanh_sinh(f, 0.0, 1.0, 1e-15).value;
}

}  // namespace

TEST_CASE("ln_gamma basic values") {
    CHECK(std::abs(ln_gamma(1.0)) < 1e-15);
    CHECK(std::abs(ln_gamma(0.5) - std::log(std::sqrt(kPi))) < 1e-14);
    const Complex z{3.0, 4.0};
    CHECK(close(ln_gamma(z + 1.0), ln_gamma(z) + std::log(z), 1e-13));
    CHECK_THROWS_AS(ln_gamma(0.0), PoleError);
    CHECK_THROWS_AS(ln_gamma(-2.0), PoleError);
    CHECK_THROWS_AS(specfun::gamma(-1.0), PoleError);
}

TEST_CASE("gamma reflection and recurrence") {
    CHECK(close(specfun::gamma(1.0), 1.0, 1e-15));
    CHECK(close(specfun::gamma(0.3) * specfun::gamma(0.7), kPi / std::sin(0.3 * kPi), 1e-13));
    for (Complex z : {Complex{0.13, 0.0}, Complex{-2.7, 0.4}, Complex{0.5, 3.0},
                      Complex{4.2, -1.1}, Complex{-7.3, 0.0}}) {
        CHECK(close(specfun::gamma(z) * specfun::gamma(1.0 - z) * std::sin(kPi * z) / kPi, 1.0, 1e-12));
        CHECK(close(specfun::gamma(z + 1.0), z * specfun::gamma(z), 1e-12));
        CHECK(close(digamma(z + 1.0), digamma(z) + 1.0 / z, 1e-12));
    }
}

TEST_CASE("gamma matches the Beta integral") {
    const double eps = 0.4;
    auto f = [&](double, double y, double one_minus_y) {
        return Complex(std::pow(y, eps - 1.0) * std::pow(one_minus_y, eps - 1.0));
    };
    const Complex q = quad::tanh_sinh(f, 0.0, 1.0, 1e-14).value;
    CHECK(close(specfun::gamma(eps) * specfun::gamma(eps) / specfun::gamma(2 * eps), q, 1e-10));
}

TEST_CASE("digamma") {
    CHECK(std::abs(digamma(1.0) + kEulerGamma) < 1e-14);
    CHECK(std::abs(digamma(2.0) - (1.0 - kEulerGamma)) < 1e-14);
    const double h = 1e-6;
    const Complex fd = (ln_gamma(0.3 + h) - ln_gamma(0.3 - h)) / (2 * h);
    CHECK(std::abs(digamma(0.3) - fd) < 1e-8);
    CHECK_THROWS_AS(digamma(-3.0), PoleError);
}

TEST_CASE("polygamma by finite differences") {
    CHECK(std::abs(polygamma_fd(1, 1.0) - kZeta2) < 1e-9);
    CHECK(std::abs(polygamma_fd(2, 1.0) + 2.0 * 1.2020569031595942) < 1e-8);
    CHECK(std::abs(polygamma_fd(3, 1.0) - std::pow(kPi, 4) / 15.0) < 1e-6);
}

TEST_CASE("dilogarithm") {
    CHECK(std::abs(li2(0.0)) == 0.0);
    CHECK(std::abs(li2(1.0) - kZeta2) < 1e-15);
    CHECK(std::abs(li2(-1.0) + kPi * kPi / 12.0) < 1e-14);
    CHECK(std::abs(li2(0.5) - (kPi * kPi / 12.0 - 0.5 * std::log(2.0) * std::log(2.0))) < 1e-14);

    const double z = 0.37;
    auto f = [](double u) { return Complex(-std::log1p(-u) / u); };
    CHECK(close(li2(z), quad::adaptive_gk(f, 0.0, z, 1e-15, 1e-15).value, 1e-13));

    for (double x : {0.1, 0.3, 0.5, 0.77, 0.95}) {
        const Complex lhs = li2(1.0 - x);
        const Complex rhs = -li2(x) + kZeta2 - std::log(x) * std::log(1.0 - x);
        CHECK(close(lhs, rhs, 1e-12));
    }

    // Series check away from the real axis.
    const Complex w{0.3, 0.4};
    Complex sum = 0.0, p = 1.0;
    for (int n = 1; n < 200; ++n) {
        p *= w;
        sum += p / double(n * n);
    }
    CHECK(close(li2(w), sum, 1e-14));
    // Inversion region, approached from both sides.
    const Complex a = li2(Complex{3.0, 1e-12});
    const Complex b = li2(Complex{3.0, -1e-12});
    CHECK(close(li2(3.0, Cut::AboveCut), a, 1e-10));
    CHECK(close(li2(3.0, Cut::BelowCut), b, 1e-10));
    CHECK(close(li2(3.0, Cut::PrincipalValue),
                0.5 * (li2(3.0, Cut::AboveCut) + li2(3.0, Cut::BelowCut)), 1e-13));
    CHECK(close(li2(3.0, Cut::PrincipalValue), 0.5 * (a + b), 1e-10));
    CHECK(std::abs(li2(3.0).imag()) < 1e-15);
}

TEST_CASE("2F1 families at the origin") {
    for (double eps : {0.1, 0.5, 0.9}) {
        CHECK(f21_1e(0.0, eps) == Complex(1.0));
        CHECK(f21_2e(0.0, eps) == Complex(1.0));
        CHECK(f21_11(0.0, eps) == Complex(1.0));
    }
}

TEST_CASE("2F1 against the Euler integral") {
    for (double eps : {0.2, 0.5, 0.8}) {
        for (double z : {-0.9, -0.5, 0.0, 0.5, 0.9}) {
            CHECK(close(f21_1e(z, eps), euler_1e(z, eps), 1e-10));
            CHECK(close(f21_11(z, eps), euler_11(z, eps), 1e-10));
        }
    }
    CHECK(close(f21_1e(0.25, 0.5), euler_1e(0.25, 0.5), 1e-12));
    // f21_2e(z) = (1+eps) int u^eps / (1 - z u)
    auto f = [](double u) { return Complex(1.25 * std::pow(u, 0.25) / (1.0 + 0.8 * u)); };
    CHECK(close(f21_2e(-0.8, 0.25), quad::adaptive_gk(f, 0.0, 1.0, 1e-15, 1e-15).value, 1e-10));
    // Continued region: far outside the disc
    CHECK(close(f21_1e(-7.5, 0.35), euler_1e(-7.5, 0.35), 1e-10));
    CHECK(close(f21_11(-30.0, 0.35), euler_11(-30.0, 0.35), 1e-10));
    CHECK(close(f21_11(Complex{1.5, 2.0}, 0.6), euler_11(Complex{1.5, 2.0}, 0.6), 1e-10));
}

TEST_CASE("contact identity") {
    auto residual = [](Complex z, double eps, Cut cut) {
        return f21_1e(z, eps, cut) / eps - (1.0 / eps + z / (1.0 + eps) * f21_2e(z, eps, cut));
    };
    CHECK(std::abs(residual(0.6, 0.3, Cut::PrincipalValue)) < 1e-12);
    CHECK(std::abs(residual(0.5, 0.4, Cut::PrincipalValue)) < 1e-12);
    for (Complex z : {Complex{-3.0}, Complex{0.95}, Complex{2.5}, Complex{1.2}, Complex{40.0},
                      Complex{0.5, 1.5}, Complex{-2.0, -0.3}}) {
        for (Cut cut : {Cut::PrincipalValue, Cut::AboveCut, Cut::BelowCut}) {
            CHECK(std::abs(residual(z, 0.3, cut)) < 1e-12 * std::max(1.0, std::abs(z)));
        }
    }
}

TEST_CASE("principal value is the average of the two sides") {
    for (double z : {1.2, 2.5, 17.0}) {
        for (double eps : {0.25, 0.7}) {
            auto check = [&](auto fn) {
                const Complex pv = fn(z, eps, Cut::PrincipalValue);
                const Complex up = fn(z, eps, Cut::AboveCut);
                const Complex dn = fn(z, eps, Cut::BelowCut);
                CHECK(std::abs(pv - 0.5 * (up + dn)) <= 1e-13 * std::abs(pv) + 1e-15);
                CHECK(std::abs(pv.imag()) < 1e-15);
                CHECK(std::abs(up.imag()) > 1e-3);
            };
            check([](double x, double e, Cut c) { return f21_1e(x, e, c); });
            check([](double x, double e, Cut c) { return f21_2e(x, e, c); });
            check([](double x, double e, Cut c) { return f21_11(x, e, c); });
            // Above the cut means z + i0.
            CHECK(close(f21_1e(z, eps, Cut::AboveCut), f21_1e(Complex{z, 1e-13}, eps), 1e-9));
            CHECK(close(f21_11(z, eps, Cut::BelowCut), f21_11(Complex{z, -1e-13}, eps), 1e-9));
        }
    }
}

TEST_CASE("general series") {
    CHECK(close(f21_general_series(1, 1, 2, 0.5), -std::log(0.5) / 0.5, 1e-14));
    CHECK(close(f21_general_series(1, 0.4, 1.4, 0.3), f21_1e(0.3, 0.4), 1e-14));
    CHECK(close(f21_general_series(1.7, 1, 1.7, 0.2), 1.25, 1e-14));
    CHECK_THROWS_AS(f21_general_series(1, 1, 2, 1.5), NonConvergence);
}

TEST_CASE("continuation of 2F1(1,1;2-eps;-s/t)") {
    auto check = [](double s, double t, double eps) {
        const auto p = continuation_ratio(t / s, eps);
        CHECK(close(p.sum(), f21_11(-s / t, eps), 1e-12));
    };
    check(-1.0, -2.0, 0.3);
    check(-3.0, -1.0, 0.45);
    check(-0.2, -5.0, 0.7);
    // 1 + t/s > 1 sits on the cut of the pieces, but their sum is side independent.
    for (Cut cut : {Cut::AboveCut, Cut::BelowCut}) {
        const auto p = continuation_ratio(2.0, 0.45, cut);
        CHECK(close(p.sum(), f21_11(-0.5, 0.45), 1e-12));
        CHECK(std::abs(p.hypergeometric.imag()) > 1e-3);
    }
}

TEST_CASE("continuation through 1-1/z") {
    for (Complex z : {Complex{0.5}, Complex{-2.0}, Complex{0.9}, Complex{0.3, 0.8}}) {
        CHECK(close(continuation_inverted(z, 0.3).sum(), f21_11(z, 0.3), 1e-12));
    }
    for (Cut cut : {Cut::AboveCut, Cut::BelowCut, Cut::PrincipalValue}) {
        CHECK(close(continuation_inverted(2.5, 0.3, cut).sum(), f21_11(2.5, 0.3, cut), 1e-11));
    }
}

TEST_CASE("Pfaff route agrees with the continuation") {
    const double eps = 0.3;
    const Complex z = -2.0;
    const Complex pfaff = lerch_f21(1.0 - eps, z / (z - 1.0)) / (1.0 - z);
    CHECK(close(f21_11(z, eps), pfaff, 1e-13));
    CHECK(close(continuation_inverted(z, eps).sum(), pfaff, 1e-12));
}

TEST_CASE("continuation of 2F1(1,eps-delta;1-delta;x) at 1-x") {
    for (double x : {0.3, 0.8, 1.4}) {
        for (double delta : {0.01, -0.02}) {
            const auto p = continuation_delta(x, 0.35, delta);
            if (x < 1.0) {
                CHECK(close(p.sum(), f21_general_series(1.0, 0.35 - delta, 1.0 - delta, x), 1e-11));
            } else {
                // x > 1 is on the cut of the left side: compare with a point just off the axis.
                const Complex up = continuation_delta(x, 0.35, delta, Cut::AboveCut).sum();
                const Complex dn = continuation_delta(x, 0.35, delta, Cut::BelowCut).sum();
                CHECK(close(p.sum(), 0.5 * (up + dn), 1e-13));
            }
        }
    }
}

TEST_CASE("Appell F2 reduction") {
    CHECK(close(appell_f2_reduced(1, 1, 1.7, 0.0, 0.4), std::pow(0.6, -1.0), 1e-14));
    CHECK(close(appell_f2_reduced(1, 0.5, 1.7, 0.0, 0.4), std::pow(0.6, -0.5), 1e-14));
    CHECK(close(appell_f2_reduced(0.8, 0.3, 1.7, 0.25, 0.25),
                appell_f2_reduced(0.3, 0.8, 1.7, 0.25, 0.25), 1e-14));
}
