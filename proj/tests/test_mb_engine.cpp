#include <cmath>
#include <vector>

#include "doctest.h"
#include "mbbox/closed_form.hpp"
#include "mbbox/mb_engine.hpp"
#include "mbbox/oracles.hpp"
#include "mbbox/specfun.hpp"

using namespace mbbox;
using namespace mbbox::mb;

namespace {
bool close(Complex a, Complex b, double tol) {
    return std::abs(a - b) <= tol * std::abs(b);
}
Kinematics kin(double s, double t, double eps) { return {s, t, std::nullopt, eps}; }
Kinematics kin(double s, double t, double m, double eps) { return {s, t, m, eps}; }
double g(double x) { return specfun::gamma(x).real(); }
}  // namespace

TEST_CASE("massless contour selection") {
    CHECK(select_contour_massless(0.4).abscissa == doctest::Approx(-0.8).epsilon(1e-15));
    CHECK(select_contour_massless(0.99).abscissa == doctest::Approx(-0.505).epsilon(1e-15));
    for (double e : {0.1, 0.4, 0.99}) {
        CHECK(massless_contour_feasible(select_contour_massless(e).abscissa, e));
        CHECK_FALSE(massless_contour_feasible(0.0, e));
        CHECK_FALSE(massless_contour_feasible(-1.0, e));
        CHECK_FALSE(massless_contour_feasible(e - 1.0, e));
    }
    CHECK_THROWS_AS(select_contour_massless(1.0), InfeasibleContour);
    CHECK_THROWS_AS(select_contour_massless(0.0), InfeasibleContour);
    const auto c = select_contour_massless(kin(-1, -3, 0.3));
    CHECK(c.height == doctest::Approx(40.0 + 10.0 * std::log(4.0)));
    CHECK(c.nodes >= 32);

    int doubles = 0;
    for (const auto& f : massless_pole_families()) doubles += f.multiplicity == 2;
    CHECK(doubles == 2);
}

TEST_CASE("massless integrand") {
    const auto k = kin(-1, -2, 0.3);
    const double c = select_contour_massless(0.3).abscissa;
    const Complex w{c, 1.7};
    CHECK(close(mb_massless_integrand(std::conj(w), k), std::conj(mb_massless_integrand(w, k)),
                1e-14));
    const double top = std::abs(mb_massless_integrand({c, 30.0}, k));
    CHECK(top <= 1e-12 * std::abs(mb_massless_integrand({c, 0.0}, k)));
    CHECK_THROWS_AS(mb_massless_integrand(0.0, k), PoleError);
    CHECK_THROWS_AS(mb_massless_integrand(-1.0, k), PoleError);
    CHECK_THROWS_AS(mb_massless_integrand(-0.7, k), PoleError);

    // Residue at w = 0 of Gamma(-w): the first right-closure term.
    const double e = 0.3, s = -1.0;
    const double expect = std::pow(-s, e - 2.0) * g(2.0 - e) * g(e - 1.0) * g(e - 1.0) / g(2.0 * e);
    CHECK(close(massless_residue_at(0.0, 0.1, k), -expect, 1e-12));
}

TEST_CASE("massless contour quadrature") {
    const auto k = kin(-1, -2, 0.3);
    const auto spec = select_contour_massless(k);
    const auto v = mb_massless_eval(k, spec);
    CHECK(v.method == Method::MellinBarnes);
    CHECK(close(v.value, massless_box(k).value, 1e-8));
    CHECK(v.diagnostics.at("node_doubling_delta") < v.diagnostics.at("error_estimate"));
    CHECK(v.diagnostics.at("tail_estimate") < 1e-12 * std::abs(v.value));
    for (double a : {-0.95, -0.9, -0.75}) {
        auto moved = spec;
        moved.abscissa = a;
        CHECK(close(mb_massless_eval(k, moved).value, v.value, 1e-10));
    }
    const auto sym = mb_massless_eval(kin(-1, -1, 0.3), select_contour_massless(0.3));
    CHECK(std::abs(sym.value.imag()) <= 1e-10 * std::abs(sym.value));

    auto ts = spec;
    ts.rule = Rule::TanhSinh;
    CHECK(close(mb_massless_eval(k, ts).value, v.value, 1e-8));

    auto bad = spec;
    bad.abscissa = 0.1;
    CHECK_THROWS_AS(mb_massless_eval(k, bad), InfeasibleContour);
    bad = spec;
    bad.nodes = 16;
    CHECK_THROWS_AS(mb_massless_eval(k, bad), InfeasibleContour);
    CHECK_THROWS_AS(mb_massless_eval(kin(-1, -2, -0.5, 0.3), spec), DomainError);
}

TEST_CASE("massless residue reconstruction") {
    for (double s : {-0.5, -1.0, -3.0}) {
        for (double t : {-0.5, -1.0, -3.0}) {
            const auto k = kin(s, t, 0.3);
            const Complex exact = massless_box(k).value;
            const auto b = residue_massless(k);
            const Complex total = b.pieces.at("total");
            CHECK(close(total, exact, 1e-10));
            CHECK(std::abs(b.delta_pole_coefficient) <= 1e-12 * std::abs(total));
            CHECK(std::abs(b.pieces.at("spurious_sum")) <= 1e-11 * std::abs(total));
            CHECK(close(b.pieces.at("I1") + b.pieces.at("I2a") + b.pieces.at("I2b"), total, 1e-15));
            // Each side alone is also complete, and its spurious terms cancel.
            for (Cut c : {Cut::AboveCut, Cut::BelowCut}) {
                const auto side = residue_massless(k, c);
                CHECK(close(side.pieces.at("total"), exact, 1e-10));
                CHECK(std::abs(side.pieces.at("spurious_sum")) <= 1e-11 * std::abs(total));
            }
        }
    }
    // The singular terms of the two delta pieces are equal and opposite.
    const auto b = residue_massless(kin(-1, -2, 0.3));
    CHECK(std::abs(b.pieces.at("I2a.pole")) > 1.0);
    CHECK(close(b.pieces.at("I2a.pole"), -b.pieces.at("I2b.pole"), 1e-12));
}

TEST_CASE("left and right closure agree") {
    const auto k = kin(-1, -0.5, 0.3);
    const auto right = massless_residue_sum(k, Direction::Right, 50);
    const Complex left = residue_massless(k).pieces.at("total");
    CHECK(right.terms == 50);
    CHECK(right.tail_estimate < 1e-12);
    CHECK(close(right.value, left, 1e-9));
    const auto k2 = kin(-0.5, -1, 0.45);
    CHECK(close(massless_residue_sum(k2, Direction::Left, 50).value,
                residue_massless(k2).pieces.at("total"), 1e-9));
}

TEST_CASE("one-mass contour selection") {
    const auto c = select_contour_onemass(0.4);
    CHECK(c.beta.abscissa == doctest::Approx(-0.8).epsilon(1e-15));
    CHECK(c.alpha.abscissa == doctest::Approx(-0.1).epsilon(1e-14));
    for (double e : {0.2, 0.5, 0.8}) {
        const auto ce = select_contour_onemass(e);
        const auto args = onemass_gamma_arguments(ce.alpha.abscissa, ce.beta.abscissa, e);
        CHECK(args.size() == 7);
        for (double a : args) CHECK(a > 0.0);
    }
    CHECK_THROWS_AS(select_contour_onemass(1.0), InfeasibleContour);
    CHECK_THROWS_AS(select_contour_onemass(1.5), InfeasibleContour);
    CHECK_FALSE(onemass_contour_feasible(-0.1, -0.9, 0.3));
}

TEST_CASE("one-mass contour quadrature") {
    const auto k = kin(-1, -2, -0.5, 0.3);
    const auto c = select_contour_onemass(0.3);
    const auto v = mb_onemass_eval(k, c.alpha, c.beta);
    CHECK(close(v.value, onemass_box(k).value, 1e-6));
    CHECK(v.diagnostics.at("node_doubling_delta") < v.diagnostics.at("error_estimate"));

    auto ca = c.alpha, cb = c.beta;
    ca.abscissa = -0.05;
    cb.abscissa = -0.85;
    CHECK(close(mb_onemass_eval(k, ca, cb).value, v.value, 1e-8));

    // Integrand at a generic point against its product form.
    const Complex a{-0.1, 0.4}, b{-0.85, -0.3};
    const double e = 0.3, s = -1, t = -2, m = -0.5;
    using specfun::gamma;
    const Complex direct = std::pow(-t, e - 2.0) / g(2 * e) * std::pow(s / t, b) * gamma(-b) *
                           gamma(1.0 + b) * gamma(e - 1.0 - b) * std::pow(m / t, a) * gamma(-a) *
                           gamma(e - 1.0 - a - b) * gamma(2.0 - e + a + b) * gamma(1.0 + a + b);
    CHECK(close(mb_onemass_integrand(a, b, k), direct, 1e-12));

    // Small mass: approaches the massless value from below.
    const double massless = massless_box(kin(-1, -2, 0.3)).value.real();
    double prev = 0.0;
    for (double msq : {-1e-2, -1e-4}) {
        const double x = mb_onemass_eval(kin(-1, -2, msq, 0.3), c.alpha, c.beta).value.real();
        CHECK(std::abs(x - massless) < std::abs(prev - massless));
        prev = x;
    }
    CHECK_THROWS_AS(mb_onemass_eval(kin(-1, -2, 0.3), c.alpha, c.beta), DomainError);
}

TEST_CASE("one-mass residue reconstruction") {
    const std::vector<double> vals{-0.5, -1.0, -2.0};
    int points = 0;
    for (double s : vals) {
        for (double t : vals) {
            for (double m : vals) {
                const auto k = kin(s, t, m, 0.3);
                try {
                    validate(k);
                } catch (const DegenerateKinematics&) {
                    continue;
                }
                ++points;
                const Complex exact = onemass_box(k).value;
                const auto b = residue_onemass(k);
                CHECK(close(b.pieces.at("total"), exact, 1e-10));
                CHECK(std::abs(b.pieces.at("spurious_sum")) <= 1e-11 * std::abs(exact));
                CHECK(b.delta_pole_coefficient == Complex{});
                for (Cut c : {Cut::AboveCut, Cut::BelowCut}) {
                    CHECK(close(residue_onemass(k, c).pieces.at("total"), exact, 1e-10));
                }
            }
        }
    }
    CHECK(points == 10);

    // First alpha family against the F2 double series where it converges.
    const double e = 0.3, s = -0.2, t = -0.3, m = -2.0;
    const auto b = residue_onemass(kin(s, t, m, e));
    const double c = g(e) * g(1 - e) * g(e - 1) / g(2 * e);
    const Complex f2 = oracles::f2_double_series(2 - e, 1, 1, 2 - e, 2 - e, t / m, s / m);
    CHECK(close(b.pieces.at("Im2a"), -c * std::pow(-m, e - 2) * f2, 1e-12));
}
