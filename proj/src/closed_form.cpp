#include "mbbox/closed_form.hpp"

#include <cmath>

#include "mbbox/specfun.hpp"

namespace mbbox {

using specfun::f21_1e;
using specfun::f21_2e;
using specfun::ln_gamma;

namespace {

void require_massless(const Kinematics& k) {
    validate(k);
    if (k.msq) {
        throw DomainError("massless box called with an external mass");
    }
}

double require_mass(const Kinematics& k) {
    validate(k);
    if (!k.msq) {
        throw DomainError("one-mass box called without m^2");
    }
    return *k.msq;
}

// Gamma^2(eps)/Gamma(2 eps) * Gamma(1-eps), in log space.
double log_gamma_block(double eps) {
    return (2.0 * ln_gamma(eps) - ln_gamma(2.0 * eps) + ln_gamma(1.0 - eps)).real();
}

// (-x)^eps for x < 0.
double neg_pow(double x, double eps) { return std::pow(-x, eps); }

void add_imag_diagnostic(BoxValue& v) {
    const double mag = std::abs(v.value);
    v.diagnostics["imag_over_abs"] = mag > 0.0 ? std::abs(v.value.imag()) / mag : 0.0;
}

struct OneMassArgs {
    double zs, zt, zm;
};

OneMassArgs onemass_args(const Kinematics& k, double m) {
    const double sum = k.s + k.t - m;
    return {sum / k.t, sum / k.s, m * sum / (k.s * k.t)};
}

}  // namespace

double box_prefactor(double eps) {
    return std::exp(log_gamma_block(eps) - std::log(eps));
}

OneMassAux onemass_aux(const Kinematics& k) {
    const double m = require_mass(k);
    return {(m - k.t) / (m - k.t - k.s), m / (m - k.s)};
}

BoxValue massless_box(const Kinematics& k, Cut cut) {
    require_massless(k);
    const double e = k.eps;
    const double pref = box_prefactor(e) / (k.s * k.t);
    BoxValue out;
    out.method = Method::ClosedForm;
    out.pieces["s_channel"] = pref * neg_pow(k.s, e) * f21_1e(1.0 + k.s / k.t, e, cut);
    out.pieces["t_channel"] = pref * neg_pow(k.t, e) * f21_1e(1.0 + k.t / k.s, e, cut);
    out.value = ensure_finite(out.pieces["s_channel"] + out.pieces["t_channel"], "massless_box");
    add_imag_diagnostic(out);
    return out;
}

BoxValue massless_box_alt(const Kinematics& k, Cut cut) {
    require_massless(k);
    const double e = k.eps;
    const double st = k.s * k.t;
    const double pole = box_prefactor(e) / st;
    const double reg = std::exp(log_gamma_block(e)) / ((1.0 + e) * st);
    const double zs = 1.0 + k.s / k.t;
    const double zt = 1.0 + k.t / k.s;
    BoxValue out;
    out.method = Method::ClosedFormAlt;
    out.pieces["pole"] = pole * (neg_pow(k.s, e) + neg_pow(k.t, e));
    out.pieces["regular"] = reg * (neg_pow(k.s, e) * zs * f21_2e(zs, e, cut) +
                                   neg_pow(k.t, e) * zt * f21_2e(zt, e, cut));
    out.value = ensure_finite(out.pieces["pole"] + out.pieces["regular"], "massless_box_alt");
    add_imag_diagnostic(out);
    return out;
}

namespace {

// 2 Gamma(1-eps) Gamma^2(1+eps) / (Gamma(1+2 eps) eps^2), through eps^(order-2).
RegulatorSeries normalization_series(int order) {
    const auto g1m = gamma_series(1.0, order).scaled(-1.0);
    const auto g1p = gamma_series(1.0, order);
    const auto g12 = gamma_series(1.0, order).scaled(2.0);
    return (g1m * g1p * g1p / g12).shifted(-2) * Complex(2.0);
}

// 1/(1+eps) z 2F1(1,1+eps;2+eps;z) = -log(1-z) - eps Li2(z), as a series.
RegulatorSeries t_series(double z) {
    return f21_2e_expansion(z, 1, Cut::PrincipalValue);
}

}  // namespace

RegulatorSeries massless_box_laurent(const Kinematics& k) {
    require_massless(k);
    const double st = k.s * k.t;
    const auto pref = normalization_series(2) * Complex(1.0 / st);
    const Complex c = specfun::li2(-k.s / k.t) + specfun::li2(-k.t / k.s) - kPi * kPi / 3.0;
    const auto bracket = power_series(-k.s, 2) + power_series(-k.t, 2) +
                         RegulatorSeries::monomial(c, 2, 2);
    return pref * bracket;
}

BoxValue onemass_box(const Kinematics& k, Cut cut) {
    const double m = require_mass(k);
    const double e = k.eps;
    const double pref = box_prefactor(e) / (k.s * k.t);
    const auto a = onemass_args(k, m);
    BoxValue out;
    out.method = Method::ClosedForm;
    const Complex s_term = pref * neg_pow(k.s, e) * f21_1e(a.zs, e, cut);
    const Complex m_term = pref * neg_pow(m, e) * f21_1e(a.zm, e, cut);
    out.pieces["I1"] = s_term - m_term;
    out.pieces["I2"] = pref * neg_pow(k.t, e) * f21_1e(a.zt, e, cut);
    out.value = ensure_finite(out.pieces["I1"] + out.pieces["I2"], "onemass_box");
    add_imag_diagnostic(out);
    return out;
}

BoxValue onemass_box_alt(const Kinematics& k, Cut cut) {
    const double m = require_mass(k);
    const double e = k.eps;
    const double st = k.s * k.t;
    const double pole = box_prefactor(e) / st;
    const double reg = std::exp(log_gamma_block(e)) / ((1.0 + e) * st);
    const auto a = onemass_args(k, m);
    BoxValue out;
    out.method = Method::ClosedFormAlt;
    out.pieces["pole"] = pole * (neg_pow(k.s, e) + neg_pow(k.t, e) - neg_pow(m, e));
    out.pieces["regular"] = reg * (neg_pow(k.s, e) * a.zs * f21_2e(a.zs, e, cut) +
                                   neg_pow(k.t, e) * a.zt * f21_2e(a.zt, e, cut) -
                                   neg_pow(m, e) * a.zm * f21_2e(a.zm, e, cut));
    out.value = ensure_finite(out.pieces["pole"] + out.pieces["regular"], "onemass_box_alt");
    add_imag_diagnostic(out);
    return out;
}

RegulatorSeries onemass_box_laurent(const Kinematics& k) {
    const double m = require_mass(k);
    const double st = k.s * k.t;
    const auto a = onemass_args(k, m);
    // Gamma^2(eps)/Gamma(2 eps) Gamma(1-eps) is eps times the normalization series.
    const auto pole_pref = normalization_series(2) * Complex(1.0 / st);
    const auto reg_pref = pole_pref.shifted(1);
    const auto pole = pole_pref * (power_series(-k.s, 2) + power_series(-k.t, 2) -
                                   power_series(-m, 2));
    const auto regular = reg_pref * (power_series(-k.s, 1) * t_series(a.zs) +
                                     power_series(-k.t, 1) * t_series(a.zt) -
                                     power_series(-m, 1) * t_series(a.zm));
    return pole + regular;
}

Complex onemass_dilog_combination(const Kinematics& k, Cut cut) {
    const double m = require_mass(k);
    return specfun::li2((m - k.t) / k.s, cut) + specfun::li2((m - k.s) / k.t, cut) -
           specfun::li2((m - k.s) * (m - k.t) / (k.s * k.t), cut) - kZeta2;
}

}  // namespace mbbox
