#pragma once

// Complex special functions used by the box evaluators: the Gamma family,
// the dilogarithm, and the Gauss hypergeometric families
//   L_nu(z) = 2F1(1, nu; nu+1; z)      (nu = eps, 1+eps, 1-eps, ...)
//   K_c(z)  = 2F1(1, 1; c; z)          (c = 2-eps, ...)
// with their analytic continuations off the unit disc.
//
// Branch conventions: principal logarithm; 2F1 and Li2 are cut along
// [1, inf). A real argument on the cut is resolved by Cut; PrincipalValue is
// the average of the two boundary values.

#include "mbbox/complex.hpp"

namespace mbbox::specfun {

Complex ln_gamma(Complex z);
Complex gamma(Complex z);
Complex digamma(Complex z);

/// k-th derivative of digamma by Richardson-extrapolated central differences.
/// k = 0 returns digamma itself.
Complex polygamma_fd(int k, Complex z);

Complex li2(Complex z, Cut cut = Cut::PrincipalValue);

/// 2F1(1, eps; eps+1; z).
Complex f21_1e(Complex z, double eps, Cut cut = Cut::PrincipalValue);
/// 2F1(1, 1+eps; 2+eps; z).
Complex f21_2e(Complex z, double eps, Cut cut = Cut::PrincipalValue);
/// 2F1(1, 1; 2-eps; z).
Complex f21_11(Complex z, double eps, Cut cut = Cut::PrincipalValue);

/// 2F1(1, nu; nu+1; z) for any real non-integer nu.
Complex lerch_f21(double nu, Complex z, Cut cut = Cut::PrincipalValue);
/// 2F1(1, 1; c; z) for real c with c-1 not an integer.
Complex f21_11c(double c, Complex z, Cut cut = Cut::PrincipalValue);

/// Plain Gauss series, |z| < 1 only.
Complex f21_general_series(double a, double b, double c, Complex z);

/// Two pieces of an analytic continuation; their sum is the continued value.
struct ContinuationPieces {
    Complex hypergeometric;
    Complex algebraic;
    Complex sum() const { return hypergeometric + algebraic; }
};

/// 2F1(1,1;2-eps; -s/t) rewritten through 2F1(1,eps;eps+1; 1+t/s).
/// The cut side refers to the argument 1+t/s.
ContinuationPieces continuation_ratio(Complex t_over_s, double eps, Cut cut = Cut::PrincipalValue);

/// 2F1(1,1;2-eps; z) rewritten through 2F1(1,eps;eps+1; 1-1/z).
/// The cut side refers to z (and is inherited by 1-1/z, which moves the same way).
ContinuationPieces continuation_inverted(Complex z, double eps, Cut cut = Cut::PrincipalValue);

/// 2F1(1, eps-delta; 1-delta; x) rewritten at 1-x for a numeric delta:
/// the first piece carries 2F1(1, eps-delta; 1+eps; 1-x), the second (1-x)^(-eps)(x)^delta.
ContinuationPieces continuation_delta(Complex x, double eps, double delta,
                                    Cut cut = Cut::PrincipalValue);

/// F2(alpha; beta, beta'; alpha, alpha; x, y) through its single-variable reduction.
Complex appell_f2_reduced(double beta, double beta_p, double alpha, Complex x, Complex y,
                          Cut cut = Cut::PrincipalValue);

namespace detail {
// Side-resolved cores (side = +1 above, -1 below). Exposed for the pipelines
// that need several pieces evaluated on one consistent side.
Complex li2_side(Complex z, int side);
Complex lerch_side(double nu, Complex z, int side);
Complex f21_11c_side(double c, Complex z, int side);
bool on_cut(Complex z) noexcept;
}  // namespace detail

}  // namespace mbbox::specfun
