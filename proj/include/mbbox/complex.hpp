#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <string_view>

#include "mbbox/errors.hpp"

namespace mbbox {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kEulerGamma = std::numbers::egamma;
inline constexpr double kZeta2 = kPi * kPi / 6.0;

/// Which boundary value to take for an argument lying exactly on a branch cut.
enum class Cut { PrincipalValue, AboveCut, BelowCut };

/// +1 above, -1 below. PrincipalValue has no side and must be resolved first.
constexpr int side_of(Cut cut) noexcept {
    return cut == Cut::AboveCut ? 1 : (cut == Cut::BelowCut ? -1 : 0);
}

constexpr Cut cut_of(int side) noexcept {
    return side > 0 ? Cut::AboveCut : (side < 0 ? Cut::BelowCut : Cut::PrincipalValue);
}

inline bool is_finite(Complex z) noexcept {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

inline Complex ensure_finite(Complex z, std::string_view what) {
    if (!is_finite(z)) {
        throw OverflowError(std::string(what) + ": result is not finite");
    }
    return z;
}

/// Natural log where a negative real argument is read as x + i*side*0.
/// side = 0 falls back to the principal branch (arg = +pi).
inline Complex log_side(Complex z, int side) {
    if (z.imag() == 0.0 && z.real() < 0.0) {
        const double arg = side < 0 ? -kPi : kPi;
        return {std::log(-z.real()), arg};
    }
    return std::log(z);
}

/// z^p on the same convention as log_side.
inline Complex pow_side(Complex z, Complex p, int side) {
    if (z == Complex{}) {
        return p.real() > 0.0 ? Complex{} : Complex{INFINITY, 0.0};
    }
    return std::exp(p * log_side(z, side));
}

}  // namespace mbbox
