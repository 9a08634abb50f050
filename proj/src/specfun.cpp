#include "mbbox/specfun.hpp"

#include <array>
#include <cmath>
#include <string>

namespace mbbox::specfun {
namespace {

// Lanczos approximation, g = 7, nine terms.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

const double kHalfLog2Pi = 0.5 * std::log(2.0 * kPi);

bool is_nonpositive_integer(Complex z) {
    return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::round(z.real());
}

// Principal ln Gamma for Re z >= 0.5.
Complex ln_gamma_lanczos(Complex z) {
    const Complex zm = z - 1.0;
    Complex sum = kLanczos[0];
    for (std::size_t i = 1; i < kLanczos.size(); ++i) {
        sum += kLanczos[i] / (zm + static_cast<double>(i));
    }
    const Complex t = zm + kLanczosG + 0.5;
    return kHalfLog2Pi + (zm + 0.5) * std::log(t) - t + std::log(sum);
}

// Asymptotic digamma, valid for Re z >= 10.
Complex digamma_asymptotic(Complex z) {
    // B_{2k} / (2k)
    constexpr std::array<double, 7> c = {1.0 / 12.0,  -1.0 / 120.0,         1.0 / 252.0,
                                         -1.0 / 240.0, 1.0 / 132.0, -691.0 / 32760.0,
                                         1.0 / 12.0};
    const Complex inv2 = 1.0 / (z * z);
    Complex pw = inv2;
    Complex tail = 0.0;
    for (double ck : c) {
        tail += ck * pw;
        pw *= inv2;
    }
    return std::log(z) - 0.5 / z - tail;
}

// Bernoulli numbers B_0, B_1, B_2, B_4, ..., B_40 in the order the dilogarithm
// series consumes them (B_n u^{n+1} / (n+1)!).
struct Li2Coefficients {
    std::array<double, 22> coeff{};  // coefficient of u^{n+1}, n = 0, 1, 2, 4, ...
    std::array<int, 22> power{};
    Li2Coefficients() {
        constexpr std::array<double, 20> b_even = {
            1.0 / 6.0,
            -1.0 / 30.0,
            1.0 / 42.0,
            -1.0 / 30.0,
            5.0 / 66.0,
            -691.0 / 2730.0,
            7.0 / 6.0,
            -3617.0 / 510.0,
            43867.0 / 798.0,
            -174611.0 / 330.0,
            854513.0 / 138.0,
            -236364091.0 / 2730.0,
            8553103.0 / 6.0,
            -23749461029.0 / 870.0,
            8615841276005.0 / 14322.0,
            -7709321041217.0 / 510.0,
            2577687858367.0 / 6.0,
            -26315271553053477373.0 / 1919190.0,
            2929993913841559.0 / 6.0,
            -261082718496449122051.0 / 13530.0};
        coeff[0] = 1.0;
        power[0] = 1;
        coeff[1] = -0.25;  // B_1 / 2!
        power[1] = 2;
        double fact = 1.0;  // (n+1)!, starting from n = 0
        int n = 0;
        for (std::size_t k = 0; k < b_even.size(); ++k) {
            // advance to n = 2k + 2
            fact *= static_cast<double>(n + 2) * static_cast<double>(n + 3);
            n += 2;
            coeff[k + 2] = b_even[k] / fact;
            power[k + 2] = n + 1;
        }
    }
};

const Li2Coefficients& li2_coefficients() {
    static const Li2Coefficients table;
    return table;
}

// |z| <= 1, Re z <= 1/2.
Complex li2_bernoulli(Complex z) {
    const Complex u = -std::log(1.0 - z);
    const auto& tab = li2_coefficients();
    const Complex u2 = u * u;
    Complex sum = tab.coeff[0] * u + tab.coeff[1] * u2;
    Complex pw = u;  // u^{n+1} for n = 0
    for (std::size_t k = 2; k < tab.coeff.size(); ++k) {
        pw *= u2;
        const Complex term = tab.coeff[k] * pw;
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum)) {
            break;
        }
    }
    return sum;
}

template <class F>
Complex average_sides(F&& fn) {
    return 0.5 * (fn(1) + fn(-1));
}

}  // namespace

Complex ln_gamma(Complex z) {
    if (is_nonpositive_integer(z)) {
        throw PoleError("ln_gamma: pole at z = " + std::to_string(z.real()));
    }
    if (z.real() >= 0.5) {
        return ln_gamma_lanczos(z);
    }
    if (z.real() < -20.0) {
        // Reflection; the imaginary part is fixed only modulo 2*pi here.
        return std::log(kPi) - std::log(std::sin(kPi * z)) - ln_gamma_lanczos(1.0 - z);
    }
    // Upward recurrence keeps the principal branch.
    const int n = static_cast<int>(std::ceil(0.5 - z.real()));
    Complex acc = 0.0;
    for (int k = 0; k < n; ++k) {
        acc += log_side(z + static_cast<double>(k), 1);
    }
    return ln_gamma_lanczos(z + static_cast<double>(n)) - acc;
}

Complex gamma(Complex z) {
    return ensure_finite(std::exp(ln_gamma(z)), "gamma");
}

Complex digamma(Complex z) {
    if (is_nonpositive_integer(z)) {
        throw PoleError("digamma: pole at z = " + std::to_string(z.real()));
    }
    if (z.real() < 0.5) {
        return digamma(1.0 - z) - kPi / std::tan(kPi * z);
    }
    Complex acc = 0.0;
    while (z.real() < 10.0) {
        acc -= 1.0 / z;
        z += 1.0;
    }
    return acc + digamma_asymptotic(z);
}

Complex polygamma_fd(int k, Complex z) {
    if (k < 0) {
        throw DomainError("polygamma_fd: negative order");
    }
    if (k == 0) {
        return digamma(z);
    }
    constexpr std::array<double, 4> steps = {1e-4, 2e-3, 5e-3, 1e-2};
    const double h = steps[std::min<std::size_t>(static_cast<std::size_t>(k - 1), steps.size() - 1)];
    auto central = [&](double step) {
        // k-th central difference, nodes at (k/2 - j) * step.
        Complex sum = 0.0;
        double binom = 1.0;
        for (int j = 0; j <= k; ++j) {
            const double offset = (0.5 * k - j) * step;
            const double sign = (j % 2 == 0) ? 1.0 : -1.0;
            sum += sign * binom * digamma(z + offset);
            binom = binom * static_cast<double>(k - j) / static_cast<double>(j + 1);
        }
        return sum / std::pow(step, k);
    };
    const Complex coarse = central(h);
    const Complex fine = central(0.5 * h);
    return (4.0 * fine - coarse) / 3.0;
}

namespace detail {

bool on_cut(Complex z) noexcept {
    return z.imag() == 0.0 && z.real() > 1.0;
}

Complex li2_side(Complex z, int side) {
    if (z == Complex{}) {
        return 0.0;
    }
    if (z == Complex{1.0, 0.0}) {
        return kZeta2;
    }
    if (std::abs(z) > 1.0) {
        // -z lies on the opposite side of the real axis from z.
        const Complex l = log_side(-z, -side);
        return -li2_side(1.0 / z, -side) - kZeta2 - 0.5 * l * l;
    }
    if (z.real() > 0.5) {
        return -li2_bernoulli(1.0 - z) + kZeta2 - std::log(z) * std::log(1.0 - z);
    }
    return li2_bernoulli(z);
}

}  // namespace detail

Complex li2(Complex z, Cut cut) {
    if (!is_finite(z)) {
        throw DomainError("li2: non-finite argument");
    }
    if (detail::on_cut(z)) {
        if (cut == Cut::PrincipalValue) {
            return average_sides([&](int s) { return detail::li2_side(z, s); });
        }
        return detail::li2_side(z, side_of(cut));
    }
    return ensure_finite(detail::li2_side(z, 1), "li2");
}

}  // namespace mbbox::specfun
