#include <cmath>
#include <string>

#include "mbbox/specfun.hpp"

namespace mbbox::specfun {
namespace {

constexpr int kMaxTerms = 100000;
constexpr double kSeriesTol = 1e-16;
// Largest transformed modulus accepted before declaring non-convergence.
constexpr double kMaxModulus = 0.97;

// Sums terms produced by next(n) -> term_n until two successive increments are
// below kSeriesTol * |partial sum|.
template <class Next>
Complex sum_series(Next&& next, const char* what) {
    Complex sum = 0.0;
    int quiet = 0;
    for (int n = 0; n < kMaxTerms; ++n) {
        const Complex term = next(n);
        sum += term;
        if (std::abs(term) <= kSeriesTol * std::abs(sum)) {
            if (++quiet == 2) {
                return sum;
            }
        } else {
            quiet = 0;
        }
    }
    throw NonConvergence(std::string(what) + ": series did not converge");
}

// nu * sum z^n / (n + nu)
Complex lerch_direct(double nu, Complex z) {
    Complex zn = 1.0;
    return sum_series(
        [&](int n) {
            const Complex term = zn * (nu / (n + nu));
            zn *= z;
            return term;
        },
        "2F1(1,nu;nu+1;z)");
}

// sum n! / (c)_n z^n
Complex f21_11c_direct(double c, Complex z) {
    Complex term = 1.0;
    return sum_series(
        [&](int n) {
            const Complex out = term;
            term *= z * ((n + 1.0) / (c + n));
            return out;
        },
        "2F1(1,1;c;z)");
}

// Degenerate c = a + b expansion around z = 1:
// nu * sum (nu)_n / n! [psi(n+1) - psi(n+nu) - log(1-z)] (1-z)^n
Complex lerch_around_one(double nu, Complex z, int side) {
    const Complex w = 1.0 - z;
    // 1-z moves opposite to z.
    const Complex log_w = log_side(w, -side);
    double psi_n1 = -kEulerGamma;              // psi(1)
    double psi_nnu = digamma(Complex{nu}).real();  // psi(nu)
    double poch = 1.0;                         // (nu)_n / n!
    Complex wn = 1.0;
    const Complex sum = sum_series(
        [&](int n) {
            const Complex term = poch * (psi_n1 - psi_nnu - log_w) * wn;
            poch *= (nu + n) / (n + 1.0);
            psi_n1 += 1.0 / (n + 1.0);
            psi_nnu += 1.0 / (n + nu);
            wn *= w;
            return term;
        },
        "2F1(1,nu;nu+1;z) near z=1");
    return nu * sum;
}

bool is_integer(double x) {
    return x == std::round(x);
}

template <class F>
Complex resolve(Complex z, Cut cut, bool sensitive, F&& fn) {
    if (sensitive) {
        if (cut == Cut::PrincipalValue) {
            return 0.5 * (fn(1) + fn(-1));
        }
        return fn(side_of(cut));
    }
    return fn(z.imag() < 0.0 ? -1 : 1);
}

// Prefactor Gamma(eps)^2 / (Gamma(1+eps) Gamma(eps-1)), formed in log space.
Complex hypergeometric_prefactor(double eps) {
    return std::exp(2.0 * ln_gamma(eps) - ln_gamma(1.0 + eps) - ln_gamma(eps - 1.0));
}

// Gamma(eps)^2 Gamma(1-eps) / Gamma(eps-1).
Complex algebraic_prefactor(double eps) {
    return std::exp(2.0 * ln_gamma(eps) + ln_gamma(1.0 - eps) - ln_gamma(eps - 1.0));
}

}  // namespace

namespace detail {

Complex lerch_side(double nu, Complex z, int side) {
    if (is_integer(nu)) {
        throw DomainError("2F1(1,nu;nu+1;z): integer nu is not supported");
    }
    if (z == Complex{}) {
        return 1.0;
    }
    if (z == Complex{1.0, 0.0}) {
        throw PoleError("2F1(1,nu;nu+1;z): logarithmic singularity at z = 1");
    }
    const double r_direct = std::abs(z);
    const double r_one = std::abs(1.0 - z);
    const double r_inv = 1.0 / r_direct;
    const double r_pfaff = std::abs(z / (z - 1.0));
    const double best = std::min({r_direct, r_one, r_inv, r_pfaff});
    if (best > kMaxModulus) {
        throw NonConvergence("2F1(1,nu;nu+1;z): no convergent transformation near z = " +
                             std::to_string(z.real()) + "+" + std::to_string(z.imag()) + "i");
    }
    if (best == r_direct) {
        return lerch_direct(nu, z);
    }
    if (best == r_one) {
        return lerch_around_one(nu, z, side);
    }
    if (best == r_inv) {
        // -z moves opposite to z.
        const Complex reflected = kPi * nu / std::sin(kPi * nu);
        return nu / ((1.0 - nu) * z) * lerch_direct(1.0 - nu, 1.0 / z) +
               reflected * pow_side(-z, -nu, -side);
    }
    return f21_11c_direct(1.0 + nu, z / (z - 1.0)) / (1.0 - z);
}

Complex f21_11c_side(double c, Complex z, int side) {
    if (is_integer(c - 1.0)) {
        throw DomainError("2F1(1,1;c;z): integer c is not supported");
    }
    if (z == Complex{1.0, 0.0}) {
        throw PoleError("2F1(1,1;c;z): singular at z = 1");
    }
    if (std::abs(z) <= 0.5) {
        return f21_11c_direct(c, z);
    }
    // Pfaff: z/(z-1) moves opposite to z.
    return lerch_side(c - 1.0, z / (z - 1.0), -side) / (1.0 - z);
}

}  // namespace detail

Complex lerch_f21(double nu, Complex z, Cut cut) {
    return ensure_finite(resolve(z, cut, detail::on_cut(z),
                                 [&](int s) { return detail::lerch_side(nu, z, s); }),
                         "2F1(1,nu;nu+1;z)");
}

Complex f21_11c(double c, Complex z, Cut cut) {
    return ensure_finite(resolve(z, cut, detail::on_cut(z),
                                 [&](int s) { return detail::f21_11c_side(c, z, s); }),
                         "2F1(1,1;c;z)");
}

Complex f21_1e(Complex z, double eps, Cut cut) {
    if (!(eps > 0.0 && eps < 1.0)) {
        throw DomainError("f21_1e: eps must lie in (0, 1)");
    }
    return lerch_f21(eps, z, cut);
}

Complex f21_2e(Complex z, double eps, Cut cut) {
    if (!(eps > 0.0 && eps < 1.0)) {
        throw DomainError("f21_2e: eps must lie in (0, 1)");
    }
    return lerch_f21(1.0 + eps, z, cut);
}

Complex f21_11(Complex z, double eps, Cut cut) {
    if (!(eps > 0.0 && eps < 1.0)) {
        throw DomainError("f21_11: eps must lie in (0, 1)");
    }
    return f21_11c(2.0 - eps, z, cut);
}

Complex f21_general_series(double a, double b, double c, Complex z) {
    if (c <= 0.0 && is_integer(c)) {
        throw DomainError("f21_general_series: c is a non-positive integer");
    }
    if (!(std::abs(z) < 1.0)) {
        throw NonConvergence("f21_general_series: |z| must be < 1");
    }
    Complex term = 1.0;
    return sum_series(
        [&](int n) {
            const Complex out = term;
            term *= z * ((a + n) * (b + n) / ((c + n) * (n + 1.0)));
            return out;
        },
        "2F1(a,b;c;z)");
}

ContinuationPieces continuation_ratio(Complex t_over_s, double eps, Cut cut) {
    const Complex zp = 1.0 + t_over_s;
    const Complex c_hyp = hypergeometric_prefactor(eps);
    const Complex c_alg = algebraic_prefactor(eps);
    const Complex mass = std::pow(1.0 + 1.0 / t_over_s, -eps);
    auto pieces = [&](int side) {
        ContinuationPieces p;
        p.hypergeometric = -t_over_s * c_hyp * detail::lerch_side(eps, zp, side);
        // -t/s = 1 - zp moves opposite to zp.
        p.algebraic = -pow_side(-t_over_s, 1.0 - eps, -side) * c_alg * mass;
        return p;
    };
    if (detail::on_cut(zp)) {
        if (cut == Cut::PrincipalValue) {
            const auto up = pieces(1);
            const auto down = pieces(-1);
            return {0.5 * (up.hypergeometric + down.hypergeometric),
                    0.5 * (up.algebraic + down.algebraic)};
        }
        return pieces(side_of(cut));
    }
    return pieces(zp.imag() < 0.0 ? -1 : 1);
}

ContinuationPieces continuation_inverted(Complex z, double eps, Cut cut) {
    if (z == Complex{}) {
        throw DomainError("continuation_inverted: z = 0");
    }
    const Complex c_hyp = hypergeometric_prefactor(eps);
    const Complex c_alg = algebraic_prefactor(eps);
    auto pieces = [&](int side) {
        ContinuationPieces p;
        // 1 - 1/z moves with z; 1 - z against it.
        p.hypergeometric = c_hyp / z * detail::lerch_side(eps, 1.0 - 1.0 / z, side);
        p.algebraic = -c_alg * pow_side(z, eps - 1.0, side) * pow_side(1.0 - z, -eps, -side);
        return p;
    };
    const bool sensitive = z.imag() == 0.0 && (z.real() < 0.0 || z.real() > 1.0);
    if (sensitive) {
        if (cut == Cut::PrincipalValue) {
            const auto up = pieces(1);
            const auto down = pieces(-1);
            return {0.5 * (up.hypergeometric + down.hypergeometric),
                    0.5 * (up.algebraic + down.algebraic)};
        }
        return pieces(side_of(cut));
    }
    return pieces(z.imag() < 0.0 ? -1 : 1);
}

ContinuationPieces continuation_delta(Complex x, double eps, double delta, Cut cut) {
    const Complex w = 1.0 - x;
    const Complex c1 = std::exp(ln_gamma(1.0 - delta) + ln_gamma(-eps) - ln_gamma(-delta) -
                                ln_gamma(1.0 - eps));
    const Complex c2 = std::exp(ln_gamma(1.0 - delta) + ln_gamma(eps) - ln_gamma(eps - delta));
    const Complex hyp = f21_general_series(1.0, eps - delta, 1.0 + eps, w);
    auto pieces = [&](int side) {
        ContinuationPieces p;
        p.hypergeometric = c1 * hyp;
        p.algebraic = c2 * pow_side(w, -eps, -side) * pow_side(x, delta, side);
        return p;
    };
    const bool sensitive = x.imag() == 0.0 && (x.real() < 0.0 || x.real() > 1.0);
    if (sensitive && cut == Cut::PrincipalValue) {
        const auto up = pieces(1);
        const auto down = pieces(-1);
        return {up.hypergeometric, 0.5 * (up.algebraic + down.algebraic)};
    }
    return pieces(sensitive ? side_of(cut) : 1);
}

Complex appell_f2_reduced(double beta, double beta_p, double alpha, Complex x, Complex y,
                          Cut cut) {
    const Complex w = x * y / ((1.0 - x) * (1.0 - y));
    const Complex scale = std::pow(1.0 - x, -beta) * std::pow(1.0 - y, -beta_p);
    if (beta == 1.0 && beta_p == 1.0) {
        return scale * f21_11c(alpha, w, cut);
    }
    return scale * f21_general_series(beta, beta_p, alpha, w);
}

}  // namespace mbbox::specfun
