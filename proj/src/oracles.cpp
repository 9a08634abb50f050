#include "mbbox/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "mbbox/quadrature.hpp"
#include "mbbox/specfun.hpp"

namespace mbbox::oracles {

IntegrandSpec integrand_spec(IntegrandKind kind, double eps) {
    IntegrandSpec spec{kind, {}};
    switch (kind) {
        case IntegrandKind::MasslessZ:
            spec.singular_exponents = {{0.0, eps - 1.0}, {1.0, eps - 1.0}};
            break;
        case IntegrandKind::OneMassZ:
            spec.singular_exponents = {{1.0, eps - 1.0}};
            break;
        case IntegrandKind::EulerF21:
            spec.singular_exponents = {{0.0, eps - 1.0}};
            break;
        case IntegrandKind::BetaY:
            spec.singular_exponents = {{0.0, eps - 1.0}, {1.0, eps - 1.0}};
            break;
        case IntegrandKind::F2DoubleSeries:
            break;
    }
    for (const auto& [end, power] : spec.singular_exponents) {
        if (!(power > -1.0)) {
            std::ostringstream os;
            os << "integrand is not integrable at z = " << end << " (exponent " << power << ")";
            throw DomainError(os.str());
        }
    }
    return spec;
}

namespace {

// [A^(eps-1) - B^(eps-1)] / (B - A), written so that A ~ B loses nothing.
double kernel(double a, double b, double eps) {
    const double l = std::log(a / b);
    if (l == 0.0) {
        return (1.0 - eps) * std::pow(b, eps - 2.0);
    }
    return std::pow(b, eps - 2.0) * std::expm1((eps - 1.0) * l) / (-std::expm1(l));
}

double gamma_block(double eps) {
    using specfun::ln_gamma;
    return std::exp((2.0 * ln_gamma(eps) - ln_gamma(2.0 * eps) + ln_gamma(1.0 - eps)).real());
}

// Integral over z in [0, 1] of kernel(A(z), B(z)), split at 1/2; each half is
// mapped by z = v^(1/eps)/2 (mirrored) so the endpoint powers become bounded.
struct Split {
    quad::QuadResult left, right;
};

template <class AB>
Split integrate_split(AB&& ab, double eps, const OracleOptions& opt) {
    const double inv = 1.0 / eps;
    const double jac = 0.5 * inv;
    auto half = [&](bool near_zero) {
        // Below v_min the mapped integrand is constant to O(1e-150); clamping keeps
        // the powers away from underflow.
        const double v_min = std::pow(2e-150, eps);
        auto f = [&](double v, double, double) -> Complex {
            v = std::max(v, v_min);
            const double d = 0.5 * std::pow(v, inv);  // distance from the endpoint
            const double dz = jac * std::pow(v, inv - 1.0);
            const double z = near_zero ? d : 1.0 - d;
            const double omz = near_zero ? 1.0 - d : d;
            const auto [a, b] = ab(z, omz);
            return kernel(a, b, eps) * dz;
        };
        return quad::tanh_sinh(f, 0.0, 1.0, opt.rel_tol, opt.max_level);
    };
    return {half(true), half(false)};
}

BoxValue finish(const Split& sp, double eps, const OracleOptions& opt, const char* what) {
    BoxValue out;
    out.method = Method::FeynmanQuadrature;
    const double g = gamma_block(eps);
    out.pieces["z_below_half"] = g * sp.left.value;
    out.pieces["z_above_half"] = g * sp.right.value;
    out.value = out.pieces["z_below_half"] + out.pieces["z_above_half"];
    const double err = g * (sp.left.error + sp.right.error);
    out.diagnostics["error_estimate"] = err;
    out.diagnostics["evaluations"] = sp.left.evaluations + sp.right.evaluations;
    if (err > 100.0 * opt.rel_tol * std::abs(out.value)) {
        std::ostringstream os;
        os << what << ": quadrature did not reach the requested tolerance (error " << err << ")";
        throw NotConverged(os.str());
    }
    return out;
}

}  // namespace

BoxValue feynman_1d_massless(const Kinematics& k, const OracleOptions& opt) {
    validate(k);
    if (k.msq) {
        throw DomainError("feynman_1d_massless called with an external mass");
    }
    integrand_spec(IntegrandKind::MasslessZ, k.eps);
    const double ms = -k.s, mt = -k.t;
    auto ab = [&](double z, double omz) { return std::pair{z * ms, omz * mt}; };
    return finish(integrate_split(ab, k.eps, opt), k.eps, opt, "feynman_1d_massless");
}

BoxValue feynman_1d_onemass(const Kinematics& k, const OracleOptions& opt) {
    validate(k);
    if (!k.msq) {
        throw DomainError("feynman_1d_onemass called without m^2");
    }
    integrand_spec(IntegrandKind::OneMassZ, k.eps);
    const double ms = -k.s, mt = -k.t, mm = -*k.msq;
    auto ab = [&](double z, double omz) { return std::pair{z * ms + omz * mm, omz * mt}; };
    return finish(integrate_split(ab, k.eps, opt), k.eps, opt, "feynman_1d_onemass");
}

BoxValue feynman_1d_raw(const Kinematics& k, double rel_tol) {
    validate(k);
    const double ms = -k.s, mt = -k.t, mm = k.msq ? -*k.msq : 0.0;
    const double eps = k.eps;
    auto f = [&](double z) -> Complex {
        const double a = z * ms + (1.0 - z) * mm;
        const double b = (1.0 - z) * mt;
        if (a <= 0.0 || b <= 0.0) {
            return 0.0;
        }
        return kernel(a, b, eps);
    };
    const auto r = quad::adaptive_gk(f, 0.0, 1.0, 0.0, rel_tol, 20000);
    BoxValue out;
    out.method = Method::FeynmanQuadrature;
    const double g = gamma_block(eps);
    out.value = g * r.value;
    out.diagnostics["error_estimate"] = g * r.error;
    out.diagnostics["evaluations"] = r.evaluations;
    if (r.error > rel_tol * std::abs(r.value)) {
        throw NotConverged("feynman_1d_raw: adaptive quadrature stalled");
    }
    return out;
}

namespace {

// int_0^zp z^(eps-1)/(1 - w z) dz truncated at zp - radius, and the mirror piece.
double excised(double eps, double w, double radius) {
    const double zp = 1.0 / w;
    const double inv = 1.0 / eps;
    // [0, zp - radius]: z = (zp - radius) v^(1/eps)
    const double top = zp - radius;
    auto left = [&](double v, double, double to_b) -> Complex {
        if (v <= 0.0) {
            return 0.0;
        }
        // zp - z = radius + top (1 - v^(1/eps)); keep the small difference accurate
        const double gap = radius + top * -std::expm1(inv * std::log1p(-to_b));
        // z^(eps-1) dz = top^eps / eps dv
        return std::pow(top, eps) * inv / (w * gap);
    };
    auto right = [&](double z, double from_a, double) -> Complex {
        return std::pow(z, eps - 1.0) / (-w * (radius + from_a));
    };
    const auto l = quad::tanh_sinh(left, 0.0, 1.0, 1e-14, 11);
    const auto r = quad::tanh_sinh(right, zp + radius, 1.0, 1e-14, 11);
    return (l.value + r.value).real();
}

}  // namespace

double euler_f21_excised(double eps, double w, double radius) {
    if (!(w > 1.0)) {
        throw DomainError("excision only applies for w > 1");
    }
    if (!(radius > 0.0) || radius >= std::min(1.0 / w, 1.0 - 1.0 / w)) {
        throw DomainError("excision radius does not fit inside (0, 1)");
    }
    return excised(eps, w, radius);
}

Complex euler_f21_oracle(double eps, double w, Cut cut) {
    if (!(eps > 0.0 && eps < 1.0)) {
        throw DomainError("euler_f21_oracle: eps outside (0, 1)");
    }
    integrand_spec(IntegrandKind::EulerF21, eps);
    if (w == 1.0) {
        throw DomainError("euler_f21_oracle: divergent at w = 1");
    }
    const double inv = 1.0 / eps;
    if (w < 1.0) {
        auto f = [&](double v, double, double) -> Complex {
            return inv / (1.0 - w * std::pow(v, inv));
        };
        const auto r = quad::tanh_sinh(f, 0.0, 1.0, 1e-14, 11);
        if (r.error > 1e-10 * std::abs(r.value)) {
            throw NotConverged("euler_f21_oracle: quadrature did not settle");
        }
        return r.value;
    }
    // Excision radii r, r/10, r/100 with the odd-power Richardson tableau.
    const double zp = 1.0 / w;
    const double r0 = std::min(1e-3, 0.25 * std::min(zp, 1.0 - zp));
    const double i1 = excised(eps, w, r0);
    const double i2 = excised(eps, w, r0 / 10.0);
    const double i3 = excised(eps, w, r0 / 100.0);
    const double a1 = (10.0 * i2 - i1) / 9.0;
    const double a2 = (10.0 * i3 - i2) / 9.0;
    const double pv = (1000.0 * a2 - a1) / 999.0;
    if (std::abs(a2 - a1) > 1e-6 * std::abs(pv)) {
        throw NotConverged("euler_f21_oracle: excision sequence is not stable");
    }
    const double jump = kPi * std::pow(zp, eps - 1.0) / w;
    return {pv, side_of(cut) * jump};
}

double beta_oracle(double eps) {
    if (!(eps > 0.0 && eps <= 1.0)) {
        throw DomainError("beta_oracle: eps outside (0, 1]");
    }
    integrand_spec(IntegrandKind::BetaY, eps);
    const double inv = 1.0 / eps;
    // int_0^1/2 y^(eps-1) (1-y)^(eps-1) dy with y = v^(1/eps)/2, doubled.
    auto f = [&](double v, double, double) -> Complex {
        return std::pow(1.0 - 0.5 * std::pow(v, inv), eps - 1.0);
    };
    const auto r = quad::tanh_sinh(f, 0.0, 1.0, 1e-14, 10);
    if (r.error > 1e-11 * std::abs(r.value)) {
        throw NotConverged("beta_oracle: quadrature did not settle");
    }
    return 2.0 * std::pow(0.5, eps) * inv * r.value.real();
}

Complex f2_double_series(double alpha, double beta, double beta_p, double gamma1, double gamma2,
                         double x, double y) {
    if (!(std::abs(x) + std::abs(y) < 1.0)) {
        throw NonConvergence("f2_double_series: |x| + |y| must be below 1");
    }
    constexpr int kMaxDiagonal = 20000;
    std::vector<double> diag{1.0};  // terms T(k, N-k), k = 0..N
    double sum = 1.0, comp = 0.0;
    int quiet = 0;
    for (int n_tot = 1; n_tot <= kMaxDiagonal; ++n_tot) {
        std::vector<double> next(static_cast<std::size_t>(n_tot + 1));
        for (int k = 0; k < n_tot; ++k) {
            const int n = n_tot - 1 - k;  // previous diagonal entry is T(k, n)
            next[static_cast<std::size_t>(k)] = diag[static_cast<std::size_t>(k)] *
                                                (alpha + k + n) * (beta_p + n) /
                                                ((gamma2 + n) * (n + 1.0)) * y;
        }
        {
            const int k = n_tot - 1;  // T(k, 0) -> T(k+1, 0)
            next[static_cast<std::size_t>(n_tot)] = diag[static_cast<std::size_t>(k)] *
                                                    (alpha + k) * (beta + k) /
                                                    ((gamma1 + k) * (k + 1.0)) * x;
        }
        double dsum = 0.0;
        for (double v : next) {
            dsum += v;
        }
        const double t = sum + dsum;
        comp += std::abs(sum) >= std::abs(dsum) ? (sum - t) + dsum : (dsum - t) + sum;
        sum = t;
        diag.swap(next);
        if (std::abs(dsum) <= 1e-16 * std::abs(sum)) {
            if (++quiet >= 2) {
                return sum + comp;
            }
        } else {
            quiet = 0;
        }
    }
    throw NonConvergence("f2_double_series: no convergence within the diagonal cap");
}

}  // namespace mbbox::oracles
