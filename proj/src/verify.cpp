#include "mbbox/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <sstream>

#include "mbbox/closed_form.hpp"
#include "mbbox/mb_engine.hpp"
#include "mbbox/oracles.hpp"
#include "mbbox/pipeline.hpp"
#include "mbbox/specfun.hpp"

namespace mbbox::verify {

using namespace specfun;

namespace {

double rel(Complex a, Complex b) {
    const double scale = std::abs(b);
    return scale > 0.0 ? std::abs(a - b) / scale : std::abs(a - b);
}

// Runs fn and records its deviation; an exception becomes a failed check.
void record(std::vector<Check>& out, std::string name, std::string point, double tol,
            const std::function<double()>& fn) {
    Check c{std::move(name), std::move(point), 0.0, tol, false, {}};
    try {
        c.deviation = fn();
        c.pass = c.deviation <= tol;
    } catch (const std::exception& e) {
        c.deviation = INFINITY;
        c.error = e.what();
    }
    out.push_back(std::move(c));
}

std::string fmt(std::initializer_list<std::pair<const char*, Complex>> items) {
    std::ostringstream os;
    os.precision(6);
    bool first = true;
    for (const auto& [k, v] : items) {
        os << (first ? "" : " ") << k << "=" << v.real();
        if (v.imag() != 0.0) os << (v.imag() > 0 ? "+" : "") << v.imag() << "i";
        first = false;
    }
    return os.str();
}

template <class F>
SuiteReport timed(std::string name, F&& body) {
    SuiteReport r;
    r.name = std::move(name);
    const auto t0 = std::chrono::steady_clock::now();
    body(r.checks);
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

}  // namespace

Tolerances with_tolerance(Tolerances t, double tol) {
    t.identity = tol;
    t.cut = 10.0 * tol;
    t.cross = tol;
    t.mb_double = std::max(tol, t.mb_double);
    return t;
}

bool SuiteReport::pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

int SuiteReport::failures() const {
    return static_cast<int>(
        std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.pass; }));
}

double SuiteReport::worst_ratio() const {
    double w = 0.0;
    for (const auto& c : checks) {
        w = std::max(w, c.tolerance > 0.0 ? c.deviation / c.tolerance : c.deviation);
    }
    return w;
}

std::string describe(const Kinematics& k) {
    std::ostringstream os;
    os << "s=" << k.s << " t=" << k.t;
    if (k.msq) os << " m2=" << *k.msq;
    os << " eps=" << k.eps;
    return os.str();
}

std::vector<Kinematics> massless_grid() {
    std::vector<Kinematics> g;
    for (double e : {0.2, 0.3, 0.45}) {
        for (double s : {-0.5, -1.0, -3.0}) {
            for (double t : {-0.5, -1.0, -3.0}) g.push_back({s, t, std::nullopt, e});
        }
    }
    return g;
}

std::vector<Kinematics> onemass_grid() {
    std::vector<Kinematics> g;
    const double v[] = {-0.5, -1.0, -2.0};
    for (double e : {0.25, 0.4}) {
        for (double s : v) {
            for (double t : v) {
                for (double m : v) {
                    Kinematics k{s, t, m, e};
                    try {
                        validate(k);
                    } catch (const DegenerateKinematics&) {
                        continue;
                    }
                    g.push_back(k);
                }
            }
        }
    }
    return g;
}

SuiteReport identities(const Tolerances& tol) {
    return timed("identities", [&](std::vector<Check>& out) {
        // Li2(-x) + Li2(-1/x) = -1/2 log^2 x - pi^2/6
        for (double x : {0.1, 0.5, 1.0, 2.0, 7.5}) {
            record(out, "dilog_inversion", fmt({{"s/t", x}}), tol.identity, [&] {
                return rel(li2(-x) + li2(-1.0 / x), -0.5 * std::log(x) * std::log(x) - kZeta2);
            });
        }
        // 2F1(1,eps;eps+1;z)/eps = 1/eps + z/(1+eps) 2F1(1,1+eps;2+eps;z)
        struct ContiguousPoint {
            double z, e;
            bool pv;
        };
        for (auto [z, e, pv] : {ContiguousPoint{-3.0, 0.3, false}, ContiguousPoint{0.5, 0.4, false},
                                ContiguousPoint{0.95, 0.2, false}, ContiguousPoint{2.5, 0.3, true},
                                ContiguousPoint{40.0, 0.45, true}, ContiguousPoint{1.2, 0.3, true}}) {
            record(out, "f21_contiguous", fmt({{"z", z}, {"eps", e}}), pv ? tol.cut : tol.identity, [&] {
                return rel(f21_1e(z, e) / e, 1.0 / e + z / (1.0 + e) * f21_2e(z, e));
            });
        }
        // 2F1(1,1;2-eps;-s/t) through 2F1(1,eps;eps+1;1+t/s) plus the algebraic term
        struct RatioPoint {
            double s, t, e;
        };
        for (auto [s, t, e] : {RatioPoint{-1, -2, 0.3}, RatioPoint{-3, -1, 0.45}, RatioPoint{-0.2, -5, 0.7},
                               RatioPoint{-1, -1, 0.3}, RatioPoint{-2, -0.7, 0.2}}) {
            record(out, "continuation_ratio", fmt({{"s", s}, {"t", t}, {"eps", e}}), tol.cut,
                   [&] { return rel(continuation_ratio(t / s, e).sum(), f21_11(-s / t, e)); });
        }
        // 2F1(1,1;2-eps;z) through 2F1(1,eps;eps+1;1-1/z)
        for (Complex z : {Complex{0.5}, Complex{-2.0}, Complex{0.9}, Complex{-0.4},
                          Complex{0.3, 0.8}, Complex{2.5}}) {
            const bool pv = z.imag() == 0.0 && z.real() > 1.0;
            record(out, "continuation_inverted", fmt({{"z", z}}), pv ? tol.cut : tol.identity,
                   [&] { return rel(continuation_inverted(z, 0.3).sum(), f21_11(z, 0.3)); });
        }
        // 2F1(1,eps-delta;1-delta;x) through 1-x, inside the unit disc
        for (double x : {0.1, 0.3, 0.5, 0.7, 0.8}) {
            for (double d : {0.01, -0.02}) {
                record(out, "continuation_delta", fmt({{"x", x}, {"delta", d}}), tol.identity, [&] {
                    return rel(continuation_delta(x, 0.35, d).sum(),
                               f21_general_series(1.0, 0.35 - d, 1.0 - d, x));
                });
            }
        }
        // Euler reflection Li2(1-x) = -Li2(x) + pi^2/6 - log x log(1-x)
        for (double x : {0.1, 0.3, 0.5, 0.77, 0.95}) {
            record(out, "dilog_reflection", fmt({{"x", x}}), tol.identity, [&] {
                return rel(li2(1.0 - x), -li2(x) + kZeta2 - std::log(x) * std::log1p(-x));
            });
        }
        // F2(alpha; b, b'; alpha, alpha; x, y) reduction against the double series
        struct AppellPoint {
            double b, bp, a, x, y;
        };
        for (auto [b, bp, a, x, y] :
             {AppellPoint{1, 1, 1.7, 0.2, 0.3}, AppellPoint{0.6, 1.4, 1.7, -0.35, 0.5},
              AppellPoint{1, 1, 1.75, 0.15, 0.1}, AppellPoint{0.8, 0.3, 2.2, 0.25, -0.25},
              AppellPoint{1, 1, 1.6, -0.4, -0.3}}) {
            record(out, "appell_f2_reduction", fmt({{"b", b}, {"b'", bp}, {"a", a}, {"x", x}, {"y", y}}),
                   tol.identity, [&] {
                       return rel(appell_f2_reduced(b, bp, a, x, y),
                                  oracles::f2_double_series(a, b, bp, a, a, x, y));
                   });
        }
        // int_0^1 (y(1-y))^(eps-1) dy = Gamma^2(eps)/Gamma(2 eps)
        for (double e : {0.1, 0.3, 0.5, 0.7, 0.9}) {
            record(out, "beta", fmt({{"eps", e}}), tol.beta, [&] {
                const double exact = std::exp((2.0 * ln_gamma(e) - ln_gamma(2.0 * e)).real());
                return rel(oracles::beta_oracle(e), exact);
            });
        }
    });
}

void massless_point(const Kinematics& k, const Tolerances& tol, std::vector<Check>& out) {
    const std::string p = describe(k);
    Complex exact;
    record(out, "closed_alt", p, tol.identity * 10.0, [&] {
        exact = massless_box(k).value;
        return rel(massless_box_alt(k).value, exact);
    });
    record(out, "residue", p, tol.residue, [&] {
        const auto b = mb::residue_massless(k);
        const Complex total = b.pieces.at("total");
        record(out, "spurious_sum", p, tol.spurious,
               [&] { return std::abs(b.pieces.at("spurious_sum")) / std::abs(total); });
        record(out, "delta_pole", p, tol.delta_pole,
               [&] { return std::abs(b.delta_pole_coefficient) / std::abs(total); });
        return rel(total, exact);
    });
    record(out, "feynman", p, tol.cross,
           [&] { return rel(oracles::feynman_1d_massless(k).value, exact); });
    record(out, "mb", p, tol.cross, [&] {
        const auto c = mb::select_contour_massless(k);
        const auto v = mb::mb_massless_eval(k, c);
        record(out, "node_doubling", p, v.diagnostics.at("error_estimate"),
               [&] { return v.diagnostics.at("node_doubling_delta"); });
        // Shift within the strip (-1, eps-1) on both sides of the default.
        for (double frac : {0.25, 0.75}) {
            auto moved = c;
            moved.abscissa = -1.0 + frac * k.eps;
            record(out, "drift", p + " c=" + std::to_string(moved.abscissa), tol.drift,
                   [&] { return rel(mb::mb_massless_eval(k, moved).value, v.value); });
        }
        return rel(v.value, exact);
    });
}

void onemass_point(const Kinematics& k, const Tolerances& tol, std::vector<Check>& out) {
    const std::string p = describe(k);
    Complex exact;
    record(out, "closed_alt", p, tol.identity * 10.0, [&] {
        exact = onemass_box(k).value;
        return rel(onemass_box_alt(k).value, exact);
    });
    record(out, "residue", p, tol.residue, [&] {
        const auto b = mb::residue_onemass(k);
        const Complex total = b.pieces.at("total");
        record(out, "spurious_sum", p, tol.spurious,
               [&] { return std::abs(b.pieces.at("spurious_sum")) / std::abs(total); });
        return rel(total, exact);
    });
    record(out, "feynman", p, tol.cross,
           [&] { return rel(oracles::feynman_1d_onemass(k).value, exact); });
    record(out, "mb", p, tol.mb_double, [&] {
        const auto c = mb::select_contour_onemass(k.eps);
        const auto v = mb::mb_onemass_eval(k, c.alpha, c.beta);
        record(out, "node_doubling", p, v.diagnostics.at("error_estimate"),
               [&] { return v.diagnostics.at("node_doubling_delta"); });
        return rel(v.value, exact);
    });
}

SuiteReport massless(const Tolerances& tol) {
    return timed("massless", [&](std::vector<Check>& out) {
        for (const auto& k : massless_grid()) massless_point(k, tol, out);
    });
}

SuiteReport onemass(const Tolerances& tol) {
    return timed("onemass", [&](std::vector<Check>& out) {
        for (const auto& k : onemass_grid()) onemass_point(k, tol, out);
    });
}

}  // namespace mbbox::verify
