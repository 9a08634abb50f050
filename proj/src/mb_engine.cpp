#include "mbbox/mb_engine.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <sstream>

#include "mbbox/quadrature.hpp"
#include "mbbox/series.hpp"
#include "mbbox/specfun.hpp"

namespace mbbox::mb {

using specfun::ln_gamma;

namespace {

constexpr Complex kI{0.0, 1.0};

void require_eps(double eps, const char* who) {
    if (!(eps > 0.0 && eps < 1.0)) {
        std::ostringstream os;
        os << who << ": eps = " << eps << " leaves no strip between the pole families";
        throw InfeasibleContour(os.str());
    }
}

void require_spec(const ContourSpec& c, const char* who) {
    if (c.nodes < 32 || !(c.height > 0.0)) {
        throw InfeasibleContour(std::string(who) + ": need nodes >= 32 and height > 0");
    }
}

// Panel breaks on [lo, hi]. Panels shrink geometrically towards the centres,
// where a Gamma argument with a small real part makes the integrand peak,
// stay at unit width for a while and then widen again.
std::vector<double> graded_breaks(double lo, double hi, const std::vector<double>& centres,
                                  double hmin) {
    auto width = [&](double x) {
        double d = INFINITY;
        for (double c : centres) d = std::min(d, std::abs(x - c));
        const double w = 0.7 * d;
        return std::max(hmin, d < 8.0 ? std::min(w, 2.0) : std::max(2.0, w - 2.0));
    };
    std::vector<double> b{lo};
    while (b.back() < hi) {
        const double x = b.back();
        // Do not step over a centre.
        double next = x + width(x);
        for (double c : centres) {
            if (c > x + 0.5 * hmin && c < next) next = c;
        }
        b.push_back(next >= hi - 0.5 * hmin ? hi : next);
    }
    return b;
}

struct Levels {
    quad::QuadResult coarse, mid, fine;
};

template <class F>
Levels three_levels(const F& f, const std::vector<double>& breaks, int n) {
    return {quad::gl_panels(f, breaks, n / 2), quad::gl_panels(f, breaks, n),
            quad::gl_panels(f, breaks, 2 * n)};
}

void fill_diagnostics(BoxValue& out, const Levels& lv, double tail, double height,
                      double abscissa, const MbOptions& opt, const char* who) {
    const Complex v = lv.mid.value;
    const double roundoff = 32.0 * DBL_EPSILON * lv.mid.abs_sum;
    const double err = std::abs(lv.mid.value - lv.coarse.value) + tail + roundoff;
    const double delta = std::abs(lv.fine.value - lv.mid.value);
    out.value = ensure_finite(v, who);
    out.diagnostics["nodes"] = lv.mid.evaluations;
    out.diagnostics["height"] = height;
    out.diagnostics["abscissa"] = abscissa;
    out.diagnostics["tail_estimate"] = tail;
    out.diagnostics["node_doubling_delta"] = delta;
    out.diagnostics["error_estimate"] = err;
    out.diagnostics["evaluations"] =
        lv.coarse.evaluations + lv.mid.evaluations + lv.fine.evaluations;
    if (delta > std::max(opt.rel_tol * std::abs(v), roundoff)) {
        std::ostringstream os;
        os << who << ": node doubling moved the result by " << delta << " (|I| = " << std::abs(v)
           << ")";
        throw NotConverged(os.str());
    }
}

double require_mass(const Kinematics& k) {
    validate(k);
    if (!k.msq) throw DomainError("one-mass pipeline called without m^2");
    return *k.msq;
}

void require_massless(const Kinematics& k) {
    validate(k);
    if (k.msq) throw DomainError("massless pipeline called with an external mass");
}

}  // namespace

// ---------------------------------------------------------------- massless

std::vector<PoleFamily> massless_pole_families() {
    return {
        {"Gamma^2(w+1)", -1.0, 0.0, Direction::Left, 2},
        {"Gamma(2-eps+w)", -2.0, 1.0, Direction::Left, 1},
        {"Gamma(-w)", 0.0, 0.0, Direction::Right, 1},
        {"Gamma^2(eps-1-w)", -1.0, 1.0, Direction::Right, 2},
    };
}

bool massless_contour_feasible(double c, double eps) {
    if (!(eps > 0.0 && eps < 1.0)) return false;
    for (const auto& f : massless_pole_families()) {
        const double p = f.location(eps, 0);
        if (f.direction == Direction::Left ? !(c > p) : !(c < p)) return false;
    }
    return true;
}

ContourSpec select_contour_massless(double eps) {
    require_eps(eps, "select_contour_massless");
    ContourSpec c;
    c.abscissa = -1.0 + 0.5 * eps;
    c.height = 40.0;
    c.nodes = 32;
    return c;
}

ContourSpec select_contour_massless(const Kinematics& k) {
    ContourSpec c = select_contour_massless(k.eps);
    const double r = std::max(std::abs(k.s / k.t), std::abs(k.t / k.s));
    c.height = 40.0 + 10.0 * std::log1p(r);
    return c;
}

namespace {

Complex massless_log_integrand(Complex w, double ls, double lt, double eps, double lg2e) {
    return w * lt - (2.0 - eps + w) * ls + 2.0 * ln_gamma(w + 1.0) + ln_gamma(2.0 - eps + w) +
           ln_gamma(-w) + 2.0 * ln_gamma(eps - 1.0 - w) - lg2e;
}

}  // namespace

Complex mb_massless_integrand(Complex w, const Kinematics& k) {
    const double e = k.eps;
    for (const auto& f : massless_pole_families()) {
        const double d = f.direction == Direction::Left ? f.location(e, 0) - w.real()
                                                        : w.real() - f.location(e, 0);
        if (w.imag() == 0.0 && d >= 0.0 && std::abs(d - std::round(d)) < 1e-14) {
            throw PoleError("mb_massless_integrand: w sits on a pole of " + f.origin);
        }
    }
    const double lg2e = ln_gamma(2.0 * e).real();
    return std::exp(massless_log_integrand(w, std::log(-k.s), std::log(-k.t), e, lg2e));
}

BoxValue mb_massless_eval(const Kinematics& k, const ContourSpec& c, const MbOptions& opt) {
    require_massless(k);
    require_spec(c, "mb_massless_eval");
    if (!massless_contour_feasible(c.abscissa, k.eps)) {
        throw InfeasibleContour("mb_massless_eval: abscissa does not separate the pole families");
    }
    const double e = k.eps;
    const double ls = std::log(-k.s), lt = std::log(-k.t);
    const double lg2e = ln_gamma(2.0 * e).real();
    // dw/(2 pi i) = dy/(2 pi)
    auto f = [&](double y) {
        return std::exp(massless_log_integrand({c.abscissa, y}, ls, lt, e, lg2e)) / (2.0 * kPi);
    };
    BoxValue out;
    out.method = Method::MellinBarnes;
    Levels lv;
    if (c.rule == Rule::TanhSinh) {
        // Levels of the double-exponential rule play the role of n/2, n, 2n.
        // Splitting at Im(w) = 0 puts the node clustering on the peak.
        auto g = [&](double x, double, double) { return f(x); };
        auto level = [&](int lvl) {
            auto lo = quad::tanh_sinh(g, -c.height, 0.0, 0.0, lvl);
            const auto hi = quad::tanh_sinh(g, 0.0, c.height, 0.0, lvl);
            lo.value += hi.value;
            lo.error += hi.error;
            lo.abs_sum += hi.abs_sum;
            lo.evaluations += hi.evaluations;
            return lo;
        };
        lv = {level(6), level(7), level(8)};
    } else {
        const double gap = std::min(c.abscissa + 1.0, std::min(-c.abscissa, e - 1.0 - c.abscissa));
        lv = three_levels(f, graded_breaks(-c.height, c.height, {0.0}, std::min(1.0, gap)),
                          c.nodes);
    }
    // Beyond the cut-off the integrand keeps falling at least like exp(-pi |y|).
    const double tail = (std::abs(f(c.height)) + std::abs(f(-c.height))) / kPi;
    fill_diagnostics(out, lv, tail, c.height, c.abscissa, opt, "mb_massless_eval");
    return out;
}

// ---------------------------------------------------------------- one mass

std::vector<double> onemass_gamma_arguments(double a0, double b0, double eps) {
    return {-a0,
            -b0,
            2.0 - eps + a0 + b0,
            eps - 1.0 - a0 - b0,
            1.0 + b0,
            eps - 1.0 - b0,
            1.0 + a0 + b0};
}

bool onemass_contour_feasible(double a0, double b0, double eps) {
    if (!(eps > 0.0 && eps < 1.0)) return false;
    const auto args = onemass_gamma_arguments(a0, b0, eps);
    return std::all_of(args.begin(), args.end(), [](double x) { return x > 0.0; });
}

OneMassContours select_contour_onemass(double eps) {
    require_eps(eps, "select_contour_onemass");
    const double b0 = -1.0 + 0.5 * eps;
    // alpha range from the constraints that involve it, for this b0.
    const double lo = std::max(-1.0 - b0, eps - 2.0 - b0);
    const double hi = std::min(eps - 1.0 - b0, 0.0);
    if (!(lo < hi)) throw InfeasibleContour("select_contour_onemass: empty alpha interval");
    const double a0 = 0.5 * (lo + hi);
    if (!onemass_contour_feasible(a0, b0, eps)) {
        throw InfeasibleContour("select_contour_onemass: midpoint fails the Gamma constraints");
    }
    OneMassContours c;
    c.beta.abscissa = b0;
    c.beta.height = 8.0;
    c.beta.nodes = 32;
    c.alpha.abscissa = a0;
    c.alpha.height = 7.0;   // margin beyond the band between 0 and -Im(beta)
    c.alpha.nodes = 32;
    return c;
}

namespace {

struct OneMassLogs {
    double lst, lmt, lt, eps, lg2e;
};

Complex onemass_beta_log(Complex beta, const OneMassLogs& L) {
    return beta * L.lst + ln_gamma(-beta) + ln_gamma(1.0 + beta) + ln_gamma(L.eps - 1.0 - beta);
}

Complex onemass_alpha_log(Complex alpha, Complex beta, const OneMassLogs& L) {
    const Complex ab = alpha + beta;
    return alpha * L.lmt + ln_gamma(-alpha) + ln_gamma(L.eps - 1.0 - ab) +
           ln_gamma(2.0 - L.eps + ab) + ln_gamma(1.0 + ab);
}

OneMassLogs onemass_logs(const Kinematics& k) {
    return {std::log(k.s / k.t), std::log(*k.msq / k.t), std::log(-k.t), k.eps,
            ln_gamma(2.0 * k.eps).real()};
}

}  // namespace

Complex mb_onemass_integrand(Complex alpha, Complex beta, const Kinematics& k) {
    require_mass(k);
    const auto L = onemass_logs(k);
    return std::exp((L.eps - 2.0) * L.lt - L.lg2e + onemass_beta_log(beta, L) +
                    onemass_alpha_log(alpha, beta, L));
}

BoxValue mb_onemass_eval(const Kinematics& k, const ContourSpec& ca, const ContourSpec& cb,
                         const MbOptions& opt) {
    require_mass(k);
    require_spec(ca, "mb_onemass_eval");
    require_spec(cb, "mb_onemass_eval");
    if (!onemass_contour_feasible(ca.abscissa, cb.abscissa, k.eps)) {
        throw InfeasibleContour("mb_onemass_eval: contours violate a Gamma constraint");
    }
    const auto L = onemass_logs(k);
    const double pref_log = (L.eps - 2.0) * L.lt - L.lg2e;
    const double norm = 1.0 / (4.0 * kPi * kPi);
    const auto args = onemass_gamma_arguments(ca.abscissa, cb.abscissa, k.eps);
    const double hmin = std::min(1.0, *std::min_element(args.begin(), args.end()));
    int evaluations = 0;

    // Inner alpha integral at a fixed beta node, n points per panel. The
    // integrand peaks near Im(alpha) = 0 and Im(alpha) = -Im(beta).
    auto inner = [&](Complex beta, int n) {
        const double yb = beta.imag();
        const double lo = std::min(0.0, -yb) - ca.height, hi = std::max(0.0, -yb) + ca.height;
        auto g = [&](double ya) {
            return std::exp(onemass_alpha_log({ca.abscissa, ya}, beta, L));
        };
        const auto r = quad::gl_panels(g, graded_breaks(lo, hi, {0.0, -yb}, hmin), n);
        evaluations += r.evaluations;
        return r;
    };
    // For real kinematics the integrand at conj(beta), conj(alpha) is the
    // conjugate, so the outer line folds onto Im(beta) >= 0.
    auto outer_at = [&](int n) {
        auto f = [&](double yb) {
            const Complex beta{cb.abscissa, yb};
            const auto r = inner(beta, n);
            const Complex w = norm * std::exp(pref_log + onemass_beta_log(beta, L));
            return w * r.value;
        };
        auto q = quad::gl_panels(f, graded_breaks(0.0, cb.height, {0.0}, hmin), n);
        q.value = 2.0 * q.value.real();
        q.abs_sum = 2.0 * q.abs_sum;
        q.evaluations = evaluations;
        evaluations = 0;
        return q;
    };
    Levels lv{outer_at(cb.nodes / 2), outer_at(cb.nodes), outer_at(2 * cb.nodes)};
    // Tail: integrand size on the edge of the box, times the widths it decays over.
    const double tail = std::abs(mb_onemass_integrand({ca.abscissa, 0.0}, {cb.abscissa, cb.height},
                                                      k)) * norm +
                        std::abs(mb_onemass_integrand({ca.abscissa, ca.height},
                                                      {cb.abscissa, 0.0}, k)) * norm;
    BoxValue out;
    out.method = Method::MellinBarnes;
    fill_diagnostics(out, lv, tail, cb.height, cb.abscissa, opt, "mb_onemass_eval");
    out.diagnostics["alpha_abscissa"] = ca.abscissa;
    out.diagnostics["alpha_height"] = ca.height;
    return out;
}

// ---------------------------------------------------------------- residues

namespace {

struct SidePieces {
    std::map<std::string, Complex> p;
    Complex pole;
};

// Left closure of the massless w-integral, s moved off the real axis to the given side.
SidePieces massless_side(const Kinematics& k, int side) {
    const double e = k.eps, s = k.s, t = k.t;
    const auto D = SeriesLabel::Delta;
    const double G = std::exp((2.0 * ln_gamma(e) - ln_gamma(2.0 * e)).real());
    const double g1e = std::exp(ln_gamma(1.0 - e).real());
    const double ge = std::exp(ln_gamma(e).real());
    const double base = G * g1e * std::pow(-s, e) / (s * t);
    const double X = base * std::pow(1.0 + s / t, -e);

    SidePieces out;
    // Double-pole family w = -1-n, resummed and continued.
    const double p1 = G * g1e * g1e / std::exp(ln_gamma(2.0 - e).real()) * std::pow(-t, e - 2.0);
    const auto cont = specfun::continuation_ratio(t / s, e, cut_of(side));
    out.p["I1.exact"] = p1 * cont.hypergeometric;
    out.p["I1.spurious"] = p1 * cont.algebraic;

    // Family w = eps-2-n shifted by delta: carries the delta pole.
    const int order = 2;
    auto C = gamma_series(0.0, order, D).scaled(-1.0) * gamma_series(1.0, order, D) *
             gamma_series(e, order, D) * gamma_series(1.0 - e, order, D).scaled(-1.0) *
             power_series(s / t, order, D) * (G / ge * std::pow(-s, e) / (s * t) *
                                              std::pow(1.0 + s / t, -e));
    out.p["I2a.pole"] = C.coefficient(-1);
    out.p["I2a.spurious"] = C.coefficient(0);

    // Second piece: continuation of 2F1(1, eps-delta; 1-delta; -s/t) to 1+s/t.
    const auto Cp = gamma_series(e, order, D).scaled(-1.0) /
                    gamma_series(1.0, order, D).scaled(-1.0) * (base / ge);
    const auto ratio = gamma_series(1.0, order, D).scaled(-1.0) /
                       gamma_series(0.0, order, D).scaled(-1.0);
    // -s/t is taken on the given side; 1+s/t = 1-(-s/t) then sits on the opposite one.
    const Complex F = specfun::detail::lerch_side(e, 1.0 + s / t, -side);
    const auto T1 = ratio * RegulatorSeries::constant(-F / e, 0, D);
    const auto T2 = gamma_series(1.0, order, D).scaled(-1.0) /
                    gamma_series(e, order, D).scaled(-1.0) *
                    power_series_from_log(log_side(-s / t, side), order, D) *
                    (ge * std::pow(1.0 + s / t, -e));
    const auto exact = (Cp * T1).shifted(-1);
    const auto spur = (Cp * T2).shifted(-1);
    out.p["I2b.pole"] = exact.coefficient(-1) + spur.coefficient(-1);
    out.p["I2b.exact"] = exact.coefficient(0);
    out.p["I2b.spurious"] = spur.coefficient(0);
    out.p["X"] = X;
    out.pole = out.p["I2a.pole"] + out.p["I2b.pole"];
    return out;
}

EvalBreakdown finish_breakdown(const SidePieces& up, const SidePieces& down, Cut cut,
                               const std::vector<std::string>& names) {
    SidePieces sp;
    if (cut == Cut::PrincipalValue) {
        for (const auto& [key, v] : up.p) sp.p[key] = 0.5 * (v + down.p.at(key));
        sp.pole = 0.5 * (up.pole + down.pole);
    } else {
        sp = cut == Cut::AboveCut ? up : down;
    }
    EvalBreakdown b;
    b.pieces = sp.p;
    Complex spurious, total;
    for (const auto& n : names) {
        const Complex ex = sp.p.count(n + ".exact") ? sp.p.at(n + ".exact") : Complex{};
        const Complex su = sp.p.at(n + ".spurious");
        b.pieces[n] = ex + su;
        spurious += su;
        total += ex + su;
    }
    b.pieces["spurious_sum"] = spurious;
    b.pieces["total"] = total;
    b.delta_pole_coefficient = sp.pole;
    return b;
}

// One-mass reconstruction with s moved off the real axis to the given side.
// The three resummed arguments follow s in different directions.
SidePieces onemass_side(const Kinematics& k, int side) {
    const double e = k.eps, s = k.s, t = k.t, m = *k.msq;
    const int side_x = m > t ? side : -side;   // s/(m-t) and st/((m-s)(m-t))
    // t/(m-s) runs against s. Below zero it is off the cut of 2F1(1,1;2-eps;.) and
    // only the split depends on the side; take the one of the Y piece so the
    // algebraic terms pair up.
    const double Z = t / (m - s);
    const int side_z = Z < 0.0 ? side_x : -side;
    const double ge = std::exp(ln_gamma(e).real());
    const double g1e = std::exp(ln_gamma(1.0 - e).real());
    const double g2e = std::exp(ln_gamma(2.0 * e).real());
    const double gem1 = specfun::gamma(e - 1.0).real();

    SidePieces out;
    // Closing alpha to the left on Gamma(eps-1-alpha-beta) etc.: first family.
    const double X1 = s / (m - t);
    const Complex K1 = specfun::detail::f21_11c_side(2.0 - e, X1, side_x);
    // This power sits on the side opposite to s whichever way X1 moves.
    const Complex alg = ge * ge * g1e / X1 * pow_side(X1 / (1.0 - X1), e, -side);
    const Complex It = -ge / (1.0 - e) * K1 + alg;
    out.p["Im1.exact"] = std::pow(-t, e) / (t * (m - t)) * ge * g1e / g2e * It;
    out.p["Im1.spurious"] = 0.0;

    // Double series reduced to 2F1(1,1;2-eps;Y) and continued to 1-1/Y.
    const double Y = s * t / ((m - s) * (m - t));
    const double A = -std::pow(-m, e) / ((m - t) * (m - s)) * ge * g1e * gem1 / g2e;
    const auto c58a = specfun::continuation_inverted(Y, e, cut_of(side_x));
    out.p["Im2a.exact"] = A * c58a.hypergeometric;
    out.p["Im2a.spurious"] = A * c58a.algebraic;

    const double B = -std::pow(-s, e) / (s * (m - s)) * ge * ge * g1e / (g2e * (1.0 - e));
    const auto c58b = specfun::continuation_inverted(Z, e, cut_of(side_z));
    out.p["Im2b.exact"] = B * c58b.hypergeometric;
    out.p["Im2b.spurious"] = B * c58b.algebraic;
    out.pole = 0.0;
    return out;
}

}  // namespace

EvalBreakdown residue_massless(const Kinematics& k, Cut cut) {
    require_massless(k);
    return finish_breakdown(massless_side(k, 1), massless_side(k, -1), cut,
                            {"I1", "I2a", "I2b"});
}

EvalBreakdown residue_onemass(const Kinematics& k, Cut cut) {
    require_mass(k);
    return finish_breakdown(onemass_side(k, 1), onemass_side(k, -1), cut,
                            {"Im1", "Im2a", "Im2b"});
}

// ---------------------------------------------------------------- debug oracle

Complex massless_residue_at(Complex w0, double radius, const Kinematics& k) {
    // Trapezoid rule on a circle: exponentially convergent for a meromorphic integrand.
    const int n = 64;
    quad::CompensatedSum acc;
    for (int j = 0; j < n; ++j) {
        const Complex u = std::polar(radius, 2.0 * kPi * (j + 0.5) / n);
        acc.add(mb_massless_integrand(w0 + u, k) * u);
    }
    return acc.value() / static_cast<double>(n);
}

ResidueSum massless_residue_sum(const Kinematics& k, Direction closure, int terms) {
    require_massless(k);
    const double e = k.eps;
    const double r = 0.4 * std::min(e, 1.0 - e);
    ResidueSum out;
    Complex last, prev;
    for (int n = 0; n < terms; ++n) {
        Complex term;
        for (const auto& f : massless_pole_families()) {
            if (f.direction != closure) continue;
            term += massless_residue_at(f.location(e, n), r, k);
        }
        // Closing to the right runs clockwise.
        if (closure == Direction::Right) term = -term;
        out.value += term;
        prev = last;
        last = term;
    }
    out.terms = terms;
    const double q = std::abs(prev) > 0.0 ? std::abs(last) / std::abs(prev) : 0.0;
    out.tail_estimate = q < 1.0 ? std::abs(last) * q / (1.0 - q) : INFINITY;
    return out;
}

}  // namespace mbbox::mb
