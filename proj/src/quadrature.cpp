#include "mbbox/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <queue>
#include <array>

namespace mbbox::quad {

void CompensatedSum::step(double& sum, double& comp, double v) noexcept {
    const double t = sum + v;
    if (std::abs(sum) >= std::abs(v)) {
        comp += (sum - t) + v;
    } else {
        comp += (v - t) + sum;
    }
    sum = t;
}

void CompensatedSum::add(Complex v) noexcept {
    step(re_, cre_, v.real());
    step(im_, cim_, v.imag());
}

namespace {

Rule build_gauss_legendre(int n) {
    Rule r;
    r.nodes.resize(static_cast<std::size_t>(n));
    r.weights.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            if (n == 1) {
                p0 = 1.0;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) {
                break;
            }
        }
        {
            // refresh the derivative at the converged node
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n == 1 ? 1.0 : n * (x * p1 - p0) / (x * x - 1.0);
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        r.nodes[static_cast<std::size_t>(i)] = -x;
        r.nodes[static_cast<std::size_t>(n - 1 - i)] = x;
        r.weights[static_cast<std::size_t>(i)] = w;
        r.weights[static_cast<std::size_t>(n - 1 - i)] = w;
    }
    if (n % 2 == 1) {
        r.nodes[static_cast<std::size_t>(n / 2)] = 0.0;
    }
    return r;
}

}  // namespace

const Rule& gauss_legendre(int n) {
    static std::mutex mu;
    static std::map<int, Rule> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) {
        it = cache.emplace(n, build_gauss_legendre(n)).first;
    }
    return it->second;
}

QuadResult gl_fixed(const RealIntegrand& f, double a, double b, int n) {
    const Rule& r = gauss_legendre(n);
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    CompensatedSum sum;
    QuadResult out;
    for (std::size_t i = 0; i < r.nodes.size(); ++i) {
        const Complex v = f(mid + half * r.nodes[i]) * (half * r.weights[i]);
        sum.add(v);
        out.abs_sum += std::abs(v);
    }
    out.value = sum.value();
    out.evaluations = n;
    return out;
}

QuadResult gl_panels(const RealIntegrand& f, const std::vector<double>& breaks, int n) {
    QuadResult out;
    CompensatedSum sum;
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
        const QuadResult p = gl_fixed(f, breaks[i], breaks[i + 1], n);
        sum.add(p.value);
        out.abs_sum += p.abs_sum;
        out.evaluations += p.evaluations;
    }
    out.value = sum.value();
    return out;
}

QuadResult tanh_sinh(const EndpointIntegrand& f, double a, double b, double rel_tol,
                     int max_level) {
    const double len = b - a;
    const double half_pi = 0.5 * kPi;
    const double t_max = 6.0;
    auto point = [&](double t, double& w) {
        // x = a + len / (1 + exp(-2u)),  u = (pi/2) sinh t
        const double u = half_pi * std::sinh(t);
        const double e = std::exp(-2.0 * std::abs(u));
        const double small = len * e / (1.0 + e);   // distance to the nearer end
        const double large = len / (1.0 + e);
        const double cu = std::cosh(u);
        w = len * 0.5 * half_pi * std::cosh(t) / (cu * cu);
        return t >= 0 ? std::array<double, 2>{large, small} : std::array<double, 2>{small, large};
    };

    QuadResult out;
    double h = 1.0;
    CompensatedSum sum;
    auto eval = [&](double t) {
        double w = 0.0;
        const auto d = point(t, w);
        if (d[0] <= 0.0 || d[1] <= 0.0 || w == 0.0) {
            return;
        }
        const Complex v = f(a + d[0], d[0], d[1]) * w;
        sum.add(v);
        out.abs_sum += std::abs(v);
        ++out.evaluations;
    };
    for (double t = -t_max; t <= t_max + 1e-12; t += h) {
        eval(t);
    }
    Complex prev = sum.value() * h;
    for (int level = 1; level <= max_level; ++level) {
        h *= 0.5;
        for (double t = -t_max + h; t <= t_max; t += 2.0 * h) {
            eval(t);
        }
        const Complex cur = sum.value() * h;
        out.value = cur;
        out.error = std::abs(cur - prev);
        if (level >= 3 && out.error <= rel_tol * std::abs(cur)) {
            break;
        }
        prev = cur;
    }
    out.abs_sum *= h;
    return out;
}

namespace {

constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
    double a, b;
    Complex value;
    double error;
    double abs_sum;
    bool operator<(const Segment& o) const { return error < o.error; }
};

Segment gk15(const RealIntegrand& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const Complex fc = f(c);
    Complex kron = fc * kWgk[7];
    Complex gauss = fc * kWg[3];
    double abs_sum = std::abs(fc) * kWgk[7];
    for (int j = 0; j < 7; ++j) {
        const double dx = h * kXgk[static_cast<std::size_t>(j)];
        const Complex f1 = f(c - dx);
        const Complex f2 = f(c + dx);
        kron += (f1 + f2) * kWgk[static_cast<std::size_t>(j)];
        abs_sum += (std::abs(f1) + std::abs(f2)) * kWgk[static_cast<std::size_t>(j)];
        if (j % 2 == 1) {
            gauss += (f1 + f2) * kWg[static_cast<std::size_t>(j / 2)];
        }
    }
    return {a, b, kron * h, std::abs((kron - gauss) * h), abs_sum * std::abs(h)};
}

}  // namespace

QuadResult adaptive_gk(const RealIntegrand& f, double a, double b, double abs_tol, double rel_tol,
                       int max_intervals) {
    std::priority_queue<Segment> heap;
    Segment first = gk15(f, a, b);
    heap.push(first);
    Complex total = first.value;
    double err = first.error;
    int evals = 15;
    while (static_cast<int>(heap.size()) < max_intervals &&
           err > std::max(abs_tol, rel_tol * std::abs(total))) {
        Segment worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) {
            heap.push(worst);
            break;
        }
        Segment l = gk15(f, worst.a, mid);
        Segment r = gk15(f, mid, worst.b);
        evals += 30;
        total += l.value + r.value - worst.value;
        err += l.error + r.error - worst.error;
        heap.push(l);
        heap.push(r);
    }
    QuadResult out;
    CompensatedSum sum;
    double e = 0.0;
    while (!heap.empty()) {
        sum.add(heap.top().value);
        e += heap.top().error;
        out.abs_sum += heap.top().abs_sum;
        heap.pop();
    }
    out.value = sum.value();
    out.error = e;
    out.evaluations = evals;
    return out;
}

}  // namespace mbbox::quad
