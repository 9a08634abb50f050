#include "mbbox/series.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "mbbox/specfun.hpp"

namespace mbbox {

RegulatorSeries::RegulatorSeries(SeriesLabel label, int min_power, std::vector<Complex> coeffs)
    : label_(label), min_power_(min_power), coeffs_(std::move(coeffs)) {
    normalize();
}

RegulatorSeries RegulatorSeries::constant(Complex c, int max_power, SeriesLabel label) {
    if (max_power < 0) {
        return RegulatorSeries(label, max_power, {Complex{}});
    }
    std::vector<Complex> v(static_cast<std::size_t>(max_power + 1), Complex{});
    v[0] = c;
    return RegulatorSeries(label, 0, std::move(v));
}

RegulatorSeries RegulatorSeries::monomial(Complex c, int power, int max_power, SeriesLabel label) {
    if (max_power < power) {
        return RegulatorSeries(label, max_power, {Complex{}});
    }
    std::vector<Complex> v(static_cast<std::size_t>(max_power - power + 1), Complex{});
    v[0] = c;
    return RegulatorSeries(label, power, std::move(v));
}

// Leading exact zeros are dropped; the known order (max_power) is kept. A series
// that is zero to its known order keeps one zero coefficient at max_power.
void RegulatorSeries::normalize() {
    if (coeffs_.empty()) {
        return;
    }
    std::size_t lead = 0;
    while (lead + 1 < coeffs_.size() && coeffs_[lead] == Complex{}) {
        ++lead;
    }
    if (lead > 0) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
        min_power_ += static_cast<int>(lead);
    }
}

Complex RegulatorSeries::coefficient(int power) const {
    if (power > max_power()) {
        throw DomainError("coefficient requested beyond the truncation order");
    }
    if (power < min_power_) {
        return 0.0;
    }
    return coeffs_[static_cast<std::size_t>(power - min_power_)];
}

Complex RegulatorSeries::evaluate(Complex xi) const {
    Complex acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * xi + *it;
    }
    return acc * std::pow(xi, min_power_);
}

RegulatorSeries RegulatorSeries::scaled(double scale) const {
    std::vector<Complex> v(coeffs_);
    for (std::size_t i = 0; i < v.size(); ++i) {
        v[i] *= std::pow(scale, min_power_ + static_cast<int>(i));
    }
    return RegulatorSeries(label_, min_power_, std::move(v));
}

RegulatorSeries RegulatorSeries::shifted(int k) const {
    return RegulatorSeries(label_, min_power_ + k, coeffs_);
}

RegulatorSeries RegulatorSeries::truncated(int max_power) const {
    if (max_power >= this->max_power()) {
        return *this;
    }
    if (max_power < min_power_) {
        return RegulatorSeries(label_, max_power, {Complex{}});
    }
    std::vector<Complex> v(coeffs_.begin(), coeffs_.begin() + (max_power - min_power_ + 1));
    return RegulatorSeries(label_, min_power_, std::move(v));
}

namespace {

void check_labels(const RegulatorSeries& a, const RegulatorSeries& b) {
    if (a.label() != b.label()) {
        throw DomainError("series with different regulators cannot be combined");
    }
    if (a.empty() || b.empty()) {
        throw DomainError("empty series");
    }
}

RegulatorSeries add_impl(const RegulatorSeries& a, const RegulatorSeries& b, double sign) {
    check_labels(a, b);
    const int lo = std::min(a.min_power(), b.min_power());
    const int hi = std::min(a.max_power(), b.max_power());
    if (hi < lo) {
        return RegulatorSeries(a.label(), hi, {Complex{}});
    }
    std::vector<Complex> v(static_cast<std::size_t>(hi - lo + 1), Complex{});
    for (int p = lo; p <= hi; ++p) {
        v[static_cast<std::size_t>(p - lo)] = a.coefficient(p) + sign * b.coefficient(p);
    }
    return RegulatorSeries(a.label(), lo, std::move(v));
}

RegulatorSeries mul_impl(const RegulatorSeries& a, const RegulatorSeries& b) {
    check_labels(a, b);
    const int lo = a.min_power() + b.min_power();
    const int hi = std::min(a.max_power() + b.min_power(), b.max_power() + a.min_power());
    std::vector<Complex> v(static_cast<std::size_t>(hi - lo + 1), Complex{});
    const auto& ac = a.coeffs();
    const auto& bc = b.coeffs();
    for (std::size_t i = 0; i < v.size(); ++i) {
        Complex acc = 0.0;
        for (std::size_t j = 0; j <= i; ++j) {
            if (j < ac.size() && i - j < bc.size()) {
                acc += ac[j] * bc[i - j];
            }
        }
        v[i] = acc;
    }
    return RegulatorSeries(a.label(), lo, std::move(v));
}

RegulatorSeries inverse(const RegulatorSeries& b) {
    const auto& bc = b.coeffs();
    if (bc.empty() || bc[0] == Complex{}) {
        throw DivisionByZeroSeries("division by a series that vanishes to its known order");
    }
    std::vector<Complex> v(bc.size(), Complex{});
    v[0] = 1.0 / bc[0];
    for (std::size_t n = 1; n < bc.size(); ++n) {
        Complex acc = 0.0;
        for (std::size_t k = 1; k <= n; ++k) {
            acc += bc[k] * v[n - k];
        }
        v[n] = -acc / bc[0];
    }
    return RegulatorSeries(b.label(), -b.min_power(), std::move(v));
}

}  // namespace

RegulatorSeries& RegulatorSeries::operator+=(const RegulatorSeries& o) {
    return *this = add_impl(*this, o, 1.0);
}
RegulatorSeries& RegulatorSeries::operator-=(const RegulatorSeries& o) {
    return *this = add_impl(*this, o, -1.0);
}
RegulatorSeries& RegulatorSeries::operator*=(const RegulatorSeries& o) {
    return *this = mul_impl(*this, o);
}
RegulatorSeries& RegulatorSeries::operator/=(const RegulatorSeries& o) {
    check_labels(*this, o);
    return *this = mul_impl(*this, inverse(o));
}
RegulatorSeries& RegulatorSeries::operator*=(Complex c) {
    for (auto& x : coeffs_) {
        x *= c;
    }
    normalize();
    return *this;
}

RegulatorSeries RegulatorSeries::operator-() const {
    RegulatorSeries r = *this;
    r *= Complex{-1.0};
    return r;
}

std::string RegulatorSeries::to_string() const {
    std::ostringstream os;
    const char* x = label_ == SeriesLabel::Epsilon ? "eps" : "delta";
    char buf[96];
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        std::snprintf(buf, sizeof buf, "(%.12g%+.12gi)*%s^%d + ", coeffs_[i].real(),
                      coeffs_[i].imag(), x, min_power_ + static_cast<int>(i));
        os << buf;
    }
    os << "O(" << x << '^' << max_power() + 1 << ')';
    return os.str();
}

RegulatorSeries operator+(RegulatorSeries a, const RegulatorSeries& b) { return a += b; }
RegulatorSeries operator-(RegulatorSeries a, const RegulatorSeries& b) { return a -= b; }
RegulatorSeries operator*(RegulatorSeries a, const RegulatorSeries& b) { return a *= b; }
RegulatorSeries operator/(RegulatorSeries a, const RegulatorSeries& b) { return a /= b; }
RegulatorSeries operator*(RegulatorSeries a, Complex c) { return a *= c; }
RegulatorSeries operator*(Complex c, RegulatorSeries a) { return a *= c; }

RegulatorSeries series_arith(const RegulatorSeries& a, const RegulatorSeries& b, SeriesOp op) {
    switch (op) {
        case SeriesOp::Add: return a + b;
        case SeriesOp::Sub: return a - b;
        case SeriesOp::Mul: return a * b;
        case SeriesOp::Div: return a / b;
    }
    throw DomainError("unknown series operation");
}

RegulatorSeries exp(const RegulatorSeries& a) {
    if (a.min_power() < 0) {
        throw DomainError("exp of a series with a pole part");
    }
    const int n_max = a.max_power();
    if (n_max < 0) {
        throw DomainError("exp of an empty series");
    }
    std::vector<Complex> f(static_cast<std::size_t>(n_max + 1), Complex{});
    for (int p = a.min_power(); p <= n_max; ++p) {
        f[static_cast<std::size_t>(p)] = a.coefficient(p);
    }
    std::vector<Complex> g(f.size(), Complex{});
    g[0] = std::exp(f[0]);
    for (std::size_t n = 1; n < f.size(); ++n) {
        Complex acc = 0.0;
        for (std::size_t k = 1; k <= n; ++k) {
            acc += static_cast<double>(k) * f[k] * g[n - k];
        }
        g[n] = acc / static_cast<double>(n);
    }
    return RegulatorSeries(a.label(), 0, std::move(g));
}

RegulatorSeries log(const RegulatorSeries& a) {
    if (a.min_power() != 0 || a.coeffs().front() == Complex{}) {
        throw DomainError("log of a series needs a nonzero constant term");
    }
    const auto& f = a.coeffs();
    std::vector<Complex> g(f.size(), Complex{});
    g[0] = std::log(f[0]);
    for (std::size_t n = 1; n < f.size(); ++n) {
        Complex acc = 0.0;
        for (std::size_t k = 1; k < n; ++k) {
            acc += static_cast<double>(k) * g[k] * f[n - k];
        }
        g[n] = (f[n] - acc / static_cast<double>(n)) / f[0];
    }
    return RegulatorSeries(a.label(), 0, std::move(g));
}

RegulatorSeries series_exp_log(const RegulatorSeries& a, SeriesFn fn) {
    return fn == SeriesFn::Exp ? exp(a) : log(a);
}

RegulatorSeries gamma_series(double a, int order, SeriesLabel label) {
    if (a <= 0.0 && a == std::round(a)) {
        // Gamma(-n + x) = Gamma(1 + x) / (x (x - 1) ... (x - n)).
        const int n = static_cast<int>(-a);
        RegulatorSeries num = gamma_series(1.0, order + 1, label);
        RegulatorSeries den = RegulatorSeries::monomial(1.0, 1, order + 2, label);
        for (int j = 1; j <= n; ++j) {
            den *= RegulatorSeries(label, 0, {Complex(-j), Complex(1.0)});
        }
        return (num / den).truncated(order);
    }
    if (order < 0) {
        return RegulatorSeries(label, order, {Complex{}});
    }
    // log Gamma(a + x) = log Gamma(a) + sum_k psi^(k-1)(a) x^k / k!
    std::vector<Complex> lg(static_cast<std::size_t>(order + 1), Complex{});
    double fact = 1.0;
    for (int k = 1; k <= order; ++k) {
        fact *= k;
        lg[static_cast<std::size_t>(k)] = specfun::polygamma_fd(k - 1, a) / fact;
    }
    RegulatorSeries s(label, 0, std::move(lg));
    return exp(s) * specfun::gamma(a);
}

RegulatorSeries power_series_from_log(Complex log_base, int order, SeriesLabel label) {
    std::vector<Complex> v(static_cast<std::size_t>(std::max(order, 0) + 1), Complex{});
    Complex term = 1.0;
    for (std::size_t k = 0; k < v.size(); ++k) {
        v[k] = term;
        term *= log_base / static_cast<double>(k + 1);
    }
    return RegulatorSeries(label, 0, std::move(v));
}

RegulatorSeries power_series(Complex base, int order, SeriesLabel label) {
    if (base == Complex{}) {
        throw DomainError("power_series: zero base");
    }
    return power_series_from_log(std::log(base), order, label);
}

namespace {

// log(1 - z) with the cut side of z carried over (1 - z moves the other way).
Complex log_one_minus(Complex z, Cut cut) {
    const Complex w = 1.0 - z;
    if (specfun::detail::on_cut(z) && cut == Cut::PrincipalValue) {
        return std::log(std::abs(w));
    }
    return log_side(w, -side_of(cut));
}

}  // namespace

RegulatorSeries f21_1e_expansion(Complex z, int order, Cut cut) {
    if (z == Complex{1.0, 0.0}) {
        throw DomainError("f21_1e_expansion: z = 1");
    }
    if (order > 2) {
        throw DomainError("f21_1e_expansion: orders above 2 are not available");
    }
    std::vector<Complex> v{1.0};
    if (order >= 1) {
        v.push_back(-log_one_minus(z, cut));
    }
    if (order >= 2) {
        v.push_back(-specfun::li2(z, cut));
    }
    return RegulatorSeries(SeriesLabel::Epsilon, 0, std::move(v));
}

RegulatorSeries f21_2e_expansion(Complex z, int order, Cut cut) {
    if (z == Complex{1.0, 0.0}) {
        throw DomainError("f21_2e_expansion: z = 1");
    }
    if (order > 1) {
        throw DomainError("f21_2e_expansion: orders above 1 are not available");
    }
    std::vector<Complex> v{-log_one_minus(z, cut)};
    if (order >= 1) {
        v.push_back(-specfun::li2(z, cut));
    }
    return RegulatorSeries(SeriesLabel::Epsilon, 0, std::move(v));
}

}  // namespace mbbox
