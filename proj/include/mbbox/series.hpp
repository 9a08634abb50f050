#pragma once

// Truncated Laurent series in one formal small parameter.
//
// A series stores the coefficients of xi^min_power ... xi^max_power and stands
// for that polynomial plus O(xi^(max_power+1)). Arithmetic tracks the order to
// which each result is actually known, so a product never claims more accuracy
// than its factors support.

#include <string>
#include <vector>

#include "mbbox/complex.hpp"

namespace mbbox {

enum class SeriesLabel { Epsilon, Delta };

class RegulatorSeries {
public:
    RegulatorSeries() = default;
    RegulatorSeries(SeriesLabel label, int min_power, std::vector<Complex> coeffs);

    /// c + O(xi^(max_power+1)).
    static RegulatorSeries constant(Complex c, int max_power,
                                    SeriesLabel label = SeriesLabel::Epsilon);
    /// c * xi^power, known exactly through max_power.
    static RegulatorSeries monomial(Complex c, int power, int max_power,
                                    SeriesLabel label = SeriesLabel::Epsilon);

    SeriesLabel label() const noexcept { return label_; }
    int min_power() const noexcept { return min_power_; }
    int max_power() const noexcept { return min_power_ + static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Complex>& coeffs() const noexcept { return coeffs_; }
    bool empty() const noexcept { return coeffs_.empty(); }

    /// Coefficient of xi^power; zero below min_power. Throws above max_power.
    Complex coefficient(int power) const;

    /// Evaluates the stored polynomial at a numeric xi.
    Complex evaluate(Complex xi) const;

    /// S(xi) -> S(scale * xi).
    RegulatorSeries scaled(double scale) const;
    /// xi^k * S(xi).
    RegulatorSeries shifted(int k) const;
    /// Drops everything above max_power.
    RegulatorSeries truncated(int max_power) const;

    RegulatorSeries& operator+=(const RegulatorSeries& o);
    RegulatorSeries& operator-=(const RegulatorSeries& o);
    RegulatorSeries& operator*=(const RegulatorSeries& o);
    RegulatorSeries& operator/=(const RegulatorSeries& o);
    RegulatorSeries& operator*=(Complex c);

    RegulatorSeries operator-() const;

    std::string to_string() const;

private:
    void normalize();

    SeriesLabel label_ = SeriesLabel::Epsilon;
    int min_power_ = 0;
    std::vector<Complex> coeffs_;
};

RegulatorSeries operator+(RegulatorSeries a, const RegulatorSeries& b);
RegulatorSeries operator-(RegulatorSeries a, const RegulatorSeries& b);
RegulatorSeries operator*(RegulatorSeries a, const RegulatorSeries& b);
RegulatorSeries operator/(RegulatorSeries a, const RegulatorSeries& b);
RegulatorSeries operator*(RegulatorSeries a, Complex c);
RegulatorSeries operator*(Complex c, RegulatorSeries a);

enum class SeriesOp { Add, Sub, Mul, Div };
enum class SeriesFn { Exp, Log };

RegulatorSeries series_arith(const RegulatorSeries& a, const RegulatorSeries& b, SeriesOp op);
RegulatorSeries series_exp_log(const RegulatorSeries& a, SeriesFn fn);

RegulatorSeries exp(const RegulatorSeries& a);
RegulatorSeries log(const RegulatorSeries& a);

/// Gamma(a + xi) through xi^order. At a non-positive integer the pole part is
/// included, e.g. Gamma(xi) = 1/xi - gamma_E + O(xi).
RegulatorSeries gamma_series(double a, int order, SeriesLabel label = SeriesLabel::Epsilon);

/// base^xi = exp(xi log base) through xi^order, principal logarithm.
RegulatorSeries power_series(Complex base, int order, SeriesLabel label = SeriesLabel::Epsilon);
/// exp(xi * log_base) for a caller-chosen branch of the logarithm.
RegulatorSeries power_series_from_log(Complex log_base, int order,
                                      SeriesLabel label = SeriesLabel::Epsilon);

/// Expansion in eps of 2F1(1, eps; eps+1; z): 1 - eps log(1-z) - eps^2 Li2(z) + ...
/// Orders up to 2 are available.
RegulatorSeries f21_1e_expansion(Complex z, int order, Cut cut = Cut::PrincipalValue);

/// Expansion in eps of z/(1+eps) 2F1(1, 1+eps; 2+eps; z): -log(1-z) - eps Li2(z) + ...
/// Orders up to 1 are available.
RegulatorSeries f21_2e_expansion(Complex z, int order, Cut cut = Cut::PrincipalValue);

}  // namespace mbbox
