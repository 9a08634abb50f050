#pragma once

#include <map>
#include <optional>
#include <string>

#include "mbbox/complex.hpp"

namespace mbbox {

/// External invariants of the box and the dimensional regulator.
struct Kinematics {
    double s = -1.0;
    double t = -1.0;
    std::optional<double> msq;
    double eps = 0.3;

    bool has_mass() const noexcept { return msq.has_value(); }
};

/// Largest of |s|, |t|, |m^2|.
double kinematic_scale(const Kinematics& k);

/// Checks the Euclidean region, the regulator range and the degenerate
/// boundaries. Throws EuclideanRegionViolation, DomainError or DegenerateKinematics.
void validate(const Kinematics& k);

enum class Method {
    ClosedForm,
    ClosedFormAlt,
    MellinBarnes,
    Residue,
    FeynmanQuadrature,
    LaurentSeries,
};

std::string to_string(Method m);
Method method_from_string(const std::string& name);

struct BoxValue {
    Complex value;
    Method method = Method::ClosedForm;
    std::map<std::string, double> diagnostics;
    std::map<std::string, Complex> pieces;
};

}  // namespace mbbox
