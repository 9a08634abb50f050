#include "mbbox/kinematics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace mbbox {

double kinematic_scale(const Kinematics& k) {
    double scale = std::max(std::abs(k.s), std::abs(k.t));
    if (k.msq) {
        scale = std::max(scale, std::abs(*k.msq));
    }
    return scale;
}

void validate(const Kinematics& k) {
    if (!std::isfinite(k.s) || !std::isfinite(k.t) || !std::isfinite(k.eps) ||
        (k.msq && !std::isfinite(*k.msq))) {
        throw DomainError("kinematics must be finite");
    }
    if (!(k.eps > 0.0 && k.eps < 1.0)) {
        std::ostringstream os;
        os << "eps = " << k.eps << " is outside (0, 1)";
        throw DomainError(os.str());
    }
    if (!(k.s < 0.0) || !(k.t < 0.0) || (k.msq && !(*k.msq < 0.0))) {
        std::ostringstream os;
        os << "Euclidean region requires s < 0, t < 0";
        if (k.msq) {
            os << ", m^2 < 0";
        }
        os << " (got s = " << k.s << ", t = " << k.t;
        if (k.msq) {
            os << ", m^2 = " << *k.msq;
        }
        os << ")";
        throw EuclideanRegionViolation(os.str());
    }
    if (!k.msq) {
        return;
    }
    const double m = *k.msq;
    const double tiny = 1e-12 * kinematic_scale(k);
    if (std::abs(k.s + k.t - m) < tiny) {
        throw DegenerateKinematics("s + t - m^2 vanishes");
    }
    if (std::abs(k.s - m) < tiny) {
        throw DegenerateKinematics("s = m^2");
    }
    if (std::abs(k.t - m) < tiny) {
        throw DegenerateKinematics("t = m^2");
    }
}

std::string to_string(Method m) {
    switch (m) {
        case Method::ClosedForm: return "closed";
        case Method::ClosedFormAlt: return "closed_alt";
        case Method::MellinBarnes: return "mb";
        case Method::Residue: return "residue";
        case Method::FeynmanQuadrature: return "feynman";
        case Method::LaurentSeries: return "laurent";
    }
    return "unknown";
}

Method method_from_string(const std::string& name) {
    for (Method m : {Method::ClosedForm, Method::ClosedFormAlt, Method::MellinBarnes,
                     Method::Residue, Method::FeynmanQuadrature, Method::LaurentSeries}) {
        if (to_string(m) == name) {
            return m;
        }
    }
    if (name == "closed_form") return Method::ClosedForm;
    if (name == "closed_form_alt") return Method::ClosedFormAlt;
    if (name == "oracle") return Method::FeynmanQuadrature;
    throw DomainError("unknown method '" + name + "'");
}

}  // namespace mbbox
