#pragma once

// One entry point per evaluation route, shared by the command-line tool, the
// verification suites and the Python module.

#include <optional>

#include "mbbox/kinematics.hpp"
#include "mbbox/series.hpp"

namespace mbbox {

struct QuadOverrides {
    std::optional<int> nodes;
    std::optional<double> height;
};

/// Dispatches on the method and on whether k carries a mass. The residue route
/// stores its breakdown in pieces, with the delta pole under "delta_pole_coefficient".
BoxValue evaluate(const Kinematics& k, Method method, Cut cut = Cut::PrincipalValue,
                  const QuadOverrides& quad = {});

/// Laurent coefficients eps^-2 .. eps^0 from the analytic series.
RegulatorSeries laurent(const Kinematics& k);

}  // namespace mbbox
