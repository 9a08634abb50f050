#pragma once

// Direct-method evaluation of the massless and one-mass scalar boxes.

#include "mbbox/kinematics.hpp"
#include "mbbox/series.hpp"

namespace mbbox {

struct OneMassAux {
    double z0 = 0.0;
    double z1 = 0.0;
};

/// z0 = (m^2-t)/(m^2-t-s), z1 = m^2/(m^2-s).
OneMassAux onemass_aux(const Kinematics& k);

/// Gamma^2(eps)/Gamma(2 eps) * Gamma(1-eps)/eps, formed in log space.
double box_prefactor(double eps);

/// Sum of the two 2F1(1,eps;eps+1;.) channels.
BoxValue massless_box(const Kinematics& k, Cut cut = Cut::PrincipalValue);
/// Same integral written through 2F1(1,1+eps;2+eps;.).
BoxValue massless_box_alt(const Kinematics& k, Cut cut = Cut::PrincipalValue);
/// Laurent coefficients eps^-2 .. eps^0.
RegulatorSeries massless_box_laurent(const Kinematics& k);

BoxValue onemass_box(const Kinematics& k, Cut cut = Cut::PrincipalValue);
BoxValue onemass_box_alt(const Kinematics& k, Cut cut = Cut::PrincipalValue);
RegulatorSeries onemass_box_laurent(const Kinematics& k);

/// Li2((m^2-t)/s) + Li2((m^2-s)/t) - Li2((m^2-s)(m^2-t)/(s t)) - pi^2/6.
Complex onemass_dilog_combination(const Kinematics& k, Cut cut = Cut::PrincipalValue);

}  // namespace mbbox
