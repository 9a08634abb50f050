#pragma once

// Mellin-Barnes pipelines for the massless and one-mass boxes: contour
// selection, numerical quadrature along vertical lines, and the
// reconstruction from resummed residue families.

#include <map>
#include <string>
#include <vector>

#include "mbbox/kinematics.hpp"

namespace mbbox::mb {

enum class Rule { GaussLegendreComposite, TanhSinh };

struct ContourSpec {
    double abscissa = 0.0;
    double height = 40.0;
    int nodes = 64;   // Gauss points per panel at the middle refinement level
    Rule rule = Rule::GaussLegendreComposite;
};

enum class Direction { Left, Right };

/// One family of Gamma-function poles, located at base + eps_coeff*eps -/+ n.
struct PoleFamily {
    std::string origin;   // e.g. "Gamma(-w)"
    double base = 0.0;
    double eps_coeff = 0.0;
    Direction direction = Direction::Left;
    int multiplicity = 1;

    double location(double eps, int n) const noexcept {
        const double w0 = base + eps_coeff * eps;
        return direction == Direction::Left ? w0 - n : w0 + n;
    }
};

struct EvalBreakdown {
    std::map<std::string, Complex> pieces;
    Complex delta_pole_coefficient;
};

struct MbOptions {
    double rel_tol = 1e-10;
};

// Massless w-plane.
std::vector<PoleFamily> massless_pole_families();
bool massless_contour_feasible(double c, double eps);
ContourSpec select_contour_massless(double eps);
/// Same, with the height widened for a large ratio of invariants.
ContourSpec select_contour_massless(const Kinematics& k);
Complex mb_massless_integrand(Complex w, const Kinematics& k);
BoxValue mb_massless_eval(const Kinematics& k, const ContourSpec& c, const MbOptions& opt = {});

// One-mass (alpha, beta) planes.
struct OneMassContours {
    ContourSpec alpha;
    ContourSpec beta;
};
/// Real parts of the seven Gamma arguments of the double representation.
std::vector<double> onemass_gamma_arguments(double a0, double b0, double eps);
bool onemass_contour_feasible(double a0, double b0, double eps);
OneMassContours select_contour_onemass(double eps);
/// Integrand of the double representation, including 1/Gamma(2 eps).
Complex mb_onemass_integrand(Complex alpha, Complex beta, const Kinematics& k);
BoxValue mb_onemass_eval(const Kinematics& k, const ContourSpec& ca, const ContourSpec& cb,
                         const MbOptions& opt = {});

// Resummed residues.
EvalBreakdown residue_massless(const Kinematics& k, Cut cut = Cut::PrincipalValue);
EvalBreakdown residue_onemass(const Kinematics& k, Cut cut = Cut::PrincipalValue);

/// Debug oracle: residues of the massless integrand summed one by one.
/// Each residue is a contour integral around a small circle. Closing to the
/// right needs |t/s| < 1, to the left |s/t| < 1.
struct ResidueSum {
    Complex value;
    double tail_estimate = 0.0;
    int terms = 0;
};
Complex massless_residue_at(Complex w0, double radius, const Kinematics& k);
ResidueSum massless_residue_sum(const Kinematics& k, Direction closure, int terms = 50);

}  // namespace mbbox::mb
