#pragma once

// Fixed-grid verification suites: special-function identities and the
// cross-method agreement of the box evaluators.

#include <string>
#include <vector>

#include "mbbox/kinematics.hpp"

namespace mbbox::verify {

struct Tolerances {
    double identity = 1e-11;
    double cut = 1e-10;        // identities that pass through a principal value
    double beta = 1e-10;
    double cross = 1e-8;       // closed form vs feynman / single MB line
    double mb_double = 1e-6;   // closed form vs the double MB integral
    double residue = 1e-10;
    double spurious = 1e-11;
    double delta_pole = 1e-12;
    double drift = 1e-10;
};

/// Replaces the identity and cross-method tolerances, keeping the others in proportion.
Tolerances with_tolerance(Tolerances t, double tol);

struct Check {
    std::string name;    // e.g. "residue", "dilog_inversion"
    std::string point;   // human-readable inputs
    double deviation = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    std::string error;   // exception text when the evaluation itself failed
};

struct SuiteReport {
    std::string name;
    std::vector<Check> checks;
    double seconds = 0.0;

    bool pass() const;
    int failures() const;
    /// Largest deviation/tolerance ratio.
    double worst_ratio() const;
};

std::vector<Kinematics> massless_grid();   // s, t in {-0.5,-1,-3}, eps in {0.2,0.3,0.45}
std::vector<Kinematics> onemass_grid();    // non-degenerate {-0.5,-1,-2}^3, eps in {0.25,0.4}

SuiteReport identities(const Tolerances& tol = {});
SuiteReport massless(const Tolerances& tol = {});
SuiteReport onemass(const Tolerances& tol = {});

/// Per-point pieces of the massless and one-mass suites, for callers with their own grids.
void massless_point(const Kinematics& k, const Tolerances& tol, std::vector<Check>& out);
void onemass_point(const Kinematics& k, const Tolerances& tol, std::vector<Check>& out);

std::string describe(const Kinematics& k);

}  // namespace mbbox::verify
