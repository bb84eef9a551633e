#pragma once

#include <limits>
#include <map>
#include <string>
#include <vector>

#include "slope/surfaces.hpp"

namespace slope {

struct CheckResult {
    double max_residual;
    double tolerance;
    bool pass;
};

// Check name -> result, in deterministic (sorted) order.
using ValidationReport = std::map<std::string, CheckResult>;

struct ValidationOptions {
    std::vector<std::string> curves = {"h2-geodesic", "s12-circle"};
    std::vector<double> thetas = {0.5, 1.0, 7.0};
    double u_min = 0.5;
    double u_max = 2.0;
    // v range defaults to the curve domain when left unset (NaN).
    double v_min = std::numeric_limits<double>::quiet_NaN();
    double v_max = std::numeric_limits<double>::quiet_NaN();
    int nu = 64;
    int nv = 64;
    // The slope-measure checks differentiate numerically at every sample;
    // a coarser grid keeps them proportionate.
    int angle_nu = 16;
    int angle_nv = 16;
};

// Runs the full invariant suite: curve contracts, Lorentz orthogonality of
// the slope rotations, three-way construction equivalence, position-norm
// law, cone membership, spacelike first fundamental form, and the
// constant-angle property (std-dev and, on the timelike cone at small
// theta, the cosh(theta) value).
ValidationReport run_validation(const ValidationOptions& options);

bool all_pass(const ValidationReport& report);

// {"schema": 1, "checks": {name: {max_residual, tolerance, pass}}, "pass": ...}
std::string report_to_json(const ValidationReport& report);

}  // namespace slope
