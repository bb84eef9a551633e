#pragma once

#include <functional>
#include <string>
#include <string_view>

#include "slope/algebra.hpp"

namespace slope {

// Quadric carrying the generating curve: H2 is the upper hyperboloid sheet
// <f,f> = -1, f.e1 > 0; S12 is the de Sitter pseudo-sphere <g,g> = +1.
enum class AmbientQuadric { H2, S12 };

// Unit-speed spacelike curve on one of the two quadrics. The derivative is
// analytic and supplied with the curve; validate_curve checks the contract
// numerically instead of reparametrizing bad input.
struct SlopeCurve {
    std::function<Vec3M(double)> eval;
    std::function<Vec3M(double)> derivative;
    AmbientQuadric quadric = AmbientQuadric::H2;
    std::string name;
    double v_min = 0.0;
    double v_max = 0.0;
};

// Builtin curves: "h2-geodesic" (cosh v, 0, sinh v) and "s12-circle"
// (0, cos v, sin v), both on [0, 2*pi]. Throws UnknownCurve otherwise.
SlopeCurve builtin_curve(std::string_view name);

// Max residuals of the four curve invariants over uniformly spaced samples.
// Residuals for on_quadric / unit_speed / tangency are absolute; the finite
// difference check is scaled by max(1, |derivative|_inf) at the sample.
struct CurveReport {
    double on_quadric = 0.0;      // | <c,c> -/+ 1 |
    double unit_speed = 0.0;      // | <c',c'> - 1 |
    double tangency = 0.0;        // | <c,c'> |
    double derivative_fd = 0.0;   // central difference vs analytic derivative
    bool upper_sheet = true;      // H2 only: e1 > 0 at every sample

    static constexpr double kContractTolerance = 1e-9;
    static constexpr double kFdTolerance = 1e-6;

    bool pass() const {
        return on_quadric <= kContractTolerance && unit_speed <= kContractTolerance &&
               tangency <= kContractTolerance && derivative_fd <= kFdTolerance && upper_sheet;
    }
};

// Evaluates the invariants at sample_count >= 2 uniform parameters across
// the curve domain. Violations are reported, not thrown.
CurveReport validate_curve(const SlopeCurve& c, int sample_count);

}  // namespace slope
