#pragma once

#include <array>

#include "slope/algebra.hpp"

namespace slope {

// Which cone of Minkowski 3-space a constant slope surface lives in. The
// cone fixes the hyperbolic angle law: xi = coth(theta) ln u for the
// timelike cone, xi = tanh(theta) ln u for the spacelike cone.
enum class ConeKind { TimelikeCone, SpacelikeCone };

// Rotation of E_1^3: 3x3 row-major matrix R with R^T eps R = eps
// (eps = diag(-1,1,1)) and det R = 1, acting on (e1, e2, e3) columns.
struct LorentzRotation {
    std::array<std::array<double, 3>, 3> m{};

    static LorentzRotation identity() {
        LorentzRotation r;
        r.m = {{{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {0.0, 0.0, 1.0}}};
        return r;
    }

    Vec3M operator*(Vec3M v) const {
        return {m[0][0] * v.e1 + m[0][1] * v.e2 + m[0][2] * v.e3,
                m[1][0] * v.e1 + m[1][1] * v.e2 + m[1][2] * v.e3,
                m[2][0] * v.e1 + m[2][1] * v.e2 + m[2][2] * v.e3};
    }

    LorentzRotation operator*(const LorentzRotation& o) const {
        LorentzRotation r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                r.m[i][j] = m[i][0] * o.m[0][j] + m[i][1] * o.m[1][j] + m[i][2] * o.m[2][j];
        return r;
    }

    double det() const {
        return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
               m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
               m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    }
};

struct OrthogonalityReport {
    double orthogonality_residual;  // max |R^T eps R - eps|
    double det_residual;            // |det R - 1|
    bool ok;
};

// Rotation matrix of a unit timelike split quaternion (|I_p - 1| <= 1e-9,
// else NotUnitTimelike). For every pure q the matrix satisfies
// R * V_q = vector part of p * q * p^-1.
LorentzRotation rotation_matrix(const SplitQuaternion& p);

// Rotates w by the sandwich product p * w * p^-1 (w embedded as a pure
// quaternion). Preserves the Minkowski metric.
Vec3M sandwich(const SplitQuaternion& p, Vec3M w);

// cosh(s) - sinh(s) * axis with s = xi/2 when half_angle is set, s = xi
// otherwise. axis must be unit spacelike (<axis,axis> = 1 within 1e-9);
// the result is unit timelike with spacelike vector part. The half-angle
// quaternion generates, via rotation_matrix, the rotation through the full
// hyperbolic angle xi about the axis.
SplitQuaternion slope_quaternion(double xi, Vec3M axis, bool half_angle);

// Rotation operator of the constant slope construction:
// rotation_matrix(slope_quaternion(xi(u), curve_derivative, half)) with
// xi(u) = coth(theta) ln u (timelike cone) or tanh(theta) ln u (spacelike).
LorentzRotation slope_rotation(double theta, double u, Vec3M curve_derivative, ConeKind cone);

// Residuals of R^T eps R = eps and det R = 1; ok iff both are <= 1e-9.
OrthogonalityReport is_lorentz_orthogonal(const LorentzRotation& r);

}  // namespace slope
