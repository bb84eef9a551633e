#include "slope/rotation.hpp"

#include <cmath>
#include <string>

namespace slope {

namespace {

constexpr double kUnitTolerance = 1e-9;

void require_unit_timelike(const SplitQuaternion& p) {
    const double ip = characteristic(p);
    if (std::fabs(ip - 1.0) > kUnitTolerance) {
        throw NotUnitTimelike("quaternion is not unit timelike (I_p = " + std::to_string(ip) +
                              ")");
    }
}

}  // namespace

LorentzRotation rotation_matrix(const SplitQuaternion& p) {
    require_unit_timelike(p);
    const double w = p.w, x = p.x, y = p.y, z = p.z;
    LorentzRotation r;
    r.m[0][0] = w * w + x * x + y * y + z * z;
    r.m[0][1] = 2.0 * diff_of_products(w, z, x, y);
    r.m[0][2] = -2.0 * (w * y + x * z);
    r.m[1][0] = 2.0 * (x * y + z * w);
    r.m[1][1] = w * w - x * x - y * y + z * z;
    r.m[1][2] = -2.0 * (y * z + x * w);
    r.m[2][0] = 2.0 * diff_of_products(x, z, y, w);
    r.m[2][1] = 2.0 * diff_of_products(x, w, y, z);
    r.m[2][2] = w * w - x * x + y * y - z * z;
    return r;
}

Vec3M sandwich(const SplitQuaternion& p, Vec3M w) {
    require_unit_timelike(p);
    // Under the precondition I_p = 1 the inverse is the conjugate; using it
    // directly avoids amplifying the rounding of I_p across the product.
    const SplitQuaternion r = p * SplitQuaternion::pure(w) * conjugate(p);
    return r.vector_part();
}

SplitQuaternion slope_quaternion(double xi, Vec3M axis, bool half_angle) {
    const double axis_sq = minkowski_dot(axis, axis);
    if (std::fabs(axis_sq - 1.0) > kUnitTolerance) {
        throw AxisNotUnitSpacelike("axis is not unit spacelike (<v,v> = " +
                                   std::to_string(axis_sq) + ")");
    }
    const double s = half_angle ? 0.5 * xi : xi;
    const Vec3M v = -std::sinh(s) * axis;
    return {std::cosh(s), v.e1, v.e2, v.e3};
}

LorentzRotation slope_rotation(double theta, double u, Vec3M curve_derivative, ConeKind cone) {
    if (theta <= 0.0) {
        throw DomainError("theta must be positive (got " + std::to_string(theta) + ")");
    }
    if (u <= 0.0) {
        throw DomainError("u must be positive (got " + std::to_string(u) + ")");
    }
    const double slope = cone == ConeKind::TimelikeCone ? 1.0 / std::tanh(theta)
                                                        : std::tanh(theta);
    const double xi = slope * std::log(u);
    return rotation_matrix(slope_quaternion(xi, curve_derivative, /*half_angle=*/true));
}

OrthogonalityReport is_lorentz_orthogonal(const LorentzRotation& r) {
    // R^T eps R with eps = diag(-1, 1, 1): entry (i,j) is
    // -R0i*R0j + R1i*R1j + R2i*R2j.
    double max_residual = 0.0;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            const double entry =
                -r.m[0][i] * r.m[0][j] + r.m[1][i] * r.m[1][j] + r.m[2][i] * r.m[2][j];
            const double eps = i != j ? 0.0 : (i == 0 ? -1.0 : 1.0);
            max_residual = std::max(max_residual, std::fabs(entry - eps));
        }
    }
    const double det_residual = std::fabs(r.det() - 1.0);
    return {max_residual, det_residual, max_residual <= 1e-9 && det_residual <= 1e-9};
}

}  // namespace slope
