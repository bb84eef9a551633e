#include "slope/algebra.hpp"

#include <string>

namespace slope {

namespace {

CausalCharacter classify(double metric_square, double tol) {
    if (metric_square > tol) return CausalCharacter::Timelike;
    if (metric_square < -tol) return CausalCharacter::Spacelike;
    return CausalCharacter::Lightlike;
}

}  // namespace

CausalCharacter causal_character(const SplitQuaternion& p) {
    // I_p > 0 timelike, I_p < 0 spacelike, else lightlike.
    return classify(characteristic(p), classification_tolerance(sup_norm(p)));
}

CausalCharacter causal_character(Vec3M v) {
    // For vectors the metric square carries the opposite sign convention:
    // <v, v> < 0 timelike, > 0 spacelike.
    return classify(-minkowski_dot(v, v), classification_tolerance(sup_norm(v)));
}

SplitQuaternion inverse(const SplitQuaternion& p) {
    const double ip = characteristic(p);
    if (std::fabs(ip) <= classification_tolerance(sup_norm(p))) {
        throw LightlikeNoInverse("lightlike split quaternion has no inverse (I_p = " +
                                 std::to_string(ip) + ")");
    }
    return (1.0 / ip) * conjugate(p);
}

PolarForm polar_decompose(const SplitQuaternion& p) {
    const double tol = classification_tolerance(sup_norm(p));
    const double ip = characteristic(p);
    const double np = std::sqrt(std::fabs(ip));
    if (np <= tol) {
        throw DegenerateQuaternion("polar decomposition of a (near-)lightlike quaternion");
    }

    const Vec3M v = p.vector_part();
    const double vsq = minkowski_dot(v, v);

    if (ip < 0.0) {
        // Spacelike quaternion: vector part is necessarily spacelike.
        // w = N sinh t, V = N cosh t * axis.
        const double m = std::sqrt(vsq);
        return {PolarVariant::SpacelikeForm, np, std::asinh(p.w / np), (1.0 / m) * v};
    }

    // Timelike quaternion. The vector part may be spacelike, timelike or
    // (exceptionally) lightlike.
    if (v.e1 == 0.0 && v.e2 == 0.0 && v.e3 == 0.0) {
        if (p.w > 0.0) {
            return {PolarVariant::TimelikeSpacelikeAxis, np, 0.0, {0.0, 1.0, 0.0}};
        }
        return {PolarVariant::TimelikeTimelikeAxis, np, std::acos(-1.0), {1.0, 0.0, 0.0}};
    }
    if (std::fabs(vsq) <= tol) {
        throw LightlikeVectorPart(
            "timelike quaternion with lightlike vector part has no polar form");
    }

    if (vsq > 0.0) {
        // w = N cosh t > 0, V = N sinh t * axis.
        if (p.w < 0.0) {
            throw NonPrincipalBranch(
                "timelike quaternion with spacelike vector part and negative scalar "
                "part is not N(cosh t + v sinh t) for any real t");
        }
        const double s = std::sqrt(vsq);
        return {PolarVariant::TimelikeSpacelikeAxis, np, std::atanh(s / p.w), (1.0 / s) * v};
    }

    // Timelike vector part: w = N cos t, V = N sin t * axis, t in (0, pi).
    const double b = std::sqrt(-vsq);
    return {PolarVariant::TimelikeTimelikeAxis, np, std::atan2(b, p.w), (1.0 / b) * v};
}

SplitQuaternion reconstruct(const PolarForm& f) {
    double scalar = 0.0;
    double radial = 0.0;
    switch (f.variant) {
        case PolarVariant::SpacelikeForm:
            scalar = std::sinh(f.angle);
            radial = std::cosh(f.angle);
            break;
        case PolarVariant::TimelikeSpacelikeAxis:
            scalar = std::cosh(f.angle);
            radial = std::sinh(f.angle);
            break;
        case PolarVariant::TimelikeTimelikeAxis:
            scalar = std::cos(f.angle);
            radial = std::sin(f.angle);
            break;
    }
    const Vec3M v = (f.magnitude * radial) * f.axis;
    return {f.magnitude * scalar, v.e1, v.e2, v.e3};
}

}  // namespace slope
