#include "slope/curves.hpp"

#include <cmath>
#include <numbers>

namespace slope {

SlopeCurve builtin_curve(std::string_view name) {
    const double two_pi = 2.0 * std::numbers::pi;
    if (name == "h2-geodesic") {
        return {[](double v) { return Vec3M{std::cosh(v), 0.0, std::sinh(v)}; },
                [](double v) { return Vec3M{std::sinh(v), 0.0, std::cosh(v)}; },
                AmbientQuadric::H2,
                "h2-geodesic",
                0.0,
                two_pi};
    }
    if (name == "s12-circle") {
        return {[](double v) { return Vec3M{0.0, std::cos(v), std::sin(v)}; },
                [](double v) { return Vec3M{0.0, -std::sin(v), std::cos(v)}; },
                AmbientQuadric::S12,
                "s12-circle",
                0.0,
                two_pi};
    }
    throw UnknownCurve("unknown builtin curve \"" + std::string(name) +
                       "\" (expected h2-geodesic or s12-circle)");
}

CurveReport validate_curve(const SlopeCurve& c, int sample_count) {
    if (sample_count < 2) {
        throw DomainError("validate_curve needs at least 2 samples");
    }
    const double quadric_sign = c.quadric == AmbientQuadric::H2 ? -1.0 : 1.0;
    const double fd_step = 1e-6;

    CurveReport report;
    for (int i = 0; i < sample_count; ++i) {
        const double v = c.v_min + (c.v_max - c.v_min) * i / (sample_count - 1);
        const Vec3M point = c.eval(v);
        const Vec3M tangent = c.derivative(v);

        report.on_quadric =
            std::max(report.on_quadric, std::fabs(minkowski_dot(point, point) - quadric_sign));
        report.unit_speed =
            std::max(report.unit_speed, std::fabs(minkowski_dot(tangent, tangent) - 1.0));
        report.tangency = std::max(report.tangency, std::fabs(minkowski_dot(point, tangent)));
        if (c.quadric == AmbientQuadric::H2 && point.e1 <= 0.0) {
            report.upper_sheet = false;
        }

        const Vec3M fd =
            (1.0 / (2.0 * fd_step)) * (c.eval(v + fd_step) - c.eval(v - fd_step));
        report.derivative_fd = std::max(
            report.derivative_fd, sup_norm(fd - tangent) / std::max(1.0, sup_norm(tangent)));
    }
    return report;
}

}  // namespace slope
