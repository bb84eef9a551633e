#include "slope/surfaces.hpp"

#include <cmath>
#include <string>

namespace slope {

namespace {

void require_positive_u(double u) {
    if (u <= 0.0) {
        throw DomainError("u must be positive (got " + std::to_string(u) + ")");
    }
}

}  // namespace

SlopeSurfaceConfig make_config(double theta, ConeKind cone, SlopeCurve curve, XiMode xi_mode) {
    if (theta <= 0.0) {
        throw DomainError("theta must be positive (got " + std::to_string(theta) + ")");
    }
    const bool matches = (cone == ConeKind::TimelikeCone && curve.quadric == AmbientQuadric::H2) ||
                         (cone == ConeKind::SpacelikeCone && curve.quadric == AmbientQuadric::S12);
    if (!matches) {
        throw DomainError("curve \"" + curve.name + "\" does not lie on the quadric of the " +
                          (cone == ConeKind::TimelikeCone ? "timelike" : "spacelike") + " cone");
    }
    return {theta, cone, std::move(curve), xi_mode};
}

double xi(const SlopeSurfaceConfig& cfg, double u) {
    require_positive_u(u);
    if (cfg.xi_mode == XiMode::PaperApprox) {
        return std::log(u);
    }
    const double slope = cfg.cone == ConeKind::TimelikeCone ? 1.0 / std::tanh(cfg.theta)
                                                            : std::tanh(cfg.theta);
    return slope * std::log(u);
}

double homothetic_scale(const SlopeSurfaceConfig& cfg, double u) {
    require_positive_u(u);
    return cfg.cone == ConeKind::TimelikeCone ? u * std::sinh(cfg.theta)
                                              : u * std::cosh(cfg.theta);
}

Vec3M surface_direct(const SlopeSurfaceConfig& cfg, double u, double v) {
    const double s = xi(cfg, u);
    const Vec3M c = cfg.curve.eval(v);
    const Vec3M cp = cfg.curve.derivative(v);
    return homothetic_scale(cfg, u) *
           (std::cosh(s) * c + std::sinh(s) * lorentz_cross(c, cp));
}

Vec3M surface_quaternion(const SlopeSurfaceConfig& cfg, double u, double v) {
    const double s = xi(cfg, u);
    const double h = homothetic_scale(cfg, u);
    const SplitQuaternion q1 = slope_quaternion(s, cfg.curve.derivative(v), /*half_angle=*/false);
    const SplitQuaternion q2 = SplitQuaternion::pure(h * cfg.curve.eval(v));
    const SplitQuaternion product = q1 * q2;
    if (std::fabs(product.scalar_part()) > 1e-10 * h) {
        throw NonPureProduct("Q1 x Q2 has scalar part " + std::to_string(product.scalar_part()) +
                             "; curve \"" + cfg.curve.name + "\" violates <c, c'> = 0");
    }
    return product.vector_part();
}

Vec3M surface_homothetic(const SlopeSurfaceConfig& cfg, double u, double v) {
    const HomotheticMotion motion{cfg};
    const SplitQuaternion q_half =
        slope_quaternion(xi(cfg, u), cfg.curve.derivative(v), /*half_angle=*/true);
    return motion.scale(u) * (rotation_matrix(q_half) * cfg.curve.eval(v));
}

Vec3M surface_point(const SlopeSurfaceConfig& cfg, double u, double v, Construction how) {
    switch (how) {
        case Construction::Direct: return surface_direct(cfg, u, v);
        case Construction::Quaternion: return surface_quaternion(cfg, u, v);
        case Construction::Homothetic: return surface_homothetic(cfg, u, v);
    }
    throw DomainError("unknown construction");
}

SplitQuaternion HomotheticMotion::rotation(double u, double v) const {
    return slope_quaternion(xi(cfg, u), cfg.curve.derivative(v), /*half_angle=*/false);
}

SplitQuaternion HomotheticMotion::scaled_rotation(double u, double v) const {
    return scale(u) * rotation(u, v);
}

std::pair<Vec3M, Vec3M> surface_partials(const SlopeSurfaceConfig& cfg, double u, double v) {
    const double step_u = 1e-6 * std::max(1.0, u);
    const double step_v = 1e-6;
    if (u - step_u <= 0.0) {
        throw DomainError("u too close to 0 for central differences (u = " + std::to_string(u) +
                          ")");
    }
    const Vec3M x_u = (1.0 / (2.0 * step_u)) *
                      (surface_direct(cfg, u + step_u, v) - surface_direct(cfg, u - step_u, v));
    const Vec3M x_v = (1.0 / (2.0 * step_v)) *
                      (surface_direct(cfg, u, v + step_v) - surface_direct(cfg, u, v - step_v));
    return {x_u, x_v};
}

double slope_measure_from(Vec3M x, Vec3M x_u, Vec3M x_v) {
    const Vec3M n = lorentz_cross(x_u, x_v);
    const double n_sq = minkowski_dot(n, n);
    // <n,n> computed from binary64 components carries absolute noise
    // ~eps |n|^2_inf; below ~500 eps of that scale the causal character is
    // unknowable and the measure undefined. Steep surfaces (theta = 7) have
    // |<n,n>| / |n|^2 ~ 1e-11 and must still pass.
    const double scale = std::max(1.0, sup_norm(n));
    if (std::fabs(n_sq) <= 1e-13 * scale * scale) {
        throw DegenerateNormal("surface normal is numerically lightlike (<n,n> = " +
                               std::to_string(n_sq) + ")");
    }
    const double x_sq = minkowski_dot(x, x);
    return std::fabs(minkowski_dot(x, n)) /
           (std::sqrt(std::fabs(x_sq)) * std::sqrt(std::fabs(n_sq)));
}

double slope_measure(const SlopeSurfaceConfig& cfg, double u, double v) {
    const auto [x_u, x_v] = surface_partials(cfg, u, v);
    return slope_measure_from(surface_direct(cfg, u, v), x_u, x_v);
}

PointReport classify_point(const SlopeSurfaceConfig& cfg, double u, double v) {
    const auto [x_u, x_v] = surface_partials(cfg, u, v);
    const Vec3M x = surface_direct(cfg, u, v);
    PointReport report;
    report.E = minkowski_dot(x_u, x_u);
    report.F = minkowski_dot(x_u, x_v);
    report.G = minkowski_dot(x_v, x_v);
    report.position_norm_sq = minkowski_dot(x, x);
    report.spacelike_surface = report.E > 0.0 && report.E * report.G - report.F * report.F > 0.0;
    report.cone_correct = cfg.cone == ConeKind::TimelikeCone ? report.position_norm_sq < 0.0
                                                             : report.position_norm_sq > 0.0;
    report.future_pointing = x.e1 > 0.0;
    return report;
}

SurfaceSampleGrid sample_grid(const SlopeSurfaceConfig& cfg, double u_min, double u_max,
                              double v_min, double v_max, int nu, int nv, Construction how) {
    if (nu < 2 || nv < 2) {
        throw DomainError("grid needs at least 2 samples per axis");
    }
    if (!(u_min > 0.0)) {
        throw DomainError("u range must lie in (0, inf); u_min = " + std::to_string(u_min));
    }
    if (!(u_min < u_max)) {
        throw DomainError("u range must be ascending");
    }
    if (!(v_min < v_max)) {
        throw DomainError("v range must be ascending");
    }

    SurfaceSampleGrid grid;
    grid.construction = how;
    grid.u_values.resize(nu);
    grid.v_values.resize(nv);
    for (int i = 0; i < nu; ++i) grid.u_values[i] = u_min + (u_max - u_min) * i / (nu - 1);
    for (int j = 0; j < nv; ++j) grid.v_values[j] = v_min + (v_max - v_min) * j / (nv - 1);

    grid.points.reserve(static_cast<size_t>(nu) * nv);
    for (int i = 0; i < nu; ++i) {
        for (int j = 0; j < nv; ++j) {
            grid.points.push_back(surface_point(cfg, grid.u_values[i], grid.v_values[j], how));
        }
    }
    return grid;
}

}  // namespace slope
