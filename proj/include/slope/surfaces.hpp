#pragma once

#include <utility>
#include <vector>

#include "slope/curves.hpp"
#include "slope/rotation.hpp"

namespace slope {

// Exact uses xi = coth(theta) ln u (timelike cone) / tanh(theta) ln u
// (spacelike cone). PaperApprox substitutes xi = ln u, the theta = 7
// approximation used by the worked examples; it exists only to reproduce
// their closed forms.
enum class XiMode { Exact, PaperApprox };

// The three equivalent constructions of the same surface.
enum class Construction { Direct, Quaternion, Homothetic };

// Spacelike constant slope surface: constant angle theta > 0, cone, and a
// generating curve whose quadric must match the cone (H2 for the timelike
// cone, S12 for the spacelike cone).
struct SlopeSurfaceConfig {
    double theta;
    ConeKind cone;
    SlopeCurve curve;
    XiMode xi_mode = XiMode::Exact;
};

// Validates theta > 0 and the curve/cone pairing; throws DomainError.
SlopeSurfaceConfig make_config(double theta, ConeKind cone, SlopeCurve curve,
                               XiMode xi_mode = XiMode::Exact);

// Hyperbolic rotation angle at radius u > 0.
double xi(const SlopeSurfaceConfig& cfg, double u);

// h(u) = u sinh(theta) (timelike cone) or u cosh(theta) (spacelike cone);
// equals the Minkowski norm of the position vector at radius u.
double homothetic_scale(const SlopeSurfaceConfig& cfg, double u);

// x(u,v) = h(u) (cosh xi * c(v) + sinh xi * (c ^ c')(v)).
Vec3M surface_direct(const SlopeSurfaceConfig& cfg, double u, double v);

// x(u,v) as the split-quaternion product Q1 x Q2 with the full-angle
// Q1 = cosh xi - sinh xi * c'(v) and the pure Q2 = h(u) c(v). Throws
// NonPureProduct when the product's scalar part exceeds 1e-10 h(u), which
// signals a curve violating the tangency contract.
Vec3M surface_quaternion(const SlopeSurfaceConfig& cfg, double u, double v);

// x(u,v) = h(u) * R_Q c(v), where R_Q is the rotation of the half-angle
// slope quaternion about c'(v).
Vec3M surface_homothetic(const SlopeSurfaceConfig& cfg, double u, double v);

Vec3M surface_point(const SlopeSurfaceConfig& cfg, double u, double v, Construction how);

// Rotational homothetic motion behind surface_homothetic: scale h(u),
// full-angle rotation quaternion Q1(u, v), zero translation.
struct HomotheticMotion {
    SlopeSurfaceConfig cfg;

    double scale(double u) const { return homothetic_scale(cfg, u); }
    SplitQuaternion rotation(double u, double v) const;
    // Q~(u,v) = h(u) Q1(u,v); the surface is Q~(u,v) x c(v).
    SplitQuaternion scaled_rotation(double u, double v) const;
};

// Central finite differences (x_u, x_v) of the Direct construction with
// steps 1e-6 max(1,u) and 1e-6.
std::pair<Vec3M, Vec3M> surface_partials(const SlopeSurfaceConfig& cfg, double u, double v);

// |<x, n>| / (sqrt|<x,x>| sqrt|<n,n>|) with n = x_u ^ x_v. Constant over a
// constant slope surface; equals cosh(theta) on the timelike cone.
double slope_measure(const SlopeSurfaceConfig& cfg, double u, double v);

// Same measure from precomputed position and partials. Throws
// DegenerateNormal when the normal is numerically lightlike.
double slope_measure_from(Vec3M x, Vec3M x_u, Vec3M x_v);

// First fundamental form and causal diagnostics at one sample.
struct PointReport {
    double E, F, G;             // <x_u,x_u>, <x_u,x_v>, <x_v,x_v>
    double position_norm_sq;    // <x, x>
    bool spacelike_surface;     // E > 0 and EG - F^2 > 0
    bool cone_correct;          // sign of <x,x> matches the cone
    bool future_pointing;       // x.e1 > 0 (observed, not enforced)
};

PointReport classify_point(const SlopeSurfaceConfig& cfg, double u, double v);

// Uniform (u, v) grid of surface points, row-major with u as the outer
// index. Deterministic: identical inputs give bit-identical points.
struct SurfaceSampleGrid {
    std::vector<double> u_values;
    std::vector<double> v_values;
    std::vector<Vec3M> points;
    Construction construction = Construction::Direct;

    int nu() const { return static_cast<int>(u_values.size()); }
    int nv() const { return static_cast<int>(v_values.size()); }
    const Vec3M& at(int iu, int iv) const {
        return points[static_cast<size_t>(iu) * v_values.size() + static_cast<size_t>(iv)];
    }
};

SurfaceSampleGrid sample_grid(const SlopeSurfaceConfig& cfg, double u_min, double u_max,
                              double v_min, double v_max, int nu, int nv, Construction how);

}  // namespace slope
