#pragma once

#include <cmath>

#include "slope/errors.hpp"

namespace slope {

// Vector in Minkowski 3-space with signature (-,+,+); e1 is the timelike
// direction. Identified with the pure split quaternion (0, e1, e2, e3).
struct Vec3M {
    double e1 = 0.0;
    double e2 = 0.0;
    double e3 = 0.0;
};

inline Vec3M operator+(Vec3M a, Vec3M b) { return {a.e1 + b.e1, a.e2 + b.e2, a.e3 + b.e3}; }
inline Vec3M operator-(Vec3M a, Vec3M b) { return {a.e1 - b.e1, a.e2 - b.e2, a.e3 - b.e3}; }
inline Vec3M operator-(Vec3M a) { return {-a.e1, -a.e2, -a.e3}; }
inline Vec3M operator*(double s, Vec3M a) { return {s * a.e1, s * a.e2, s * a.e3}; }
inline Vec3M operator*(Vec3M a, double s) { return s * a; }

// a*b - c*d with the c*d rounding error folded back in (Kahan, via fma).
// Keeps the result accurate in the relative sense even when the two
// products cancel, e.g. sinh^2 v - cosh^2 v for hyperbolic curves.
inline double diff_of_products(double a, double b, double c, double d) {
    const double cd = c * d;
    const double rounding = std::fma(-c, d, cd);
    return std::fma(a, b, -cd) + rounding;
}

// Index-1 metric <a, b> = -a1*b1 + a2*b2 + a3*b3. The timelike product is
// cancelled against e3 first: on the cone-adjacent vectors this library
// produces, e1 and e3 grow together while the metric value stays small.
inline double minkowski_dot(Vec3M a, Vec3M b) {
    return diff_of_products(a.e3, b.e3, a.e1, b.e1) + a.e2 * b.e2;
}

// Lorentzian cross product a ^ b. Orthogonal to both factors and satisfies
// <a^b, a^b> = <a,b>^2 - <a,a><b,b>.
inline Vec3M lorentz_cross(Vec3M a, Vec3M b) {
    return {diff_of_products(a.e3, b.e2, a.e2, b.e3),
            diff_of_products(a.e3, b.e1, a.e1, b.e3),
            diff_of_products(a.e1, b.e2, a.e2, b.e1)};
}

inline double sup_norm(Vec3M a) {
    return std::max({std::fabs(a.e1), std::fabs(a.e2), std::fabs(a.e3)});
}

enum class CausalCharacter { Spacelike, Timelike, Lightlike };

// Split quaternion w + x*i + y*j + z*k with i^2 = -1, j^2 = k^2 = +1,
// ij = -ji = k, jk = -kj = -i, ki = -ik = j.
struct SplitQuaternion {
    double w = 0.0;
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    static SplitQuaternion identity() { return {1.0, 0.0, 0.0, 0.0}; }
    static SplitQuaternion pure(Vec3M v) { return {0.0, v.e1, v.e2, v.e3}; }

    double scalar_part() const { return w; }
    Vec3M vector_part() const { return {x, y, z}; }
};

inline SplitQuaternion operator+(const SplitQuaternion& a, const SplitQuaternion& b) {
    return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z};
}
inline SplitQuaternion operator-(const SplitQuaternion& a, const SplitQuaternion& b) {
    return {a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z};
}
inline SplitQuaternion operator-(const SplitQuaternion& a) { return {-a.w, -a.x, -a.y, -a.z}; }
inline SplitQuaternion operator*(double s, const SplitQuaternion& a) {
    return {s * a.w, s * a.x, s * a.y, s * a.z};
}
inline SplitQuaternion operator*(const SplitQuaternion& a, double s) { return s * a; }

// Split-quaternion product: scalar part p1*q1 + <Vp, Vq>, vector part
// p1*Vq + q1*Vp + Vp ^ Vq. Associative, not commutative.
inline SplitQuaternion operator*(const SplitQuaternion& p, const SplitQuaternion& q) {
    return {p.w * q.w + (-p.x * q.x + p.y * q.y + p.z * q.z),
            p.w * q.x + q.w * p.x + diff_of_products(p.z, q.y, p.y, q.z),
            p.w * q.y + q.w * p.y + diff_of_products(p.z, q.x, p.x, q.z),
            p.w * q.z + q.w * p.z + diff_of_products(p.x, q.y, p.y, q.x)};
}

inline SplitQuaternion conjugate(const SplitQuaternion& p) { return {p.w, -p.x, -p.y, -p.z}; }

// Characteristic I_p = w^2 + x^2 - y^2 - z^2; equals the scalar part of
// p * conj(p) and is multiplicative under the product.
inline double characteristic(const SplitQuaternion& p) {
    return p.w * p.w + p.x * p.x - p.y * p.y - p.z * p.z;
}

// N_p = sqrt(|I_p|).
inline double norm(const SplitQuaternion& p) { return std::sqrt(std::fabs(characteristic(p))); }

inline double sup_norm(const SplitQuaternion& p) {
    return std::max({std::fabs(p.w), std::fabs(p.x), std::fabs(p.y), std::fabs(p.z)});
}

// Classification tolerance: 1e-12 scaled by the squared max magnitude of
// the components, floored at 1.
inline double classification_tolerance(double sup) {
    return 1e-12 * std::max(1.0, sup * sup);
}

CausalCharacter causal_character(const SplitQuaternion& p);
CausalCharacter causal_character(Vec3M v);

// p^-1 = conj(p) / I_p. Throws LightlikeNoInverse when |I_p| is within the
// classification tolerance of zero.
SplitQuaternion inverse(const SplitQuaternion& p);

inline SplitQuaternion commutator(const SplitQuaternion& a, const SplitQuaternion& b) {
    return a * b - b * a;
}

enum class PolarVariant {
    SpacelikeForm,         // N (sinh t + v cosh t), v unit spacelike
    TimelikeSpacelikeAxis, // N (cosh t + v sinh t), v unit spacelike
    TimelikeTimelikeAxis,  // N (cos t  + v sin t),  v unit timelike
};

struct PolarForm {
    PolarVariant variant;
    double magnitude;  // N_p >= 0
    double angle;      // hyperbolic or circular, depending on the variant
    Vec3M axis;        // unit vector (spacelike or timelike per variant)
};

// Canonical polar decomposition. Variant selection follows the causal
// characters of p and its vector part. A zero vector part decomposes with
// a documented default axis: (0,1,0) for positive scalar part (angle 0),
// (1,0,0) with angle pi for negative scalar part.
PolarForm polar_decompose(const SplitQuaternion& p);

// Evaluates the polar form back into a split quaternion.
SplitQuaternion reconstruct(const PolarForm& f);

}  // namespace slope
