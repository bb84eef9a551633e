#pragma once

#include <stdexcept>

namespace slope {

// Base class for every contract violation raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Lightlike split quaternions have no multiplicative inverse.
struct LightlikeNoInverse : Error {
    using Error::Error;
};

// Polar decomposition of a quaternion with vanishing norm.
struct DegenerateQuaternion : Error {
    using Error::Error;
};

// Timelike quaternion whose nonzero vector part is lightlike: not covered
// by any of the three polar forms.
struct LightlikeVectorPart : Error {
    using Error::Error;
};

// Timelike quaternion with spacelike vector part and negative scalar part:
// N(cosh t + v sinh t) has strictly positive scalar part, so only the
// opposite sign of the quaternion admits that form.
struct NonPrincipalBranch : Error {
    using Error::Error;
};

// Rotation requested from a quaternion that is not unit timelike.
struct NotUnitTimelike : Error {
    using Error::Error;
};

// Slope quaternion requested about an axis that is not unit spacelike.
struct AxisNotUnitSpacelike : Error {
    using Error::Error;
};

// Builtin curve name not recognized.
struct UnknownCurve : Error {
    using Error::Error;
};

// Argument outside the mathematical domain of an operation (u <= 0, bad
// grid ranges, non-positive angle, ...).
struct DomainError : Error {
    using Error::Error;
};

// The split-quaternion product Q1 x Q2 acquired a scalar part: the curve
// violates the tangency contract <c, c'> = 0.
struct NonPureProduct : Error {
    using Error::Error;
};

// Surface normal is (numerically) lightlike; the slope measure is undefined.
struct DegenerateNormal : Error {
    using Error::Error;
};

}  // namespace slope
