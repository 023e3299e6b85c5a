#pragma once

#include "genquat/metric.hpp"
#include "genquat/quaternion.hpp"

namespace genquat {

enum class PolarKind { kIdentity, kElliptic, kHyperbolic };

// Elliptic:   q = cos(angle/2) + sin(angle/2) axis,   <axis, axis> = 1.
// Hyperbolic: q = cosh(angle/2) + sinh(angle/2) axis, <axis, axis> = -1.
// The axis carries the orientation; angle is non-negative when produced by
// polar_form.
struct PolarForm {
  PolarKind kind = PolarKind::kIdentity;
  double angle = 0.0;
  Vec3 axis;
};

// Vector part of q w conj(q) / N_q, computed with two quaternion products.
// Throws kNonInvertible when N_q == 0.
Vec3 conjugation_map(const Signature& sig, const GQuat& q, const Vec3& w);

// Closed form of the conjugation map; column j is the image of the j-th basis
// vector. Non-unit q are handled by dividing the quadratic form by N_q.
Mat3 rotation_matrix(const Signature& sig, const GQuat& q);

// Requires |N_q - 1| <= 1e-9 (kNotUnit). Parabolic quaternions, whose vector
// part is nonzero but null, raise kNullVectorPart. Hyperbolic quaternions on
// the a0 <= -1 sheet have no polar form and raise kNotUnit.
PolarForm polar_form(const Signature& sig, const GQuat& q);

// Throws kInvalidAxis when <axis, axis> is off +-1 by more than 1e-9.
GQuat from_axis_angle(const Signature& sig, const PolarForm& pf);

// Matrix of v -> cross(sig, s, v).
Mat3 axis_skew_matrix(const Signature& sig, const Vec3& s);

// I + sin(phi) S + (1 - cos(phi)) S^2 for alpha, beta > 0, and
// I + sinh(g) S + (cosh(g) - 1) S^2 for alpha > 0 > beta.
Mat3 rodrigues_matrix(const Signature& sig, const PolarForm& pf);

// q1 q2 for unit q1, q2 (kNotUnit otherwise).
GQuat compose(const Signature& sig, const GQuat& q1, const GQuat& q2);

}  // namespace genquat
