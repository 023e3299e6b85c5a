#include "genquat/rotation.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "genquat/error.hpp"

namespace genquat {

namespace {

constexpr double kUnitTolerance = 1e-9;
constexpr double kAxisTolerance = 1e-9;

double checked_norm(const Signature& sig, const GQuat& q) {
  const double n = norm(sig, q);
  if (n == 0.0 || std::fabs(n) < 1e-300) {
    std::ostringstream os;
    os << "quaternion has norm " << n << "; the conjugation map is undefined";
    throw DomainError(ErrorKind::kNonInvertible, os.str());
  }
  return n;
}

void require_unit(const Signature& sig, const GQuat& q, const char* what) {
  const double n = norm(sig, q);
  if (!(std::fabs(n - 1.0) <= kUnitTolerance)) {
    std::ostringstream os;
    os << what << " needs a unit quaternion, got norm " << n;
    throw DomainError(ErrorKind::kNotUnit, os.str());
  }
}

void require_axis(const Signature& sig, const Vec3& axis, double expected) {
  const double n = inner(sig, axis, axis);
  if (!(std::fabs(n - expected) <= kAxisTolerance)) {
    std::ostringstream os;
    os << "axis has <s,s> = " << n << ", expected " << expected;
    throw DomainError(ErrorKind::kInvalidAxis, os.str());
  }
}

double metric_magnitude(const Signature& sig) {
  return std::max({1.0, std::fabs(sig.alpha()), std::fabs(sig.beta()),
                   std::fabs(sig.alpha_beta())});
}

}  // namespace

Vec3 conjugation_map(const Signature& sig, const GQuat& q, const Vec3& w) {
  const double n = checked_norm(sig, q);
  const GQuat r = multiply(sig, multiply(sig, q, pure(w)), conjugate(q));
  const double qm = max_abs(q);
  const double bound = 1e-12 * qm * qm * max_abs(w) * metric_magnitude(sig);
  if (std::fabs(r.a0) > bound) {
    throw std::logic_error("conjugate of a pure quaternion has a scalar part");
  }
  return {r.a1 / n, r.a2 / n, r.a3 / n};
}

Mat3 rotation_matrix(const Signature& sig, const GQuat& q) {
  const double n = checked_norm(sig, q);
  const double a = sig.alpha();
  const double b = sig.beta();
  const double ab = sig.alpha_beta();
  const double s0 = q.a0 * q.a0;
  const double s1 = q.a1 * q.a1;
  const double s2 = q.a2 * q.a2;
  const double s3 = q.a3 * q.a3;

  Mat3 m;
  m.a = {s0 + a * s1 - b * s2 - ab * s3,
         2.0 * b * (q.a1 * q.a2 - q.a0 * q.a3),
         2.0 * b * (a * q.a1 * q.a3 + q.a0 * q.a2),

         2.0 * a * (q.a1 * q.a2 + q.a0 * q.a3),
         s0 - a * s1 + b * s2 - ab * s3,
         2.0 * a * (b * q.a2 * q.a3 - q.a0 * q.a1),

         2.0 * (a * q.a1 * q.a3 - q.a0 * q.a2),
         2.0 * (q.a0 * q.a1 + b * q.a2 * q.a3),
         s0 - a * s1 - b * s2 + ab * s3};
  if (n != 1.0) {
    for (double& x : m.a) x /= n;
  }
  return m;
}

PolarForm polar_form(const Signature& sig, const GQuat& q) {
  require_unit(sig, q, "polar_form");
  const Vec3 v = q.vector_part();
  PolarForm pf;
  if (v == Vec3{}) return pf;

  const double nv = inner(sig, v, v);
  const double magnitude = std::fabs(sig.alpha()) * v.x1 * v.x1 +
                           std::fabs(sig.beta()) * v.x2 * v.x2 +
                           std::fabs(sig.alpha_beta()) * v.x3 * v.x3;
  if (std::fabs(nv) <= 1e-12 * magnitude) {
    throw DomainError(ErrorKind::kNullVectorPart,
                      "vector part is null (parabolic); no polar form");
  }
  if (nv > 0.0) {
    const double r = std::sqrt(nv);
    pf.kind = PolarKind::kElliptic;
    pf.angle = 2.0 * std::atan2(r, q.a0);
    pf.axis = (1.0 / r) * v;
  } else {
    if (q.a0 < 0.0) {
      throw DomainError(ErrorKind::kNotUnit,
                        "hyperbolic quaternion with a0 <= -1 has no polar form");
    }
    const double r = std::sqrt(-nv);
    pf.kind = PolarKind::kHyperbolic;
    pf.angle = 2.0 * std::asinh(r);
    pf.axis = (1.0 / r) * v;
  }
  return pf;
}

GQuat from_axis_angle(const Signature& sig, const PolarForm& pf) {
  switch (pf.kind) {
    case PolarKind::kIdentity:
      return GQuat::one();
    case PolarKind::kElliptic:
      require_axis(sig, pf.axis, 1.0);
      return from_scalar_vector(std::cos(pf.angle / 2), std::sin(pf.angle / 2) * pf.axis);
    case PolarKind::kHyperbolic:
      require_axis(sig, pf.axis, -1.0);
      return from_scalar_vector(std::cosh(pf.angle / 2), std::sinh(pf.angle / 2) * pf.axis);
  }
  return GQuat::one();
}

Mat3 axis_skew_matrix(const Signature& sig, const Vec3& s) {
  const double a = sig.alpha();
  const double b = sig.beta();
  Mat3 m;
  m.a = {0.0,       -b * s.x3, b * s.x2,
         a * s.x3,  0.0,       -a * s.x1,
         -s.x2,     s.x1,      0.0};
  return m;
}

Mat3 rodrigues_matrix(const Signature& sig, const PolarForm& pf) {
  if (pf.kind == PolarKind::kIdentity) return Mat3::identity();

  double first = 0.0;
  double second = 0.0;
  if (pf.kind == PolarKind::kElliptic) {
    if (!(sig.alpha() > 0.0 && sig.beta() > 0.0)) {
      throw DomainError(ErrorKind::kUnsupportedSignature,
                        "elliptic Rodrigues form needs alpha > 0 and beta > 0");
    }
    require_axis(sig, pf.axis, 1.0);
    first = std::sin(pf.angle);
    second = 1.0 - std::cos(pf.angle);
  } else {
    if (!(sig.alpha() > 0.0 && sig.beta() < 0.0)) {
      throw DomainError(ErrorKind::kUnsupportedSignature,
                        "hyperbolic Rodrigues form needs alpha > 0 and beta < 0");
    }
    require_axis(sig, pf.axis, -1.0);
    first = std::sinh(pf.angle);
    second = std::cosh(pf.angle) - 1.0;
  }
  const Mat3 s = axis_skew_matrix(sig, pf.axis);
  return Mat3::identity() + first * s + second * mat_mul(s, s);
}

GQuat compose(const Signature& sig, const GQuat& q1, const GQuat& q2) {
  require_unit(sig, q1, "compose");
  require_unit(sig, q2, "compose");
  return multiply(sig, q1, q2);
}

}  // namespace genquat
