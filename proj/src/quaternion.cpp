#include "genquat/quaternion.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "genquat/error.hpp"

namespace genquat {

GQuat add(const GQuat& q, const GQuat& p) {
  return {q.a0 + p.a0, q.a1 + p.a1, q.a2 + p.a2, q.a3 + p.a3};
}

GQuat sub(const GQuat& q, const GQuat& p) {
  return {q.a0 - p.a0, q.a1 - p.a1, q.a2 - p.a2, q.a3 - p.a3};
}

GQuat scale(double c, const GQuat& q) { return {c * q.a0, c * q.a1, c * q.a2, c * q.a3}; }

GQuat from_scalar_vector(double s, const Vec3& v) { return {s, v.x1, v.x2, v.x3}; }

GQuat pure(const Vec3& v) { return from_scalar_vector(0.0, v); }

GQuat negate(const GQuat& q) { return {-q.a0, -q.a1, -q.a2, -q.a3}; }

double max_abs(const GQuat& q) {
  return std::max({std::fabs(q.a0), std::fabs(q.a1), std::fabs(q.a2), std::fabs(q.a3)});
}

GQuat multiply(const Signature& sig, const GQuat& q, const GQuat& p) {
  const double a = sig.alpha();
  const double b = sig.beta();
  const double ab = sig.alpha_beta();
  // Row i of left_matrix(q), dotted with p left to right.
  return {q.a0 * p.a0 + -(a * q.a1) * p.a1 + -(b * q.a2) * p.a2 + -(ab * q.a3) * p.a3,
          q.a1 * p.a0 + q.a0 * p.a1 + -(b * q.a3) * p.a2 + (b * q.a2) * p.a3,
          q.a2 * p.a0 + (a * q.a3) * p.a1 + q.a0 * p.a2 + -(a * q.a1) * p.a3,
          q.a3 * p.a0 + -q.a2 * p.a1 + q.a1 * p.a2 + q.a0 * p.a3};
}

GQuat conjugate(const GQuat& q) { return {q.a0, -q.a1, -q.a2, -q.a3}; }

double norm(const Signature& sig, const GQuat& q) {
  return q.a0 * q.a0 + sig.alpha() * q.a1 * q.a1 + sig.beta() * q.a2 * q.a2 +
         sig.alpha_beta() * q.a3 * q.a3;
}

GQuat inverse(const Signature& sig, const GQuat& q) {
  const double n = norm(sig, q);
  if (n == 0.0 || std::fabs(n) < 1e-300) {
    std::ostringstream os;
    os << "quaternion has norm " << n << " and no inverse";
    throw DomainError(ErrorKind::kNonInvertible, os.str());
  }
  const GQuat c = conjugate(q);
  return {c.a0 / n, c.a1 / n, c.a2 / n, c.a3 / n};
}

GQuat normalize(const Signature& sig, const GQuat& q) {
  const double n = norm(sig, q);
  if (!(n > 0.0)) {
    std::ostringstream os;
    os << "cannot normalize a quaternion of norm " << n;
    throw DomainError(ErrorKind::kNonPositiveNorm, os.str());
  }
  const double r = std::sqrt(n);
  return {q.a0 / r, q.a1 / r, q.a2 / r, q.a3 / r};
}

Mat4 left_matrix(const Signature& sig, const GQuat& q) {
  const double a = sig.alpha();
  const double b = sig.beta();
  const double ab = sig.alpha_beta();
  Mat4 m;
  m.a = {q.a0, -(a * q.a1), -(b * q.a2), -(ab * q.a3),
         q.a1, q.a0,        -(b * q.a3), b * q.a2,
         q.a2, a * q.a3,    q.a0,        -(a * q.a1),
         q.a3, -q.a2,       q.a1,        q.a0};
  return m;
}

GQuat apply(const Mat4& m, const GQuat& p) {
  double r[4];
  for (std::size_t i = 0; i < 4; ++i) {
    r[i] = m(i, 0) * p.a0 + m(i, 1) * p.a1 + m(i, 2) * p.a2 + m(i, 3) * p.a3;
  }
  return {r[0], r[1], r[2], r[3]};
}

double scalar_product(const Signature& sig, const GQuat& q, const GQuat& p) {
  return q.a0 * p.a0 + inner(sig, q.vector_part(), p.vector_part());
}

AngleResult angle_between(const Signature& sig, const GQuat& q, const GQuat& p) {
  const double nq = norm(sig, q);
  const double np = norm(sig, p);
  if (!(nq > 0.0) || !(np > 0.0)) {
    std::ostringstream os;
    os << "angle needs positive norms, got " << nq << " and " << np;
    throw DomainError(ErrorKind::kNonPositiveNorm, os.str());
  }
  const double c = scalar_product(sig, q, p) / (std::sqrt(nq) * std::sqrt(np));
  AngleResult r;
  r.clamped = c > 1.0 + 1e-9 || c < -1.0 - 1e-9;
  r.radians = std::acos(std::clamp(c, -1.0, 1.0));
  return r;
}

}  // namespace genquat
