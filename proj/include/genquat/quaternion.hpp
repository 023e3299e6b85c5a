#pragma once

#include "genquat/metric.hpp"

namespace genquat {

// a0 + a1 i + a2 j + a3 k in H_ab.
struct GQuat {
  double a0 = 0.0;
  double a1 = 0.0;
  double a2 = 0.0;
  double a3 = 0.0;

  double scalar_part() const { return a0; }
  Vec3 vector_part() const { return {a1, a2, a3}; }

  double operator[](std::size_t i) const {
    return i == 0 ? a0 : i == 1 ? a1 : i == 2 ? a2 : a3;
  }

  static GQuat one() { return {1.0, 0.0, 0.0, 0.0}; }

  friend bool operator==(const GQuat&, const GQuat&) = default;
};

GQuat add(const GQuat& q, const GQuat& p);
GQuat sub(const GQuat& q, const GQuat& p);
GQuat scale(double c, const GQuat& q);
GQuat from_scalar_vector(double s, const Vec3& v);
GQuat pure(const Vec3& v);
GQuat negate(const GQuat& q);

double max_abs(const GQuat& q);

// Product in H_ab, from the basis table
//   i^2 = -a, j^2 = -b, k^2 = -ab, ij = k = -ji, jk = b i = -kj, ki = a j = -ik.
// Each component is summed in the same order as the corresponding row of
// left_matrix(sig, q) applied to p, so the two agree bit for bit.
GQuat multiply(const Signature& sig, const GQuat& q, const GQuat& p);

GQuat conjugate(const GQuat& q);

// N_q = a0^2 + a a1^2 + b a2^2 + ab a3^2. Can be zero or negative when the
// signature is degenerate or mixed.
double norm(const Signature& sig, const GQuat& q);

// conj(q) / N_q. Throws kNonInvertible when N_q is zero (or underflows).
GQuat inverse(const Signature& sig, const GQuat& q);

// q / sqrt(N_q). Throws kNonPositiveNorm when N_q <= 0.
GQuat normalize(const Signature& sig, const GQuat& q);

// L(q) with L(q) * (b0, b1, b2, b3)^T == q p.
Mat4 left_matrix(const Signature& sig, const GQuat& q);

// Row-dot-column product of a 4x4 matrix with a quaternion read as a column.
GQuat apply(const Mat4& m, const GQuat& p);

// S_q S_p + <V_q, V_p> = S(q conj(p)).
double scalar_product(const Signature& sig, const GQuat& q, const GQuat& p);

struct AngleResult {
  double radians = 0.0;
  // Set when the cosine left [-1, 1] by more than 1e-9 before clamping.
  bool clamped = false;
};

// arccos(<q,p>_s / (sqrt(N_q) sqrt(N_p))). Throws kNonPositiveNorm when
// either norm is <= 0.
AngleResult angle_between(const Signature& sig, const GQuat& q, const GQuat& p);

}  // namespace genquat
