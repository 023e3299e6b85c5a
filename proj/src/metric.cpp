#include "genquat/metric.hpp"

#include <cmath>
#include <stdexcept>

#include "genquat/error.hpp"

namespace genquat {

std::string_view error_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kDegenerateSignature: return "DegenerateSignature";
    case ErrorKind::kNonInvertible: return "NonInvertible";
    case ErrorKind::kNonPositiveNorm: return "NonPositiveNorm";
    case ErrorKind::kNotUnit: return "NotUnit";
    case ErrorKind::kNullVectorPart: return "NullVectorPart";
    case ErrorKind::kInvalidAxis: return "InvalidAxis";
    case ErrorKind::kUnsupportedSignature: return "UnsupportedSignature";
  }
  return "Unknown";
}

Signature::Signature(double alpha, double beta) : alpha_(alpha), beta_(beta) {
  if (!std::isfinite(alpha) || !std::isfinite(beta)) {
    throw std::invalid_argument("signature parameters must be finite");
  }
}

Vec3 operator+(const Vec3& u, const Vec3& v) { return {u.x1 + v.x1, u.x2 + v.x2, u.x3 + v.x3}; }
Vec3 operator-(const Vec3& u, const Vec3& v) { return {u.x1 - v.x1, u.x2 - v.x2, u.x3 - v.x3}; }
Vec3 operator*(double c, const Vec3& v) { return {c * v.x1, c * v.x2, c * v.x3}; }

double max_abs(const Vec3& v) {
  return std::fmax(std::fabs(v.x1), std::fmax(std::fabs(v.x2), std::fabs(v.x3)));
}

Vec3 mat_vec(const Mat3& m, const Vec3& v) {
  return {m(0, 0) * v.x1 + m(0, 1) * v.x2 + m(0, 2) * v.x3,
          m(1, 0) * v.x1 + m(1, 1) * v.x2 + m(1, 2) * v.x3,
          m(2, 0) * v.x1 + m(2, 1) * v.x2 + m(2, 2) * v.x3};
}

double det3(const Mat3& m) {
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
         m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

Mat3 from_columns(const Vec3& c0, const Vec3& c1, const Vec3& c2) {
  Mat3 m;
  for (std::size_t i = 0; i < 3; ++i) {
    m(i, 0) = c0[i];
    m(i, 1) = c1[i];
    m(i, 2) = c2[i];
  }
  return m;
}

Vec3 column(const Mat3& m, std::size_t j) { return {m(0, j), m(1, j), m(2, j)}; }

double inner(const Signature& sig, const Vec3& u, const Vec3& v) {
  return sig.alpha() * u.x1 * v.x1 + sig.beta() * u.x2 * v.x2 + sig.alpha_beta() * u.x3 * v.x3;
}

Mat3 epsilon_matrix(const Signature& sig) {
  return Mat3::diagonal({sig.alpha(), sig.beta(), sig.alpha_beta()});
}

Vec3 cross(const Signature& sig, const Vec3& u, const Vec3& v) {
  return {sig.beta() * (u.x2 * v.x3 - u.x3 * v.x2),
          sig.alpha() * (u.x3 * v.x1 - u.x1 * v.x3),
          u.x1 * v.x2 - u.x2 * v.x1};
}

namespace {

void require_positive_tol(double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
}

double metric_scale(const Mat3& eps) { return std::fmax(1.0, max_abs(eps)); }

}  // namespace

QuasiOrthogonalReport check_quasi_orthogonal(const Signature& sig, const Mat3& m, double tol) {
  require_positive_tol(tol);
  if (sig.degenerate()) {
    throw DomainError(ErrorKind::kDegenerateSignature,
                      "quasi-orthogonality needs alpha*beta != 0");
  }
  const Mat3 eps = epsilon_matrix(sig);
  QuasiOrthogonalReport r;
  r.residual = max_abs(mat_mul(mat_mul(transpose(m), eps), m) - eps) / metric_scale(eps);
  r.det = det3(m);
  r.det_residual = std::fabs(r.det - 1.0);
  r.quasi_orthogonal = r.residual <= tol && r.det_residual <= tol;
  return r;
}

bool is_quasi_orthogonal(const Signature& sig, const Mat3& m, double tol) {
  return check_quasi_orthogonal(sig, m, tol).quasi_orthogonal;
}

double generalized_skew_residual(const Signature& sig, const Mat3& s) {
  const Mat3 eps = epsilon_matrix(sig);
  return max_abs(mat_mul(transpose(s), eps) + mat_mul(eps, s)) / metric_scale(eps);
}

bool is_generalized_skew(const Signature& sig, const Mat3& s, double tol) {
  require_positive_tol(tol);
  return generalized_skew_residual(sig, s) <= tol;
}

}  // namespace genquat
