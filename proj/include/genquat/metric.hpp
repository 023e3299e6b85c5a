#pragma once

#include <array>
#include <cmath>
#include <cstddef>

namespace genquat {

// The pair (alpha, beta) that fixes both the algebra H_ab and the metric
// diag(alpha, beta, alpha*beta) on E^3_ab.
class Signature {
 public:
  // Throws std::invalid_argument for NaN or infinite parameters.
  Signature(double alpha, double beta);

  double alpha() const { return alpha_; }
  double beta() const { return beta_; }
  double alpha_beta() const { return alpha_ * beta_; }

  // True when the metric is singular (alpha*beta == 0).
  bool degenerate() const { return alpha_ == 0.0 || beta_ == 0.0; }

  static Signature euclidean() { return Signature(1.0, 1.0); }
  static Signature split() { return Signature(1.0, -1.0); }

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  double alpha_;
  double beta_;
};

// Coordinates in the basis {i, j, k}; also read as the pure quaternion
// x1*i + x2*j + x3*k.
struct Vec3 {
  double x1 = 0.0;
  double x2 = 0.0;
  double x3 = 0.0;

  double operator[](std::size_t i) const { return i == 0 ? x1 : i == 1 ? x2 : x3; }
  double& operator[](std::size_t i) { return i == 0 ? x1 : i == 1 ? x2 : x3; }

  friend bool operator==(const Vec3&, const Vec3&) = default;
};

Vec3 operator+(const Vec3& u, const Vec3& v);
Vec3 operator-(const Vec3& u, const Vec3& v);
Vec3 operator*(double c, const Vec3& v);

// Dense row-major N x N matrix.
template <std::size_t N>
struct Mat {
  std::array<double, N * N> a{};

  double operator()(std::size_t row, std::size_t col) const { return a[row * N + col]; }
  double& operator()(std::size_t row, std::size_t col) { return a[row * N + col]; }

  static Mat identity() {
    Mat m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = 1.0;
    return m;
  }

  static Mat diagonal(const std::array<double, N>& d) {
    Mat m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = d[i];
    return m;
  }

  friend bool operator==(const Mat&, const Mat&) = default;
};

using Mat3 = Mat<3>;
using Mat4 = Mat<4>;

template <std::size_t N>
Mat<N> mat_mul(const Mat<N>& x, const Mat<N>& y) {
  Mat<N> r;
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = 0; j < N; ++j) {
      double s = x(i, 0) * y(0, j);
      for (std::size_t k = 1; k < N; ++k) s += x(i, k) * y(k, j);
      r(i, j) = s;
    }
  }
  return r;
}

template <std::size_t N>
Mat<N> transpose(const Mat<N>& m) {
  Mat<N> r;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) r(j, i) = m(i, j);
  return r;
}

template <std::size_t N>
Mat<N> operator+(const Mat<N>& x, const Mat<N>& y) {
  Mat<N> r;
  for (std::size_t i = 0; i < N * N; ++i) r.a[i] = x.a[i] + y.a[i];
  return r;
}

template <std::size_t N>
Mat<N> operator-(const Mat<N>& x, const Mat<N>& y) {
  Mat<N> r;
  for (std::size_t i = 0; i < N * N; ++i) r.a[i] = x.a[i] - y.a[i];
  return r;
}

template <std::size_t N>
Mat<N> operator*(double c, const Mat<N>& m) {
  Mat<N> r;
  for (std::size_t i = 0; i < N * N; ++i) r.a[i] = c * m.a[i];
  return r;
}

template <std::size_t N>
double max_abs(const Mat<N>& m) {
  double r = 0.0;
  for (double x : m.a) r = std::fmax(r, std::fabs(x));
  return r;
}

double max_abs(const Vec3& v);

Vec3 mat_vec(const Mat3& m, const Vec3& v);

// Cofactor expansion along the first row.
double det3(const Mat3& m);

// Builds a matrix whose columns are c0, c1, c2.
Mat3 from_columns(const Vec3& c0, const Vec3& c1, const Vec3& c2);
Vec3 column(const Mat3& m, std::size_t j);

// alpha*u1*v1 + beta*u2*v2 + alpha*beta*u3*v3.
double inner(const Signature& sig, const Vec3& u, const Vec3& v);

// diag(alpha, beta, alpha*beta).
Mat3 epsilon_matrix(const Signature& sig);

// (beta(u2v3 - u3v2), alpha(u3v1 - u1v3), u1v2 - u2v1), so that i x j = k,
// j x k = beta i and k x i = alpha j.
Vec3 cross(const Signature& sig, const Vec3& u, const Vec3& v);

struct QuasiOrthogonalReport {
  bool quasi_orthogonal = false;
  // max |M^T eps M - eps| divided by max(1, max |eps|).
  double residual = 0.0;
  double det = 0.0;
  double det_residual = 0.0;
};

// M^T eps M == eps and det M == 1, both within tol. Throws DomainError
// (kDegenerateSignature) when alpha*beta == 0.
QuasiOrthogonalReport check_quasi_orthogonal(const Signature& sig, const Mat3& m, double tol);
bool is_quasi_orthogonal(const Signature& sig, const Mat3& m, double tol);

// S^T eps == -eps S within tol (relative to max(1, max |eps|)).
double generalized_skew_residual(const Signature& sig, const Mat3& s);
bool is_generalized_skew(const Signature& sig, const Mat3& s, double tol);

}  // namespace genquat
