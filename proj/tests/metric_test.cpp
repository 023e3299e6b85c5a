#include "genquat/metric.hpp"

#include <cmath>
#include <limits>

#include <gtest/gtest.h>

#include "genquat/error.hpp"
#include "genquat/rotation.hpp"
#include "oracle.hpp"

namespace genquat {
namespace {

using testing::max_diff;
using testing::mat3;

TEST(SignatureTest, RejectsNonFinite) {
  EXPECT_THROW(Signature(std::nan(""), 1.0), std::invalid_argument);
  EXPECT_THROW(Signature(1.0, std::numeric_limits<double>::infinity()), std::invalid_argument);
  EXPECT_NO_THROW(Signature(0.0, -2.0));
  EXPECT_TRUE(Signature(0.0, -2.0).degenerate());
  EXPECT_FALSE(Signature(1.0, -1.0).degenerate());
}

TEST(InnerTest, Examples) {
  EXPECT_EQ(inner(Signature(2, 3), {1, 0, 0}, {1, 0, 0}), 2.0);
  EXPECT_EQ(inner(Signature(-1.5, 0.25), {0, 0, 0}, {3, -4, 5}), 0.0);
  // 2*1*0 + 3*2*1 + 6*0*1
  EXPECT_EQ(inner(Signature(2, 3), {1, 2, 0}, {0, 1, 1}), 6.0);
}

TEST(EpsilonMatrixTest, Examples) {
  EXPECT_EQ(epsilon_matrix(Signature(1, 1)), Mat3::identity());
  EXPECT_EQ(epsilon_matrix(Signature(2, 3)), Mat3::diagonal({2, 3, 6}));
  EXPECT_EQ(epsilon_matrix(Signature(1, -1)), Mat3::diagonal({1, -1, -1}));
}

TEST(CrossTest, Examples) {
  for (const Signature sig : {Signature(1, 1), Signature(2, 3), Signature(1, -1), Signature(0, 0)}) {
    EXPECT_EQ(cross(sig, {1, 0, 0}, {0, 1, 0}), (Vec3{0, 0, 1}));
    EXPECT_EQ(cross(sig, {0.3, -1, 2}, {0.3, -1, 2}), (Vec3{0, 0, 0}));
  }
  // Vector part of pure(u) pure(v) by the basis-table expansion.
  const Signature sig(2, 3);
  const Vec3 u{1, 2, 0}, v{0, 1, 1};
  const GQuat product = testing::table_multiply(sig, pure(u), pure(v));
  EXPECT_EQ(product.vector_part(), (Vec3{6, -2, 1}));
  EXPECT_EQ(cross(sig, u, v), (Vec3{6, -2, 1}));
}

TEST(CrossTest, BasisIdentities) {
  const Signature sig(-2.5, 0.75);
  const Vec3 i{1, 0, 0}, j{0, 1, 0}, k{0, 0, 1};
  EXPECT_EQ(cross(sig, i, j), k);
  EXPECT_EQ(cross(sig, j, k), (Vec3{0.75, 0, 0}));
  EXPECT_EQ(cross(sig, k, i), (Vec3{0, -2.5, 0}));
}

TEST(QuasiOrthogonalTest, Identity) {
  for (const Signature sig : {Signature(1, 1), Signature(2, 3), Signature(1, -1), Signature(-3, -0.5)}) {
    EXPECT_TRUE(is_quasi_orthogonal(sig, Mat3::identity(), 1e-12));
  }
}

TEST(QuasiOrthogonalTest, EuclideanExampleMatrix) {
  const double r = 1 / std::sqrt(2.0);
  const Mat3 m = mat3({0.5, -0.5, -r, -0.5, 0.5, -r, r, r, 0.0});
  const auto report = check_quasi_orthogonal(Signature(1, 1), m, 1e-12);
  EXPECT_TRUE(report.quasi_orthogonal);
  EXPECT_NEAR(report.det, 1.0, 1e-15);
}

TEST(QuasiOrthogonalTest, RejectsPrintedGeneralizedExample) {
  // The printed rotation matrix for q = 1/sqrt2 + (1/(2 sqrt a), -1/(2 sqrt b), 0)
  // at a = 2, b = 1. M^T eps M = diag(25/8, 25/16, 25/8) by hand, so the
  // residual against eps = diag(2, 1, 2) is 9/8 / 2.
  const double r = 1 / std::sqrt(2.0);
  const Mat3 printed = mat3({0.75, -0.5, -r, -1.0, 0.25, -2 * r, r, r, -0.25});
  const auto report = check_quasi_orthogonal(Signature(2, 1), printed, 1e-9);
  EXPECT_FALSE(report.quasi_orthogonal);
  EXPECT_NEAR(report.residual, 9.0 / 16.0, 1e-14);
  EXPECT_NEAR(report.det, 125.0 / 64.0, 1e-14);
}

TEST(QuasiOrthogonalTest, DegenerateSignatureRefused) {
  try {
    is_quasi_orthogonal(Signature(1, 0), Mat3::identity(), 1e-9);
    FAIL() << "expected DomainError";
  } catch (const DomainError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kDegenerateSignature);
  }
  EXPECT_THROW(is_quasi_orthogonal(Signature(1, 1), Mat3::identity(), 0.0), std::invalid_argument);
}

TEST(QuasiOrthogonalTest, ToleranceScalesWithMetric) {
  // A perturbation of 1e-10 in a diag(400, 400, 160000) metric.
  const Signature sig(400, 400);
  Mat3 m = Mat3::identity();
  m(0, 1) = 1e-12;
  EXPECT_TRUE(is_quasi_orthogonal(sig, m, 1e-9));
}

TEST(GeneralizedSkewTest, Examples) {
  EXPECT_TRUE(is_generalized_skew(Signature(2, 3), Mat3{}, 1e-12));
  const double a = 2, b = 3;
  const Mat3 template_matrix = mat3({0, -b * 1, b * 1, a * 1, 0, -a * 1, -1, 1, 0});
  EXPECT_TRUE(is_generalized_skew(Signature(a, b), template_matrix, 1e-12));
  EXPECT_FALSE(is_generalized_skew(Signature(2, 3), Mat3::identity(), 1e-12));
  EXPECT_DOUBLE_EQ(generalized_skew_residual(Signature(2, 3), Mat3::identity()), 12.0 / 6.0);
}

TEST(PlumbingTest, Examples) {
  EXPECT_EQ(det3(Mat3::identity()), 1.0);
  EXPECT_EQ(det3(Mat3::diagonal({2, 3, 6})), 36.0);
  EXPECT_EQ(mat_vec(epsilon_matrix(Signature(2, 3)), {1, 1, 1}), (Vec3{2, 3, 6}));
  const Mat3 m = mat3({1, 2, 3, 4, 5, 6, 7, 8, 10});
  EXPECT_EQ(det3(m), -3.0);
  EXPECT_EQ(transpose(transpose(m)), m);
  EXPECT_EQ(mat_mul(m, Mat3::identity()), m);
  EXPECT_EQ(mat_mul(mat3({0, 1, 0, 0, 0, 1, 1, 0, 0}), m), mat3({4, 5, 6, 7, 8, 10, 1, 2, 3}));
}

TEST(MetricPropertyTest, InnerSymmetricAndMatchesQuadraticForm) {
  testing::Random rnd(7);
  for (int c = 0; c < 1000; ++c) {
    const Signature sig = rnd.signature();
    const Vec3 u = rnd.vec(), v = rnd.vec();
    const Vec3 ev = mat_vec(epsilon_matrix(sig), v);
    EXPECT_LE(std::fabs(inner(sig, u, v) - inner(sig, v, u)) / std::fmax(1.0, std::fabs(inner(sig, u, v))), 1e-14);
    EXPECT_NEAR(inner(sig, u, v), u.x1 * ev.x1 + u.x2 * ev.x2 + u.x3 * ev.x3, 1e-13);
  }
}

TEST(MetricPropertyTest, CrossIsOrthogonalAndAntisymmetric) {
  testing::Random rnd(8);
  for (int c = 0; c < 1000; ++c) {
    const Signature sig = rnd.signature();
    const Vec3 u = rnd.vec(), v = rnd.vec();
    const Vec3 w = cross(sig, u, v);
    const double scale = std::fmax(1.0, 64.0 * std::fabs(sig.alpha_beta()));
    EXPECT_LE(std::fabs(inner(sig, w, u)), 1e-12 * scale);
    EXPECT_LE(std::fabs(inner(sig, w, v)), 1e-12 * scale);
    EXPECT_EQ(cross(sig, v, u), -1.0 * w);
  }
}

TEST(MetricPropertyTest, QuasiOrthogonalClosedUnderProduct) {
  testing::Random rnd(9);
  for (int c = 0; c < 500; ++c) {
    const Signature sig = rnd.signature();
    const Mat3 a = rotation_matrix(sig, rnd.unit(sig));
    const Mat3 b = rotation_matrix(sig, rnd.unit(sig));
    ASSERT_TRUE(is_quasi_orthogonal(sig, a, 1e-9));
    ASSERT_TRUE(is_quasi_orthogonal(sig, b, 1e-9));
    EXPECT_TRUE(is_quasi_orthogonal(sig, mat_mul(a, b), 1e-8));
  }
}

}  // namespace
}  // namespace genquat
