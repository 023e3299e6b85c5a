#include "genquat/quaternion.hpp"

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "genquat/error.hpp"
#include "oracle.hpp"

namespace genquat {
namespace {

using testing::max_diff;
using testing::table_multiply;

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const DomainError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no DomainError thrown";
  return ErrorKind::kDegenerateSignature;
}

TEST(MultiplyTest, BasisUnits) {
  const GQuat i{0, 1, 0, 0}, j{0, 0, 1, 0}, k{0, 0, 0, 1};
  for (const Signature sig : {Signature(1, 1), Signature(2, 3), Signature(1, -1), Signature(0, 0)}) {
    EXPECT_EQ(multiply(sig, i, j), k);
    EXPECT_EQ(multiply(sig, j, i), (GQuat{0, 0, 0, -1}));
  }
}

TEST(MultiplyTest, Identity) {
  const GQuat p{0.3, -1.25, 7, 2};
  EXPECT_EQ(multiply(Signature(2, 3), GQuat::one(), p), p);
  EXPECT_EQ(multiply(Signature(2, 3), p, GQuat::one()), p);
}

TEST(MultiplyTest, GeneralProduct) {
  const Signature sig(2, 3);
  const GQuat q{1, 1, 1, 0}, p{2, 0, 1, 1};
  const GQuat expected{-1, 5, 1, 2};
  EXPECT_EQ(table_multiply(sig, q, p), expected);
  EXPECT_EQ(multiply(sig, q, p), expected);
  EXPECT_EQ(apply(left_matrix(sig, q), p), expected);
}

TEST(MultiplyTest, AgreesWithBasisTable) {
  testing::Random rnd(11);
  for (int c = 0; c < 1000; ++c) {
    const Signature sig(rnd.uniform(-4, 4), rnd.uniform(-4, 4));
    const GQuat q = rnd.quat(), p = rnd.quat();
    EXPECT_LE(max_diff(multiply(sig, q, p), table_multiply(sig, q, p)), 1e-12);
  }
}

TEST(ConjugateTest, Examples) {
  EXPECT_EQ(conjugate({1, 2, 3, 4}), (GQuat{1, -2, -3, -4}));
  const GQuat q{0.5, -2, 1e-3, 7};
  EXPECT_EQ(conjugate(conjugate(q)), q);
  const Signature sig(2, 3);
  const GQuat a{1, 1, 0, 0}, b{0, 0, 1, 1};
  // q p = (0, 0, 1-2, 1+1) by the table; its conjugate is (0, 0, 1, -2).
  EXPECT_EQ(conjugate(multiply(sig, a, b)), (GQuat{0, 0, 1, -2}));
  EXPECT_EQ(multiply(sig, conjugate(b), conjugate(a)), (GQuat{0, 0, 1, -2}));
}

TEST(NormTest, Examples) {
  for (const double a : {0.5, 2.0, 7.0}) {
    for (const double b : {0.25, 3.0}) {
      const Signature sig(a, b);
      const GQuat q{1 / std::sqrt(2.0), 1 / (2 * std::sqrt(a)), -1 / (2 * std::sqrt(b)), 0};
      EXPECT_NEAR(norm(sig, q), 1.0, 1e-15);
    }
  }
  EXPECT_EQ(norm(Signature(-3, 0), GQuat::one()), 1.0);
  EXPECT_EQ(norm(Signature(1, -1), {1, 0, 1, 0}), 0.0);
}

TEST(InverseTest, Examples) {
  EXPECT_EQ(inverse(Signature(2, 3), GQuat::one()), GQuat::one());
  EXPECT_EQ(kind_of([] { inverse(Signature(1, -1), {1, 0, 1, 0}); }), ErrorKind::kNonInvertible);
  EXPECT_EQ(kind_of([] { inverse(Signature(1, 1), {0, 0, 0, 0}); }), ErrorKind::kNonInvertible);

  const Signature sig(2, 3);
  const GQuat q{1, 1, 0, 0};
  EXPECT_EQ(norm(sig, q), 3.0);
  const GQuat inv = inverse(sig, q);
  EXPECT_DOUBLE_EQ(inv.a0, 1.0 / 3);
  EXPECT_DOUBLE_EQ(inv.a1, -1.0 / 3);
  EXPECT_EQ(inv.a2, 0.0);
  EXPECT_EQ(inv.a3, 0.0);
  EXPECT_LE(max_diff(table_multiply(sig, q, inv), GQuat::one()), 1e-15);
}

TEST(InverseTest, NegativeNormIsInvertible) {
  const Signature sig(1, -1);
  const GQuat q{0, 0, 1, 0};
  EXPECT_EQ(norm(sig, q), -1.0);
  EXPECT_LE(max_diff(multiply(sig, q, inverse(sig, q)), GQuat::one()), 1e-15);
}

TEST(NormalizeTest, Examples) {
  EXPECT_EQ(normalize(Signature(2, 3), {2, 0, 0, 0}), GQuat::one());
  const GQuat n = normalize(Signature(1, 1), {1, 1, 1, 1});
  EXPECT_EQ(n, (GQuat{0.5, 0.5, 0.5, 0.5}));
  EXPECT_EQ(norm(Signature(1, 1), n), 1.0);
  EXPECT_EQ(kind_of([] { normalize(Signature(1, -1), {0, 0, 1, 0}); }), ErrorKind::kNonPositiveNorm);
  EXPECT_EQ(kind_of([] { normalize(Signature(1, -1), {1, 0, 1, 0}); }), ErrorKind::kNonPositiveNorm);
}

TEST(LeftMatrixTest, Examples) {
  EXPECT_EQ(left_matrix(Signature(2, 3), GQuat::one()), Mat4::identity());

  // Real quaternions: the usual Hamilton left-multiplication pattern.
  const GQuat q{0.1, 0.2, 0.3, 0.4};
  Mat4 hamilton;
  hamilton.a = {0.1, -0.2, -0.3, -0.4,
                0.2, 0.1,  -0.4, 0.3,
                0.3, 0.4,  0.1,  -0.2,
                0.4, -0.3, 0.2,  0.1};
  EXPECT_EQ(left_matrix(Signature(1, 1), q), hamilton);
}

TEST(ScalarProductTest, Examples) {
  const Signature sig(2, 3);
  EXPECT_EQ(scalar_product(sig, {1, 1, 1, 1}, {1, 1, 1, 1}), 12.0);
  EXPECT_EQ(norm(sig, {1, 1, 1, 1}), 12.0);
  EXPECT_EQ(scalar_product(sig, GQuat::one(), {0, 1, 0, 0}), 0.0);
  const GQuat q{1, 1, 0, 0}, p{0, 1, 0, 0};
  EXPECT_EQ(table_multiply(sig, q, conjugate(p)).a0, 2.0);
  EXPECT_EQ(scalar_product(sig, q, p), 2.0);
}

TEST(AngleBetweenTest, Examples) {
  const Signature sig(2, 3);
  const GQuat q{0.3, -1, 0.25, 0.1};
  const AngleResult self = angle_between(sig, q, q);
  EXPECT_EQ(self.radians, 0.0);
  EXPECT_FALSE(self.clamped);
  EXPECT_DOUBLE_EQ(angle_between(sig, GQuat::one(), {0, 1, 0, 0}).radians, std::numbers::pi / 2);
  EXPECT_DOUBLE_EQ(angle_between(Signature(1, 1), GQuat::one(), {1, 1, 0, 0}).radians,
                   std::numbers::pi / 4);
  EXPECT_EQ(kind_of([] { angle_between(Signature(1, -1), GQuat::one(), {0, 0, 1, 0}); }),
            ErrorKind::kNonPositiveNorm);
}

TEST(AngleBetweenTest, ClampFlagInMixedSignature) {
  // <q,p>_s can exceed sqrt(N_q N_p) when the metric is indefinite.
  const Signature sig(1, -1);
  const GQuat q{2, 0, 1, 0}, p{2, 0, -1, 0};
  const AngleResult r = angle_between(sig, q, p);
  EXPECT_TRUE(r.clamped);
  EXPECT_EQ(r.radians, 0.0);
}

TEST(PlumbingTest, Componentwise) {
  EXPECT_EQ(add({1, 0, 0, 0}, {0, 1, 0, 0}), (GQuat{1, 1, 0, 0}));
  EXPECT_EQ(sub({1, 0, 0, 0}, {0, 1, 0, 0}), (GQuat{1, -1, 0, 0}));
  EXPECT_EQ(pure({1, 2, 3}), (GQuat{0, 1, 2, 3}));
  EXPECT_EQ(scale(2, {1, 1, 1, 1}), (GQuat{2, 2, 2, 2}));
  const GQuat q{0.5, -1, 2, 3};
  EXPECT_EQ(from_scalar_vector(q.scalar_part(), q.vector_part()), q);
}

// Randomized algebra properties over components in [-2, 2] and alpha, beta in
// [-4, 4].
class AlgebraPropertyTest : public ::testing::Test {
 protected:
  testing::Random rnd_{2024};
  Signature signature() { return Signature(rnd_.uniform(-4, 4), rnd_.uniform(-4, 4)); }

  static double rel(double diff, double scale) { return diff / std::fmax(1.0, scale); }
  static double mag(const GQuat& q) { return max_diff(q, GQuat{}); }
};

TEST_F(AlgebraPropertyTest, Associativity) {
  for (int c = 0; c < 1000; ++c) {
    const Signature sig = signature();
    const GQuat q = rnd_.quat(), p = rnd_.quat(), r = rnd_.quat();
    const GQuat lhs = multiply(sig, multiply(sig, q, p), r);
    const GQuat rhs = multiply(sig, q, multiply(sig, p, r));
    EXPECT_LE(rel(max_diff(lhs, rhs), mag(lhs)), 1e-9);
  }
}

TEST_F(AlgebraPropertyTest, LeftMatrixIsBitExact) {
  for (int c = 0; c < 1000; ++c) {
    const Signature sig = signature();
    const GQuat q = rnd_.quat(), p = rnd_.quat();
    EXPECT_EQ(apply(left_matrix(sig, q), p), multiply(sig, q, p));
  }
}

TEST_F(AlgebraPropertyTest, NormMultiplicative) {
  for (int c = 0; c < 1000; ++c) {
    const Signature sig = signature();
    const GQuat q = rnd_.quat(), p = rnd_.quat();
    const double expected = norm(sig, q) * norm(sig, p);
    EXPECT_LE(rel(std::fabs(norm(sig, multiply(sig, q, p)) - expected), std::fabs(expected)), 1e-9);
  }
}

TEST_F(AlgebraPropertyTest, ConjugationReversesProducts) {
  for (int c = 0; c < 1000; ++c) {
    const Signature sig = signature();
    const GQuat q = rnd_.quat(), p = rnd_.quat();
    const GQuat lhs = conjugate(multiply(sig, q, p));
    EXPECT_LE(rel(max_diff(lhs, multiply(sig, conjugate(p), conjugate(q))), mag(lhs)), 1e-12);
  }
}

TEST_F(AlgebraPropertyTest, SelfConjugateProductIsNorm) {
  for (int c = 0; c < 1000; ++c) {
    const Signature sig = signature();
    const GQuat q = rnd_.quat();
    const GQuat r = multiply(sig, q, conjugate(q));
    EXPECT_LE(rel(max_diff(r, GQuat{norm(sig, q), 0, 0, 0}), 100.0), 1e-12);
  }
}

TEST_F(AlgebraPropertyTest, PureProductIsInnerAndCross) {
  for (int c = 0; c < 1000; ++c) {
    const Signature sig = signature();
    const Vec3 u = rnd_.vec(), v = rnd_.vec();
    const GQuat lhs = multiply(sig, pure(u), pure(v));
    const GQuat rhs = from_scalar_vector(-inner(sig, u, v), cross(sig, u, v));
    EXPECT_LE(rel(max_diff(lhs, rhs), mag(lhs)), 1e-12);
  }
}

TEST(SpecialCaseTest, RealAndSplitTables) {
  const GQuat one = GQuat::one(), i{0, 1, 0, 0}, j{0, 0, 1, 0}, k{0, 0, 0, 1};
  const auto neg = [](const GQuat& q) { return negate(q); };

  const Signature real(1, 1);
  const GQuat hamilton[4][4] = {{one, i, j, k},
                                {i, neg(one), k, neg(j)},
                                {j, neg(k), neg(one), i},
                                {k, j, neg(i), neg(one)}};
  const Signature split(1, -1);
  const GQuat split_table[4][4] = {{one, i, j, k},
                                   {i, neg(one), k, neg(j)},
                                   {j, neg(k), one, neg(i)},
                                   {k, j, i, one}};
  const GQuat basis[4] = {one, i, j, k};
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      EXPECT_EQ(multiply(real, basis[r], basis[c]), hamilton[r][c]) << r << "," << c;
      EXPECT_EQ(multiply(split, basis[r], basis[c]), split_table[r][c]) << r << "," << c;
    }
  }
}

TEST(SpecialCaseTest, DegenerateAlgebras) {
  const GQuat i{0, 1, 0, 0}, j{0, 0, 1, 0}, k{0, 0, 0, 1};
  // Semi-quaternions (1, 0): j and k square to zero.
  EXPECT_EQ(multiply(Signature(1, 0), j, j), GQuat{});
  EXPECT_EQ(multiply(Signature(1, 0), k, k), GQuat{});
  EXPECT_EQ(multiply(Signature(1, 0), i, i), (GQuat{-1, 0, 0, 0}));
  // Split semi-quaternions (-1, 0): i^2 = +1.
  EXPECT_EQ(multiply(Signature(-1, 0), i, i), GQuat::one());
  // 1/4-quaternions (0, 0): every unit squares to zero and j k = 0.
  EXPECT_EQ(multiply(Signature(0, 0), i, i), GQuat{});
  EXPECT_EQ(multiply(Signature(0, 0), j, k), GQuat{});
  EXPECT_EQ(multiply(Signature(0, 0), i, j), k);
}

}  // namespace
}  // namespace genquat
