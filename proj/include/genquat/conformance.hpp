#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"

#include "genquat/metric.hpp"
#include "genquat/quaternion.hpp"
#include "genquat/rotation.hpp"

namespace genquat {

using Json = nlohmann::ordered_json;

// Deterministic sampler on top of std::mt19937_64. Doubles are built from
// the top 53 bits of each draw so every platform replays the same values.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}
  explicit Sampler(std::seed_seq& seq) : engine_(seq) {}

  // [0, 1)
  double unit();
  // [lo, hi)
  double uniform(double lo, double hi);
  // (0, hi]
  double positive(double hi);

  Vec3 vec(double bound = 2.0);
  GQuat quat(double bound = 2.0);

  // A quaternion with N_q = 1. Candidates whose norm is non-positive or badly
  // cancelled (sum of |terms| > 4 N_q) are redrawn.
  GQuat unit_quat(const Signature& sig);

  // Axis with <axis, axis> == sign (+1 or -1), same rejection rule.
  Vec3 unit_axis(const Signature& sig, double sign);

 private:
  std::mt19937_64 engine_;
};

struct Tolerances {
  double inner_symmetry = 1e-14;
  double cross_orthogonality = 1e-12;
  double quasi_orthogonal = 1e-9;
  double associativity = 1e-9;
  double norm_multiplicativity = 1e-9;
  double conjugation = 1e-12;
  double self_conjugate = 1e-12;
  double pure_product = 1e-12;
  double isometry = 1e-10;
  double determinant = 1e-10;
  double oracle = 1e-12;
  double linearity = 1e-12;
  double homomorphism = 1e-10;
  double polar_round_trip = 1e-12;
  double rodrigues = 1e-12;
  double euclidean_reduction = 1e-14;
};

struct SuiteConfig {
  std::uint64_t seed = 42;
  std::size_t cases = 1000;
  std::vector<Signature> signatures;
  Tolerances tol;

  // (1,1), (1,-1), three signatures with alpha, beta in (0,4] and three with
  // alpha in (0,4], beta in [-4,0), all drawn from the seed.
  static SuiteConfig with_defaults(std::uint64_t seed, std::size_t cases);
};

// The implementation under test. Swapping a member lets the suite be pointed
// at a faulty variant.
struct Subject {
  std::function<Vec3(const Signature&, const Vec3&, const Vec3&)> cross;
  std::function<Mat3(const Signature&, const GQuat&)> rotation_matrix;

  static Subject reference();
};

struct PropertyResult {
  std::string name;
  std::string module;
  double tolerance = 0.0;
  std::size_t cases = 0;
  std::size_t failures = 0;
  double worst_residual = 0.0;
  Json worst_input;
  Json first_failure;  // null when nothing failed

  bool pass() const { return worst_residual <= tolerance; }
};

struct FixtureResult {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  // When true the fixture passes only if residual exceeds tolerance.
  bool expect_reject = false;
  bool pass = false;
};

struct SuiteReport {
  std::uint64_t seed = 0;
  std::size_t cases = 0;
  std::vector<Signature> signatures;
  std::vector<PropertyResult> properties;
  std::vector<FixtureResult> fixtures;

  bool pass() const;
  const PropertyResult* find(const std::string& name) const;
  Json to_json() const;
};

SuiteReport run_suite(const SuiteConfig& cfg, const Subject& subject = Subject::reference());

// Names of every property run_suite evaluates, in report order.
const std::vector<std::string>& property_names();

// Real-quaternion rotation matrix from the classical conversion formulas.
// Throws kNotUnit unless |N_q - 1| <= 1e-9 at signature (1,1).
Mat3 wittenburg_matrix(const GQuat& q);

struct Erratum {
  std::string id;
  std::string printed;
  std::string corrected;
  Json evidence;
  bool confirmed = false;
};

// The four known misprints, each re-derived numerically.
std::vector<Erratum> erratum_report();
Json to_json(const std::vector<Erratum>& errata);

// Uncorrected formulas, kept so the suite can demonstrate that it rejects them.
namespace misprint {

// Cross product with alpha*beta on the k component.
Vec3 cross_ab_k(const Signature& sig, const Vec3& u, const Vec3& v);

// Rotation matrix without the inner alpha in M13 and the inner beta in M23.
Mat3 rotation_matrix(const Signature& sig, const GQuat& q);

// The printed matrix for q = 1/sqrt2 + (1/(2 sqrt a), -1/(2 sqrt b), 0).
Mat3 example_matrix(const Signature& sig);

}  // namespace misprint

}  // namespace genquat
