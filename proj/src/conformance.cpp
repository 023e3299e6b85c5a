#include "genquat/conformance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "genquat/error.hpp"
#include "genquat/json_format.hpp"

namespace genquat {

// ---------------------------------------------------------------------------
// Sampler

double Sampler::unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

double Sampler::uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

double Sampler::positive(double hi) { return hi * (1.0 - unit()); }

Vec3 Sampler::vec(double bound) {
  const double x1 = uniform(-bound, bound);
  const double x2 = uniform(-bound, bound);
  const double x3 = uniform(-bound, bound);
  return {x1, x2, x3};
}

GQuat Sampler::quat(double bound) {
  const double a0 = uniform(-bound, bound);
  const double a1 = uniform(-bound, bound);
  const double a2 = uniform(-bound, bound);
  const double a3 = uniform(-bound, bound);
  return {a0, a1, a2, a3};
}

namespace {

constexpr int kMaxDraws = 100000;

double abs_norm(const Signature& sig, const GQuat& q) {
  return q.a0 * q.a0 + std::fabs(sig.alpha()) * q.a1 * q.a1 + std::fabs(sig.beta()) * q.a2 * q.a2 +
         std::fabs(sig.alpha_beta()) * q.a3 * q.a3;
}

double abs_inner(const Signature& sig, const Vec3& u, const Vec3& v) {
  return std::fabs(sig.alpha() * u.x1 * v.x1) + std::fabs(sig.beta() * u.x2 * v.x2) +
         std::fabs(sig.alpha_beta() * u.x3 * v.x3);
}

}  // namespace

GQuat Sampler::unit_quat(const Signature& sig) {
  for (int i = 0; i < kMaxDraws; ++i) {
    const GQuat q = quat();
    const double n = norm(sig, q);
    if (n > 1e-6 && abs_norm(sig, q) <= 4.0 * n) return normalize(sig, q);
  }
  throw std::logic_error("could not draw a unit quaternion for this signature");
}

Vec3 Sampler::unit_axis(const Signature& sig, double sign) {
  for (int i = 0; i < kMaxDraws; ++i) {
    const Vec3 v = vec();
    const double n = sign * inner(sig, v, v);
    if (n > 1e-6 && abs_inner(sig, v, v) <= 4.0 * n) return (1.0 / std::sqrt(n)) * v;
  }
  throw std::logic_error("could not draw an axis of the requested sign");
}

// ---------------------------------------------------------------------------
// Configuration

SuiteConfig SuiteConfig::with_defaults(std::uint64_t seed, std::size_t cases) {
  SuiteConfig cfg;
  cfg.seed = seed;
  cfg.cases = cases;
  cfg.signatures = {Signature::euclidean(), Signature::split()};
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    0x5167u};
  Sampler s(seq);
  for (int i = 0; i < 3; ++i) {
    const double a = s.positive(4.0);
    const double b = s.positive(4.0);
    cfg.signatures.emplace_back(a, b);
  }
  for (int i = 0; i < 3; ++i) {
    const double a = s.positive(4.0);
    const double b = -s.positive(4.0);
    cfg.signatures.emplace_back(a, b);
  }
  return cfg;
}

Subject Subject::reference() {
  Subject s;
  s.cross = [](const Signature& sig, const Vec3& u, const Vec3& v) { return genquat::cross(sig, u, v); };
  s.rotation_matrix = [](const Signature& sig, const GQuat& q) {
    return genquat::rotation_matrix(sig, q);
  };
  return s;
}

// ---------------------------------------------------------------------------
// JSON helpers

namespace {

Json as_json(const Signature& sig) { return Json::array({sig.alpha(), sig.beta()}); }
Json as_json(const Vec3& v) { return Json::array({v.x1, v.x2, v.x3}); }
Json as_json(const GQuat& q) { return Json::array({q.a0, q.a1, q.a2, q.a3}); }
Json as_json(const Mat3& m) {
  Json j = Json::array();
  for (double x : m.a) j.push_back(x);
  return j;
}

double relative(double diff, double scale) { return diff / std::fmax(1.0, scale); }

double max_abs_diff(const Mat3& x, const Mat3& y) { return max_abs(x - y); }
double max_abs_diff(const Vec3& x, const Vec3& y) { return max_abs(x - y); }
double max_abs_diff(const GQuat& x, const GQuat& y) { return max_abs(sub(x, y)); }

Mat3 oracle_matrix(const Signature& sig, const GQuat& q) {
  return from_columns(conjugation_map(sig, q, {1, 0, 0}), conjugation_map(sig, q, {0, 1, 0}),
                      conjugation_map(sig, q, {0, 0, 1}));
}

bool positive_definite(const Signature& sig) { return sig.alpha() > 0 && sig.beta() > 0; }
bool split_type(const Signature& sig) { return sig.alpha() > 0 && sig.beta() < 0; }
bool nondegenerate(const Signature& sig) { return !sig.degenerate(); }
bool any_signature(const Signature&) { return true; }

// ---------------------------------------------------------------------------
// Properties

struct Sample {
  double residual = 0.0;
  Json input;
};

struct PropertySpec {
  std::string name;
  std::string module;
  double tolerance = 0.0;
  std::function<bool(const Signature&)> applies = any_signature;
  std::function<Sample(Sampler&, const Signature&)> sample;
  // When set, the property ignores the configured signatures and runs one
  // case per listed signature.
  std::vector<Signature> fixed_signatures;
  // Deterministic checks run once per signature.
  bool deterministic = false;
};

const GQuat kBasis[4] = {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};

// Basis products e_r e_c as (coefficient, basis index) for the real and split
// quaternion tables.
struct BasisProduct {
  double coefficient;
  int index;
};

constexpr BasisProduct kHamiltonTable[4][4] = {
    {{1, 0}, {1, 1}, {1, 2}, {1, 3}},
    {{1, 1}, {-1, 0}, {1, 3}, {-1, 2}},
    {{1, 2}, {-1, 3}, {-1, 0}, {1, 1}},
    {{1, 3}, {1, 2}, {-1, 1}, {-1, 0}},
};

constexpr BasisProduct kSplitTable[4][4] = {
    {{1, 0}, {1, 1}, {1, 2}, {1, 3}},
    {{1, 1}, {-1, 0}, {1, 3}, {-1, 2}},
    {{1, 2}, {-1, 3}, {1, 0}, {-1, 1}},
    {{1, 3}, {1, 2}, {1, 1}, {1, 0}},
};

GQuat basis_product(const BasisProduct& bp) { return scale(bp.coefficient, kBasis[bp.index]); }

double table_residual(const Signature& sig, const BasisProduct (&table)[4][4]) {
  double worst = 0.0;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      worst = std::fmax(worst, max_abs_diff(multiply(sig, kBasis[r], kBasis[c]),
                                            basis_product(table[r][c])));
  return worst;
}

std::vector<PropertySpec> build_properties(const Tolerances& tol, const Subject& subject) {
  std::vector<PropertySpec> props;

  // metric
  props.push_back({"inner-symmetry", "metric", tol.inner_symmetry, any_signature,
                   [](Sampler& s, const Signature& sig) {
                     const Vec3 u = s.vec(), v = s.vec();
                     const double uv = inner(sig, u, v);
                     const Vec3 ev = mat_vec(epsilon_matrix(sig), v);
                     const double quadratic = u.x1 * ev.x1 + u.x2 * ev.x2 + u.x3 * ev.x3;
                     const double diff =
                         std::fmax(std::fabs(uv - inner(sig, v, u)), std::fabs(uv - quadratic));
                     return Sample{relative(diff, abs_inner(sig, u, v)),
                                   {{"u", as_json(u)}, {"v", as_json(v)}}};
                   },
                   {}});
  props.push_back({"cross-orthogonality", "metric", tol.cross_orthogonality, any_signature,
                   [&subject](Sampler& s, const Signature& sig) {
                     const Vec3 u = s.vec(), v = s.vec();
                     const Vec3 w = subject.cross(sig, u, v);
                     const double diff =
                         std::fmax(std::fabs(inner(sig, w, u)), std::fabs(inner(sig, w, v)));
                     const double scale =
                         std::fmax(abs_inner(sig, w, u), abs_inner(sig, w, v));
                     return Sample{relative(diff, scale), {{"u", as_json(u)}, {"v", as_json(v)}}};
                   },
                   {}});
  props.push_back({"cross-antisymmetry", "metric", 0.0, any_signature,
                   [&subject](Sampler& s, const Signature& sig) {
                     const Vec3 u = s.vec(), v = s.vec();
                     const double diff =
                         max_abs(subject.cross(sig, u, v) + subject.cross(sig, v, u));
                     return Sample{diff, {{"u", as_json(u)}, {"v", as_json(v)}}};
                   },
                   {}});
  props.push_back({"cross-basis-identities", "metric", 0.0, any_signature,
                   [&subject](Sampler&, const Signature& sig) {
                     const Vec3 i{1, 0, 0}, j{0, 1, 0}, k{0, 0, 1};
                     double diff = max_abs_diff(subject.cross(sig, i, j), k);
                     diff = std::fmax(diff, max_abs_diff(subject.cross(sig, j, k), {sig.beta(), 0, 0}));
                     diff = std::fmax(diff, max_abs_diff(subject.cross(sig, k, i), {0, sig.alpha(), 0}));
                     return Sample{diff, Json::object()};
                   },
                   {}});
  props.back().deterministic = true;
  props.push_back({"quasi-orthogonal-closure", "metric", 10.0 * tol.quasi_orthogonal, nondegenerate,
                   [&tol](Sampler& s, const Signature& sig) {
                     const GQuat q = s.unit_quat(sig), p = s.unit_quat(sig);
                     const Mat3 a = rotation_matrix(sig, q), b = rotation_matrix(sig, p);
                     double residual = 0.0;
                     if (!is_quasi_orthogonal(sig, a, tol.quasi_orthogonal) ||
                         !is_quasi_orthogonal(sig, b, tol.quasi_orthogonal)) {
                       residual = std::numeric_limits<double>::max();
                     } else {
                       const auto r = check_quasi_orthogonal(sig, mat_mul(a, b), 10.0 * tol.quasi_orthogonal);
                       residual = std::fmax(r.residual, r.det_residual);
                     }
                     return Sample{residual, {{"q", as_json(q)}, {"p", as_json(p)}}};
                   },
                   {}});

  // gquat
  props.push_back({"associativity", "gquat", tol.associativity, any_signature,
                   [](Sampler& s, const Signature& sig) {
                     const GQuat q = s.quat(), p = s.quat(), r = s.quat();
                     const GQuat lhs = multiply(sig, multiply(sig, q, p), r);
                     const GQuat rhs = multiply(sig, q, multiply(sig, p, r));
                     return Sample{relative(max_abs_diff(lhs, rhs), max_abs(lhs)),
                                   {{"q", as_json(q)}, {"p", as_json(p)}, {"r", as_json(r)}}};
                   },
                   {}});
  props.push_back({"left-matrix-faithfulness", "gquat", 0.0, any_signature,
                   [](Sampler& s, const Signature& sig) {
                     const GQuat q = s.quat(), p = s.quat();
                     const double diff =
                         max_abs_diff(apply(left_matrix(sig, q), p), multiply(sig, q, p));
                     return Sample{diff, {{"q", as_json(q)}, {"p", as_json(p)}}};
                   },
                   {}});
  props.push_back({"norm-multiplicativity", "gquat", tol.norm_multiplicativity, any_signature,
                   [](Sampler& s, const Signature& sig) {
                     const GQuat q = s.quat(), p = s.quat();
                     const double diff =
                         std::fabs(norm(sig, multiply(sig, q, p)) - norm(sig, q) * norm(sig, p));
                     return Sample{relative(diff, abs_norm(sig, q) * abs_norm(sig, p)),
                                   {{"q", as_json(q)}, {"p", as_json(p)}}};
                   },
                   {}});
  props.push_back({"conjugation-anti-homomorphism", "gquat", tol.conjugation, any_signature,
                   [](Sampler& s, const Signature& sig) {
                     const GQuat q = s.quat(), p = s.quat();
                     const GQuat lhs = conjugate(multiply(sig, q, p));
                     const GQuat rhs = multiply(sig, conjugate(p), conjugate(q));
                     return Sample{relative(max_abs_diff(lhs, rhs), max_abs(lhs)),
                                   {{"q", as_json(q)}, {"p", as_json(p)}}};
                   },
                   {}});
  props.push_back({"self-conjugate-product", "gquat", tol.self_conjugate, any_signature,
                   [](Sampler& s, const Signature& sig) {
                     const GQuat q = s.quat();
                     const GQuat r = multiply(sig, q, conjugate(q));
                     const double diff =
                         max_abs_diff(r, GQuat{norm(sig, q), 0.0, 0.0, 0.0});
                     return Sample{relative(diff, abs_norm(sig, q)), {{"q", as_json(q)}}};
                   },
                   {}});
  props.push_back({"pure-product-identity", "gquat", tol.pure_product, any_signature,
                   [&subject](Sampler& s, const Signature& sig) {
                     const Vec3 u = s.vec(), v = s.vec();
                     const GQuat lhs = multiply(sig, pure(u), pure(v));
                     const GQuat rhs = from_scalar_vector(-inner(sig, u, v), subject.cross(sig, u, v));
                     return Sample{relative(max_abs_diff(lhs, rhs), max_abs(lhs)),
                                   {{"u", as_json(u)}, {"v", as_json(v)}}};
                   },
                   {}});
  props.push_back({"special-case-reduction", "gquat", 0.0, any_signature,
                   [](Sampler&, const Signature& sig) {
                     const double r = sig == Signature::euclidean() ? table_residual(sig, kHamiltonTable)
                                                                    : table_residual(sig, kSplitTable);
                     return Sample{r, Json::object()};
                   },
                   {Signature::euclidean(), Signature::split()}});
  props.back().deterministic = true;

  // rotation
  props.push_back({"isometry", "rotation", tol.isometry, nondegenerate,
                   [](Sampler& s, const Signature& sig) {
                     const GQuat q = s.unit_quat(sig);
                     const Vec3 u = s.vec(), v = s.vec();
                     const Vec3 fu = conjugation_map(sig, q, u), fv = conjugation_map(sig, q, v);
                     const double diff = std::fabs(inner(sig, fu, fv) - inner(sig, u, v));
                     const double scale = std::fmax(abs_inner(sig, fu, fv), abs_inner(sig, u, v));
                     return Sample{relative(diff, scale),
                                   {{"q", as_json(q)}, {"u", as_json(u)}, {"v", as_json(v)}}};
                   },
                   {}});
  props.push_back({"quasi-orthogonality", "rotation", tol.quasi_orthogonal, nondegenerate,
                   [&subject, &tol](Sampler& s, const Signature& sig) {
                     const GQuat q = s.unit_quat(sig);
                     const auto r =
                         check_quasi_orthogonal(sig, subject.rotation_matrix(sig, q), tol.quasi_orthogonal);
                     return Sample{r.residual, {{"q", as_json(q)}}};
                   },
                   {}});
  props.push_back({"unit-determinant", "rotation", tol.determinant, nondegenerate,
                   [&subject](Sampler& s, const Signature& sig) {
                     const GQuat q = s.unit_quat(sig);
                     return Sample{std::fabs(det3(subject.rotation_matrix(sig, q)) - 1.0),
                                   {{"q", as_json(q)}}};
                   },
                   {}});
  props.push_back({"oracle-agreement", "rotation", tol.oracle, nondegenerate,
                   [&subject](Sampler& s, const Signature& sig) {
                     const GQuat q = s.unit_quat(sig);
                     const Mat3 oracle = oracle_matrix(sig, q);
                     return Sample{relative(max_abs_diff(subject.rotation_matrix(sig, q), oracle),
                                            max_abs(oracle)),
                                   {{"q", as_json(q)}}};
                   },
                   {}});
  props.push_back({"linearity", "rotation", tol.linearity, nondegenerate,
                   [](Sampler& s, const Signature& sig) {
                     const GQuat q = s.unit_quat(sig);
                     const Vec3 u = s.vec(), v = s.vec();
                     const double a = s.uniform(-2, 2), b = s.uniform(-2, 2);
                     const Vec3 lhs = conjugation_map(sig, q, a * u + b * v);
                     const Vec3 rhs = a * conjugation_map(sig, q, u) + b * conjugation_map(sig, q, v);
                     return Sample{relative(max_abs_diff(lhs, rhs), max_abs(rhs)),
                                   {{"q", as_json(q)}, {"u", as_json(u)}, {"v", as_json(v)},
                                    {"a", a}, {"b", b}}};
                   },
                   {}});
  props.push_back({"homomorphism", "rotation", tol.homomorphism, nondegenerate,
                   [&subject](Sampler& s, const Signature& sig) {
                     const GQuat q = s.unit_quat(sig), p = s.unit_quat(sig);
                     const Mat3 lhs = subject.rotation_matrix(sig, compose(sig, q, p));
                     const Mat3 rhs = mat_mul(subject.rotation_matrix(sig, q), subject.rotation_matrix(sig, p));
                     return Sample{relative(max_abs_diff(lhs, rhs), max_abs(rhs)),
                                   {{"q", as_json(q)}, {"p", as_json(p)}}};
                   },
                   {}});
  props.push_back({"polar-round-trip", "rotation", tol.polar_round_trip, nondegenerate,
                   [](Sampler& s, const Signature& sig) {
                     GQuat q = s.unit_quat(sig);
                     // q and -q act identically; only the a0 > 0 sheet of the
                     // hyperbolic branch has a polar form.
                     if (inner(sig, q.vector_part(), q.vector_part()) < 0 && q.a0 < 0) q = negate(q);
                     const GQuat back = from_axis_angle(sig, polar_form(sig, q));
                     return Sample{relative(max_abs_diff(back, q), max_abs(q)), {{"q", as_json(q)}}};
                   },
                   {}});
  props.push_back({"rodrigues-equivalence", "rotation", tol.rodrigues,
                   [](const Signature& sig) { return positive_definite(sig) || split_type(sig); },
                   [&subject](Sampler& s, const Signature& sig) {
                     PolarForm pf;
                     if (positive_definite(sig)) {
                       pf.kind = PolarKind::kElliptic;
                       pf.axis = s.unit_axis(sig, 1.0);
                       pf.angle = s.uniform(1e-3, 2 * std::numbers::pi - 1e-3);
                     } else {
                       pf.kind = PolarKind::kHyperbolic;
                       pf.axis = s.unit_axis(sig, -1.0);
                       pf.angle = s.uniform(1e-2, 2.0);
                     }
                     const Mat3 expected = subject.rotation_matrix(sig, from_axis_angle(sig, pf));
                     return Sample{relative(max_abs_diff(rodrigues_matrix(sig, pf), expected),
                                            max_abs(expected)),
                                   {{"kind", pf.kind == PolarKind::kElliptic ? "elliptic" : "hyperbolic"},
                                    {"angle", pf.angle},
                                    {"axis", as_json(pf.axis)}}};
                   },
                   {}});
  props.push_back({"euclidean-reduction", "rotation", tol.euclidean_reduction, any_signature,
                   [&subject](Sampler& s, const Signature& sig) {
                     const GQuat q = s.unit_quat(sig);
                     return Sample{max_abs_diff(subject.rotation_matrix(sig, q), wittenburg_matrix(q)),
                                   {{"q", as_json(q)}}};
                   },
                   {Signature::euclidean()}});
  props.push_back({"sign-invariance", "rotation", 0.0, nondegenerate,
                   [&subject](Sampler& s, const Signature& sig) {
                     const GQuat q = s.unit_quat(sig);
                     return Sample{max_abs_diff(subject.rotation_matrix(sig, q),
                                                subject.rotation_matrix(sig, negate(q))),
                                   {{"q", as_json(q)}}};
                   },
                   {}});
  return props;
}

void record(PropertyResult& result, Sample sample, const Signature& sig, std::size_t index) {
  if (!std::isfinite(sample.residual)) sample.residual = std::numeric_limits<double>::max();
  Json input;
  input["signature"] = as_json(sig);
  input["case"] = index;
  for (const auto& item : sample.input.items()) input[item.key()] = item.value();

  const bool first = result.cases == 0;
  ++result.cases;
  if (sample.residual > result.tolerance) {
    ++result.failures;
    if (result.first_failure.is_null()) result.first_failure = input;
  }
  if (first || sample.residual > result.worst_residual) {
    result.worst_residual = sample.residual;
    result.worst_input = std::move(input);
  }
}

Sample guarded(const PropertySpec& spec, Sampler& sampler, const Signature& sig) {
  try {
    return spec.sample(sampler, sig);
  } catch (const DomainError& e) {
    return Sample{std::numeric_limits<double>::max(),
                  {{"error", std::string(error_name(e.kind()))}, {"detail", e.what()}}};
  } catch (const std::exception& e) {
    return Sample{std::numeric_limits<double>::max(), {{"error", "exception"}, {"detail", e.what()}}};
  }
}

// ---------------------------------------------------------------------------
// Fixtures

Mat3 euclidean_example_matrix() {
  const double r = std::sqrt(0.5);
  Mat3 m;
  m.a = {0.5, -0.5, -r, -0.5, 0.5, -r, r, r, 0.0};
  return m;
}

Mat3 split_example_matrix() {
  const double h = std::sqrt(3.0) / 2;
  Mat3 m;
  m.a = {1.0, 0.0, 0.0, 0.0, 0.5, -h, 0.0, h, 0.5};
  return m;
}

GQuat example_quaternion(const Signature& sig) {
  return {std::sqrt(0.5), 0.5 / std::sqrt(sig.alpha()), -0.5 / std::sqrt(sig.beta()), 0.0};
}

std::string signature_label(const Signature& sig) {
  return "(" + format_number(sig.alpha()) + "," + format_number(sig.beta()) + ")";
}

FixtureResult fixture(std::string name, double residual, double tolerance, bool expect_reject = false) {
  FixtureResult f;
  f.name = std::move(name);
  f.residual = std::isfinite(residual) ? residual : std::numeric_limits<double>::max();
  f.tolerance = tolerance;
  f.expect_reject = expect_reject;
  f.pass = expect_reject ? f.residual > tolerance : f.residual <= tolerance;
  return f;
}

template <typename F>
double guarded_residual(F&& f) {
  try {
    return f();
  } catch (const std::exception&) {
    return std::numeric_limits<double>::max();
  }
}

std::vector<FixtureResult> run_fixtures(const Subject& subject) {
  std::vector<FixtureResult> out;
  out.push_back(fixture("euclidean-example", guarded_residual([&] {
    const Signature sig = Signature::euclidean();
    return max_abs_diff(subject.rotation_matrix(sig, {std::sqrt(0.5), 0.5, -0.5, 0.0}),
                        euclidean_example_matrix());
  }), 1e-15));
  out.push_back(fixture("split-example", guarded_residual([&] {
    const Signature sig = Signature::split();
    return max_abs_diff(subject.rotation_matrix(sig, {std::sqrt(3.0) / 2, 0.5, 0.0, 0.0}),
                        split_example_matrix());
  }), 1e-15));
  for (const Signature sig : {Signature(2, 3), Signature(2, 1), Signature(5, 0.5)}) {
    out.push_back(fixture("generalized-example-" + signature_label(sig), guarded_residual([&] {
      const GQuat q = example_quaternion(sig);
      const auto r = check_quasi_orthogonal(sig, subject.rotation_matrix(sig, q), 1e-12);
      const PolarForm pf = polar_form(sig, q);
      return std::fmax(std::fmax(r.residual, r.det_residual),
                       std::fabs(pf.angle - std::numbers::pi / 2));
    }), 1e-12));
  }
  out.push_back(fixture("generalized-example-misprint-rejected", guarded_residual([] {
    const Signature sig(2, 1);
    const auto r = check_quasi_orthogonal(sig, misprint::example_matrix(sig), 1e-9);
    return std::fmax(r.residual, r.det_residual);
  }), 1e-9, true));
  out.push_back(fixture("zero-divisor", [] {
    try {
      inverse(Signature::split(), {1.0, 0.0, 1.0, 0.0});
    } catch (const DomainError& e) {
      if (e.kind() == ErrorKind::kNonInvertible) return 0.0;
    }
    return 1.0;
  }(), 0.0));
  out.push_back(fixture("basis-product-table", [] {
    // e_r e_c for a generic signature, straight from the defining relations.
    const Signature sig(2, 3);
    const double a = sig.alpha(), b = sig.beta();
    const GQuat one{1, 0, 0, 0}, i{0, 1, 0, 0}, j{0, 0, 1, 0}, k{0, 0, 0, 1};
    const GQuat expected[4][4] = {
        {one, i, j, k},
        {i, scale(-a, one), k, scale(-a, j)},
        {j, scale(-1, k), scale(-b, one), scale(b, i)},
        {k, scale(a, j), scale(-b, i), scale(-a * b, one)},
    };
    double worst = 0.0;
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c)
        worst = std::fmax(worst, max_abs_diff(multiply(sig, kBasis[r], kBasis[c]), expected[r][c]));
    return worst;
  }(), 0.0));
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Suite

const std::vector<std::string>& property_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& p : build_properties(Tolerances{}, Subject::reference())) n.push_back(p.name);
    return n;
  }();
  return names;
}

SuiteReport run_suite(const SuiteConfig& cfg, const Subject& subject) {
  if (cfg.cases == 0) throw std::invalid_argument("suite needs at least one case");
  if (cfg.signatures.empty()) throw std::invalid_argument("suite needs at least one signature");

  SuiteReport report;
  report.seed = cfg.seed;
  report.cases = cfg.cases;
  report.signatures = cfg.signatures;

  const auto specs = build_properties(cfg.tol, subject);
  for (std::size_t pi = 0; pi < specs.size(); ++pi) {
    const PropertySpec& spec = specs[pi];
    PropertyResult result;
    result.name = spec.name;
    result.module = spec.module;
    result.tolerance = spec.tolerance;

    const bool fixed = !spec.fixed_signatures.empty();
    const auto& sigs = fixed ? spec.fixed_signatures : cfg.signatures;
    const std::size_t cases = spec.deterministic ? 1 : cfg.cases;
    for (std::size_t si = 0; si < sigs.size(); ++si) {
      if (!spec.applies(sigs[si])) continue;
      std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                        static_cast<std::uint32_t>(pi), static_cast<std::uint32_t>(si)};
      Sampler sampler(seq);
      for (std::size_t c = 0; c < cases; ++c) {
        record(result, guarded(spec, sampler, sigs[si]), sigs[si], c);
      }
    }
    report.properties.push_back(std::move(result));
  }
  report.fixtures = run_fixtures(subject);
  return report;
}

bool SuiteReport::pass() const {
  return std::all_of(properties.begin(), properties.end(), [](const auto& p) { return p.pass(); }) &&
         std::all_of(fixtures.begin(), fixtures.end(), [](const auto& f) { return f.pass; });
}

const PropertyResult* SuiteReport::find(const std::string& name) const {
  for (const auto& p : properties)
    if (p.name == name) return &p;
  return nullptr;
}

Json SuiteReport::to_json() const {
  Json j;
  j["verdict"] = pass() ? "pass" : "fail";
  j["seed"] = seed;
  j["cases"] = cases;
  Json sigs = Json::array();
  for (const auto& s : signatures) sigs.push_back(as_json(s));
  j["signatures"] = std::move(sigs);
  Json props = Json::array();
  for (const auto& p : properties) {
    Json e;
    e["name"] = p.name;
    e["module"] = p.module;
    e["pass"] = p.pass();
    e["cases"] = p.cases;
    e["failures"] = p.failures;
    e["tolerance"] = p.tolerance;
    e["worst_residual"] = p.worst_residual;
    e["worst_input"] = p.worst_input;
    e["first_failure"] = p.first_failure;
    props.push_back(std::move(e));
  }
  j["properties"] = std::move(props);
  Json fx = Json::array();
  for (const auto& f : fixtures) {
    Json e;
    e["name"] = f.name;
    e["pass"] = f.pass;
    e["expect"] = f.expect_reject ? "reject" : "accept";
    e["tolerance"] = f.tolerance;
    e["residual"] = f.residual;
    fx.push_back(std::move(e));
  }
  j["fixtures"] = std::move(fx);
  return j;
}

// ---------------------------------------------------------------------------
// Reference formulas and misprints

Mat3 wittenburg_matrix(const GQuat& q) {
  const Signature sig = Signature::euclidean();
  if (!(std::fabs(norm(sig, q) - 1.0) <= 1e-9)) {
    throw DomainError(ErrorKind::kNotUnit, "conversion formulas need a unit real quaternion");
  }
  const double a0 = q.a0, a1 = q.a1, a2 = q.a2, a3 = q.a3;
  Mat3 r;
  r(0, 0) = 2 * (a0 * a0 + a1 * a1) - 1;
  r(1, 0) = 2 * (a1 * a2 + a0 * a3);
  r(2, 0) = 2 * (a1 * a3 - a0 * a2);
  r(0, 1) = 2 * (a1 * a2 - a0 * a3);
  r(1, 1) = 2 * (a0 * a0 + a2 * a2) - 1;
  r(2, 1) = 2 * (a2 * a3 + a0 * a1);
  r(0, 2) = 2 * (a1 * a3 + a0 * a2);
  r(1, 2) = 2 * (a2 * a3 - a0 * a1);
  r(2, 2) = 2 * (a0 * a0 + a3 * a3) - 1;
  return r;
}

namespace misprint {

Vec3 cross_ab_k(const Signature& sig, const Vec3& u, const Vec3& v) {
  Vec3 w = cross(sig, u, v);
  w.x3 *= sig.alpha_beta();
  return w;
}

Mat3 rotation_matrix(const Signature& sig, const GQuat& q) {
  Mat3 m = genquat::rotation_matrix(sig, q);
  const double n = norm(sig, q);
  m(0, 2) = 2.0 * sig.beta() * (q.a1 * q.a3 + q.a0 * q.a2) / n;
  m(1, 2) = 2.0 * sig.alpha() * (q.a2 * q.a3 - q.a0 * q.a1) / n;
  return m;
}

Mat3 example_matrix(const Signature& sig) {
  const double a = sig.alpha(), b = sig.beta();
  const double r = 1.0 / std::sqrt(2.0);
  Mat3 m;
  m.a = {0.5 + (a - b) / 4, -b / 2,            -b * r,
         -a / 2,            0.5 + (b - a) / 4, -a * r,
         r,                 r,                 0.5 - (a + b) / 4};
  return m;
}

}  // namespace misprint

std::vector<Erratum> erratum_report() {
  std::vector<Erratum> out;

  {
    const Signature sig(2, 3);
    const Vec3 i{1, 0, 0}, j{0, 1, 0};
    const Vec3 printed = misprint::cross_ab_k(sig, i, j);
    const Vec3 corrected = cross(sig, i, j);
    const Vec3 product = multiply(sig, pure(i), pure(j)).vector_part();
    Erratum e;
    e.id = "cross-k";
    e.printed = "k component of u x v is alpha*beta*(u1 v2 - u2 v1), so i x j = alpha*beta k";
    e.corrected = "k component is (u1 v2 - u2 v1), so i x j = k and pure(u) pure(v) = -<u,v> + u x v";
    e.evidence = {{"signature", as_json(sig)},
                  {"printed_i_cross_j", as_json(printed)},
                  {"corrected_i_cross_j", as_json(corrected)},
                  {"vector_part_of_i_times_j", as_json(product)}};
    e.confirmed = !(printed == product) && corrected == product;
    out.push_back(std::move(e));
  }
  {
    const Signature sig = Signature::euclidean();
    const GQuat q{1, 1, 1, 1};
    const double n = norm(sig, q);
    const double printed = norm(sig, scale(1.0 / n, q));
    const double corrected = norm(sig, normalize(sig, q));
    Erratum e;
    e.id = "unit-normalization";
    e.printed = "q0 = q / N_q";
    e.corrected = "q0 = q / sqrt(N_q)";
    e.evidence = {{"signature", as_json(sig)},
                  {"q", as_json(q)},
                  {"norm_q", n},
                  {"norm_of_q_over_n", printed},
                  {"norm_of_q_over_sqrt_n", corrected}};
    e.confirmed = std::fabs(printed - 1.0) > 1e-6 && std::fabs(corrected - 1.0) <= 1e-14;
    out.push_back(std::move(e));
  }
  {
    const Signature sig(2, 3);
    const GQuat q = normalize(sig, {1, 1, 1, 1});
    const Mat3 oracle = oracle_matrix(sig, q);
    const Mat3 printed = misprint::rotation_matrix(sig, q);
    const Mat3 corrected = rotation_matrix(sig, q);
    const auto printed_qo = check_quasi_orthogonal(sig, printed, 1e-9);
    const auto corrected_qo = check_quasi_orthogonal(sig, corrected, 1e-9);
    Erratum e;
    e.id = "matrix-m13-m23";
    e.printed = "M13 = 2 beta (a1 a3 + a0 a2), M23 = 2 alpha (a2 a3 - a0 a1)";
    e.corrected = "M13 = 2 beta (alpha a1 a3 + a0 a2), M23 = 2 alpha (beta a2 a3 - a0 a1)";
    e.evidence = {{"signature", as_json(sig)},
                  {"q", as_json(q)},
                  {"conjugation_column_3", as_json(column(oracle, 2))},
                  {"printed_column_3", as_json(column(printed, 2))},
                  {"corrected_column_3", as_json(column(corrected, 2))},
                  {"printed_quasi_orthogonal_residual", printed_qo.residual},
                  {"corrected_quasi_orthogonal_residual", corrected_qo.residual}};
    e.confirmed = max_abs_diff(printed, oracle) > 1e-6 && max_abs_diff(corrected, oracle) <= 1e-12 &&
                  !printed_qo.quasi_orthogonal && corrected_qo.quasi_orthogonal;
    out.push_back(std::move(e));
  }
  {
    const Signature sig(2, 1);
    const Mat3 printed = misprint::example_matrix(sig);
    const Mat3 corrected = rotation_matrix(sig, example_quaternion(sig));
    const auto printed_qo = check_quasi_orthogonal(sig, printed, 1e-9);
    const auto corrected_qo = check_quasi_orthogonal(sig, corrected, 1e-9);
    const Mat3 eps = epsilon_matrix(sig);
    Erratum e;
    e.id = "generalized-example";
    e.printed = "rotation matrix of q = 1/sqrt2 + (1/(2 sqrt a), -1/(2 sqrt b), 0) as printed";
    e.corrected = "matrix obtained by conjugating the basis vectors with q";
    e.evidence = {{"signature", as_json(sig)},
                  {"printed_matrix", as_json(printed)},
                  {"printed_mt_eps_m", as_json(mat_mul(mat_mul(transpose(printed), eps), printed))},
                  {"eps", as_json(eps)},
                  {"printed_residual", printed_qo.residual},
                  {"printed_det", printed_qo.det},
                  {"corrected_matrix", as_json(corrected)},
                  {"corrected_residual", corrected_qo.residual},
                  {"corrected_det", corrected_qo.det}};
    e.confirmed = !printed_qo.quasi_orthogonal && corrected_qo.quasi_orthogonal;
    out.push_back(std::move(e));
  }
  return out;
}

Json to_json(const std::vector<Erratum>& errata) {
  Json arr = Json::array();
  for (const auto& e : errata) {
    Json j;
    j["id"] = e.id;
    j["confirmed"] = e.confirmed;
    j["printed"] = e.printed;
    j["corrected"] = e.corrected;
    j["evidence"] = e.evidence;
    arr.push_back(std::move(j));
  }
  return Json{{"errata", std::move(arr)}};
}

}  // namespace genquat
