#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "genquat/metric.hpp"
#include "genquat/quaternion.hpp"
#include "genquat/rotation.hpp"

namespace genquat::cli {

enum class Command { kMul, kRotate, kMatrix, kPolar, kFromAxisAngle, kVerify, kSuite, kErrata };

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitDomain = 3;

struct Request {
  Command command = Command::kMul;
  std::optional<Signature> signature;
  std::optional<GQuat> q;
  std::optional<GQuat> p;
  std::optional<Vec3> v;
  std::optional<Vec3> axis;
  std::optional<double> angle;
  std::optional<PolarKind> kind;
  std::optional<Mat3> matrix;
  double tol = 1e-9;
  std::uint64_t seed = 42;
  std::size_t cases = 1000;
  int precision = 17;
  bool batch = false;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Thrown by parse_args for --help; what() holds the help text.
class HelpRequested : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// args excludes the program name. Throws UsageError naming the offending flag.
Request parse_args(const std::vector<std::string>& args);

// Writes one JSON object per result to out, error objects to err, and
// returns the process exit code.
int execute(const Request& req, std::istream& in, std::ostream& out, std::ostream& err);

// parse_args + execute, with usage errors mapped to exit code 2.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace genquat::cli
