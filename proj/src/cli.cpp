#include "genquat/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "genquat/conformance.hpp"
#include "genquat/error.hpp"
#include "genquat/json_format.hpp"

namespace genquat::cli {

namespace {

struct CommandInfo {
  Command command;
  const char* name;
  const char* description;
  std::vector<std::string> required;  // payload flags, besides --alpha/--beta
  std::vector<std::string> allowed;   // every flag the command accepts
  bool needs_signature;
};

const std::vector<CommandInfo>& commands() {
  static const std::vector<CommandInfo> table = {
      {Command::kMul, "mul", "product q p", {"--q", "--p"}, {"--q", "--p", "--batch"}, true},
      {Command::kRotate, "rotate", "image of v under w -> q w q^-1", {"--q", "--v"},
       {"--q", "--v", "--batch"}, true},
      {Command::kMatrix, "matrix", "3x3 matrix of the conjugation map, row-major", {"--q"},
       {"--q", "--batch"}, true},
      {Command::kPolar, "polar", "polar form of a unit quaternion", {"--q"}, {"--q", "--batch"}, true},
      {Command::kFromAxisAngle, "from-axis-angle", "unit quaternion from a polar form", {"--kind"},
       {"--kind", "--angle", "--axis", "--batch"}, true},
      {Command::kVerify, "verify", "quasi-orthogonality check of a 3x3 matrix", {"--matrix"},
       {"--matrix", "--tol", "--batch"}, true},
      {Command::kSuite, "suite", "run the randomized conformance suite", {},
       {"--alpha", "--beta", "--seed", "--cases"}, false},
      {Command::kErrata, "errata", "print the machine-checked errata ledger", {}, {}, false},
  };
  return table;
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

std::optional<double> to_double(std::string_view text) {
  std::string s = trim(text);
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  if (s.empty()) return std::nullopt;
  double x = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
  if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(x)) return std::nullopt;
  return x;
}

double parse_real(const std::string& flag, const std::string& text) {
  const auto x = to_double(text);
  if (!x) throw UsageError(flag + ": '" + text + "' is not a finite number");
  return *x;
}

std::vector<double> parse_list(const std::string& flag, const std::string& text, std::size_t arity) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    parts.push_back(text.substr(start, comma == std::string::npos ? std::string::npos : comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (parts.size() != arity) {
    throw UsageError(flag + ": expected " + std::to_string(arity) + " components, got " +
                     std::to_string(parts.size()));
  }
  std::vector<double> out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const auto x = to_double(parts[i]);
    if (!x) throw UsageError(flag + ": component " + std::to_string(i + 1) + " not a number");
    out.push_back(*x);
  }
  return out;
}

GQuat to_quat(const std::vector<double>& c) { return {c[0], c[1], c[2], c[3]}; }
Vec3 to_vec(const std::vector<double>& c) { return {c[0], c[1], c[2]}; }
Mat3 to_mat(const std::vector<double>& c) {
  Mat3 m;
  std::copy(c.begin(), c.end(), m.a.begin());
  return m;
}

PolarKind parse_kind(const std::string& flag, const std::string& text) {
  if (text == "elliptic") return PolarKind::kElliptic;
  if (text == "hyperbolic") return PolarKind::kHyperbolic;
  if (text == "identity") return PolarKind::kIdentity;
  throw UsageError(flag + ": expected elliptic, hyperbolic or identity, got '" + text + "'");
}

const char* kind_name(PolarKind k) {
  switch (k) {
    case PolarKind::kIdentity: return "identity";
    case PolarKind::kElliptic: return "elliptic";
    case PolarKind::kHyperbolic: return "hyperbolic";
  }
  return "identity";
}

template <typename T>
T parse_integer(const std::string& flag, const std::string& text) {
  const std::string s = trim(text);
  T x{};
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw UsageError(flag + ": '" + text + "' is not a non-negative integer");
  }
  return x;
}

}  // namespace

Request parse_args(const std::vector<std::string>& args) {
  CLI::App app{"Generalized quaternion algebra H_ab and rotations of E^3_ab"};
  app.name("genquat");
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  std::map<std::string, std::string> values;
  const std::vector<std::pair<std::string, std::string>> options = {
      {"--alpha", "first signature parameter"},
      {"--beta", "second signature parameter"},
      {"--q", "quaternion a0,a1,a2,a3"},
      {"--p", "second quaternion b0,b1,b2,b3"},
      {"--v", "vector x,y,z"},
      {"--axis", "polar-form axis s1,s2,s3"},
      {"--angle", "polar-form angle in radians"},
      {"--kind", "elliptic | hyperbolic | identity"},
      {"--matrix", "m11,m12,...,m33 (row-major)"},
      {"--tol", "verification tolerance (default 1e-9)"},
      {"--seed", "suite seed (default 42)"},
      {"--cases", "suite cases per property and signature (default 1000)"},
      {"--precision", "significant digits in output (default 17)"},
  };
  for (const auto& [flag, help] : options) {
    app.add_option(flag, values[flag], help)->allow_extra_args(false);
  }
  bool batch = false;
  app.add_flag("--batch", batch, "read JSON Lines payloads from stdin");

  std::map<std::string, CLI::App*> subs;
  for (const auto& c : commands()) {
    auto* sub = app.add_subcommand(c.name, c.description);
    sub->fallthrough();
    subs[c.name] = sub;
  }

  // Values such as "-0.5,1,0,0" look like flags to CLI11, so bind every
  // value to its flag before parsing.
  std::vector<std::string> joined;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (values.count(args[i]) > 0 && i + 1 < args.size()) {
      joined.push_back(args[i] + "=" + args[i + 1]);
      ++i;
    } else {
      joined.push_back(args[i]);
    }
  }
  std::vector<std::string> reversed(joined.rbegin(), joined.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested(app.help());
  } catch (const CLI::CallForAllHelp&) {
    throw HelpRequested(app.help("", CLI::AppFormatMode::All));
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  Request req;
  const CommandInfo* cmd = nullptr;
  for (const auto& c : commands()) {
    if (subs[c.name]->parsed()) cmd = &c;
  }
  if (cmd == nullptr) throw UsageError("a command is required");
  req.command = cmd->command;

  auto given = [&](const std::string& flag) { return app.get_option(flag)->count() > 0; };

  std::set<std::string> allowed(cmd->allowed.begin(), cmd->allowed.end());
  allowed.insert("--precision");
  if (cmd->needs_signature) {
    allowed.insert("--alpha");
    allowed.insert("--beta");
  }
  for (const auto& [flag, help] : options) {
    if (given(flag) && !allowed.count(flag)) {
      throw UsageError(flag + " is not used by " + std::string(cmd->name));
    }
  }
  if (batch && !allowed.count("--batch")) {
    throw UsageError(std::string("--batch is not used by ") + cmd->name);
  }
  req.batch = batch;

  if (cmd->needs_signature) {
    for (const char* flag : {"--alpha", "--beta"}) {
      if (!given(flag)) throw UsageError(std::string("missing required flag ") + flag);
    }
  }
  if (given("--alpha") != given("--beta")) {
    throw UsageError(std::string("missing required flag ") + (given("--alpha") ? "--beta" : "--alpha"));
  }
  if (given("--alpha")) {
    req.signature = Signature(parse_real("--alpha", values["--alpha"]),
                              parse_real("--beta", values["--beta"]));
  }

  if (!req.batch) {
    for (const auto& flag : cmd->required) {
      if (!given(flag)) throw UsageError("missing required flag " + flag);
    }
  }

  if (given("--q")) req.q = to_quat(parse_list("--q", values["--q"], 4));
  if (given("--p")) req.p = to_quat(parse_list("--p", values["--p"], 4));
  if (given("--v")) req.v = to_vec(parse_list("--v", values["--v"], 3));
  if (given("--axis")) req.axis = to_vec(parse_list("--axis", values["--axis"], 3));
  if (given("--matrix")) req.matrix = to_mat(parse_list("--matrix", values["--matrix"], 9));
  if (given("--angle")) req.angle = parse_real("--angle", values["--angle"]);
  if (given("--kind")) req.kind = parse_kind("--kind", values["--kind"]);
  if (given("--tol")) {
    req.tol = parse_real("--tol", values["--tol"]);
    if (!(req.tol > 0)) throw UsageError("--tol: must be positive");
  }
  if (given("--seed")) req.seed = parse_integer<std::uint64_t>("--seed", values["--seed"]);
  if (given("--cases")) {
    req.cases = parse_integer<std::size_t>("--cases", values["--cases"]);
    if (req.cases == 0) throw UsageError("--cases: must be at least 1");
  }
  if (given("--precision")) {
    req.precision = parse_integer<int>("--precision", values["--precision"]);
    if (req.precision < 1 || req.precision > 17) throw UsageError("--precision: must be in 1..17");
  }

  if (!req.batch && req.command == Command::kFromAxisAngle && req.kind != PolarKind::kIdentity) {
    for (const char* flag : {"--angle", "--axis"}) {
      if (!given(flag)) throw UsageError(std::string("missing required flag ") + flag);
    }
  }
  return req;
}

namespace {

Json to_json(const GQuat& q) { return Json::array({q.a0, q.a1, q.a2, q.a3}); }
Json to_json(const Vec3& v) { return Json::array({v.x1, v.x2, v.x3}); }
Json to_json(const Mat3& m) {
  Json j = Json::array();
  for (double x : m.a) j.push_back(x);
  return j;
}

struct Outcome {
  Json body;
  int code = kExitOk;
};

Outcome evaluate(const Request& req) {
  const Signature sig = req.signature.value_or(Signature::euclidean());
  Outcome o;
  switch (req.command) {
    case Command::kMul:
      o.body = {{"q", to_json(multiply(sig, *req.q, *req.p))}};
      break;
    case Command::kRotate:
      o.body = {{"v", to_json(conjugation_map(sig, *req.q, *req.v))}};
      break;
    case Command::kMatrix:
      o.body = {{"m", to_json(rotation_matrix(sig, *req.q))}};
      break;
    case Command::kPolar: {
      const PolarForm pf = polar_form(sig, *req.q);
      o.body = {{"kind", kind_name(pf.kind)}, {"angle", pf.angle}};
      if (pf.kind != PolarKind::kIdentity) o.body["axis"] = to_json(pf.axis);
      break;
    }
    case Command::kFromAxisAngle: {
      PolarForm pf;
      pf.kind = *req.kind;
      if (pf.kind != PolarKind::kIdentity) {
        pf.angle = *req.angle;
        pf.axis = *req.axis;
      }
      o.body = {{"q", to_json(from_axis_angle(sig, pf))}};
      break;
    }
    case Command::kVerify: {
      const auto r = check_quasi_orthogonal(sig, *req.matrix, req.tol);
      o.body = {{"quasi_orthogonal", r.quasi_orthogonal}, {"residual", r.residual}, {"det", r.det}};
      if (!r.quasi_orthogonal) o.code = kExitCheckFailed;
      break;
    }
    case Command::kSuite: {
      SuiteConfig cfg = SuiteConfig::with_defaults(req.seed, req.cases);
      if (req.signature) cfg.signatures = {*req.signature};
      const SuiteReport report = run_suite(cfg);
      o.body = report.to_json();
      if (!report.pass()) o.code = kExitCheckFailed;
      break;
    }
    case Command::kErrata: {
      const auto errata = erratum_report();
      o.body = to_json(errata);
      const bool all = std::all_of(errata.begin(), errata.end(), [](const auto& e) { return e.confirmed; });
      if (!all) o.code = kExitCheckFailed;
      break;
    }
  }
  return o;
}

Json error_object(std::string_view name, const std::string& detail) {
  return Json{{"error", std::string(name)}, {"detail", detail}};
}

// Runs one request, mapping failures to an error object.
Outcome evaluate_guarded(const Request& req) {
  try {
    return evaluate(req);
  } catch (const DomainError& e) {
    return {error_object(error_name(e.kind()), e.what()), kExitDomain};
  } catch (const UsageError& e) {
    return {error_object("UsageError", e.what()), kExitUsage};
  } catch (const std::invalid_argument& e) {
    return {error_object("UsageError", e.what()), kExitUsage};
  }
}

std::vector<double> json_numbers(const Json& line, const std::string& field, std::size_t arity) {
  const Json& v = line.at(field);
  if (!v.is_array() || v.size() != arity) {
    throw UsageError(field + ": expected an array of " + std::to_string(arity) + " numbers");
  }
  std::vector<double> out;
  for (std::size_t i = 0; i < arity; ++i) {
    if (!v[i].is_number() || !std::isfinite(v[i].get<double>())) {
      throw UsageError(field + ": component " + std::to_string(i + 1) + " not a number");
    }
    out.push_back(v[i].get<double>());
  }
  return out;
}

Request request_from_line(const Request& base, const std::string& text) {
  Json line;
  try {
    line = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw UsageError(std::string("malformed JSON: ") + e.what());
  }
  if (!line.is_object()) throw UsageError("each line must be a JSON object");

  Request req = base;
  req.batch = false;
  if (line.contains("q")) req.q = to_quat(json_numbers(line, "q", 4));
  if (line.contains("p")) req.p = to_quat(json_numbers(line, "p", 4));
  if (line.contains("v")) req.v = to_vec(json_numbers(line, "v", 3));
  if (line.contains("axis")) req.axis = to_vec(json_numbers(line, "axis", 3));
  if (line.contains("matrix")) req.matrix = to_mat(json_numbers(line, "matrix", 9));
  if (line.contains("angle")) {
    if (!line["angle"].is_number()) throw UsageError("angle: not a number");
    req.angle = line["angle"].get<double>();
  }
  if (line.contains("kind")) {
    if (!line["kind"].is_string()) throw UsageError("kind: not a string");
    req.kind = parse_kind("kind", line["kind"].get<std::string>());
  }

  auto require = [](bool present, const char* field) {
    if (!present) throw UsageError(std::string("missing field ") + field);
  };
  switch (req.command) {
    case Command::kMul: require(req.q.has_value(), "q"); require(req.p.has_value(), "p"); break;
    case Command::kRotate: require(req.q.has_value(), "q"); require(req.v.has_value(), "v"); break;
    case Command::kMatrix:
    case Command::kPolar: require(req.q.has_value(), "q"); break;
    case Command::kFromAxisAngle:
      require(req.kind.has_value(), "kind");
      if (req.kind != PolarKind::kIdentity) {
        require(req.angle.has_value(), "angle");
        require(req.axis.has_value(), "axis");
      }
      break;
    case Command::kVerify: require(req.matrix.has_value(), "matrix"); break;
    default: break;
  }
  return req;
}

}  // namespace

int execute(const Request& req, std::istream& in, std::ostream& out, std::ostream& err) {
  if (!req.batch) {
    const Outcome o = evaluate_guarded(req);
    if (o.code == kExitDomain || o.code == kExitUsage) {
      err << dump(o.body, req.precision) << '\n';
    } else {
      out << dump(o.body, req.precision) << '\n';
    }
    return o.code;
  }

  int code = kExitOk;
  std::string text;
  while (std::getline(in, text)) {
    Outcome o;
    try {
      o = evaluate_guarded(request_from_line(req, text));
    } catch (const UsageError& e) {
      o = {error_object("UsageError", e.what()), kExitUsage};
    }
    out << dump(o.body, req.precision) << '\n';
    code = std::max(code, o.code);
  }
  return code;
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Request req;
  try {
    req = parse_args(args);
  } catch (const HelpRequested& h) {
    out << h.what();
    return kExitOk;
  } catch (const UsageError& e) {
    err << dump(error_object("UsageError", e.what())) << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << dump(error_object("UsageError", e.what())) << '\n';
    return kExitUsage;
  }
  return execute(req, in, out, err);
}

}  // namespace genquat::cli
