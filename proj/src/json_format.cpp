#include "genquat/json_format.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>
#include <string_view>

namespace genquat {

namespace {

// Digits of the mantissa without leading or trailing zeros.
int significant_digits(std::string_view s) {
  const std::string_view mantissa = s.substr(0, s.find_first_of("eE"));
  std::string digits;
  for (char c : mantissa) {
    if (c >= '0' && c <= '9') digits += c;
  }
  const auto first = digits.find_first_not_of('0');
  if (first == std::string::npos) return 0;
  const auto last = digits.find_last_not_of('0');
  return static_cast<int>(last - first + 1);
}

}  // namespace

std::string format_number(double x, int precision) {
  if (!std::isfinite(x)) throw std::invalid_argument("non-finite number in JSON output");
  if (precision < 1) precision = 1;
  if (x == 0.0) return "0";

  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  std::string shortest(buf, res.ptr);
  const int digits = significant_digits(shortest);
  if (digits <= precision) return shortest;

  res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, precision);
  return std::string(buf, res.ptr);
}

namespace {

void dump_into(const nlohmann::ordered_json& j, int precision, std::string& out) {
  using value_t = nlohmann::ordered_json::value_t;
  switch (j.type()) {
    case value_t::object: {
      out += '{';
      bool first = true;
      for (const auto& item : j.items()) {
        if (!first) out += ',';
        first = false;
        out += nlohmann::ordered_json(item.key()).dump();
        out += ':';
        dump_into(item.value(), precision, out);
      }
      out += '}';
      break;
    }
    case value_t::array: {
      out += '[';
      bool first = true;
      for (const auto& value : j) {
        if (!first) out += ',';
        first = false;
        dump_into(value, precision, out);
      }
      out += ']';
      break;
    }
    case value_t::number_float:
      out += format_number(j.get<double>(), precision);
      break;
    default:
      out += j.dump();
      break;
  }
}

}  // namespace

std::string dump(const nlohmann::ordered_json& j, int precision) {
  std::string out;
  dump_into(j, precision, out);
  return out;
}

}  // namespace genquat
