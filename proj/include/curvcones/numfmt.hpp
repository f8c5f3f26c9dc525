// Deterministic shortest round-trip formatting for doubles, used everywhere
// a number ends up in report text so output is byte-stable across runs.
#pragma once

#include <charconv>
#include <cmath>
#include <string>

namespace curvcones {

inline std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0.0) return "0";  // collapse the sign of -0.0
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

}  // namespace curvcones
