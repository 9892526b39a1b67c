#pragma once

#include <charconv>
#include <string>
#include <vector>

namespace selman {

/// Shortest decimal form that round-trips the exact double. All serialized
/// output goes through this so reports are byte-stable.
inline std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

inline std::string format_point(const std::vector<double>& p,
                                const char* sep = " ") {
  std::string out;
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) out += sep;
    out += format_double(p[i]);
  }
  return out;
}

}  // namespace selman
