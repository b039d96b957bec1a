#ifndef OCTIC_FORMAT_HPP
#define OCTIC_FORMAT_HPP

#include <charconv>
#include <cstdio>
#include <string>
#include <system_error>

namespace octic {

/// Deterministic float formatting for CSV output: 17 significant digits,
/// '%g'-style, '.' decimal separator, locale-independent.
inline std::string format_float17(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value,
                                 std::chars_format::general, 17);
  if (res.ec != std::errc{}) return "nan";
  return std::string(buf, res.ptr);
}

/// Paper-style display rounding: 3 significant figures.
inline std::string format_display3(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3g", value);
  return std::string(buf);
}

}  // namespace octic

#endif  // OCTIC_FORMAT_HPP
