#pragma once

#include <cstdio>
#include <optional>
#include <string>

namespace redsim {

// Fixed numeric formatting so identical runs emit byte-identical files:
// shortest form with up to 12 significant digits, '.' decimal separator.
inline std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

inline std::string fmt(const std::optional<double>& v) {
  return v ? fmt(*v) : std::string();
}

}  // namespace redsim
