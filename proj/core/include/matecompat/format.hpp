#ifndef MATECOMPAT_FORMAT_HPP
#define MATECOMPAT_FORMAT_HPP

#include <cstdio>
#include <string>

namespace matecompat {

/// Fixed six-decimal rendering used in every machine-readable output.
inline std::string fixed6(double v) {
  if (v == 0.0) v = 0.0;  // drop the sign of -0.0
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  std::string s = buf;
  if (s == "-0.000000") s = "0.000000";
  return s;
}

}  // namespace matecompat

#endif  // MATECOMPAT_FORMAT_HPP
