#ifndef KAPPA_FORMAT_HPP
#define KAPPA_FORMAT_HPP

#include <cmath>
#include <cstdio>
#include <optional>
#include <string>

namespace kappa {

// CSV-stable number formatting: %.10g, with NaN spelled exactly "NaN" so
// undefined table cells round-trip byte-identically.
inline std::string format_value(double x) {
  if (std::isnan(x)) return "NaN";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.10g", x);
  return buf;
}

inline std::string format_value(const std::optional<double>& x) {
  return x ? format_value(*x) : std::string("NaN");
}

}  // namespace kappa

#endif
