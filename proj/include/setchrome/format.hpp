#pragma once

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

namespace setchrome {

// Decimal with 12 significant digits, the CSV number format.
inline std::string fmt12(double x) {
  if (std::isnan(x)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

// Inclusive arithmetic grid lo, lo+step, ... up to hi (with a 1e-9 step slack
// so that hi itself is included when (hi-lo)/step is integral).
inline std::vector<double> linear_grid(double lo, double hi, double step) {
  std::vector<double> out;
  if (!(step > 0.0) || hi < lo) return out;
  const auto count = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(lo + static_cast<double>(i) * step);
  return out;
}

}  // namespace setchrome
