#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>

namespace negotia {

/// Currency is stored as integer cents throughout; floats appear only at
/// the rendering boundary.
using Cents = std::int64_t;

inline Cents cents_from_dollars(double dollars) {
  return static_cast<Cents>(std::llround(dollars * 100.0));
}

inline double dollars(Cents c) { return static_cast<double>(c) / 100.0; }

/// Renders cents as a dollar figure with the shortest fraction, keeping at
/// least one decimal: 34900 -> "349.0", 17250 -> "172.5", 15299 -> "152.99".
inline std::string format_dollars(Cents c) {
  bool negative = c < 0;
  Cents abs = negative ? -c : c;
  Cents whole = abs / 100;
  Cents frac = abs % 100;
  char buf[48];
  if (frac % 10 == 0) {
    std::snprintf(buf, sizeof(buf), "%s%lld.%lld", negative ? "-" : "",
                  static_cast<long long>(whole), static_cast<long long>(frac / 10));
  } else {
    std::snprintf(buf, sizeof(buf), "%s%lld.%02lld", negative ? "-" : "",
                  static_cast<long long>(whole), static_cast<long long>(frac));
  }
  return buf;
}

}  // namespace negotia
