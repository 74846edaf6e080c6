#pragma once

#include <cmath>
#include <string>

#include "zmean/interval.hpp"

namespace zt {

// the oracle decimal widened by its own 25-digit precision
inline zmean::Interval oracle_iv(const char* dec) {
  zmean::Interval v = zmean::Interval::parse(dec);
  double slack = 1e-22 * std::max(std::abs(v.lo()), std::abs(v.hi())) + 1e-300;
  return {v.lo() - slack, v.hi() + slack};
}

inline double oracle_d(const char* dec) { return std::stod(dec); }

// x may hold the oracle value
inline bool holds(const zmean::Interval& x, const char* dec) {
  zmean::Interval o = oracle_iv(dec);
  return x.lo() <= o.hi() && o.lo() <= x.hi();
}

inline bool holds(const zmean::Interval& x, double v) { return x.contains(v); }

inline std::string rounded(const zmean::Interval& x, int d = 3) {
  return zmean::roundup_digits(x, d).str();
}

}  // namespace zt
