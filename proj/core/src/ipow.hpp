#pragma once

#include <complex>

namespace dhermite::detail {

// Integer powers by squaring; std::pow on complex goes through log/exp.
inline std::complex<double> ipow(std::complex<double> base, unsigned n) {
  std::complex<double> result = 1.0;
  while (n > 0) {
    if (n & 1u) result *= base;
    n >>= 1u;
    if (n > 0) base *= base;
  }
  return result;
}

inline std::complex<double> ipow(std::complex<double> base, int n) {
  return n >= 0 ? ipow(base, static_cast<unsigned>(n))
                : 1.0 / ipow(base, static_cast<unsigned>(-n));
}

}  // namespace dhermite::detail
