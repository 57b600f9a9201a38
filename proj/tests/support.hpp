#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "ncmult/linalg.hpp"

namespace testing {

using ncmult::cplx;
using ncmult::ComplexMatrix;

inline double max_diff(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  double d = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) d = std::max(d, std::abs(a[k] - b[k]));
  return d;
}

inline double max_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double d = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) d = std::max(d, std::abs(a[k] - b[k]));
  return d;
}

inline cplx root_of_unity(std::size_t n, std::size_t k) {
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n));
}

// Unitary DFT matrix, an independent source of unitaries for the oracles.
inline ComplexMatrix dft(std::size_t n) {
  ComplexMatrix f(n);
  const double s = 1.0 / std::sqrt(static_cast<double>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) f(i, j) = s * root_of_unity(n, (i * j) % n);
  return f;
}

}  // namespace testing
