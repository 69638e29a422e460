#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <vector>

namespace strata {

// All form evaluations and lattice solves are exact; no floating point.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_integral(const Rational& q) {
  return boost::multiprecision::denominator(q) == 1;
}

inline Int to_int(const Rational& q) {
  return boost::multiprecision::numerator(q) / boost::multiprecision::denominator(q);
}

// Largest integer n with n <= q.
inline Int floor_rational(const Rational& q) {
  Int num = boost::multiprecision::numerator(q);
  Int den = boost::multiprecision::denominator(q);  // den > 0
  Int quot = num / den;
  if (num < 0 && quot * den != num) --quot;
  return quot;
}

namespace detail {

// Gauss-Jordan inverse of a square integer matrix, exact. The matrices
// inverted here (Cartan matrices of finite type) are always nonsingular.
inline std::vector<std::vector<Rational>> invert_matrix(
    const std::vector<std::vector<int>>& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
    a[i][n + i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    std::swap(a[pivot], a[col]);
    const Rational p = a[col][col];
    for (std::size_t j = 0; j < 2 * n; ++j) a[col][j] /= p;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a[i][col] == 0) continue;
      const Rational f = a[i][col];
      for (std::size_t j = 0; j < 2 * n; ++j) a[i][j] -= f * a[col][j];
    }
  }
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
  return inv;
}

}  // namespace detail
}  // namespace strata
