#pragma once

#include "strata/numeric.hpp"

#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace strata {

enum class Family : char {
  A = 'A',
  B = 'B',
  C = 'C',
  D = 'D',
  E = 'E',
  F = 'F',
  G = 'G',
};

inline char family_letter(Family f) { return static_cast<char>(f); }

inline std::optional<Family> parse_family(std::string_view s) {
  if (s.size() != 1) return std::nullopt;
  const char c = s[0];
  if (c >= 'A' && c <= 'G') return static_cast<Family>(c);
  return std::nullopt;
}

inline bool valid_type(Family f, int rank) {
  switch (f) {
    case Family::A: return rank >= 1;
    case Family::B: return rank >= 2;
    case Family::C: return rank >= 2;
    case Family::D: return rank >= 4;
    case Family::E: return rank >= 6 && rank <= 8;
    case Family::F: return rank == 4;
    case Family::G: return rank == 2;
  }
  return false;
}

// Cartan matrix c_ij together with the minimal positive symmetrizers d_i,
// i.e. the smallest positive integers making (d_i c_ij) symmetric.
// Convention: c_ij = 2 (alpha_i, alpha_j) / (alpha_i, alpha_i), nodes
// numbered in the Bourbaki order for each family.
struct CartanDatum {
  Family family;
  int rank;
  std::vector<std::vector<int>> cartan;  // row i, column j holds c_ij
  std::vector<int> d;

  bool operator==(const CartanDatum&) const = default;

  static CartanDatum build(Family f, int rank);
};

namespace detail {

// Solves for the minimal positive integer symmetrizers by propagating the
// ratio d_j / d_i = c_ij / c_ji along edges of the (connected) diagram.
inline std::vector<int> solve_symmetrizers(const std::vector<std::vector<int>>& c) {
  const int n = static_cast<int>(c.size());
  std::vector<Rational> ratio(n, 0);
  std::vector<bool> seen(n, false);
  std::vector<int> queue;
  ratio[0] = 1;
  seen[0] = true;
  queue.push_back(0);
  while (!queue.empty()) {
    const int i = queue.back();
    queue.pop_back();
    for (int j = 0; j < n; ++j) {
      if (seen[j] || c[i][j] == 0 || i == j) continue;
      // d_i c_ij = d_j c_ji
      ratio[j] = ratio[i] * Rational(c[i][j]) / Rational(c[j][i]);
      seen[j] = true;
      queue.push_back(j);
    }
  }
  Int lcm_den = 1;
  for (int i = 0; i < n; ++i) {
    if (!seen[i]) throw std::logic_error("disconnected Cartan diagram");
    lcm_den = boost::multiprecision::lcm(lcm_den, boost::multiprecision::denominator(ratio[i]));
  }
  std::vector<Int> scaled(n);
  Int g = 0;
  for (int i = 0; i < n; ++i) {
    scaled[i] = to_int(ratio[i] * Rational(lcm_den));
    g = boost::multiprecision::gcd(g, scaled[i]);
  }
  std::vector<int> d(n);
  for (int i = 0; i < n; ++i) d[i] = static_cast<int>(scaled[i] / g);
  return d;
}

inline void validate_cartan(const CartanDatum& cd) {
  const int n = cd.rank;
  for (int i = 0; i < n; ++i) {
    if (cd.cartan[i][i] != 2) throw std::logic_error("Cartan diagonal must be 2");
    if (cd.d[i] <= 0) throw std::logic_error("symmetrizers must be positive");
    for (int j = 0; j < n; ++j) {
      if (i != j && cd.cartan[i][j] > 0)
        throw std::logic_error("off-diagonal Cartan entries must be <= 0");
      if ((cd.cartan[i][j] == 0) != (cd.cartan[j][i] == 0))
        throw std::logic_error("Cartan zero pattern must be symmetric");
      if (cd.d[i] * cd.cartan[i][j] != cd.d[j] * cd.cartan[j][i])
        throw std::logic_error("(d_i c_ij) must be symmetric");
    }
  }
  int g = 0;
  for (int i = 0; i < n; ++i) g = std::gcd(g, cd.d[i]);
  if (g != 1) throw std::logic_error("symmetrizers are not minimal");
}

}  // namespace detail

inline CartanDatum CartanDatum::build(Family f, int rank) {
  if (!valid_type(f, rank))
    throw std::invalid_argument("invalid Cartan type (" + std::string(1, family_letter(f)) +
                                ", " + std::to_string(rank) + ")");
  const int n = rank;
  std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) c[i][i] = 2;
  auto link = [&](int i, int j) {  // 1-based nodes, simple bond
    c[i - 1][j - 1] = -1;
    c[j - 1][i - 1] = -1;
  };
  switch (f) {
    case Family::A:
      for (int i = 1; i < n; ++i) link(i, i + 1);
      break;
    case Family::B:
      for (int i = 1; i + 1 < n; ++i) link(i, i + 1);
      c[n - 2][n - 1] = -1;  // alpha_n is the short root
      c[n - 1][n - 2] = -2;
      break;
    case Family::C:
      for (int i = 1; i + 1 < n; ++i) link(i, i + 1);
      c[n - 2][n - 1] = -2;  // alpha_n is the long root
      c[n - 1][n - 2] = -1;
      break;
    case Family::D:
      for (int i = 1; i < n - 1; ++i) link(i, i + 1);
      link(n - 2, n);
      break;
    case Family::E:
      link(1, 3);
      link(3, 4);
      link(2, 4);
      for (int i = 4; i < n; ++i) link(i, i + 1);
      break;
    case Family::F:
      link(1, 2);
      link(3, 4);
      c[1][2] = -1;  // alpha_1, alpha_2 long; alpha_3, alpha_4 short
      c[2][1] = -2;
      break;
    case Family::G:
      c[0][1] = -3;  // alpha_1 short, alpha_2 long
      c[1][0] = -1;
      break;
  }
  CartanDatum cd{f, n, std::move(c), {}};
  cd.d = detail::solve_symmetrizers(cd.cartan);
  detail::validate_cartan(cd);
  return cd;
}

// |W| in closed form, used to refuse oversized enumerations up front.
inline Int weyl_group_order(Family f, int rank) {
  if (!valid_type(f, rank))
    throw std::invalid_argument("invalid Cartan type (" + std::string(1, family_letter(f)) +
                                ", " + std::to_string(rank) + ")");
  auto factorial = [](int n) {
    Int r = 1;
    for (int k = 2; k <= n; ++k) r *= k;
    return r;
  };
  switch (f) {
    case Family::A: return factorial(rank + 1);
    case Family::B:
    case Family::C: return factorial(rank) << rank;
    case Family::D: return factorial(rank) << (rank - 1);
    case Family::E:
      if (rank == 6) return 51840;
      if (rank == 7) return 2903040;
      return 696729600;
    case Family::F: return 1152;
    case Family::G: return 12;
  }
  return 0;
}

}  // namespace strata
