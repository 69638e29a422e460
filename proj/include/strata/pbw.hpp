#pragma once

#include "strata/root_system.hpp"
#include "strata/weyl.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

namespace strata {

// Root sequence beta_1 = alpha_{i_1}, beta_j = s_{i_1}..s_{i_{j-1}} alpha_{i_j}
// attached to a reduced word.
struct BetaSequence {
  ReducedWord word;
  std::vector<Root> roots;
};

inline BetaSequence beta_roots(std::shared_ptr<const RootSystem> sys, const ReducedWord& word) {
  if (!is_reduced(sys, word.letters))
    throw std::invalid_argument("beta_roots requires a reduced word (got '" + word.to_string() +
                                "')");
  BetaSequence bs{word, {}};
  WeylElement prefix = WeylElement::identity(sys);
  for (int i : word.letters) {
    bs.roots.push_back(prefix.act(sys->simple_root(i)));
    prefix = multiply(prefix, WeylElement::simple_reflection(sys, i));
  }
  return bs;
}

inline constexpr std::size_t kDefaultWordLengthCap = 16;

// Every reduced word of w, each exactly once: branch on left descents.
inline std::vector<ReducedWord> all_reduced_words(const WeylElement& w,
                                                  std::size_t length_cap = kDefaultWordLengthCap) {
  if (static_cast<std::size_t>(w.length()) > length_cap)
    throw CapExceededError("element length " + std::to_string(w.length()) +
                               " exceeds reduced-word enumeration cap " + std::to_string(length_cap),
                           length_cap);
  if (w.is_identity()) return {ReducedWord{}};
  std::vector<ReducedWord> out;
  for (int i : w.left_descents()) {
    const WeylElement rest = multiply(WeylElement::simple_reflection(w.system_ptr(), i), w);
    for (ReducedWord tail : all_reduced_words(rest, length_cap)) {
      tail.letters.insert(tail.letters.begin(), i);
      out.push_back(std::move(tail));
    }
  }
  return out;
}

struct WordIndependenceReport {
  std::size_t word_count = 0;
  bool beta_sets_match = false;       // one root set across all reduced words
  bool equals_inversion_set = false;  // and it is {beta > 0 : w^{-1} beta < 0}
  bool passed() const { return beta_sets_match && equals_inversion_set; }
};

inline WordIndependenceReport check_word_independence(
    const WeylElement& w, std::size_t length_cap = kDefaultWordLengthCap) {
  WordIndependenceReport report;
  const auto words = all_reduced_words(w, length_cap);
  report.word_count = words.size();

  auto root_set = [](const BetaSequence& bs) {
    std::set<std::vector<Coord>> s;
    for (const Root& r : bs.roots) s.insert(r.coords());
    return s;
  };
  std::set<std::vector<Coord>> reference;
  bool first = true;
  report.beta_sets_match = true;
  for (const ReducedWord& word : words) {
    auto s = root_set(beta_roots(w.system_ptr(), word));
    if (first) {
      reference = std::move(s);
      first = false;
    } else if (s != reference) {
      report.beta_sets_match = false;
    }
  }
  std::set<std::vector<Coord>> inv;
  for (const Root& r : w.inversion_set()) inv.insert(r.coords());
  report.equals_inversion_set = reference == inv;
  return report;
}

namespace detail {

inline std::uint64_t count_partitions(const std::vector<std::vector<Coord>>& roots, std::size_t j,
                                      std::vector<Coord>& remaining) {
  const bool zero = std::all_of(remaining.begin(), remaining.end(), [](Coord c) { return c == 0; });
  if (j == roots.size()) return zero ? 1 : 0;
  if (zero) return 1;  // only the all-zero tail extends
  std::uint64_t total = 0;
  const auto& beta = roots[j];
  Coord taken = 0;
  for (;;) {
    total += count_partitions(roots, j + 1, remaining);
    bool ok = true;
    for (std::size_t k = 0; k < remaining.size(); ++k) {
      remaining[k] -= beta[k];
      if (remaining[k] < 0) ok = false;
    }
    ++taken;
    if (!ok) break;
  }
  for (std::size_t k = 0; k < remaining.size(); ++k) remaining[k] += beta[k] * taken;
  return total;
}

}  // namespace detail

// Number of tuples (n_1..n_k) >= 0 with sum n_j beta_j = mu: the dimension of
// the weight-mu component of the monomial basis. Zero outside the cone.
inline std::uint64_t graded_dimension(const BetaSequence& bs, const Weight& mu) {
  const RootSystem& rs = mu.system();
  const auto coords = rs.root_coords(mu);
  std::vector<Coord> target(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (!is_integral(coords[i])) return 0;
    const Int c = to_int(coords[i]);
    if (c < 0) return 0;
    target[i] = static_cast<Coord>(c);
  }
  std::vector<std::vector<Coord>> roots;
  roots.reserve(bs.roots.size());
  for (const Root& r : bs.roots) roots.push_back(r.coords());
  return detail::count_partitions(roots, 0, target);
}

inline std::uint64_t graded_dimension(const WeylElement& w, const Weight& mu) {
  return graded_dimension(beta_roots(w.system_ptr(), w.reduced_word()), mu);
}

}  // namespace strata
