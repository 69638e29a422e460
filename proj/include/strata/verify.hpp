#pragma once

#include "strata/pbw.hpp"
#include "strata/rep_weights.hpp"
#include "strata/strata_poset.hpp"

#include <sstream>
#include <string>
#include <vector>

namespace strata {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

namespace detail {
inline std::string stratum_label(const WeylGroupTable& table, const StratumIndex& s) {
  return "(" + table.word(s.w).to_string() + "|" + table.word(s.v).to_string() + ")";
}
}  // namespace detail

// Reflexivity, antisymmetry and transitivity of the conjectured order,
// exhaustively. Counterexamples are spelled out; nothing is assumed.
inline CheckResult check_poset_axioms(StrataPoset& poset) {
  CheckResult r;
  r.name = "poset-axioms I={" + poset.parabolic().to_string() + "}";
  const PosetAxiomReport report = poset.verify_axioms();
  r.passed = report.all_pass();
  std::ostringstream detail;
  detail << poset.size() << " strata";
  if (!report.reflexive) detail << "; reflexivity fails at " << report.reflexivity_violations.size() << " strata";
  for (const auto& [a, b] : report.antisymmetry_violations)
    detail << "; antisymmetry: " << detail::stratum_label(poset.group(), poset.strata()[a])
           << " <> " << detail::stratum_label(poset.group(), poset.strata()[b]);
  for (const auto& t : report.transitivity_violations)
    detail << "; transitivity: " << detail::stratum_label(poset.group(), poset.strata()[t[0]])
           << " <= " << detail::stratum_label(poset.group(), poset.strata()[t[1]]) << " <= "
           << detail::stratum_label(poset.group(), poset.strata()[t[2]]) << " not chained";
  r.detail = detail.str();
  return r;
}

// Within each fiber the order must mirror Bruhat order on the second
// coordinate: (w,v') below (w,v) exactly when v <= v'.
inline CheckResult check_same_w_fibers(StrataPoset& poset) {
  CheckResult r;
  r.name = "same-w fibers I={" + poset.parabolic().to_string() + "}";
  poset.compute_relation();
  const auto& strata = poset.strata();
  std::size_t pairs = 0;
  r.passed = true;
  std::ostringstream bad;
  for (std::size_t k = 0; k < poset.fiber_count(); ++k) {
    const auto [lo, hi] = poset.fiber_range(k);
    for (std::size_t a = lo; a < hi; ++a) {
      for (std::size_t b = lo; b < hi; ++b) {
        ++pairs;
        const bool lhs = poset.leq(a, b);
        const bool rhs = poset.bruhat().leq(strata[b].v, strata[a].v);
        if (lhs != rhs) {
          r.passed = false;
          bad << "; mismatch at " << detail::stratum_label(poset.group(), strata[a]) << " vs "
              << detail::stratum_label(poset.group(), strata[b]);
        }
      }
    }
  }
  r.detail = std::to_string(poset.fiber_count()) + " fibers, " + std::to_string(pairs) + " pairs" +
             bad.str();
  return r;
}

// Pairing-bound suite over every pair of dominant weights supported outside I
// with fundamental coordinates at most max_coord.
inline CheckResult check_pairing_bound_suite(const WeylGroupTable& table, const ParabolicSubset& I,
                                             Coord max_coord, WeightSystemCache& cache) {
  CheckResult r;
  r.name = "lemma1 I={" + I.to_string() + "} coords<=" + std::to_string(max_coord);
  const RootSystem& rs = table.system();
  const auto free_nodes = I.complement();
  std::vector<Weight> lambdas;
  std::vector<Coord> pick(free_nodes.size(), 0);
  for (;;) {
    std::vector<Coord> coords(rs.rank(), 0);
    for (std::size_t k = 0; k < free_nodes.size(); ++k)
      coords[static_cast<std::size_t>(free_nodes[k]) - 1] = pick[k];
    lambdas.push_back(rs.weight(std::move(coords)));
    std::size_t pos = pick.size();
    while (pos > 0 && pick[pos - 1] == max_coord) pick[--pos] = 0;
    if (pos == 0) break;
    ++pick[pos - 1];
  }
  r.passed = true;
  std::size_t weight_pairs = 0;
  std::ostringstream bad;
  for (const Weight& l1 : lambdas) {
    for (const Weight& l2 : lambdas) {
      const Lemma1Report report = verify_lemma1(l1, l2, I, table, cache);
      weight_pairs += report.pairs_checked;
      if (!report.passed()) {
        r.passed = false;
        bad << "; fails for lambda1=" << "(" << l1.coords()[0];
        for (std::size_t k = 1; k < l1.coords().size(); ++k) bad << "," << l1.coords()[k];
        bad << ") lambda2=(" << l2.coords()[0];
        for (std::size_t k = 1; k < l2.coords().size(); ++k) bad << "," << l2.coords()[k];
        bad << ")";
      }
    }
  }
  r.detail = std::to_string(lambdas.size() * lambdas.size()) + " weight pairs, " +
             std::to_string(weight_pairs) + " pairing checks" + bad.str();
  return r;
}

// One beta-root set per element across all of its reduced words, equal to the
// positive roots sent negative by the inverse. Elements longer than the word
// cap are skipped and reported as such.
inline CheckResult check_word_independence_all(const WeylGroupTable& table,
                                               std::size_t length_cap = kDefaultWordLengthCap) {
  CheckResult r;
  r.name = "pbw-invariance";
  r.passed = true;
  std::size_t checked = 0, skipped = 0, words = 0;
  std::ostringstream bad;
  for (std::uint32_t w = 0; w < table.size(); ++w) {
    if (static_cast<std::size_t>(table.length(w)) > length_cap) {
      ++skipped;
      continue;
    }
    const WordIndependenceReport report = check_word_independence(table.element(w), length_cap);
    ++checked;
    words += report.word_count;
    if (!report.passed()) {
      r.passed = false;
      bad << "; fails at w=" << table.word(w).to_string();
    }
  }
  std::ostringstream detail;
  detail << checked << " elements, " << words << " reduced words";
  if (skipped) detail << ", " << skipped << " skipped (length cap " << length_cap << ")";
  r.detail = detail.str() + bad.str();
  return r;
}

}  // namespace strata
