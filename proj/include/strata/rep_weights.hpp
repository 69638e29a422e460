#pragma once

#include "strata/parabolic.hpp"
#include "strata/root_system.hpp"
#include "strata/weyl.hpp"

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace strata {

// Weight set of the irreducible module with highest weight lambda, without
// multiplicities: the W-orbits of all dominant mu with lambda - mu in the
// nonnegative root lattice.
struct WeightSystem {
  Weight highest;
  std::vector<Weight> weights;  // sorted by coordinates

  std::size_t size() const { return weights.size(); }
  bool contains(const Weight& w) const {
    return std::binary_search(weights.begin(), weights.end(), w);
  }
};

inline WeightSystem weight_system(const Weight& lambda) {
  if (!lambda.is_dominant())
    throw std::invalid_argument("weight_system requires a dominant highest weight");
  const RootSystem& rs = lambda.system();
  const int r = rs.rank();

  // Dominant members first. Writing lambda - mu = sum n_i alpha_i, the
  // entrywise-positive inverse Cartan matrix bounds n by C^{-1} lambda.
  std::vector<Coord> bound(r);
  {
    const auto b = rs.root_coords(lambda);
    for (int i = 0; i < r; ++i) bound[i] = static_cast<Coord>(floor_rational(b[i]));
  }
  std::vector<std::vector<Coord>> dominant;
  std::vector<Coord> n(r, 0);
  for (;;) {
    std::vector<Coord> mu(lambda.coords());
    for (int i = 0; i < r; ++i)
      for (int k = 0; k < r; ++k) mu[i] -= static_cast<Coord>(rs.datum().cartan[i][k]) * n[k];
    if (std::all_of(mu.begin(), mu.end(), [](Coord c) { return c >= 0; }))
      dominant.push_back(std::move(mu));
    int pos = r - 1;
    while (pos >= 0 && n[pos] == bound[pos]) n[pos--] = 0;
    if (pos < 0) break;
    ++n[pos];
  }

  // Close each dominant member under the W-action.
  std::set<std::vector<Coord>> all;
  for (const auto& mu : dominant) {
    std::vector<std::vector<Coord>> queue{mu};
    all.insert(mu);
    while (!queue.empty()) {
      const Weight cur = rs.weight(queue.back());
      queue.pop_back();
      for (int i = 1; i <= r; ++i) {
        auto img = cur.reflect(i).coords();
        if (all.insert(img).second) queue.push_back(std::move(img));
      }
    }
  }

  WeightSystem ws{lambda, {}};
  ws.weights.reserve(all.size());
  for (const auto& coords : all) ws.weights.push_back(rs.weight(coords));
  return ws;
}

// Per-(system, lambda) cache; all entries must belong to one root system.
class WeightSystemCache {
 public:
  const WeightSystem& get(const Weight& lambda) {
    auto it = cache_.find(lambda.coords());
    if (it != cache_.end()) return it->second;
    return cache_.emplace(lambda.coords(), weight_system(lambda)).first->second;
  }

 private:
  std::map<std::vector<Coord>, WeightSystem> cache_;
};

struct Lemma1EqualityPair {
  Weight mu1, mu2;
  std::optional<ReducedWord> witness;  // minimal coset rep sending the highest weights here
};

// Result of the exhaustive pairing-bound scan over the weights of
// V(lambda1) x V(lambda2):
//   (a) <mu1, mu2> <= <lambda1, lambda2> on every pair;
//   (b) if lambda2 is strictly dominant outside I, equality forces
//       mu1 = w lambda1 for some w in W^I;
//   (c) if lambda1 is as well, the same w gives mu2 = w lambda2.
struct Lemma1Report {
  Weight lambda1, lambda2;
  ParabolicSubset I;
  std::size_t pairs_checked = 0;
  bool inequality_ok = true;
  bool witnesses_ok = true;
  bool clause_b_applies = false;
  bool clause_c_applies = false;
  std::vector<std::pair<Weight, Weight>> inequality_violations;
  std::vector<Lemma1EqualityPair> equality_pairs;

  bool passed() const { return inequality_ok && witnesses_ok; }
};

inline Lemma1Report verify_lemma1(const Weight& lambda1, const Weight& lambda2,
                                  const ParabolicSubset& I, const WeylGroupTable& table,
                                  WeightSystemCache& cache) {
  if (!lambda1.dominant_supported_outside(I) || !lambda2.dominant_supported_outside(I))
    throw std::invalid_argument("verify_lemma1 requires weights dominant and supported outside I");
  const RootSystem& rs = lambda1.system();
  detail::require_same_system(rs, table.system());

  Lemma1Report report{lambda1, lambda2, I, 0, true, true, false, false, {}, {}};
  report.clause_b_applies = lambda2.strictly_dominant_outside(I);
  report.clause_c_applies = report.clause_b_applies && lambda1.strictly_dominant_outside(I);

  const WeightSystem& ws1 = cache.get(lambda1);
  const WeightSystem& ws2 = cache.get(lambda2);
  const Rational target = rs.pairing(lambda1, lambda2);

  const auto reps = minimal_coset_reps_indices(table, I);
  std::vector<Weight> rep_l1, rep_l2;
  rep_l1.reserve(reps.size());
  rep_l2.reserve(reps.size());
  for (std::uint32_t w : reps) {
    rep_l1.push_back(table.element(w).act(lambda1));
    rep_l2.push_back(table.element(w).act(lambda2));
  }

  for (const Weight& mu1 : ws1.weights) {
    for (const Weight& mu2 : ws2.weights) {
      ++report.pairs_checked;
      const Rational p = rs.pairing(mu1, mu2);
      if (p > target) {
        report.inequality_ok = false;
        report.inequality_violations.emplace_back(mu1, mu2);
        continue;
      }
      if (p != target) continue;
      Lemma1EqualityPair eq{mu1, mu2, std::nullopt};
      if (report.clause_b_applies) {
        for (std::size_t k = 0; k < reps.size(); ++k) {
          if (!(rep_l1[k] == mu1)) continue;
          if (report.clause_c_applies && !(rep_l2[k] == mu2)) continue;
          eq.witness = table.word(reps[k]);
          break;
        }
        if (!eq.witness) report.witnesses_ok = false;
      }
      report.equality_pairs.push_back(std::move(eq));
    }
  }
  return report;
}

// Exponent <lambda1, lambda2> - <mu1, mu2> in the internal normalization;
// an integer whenever mu_j is a weight of V(lambda_j).
inline Int commutation_exponent(const Weight& lambda1, const Weight& mu1, const Weight& lambda2,
                                const Weight& mu2, WeightSystemCache& cache) {
  if (!cache.get(lambda1).contains(mu1) || !cache.get(lambda2).contains(mu2))
    throw std::invalid_argument("commutation_exponent: mu is not a weight of V(lambda)");
  const RootSystem& rs = lambda1.system();
  const Rational e = rs.pairing(lambda1, lambda2) - rs.pairing(mu1, mu2);
  if (!is_integral(e)) throw std::logic_error("commutation exponent is not an integer");
  return to_int(e);
}

}  // namespace strata
