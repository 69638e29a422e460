#pragma once

#include "strata/bruhat.hpp"
#include "strata/parabolic.hpp"

#include <array>
#include <memory>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace strata {

// One stratum / one invariant prime: w a minimal coset representative,
// v <= w in Bruhat order. Values are group-table indices.
struct StratumIndex {
  std::uint32_t w = 0;
  std::uint32_t v = 0;
  bool operator==(const StratumIndex&) const = default;
};

struct PosetAxiomReport {
  bool reflexive = true;
  bool antisymmetric = true;
  bool transitive = true;
  std::vector<std::uint32_t> reflexivity_violations;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> antisymmetry_violations;
  std::vector<std::array<std::uint32_t, 3>> transitivity_violations;

  bool all_pass() const { return reflexive && antisymmetric && transitive; }
};

class PosetOrderError : public std::runtime_error {
 public:
  PosetOrderError(const std::string& msg, PosetAxiomReport r)
      : std::runtime_error(msg), report(std::move(r)) {}
  PosetAxiomReport report;
};

inline constexpr std::size_t kDefaultStrataCap = 2000000;
inline constexpr std::size_t kDefaultRelationCap = 20000;

// (w', v') lies in the closure of (w, v) -- equivalently the ideal of (w, v)
// is contained in the ideal of (w', v') -- iff some z in the parabolic
// subgroup satisfies w >= w'z and v <= v'z. The scan imposes no restriction
// on z.
inline bool closure_leq(const WeylElement& lower_w, const WeylElement& lower_v,
                        const WeylElement& upper_w, const WeylElement& upper_v,
                        const std::vector<WeylElement>& subgroup, BruhatCache& cache) {
  for (const WeylElement& z : subgroup) {
    if (cache.leq(multiply(lower_w, z), upper_w) && cache.leq(upper_v, multiply(lower_v, z)))
      return true;
  }
  return false;
}

// The full index set over one parabolic subset, its fibers over the minimal
// coset representatives, and the conjectured containment order. The order
// relation is verified, never assumed: hasse_edges() refuses to run when the
// axiom scan finds a counterexample.
class StrataPoset {
 public:
  static StrataPoset build(std::shared_ptr<const WeylGroupTable> group, ParabolicSubset I,
                           std::shared_ptr<const BruhatMatrix> bruhat = nullptr,
                           std::size_t strata_cap = kDefaultStrataCap) {
    StrataPoset p;
    p.group_ = std::move(group);
    p.I_ = std::move(I);
    if (p.I_.rank != p.group_->system().rank())
      throw std::invalid_argument("parabolic subset rank != system rank");
    p.bruhat_ = bruhat ? std::move(bruhat)
                       : std::make_shared<const BruhatMatrix>(BruhatMatrix::build(p.group_));
    p.reps_ = minimal_coset_reps_indices(*p.group_, p.I_);
    p.subgroup_ = parabolic_subgroup_indices(*p.group_, p.I_);

    std::size_t total = 0;
    for (std::uint32_t w : p.reps_) total += p.bruhat_->interval_size(w);
    if (total > strata_cap)
      throw CapExceededError("stratum count " + std::to_string(total) + " exceeds cap " +
                                 std::to_string(strata_cap),
                             strata_cap);

    p.fiber_offset_.reserve(p.reps_.size() + 1);
    p.fiber_offset_.push_back(0);
    p.elements_.reserve(total);
    for (std::uint32_t w : p.reps_) {
      const auto& bits = p.bruhat_->below(w);
      for (std::size_t v = bits.find_first(); v != BruhatMatrix::Bits::npos;
           v = bits.find_next(v))
        p.elements_.push_back(StratumIndex{w, static_cast<std::uint32_t>(v)});
      p.fiber_offset_.push_back(p.elements_.size());
    }
    return p;
  }

  const WeylGroupTable& group() const { return *group_; }
  const std::shared_ptr<const WeylGroupTable>& group_ptr() const { return group_; }
  const BruhatMatrix& bruhat() const { return *bruhat_; }
  const ParabolicSubset& parabolic() const { return I_; }
  const std::vector<std::uint32_t>& coset_reps() const { return reps_; }
  const std::vector<std::uint32_t>& subgroup_indices() const { return subgroup_; }
  const std::vector<StratumIndex>& strata() const { return elements_; }
  std::size_t size() const { return elements_.size(); }

  std::size_t fiber_count() const { return reps_.size(); }
  std::pair<std::size_t, std::size_t> fiber_range(std::size_t k) const {
    return {fiber_offset_[k], fiber_offset_[k + 1]};
  }

  std::optional<std::size_t> find(std::uint32_t w, std::uint32_t v) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), StratumIndex{w, v},
                               [](const StratumIndex& a, const StratumIndex& b) {
                                 return a.w != b.w ? a.w < b.w : a.v < b.v;
                               });
    if (it == elements_.end() || !(*it == StratumIndex{w, v})) return std::nullopt;
    return static_cast<std::size_t>(it - elements_.begin());
  }

  bool relation_computed() const { return !rows_.empty(); }

  void compute_relation(std::size_t relation_cap = kDefaultRelationCap) {
    if (relation_computed()) return;
    const std::size_t n = size();
    if (n > relation_cap)
      throw CapExceededError("relation matrix over " + std::to_string(n) + " strata exceeds cap " +
                                 std::to_string(relation_cap),
                             relation_cap);
    // Right products u * z for every z in W_I, by canonical word.
    std::vector<std::vector<std::uint32_t>> times_z(subgroup_.size());
    for (std::size_t zi = 0; zi < subgroup_.size(); ++zi) {
      const ReducedWord& zw = group_->word(subgroup_[zi]);
      auto& col = times_z[zi];
      col.resize(group_->size());
      for (std::uint32_t u = 0; u < group_->size(); ++u) {
        std::uint32_t r = u;
        for (int letter : zw.letters) r = group_->right_mult_gen(r, letter);
        col[u] = r;
      }
    }
    rows_.assign(n, BruhatMatrix::Bits(n));
    for (std::size_t a = 0; a < n; ++a) {
      const StratumIndex& from = elements_[a];
      for (std::size_t b = 0; b < n; ++b) {
        const StratumIndex& to = elements_[b];
        for (std::size_t zi = 0; zi < subgroup_.size(); ++zi) {
          if (bruhat_->leq(times_z[zi][from.w], to.w) &&
              bruhat_->leq(to.v, times_z[zi][from.v])) {
            rows_[a].set(b);
            break;
          }
        }
      }
    }
  }

  // a <= b in the conjectured order. Requires compute_relation().
  bool leq(std::size_t a, std::size_t b) const { return rows_[a][b]; }
  const BruhatMatrix::Bits& above(std::size_t a) const { return rows_[a]; }

  PosetAxiomReport verify_axioms(std::size_t relation_cap = kDefaultRelationCap) {
    compute_relation(relation_cap);
    PosetAxiomReport report;
    const std::size_t n = size();
    for (std::size_t a = 0; a < n; ++a)
      if (!rows_[a][a]) {
        report.reflexive = false;
        report.reflexivity_violations.push_back(static_cast<std::uint32_t>(a));
      }
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        if (rows_[a][b] && rows_[b][a]) {
          report.antisymmetric = false;
          report.antisymmetry_violations.emplace_back(static_cast<std::uint32_t>(a),
                                                      static_cast<std::uint32_t>(b));
        }
    for (std::size_t a = 0; a < n; ++a) {
      const auto& row = rows_[a];
      for (std::size_t b = row.find_first(); b != BruhatMatrix::Bits::npos; b = row.find_next(b)) {
        if (b == a) continue;
        if (rows_[b].is_subset_of(row)) continue;
        report.transitive = false;
        const auto missing = rows_[b] - row;
        for (std::size_t c = missing.find_first(); c != BruhatMatrix::Bits::npos;
             c = missing.find_next(c))
          report.transitivity_violations.push_back({static_cast<std::uint32_t>(a),
                                                    static_cast<std::uint32_t>(b),
                                                    static_cast<std::uint32_t>(c)});
      }
    }
    return report;
  }

  // Transitive reduction; refuses when the relation is not a partial order.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> hasse_edges(
      std::size_t relation_cap = kDefaultRelationCap) {
    PosetAxiomReport report = verify_axioms(relation_cap);
    if (!report.all_pass()) {
      std::string msg = "conjectured relation is not a partial order (";
      msg += std::to_string(report.reflexivity_violations.size()) + " reflexivity, ";
      msg += std::to_string(report.antisymmetry_violations.size()) + " antisymmetry, ";
      msg += std::to_string(report.transitivity_violations.size()) +
             " transitivity violations; run 'verify poset' for the list)";
      throw PosetOrderError(msg, std::move(report));
    }
    const std::size_t n = size();
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    for (std::size_t a = 0; a < n; ++a) {
      BruhatMatrix::Bits candidates = rows_[a];
      candidates.reset(a);
      const BruhatMatrix::Bits strict = candidates;
      for (std::size_t c = strict.find_first(); c != BruhatMatrix::Bits::npos;
           c = strict.find_next(c)) {
        BruhatMatrix::Bits reach = rows_[c];
        reach.reset(c);
        candidates -= reach;
      }
      for (std::size_t b = candidates.find_first(); b != BruhatMatrix::Bits::npos;
           b = candidates.find_next(b))
        edges.emplace_back(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b));
    }
    return edges;
  }

  std::vector<std::size_t> maximal_elements() {
    compute_relation();
    std::vector<std::size_t> out;
    for (std::size_t a = 0; a < size(); ++a) {
      BruhatMatrix::Bits up = rows_[a];
      up.reset(a);
      if (up.none()) out.push_back(a);
    }
    return out;
  }

 private:
  StrataPoset() = default;

  std::shared_ptr<const WeylGroupTable> group_;
  ParabolicSubset I_;
  std::shared_ptr<const BruhatMatrix> bruhat_;
  std::vector<std::uint32_t> reps_;
  std::vector<std::uint32_t> subgroup_;
  std::vector<StratumIndex> elements_;
  std::vector<std::size_t> fiber_offset_;
  std::vector<BruhatMatrix::Bits> rows_;
};

// Stratum count without materializing the element list.
inline std::size_t stratum_count(const BruhatMatrix& bruhat, const ParabolicSubset& I) {
  std::size_t total = 0;
  for (std::uint32_t w : minimal_coset_reps_indices(bruhat.group(), I))
    total += bruhat.interval_size(w);
  return total;
}

}  // namespace strata
