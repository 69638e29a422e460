#pragma once

#include "strata/weyl.hpp"

#include <boost/dynamic_bitset.hpp>

#include <memory>
#include <unordered_map>
#include <vector>

namespace strata {

// Memoized descent recursion: with s a left descent of w,
//   v <= w  iff  (sv < v and sv <= sw) or (sv > v and v <= sw),
// grounded at w = e. One cache per task; not meant to be shared.
class BruhatCache {
 public:
  bool leq(const WeylElement& v, const WeylElement& w) {
    detail::require_same_system(v.system(), w.system());
    if (v.length() > w.length()) return false;
    if (v.is_identity()) return true;
    // here w != e since length(w) >= length(v) > 0
    std::vector<std::int32_t> key(v.root_table());
    key.insert(key.end(), w.root_table().begin(), w.root_table().end());
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const int s = *w.smallest_left_descent();
    const WeylElement refl = WeylElement::simple_reflection(v.system_ptr(), s);
    const WeylElement sw = multiply(refl, w);
    const WeylElement sv = multiply(refl, v);
    const bool r = sv.length() < v.length() ? leq(sv, sw) : leq(v, sw);
    memo_.emplace(std::move(key), r);
    return r;
  }

 private:
  std::unordered_map<std::vector<std::int32_t>, bool, detail::TableHash> memo_;
};

inline bool bruhat_leq(const WeylElement& v, const WeylElement& w) {
  BruhatCache cache;
  return cache.leq(v, w);
}

// Full order relation over an enumerated group, one bitset row per top
// element, filled bottom-up by the same descent recursion.
class BruhatMatrix {
 public:
  using Bits = boost::dynamic_bitset<>;

  static BruhatMatrix build(std::shared_ptr<const WeylGroupTable> group) {
    BruhatMatrix m;
    m.group_ = std::move(group);
    const std::size_t n = m.group_->size();
    m.rows_.assign(n, Bits(n));
    m.rows_[0].set(0);  // [e, e]
    for (std::uint32_t w = 1; w < n; ++w) {
      const int s = *m.group_->element(w).smallest_left_descent();
      const std::uint32_t sw = m.group_->left_mult_gen(s, w);
      Bits& row = m.rows_[w];
      const Bits& base = m.rows_[sw];
      for (std::uint32_t v = 0; v < n; ++v) {
        const std::uint32_t sv = m.group_->left_mult_gen(s, v);
        row[v] = m.group_->length(sv) < m.group_->length(v) ? base[sv] : base[v];
      }
    }
    return m;
  }

  const WeylGroupTable& group() const { return *group_; }
  bool leq(std::uint32_t v, std::uint32_t w) const { return rows_[w][v]; }
  const Bits& below(std::uint32_t w) const { return rows_[w]; }
  std::size_t interval_size(std::uint32_t w) const { return rows_[w].count(); }

 private:
  std::shared_ptr<const WeylGroupTable> group_;
  std::vector<Bits> rows_;
};

struct BruhatInterval {
  std::uint32_t top;
  std::vector<std::uint32_t> members;  // ascending enumeration order
  std::size_t size() const { return members.size(); }
};

inline BruhatInterval lower_interval(const BruhatMatrix& m, std::uint32_t w) {
  BruhatInterval iv{w, {}};
  const auto& bits = m.below(w);
  for (std::size_t v = bits.find_first(); v != BruhatMatrix::Bits::npos; v = bits.find_next(v))
    iv.members.push_back(static_cast<std::uint32_t>(v));
  return iv;
}

// Elements covered by w: v < w with length(v) = length(w) - 1.
inline std::vector<std::uint32_t> covers(const BruhatMatrix& m, std::uint32_t w) {
  std::vector<std::uint32_t> out;
  const int lw = m.group().length(w);
  const auto& bits = m.below(w);
  for (std::size_t v = bits.find_first(); v != BruhatMatrix::Bits::npos; v = bits.find_next(v))
    if (m.group().length(static_cast<std::uint32_t>(v)) == lw - 1)
      out.push_back(static_cast<std::uint32_t>(v));
  return out;
}

}  // namespace strata
