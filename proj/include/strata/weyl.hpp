#pragma once

#include "strata/root_system.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace strata {

struct ReducedWord {
  std::vector<int> letters;  // 1-based generator indices

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  bool operator==(const ReducedWord&) const = default;
  bool operator<(const ReducedWord& o) const { return letters < o.letters; }

  std::string to_string() const {
    if (letters.empty()) return "e";
    std::string s;
    for (std::size_t k = 0; k < letters.size(); ++k) {
      if (k) s += ',';
      s += std::to_string(letters[k]);
    }
    return s;
  }
};

struct CapExceededError : std::runtime_error {
  std::size_t cap;
  CapExceededError(const std::string& msg, std::size_t cap_) : std::runtime_error(msg), cap(cap_) {}
};

// Group element stored as its signed action on the positive-root index set:
// table[p] = +-(q+1) when w(beta_p) = +-beta_q. Equal tables <=> equal
// elements, and length(w) is the number of sign flips.
class WeylElement {
 public:
  static WeylElement identity(std::shared_ptr<const RootSystem> sys) {
    const std::size_t n = sys->num_positive_roots();
    std::vector<std::int32_t> t(n);
    for (std::size_t p = 0; p < n; ++p) t[p] = static_cast<std::int32_t>(p + 1);
    return WeylElement(std::move(sys), std::move(t));
  }

  static WeylElement simple_reflection(std::shared_ptr<const RootSystem> sys, int i) {
    if (i < 1 || i > sys->rank())
      throw std::invalid_argument("generator index " + std::to_string(i) + " out of range 1.." +
                                  std::to_string(sys->rank()));
    const auto& roots = sys->positive_root_coords();
    const std::size_t n = roots.size();
    const int i0 = i - 1;
    std::vector<std::int32_t> t(n);
    for (std::size_t p = 0; p < n; ++p) {
      std::vector<Coord> img(roots[p]);
      Coord pair = 0;
      for (int j = 0; j < sys->rank(); ++j)
        pair += static_cast<Coord>(sys->datum().cartan[i0][j]) * img[j];
      img[i0] -= pair;
      bool negative = false;
      for (Coord c : img)
        if (c < 0) negative = true;
      if (negative) {
        for (auto& c : img) c = -c;
        t[p] = -static_cast<std::int32_t>(sys->find_positive(img).value() + 1);
      } else {
        t[p] = static_cast<std::int32_t>(sys->find_positive(img).value() + 1);
      }
    }
    return WeylElement(std::move(sys), std::move(t));
  }

  const RootSystem& system() const { return *sys_; }
  const std::shared_ptr<const RootSystem>& system_ptr() const { return sys_; }
  const std::vector<std::int32_t>& root_table() const { return table_; }
  int length() const { return length_; }
  bool is_identity() const { return length_ == 0; }

  bool operator==(const WeylElement& o) const { return table_ == o.table_; }
  bool operator<(const WeylElement& o) const { return table_ < o.table_; }

  std::size_t hash() const {
    std::size_t h = 1469598103934665603ull;
    for (std::int32_t v : table_) {
      h ^= static_cast<std::size_t>(static_cast<std::uint32_t>(v));
      h *= 1099511628211ull;
    }
    return h;
  }

  friend WeylElement multiply(const WeylElement& a, const WeylElement& b) {
    detail::require_same_system(a.system(), b.system());
    const std::size_t n = a.table_.size();
    std::vector<std::int32_t> t(n);
    for (std::size_t p = 0; p < n; ++p) {
      const std::int32_t q = b.table_[p];
      t[p] = q > 0 ? a.table_[q - 1] : static_cast<std::int32_t>(-a.table_[-q - 1]);
    }
    return WeylElement(a.sys_, std::move(t));
  }

  WeylElement inverse() const {
    const std::size_t n = table_.size();
    std::vector<std::int32_t> t(n);
    for (std::size_t p = 0; p < n; ++p) {
      const std::int32_t q = table_[p];
      if (q > 0)
        t[q - 1] = static_cast<std::int32_t>(p + 1);
      else
        t[-q - 1] = -static_cast<std::int32_t>(p + 1);
    }
    return WeylElement(sys_, std::move(t));
  }

  // Image of alpha_i in simple-root coordinates.
  std::vector<Coord> image_of_simple(int i) const {
    const std::int32_t q = table_[sys_->simple_root_position(i)];
    std::vector<Coord> c = sys_->positive_root_coords()[q > 0 ? q - 1 : -q - 1];
    if (q < 0)
      for (auto& x : c) x = -x;
    return c;
  }

  Root act(const Root& r) const {
    detail::require_same_system(system(), r.system());
    std::vector<Coord> out(sys_->rank(), 0);
    for (int j = 1; j <= sys_->rank(); ++j) {
      const Coord m = r.coords()[j - 1];
      if (m == 0) continue;
      const auto img = image_of_simple(j);
      for (int k = 0; k < sys_->rank(); ++k) out[k] += m * img[k];
    }
    return Root(sys_, std::move(out));
  }

  Weight act(const Weight& w) const {
    detail::require_same_system(system(), w.system());
    // <w lambda, alpha_i^vee> = <lambda, w^{-1} alpha_i^vee>; the columns of
    // w^{-1} on the root lattice come out of one scan of the table.
    const int r = sys_->rank();
    std::vector<std::vector<Coord>> col(r);
    for (std::size_t p = 0; p < table_.size(); ++p) {
      const std::int32_t q = table_[p];
      const int node = sys_->simple_node_at(static_cast<std::size_t>(q > 0 ? q - 1 : -q - 1));
      if (node == 0) continue;
      std::vector<Coord> c = sys_->positive_root_coords()[p];
      if (q < 0)
        for (auto& x : c) x = -x;
      col[node - 1] = std::move(c);
    }
    std::vector<Coord> out(r, 0);
    for (int i = 0; i < r; ++i) {
      Coord acc = 0;
      for (int k = 0; k < r; ++k)
        acc += static_cast<Coord>(sys_->datum().d[k]) * w.coords()[k] * col[i][k];
      if (acc % sys_->datum().d[i] != 0)
        throw std::logic_error("weight action produced a non-integral coordinate");
      out[i] = acc / sys_->datum().d[i];
    }
    return Weight(sys_, std::move(out));
  }

  // Left descent: s_i w < w, i.e. w^{-1}(alpha_i) < 0.
  std::vector<int> left_descents() const {
    std::vector<int> out;
    for (std::size_t p = 0; p < table_.size(); ++p) {
      const std::int32_t q = table_[p];
      if (q >= 0) continue;
      const int node = sys_->simple_node_at(static_cast<std::size_t>(-q - 1));
      if (node != 0) out.push_back(node);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::optional<int> smallest_left_descent() const {
    int best = 0;
    for (std::size_t p = 0; p < table_.size(); ++p) {
      const std::int32_t q = table_[p];
      if (q >= 0) continue;
      const int node = sys_->simple_node_at(static_cast<std::size_t>(-q - 1));
      if (node != 0 && (best == 0 || node < best)) best = node;
    }
    if (best == 0) return std::nullopt;
    return best;
  }

  // Right descent: w s_i < w, i.e. w(alpha_i) < 0.
  bool has_right_descent(int i) const { return table_[sys_->simple_root_position(i)] < 0; }

  // Lexicographically smallest reduced word, by repeated extraction of the
  // smallest left descent.
  ReducedWord reduced_word() const {
    ReducedWord rw;
    WeylElement cur = *this;
    while (!cur.is_identity()) {
      const int i = *cur.smallest_left_descent();
      rw.letters.push_back(i);
      cur = multiply(simple_reflection(cur.sys_, i), cur);
    }
    return rw;
  }

  // {beta > 0 : w^{-1} beta < 0}, in positive-root order.
  std::vector<Root> inversion_set() const {
    const WeylElement inv = inverse();
    std::vector<Root> out;
    for (std::size_t p = 0; p < table_.size(); ++p)
      if (inv.table_[p] < 0) out.push_back(sys_->positive_root(p));
    return out;
  }

 private:
  WeylElement(std::shared_ptr<const RootSystem> sys, std::vector<std::int32_t> table)
      : sys_(std::move(sys)), table_(std::move(table)) {
    length_ = 0;
    for (std::int32_t q : table_)
      if (q < 0) ++length_;
  }

  std::shared_ptr<const RootSystem> sys_;
  std::vector<std::int32_t> table_;
  int length_ = 0;
};

inline WeylElement inverse(const WeylElement& a) { return a.inverse(); }

// Product of simple reflections in word order; the word need not be reduced.
inline WeylElement from_word(std::shared_ptr<const RootSystem> sys, const std::vector<int>& letters) {
  WeylElement cur = WeylElement::identity(sys);
  for (int i : letters) cur = multiply(cur, WeylElement::simple_reflection(sys, i));
  return cur;
}

inline WeylElement from_word(std::shared_ptr<const RootSystem> sys, const ReducedWord& w) {
  return from_word(std::move(sys), w.letters);
}

inline bool is_reduced(std::shared_ptr<const RootSystem> sys, const std::vector<int>& letters) {
  return from_word(std::move(sys), letters).length() == static_cast<int>(letters.size());
}

inline constexpr std::size_t kDefaultGroupCap = 1000000;

namespace detail {
struct TableHash {
  std::size_t operator()(const std::vector<std::int32_t>& t) const {
    std::size_t h = 1469598103934665603ull;
    for (std::int32_t v : t) {
      h ^= static_cast<std::size_t>(static_cast<std::uint32_t>(v));
      h *= 1099511628211ull;
    }
    return h;
  }
};
}  // namespace detail

// The whole group, enumerated breadth-first by length and, within a length
// level, by canonical reduced word. Index 0 is the identity and the last
// index is the longest element.
class WeylGroupTable {
 public:
  static std::shared_ptr<const WeylGroupTable> build(std::shared_ptr<const RootSystem> sys,
                                                     std::size_t cap = kDefaultGroupCap) {
    const Int order = weyl_group_order(sys->family(), sys->rank());
    if (order > cap)
      throw CapExceededError("group order " + order.str() + " exceeds cap " + std::to_string(cap),
                             cap);
    auto table = std::shared_ptr<WeylGroupTable>(new WeylGroupTable());
    table->sys_ = sys;
    std::vector<WeylElement> gens;
    for (int i = 1; i <= sys->rank(); ++i)
      gens.push_back(WeylElement::simple_reflection(sys, i));

    std::unordered_map<std::vector<std::int32_t>, std::uint32_t, detail::TableHash> index;
    std::vector<std::pair<ReducedWord, WeylElement>> level;
    level.emplace_back(ReducedWord{}, WeylElement::identity(sys));
    while (!level.empty()) {
      std::sort(level.begin(), level.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      for (auto& [word, el] : level) {
        index.emplace(el.root_table(), static_cast<std::uint32_t>(table->elements_.size()));
        table->words_.push_back(word);
        table->elements_.push_back(el);
      }
      std::vector<std::pair<ReducedWord, WeylElement>> next;
      std::unordered_map<std::vector<std::int32_t>, std::size_t, detail::TableHash> next_seen;
      for (auto& [word, el] : level) {
        for (const auto& g : gens) {
          WeylElement u = multiply(el, g);
          if (u.length() != el.length() + 1) continue;
          if (index.count(u.root_table()) || next_seen.count(u.root_table())) continue;
          next_seen.emplace(u.root_table(), next.size());
          next.emplace_back(u.reduced_word(), std::move(u));
        }
      }
      level = std::move(next);
    }

    const std::size_t n = table->elements_.size();
    table->index_ = std::move(index);
    table->left_gen_.assign(sys->rank(), std::vector<std::uint32_t>(n));
    table->right_gen_.assign(sys->rank(), std::vector<std::uint32_t>(n));
    table->inverse_.assign(n, 0);
    for (std::size_t w = 0; w < n; ++w) {
      for (int i = 1; i <= sys->rank(); ++i) {
        table->left_gen_[i - 1][w] = table->index_of(multiply(gens[i - 1], table->elements_[w]));
        table->right_gen_[i - 1][w] = table->index_of(multiply(table->elements_[w], gens[i - 1]));
      }
      table->inverse_[w] = table->index_of(table->elements_[w].inverse());
    }
    return table;
  }

  const RootSystem& system() const { return *sys_; }
  const std::shared_ptr<const RootSystem>& system_ptr() const { return sys_; }
  std::size_t size() const { return elements_.size(); }
  const std::vector<WeylElement>& elements() const { return elements_; }
  const WeylElement& element(std::uint32_t idx) const { return elements_[idx]; }
  const ReducedWord& word(std::uint32_t idx) const { return words_[idx]; }
  int length(std::uint32_t idx) const { return elements_[idx].length(); }
  std::uint32_t identity_index() const { return 0; }
  std::uint32_t longest_index() const { return static_cast<std::uint32_t>(size() - 1); }

  std::uint32_t index_of(const WeylElement& el) const {
    auto it = index_.find(el.root_table());
    if (it == index_.end()) throw std::logic_error("element not in group table");
    return it->second;
  }

  std::uint32_t left_mult_gen(int i, std::uint32_t w) const { return left_gen_[i - 1][w]; }
  std::uint32_t right_mult_gen(std::uint32_t w, int i) const { return right_gen_[i - 1][w]; }
  std::uint32_t inverse_index(std::uint32_t w) const { return inverse_[w]; }
  std::uint32_t multiply_indices(std::uint32_t a, std::uint32_t b) const {
    return index_of(multiply(elements_[a], elements_[b]));
  }

 private:
  WeylGroupTable() = default;

  std::shared_ptr<const RootSystem> sys_;
  std::vector<WeylElement> elements_;
  std::vector<ReducedWord> words_;
  std::unordered_map<std::vector<std::int32_t>, std::uint32_t, detail::TableHash> index_;
  std::vector<std::vector<std::uint32_t>> left_gen_, right_gen_;
  std::vector<std::uint32_t> inverse_;
};

}  // namespace strata
