#pragma once

#include "strata/cartan.hpp"
#include "strata/numeric.hpp"
#include "strata/parabolic_subset.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

namespace strata {

using Coord = long long;

class RootSystem;

namespace detail {
inline void require_same_system(const RootSystem& a, const RootSystem& b);
}

// Integral weight in fundamental-weight coordinates: coords[i] = <lambda, alpha_i^vee>.
class Weight {
 public:
  Weight(std::shared_ptr<const RootSystem> sys, std::vector<Coord> coords)
      : sys_(std::move(sys)), coords_(std::move(coords)) {}

  const std::vector<Coord>& coords() const { return coords_; }
  Coord coord(int i) const { return coords_[static_cast<std::size_t>(i) - 1]; }  // 1-based
  const RootSystem& system() const { return *sys_; }
  const std::shared_ptr<const RootSystem>& system_ptr() const { return sys_; }

  bool is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](Coord c) { return c == 0; });
  }
  bool is_dominant() const {
    return std::all_of(coords_.begin(), coords_.end(), [](Coord c) { return c >= 0; });
  }

  // lambda in Q_I: supported on the complement of I.
  bool supported_outside(const ParabolicSubset& I) const {
    for (int i : I.nodes)
      if (coord(i) != 0) return false;
    return true;
  }
  // lambda in Q_I^+.
  bool dominant_supported_outside(const ParabolicSubset& I) const {
    return is_dominant() && supported_outside(I);
  }
  // lambda in Q_I^{++}: strictly positive on every node outside I.
  bool strictly_dominant_outside(const ParabolicSubset& I) const {
    if (!supported_outside(I)) return false;
    for (int i : I.complement())
      if (coord(i) <= 0) return false;
    return true;
  }

  bool in_root_lattice() const;
  Weight reflect(int i) const;  // image under the simple reflection s_i

  Weight operator+(const Weight& o) const {
    detail::require_same_system(system(), o.system());
    std::vector<Coord> c(coords_);
    for (std::size_t k = 0; k < c.size(); ++k) c[k] += o.coords_[k];
    return Weight(sys_, std::move(c));
  }
  Weight operator-(const Weight& o) const {
    detail::require_same_system(system(), o.system());
    std::vector<Coord> c(coords_);
    for (std::size_t k = 0; k < c.size(); ++k) c[k] -= o.coords_[k];
    return Weight(sys_, std::move(c));
  }
  Weight operator*(Coord n) const {
    std::vector<Coord> c(coords_);
    for (auto& x : c) x *= n;
    return Weight(sys_, std::move(c));
  }

  bool operator==(const Weight& o) const { return coords_ == o.coords_; }
  bool operator<(const Weight& o) const { return coords_ < o.coords_; }

 private:
  std::shared_ptr<const RootSystem> sys_;
  std::vector<Coord> coords_;
};

// Element of the root lattice that is an actual root, in simple-root
// coordinates. Coordinates of a root are never mixed-sign.
class Root {
 public:
  Root(std::shared_ptr<const RootSystem> sys, std::vector<Coord> coords)
      : sys_(std::move(sys)), coords_(std::move(coords)) {}

  const std::vector<Coord>& coords() const { return coords_; }
  const RootSystem& system() const { return *sys_; }
  const std::shared_ptr<const RootSystem>& system_ptr() const { return sys_; }

  bool is_positive() const {
    bool nonzero = false;
    for (Coord c : coords_) {
      if (c < 0) return false;
      if (c > 0) nonzero = true;
    }
    return nonzero;
  }
  bool is_negative() const {
    bool nonzero = false;
    for (Coord c : coords_) {
      if (c > 0) return false;
      if (c < 0) nonzero = true;
    }
    return nonzero;
  }
  Coord height() const {
    Coord h = 0;
    for (Coord c : coords_) h += c;
    return h;
  }
  Root operator-() const {
    std::vector<Coord> c(coords_);
    for (auto& x : c) x = -x;
    return Root(sys_, std::move(c));
  }
  Weight as_weight() const;

  bool operator==(const Root& o) const { return coords_ == o.coords_; }
  bool operator<(const Root& o) const { return coords_ < o.coords_; }

 private:
  std::shared_ptr<const RootSystem> sys_;
  std::vector<Coord> coords_;
};

// Cartan datum plus the full positive-root list and the exact bilinear form.
// Immutable after construction; shared freely.
//
// Internal normalization: <alpha_i, alpha_i> = 2 d_i, so every pairing with a
// root-lattice argument is an integer. The conventional view with long roots
// of square length 2 is exposed through scaled_pairing (divide by max d_i).
class RootSystem : public std::enable_shared_from_this<RootSystem> {
 public:
  static std::shared_ptr<const RootSystem> create(Family f, int rank) {
    return std::shared_ptr<const RootSystem>(new RootSystem(CartanDatum::build(f, rank)));
  }

  const CartanDatum& datum() const { return datum_; }
  int rank() const { return datum_.rank; }
  Family family() const { return datum_.family; }
  int d(int i) const { return datum_.d[static_cast<std::size_t>(i) - 1]; }  // 1-based
  int d_max() const { return d_max_; }

  std::size_t num_positive_roots() const { return positive_.size(); }
  const std::vector<std::vector<Coord>>& positive_root_coords() const { return positive_; }
  Root positive_root(std::size_t idx) const {
    return Root(shared_from_this(), positive_[idx]);
  }
  Root simple_root(int i) const { return positive_root(simple_pos_[static_cast<std::size_t>(i) - 1]); }
  std::size_t simple_root_position(int i) const { return simple_pos_[static_cast<std::size_t>(i) - 1]; }
  // 1-based node index when the positive root at pos is simple, else 0.
  int simple_node_at(std::size_t pos) const { return simple_node_of_pos_[pos]; }
  std::optional<std::size_t> find_positive(const std::vector<Coord>& coords) const {
    auto it = root_index_.find(coords);
    if (it == root_index_.end()) return std::nullopt;
    return it->second;
  }

  Weight weight(std::vector<Coord> fund) const {
    if (fund.size() != static_cast<std::size_t>(rank()))
      throw std::invalid_argument("weight coordinate length != rank");
    return Weight(shared_from_this(), std::move(fund));
  }
  Weight zero_weight() const { return weight(std::vector<Coord>(rank(), 0)); }
  Weight fundamental_weight(int i) const {
    std::vector<Coord> c(rank(), 0);
    c[static_cast<std::size_t>(i) - 1] = 1;
    return Weight(shared_from_this(), std::move(c));
  }
  // Fundamental coordinates of a root-lattice vector: n = C m.
  Weight weight_from_root_coords(const std::vector<Coord>& m) const {
    std::vector<Coord> n(rank(), 0);
    for (int i = 0; i < rank(); ++i)
      for (int j = 0; j < rank(); ++j) n[i] += static_cast<Coord>(datum_.cartan[i][j]) * m[j];
    return Weight(shared_from_this(), std::move(n));
  }

  // Simple-root coordinates of a weight: m = C^{-1} n (rational in general).
  std::vector<Rational> root_coords(const Weight& w) const {
    detail::require_same_system(*this, w.system());
    std::vector<Rational> m(rank(), 0);
    for (int i = 0; i < rank(); ++i)
      for (int j = 0; j < rank(); ++j) m[i] += cartan_inv_[i][j] * Rational(w.coords()[j]);
    return m;
  }

  // Bilinear form, internal normalization.
  Rational pairing(const Weight& a, const Weight& b) const {
    detail::require_same_system(*this, a.system());
    detail::require_same_system(*this, b.system());
    const auto mb = root_coords(b);
    Rational r = 0;
    for (int i = 0; i < rank(); ++i)
      r += Rational(a.coords()[i]) * Rational(datum_.d[i]) * mb[i];
    return r;
  }
  Rational pairing(const Weight& a, const Root& b) const {
    detail::require_same_system(*this, a.system());
    detail::require_same_system(*this, b.system());
    Rational r = 0;
    for (int i = 0; i < rank(); ++i)
      r += Rational(a.coords()[i]) * Rational(datum_.d[i]) * Rational(b.coords()[i]);
    return r;
  }
  Rational pairing(const Root& a, const Weight& b) const { return pairing(b, a); }
  Rational pairing(const Root& a, const Root& b) const {
    detail::require_same_system(*this, a.system());
    detail::require_same_system(*this, b.system());
    Rational r = 0;
    for (int i = 0; i < rank(); ++i) {
      Coord row = 0;
      for (int j = 0; j < rank(); ++j)
        row += static_cast<Coord>(datum_.d[i] * datum_.cartan[i][j]) * b.coords()[j];
      r += Rational(a.coords()[i]) * Rational(row);
    }
    return r;
  }

  // The view with long roots of square length exactly 2.
  template <class X, class Y>
  Rational scaled_pairing(const X& a, const Y& b) const {
    return pairing(a, b) / Rational(d_max_);
  }

  // mu <= lambda iff lambda - mu is a nonnegative integer combination of
  // simple roots.
  bool dominance_leq(const Weight& mu, const Weight& lambda) const {
    detail::require_same_system(*this, mu.system());
    detail::require_same_system(*this, lambda.system());
    const auto m = root_coords(lambda - mu);
    for (const Rational& x : m)
      if (!is_integral(x) || x < 0) return false;
    return true;
  }

 private:
  explicit RootSystem(CartanDatum cd) : datum_(std::move(cd)) {
    cartan_inv_ = detail::invert_matrix(datum_.cartan);
    d_max_ = *std::max_element(datum_.d.begin(), datum_.d.end());
    build_positive_roots();
  }

  // s_i on simple-root coordinates: only coordinate i changes,
  // m_i -> m_i - sum_j c_ij m_j.
  std::vector<Coord> reflect_root_coords(int i0, const std::vector<Coord>& m) const {
    std::vector<Coord> out(m);
    Coord pair = 0;
    for (int j = 0; j < rank(); ++j) pair += static_cast<Coord>(datum_.cartan[i0][j]) * m[j];
    out[i0] -= pair;
    return out;
  }

  void build_positive_roots() {
    std::map<std::vector<Coord>, bool> seen;  // value: processed
    std::vector<std::vector<Coord>> queue;
    for (int i = 0; i < rank(); ++i) {
      std::vector<Coord> e(rank(), 0);
      e[i] = 1;
      seen.emplace(e, false);
      queue.push_back(std::move(e));
    }
    while (!queue.empty()) {
      auto m = queue.back();
      queue.pop_back();
      for (int i = 0; i < rank(); ++i) {
        auto img = reflect_root_coords(i, m);
        if (std::any_of(img.begin(), img.end(), [](Coord c) { return c < 0; })) continue;
        if (seen.emplace(img, false).second) queue.push_back(std::move(img));
      }
    }
    positive_.reserve(seen.size());
    for (auto& [coords, _] : seen) positive_.push_back(coords);
    std::sort(positive_.begin(), positive_.end(),
              [](const std::vector<Coord>& a, const std::vector<Coord>& b) {
                Coord ha = 0, hb = 0;
                for (Coord c : a) ha += c;
                for (Coord c : b) hb += c;
                if (ha != hb) return ha < hb;
                return a > b;  // within a height level, node order first
              });
    simple_pos_.assign(rank(), 0);
    simple_node_of_pos_.assign(positive_.size(), 0);
    for (std::size_t p = 0; p < positive_.size(); ++p) {
      root_index_.emplace(positive_[p], p);
      Coord h = 0;
      for (Coord c : positive_[p]) h += c;
      if (h == 1) {
        for (int i = 0; i < rank(); ++i)
          if (positive_[p][i] == 1) {
            simple_pos_[i] = p;
            simple_node_of_pos_[p] = i + 1;
          }
      }
    }
  }

  CartanDatum datum_;
  std::vector<std::vector<Rational>> cartan_inv_;
  int d_max_ = 1;
  std::vector<std::vector<Coord>> positive_;
  std::vector<std::size_t> simple_pos_;
  std::vector<int> simple_node_of_pos_;
  std::map<std::vector<Coord>, std::size_t> root_index_;

  friend void detail::require_same_system(const RootSystem& a, const RootSystem& b);
};

namespace detail {
inline void require_same_system(const RootSystem& a, const RootSystem& b) {
  if (&a == &b || a.datum() == b.datum()) return;
  throw std::invalid_argument("mismatched root systems");
}
}  // namespace detail

inline bool Weight::in_root_lattice() const {
  const auto m = sys_->root_coords(*this);
  return std::all_of(m.begin(), m.end(), [](const Rational& x) { return is_integral(x); });
}

inline Weight Weight::reflect(int i) const {
  const Coord n_i = coord(i);
  std::vector<Coord> c(coords_);
  for (int k = 0; k < sys_->rank(); ++k)
    c[k] -= n_i * static_cast<Coord>(sys_->datum().cartan[k][i - 1]);
  return Weight(sys_, std::move(c));
}

inline Weight Root::as_weight() const { return sys_->weight_from_root_coords(coords_); }

inline Weight operator-(const Weight& w, const Root& r) {
  return w - r.as_weight();
}
inline Weight operator+(const Weight& w, const Root& r) {
  return w + r.as_weight();
}

}  // namespace strata
