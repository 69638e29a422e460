#pragma once

#include "strata/parabolic_subset.hpp"
#include "strata/weyl.hpp"

#include <algorithm>
#include <utility>
#include <vector>

namespace strata {

// W_I as group-table indices, ascending (= by length, then canonical word).
inline std::vector<std::uint32_t> parabolic_subgroup_indices(const WeylGroupTable& table,
                                                             const ParabolicSubset& I) {
  std::vector<bool> seen(table.size(), false);
  std::vector<std::uint32_t> queue{table.identity_index()};
  seen[table.identity_index()] = true;
  while (!queue.empty()) {
    const std::uint32_t w = queue.back();
    queue.pop_back();
    for (int i : I.nodes) {
      const std::uint32_t u = table.right_mult_gen(w, i);
      if (!seen[u]) {
        seen[u] = true;
        queue.push_back(u);
      }
    }
  }
  std::vector<std::uint32_t> out;
  for (std::uint32_t w = 0; w < table.size(); ++w)
    if (seen[w]) out.push_back(w);
  return out;
}

// W^I: elements with no right descent in I, ascending enumeration order.
inline std::vector<std::uint32_t> minimal_coset_reps_indices(const WeylGroupTable& table,
                                                             const ParabolicSubset& I) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t w = 0; w < table.size(); ++w) {
    const WeylElement& el = table.element(w);
    const bool minimal =
        std::none_of(I.nodes.begin(), I.nodes.end(), [&](int i) { return el.has_right_descent(i); });
    if (minimal) out.push_back(w);
  }
  return out;
}

// Unique factorization w = w_up * w_down with w_up in W^I, w_down in W_I and
// lengths adding. Strips the smallest right descent in I at each step.
inline std::pair<WeylElement, WeylElement> parabolic_decompose(const WeylElement& w,
                                                               const ParabolicSubset& I) {
  WeylElement up = w;
  WeylElement down = WeylElement::identity(w.system_ptr());
  for (;;) {
    int descent = 0;
    for (int i : I.nodes)
      if (up.has_right_descent(i)) {
        descent = i;
        break;
      }
    if (descent == 0) break;
    const WeylElement s = WeylElement::simple_reflection(w.system_ptr(), descent);
    up = multiply(up, s);
    down = multiply(s, down);
  }
  return {std::move(up), std::move(down)};
}

}  // namespace strata
