#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace strata {

// A subset I of the node indices {1..rank}. Nodes are kept sorted.
struct ParabolicSubset {
  int rank = 0;
  std::vector<int> nodes;

  bool operator==(const ParabolicSubset&) const = default;

  bool contains(int i) const {
    return std::binary_search(nodes.begin(), nodes.end(), i);
  }

  std::vector<int> complement() const {
    std::vector<int> out;
    for (int i = 1; i <= rank; ++i)
      if (!contains(i)) out.push_back(i);
    return out;
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t k = 0; k < nodes.size(); ++k) {
      if (k) s += ',';
      s += std::to_string(nodes[k]);
    }
    return s;
  }

  static ParabolicSubset make(int rank, std::vector<int> nodes) {
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    for (int i : nodes)
      if (i < 1 || i > rank)
        throw std::invalid_argument("parabolic node index " + std::to_string(i) +
                                    " out of range 1.." + std::to_string(rank));
    return ParabolicSubset{rank, std::move(nodes)};
  }

  // Parses a comma-separated list of 1-based node indices; "" means I = {}.
  static ParabolicSubset parse(int rank, std::string_view csv) {
    if (!csv.empty() && csv.back() == ',')
      throw std::invalid_argument("trailing comma in node list '" + std::string(csv) + "'");
    std::vector<int> nodes;
    std::size_t pos = 0;
    while (pos < csv.size()) {
      std::size_t comma = csv.find(',', pos);
      if (comma == std::string_view::npos) comma = csv.size();
      const std::string token(csv.substr(pos, comma - pos));
      if (token.empty()) throw std::invalid_argument("empty entry in node list '" + std::string(csv) + "'");
      std::size_t used = 0;
      int value = 0;
      try {
        value = std::stoi(token, &used);
      } catch (const std::exception&) {
        throw std::invalid_argument("bad node index '" + token + "'");
      }
      if (used != token.size()) throw std::invalid_argument("bad node index '" + token + "'");
      nodes.push_back(value);
      pos = comma + 1;
    }
    return make(rank, std::move(nodes));
  }
};

// All 2^rank subsets, ordered by size then lexicographically.
inline std::vector<ParabolicSubset> all_parabolic_subsets(int rank) {
  std::vector<ParabolicSubset> out;
  for (unsigned mask = 0; mask < (1u << rank); ++mask) {
    std::vector<int> nodes;
    for (int i = 0; i < rank; ++i)
      if (mask & (1u << i)) nodes.push_back(i + 1);
    out.push_back(ParabolicSubset{rank, std::move(nodes)});
  }
  std::sort(out.begin(), out.end(), [](const ParabolicSubset& a, const ParabolicSubset& b) {
    if (a.nodes.size() != b.nodes.size()) return a.nodes.size() < b.nodes.size();
    return a.nodes < b.nodes;
  });
  return out;
}

}  // namespace strata
