#pragma once

#include "strata/rep_weights.hpp"
#include "strata/root_system.hpp"
#include "strata/strata_poset.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace strata {

using Json = nlohmann::ordered_json;

inline constexpr int kCatalogFormatVersion = 1;

inline Json word_json(const ReducedWord& w) { return Json(w.letters); }

inline Json weight_json(const Weight& w) { return Json(w.coords()); }

inline Json root_system_json(const RootSystem& rs) {
  Json j;
  j["family"] = std::string(1, family_letter(rs.family()));
  j["rank"] = rs.rank();
  j["cartan"] = rs.datum().cartan;
  j["d"] = rs.datum().d;
  j["positive_roots"] = rs.positive_root_coords();
  return j;
}

inline Json lemma1_report_json(const Lemma1Report& report) {
  Json j;
  j["lambda1"] = weight_json(report.lambda1);
  j["lambda2"] = weight_json(report.lambda2);
  j["I"] = report.I.nodes;
  j["pairs_checked"] = report.pairs_checked;
  j["inequality_ok"] = report.inequality_ok;
  j["witnesses_ok"] = report.witnesses_ok;
  j["clause_b_applies"] = report.clause_b_applies;
  j["clause_c_applies"] = report.clause_c_applies;
  Json equalities = Json::array();
  for (const auto& eq : report.equality_pairs) {
    Json e;
    e["mu1"] = weight_json(eq.mu1);
    e["mu2"] = weight_json(eq.mu2);
    if (eq.witness) e["witness"] = word_json(*eq.witness);
    equalities.push_back(std::move(e));
  }
  j["equalities"] = std::move(equalities);
  Json violations = Json::array();
  for (const auto& [mu1, mu2] : report.inequality_violations)
    violations.push_back(Json{{"mu1", weight_json(mu1)}, {"mu2", weight_json(mu2)}});
  j["violations"] = std::move(violations);
  j["passed"] = report.passed();
  return j;
}

// Everything the strata commands emit, in a serialization-ready form.
struct StrataCatalog {
  char family = 'A';
  int rank = 0;
  std::vector<int> I;
  std::size_t count = 0;
  std::vector<std::pair<ReducedWord, ReducedWord>> elements;  // (w word, v word)
  std::vector<std::pair<std::string, std::size_t>> fibers;    // (w word string, fiber size)
  std::vector<std::pair<std::uint32_t, std::uint32_t>> hasse;
  bool reflexive = false, antisymmetric = false, transitive = false;
};

// Runs the axiom scan and the transitive reduction; throws PosetOrderError
// when the relation fails to be a partial order.
inline StrataCatalog build_catalog(StrataPoset& poset,
                                   std::size_t relation_cap = kDefaultRelationCap) {
  StrataCatalog cat;
  const WeylGroupTable& table = poset.group();
  cat.family = family_letter(table.system().family());
  cat.rank = table.system().rank();
  cat.I = poset.parabolic().nodes;
  cat.count = poset.size();
  cat.elements.reserve(poset.size());
  for (const StratumIndex& s : poset.strata())
    cat.elements.emplace_back(table.word(s.w), table.word(s.v));
  for (std::size_t k = 0; k < poset.fiber_count(); ++k) {
    const auto [lo, hi] = poset.fiber_range(k);
    cat.fibers.emplace_back(table.word(poset.coset_reps()[k]).to_string(), hi - lo);
  }
  cat.hasse = poset.hasse_edges(relation_cap);  // verifies the axioms first
  cat.reflexive = cat.antisymmetric = cat.transitive = true;
  return cat;
}

inline Json catalog_json(const StrataCatalog& cat) {
  Json j;
  j["family"] = std::string(1, cat.family);
  j["rank"] = cat.rank;
  j["I"] = cat.I;
  j["count"] = cat.count;
  Json elements = Json::array();
  for (const auto& [w, v] : cat.elements) {
    Json e;
    e["w"] = word_json(w);
    e["v"] = word_json(v);
    elements.push_back(std::move(e));
  }
  j["elements"] = std::move(elements);
  Json fibers = Json::object();
  for (const auto& [word, size] : cat.fibers) fibers[word] = size;
  j["fibers"] = std::move(fibers);
  Json hasse = Json::array();
  for (const auto& [a, b] : cat.hasse) hasse.push_back(Json::array({a, b}));
  j["hasse"] = std::move(hasse);
  j["axioms"] = {
      {"reflexive", cat.reflexive},
      {"antisymmetric", cat.antisymmetric},
      {"transitive", cat.transitive},
  };
  return j;
}

// Directed edges run from the smaller stratum to the larger one.
inline std::string catalog_dot(const StrataCatalog& cat) {
  std::ostringstream out;
  out << "digraph strata {\n";
  out << "  node [shape=box];\n";
  for (std::size_t k = 0; k < cat.elements.size(); ++k)
    out << "  s" << k << " [label=\"" << cat.elements[k].first.to_string() << '|'
        << cat.elements[k].second.to_string() << "\"];\n";
  for (const auto& [a, b] : cat.hasse) out << "  s" << a << " -> s" << b << ";\n";
  out << "}\n";
  return out.str();
}

// The full order relation (reflexive-transitive closure of the Hasse edges),
// one ordered pair per line.
inline std::string relation_csv(const StrataCatalog& cat) {
  const std::size_t n = cat.count;
  std::vector<boost::dynamic_bitset<>> up(n, boost::dynamic_bitset<>(n));
  for (std::size_t a = 0; a < n; ++a) up[a].set(a);
  // Process in an order where all Hasse successors of a node come later:
  // repeated sweeps settle because the cover graph is acyclic.
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& [a, b] : cat.hasse) {
      auto merged = up[a] | up[b];
      if (merged != up[a]) {
        up[a] = std::move(merged);
        changed = true;
      }
    }
  }
  std::ostringstream out;
  out << "from,to\n";
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = up[a].find_first(); b != boost::dynamic_bitset<>::npos;
         b = up[a].find_next(b))
      out << a << ',' << b << '\n';
  return out.str();
}

inline std::string catalog_cache_filename(char family, int rank, const std::vector<int>& I) {
  std::string name;
  name += family;
  name += std::to_string(rank);
  name += "_I";
  for (std::size_t k = 0; k < I.size(); ++k) {
    if (k) name += '-';
    name += std::to_string(I[k]);
  }
  name += ".json";
  return name;
}

inline void write_catalog_cache(const std::filesystem::path& dir, const StrataCatalog& cat) {
  std::filesystem::create_directories(dir);
  Json j;
  j["version"] = kCatalogFormatVersion;
  Json body = catalog_json(cat);
  for (auto& [key, value] : body.items()) j[key] = value;
  std::ofstream out(dir / catalog_cache_filename(cat.family, cat.rank, cat.I));
  out << j.dump(2) << '\n';
}

inline std::optional<StrataCatalog> read_catalog_cache(const std::filesystem::path& dir,
                                                       char family, int rank,
                                                       const std::vector<int>& I) {
  const auto path = dir / catalog_cache_filename(family, rank, I);
  std::ifstream in(path);
  if (!in) return std::nullopt;
  Json j = Json::parse(in, nullptr, false);
  if (j.is_discarded()) return std::nullopt;
  if (!j.contains("version") || j["version"] != kCatalogFormatVersion) return std::nullopt;
  try {
    StrataCatalog cat;
    cat.family = j.at("family").get<std::string>().at(0);
    cat.rank = j.at("rank").get<int>();
    cat.I = j.at("I").get<std::vector<int>>();
    if (cat.family != family || cat.rank != rank || cat.I != I) return std::nullopt;
    cat.count = j.at("count").get<std::size_t>();
    for (const auto& e : j.at("elements"))
      cat.elements.emplace_back(ReducedWord{e.at("w").get<std::vector<int>>()},
                                ReducedWord{e.at("v").get<std::vector<int>>()});
    for (const auto& [key, value] : j.at("fibers").items())
      cat.fibers.emplace_back(key, value.get<std::size_t>());
    for (const auto& e : j.at("hasse"))
      cat.hasse.emplace_back(e.at(0).get<std::uint32_t>(), e.at(1).get<std::uint32_t>());
    cat.reflexive = j.at("axioms").at("reflexive").get<bool>();
    cat.antisymmetric = j.at("axioms").at("antisymmetric").get<bool>();
    cat.transitive = j.at("axioms").at("transitive").get<bool>();
    if (cat.elements.size() != cat.count) return std::nullopt;
    return cat;
  } catch (const Json::exception&) {
    return std::nullopt;
  }
}

}  // namespace strata
