// Command-line front end: root-system data, Weyl group enumeration, Bruhat
// order queries, parabolic quotients, and the stratum catalogs with their
// conjectured containment order. All output is byte-deterministic for a
// fixed invocation.

#include "strata/serialize.hpp"
#include "strata/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace strata;

constexpr int kExitOk = 0;
constexpr int kExitInvalidInput = 2;
constexpr int kExitSizeCap = 3;
constexpr int kExitVerificationFailure = 4;

struct Options {
  std::string family = "A";
  int rank = 1;
  std::string I_csv;
  std::string format = "text";
  std::string output;
  std::size_t max_group_order = kDefaultGroupCap;
  std::size_t max_strata = kDefaultRelationCap;
  std::size_t max_word_length = kDefaultWordLengthCap;
  std::string cache_dir;
  std::string v_word, w_word;
  std::string lambda1_csv, lambda2_csv;
  long long max_coord = 2;
  bool I_given = false;
};

std::vector<strata::Coord> parse_coords(const std::string& csv, int rank) {
  if (!csv.empty() && csv.back() == ',')
    throw std::invalid_argument("trailing comma in weight '" + csv + "'");
  std::vector<strata::Coord> coords;
  std::size_t pos = 0;
  while (pos < csv.size()) {
    std::size_t comma = csv.find(',', pos);
    if (comma == std::string::npos) comma = csv.size();
    const std::string token = csv.substr(pos, comma - pos);
    std::size_t used = 0;
    long long value = 0;
    try {
      value = std::stoll(token, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad weight coordinate '" + token + "'");
    }
    if (used != token.size()) throw std::invalid_argument("bad weight coordinate '" + token + "'");
    coords.push_back(value);
    pos = comma + 1;
  }
  if (coords.size() != static_cast<std::size_t>(rank))
    throw std::invalid_argument("weight needs exactly " + std::to_string(rank) +
                                " fundamental coordinates");
  return coords;
}

std::vector<int> parse_word(const std::string& csv) {
  if (!csv.empty() && csv.back() == ',')
    throw std::invalid_argument("trailing comma in word '" + csv + "'");
  std::vector<int> letters;
  std::size_t pos = 0;
  while (pos < csv.size()) {
    std::size_t comma = csv.find(',', pos);
    if (comma == std::string::npos) comma = csv.size();
    const std::string token = csv.substr(pos, comma - pos);
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad generator index '" + token + "'");
    }
    if (used != token.size()) throw std::invalid_argument("bad generator index '" + token + "'");
    letters.push_back(value);
    pos = comma + 1;
  }
  return letters;
}

std::shared_ptr<const RootSystem> make_system(const Options& o) {
  const auto family = parse_family(o.family);
  if (!family) throw std::invalid_argument("invalid family '" + o.family + "' (expected A..G)");
  return RootSystem::create(*family, o.rank);
}

std::string resolve_cache_dir(const Options& o) {
  if (const char* env = std::getenv("STRATA_CACHE_DIR"); env && *env) return env;
  return o.cache_dir;
}

void emit(const Options& o, const std::string& payload) {
  if (o.output.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(o.output, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open output file '" + o.output + "'");
  out << payload;
}

std::string json_line(const Json& j) { return j.dump() + "\n"; }

void require_format(const Options& o, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (o.format == f) return;
  std::string msg = "format '" + o.format + "' not supported here (expected one of";
  for (const char* f : allowed) msg += std::string(" ") + f;
  throw std::invalid_argument(msg + ")");
}

void add_type_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--family", o.family, "family letter A..G (Bourbaki node numbering)")->required();
  cmd->add_option("--rank", o.rank, "rank of the root system")->required();
  cmd->add_option("--max-group-order", o.max_group_order, "refuse groups larger than this")
      ->check(CLI::PositiveNumber);
}

void add_output_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format, "output format");
  cmd->add_option("-o,--output", o.output, "write output to this file instead of stdout");
}

CLI::Option* add_parabolic_option(CLI::App* cmd, Options& o, bool required) {
  auto* opt = cmd->add_option("--I", o.I_csv,
                              "parabolic subset as comma-separated 1-based nodes; \"\" is empty");
  if (required) opt->required();
  return opt;
}

// ---- command payload builders -------------------------------------------

std::string run_roots(const Options& o) {
  require_format(o, {"json", "text"});
  const auto rs = make_system(o);
  if (o.format == "json") return json_line(root_system_json(*rs));
  std::ostringstream out;
  out << "type " << o.family << o.rank << ", " << rs->num_positive_roots()
      << " positive roots, d = (";
  for (int i = 0; i < rs->rank(); ++i) out << (i ? "," : "") << rs->datum().d[i];
  out << ")\n";
  for (const auto& coords : rs->positive_root_coords()) {
    out << "[";
    for (std::size_t k = 0; k < coords.size(); ++k) out << (k ? "," : "") << coords[k];
    out << "]\n";
  }
  return out.str();
}

std::string run_weyl_count(const Options& o) {
  require_format(o, {"json", "text"});
  const auto table = WeylGroupTable::build(make_system(o), o.max_group_order);
  if (o.format == "json") {
    Json j;
    j["family"] = o.family;
    j["rank"] = o.rank;
    j["order"] = table->size();
    return json_line(j);
  }
  return std::to_string(table->size()) + "\n";
}

std::string run_weyl_list(const Options& o) {
  require_format(o, {"json", "text"});
  const auto table = WeylGroupTable::build(make_system(o), o.max_group_order);
  if (o.format == "json") {
    Json j;
    j["family"] = o.family;
    j["rank"] = o.rank;
    j["order"] = table->size();
    Json words = Json::array();
    for (std::uint32_t w = 0; w < table->size(); ++w) words.push_back(word_json(table->word(w)));
    j["elements"] = std::move(words);
    return json_line(j);
  }
  std::ostringstream out;
  for (std::uint32_t w = 0; w < table->size(); ++w) out << table->word(w).to_string() << "\n";
  return out.str();
}

std::string run_weyl_element(const Options& o) {
  require_format(o, {"json", "text"});
  const auto rs = make_system(o);
  const WeylElement el = from_word(rs, parse_word(o.w_word));
  const ReducedWord canonical = el.reduced_word();
  const auto inversions = el.inversion_set();
  if (o.format == "json") {
    Json j;
    j["word"] = word_json(canonical);
    j["length"] = el.length();
    Json inv = Json::array();
    for (const Root& r : inversions) inv.push_back(r.coords());
    j["inversions"] = std::move(inv);
    return json_line(j);
  }
  std::ostringstream out;
  out << "word: " << canonical.to_string() << "\n";
  out << "length: " << el.length() << "\n";
  out << "inversions:";
  for (const Root& r : inversions) {
    out << " [";
    for (std::size_t k = 0; k < r.coords().size(); ++k) out << (k ? "," : "") << r.coords()[k];
    out << "]";
  }
  out << "\n";
  return out.str();
}

std::string run_bruhat_leq(const Options& o) {
  require_format(o, {"json", "text"});
  const auto rs = make_system(o);
  const WeylElement v = from_word(rs, parse_word(o.v_word));
  const WeylElement w = from_word(rs, parse_word(o.w_word));
  const bool leq = bruhat_leq(v, w);
  if (o.format == "json") {
    Json j;
    j["v"] = word_json(v.reduced_word());
    j["w"] = word_json(w.reduced_word());
    j["leq"] = leq;
    return json_line(j);
  }
  return std::string(leq ? "true" : "false") + "\n";
}

std::string run_bruhat_interval(const Options& o, bool covers_only) {
  require_format(o, {"json", "text"});
  const auto table = WeylGroupTable::build(make_system(o), o.max_group_order);
  const auto matrix = BruhatMatrix::build(table);
  const std::uint32_t w = table->index_of(from_word(table->system_ptr(), parse_word(o.w_word)));
  std::vector<std::uint32_t> members;
  if (covers_only)
    members = covers(matrix, w);
  else
    members = lower_interval(matrix, w).members;
  if (o.format == "json") {
    Json j;
    j["w"] = word_json(table->word(w));
    j["size"] = members.size();
    Json list = Json::array();
    for (std::uint32_t v : members) list.push_back(word_json(table->word(v)));
    j["members"] = std::move(list);
    return json_line(j);
  }
  std::ostringstream out;
  out << "size: " << members.size() << "\n";
  for (std::uint32_t v : members) out << table->word(v).to_string() << "\n";
  return out.str();
}

std::string run_cosets_list(const Options& o) {
  require_format(o, {"json", "text"});
  const auto table = WeylGroupTable::build(make_system(o), o.max_group_order);
  const auto I = ParabolicSubset::parse(o.rank, o.I_csv);
  const auto reps = minimal_coset_reps_indices(*table, I);
  const auto sub = parabolic_subgroup_indices(*table, I);
  if (o.format == "json") {
    Json j;
    j["family"] = o.family;
    j["rank"] = o.rank;
    j["I"] = I.nodes;
    j["subgroup_order"] = sub.size();
    j["count"] = reps.size();
    Json list = Json::array();
    for (std::uint32_t w : reps) list.push_back(word_json(table->word(w)));
    j["representatives"] = std::move(list);
    return json_line(j);
  }
  std::ostringstream out;
  out << "|W_I| = " << sub.size() << "\n";
  out << "|W^I| = " << reps.size() << "\n";
  for (std::uint32_t w : reps) out << table->word(w).to_string() << "\n";
  return out.str();
}

std::string run_cosets_decompose(const Options& o) {
  require_format(o, {"json", "text"});
  const auto rs = make_system(o);
  const auto I = ParabolicSubset::parse(o.rank, o.I_csv);
  const WeylElement w = from_word(rs, parse_word(o.w_word));
  const auto [up, down] = parabolic_decompose(w, I);
  if (o.format == "json") {
    Json j;
    j["w"] = word_json(w.reduced_word());
    j["up"] = word_json(up.reduced_word());
    j["down"] = word_json(down.reduced_word());
    return json_line(j);
  }
  return "up: " + up.reduced_word().to_string() + "\ndown: " + down.reduced_word().to_string() +
         "\n";
}

StrataCatalog get_catalog(const Options& o) {
  const auto I_nodes = ParabolicSubset::parse(o.rank, o.I_csv).nodes;
  const std::string cache_dir = resolve_cache_dir(o);
  if (!cache_dir.empty()) {
    if (auto cached = read_catalog_cache(cache_dir, o.family[0], o.rank, I_nodes)) return *cached;
  }
  const auto table = WeylGroupTable::build(make_system(o), o.max_group_order);
  const auto I = ParabolicSubset::parse(o.rank, o.I_csv);
  StrataPoset poset = StrataPoset::build(table, I);
  StrataCatalog cat = build_catalog(poset, o.max_strata);
  if (!cache_dir.empty()) write_catalog_cache(cache_dir, cat);
  return cat;
}

std::string run_strata_count(const Options& o) {
  require_format(o, {"json", "text"});
  const auto table = WeylGroupTable::build(make_system(o), o.max_group_order);
  const auto I = ParabolicSubset::parse(o.rank, o.I_csv);
  const auto matrix = BruhatMatrix::build(table);
  const std::size_t count = stratum_count(matrix, I);
  if (o.format == "json") {
    Json j;
    j["family"] = o.family;
    j["rank"] = o.rank;
    j["I"] = I.nodes;
    j["count"] = count;
    return json_line(j);
  }
  return std::to_string(count) + "\n";
}

std::string run_strata_list(const Options& o) {
  require_format(o, {"json", "text"});
  const StrataCatalog cat = get_catalog(o);
  if (o.format == "json") return json_line(catalog_json(cat));
  std::ostringstream out;
  for (std::size_t k = 0; k < cat.elements.size(); ++k)
    out << k << ": " << cat.elements[k].first.to_string() << "|"
        << cat.elements[k].second.to_string() << "\n";
  return out.str();
}

std::string run_strata_fibers(const Options& o) {
  require_format(o, {"json", "text"});
  const StrataCatalog cat = get_catalog(o);
  if (o.format == "json") {
    Json j;
    j["family"] = o.family;
    j["rank"] = o.rank;
    j["I"] = cat.I;
    j["count"] = cat.count;
    Json fibers = Json::object();
    for (const auto& [word, size] : cat.fibers) fibers[word] = size;
    j["fibers"] = std::move(fibers);
    return json_line(j);
  }
  std::ostringstream out;
  for (const auto& [word, size] : cat.fibers) out << word << ": " << size << "\n";
  return out.str();
}

std::string run_strata_hasse(const Options& o) {
  require_format(o, {"json", "dot", "csv", "text"});
  const StrataCatalog cat = get_catalog(o);
  if (o.format == "json") return json_line(catalog_json(cat));
  if (o.format == "dot") return catalog_dot(cat);
  if (o.format == "csv") return relation_csv(cat);
  std::ostringstream out;
  out << "nodes: " << cat.count << "\n";
  out << "edges: " << cat.hasse.size() << "\n";
  for (const auto& [a, b] : cat.hasse)
    out << cat.elements[a].first.to_string() << "|" << cat.elements[a].second.to_string() << " -> "
        << cat.elements[b].first.to_string() << "|" << cat.elements[b].second.to_string() << "\n";
  return out.str();
}

struct VerifyOutcome {
  std::string payload;
  bool all_passed = true;
};

// One explicit (lambda1, lambda2) pair: the full report, weights included.
VerifyOutcome run_verify_lemma1_single(const Options& o) {
  require_format(o, {"json", "text"});
  if (!o.I_given) throw std::invalid_argument("--lambda1/--lambda2 need an explicit --I");
  const auto table = WeylGroupTable::build(make_system(o), o.max_group_order);
  const auto& rs = table->system_ptr();
  const auto I = ParabolicSubset::parse(o.rank, o.I_csv);
  const Weight l1 = rs->weight(parse_coords(o.lambda1_csv, o.rank));
  const Weight l2 = rs->weight(parse_coords(o.lambda2_csv, o.rank));
  WeightSystemCache cache;
  const Lemma1Report report = verify_lemma1(l1, l2, I, *table, cache);
  VerifyOutcome outcome;
  outcome.all_passed = report.passed();
  if (o.format == "json") {
    outcome.payload = json_line(lemma1_report_json(report));
    return outcome;
  }
  std::ostringstream out;
  out << (report.passed() ? "PASS" : "FAIL") << " lemma1 I={" << I.to_string() << "} ("
      << report.pairs_checked << " pairs, " << report.equality_pairs.size() << " equalities)\n";
  for (const auto& eq : report.equality_pairs) {
    out << "  mu1=" << weight_json(eq.mu1).dump() << " mu2=" << weight_json(eq.mu2).dump();
    if (eq.witness) out << " witness=" << eq.witness->to_string();
    out << "\n";
  }
  for (const auto& [mu1, mu2] : report.inequality_violations)
    out << "  violated by mu1=" << weight_json(mu1).dump() << " mu2=" << weight_json(mu2).dump()
        << "\n";
  outcome.payload = out.str();
  return outcome;
}

VerifyOutcome run_verify(const Options& o, const std::string& which) {
  require_format(o, {"json", "text"});
  const auto table = WeylGroupTable::build(make_system(o), o.max_group_order);
  std::vector<ParabolicSubset> subsets;
  if (o.I_given)
    subsets.push_back(ParabolicSubset::parse(o.rank, o.I_csv));
  else
    subsets = all_parabolic_subsets(o.rank);

  const auto matrix = std::make_shared<const BruhatMatrix>(BruhatMatrix::build(table));
  std::vector<CheckResult> results;
  WeightSystemCache weights;

  const bool want_poset = which == "poset" || which == "all";
  const bool want_same_w = which == "same-w" || which == "all";
  const bool want_lemma1 = which == "lemma1" || which == "all";
  const bool want_pbw = which == "pbw-invariance" || which == "all";

  for (const ParabolicSubset& I : subsets) {
    if (want_poset || want_same_w) {
      StrataPoset poset = StrataPoset::build(table, I, matrix);
      poset.compute_relation(o.max_strata);
      if (want_poset) results.push_back(check_poset_axioms(poset));
      if (want_same_w) results.push_back(check_same_w_fibers(poset));
    }
    if (want_lemma1)
      results.push_back(check_pairing_bound_suite(*table, I, o.max_coord, weights));
  }
  if (want_pbw) results.push_back(check_word_independence_all(*table, o.max_word_length));

  VerifyOutcome outcome;
  for (const CheckResult& r : results) outcome.all_passed = outcome.all_passed && r.passed;
  if (o.format == "json") {
    Json j;
    j["family"] = o.family;
    j["rank"] = o.rank;
    Json checks = Json::array();
    for (const CheckResult& r : results) {
      Json c;
      c["name"] = r.name;
      c["passed"] = r.passed;
      c["detail"] = r.detail;
      checks.push_back(std::move(c));
    }
    j["checks"] = std::move(checks);
    j["passed"] = outcome.all_passed;
    outcome.payload = json_line(j);
    return outcome;
  }
  std::ostringstream out;
  std::size_t passed = 0;
  for (const CheckResult& r : results) {
    out << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.detail << ")\n";
    if (r.passed) ++passed;
  }
  out << passed << "/" << results.size() << " checks passed\n";
  outcome.payload = out.str();
  return outcome;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"combinatorics of Weyl group strata of partial flag varieties"};
  app.require_subcommand(1);
  Options o;
  std::function<int()> action;

  // roots
  {
    auto* cmd = app.add_subcommand("roots", "Cartan datum and positive roots");
    add_type_options(cmd, o);
    add_output_options(cmd, o);
    cmd->callback([&] {
      action = [&] {
        emit(o, run_roots(o));
        return kExitOk;
      };
    });
  }
  // weyl
  {
    auto* weyl = app.add_subcommand("weyl", "Weyl group enumeration");
    weyl->require_subcommand(1);
    auto* count = weyl->add_subcommand("count", "group order by enumeration");
    add_type_options(count, o);
    add_output_options(count, o);
    count->callback([&] {
      action = [&] {
        emit(o, run_weyl_count(o));
        return kExitOk;
      };
    });
    auto* list = weyl->add_subcommand("list", "all elements as canonical reduced words");
    add_type_options(list, o);
    add_output_options(list, o);
    list->callback([&] {
      action = [&] {
        emit(o, run_weyl_list(o));
        return kExitOk;
      };
    });
    auto* element = weyl->add_subcommand("element", "canonical word, length, inversion set");
    add_type_options(element, o);
    add_output_options(element, o);
    element->add_option("--w", o.w_word, "word as comma-separated generator indices")->required();
    element->callback([&] {
      action = [&] {
        emit(o, run_weyl_element(o));
        return kExitOk;
      };
    });
  }
  // bruhat
  {
    auto* bruhat = app.add_subcommand("bruhat", "Bruhat order queries");
    bruhat->require_subcommand(1);
    auto* leq = bruhat->add_subcommand("leq", "is v <= w");
    add_type_options(leq, o);
    add_output_options(leq, o);
    leq->add_option("--v", o.v_word, "word for v")->required();
    leq->add_option("--w", o.w_word, "word for w")->required();
    leq->callback([&] {
      action = [&] {
        emit(o, run_bruhat_leq(o));
        return kExitOk;
      };
    });
    auto* interval = bruhat->add_subcommand("interval", "the lower interval [e, w]");
    add_type_options(interval, o);
    add_output_options(interval, o);
    interval->add_option("--w", o.w_word, "word for w")->required();
    interval->callback([&] {
      action = [&] {
        emit(o, run_bruhat_interval(o, false));
        return kExitOk;
      };
    });
    auto* cov = bruhat->add_subcommand("covers", "elements covered by w");
    add_type_options(cov, o);
    add_output_options(cov, o);
    cov->add_option("--w", o.w_word, "word for w")->required();
    cov->callback([&] {
      action = [&] {
        emit(o, run_bruhat_interval(o, true));
        return kExitOk;
      };
    });
  }
  // cosets
  {
    auto* cosets = app.add_subcommand("cosets", "parabolic quotient W/W_I");
    cosets->require_subcommand(1);
    auto* list = cosets->add_subcommand("list", "minimal-length coset representatives");
    add_type_options(list, o);
    add_output_options(list, o);
    add_parabolic_option(list, o, true);
    list->callback([&] {
      action = [&] {
        emit(o, run_cosets_list(o));
        return kExitOk;
      };
    });
    auto* dec = cosets->add_subcommand("decompose", "w = up * down with up in W^I, down in W_I");
    add_type_options(dec, o);
    add_output_options(dec, o);
    add_parabolic_option(dec, o, true);
    dec->add_option("--w", o.w_word, "word for w")->required();
    dec->callback([&] {
      action = [&] {
        emit(o, run_cosets_decompose(o));
        return kExitOk;
      };
    });
  }
  // strata
  {
    auto* strata_cmd = app.add_subcommand("strata", "the stratum catalog and its order");
    strata_cmd->require_subcommand(1);
    auto add_common = [&](CLI::App* cmd) {
      add_type_options(cmd, o);
      add_output_options(cmd, o);
      add_parabolic_option(cmd, o, true);
      cmd->add_option("--max-strata", o.max_strata, "refuse relation matrices larger than this")
          ->check(CLI::PositiveNumber);
      cmd->add_option("--cache-dir", o.cache_dir,
                      "catalog cache directory (STRATA_CACHE_DIR overrides)");
    };
    auto* count = strata_cmd->add_subcommand("count", "number of strata");
    add_common(count);
    count->callback([&] {
      action = [&] {
        emit(o, run_strata_count(o));
        return kExitOk;
      };
    });
    auto* list = strata_cmd->add_subcommand("list", "full catalog");
    add_common(list);
    list->callback([&] {
      action = [&] {
        emit(o, run_strata_list(o));
        return kExitOk;
      };
    });
    auto* hasse = strata_cmd->add_subcommand("hasse", "verified order: reduction, DOT, relation CSV");
    add_common(hasse);
    hasse->callback([&] {
      action = [&] {
        emit(o, run_strata_hasse(o));
        return kExitOk;
      };
    });
    auto* fibers = strata_cmd->add_subcommand("fibers", "fiber sizes over W^I");
    add_common(fibers);
    fibers->callback([&] {
      action = [&] {
        emit(o, run_strata_fibers(o));
        return kExitOk;
      };
    });
  }
  // verify
  {
    auto* verify = app.add_subcommand("verify", "exhaustive checks; exit 4 on any failure");
    verify->require_subcommand(1);
    for (const std::string which : {"poset", "same-w", "lemma1", "pbw-invariance", "all"}) {
      auto* cmd = verify->add_subcommand(which, "run the '" + which + "' checks");
      add_type_options(cmd, o);
      add_output_options(cmd, o);
      auto* I_opt = add_parabolic_option(cmd, o, false);
      cmd->add_option("--max-strata", o.max_strata, "refuse relation matrices larger than this")
          ->check(CLI::PositiveNumber);
      cmd->add_option("--max-coord", o.max_coord, "weight coordinate bound for lemma1")
          ->check(CLI::NonNegativeNumber);
      cmd->add_option("--max-word-length", o.max_word_length,
                      "skip elements longer than this in pbw-invariance");
      if (which == "lemma1") {
        cmd->add_option("--lambda1", o.lambda1_csv,
                        "first weight as fundamental coordinates (single-pair mode)");
        cmd->add_option("--lambda2", o.lambda2_csv, "second weight (single-pair mode)");
      }
      cmd->callback([&, which, I_opt] {
        action = [&, which, I_opt] {
          o.I_given = I_opt->count() > 0;
          if (which == "lemma1" && (!o.lambda1_csv.empty() || !o.lambda2_csv.empty())) {
            const VerifyOutcome single = run_verify_lemma1_single(o);
            emit(o, single.payload);
            if (!single.all_passed) {
              std::cerr << "error: verification: the pairing bound check failed\n";
              return kExitVerificationFailure;
            }
            return kExitOk;
          }
          const VerifyOutcome outcome = run_verify(o, which);
          emit(o, outcome.payload);
          if (!outcome.all_passed) {
            std::cerr << "error: verification: one or more checks failed\n";
            return kExitVerificationFailure;
          }
          return kExitOk;
        };
      });
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: invalid-input: " << e.what() << "\n";
    return kExitInvalidInput;
  }

  try {
    return action();
  } catch (const CapExceededError& e) {
    std::cerr << "error: size-cap: " << e.what() << "\n";
    return kExitSizeCap;
  } catch (const PosetOrderError& e) {
    std::cerr << "error: verification: " << e.what() << "\n";
    return kExitVerificationFailure;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: invalid-input: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::exception& e) {
    std::cerr << "error: internal: " << e.what() << "\n";
    return 1;
  }
}
