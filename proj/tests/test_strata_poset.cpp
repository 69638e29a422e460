#include "strata/strata_poset.hpp"

#include "strata/serialize.hpp"
#include "oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <set>

using namespace strata;

namespace {

StrataPoset make_poset(Family f, int rank, const std::string& I_csv) {
  const auto rs = RootSystem::create(f, rank);
  const auto table = WeylGroupTable::build(rs);
  return StrataPoset::build(table, ParabolicSubset::parse(rank, I_csv));
}

std::vector<int> parse_word_vec(const char* csv) {
  std::vector<int> letters;
  for (const char* p = csv; *p;) {
    letters.push_back(std::atoi(p));
    while (*p && *p != ',') ++p;
    if (*p == ',') ++p;
  }
  return letters;
}

std::string label(const StrataPoset& p, std::size_t k) {
  const StratumIndex& s = p.strata()[k];
  return p.group().word(s.w).to_string() + "|" + p.group().word(s.v).to_string();
}

}  // namespace

TEST_CASE("stratum enumeration counts") {
  auto a1 = make_poset(Family::A, 1, "");
  REQUIRE(a1.size() == 3);
  CHECK(label(a1, 0) == "e|e");
  CHECK(label(a1, 1) == "1|e");
  CHECK(label(a1, 2) == "1|1");

  CHECK(make_poset(Family::A, 2, "").size() == 19);
  CHECK(make_poset(Family::A, 2, "2").size() == 7);
  CHECK(make_poset(Family::A, 3, "1,3").size() == 33);

  SECTION("counts match the subword-oracle interval sums") {
    const auto rs = RootSystem::create(Family::A, 2);
    const auto table = WeylGroupTable::build(rs);
    for (const ParabolicSubset& I : all_parabolic_subsets(2)) {
      const auto poset = StrataPoset::build(table, I);
      std::size_t expect = 0;
      for (std::uint32_t w : minimal_coset_reps_indices(*table, I))
        expect += oracles::subword_interval_size(*table, w);
      CHECK(poset.size() == expect);
    }
  }

  SECTION("the stratum cap refuses oversized enumerations") {
    const auto rs = RootSystem::create(Family::A, 2);
    const auto table = WeylGroupTable::build(rs);
    CHECK_THROWS_AS(
        StrataPoset::build(table, ParabolicSubset::parse(2, ""), nullptr, /*strata_cap=*/5),
        CapExceededError);
  }

  SECTION("the relation cap refuses oversized matrices") {
    auto poset = make_poset(Family::A, 2, "");
    CHECK_THROWS_AS(poset.compute_relation(/*relation_cap=*/10), CapExceededError);
  }

  SECTION("growing I shrinks the index set") {
    CHECK(make_poset(Family::A, 3, "1").size() <= make_poset(Family::A, 3, "").size());
    CHECK(make_poset(Family::A, 3, "1,3").size() <= make_poset(Family::A, 3, "1").size());
    CHECK(make_poset(Family::B, 2, "1,2").size() <= make_poset(Family::B, 2, "2").size());
  }
}

TEST_CASE("closure order on the worked A2 example") {
  auto poset = make_poset(Family::A, 2, "2");
  poset.compute_relation();
  REQUIRE(poset.size() == 7);

  const auto& table = poset.group();
  const auto idx = [&](const char* w, const char* v) {
    const std::uint32_t wi = table.index_of(from_word(table.system_ptr(), parse_word_vec(w)));
    const std::uint32_t vi = table.index_of(from_word(table.system_ptr(), parse_word_vec(v)));
    return *poset.find(wi, vi);
  };

  for (std::size_t a = 0; a < poset.size(); ++a) CHECK(poset.leq(a, a));

  // (s1, e) lies under the open stratum (s2s1, e)
  CHECK(poset.leq(idx("1", ""), idx("2,1", "")));
  // the open stratum dominates everything
  for (std::size_t a = 0; a < poset.size(); ++a) CHECK(poset.leq(a, idx("2,1", "")));

  SECTION("within a fiber the order mirrors Bruhat order, reversed") {
    for (std::size_t k = 0; k < poset.fiber_count(); ++k) {
      const auto [lo, hi] = poset.fiber_range(k);
      for (std::size_t a = lo; a < hi; ++a)
        for (std::size_t b = lo; b < hi; ++b)
          CHECK(poset.leq(a, b) ==
                poset.bruhat().leq(poset.strata()[b].v, poset.strata()[a].v));
    }
  }

  SECTION("the scanning predicate agrees with the relation matrix") {
    std::vector<WeylElement> subgroup;
    for (std::uint32_t z : poset.subgroup_indices()) subgroup.push_back(table.element(z));
    BruhatCache cache;
    for (std::size_t a = 0; a < poset.size(); ++a)
      for (std::size_t b = 0; b < poset.size(); ++b) {
        const auto& sa = poset.strata()[a];
        const auto& sb = poset.strata()[b];
        CHECK(poset.leq(a, b) == closure_leq(table.element(sa.w), table.element(sa.v),
                                             table.element(sb.w), table.element(sb.v), subgroup,
                                             cache));
      }
  }
}

TEST_CASE("poset axioms hold at desk scale") {
  for (const char* I : {"", "1", "2", "1,2"}) {
    auto a2 = make_poset(Family::A, 2, I);
    CHECK(a2.verify_axioms().all_pass());
    auto b2 = make_poset(Family::B, 2, I);
    CHECK(b2.verify_axioms().all_pass());
  }
  for (const char* I : {"", "1"}) {
    auto a1_or_so = make_poset(Family::A, 1, I[0] == '\0' ? "" : "1");
    CHECK(a1_or_so.verify_axioms().all_pass());
  }
}

TEST_CASE("fibers partition the strata") {
  auto poset = make_poset(Family::A, 2, "2");
  REQUIRE(poset.fiber_count() == 3);
  const auto [lo0, hi0] = poset.fiber_range(0);
  CHECK(hi0 - lo0 == 1);  // fiber over the identity
  const auto [lo2, hi2] = poset.fiber_range(2);
  CHECK(hi2 - lo2 == 4);  // fiber over s2 s1
  std::size_t total = 0;
  for (std::size_t k = 0; k < poset.fiber_count(); ++k) {
    const auto [lo, hi] = poset.fiber_range(k);
    total += hi - lo;
  }
  CHECK(total == poset.size());
}

TEST_CASE("hasse edges and maximal elements") {
  auto a1 = make_poset(Family::A, 1, "");
  const auto edges = a1.hasse_edges();
  CHECK(edges == std::vector<std::pair<std::uint32_t, std::uint32_t>>{{0, 1}, {2, 1}});

  auto full = make_poset(Family::A, 2, "1,2");
  CHECK(full.size() == 1);
  CHECK(full.hasse_edges().empty());

  auto a2 = make_poset(Family::A, 2, "2");
  const auto maxima = a2.maximal_elements();
  REQUIRE(maxima.size() == 1);
  CHECK(label(a2, maxima[0]) == "2,1|e");

  SECTION("the unique maximum is the longest coset representative with v = e") {
    for (const char* I : {"", "1", "2", "1,2"}) {
      auto poset = make_poset(Family::A, 3, I);
      const auto maxima2 = poset.maximal_elements();
      REQUIRE(maxima2.size() == 1);
      const StratumIndex& top = poset.strata()[maxima2[0]];
      CHECK(top.v == poset.group().identity_index());
      CHECK(top.w == poset.coset_reps().back());
    }
  }

  SECTION("the transitive closure of the hasse edges recovers the relation") {
    auto poset = make_poset(Family::A, 2, "2");
    StrataCatalog cat = build_catalog(poset);
    const std::string csv = relation_csv(cat);
    std::set<std::pair<std::uint32_t, std::uint32_t>> from_csv;
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);  // header
    while (std::getline(in, line)) {
      const auto comma = line.find(',');
      from_csv.emplace(std::stoul(line.substr(0, comma)), std::stoul(line.substr(comma + 1)));
    }
    std::set<std::pair<std::uint32_t, std::uint32_t>> from_matrix;
    for (std::size_t a = 0; a < poset.size(); ++a)
      for (std::size_t b = 0; b < poset.size(); ++b)
        if (poset.leq(a, b))
          from_matrix.emplace(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b));
    CHECK(from_csv == from_matrix);
  }
}

TEST_CASE("full-flag specialization") {
  auto poset = make_poset(Family::A, 2, "");
  poset.compute_relation();
  const auto& bruhat = poset.bruhat();
  for (std::size_t a = 0; a < poset.size(); ++a)
    for (std::size_t b = 0; b < poset.size(); ++b) {
      const auto& sa = poset.strata()[a];
      const auto& sb = poset.strata()[b];
      const bool two_comparisons = bruhat.leq(sa.w, sb.w) && bruhat.leq(sb.v, sa.v);
      CHECK(poset.leq(a, b) == two_comparisons);
    }
}

TEST_CASE("rebuilding from scratch reproduces the catalog") {
  auto first = make_poset(Family::B, 2, "1");
  auto second = make_poset(Family::B, 2, "1");
  const auto cat1 = build_catalog(first);
  const auto cat2 = build_catalog(second);
  CHECK(catalog_json(cat1).dump() == catalog_json(cat2).dump());
}
