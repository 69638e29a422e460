#include "strata/pbw.hpp"

#include "oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <set>

using namespace strata;

TEST_CASE("beta sequences from reduced words") {
  const auto a2 = RootSystem::create(Family::A, 2);
  CHECK(beta_roots(a2, ReducedWord{}).roots.empty());

  const auto bs12 = beta_roots(a2, ReducedWord{{1, 2}});
  REQUIRE(bs12.roots.size() == 2);
  CHECK(bs12.roots[0].coords() == std::vector<Coord>{1, 0});
  CHECK(bs12.roots[1].coords() == std::vector<Coord>{1, 1});

  const auto bs121 = beta_roots(a2, ReducedWord{{1, 2, 1}});
  REQUIRE(bs121.roots.size() == 3);
  CHECK(bs121.roots[0].coords() == std::vector<Coord>{1, 0});
  CHECK(bs121.roots[1].coords() == std::vector<Coord>{1, 1});
  CHECK(bs121.roots[2].coords() == std::vector<Coord>{0, 1});

  CHECK_THROWS_AS(beta_roots(a2, ReducedWord{{1, 1}}), std::invalid_argument);
}

TEST_CASE("enumeration of all reduced words") {
  const auto a2 = RootSystem::create(Family::A, 2);
  CHECK(all_reduced_words(WeylElement::identity(a2)) == std::vector<ReducedWord>{ReducedWord{}});

  const auto table = WeylGroupTable::build(a2);
  const auto words_w0 = all_reduced_words(table->element(table->longest_index()));
  REQUIRE(words_w0.size() == 2);
  const std::set<std::vector<int>> as_set{words_w0[0].letters, words_w0[1].letters};
  CHECK(as_set == std::set<std::vector<int>>{{1, 2, 1}, {2, 1, 2}});

  const auto b2 = RootSystem::create(Family::B, 2);
  const auto table_b2 = WeylGroupTable::build(b2);
  CHECK(all_reduced_words(table_b2->element(table_b2->longest_index())).size() == 2);

  const auto a3 = RootSystem::create(Family::A, 3);
  const auto table_a3 = WeylGroupTable::build(a3);
  CHECK(all_reduced_words(table_a3->element(table_a3->longest_index())).size() == 16);

  SECTION("length caps refuse with the cap named") {
    CHECK_THROWS_AS(all_reduced_words(table->element(table->longest_index()), 2),
                    CapExceededError);
    const auto f4 = RootSystem::create(Family::F, 4);
    const auto table_f4 = WeylGroupTable::build(f4);
    CHECK_THROWS_MATCHES(
        all_reduced_words(table_f4->element(table_f4->longest_index())), CapExceededError,
        Catch::Matchers::MessageMatches(Catch::Matchers::ContainsSubstring("16")));
  }
}

TEST_CASE("reduced-word independence of the beta-root set") {
  const auto a2 = RootSystem::create(Family::A, 2);
  CHECK(check_word_independence(WeylElement::identity(a2)).passed());
  for (auto f_rank : std::vector<std::pair<Family, int>>{{Family::A, 2}, {Family::B, 2}}) {
    const auto rs = RootSystem::create(f_rank.first, f_rank.second);
    const auto table = WeylGroupTable::build(rs);
    for (std::uint32_t w = 0; w < table->size(); ++w) {
      const auto report = check_word_independence(table->element(w));
      CHECK(report.passed());
      CHECK(report.word_count >= 1);
    }
  }
}

TEST_CASE("graded dimensions") {
  const auto a2 = RootSystem::create(Family::A, 2);
  const auto table = WeylGroupTable::build(a2);
  const WeylElement w0 = table->element(table->longest_index());

  CHECK(graded_dimension(w0, a2->zero_weight()) == 1);
  CHECK(graded_dimension(w0, a2->weight_from_root_coords({1, 1})) == 2);
  CHECK(graded_dimension(w0, a2->weight_from_root_coords({-1, 0})) == 0);
  CHECK(graded_dimension(w0, a2->fundamental_weight(1)) == 0);  // not in the root lattice

  SECTION("the count only depends on the multiset of beta roots") {
    const auto words = all_reduced_words(w0);
    REQUIRE(words.size() == 2);
    const auto bs_a = beta_roots(a2, words[0]);
    const auto bs_b = beta_roots(a2, words[1]);
    for (Coord x = 0; x <= 4; ++x)
      for (Coord y = 0; y + x <= 4; ++y) {
        const Weight mu = a2->weight_from_root_coords({x, y});
        CHECK(graded_dimension(bs_a, mu) == graded_dimension(bs_b, mu));
      }
  }

  SECTION("longest element recovers the full partition count") {
    for (auto f_rank : std::vector<std::pair<Family, int>>{{Family::A, 2}, {Family::B, 2}}) {
      const auto rs = RootSystem::create(f_rank.first, f_rank.second);
      const auto t = WeylGroupTable::build(rs);
      const WeylElement longest = t->element(t->longest_index());
      for (Coord x = 0; x <= 4; ++x)
        for (Coord y = 0; y + x <= 4; ++y) {
          const Weight mu = rs->weight_from_root_coords({x, y});
          CHECK(graded_dimension(longest, mu) == oracles::kostant_count(*rs, {x, y}));
        }
    }
  }

  SECTION("short elements grade by their own inversions only") {
    const WeylElement s1 = WeylElement::simple_reflection(a2, 1);
    CHECK(graded_dimension(s1, a2->weight_from_root_coords({2, 0})) == 1);
    CHECK(graded_dimension(s1, a2->weight_from_root_coords({0, 1})) == 0);
  }
}
