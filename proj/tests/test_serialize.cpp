#include "strata/serialize.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>

using namespace strata;

namespace {

StrataCatalog a1_catalog() {
  const auto rs = RootSystem::create(Family::A, 1);
  const auto table = WeylGroupTable::build(rs);
  StrataPoset poset = StrataPoset::build(table, ParabolicSubset::parse(1, ""));
  return build_catalog(poset);
}

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("strata-test-" + std::to_string(::getpid()) + "-" +
            std::to_string(reinterpret_cast<std::uintptr_t>(this)));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
};

}  // namespace

TEST_CASE("catalog JSON matches the documented schema") {
  const StrataCatalog cat = a1_catalog();
  CHECK(catalog_json(cat).dump() ==
        R"({"family":"A","rank":1,"I":[],"count":3,)"
        R"("elements":[{"w":[],"v":[]},{"w":[1],"v":[]},{"w":[1],"v":[1]}],)"
        R"("fibers":{"e":1,"1":2},"hasse":[[0,1],[2,1]],)"
        R"("axioms":{"reflexive":true,"antisymmetric":true,"transitive":true}})");
}

TEST_CASE("DOT output walks from smaller to larger strata") {
  const StrataCatalog cat = a1_catalog();
  CHECK(catalog_dot(cat) ==
        "digraph strata {\n"
        "  node [shape=box];\n"
        "  s0 [label=\"e|e\"];\n"
        "  s1 [label=\"1|e\"];\n"
        "  s2 [label=\"1|1\"];\n"
        "  s0 -> s1;\n"
        "  s2 -> s1;\n"
        "}\n");
}

TEST_CASE("CSV lists the full relation") {
  const StrataCatalog cat = a1_catalog();
  CHECK(relation_csv(cat) == "from,to\n0,0\n0,1\n1,1\n2,1\n2,2\n");
}

TEST_CASE("word strings") {
  CHECK(ReducedWord{}.to_string() == "e");
  CHECK(ReducedWord{{2, 1}}.to_string() == "2,1");
  CHECK(word_json(ReducedWord{{1, 2, 1}}).dump() == "[1,2,1]");
}

TEST_CASE("catalog cache round trip") {
  TempDir dir;
  const StrataCatalog cat = a1_catalog();
  write_catalog_cache(dir.path, cat);
  const auto name = catalog_cache_filename('A', 1, {});
  REQUIRE(std::filesystem::exists(dir.path / name));

  const auto loaded = read_catalog_cache(dir.path, 'A', 1, {});
  REQUIRE(loaded.has_value());
  CHECK(catalog_json(*loaded).dump() == catalog_json(cat).dump());

  SECTION("missing entries miss") {
    CHECK_FALSE(read_catalog_cache(dir.path, 'A', 2, {}).has_value());
    CHECK_FALSE(read_catalog_cache(dir.path, 'A', 1, {1}).has_value());
  }

  SECTION("version mismatches invalidate") {
    const auto path = dir.path / name;
    std::ifstream in(path);
    std::string body((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    in.close();
    const std::string needle = "\"version\": " + std::to_string(kCatalogFormatVersion);
    const auto at = body.find(needle);
    REQUIRE(at != std::string::npos);
    body.replace(at, needle.size(), "\"version\": 0");
    std::ofstream out(path, std::ios::trunc);
    out << body;
    out.close();
    CHECK_FALSE(read_catalog_cache(dir.path, 'A', 1, {}).has_value());
  }

  SECTION("corrupt files miss") {
    const auto path = dir.path / name;
    std::ofstream out(path, std::ios::trunc);
    out << "not json";
    out.close();
    CHECK_FALSE(read_catalog_cache(dir.path, 'A', 1, {}).has_value());
  }
}
