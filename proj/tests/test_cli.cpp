#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out, err;
};

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
  static int counter = 0;
  const auto dir = std::filesystem::temp_directory_path();
  const std::string tag = std::to_string(::getpid()) + "-" + std::to_string(counter++);
  const auto out_path = dir / ("flagstrata-out-" + tag);
  const auto err_path = dir / ("flagstrata-err-" + tag);
  const std::string cmd = env_prefix + (env_prefix.empty() ? "" : " ") + FLAGSTRATA_BIN + " " +
                          args + " >" + out_path.string() + " 2>" + err_path.string();
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out_path);
  r.err = slurp(err_path);
  std::filesystem::remove(out_path);
  std::filesystem::remove(err_path);
  return r;
}

}  // namespace

TEST_CASE("roots command emits the schema") {
  const auto r = run_cli("roots --family A --rank 2 --format json");
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "{\"family\":\"A\",\"rank\":2,\"cartan\":[[2,-1],[-1,2]],\"d\":[1,1],"
        "\"positive_roots\":[[1,0],[0,1],[1,1]]}\n");
  const auto text = run_cli("roots --family G --rank 2");
  CHECK(text.exit_code == 0);
  CHECK(text.out.find("6 positive roots") != std::string::npos);
}

TEST_CASE("weyl count") {
  const auto r = run_cli("weyl count --family F --rank 4");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "1152\n");
}

TEST_CASE("bruhat leq") {
  CHECK(run_cli("bruhat leq --family A --rank 2 --v 1 --w 2,1").out == "true\n");
  CHECK(run_cli("bruhat leq --family A --rank 2 --v 1 --w 2").out == "false\n");
}

TEST_CASE("cosets listing") {
  const auto r = run_cli("cosets list --family A --rank 3 --I 1,3");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("|W^I| = 6") != std::string::npos);
  const auto dec = run_cli("cosets decompose --family A --rank 2 --I 2 --w 1,2");
  CHECK(dec.out == "up: 1\ndown: 2\n");
}

TEST_CASE("strata counting") {
  CHECK(run_cli("strata count --family A --rank 2 --I 2").out == "7\n");
  CHECK(run_cli("strata count --family A --rank 3 --I 1,3").out == "33\n");
  CHECK(run_cli("strata count --family A --rank 2 --I ''").out == "19\n");
}

TEST_CASE("strata hasse formats") {
  const auto dot = run_cli("strata hasse --family A --rank 1 --I '' --format dot");
  CHECK(dot.exit_code == 0);
  std::size_t labels = 0;
  for (std::size_t at = dot.out.find("label="); at != std::string::npos;
       at = dot.out.find("label=", at + 1))
    ++labels;
  CHECK(labels == 3);

  const auto csv = run_cli("strata hasse --family A --rank 1 --I '' --format csv");
  CHECK(csv.out == "from,to\n0,0\n0,1\n1,1\n2,1\n2,2\n");

  const auto unsupported = run_cli("strata count --family A --rank 2 --I 2 --format dot");
  CHECK(unsupported.exit_code == 2);
}

TEST_CASE("verify subcommands succeed on small types") {
  const auto r = run_cli("verify all --family A --rank 2");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.out.find("checks passed") != std::string::npos);

  const auto poset = run_cli("verify poset --family G --rank 2 --I 1");
  CHECK(poset.exit_code == 0);
  CHECK(poset.out.find("PASS poset-axioms I={1}") != std::string::npos);

  const auto same_w = run_cli("verify same-w --family B --rank 2 --I 2");
  CHECK(same_w.exit_code == 0);
  CHECK(same_w.out.find("PASS same-w fibers I={2}") != std::string::npos);
}

TEST_CASE("single-pair lemma1 report carries weights as coordinate arrays") {
  const auto r = run_cli(
      "verify lemma1 --family A --rank 2 --I 2 --lambda1 1,0 --lambda2 1,0 --format json");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"lambda1\":[1,0]") != std::string::npos);
  CHECK(r.out.find("\"pairs_checked\":9") != std::string::npos);
  CHECK(r.out.find("\"mu1\":[1,0]") != std::string::npos);
  CHECK(r.out.find("\"witness\":[]") != std::string::npos);
  CHECK(r.out.find("\"passed\":true") != std::string::npos);

  const auto text = run_cli("verify lemma1 --family A --rank 2 --I 2 --lambda1 1,0 --lambda2 1,0");
  CHECK(text.exit_code == 0);
  CHECK(text.out.find("PASS lemma1 I={2} (9 pairs, 3 equalities)") != std::string::npos);

  const auto no_I = run_cli("verify lemma1 --family A --rank 2 --lambda1 1,0 --lambda2 1,0");
  CHECK(no_I.exit_code == 2);
  const auto bad_weight = run_cli("verify lemma1 --family A --rank 2 --I 2 --lambda1 1 --lambda2 1,0");
  CHECK(bad_weight.exit_code == 2);
}

TEST_CASE("error handling and exit codes") {
  const auto bad_family = run_cli("roots --family X --rank 2");
  CHECK(bad_family.exit_code == 2);
  CHECK(bad_family.err.rfind("error: invalid-input:", 0) == 0);
  CHECK(bad_family.err.find('\n') == bad_family.err.size() - 1);  // single line

  const auto bad_type = run_cli("roots --family B --rank 1");
  CHECK(bad_type.exit_code == 2);
  CHECK(bad_type.err.find("(B, 1)") != std::string::npos);

  const auto bad_I = run_cli("strata count --family A --rank 2 --I 5");
  CHECK(bad_I.exit_code == 2);

  const auto capped = run_cli("weyl count --family E --rank 7");
  CHECK(capped.exit_code == 3);
  CHECK(capped.err.rfind("error: size-cap:", 0) == 0);

  const auto small_cap = run_cli("weyl count --family B --rank 2 --max-group-order 5");
  CHECK(small_cap.exit_code == 3);

  const auto missing = run_cli("bruhat leq --family A --rank 2 --v 1");
  CHECK(missing.exit_code == 2);
}

TEST_CASE("identical invocations produce identical bytes") {
  const std::string args = "strata hasse --family A --rank 3 --I 1,3 --format json";
  const auto first = run_cli(args);
  const auto second = run_cli(args);
  CHECK(first.exit_code == 0);
  CHECK(first.out == second.out);
  CHECK(!first.out.empty());
}

TEST_CASE("output file option") {
  const auto path = std::filesystem::temp_directory_path() /
                    ("flagstrata-o-" + std::to_string(::getpid()));
  const auto direct = run_cli("roots --family A --rank 2 --format json");
  const auto filed = run_cli("roots --family A --rank 2 --format json -o " + path.string());
  CHECK(filed.exit_code == 0);
  CHECK(filed.out.empty());
  CHECK(slurp(path) == direct.out);
  std::filesystem::remove(path);
}

TEST_CASE("catalog cache") {
  const auto dir = std::filesystem::temp_directory_path() /
                   ("flagstrata-cache-" + std::to_string(::getpid()));
  std::filesystem::remove_all(dir);
  const std::string args = "strata hasse --family A --rank 2 --I 2 --format json";
  const auto cold = run_cli(args, "STRATA_CACHE_DIR=" + dir.string());
  CHECK(cold.exit_code == 0);
  CHECK(std::filesystem::exists(dir / "A2_I2.json"));
  const auto warm = run_cli(args, "STRATA_CACHE_DIR=" + dir.string());
  CHECK(warm.out == cold.out);
  // the flag is honored too, and the env var wins over it
  const auto flagged = run_cli("strata hasse --family A --rank 2 --I 2 --format json --cache-dir " +
                               dir.string());
  CHECK(flagged.out == cold.out);
  std::filesystem::remove_all(dir);
}
