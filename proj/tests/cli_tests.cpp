// Integration tests driving the installed CLI binary end to end.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cstdio>
#include <string>

#include "json.hpp"

namespace {

using Json = nlohmann::ordered_json;

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(CENTSTAB_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  std::array<char, 4096> buf;
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("specht command") {
  RunResult r = run_cli("specht 2,1 --field Q");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("dim 2") != std::string::npos);

  RunResult one = run_cli("specht 4 --field Fp:7");
  CHECK(one.exit_code == 0);
  CHECK(one.out.find("dim 1") != std::string::npos);

  RunResult column = run_cli("specht 1,1,1");
  CHECK(column.exit_code == 0);
  CHECK(column.out.find("dim 1") != std::string::npos);
}

TEST_CASE("usage and parse failures exit with 2") {
  CHECK(run_cli("specht 2,3").exit_code == 2);
  CHECK(run_cli("specht x").exit_code == 2);
  CHECK(run_cli("specht 2,1 --field Fp:6").exit_code == 2);
  CHECK(run_cli("specht 2,1 --field R").exit_code == 2);
  CHECK(run_cli("verify nosuchsuite").exit_code == 2);
  CHECK(run_cli("stabilize nosuchseed").exit_code == 2);
  CHECK(run_cli("verify dimpoly --max-n 99").exit_code == 2);
}

TEST_CASE("semisimplicity violations exit with 3") {
  CHECK(run_cli("stabilize perm --steps 4 --field Fp:3").exit_code == 3);
  CHECK(run_cli("verify restriction --field Fp:3 --max-n 5").exit_code == 3);
}

TEST_CASE("stabilize command matches the workbench examples") {
  RunResult r = run_cli("stabilize perm --steps 4 --format json");
  REQUIRE(r.exit_code == 0);
  Json doc = Json::parse(r.out);
  CHECK(doc["type"] == "stabilize-report");
  REQUIRE(doc["terms"].size() == 5);
  for (size_t i = 0; i < doc["terms"].size(); ++i)
    CHECK(doc["terms"][i]["dim"] == static_cast<int>(i) + 1);

  RunResult triv = run_cli("stabilize trivial --steps 4 --format json");
  REQUIRE(triv.exit_code == 0);
  for (const Json& term : Json::parse(triv.out)["terms"]) CHECK(term["dim"] == 1);

  RunResult hooks = run_cli("stabilize specht:1,1 --steps 3 --format json");
  REQUIRE(hooks.exit_code == 0);
  Json hdoc = Json::parse(hooks.out);
  REQUIRE(hdoc["terms"].size() == 4);
  for (size_t i = 0; i < hdoc["terms"].size(); ++i) {
    CHECK(hdoc["terms"][i]["dim"] == static_cast<int>(i) + 1);
    if (i > 0) {
      const std::string hook =
          std::to_string(i + 1) + ",1";  // constituent (k+1, 1)
      CHECK(hdoc["terms"][i]["constituents"].contains(hook));
    }
  }

  // --seed-spec is an accepted spelling.
  CHECK(run_cli("stabilize --seed-spec trivial --steps 2").exit_code == 0);
}

TEST_CASE("verify command emits deterministic passing reports") {
  RunResult a = run_cli("verify dimpoly --max-n 4 --max-k 3 --format json");
  REQUIRE(a.exit_code == 0);
  RunResult b = run_cli("verify dimpoly --max-n 4 --max-k 3 --format json");
  CHECK(a.out == b.out);  // byte-identical for an identical run config

  Json doc = Json::parse(a.out);
  CHECK(doc["schema"] == "centstab/1");
  CHECK(doc["pass"] == true);
  CHECK(doc["cases"].size() > 0);
  for (const Json& c : doc["cases"]) {
    CHECK(c.contains("id"));
    CHECK(c.contains("paper_statement"));
    CHECK(c["pass"] == true);
  }

  // parse(print(x)) = x at the document level.
  CHECK(Json::parse(a.out).dump(2) + "\n" == a.out);

  // Filters narrow the case list.
  RunResult filtered =
      run_cli("verify dimpoly --max-n 4 --filter dimpoly/square-sum/* --format json");
  REQUIRE(filtered.exit_code == 0);
  Json fdoc = Json::parse(filtered.out);
  CHECK(fdoc["cases"].size() == 4);

  // Vacuous case set passes.
  RunResult vacuous = run_cli("verify chain --max-n 0 --format json");
  CHECK(vacuous.exit_code == 0);
  CHECK(Json::parse(vacuous.out)["cases"].empty());
}

TEST_CASE("small verify suites pass end to end") {
  CHECK(run_cli("verify restriction --max-n 4 --format json").exit_code == 0);
  CHECK(run_cli("verify duality --max-n 4 --format json").exit_code == 0);
  CHECK(run_cli("verify chain --max-n 2 --max-m 5 --format json").exit_code == 0);
}
