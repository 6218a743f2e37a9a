#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "doctest.h"
#include "json_io.hpp"

using qca::io::json;

namespace {

struct Run {
  int code;
  std::string out, err;
  json parsed() const { return json::parse(out); }
};

Run qca_run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = qca::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("qca_cli_test_" + name)).string();
}

void write(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

}  // namespace

TEST_CASE("usage errors exit 2") {
  CHECK(qca_run({}).code == 2);
  CHECK(qca_run({"nonsense"}).code == 2);
  CHECK(qca_run({"mutate", "--no-such-flag"}).code == 2);
  CHECK(qca_run({"mutate", "--setting", "X"}).code == 2);
  CHECK(qca_run({"quiver"}).code == 2);
  CHECK(qca_run({"variable"}).code == 2);  // --index is required
  CHECK(qca_run({"--help"}).code == 0);
}

TEST_CASE("computation failures exit 1 with error JSON") {
  Run r = qca_run({"mutate", "--named", "a2", "--word", "3"});
  CHECK(r.code == 1);
  CHECK(r.parsed()["error"]["code"] == "invalid_vertex");
  Run bad_file = qca_run({"mutate", "--seed-file", temp_path("missing.json")});
  CHECK(bad_file.code == 1);
  CHECK(bad_file.parsed()["error"]["code"] == "io_error");
}

TEST_CASE("quiver build-z prints B~ and Lambda") {
  std::string f = temp_path("triangle.json");
  write(f, R"({"n":3,"m":3,"arrows":[[1,2],[2,3],[1,3]],"frozen_from":null})");
  Run r = qca_run({"quiver", "build-z", "--file", f, "--level", "1"});
  REQUIRE(r.code == 0);
  CHECK(r.parsed()["b_tilde"] == json::parse(R"([["0","1","1"],["-1","0","1"],["-1","-1","0"],["-1","0","0"],["1","-1","0"],["1","1","-1"]])"));
  CHECK(r.parsed()["ice_quiver"]["frozen_from"] == 4);
  std::remove(f.c_str());
}

TEST_CASE("mutate --word 1,1 returns the input seed") {
  json a = qca_run({"mutate", "--named", "a3"}).parsed();
  json b = qca_run({"mutate", "--named", "a3", "--word", "1,1"}).parsed();
  for (const char* key : {"lambda", "b_tilde", "variables", "config"}) CHECK(a[key] == b[key]);
}

TEST_CASE("seed files round-trip and future schemas are rejected") {
  std::string f = temp_path("seed.json");
  Run first = qca_run({"mutate", "--named", "triangle", "--word", "2,3"});
  write(f, first.out);
  Run again = qca_run({"mutate", "--seed-file", f});
  CHECK(again.out == first.out);
  Run more = qca_run({"mutate", "--seed-file", f, "--word", "1"});
  CHECK(more.parsed()["history"] == json::array({2, 3, 1}));

  json future = first.parsed();
  future["schema"] = qca::io::kSchemaVersion + 1;
  write(f, future.dump());
  Run rejected = qca_run({"mutate", "--seed-file", f});
  CHECK(rejected.code == 1);
  CHECK(rejected.parsed()["error"]["code"] == "schema_version");

  json tampered = first.parsed();
  tampered["b_tilde"][0][0] = "5";
  write(f, tampered.dump());
  CHECK(qca_run({"mutate", "--seed-file", f}).parsed()["error"]["code"] == "inconsistent_snapshot");
  std::remove(f.c_str());
}

TEST_CASE("explore snapshot at depth 6 reloads and extends") {
  std::string f = temp_path("explore.json");
  Run six = qca_run({"explore", "--named", "a3", "--depth", "6", "--dedupe", "--save", f});
  REQUIRE(six.code == 0);
  Run more = qca_run({"explore", "--load", f, "--depth", "9"});
  REQUIRE(more.code == 0);
  CHECK(more.parsed()["extended_from"] == 6);
  CHECK(more.parsed()["clusters"] == 14);
  Run same = qca_run({"explore", "--named", "a3", "--depth", "9"});
  json a = more.parsed(), b = same.parsed();
  a.erase("extended_from");
  CHECK(a == b);
  CHECK(qca_run({"explore", "--load", f, "--depth", "2"}).code == 1);
  std::remove(f.c_str());
}

TEST_CASE("variable, form, generic, cc") {
  Run v = qca_run({"variable", "--named", "a2", "--word", "1", "--index", "1"});
  REQUIRE(v.code == 0);
  CHECK(v.parsed()["value"].size() == 2);

  Run f = qca_run({"form", "--named", "a3", "--name", "beta", "--w1", "1:0:1"});
  REQUIRE(f.code == 0);
  CHECK(qca_run({"form", "--named", "a3", "--name", "nope", "--w1", "1:0:1"}).code == 1);

  Run g = qca_run({"generic", "--named", "a3", "--w", "1:-1:1,3:0:1", "--rng-seed", "7"});
  REQUIRE(g.code == 0);
  CHECK(g.parsed()["rng_seed"] == 7);
  CHECK(g.parsed()["rigid"] == true);

  // feed the generic kernel back to cc
  std::string m = temp_path("module.json"), w = temp_path("w.json");
  write(m, g.parsed()["kernel"].dump());
  write(w, g.parsed()["w"].dump());
  Run cc = qca_run({"cc", "--named", "a3", "--module", m, "--w", w});
  REQUIRE(cc.code == 0);
  CHECK(cc.parsed()["value"] == g.parsed()["cor_E"]);
  std::remove(m.c_str());
  std::remove(w.c_str());
}

TEST_CASE("max-dim flag and environment cap") {
  Run capped = qca_run({"generic", "--named", "a3", "--w", "1:-1:2,3:0:2", "--max-dim", "1"});
  CHECK(capped.code == 1);
  CHECK(capped.parsed()["error"]["code"] == "resource_cap");
  setenv("QCA_MAX_DIM", "1", 1);
  Run env = qca_run({"generic", "--named", "a3", "--w", "1:-1:2,3:0:2"});
  unsetenv("QCA_MAX_DIM");
  CHECK(env.code == 1);
  CHECK(qca_run({"generic", "--named", "a3", "--w", "1:-1:2,3:0:2"}).code == 0);
}

TEST_CASE("canonical, tsystem, positivity") {
  Run c = qca_run({"canonical", "--named", "a3", "--weight", "1,0,1", "--setting", "L", "--bound", "4"});
  REQUIRE(c.code == 0);
  CHECK_FALSE(c.parsed()["elements"].empty());
  Run t = qca_run({"tsystem", "--named", "a3", "--k", "2"});
  CHECK(t.code == 0);
  CHECK(t.parsed()["passed"] == true);
  CHECK(qca_run({"tsystem", "--named", "a3", "--k", "9"}).code == 1);
  Run p = qca_run({"positivity", "--named", "a2", "--bound", "3"});
  CHECK(p.code == 0);
  CHECK(p.parsed()["all_positive"] == true);
}

TEST_CASE("verify all on a subset") {
  Run r = qca_run({"verify", "all", "--suite", "a2", "--criteria", "4"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("PASS 4", 0) == 0);
  CHECK(qca_run({"verify", "all", "--suite", "b7"}).code == 1);
}
