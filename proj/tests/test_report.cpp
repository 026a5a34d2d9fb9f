#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "repcheck/report.hpp"

using namespace repcheck;

TEST_CASE("group spec files") {
  auto inst = load_group_spec("data/sl2_5.json");
  CHECK(inst.name == "sl2_5_from_file");
  CHECK(inst.G->size() == 120);
  CHECK(inst.get("natural").dim == 2);
  // coefficient-list entries over GF(9)
  auto gf9 = load_group_spec("data/gf9_spec.json");
  CHECK(gf9.G->size() == 8);  // diag(t, t), t of order 8
  CHECK_THROWS_AS(load_group_spec("data/singular.json"), GroupError);
  CHECK_THROWS_AS(load_group_spec("data/does_not_exist.json"), ExprError);
}

TEST_CASE("cmd_run: verdict path") {
  RunConfig cfg;
  cfg.group = "sl2";
  cfg.params = {{"q", "5"}};
  cfg.module_expr = "sym(1,natural)";
  cfg.checks = {"adequacy"};
  auto res = cmd_run(cfg);
  REQUIRE(res.exit_code == 0);
  CHECK(res.report_json.find("\"weak_ok\": true") != std::string::npos);
  CHECK(res.report_json.find("\"ext1_self_dim\": 1") != std::string::npos);
  CHECK(res.report_json.find("\"order\": 120") != std::string::npos);
  CHECK(res.report_json.find("\"version\"") != std::string::npos);
  // timings are excluded unless requested, for byte determinism
  CHECK(res.report_json.find("timings") == std::string::npos);
  cfg.with_timings = true;
  CHECK(cmd_run(cfg).report_json.find("timings") != std::string::npos);
}

TEST_CASE("cmd_run: reports are byte-identical across runs") {
  RunConfig cfg;
  cfg.group = "sl2";
  cfg.params = {{"q", "4"}};
  cfg.module_expr = "tensor(L1,twist(L1,1))";
  cfg.checks = {"adequacy", "ext1", "structure"};
  auto r1 = cmd_run(cfg);
  auto r2 = cmd_run(cfg);
  REQUIRE(r1.exit_code == 0);
  CHECK(r1.report_json == r2.report_json);
  CHECK(r1.summary == r2.summary);
}

TEST_CASE("cmd_run: spec file group source") {
  RunConfig cfg;
  cfg.group = "data/sl2_5.json";
  cfg.checks = {"ext1"};
  auto res = cmd_run(cfg);
  REQUIRE(res.exit_code == 0);
  CHECK(res.report_json.find("\"self\": 1") != std::string::npos);
}

TEST_CASE("cmd_run: error exit codes") {
  RunConfig cfg;
  cfg.group = "sl2";
  cfg.params = {{"q", "5"}};
  cfg.checks = {};
  CHECK(cmd_run(cfg).exit_code == 2);  // no checks
  cfg.checks = {"bogus"};
  CHECK(cmd_run(cfg).exit_code == 2);
  cfg.checks = {"weak"};
  cfg.module_expr = "nosuch";
  CHECK(cmd_run(cfg).exit_code == 2);
  cfg.module_expr = "natural";
  cfg.group = "data/singular.json";
  CHECK(cmd_run(cfg).exit_code == 2);
  cfg.group = "sl2";
  cfg.cap_elems = 10;
  CHECK(cmd_run(cfg).exit_code == 2);  // enumeration cap is an input error
  cfg.cap_elems = 200000;
  cfg.checks = {"projective"};
  cfg.group = "data/sl2_5.json";  // no simples list attached
  CHECK(cmd_run(cfg).exit_code == 2);
}

TEST_CASE("cmd_run: memory cap exit code 3") {
  RunConfig cfg;
  cfg.group = "sl2";
  cfg.params = {{"q", "9"}};
  cfg.module_expr = "St";
  cfg.checks = {"ext1"};
  cfg.cap_mem_mb = 0;
  CHECK(cmd_run(cfg).exit_code == 3);
}

TEST_CASE("cmd_run: field extension multiplier") {
  RunConfig cfg;
  cfg.group = "sl2";
  cfg.params = {{"q", "2"}};
  cfg.checks = {"ext1"};
  cfg.field_ext = 2;
  auto res = cmd_run(cfg);
  REQUIRE(res.exit_code == 0);
  CHECK(res.report_json.find("\"q\": 4") != std::string::npos);
}
