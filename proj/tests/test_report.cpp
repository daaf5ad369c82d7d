#include <cstdio>
#include <fstream>

#include "doctest.h"
#include "report.hpp"

using namespace cuboid;
using namespace cuboid::report;

TEST_CASE("gb report") {
  RunConfig cfg;
  cfg.command = "gb";
  auto r = run_gb(cfg, {"x", "y"}, {"x^2 - 1", "y - x"}, "lex");
  CHECK(r.doc["artifacts"]["basis"] == Json::array({"x - y", "y^2 - 1"}));
  CHECK(r.exit_code() == 0);
  auto g = run_gb(cfg, {"x", "y"}, {"x^2 - 1", "y - x"}, "lex:y>x");
  CHECK(g.doc["artifacts"]["basis"] == Json::array({"y - x", "x^2 - 1"}));
  CHECK_THROWS_AS(run_gb(cfg, {"x"}, {"x"}, "deglex"), MathError);
  CHECK_THROWS_AS(run_gb(cfg, {"x", "y"}, {"x"}, "lex:x"), MathError);
}

TEST_CASE("exit codes follow claim statuses") {
  Report r;
  r.doc["claims"] = Json::array({{{"status", "PASS"}}, {{"status", "INFO"}}});
  CHECK(r.exit_code() == 0);
  r.doc["claims"].push_back({{"status", "BUDGET"}});
  CHECK(r.exit_code() == 3);
  r.doc["claims"].push_back({{"status", "FAIL"}});
  CHECK(r.exit_code() == 2);
}

TEST_CASE("reports are deterministic and carry the config") {
  RunConfig cfg;
  cfg.command = "face-search";
  cfg.bound = 700;
  auto a = run_face_search(cfg, 700), b = run_face_search(cfg, 700);
  CHECK(a.dump() == b.dump());
  CHECK(a.doc["config"]["bound"] == 700);
  CHECK(a.doc["artifacts"]["hits"][0] == Json::array({153, 672, 104, 680, 185, 697}));
  for (const auto& c : a.doc["claims"]) {
    for (const char* key : {"id", "source_claim", "status", "value", "expected"}) CHECK(c.contains(key));
  }
}

TEST_CASE("milnor builtins and files") {
  RunConfig cfg;
  cfg.budget_steps = 50;
  cfg.jet_budget = 500;
  CHECK(run_milnor_builtin(cfg, "H_V").exit_code() == 3);
  CHECK_THROWS_AS(run_milnor_builtin(cfg, "nope"), MathError);

  const char* path = "test_report_input.txt";
  {
    std::ofstream f(path);
    f << "# cusp and node\nvars: x, y\nx^3 + y^2\n\nx*y\n";
  }
  std::vector<std::string> vars, polys;
  read_polynomial_file(path, vars, polys);
  std::remove(path);
  CHECK(vars == std::vector<std::string>{"x", "y"});
  REQUIRE(polys.size() == 2);
  cfg.budget_steps = 10'000;
  cfg.jet_budget = 1'000'000;
  auto r = run_milnor(cfg, vars, polys);
  CHECK(r.doc["claims"][0]["value"] == 2);
  CHECK(r.doc["claims"][1]["value"] == 1);
  CHECK(r.exit_code() == 0);
  CHECK_THROWS_AS(read_polynomial_file("/nonexistent/file", vars, polys), MathError);
}
