#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "rigidity/errors.hpp"
#include "rigidity/experiments.hpp"
#include "rigidity/svgplot.hpp"

using namespace rigidity;

namespace {

// data rows only, split into cells
std::vector<std::vector<std::string>> rows_of(const std::string& csv) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(csv);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(std::move(cells));
  }
  return rows;
}

}  // namespace

TEST_CASE("threshold runner is deterministic and monotone-ish at extremes") {
  ThresholdConfig cfg;
  cfg.n = 40;
  cfg.d = 2;
  cfg.p_grid = {0.02, 0.5};
  cfg.trials = 10;
  cfg.seed = 5;
  std::string csv = run_threshold(cfg);
  CHECK(csv == run_threshold(cfg));
  CHECK(csv.find("# ") == 0);
  auto rows = rows_of(csv);
  REQUIRE(rows.size() == 3);  // header + 2 grid points
  CHECK(rows[0][0] == "p");
  // far below the threshold nothing is rigid; at p = 1/2 everything is
  CHECK(std::stod(rows[1][4]) == 0.0);
  CHECK(std::stod(rows[2][4]) == 1.0);
  // the min-degree fraction brackets the rigidity fraction
  CHECK(std::stod(rows[1][5]) >= std::stod(rows[1][4]));
}

TEST_CASE("regular runner aggregates one row") {
  RegularConfig cfg;
  cfg.n = 24;
  cfg.r = 6;
  cfg.d = 2;
  cfg.trials = 8;
  cfg.seed = 3;
  std::string csv = run_regular(cfg);
  CHECK(csv == run_regular(cfg));
  auto rows = rows_of(csv);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0] == std::vector<std::string>{"n", "r", "d", "trials", "seed",
                                            "frac_rigid"});
  CHECK(std::stod(rows[1][5]) == 1.0);  // 6-regular on 24 vertices: rigid
}

TEST_CASE("giant runner reports accepted, rank-verified trials") {
  GiantConfig cfg;
  cfg.n = 72;
  cfg.p = 0.985;
  cfg.m = 6;
  cfg.k = 2;
  cfg.eta = Rational(5, 6);
  cfg.trials = 2;
  cfg.seed = 11;
  std::string csv = run_giant(cfg);
  CHECK(csv == run_giant(cfg));
  auto rows = rows_of(csv);
  REQUIRE(rows.size() == 3);
  for (int t = 1; t <= 2; ++t) {
    CHECK(rows[t][3] == "1");  // accepted
    CHECK(rows[t][4] == "1");  // rank_verified
    CHECK(std::stod(rows[t][5]) > 0.8);
  }
  // hypothesis failure lands in the note column, not an exception
  GiantConfig bad = cfg;
  bad.n = 60;
  bad.p = 0.5;
  bad.m = 5;
  bad.k = 1;
  bad.eta = Rational(9, 10);
  std::string bcsv = run_giant(bad);
  auto brows = rows_of(bcsv);
  REQUIRE(brows.size() == 3);
  CHECK(brows[1][3] == "0");
  CHECK(brows[1].back() != "");
}

TEST_CASE("codegree runner models") {
  CodegreeConfig cl;
  cl.model = "cliques";
  cl.k_grid = {1, 2, 3};
  cl.seed = 1;
  std::string ccsv = run_codegree(cl);
  CHECK(ccsv == run_codegree(cl));
  auto crows = rows_of(ccsv);
  REQUIRE(crows.size() == 4);
  for (int i = 1; i <= 3; ++i) {
    CHECK(crows[i][0] == "cliques");
    CHECK(crows[i][1] == std::to_string(i));  // k
    CHECK(crows[i][3] == "1");                // rigid at d = k
    CHECK(crows[i][4] == "0");                // not at d = k+1
  }

  CodegreeConfig gp;
  gp.model = "gnp";
  gp.n = 60;
  gp.trials = 5;
  gp.seed = 2;
  std::string gcsv = run_codegree(gp);
  CHECK(gcsv == run_codegree(gp));
  CHECK(gcsv.find("frac_rigid") != std::string::npos);

  CodegreeConfig pt;
  pt.model = "partition";
  pt.n = 60;
  pt.trials = 5;
  pt.seed = 3;
  std::string pcsv = run_codegree(pt);
  CHECK(pcsv == run_codegree(pt));
  CHECK(pcsv.find("frac_at_least") != std::string::npos);

  CodegreeConfig bad;
  bad.model = "nope";
  CHECK_THROWS_AS(run_codegree(bad), Error);
}

TEST_CASE("json dispatch mirrors the direct runners") {
  std::string direct;
  {
    RegularConfig cfg;
    cfg.n = 16;
    cfg.r = 5;
    cfg.d = 2;
    cfg.trials = 4;
    cfg.seed = 9;
    direct = run_regular(cfg);
  }
  std::string via_json = run_experiment_json(
      R"({"experiment":"regular","n":16,"r":5,"d":2,"trials":4,"seed":9})");
  CHECK(via_json == direct);
  // eta accepts "a/b" strings
  std::string giant = run_experiment_json(
      R"({"experiment":"giant","n":72,"p":0.985,"m":6,"k":2,"eta":"5/6",)"
      R"("trials":1,"seed":11})");
  CHECK(rows_of(giant).size() == 2);
  CHECK_THROWS_AS(run_experiment_json(R"({"experiment":"bogus"})"), Error);
  CHECK_THROWS_AS(run_experiment_json("not json"), std::exception);
}

TEST_CASE("line chart renders deterministic SVG") {
  ThresholdConfig cfg;
  cfg.n = 30;
  cfg.d = 1;
  cfg.p_grid = {0.05, 0.1, 0.2, 0.4};
  cfg.trials = 6;
  cfg.seed = 8;
  std::string csv = run_threshold(cfg);
  std::vector<std::string> ys{"frac_rigid", "frac_mindeg"};
  std::string svg = render_line_chart(csv, "p", ys);
  CHECK(svg == render_line_chart(csv, "p", ys));
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(svg.find("polyline") != std::string::npos);
  CHECK(svg.find("frac_rigid") != std::string::npos);  // legend
  CHECK_THROWS_AS(render_line_chart(csv, "absent", ys), Error);
  CHECK_THROWS_AS(render_line_chart("# only comments\n", "p", ys), Error);
}
