#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "ppz/report.hpp"

using namespace ppz;
using namespace ppz::report;

namespace {

void strip_times(json& j) {
  if (j.is_object()) {
    j.erase("wall_time_seconds");
    for (auto& [k, v] : j.items()) strip_times(v);
  } else if (j.is_array()) {
    for (auto& v : j) strip_times(v);
  }
}

std::vector<std::pair<std::string, std::string>> root_multiset(const json& doc) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& r : doc["nontrivial_roots"]) {
    // 30 digits are far above the refinement noise and far below root spacing
    out.emplace_back(r["root"][0].get<std::string>().substr(0, 20), r["root"][1].get<std::string>().substr(0, 20));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("weight range parsing") {
  CHECK(parse_weight_range("12..32") == std::pair{12, 32});
  CHECK(parse_weight_range("24") == std::pair{24, 24});
  CHECK_THROWS_AS(parse_weight_range("12.."), std::invalid_argument);
  CHECK_THROWS_AS(parse_weight_range("x"), std::invalid_argument);
  VerifyConfig cfg;
  cfg.weight_min = 13;
  cfg.weight_max = 13;
  CHECK_THROWS_AS(validate(cfg), std::invalid_argument);
  cfg.weight_min = cfg.weight_max = 10;
  CHECK_THROWS_AS(validate(cfg), std::invalid_argument);
}

TEST_CASE("verify report is deterministic and complete") {
  VerifyConfig cfg;
  cfg.weight_min = 12;
  cfg.weight_max = 16;
  Outcome a = run_verify(cfg);
  cfg.threads = 1;
  Outcome b = run_verify(cfg);
  CHECK(a.pass);
  strip_times(a.doc);
  strip_times(b.doc);
  CHECK(a.doc.dump() == b.doc.dump());
  CHECK(a.doc["schema_version"] == kSchemaVersion);
  const json& w = a.doc["weights"];
  REQUIRE(w.size() == 3);
  CHECK(w[1]["dim"] == 0);
  CHECK(w[1]["forms"].empty());
  const json& f = w[0]["forms"][0];
  for (const char* key : {"hecke", "functional_equation", "central_value", "l_value_bounds", "cocycle",
                          "split_reconstruction", "trivial_zeros", "zeros"}) {
    CHECK(f.contains(key));
  }
  CHECK(f["zeros"]["accounted"] == true);
  CHECK(f["trivial_zeros"].size() == 11);
  CHECK(f["t2_eigenvalue"].is_string());
  CHECK(a.doc["annulus_certificate"]["winding"] == 10);
}

TEST_CASE("large weights carry the annulus comparison") {
  VerifyConfig cfg;
  cfg.weight_min = cfg.weight_max = 80;
  const Outcome o = run_verify(cfg);
  CHECK(o.pass);
  for (const auto& f : o.doc["weights"][0]["forms"]) {
    CHECK(f.contains("sine_approximation"));
    CHECK(f["annulus_comparison"]["pass"] == true);
  }
}

TEST_CASE("plot grid file") {
  const auto dir = std::filesystem::temp_directory_path() / "ppz_test_report";
  std::filesystem::create_directories(dir);
  VerifyConfig cfg;
  cfg.grid = grid::parse_grid("-2.5,2.5,-2.5,2.5,2,2");
  const std::string path = (dir / "g.csv").string();
  const Outcome o = run_plotgrid(12, 0, cfg, path);
  CHECK(o.doc["degree"] == 9);
  std::ifstream is(path);
  std::string line;
  int n = 0;
  std::getline(is, line);
  CHECK(line == "x,y,logabs");
  while (std::getline(is, line)) ++n;
  CHECK(n == 4);
  CHECK_THROWS_AS(run_plotgrid(12, 1, cfg, path), std::invalid_argument);
  const Outcome fig = run_plotgrid(34, 0, cfg, path);
  CHECK(fig.doc["degree"] == 31);
  CHECK(fig.doc.contains("note"));
}

TEST_CASE("Bernoulli report") {
  const Outcome a = run_bernoulli(2, 10, 256);
  CHECK(a.pass);
  CHECK(a.doc["degree"] == 9);
  const Outcome b = run_bernoulli(8, 10, 256);
  CHECK(root_multiset(a.doc) == root_multiset(b.doc));
  CHECK(a.doc["trivial_multiplicities"] == b.doc["trivial_multiplicities"]);
  CHECK_THROWS_AS(run_bernoulli(3, 10, 256), std::invalid_argument);
  CHECK_THROWS_AS(run_bernoulli(0, 10, 256), std::invalid_argument);
}

TEST_CASE("eigenform and L-value listings") {
  VerifyConfig cfg;
  cfg.weight_min = cfg.weight_max = 12;
  const Outcome e = run_eigenforms(cfg, 5);
  const json& a = e.doc["weights"][0]["forms"][0]["coefficients"];
  REQUIRE(a.size() == 5);
  CHECK(a[1] == "-2.4e1");
  CHECK(a[4] == "4.83e3");
  const Outcome l = run_lvalues(cfg);
  CHECK(l.pass);
  CHECK(l.doc["weights"][0]["forms"][0]["values"].size() == 11);
}
