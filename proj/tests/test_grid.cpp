#include <doctest.h>

#include <cmath>
#include <sstream>

#include "ppz/grid/grid_kernels.hpp"

using namespace ppz;
using namespace ppz::grid;
using mp::Real;

namespace {

RealPoly sample_poly() {
  // X (X^2 - 4)(X^2 - 1/4)(X^2 - 1)^2 scaled by 4, degree 9
  std::vector<Real> c;
  for (double x : {0.0, 4.0, 0.0, -25.0, 0.0, 42.0, 0.0, -25.0, 0.0, 4.0}) c.emplace_back(x, 128);
  return RealPoly(std::move(c), Parity::odd);
}

}  // namespace

TEST_CASE("grid parsing") {
  const GridSpec g = parse_grid("-1,1,-2,2,3,5");
  CHECK(g.nx == 3);
  CHECK(g.ny == 5);
  CHECK(g.x(0) == -1.0);
  CHECK(g.x(2) == 1.0);
  CHECK(g.y(4) == 2.0);
  CHECK_THROWS_AS(parse_grid("0,1,0,1,1,5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_grid("0,1,0,1,5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_grid("1,0,0,1,5,5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_grid("0,1,0,x,5,5"), std::invalid_argument);
}

TEST_CASE("scalar kernel values") {
  const GridSpec g{-2.5, 2.5, -2.5, 2.5, 11, 11};
  const auto v = log_abs_poly(sample_poly(), g, Kernel::scalar);
  // z = 0 and z = +-2 are roots on this lattice
  CHECK(v[5 * 11 + 5] == kLogFloor);
  CHECK(v[5 * 11 + 1] < -12);
  CHECK(v[5 * 11 + 9] < -12);
  // z = 2.5i: |4 z (z^2-4)(z^2-1/4)(z^2-1)^2|
  const double y = 2.5;
  const double expect = std::log10(4 * y * (y * y + 4) * (y * y + 0.25) * (y * y + 1) * (y * y + 1));
  CHECK(v[10 * 11 + 5] == doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("AVX2 kernel matches the scalar reference") {
  if (!avx2_kernel_available()) {
    MESSAGE("AVX2 kernel not available on this machine; equivalence not exercised");
    return;
  }
  for (const GridSpec& g : {GridSpec{-2.5, 2.5, -2.5, 2.5, 101, 37}, GridSpec{-1, 3, -0.5, 0.7, 7, 3},
                            GridSpec{-2, 2, -2, 2, 2, 2}}) {
    const auto a = log_abs_poly(sample_poly(), g, Kernel::scalar);
    const auto b = log_abs_poly(sample_poly(), g, Kernel::avx2);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) {
      // values above about -10 carry at least six correct digits in both
      if (a[i] > -10.0) CHECK(std::fabs(a[i] - b[i]) < 1e-9);
    }
  }
}

TEST_CASE("CSV contract") {
  const GridSpec g{-2.5, 2.5, -2.5, 2.5, 2, 2};
  const auto v = log_abs_poly(sample_poly(), g);
  std::ostringstream os;
  write_grid_csv(os, g, v);
  std::istringstream is(os.str());
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(is, line)) lines.push_back(line);
  REQUIRE(lines.size() == 5);
  CHECK(lines[0] == "x,y,logabs");
  CHECK(lines[1].rfind("-2.5,-2.5,", 0) == 0);
  CHECK(lines[2].rfind("2.5,-2.5,", 0) == 0);
  CHECK(lines[3].rfind("-2.5,2.5,", 0) == 0);
  CHECK(lines[4].rfind("2.5,2.5,", 0) == 0);
  // values read back exactly
  for (size_t i = 1; i < lines.size(); ++i) {
    const std::string val = lines[i].substr(lines[i].rfind(',') + 1);
    CHECK(std::stod(val) == v[i - 1]);
    CHECK(decimal(std::stod(val)) == val);
  }
  CHECK_THROWS_AS(write_grid_csv(os, g, {1.0}), std::invalid_argument);
}

TEST_CASE("S(z) grid") {
  const GridSpec g{-1.5, 1.5, -1.5, 1.5, 31, 31};
  const auto v = log_abs_reference(g);
  // S(1) = 0 exactly in exact arithmetic; the double value is tiny
  CHECK(v[15 * 31 + 25] < -10);
  // the origin is an essential singularity, flagged as huge
  CHECK(v[15 * 31 + 15] > 300);
}
