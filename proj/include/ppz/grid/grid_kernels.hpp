#pragma once

// Double-precision log-magnitude grids for contour plots, written as CSV
// "x,y,logabs". Polynomial grids have a scalar reference kernel and an AVX2
// kernel chosen at runtime.

#include <iosfwd>
#include <string>
#include <vector>

#include "ppz/period_poly.hpp"

namespace ppz::grid {

struct GridSpec {
  double xmin = -2.5, xmax = 2.5, ymin = -2.5, ymax = 2.5;
  int nx = 501, ny = 501;

  double x(int i) const { return nx == 1 ? xmin : xmin + (xmax - xmin) * i / (nx - 1); }
  double y(int j) const { return ny == 1 ? ymin : ymin + (ymax - ymin) * j / (ny - 1); }
  size_t size() const { return static_cast<size_t>(nx) * static_cast<size_t>(ny); }
};

// Parses "XMIN,XMAX,YMIN,YMAX,NX,NY"; throws std::invalid_argument.
GridSpec parse_grid(const std::string& text);

enum class Kernel { automatic, scalar, avx2 };

constexpr double kLogFloor = -16.0;

bool avx2_kernel_available();
const char* kernel_name(Kernel k);

// out[j * nx + i] = max(floor, log10|sum_m c[m] z^m| + log_offset) at
// z = x(i) + i y(j). Coefficients ascending.
void log_abs_poly_scalar(const double* c, int n, const GridSpec& g, double log_offset, double* out);
void log_abs_poly_avx2(const double* c, int n, const GridSpec& g, double log_offset, double* out);

// Scales by the largest coefficient so the double kernel cannot overflow,
// adding the log scale back afterwards.
std::vector<double> log_abs_poly(const RealPoly& p, const GridSpec& g, Kernel kernel = Kernel::automatic);

// log10|sin 2 pi z - sin 2 pi / z|, clamped like the polynomial grids.
std::vector<double> log_abs_reference(const GridSpec& g);

// Shortest round-trip decimal for a double.
std::string decimal(double v);

// Header "x,y,logabs", then one line per grid point with y as the outer loop.
void write_grid_csv(std::ostream& os, const GridSpec& g, const std::vector<double>& values);

}  // namespace ppz::grid
