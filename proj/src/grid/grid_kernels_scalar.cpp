#include <algorithm>
#include <cmath>

#include "ppz/grid/grid_kernels.hpp"

namespace ppz::grid {

void log_abs_poly_scalar(const double* c, int n, const GridSpec& g, double log_offset, double* out) {
  for (int j = 0; j < g.ny; ++j) {
    const double y = g.y(j);
    for (int i = 0; i < g.nx; ++i) {
      const double x = g.x(i);
      double re = 0.0, im = 0.0;
      for (int m = n - 1; m >= 0; --m) {
        const double t = re * x - im * y + c[m];
        im = re * y + im * x;
        re = t;
      }
      const double mag2 = re * re + im * im;
      const double v = mag2 > 0.0 ? 0.5 * std::log10(mag2) + log_offset : kLogFloor;
      out[static_cast<size_t>(j) * g.nx + i] = std::max(v, kLogFloor);
    }
  }
}

}  // namespace ppz::grid
