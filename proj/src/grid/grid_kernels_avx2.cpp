#include <immintrin.h>

#include <algorithm>
#include <cmath>

#include "ppz/grid/grid_kernels.hpp"

namespace ppz::grid {

// Four x values per lane group, one y per row; complex Horner in registers.
void log_abs_poly_avx2(const double* c, int n, const GridSpec& g, double log_offset, double* out) {
  alignas(32) double mag2[4];
  for (int j = 0; j < g.ny; ++j) {
    const __m256d vy = _mm256_set1_pd(g.y(j));
    double* row = out + static_cast<size_t>(j) * g.nx;
    int i = 0;
    for (; i + 4 <= g.nx; i += 4) {
      const __m256d vx = _mm256_setr_pd(g.x(i), g.x(i + 1), g.x(i + 2), g.x(i + 3));
      __m256d re = _mm256_setzero_pd();
      __m256d im = _mm256_setzero_pd();
      for (int m = n - 1; m >= 0; --m) {
        const __m256d cm = _mm256_set1_pd(c[m]);
        // re' = re x - im y + c, im' = re y + im x
        const __m256d t = _mm256_add_pd(_mm256_sub_pd(_mm256_mul_pd(re, vx), _mm256_mul_pd(im, vy)), cm);
        im = _mm256_add_pd(_mm256_mul_pd(re, vy), _mm256_mul_pd(im, vx));
        re = t;
      }
      _mm256_store_pd(mag2, _mm256_add_pd(_mm256_mul_pd(re, re), _mm256_mul_pd(im, im)));
      for (int l = 0; l < 4; ++l) {
        const double v = mag2[l] > 0.0 ? 0.5 * std::log10(mag2[l]) + log_offset : kLogFloor;
        row[i + l] = std::max(v, kLogFloor);
      }
    }
    for (; i < g.nx; ++i) {
      const double x = g.x(i), y = g.y(j);
      double re = 0.0, im = 0.0;
      for (int m = n - 1; m >= 0; --m) {
        const double t = re * x - im * y + c[m];
        im = re * y + im * x;
        re = t;
      }
      const double m2 = re * re + im * im;
      row[i] = std::max(m2 > 0.0 ? 0.5 * std::log10(m2) + log_offset : kLogFloor, kLogFloor);
    }
  }
}

}  // namespace ppz::grid
