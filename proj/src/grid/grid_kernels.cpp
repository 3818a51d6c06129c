#include "ppz/grid/grid_kernels.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <complex>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace ppz::grid {

GridSpec parse_grid(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(item);
  if (parts.size() != 6) throw std::invalid_argument("grid needs XMIN,XMAX,YMIN,YMAX,NX,NY");
  GridSpec g;
  try {
    size_t pos = 0;
    const auto num = [&](const std::string& s) {
      const double v = std::stod(s, &pos);
      if (pos != s.size() || !std::isfinite(v)) throw std::invalid_argument(s);
      return v;
    };
    const auto count = [&](const std::string& s) {
      const int v = std::stoi(s, &pos);
      if (pos != s.size()) throw std::invalid_argument(s);
      return v;
    };
    g.xmin = num(parts[0]);
    g.xmax = num(parts[1]);
    g.ymin = num(parts[2]);
    g.ymax = num(parts[3]);
    g.nx = count(parts[4]);
    g.ny = count(parts[5]);
  } catch (const std::exception&) {
    throw std::invalid_argument("grid: malformed value in '" + text + "'");
  }
  if (g.nx < 2 || g.ny < 2) throw std::invalid_argument("grid: NX and NY must be >= 2");
  if (!(g.xmin < g.xmax) || !(g.ymin < g.ymax)) throw std::invalid_argument("grid: empty range");
  return g;
}

bool avx2_kernel_available() {
#if defined(PPZ_HAVE_AVX2_KERNEL)
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

const char* kernel_name(Kernel k) {
  switch (k) {
    case Kernel::automatic: return "automatic";
    case Kernel::scalar: return "scalar";
    case Kernel::avx2: return "avx2";
  }
  return "?";
}

#if !defined(PPZ_HAVE_AVX2_KERNEL)
void log_abs_poly_avx2(const double*, int, const GridSpec&, double, double*) {
  throw std::runtime_error("AVX2 grid kernel not built");
}
#endif

std::vector<double> log_abs_poly(const RealPoly& p, const GridSpec& g, Kernel kernel) {
  const mp::Real maxc = p.max_abs_coeff();
  std::vector<double> c;
  c.reserve(p.coeffs().size());
  for (const auto& v : p.coeffs()) c.push_back(maxc.is_zero() ? 0.0 : (v / maxc).to_double());
  const double offset = maxc.is_zero() ? 0.0 : mp::log10(mp::abs(maxc)).to_double();
  std::vector<double> out(g.size());
  if (kernel == Kernel::automatic) kernel = avx2_kernel_available() ? Kernel::avx2 : Kernel::scalar;
  if (kernel == Kernel::avx2) {
    if (!avx2_kernel_available()) throw std::runtime_error("AVX2 grid kernel unavailable on this CPU");
    log_abs_poly_avx2(c.data(), static_cast<int>(c.size()), g, offset, out.data());
  } else {
    log_abs_poly_scalar(c.data(), static_cast<int>(c.size()), g, offset, out.data());
  }
  return out;
}

std::vector<double> log_abs_reference(const GridSpec& g) {
  std::vector<double> out(g.size());
  const double two_pi = 2.0 * std::numbers::pi;
  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i) {
      const std::complex<double> z(g.x(i), g.y(j));
      double v = kLogFloor;
      if (z != 0.0) {
        const double m = std::abs(std::sin(two_pi * z) - std::sin(two_pi / z));
        if (m > 0.0 && std::isfinite(m)) v = std::max(std::log10(m), kLogFloor);
        if (std::isinf(m)) v = 308.0;
      } else {
        // essential singularity at the origin
        v = 308.0;
      }
      out[static_cast<size_t>(j) * g.nx + i] = v;
    }
  }
  return out;
}

std::string decimal(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

void write_grid_csv(std::ostream& os, const GridSpec& g, const std::vector<double>& values) {
  if (values.size() != g.size()) throw std::invalid_argument("write_grid_csv: size mismatch");
  os << "x,y,logabs\n";
  for (int j = 0; j < g.ny; ++j) {
    const std::string y = decimal(g.y(j));
    for (int i = 0; i < g.nx; ++i) {
      os << decimal(g.x(i)) << ',' << y << ',' << decimal(values[static_cast<size_t>(j) * g.nx + i]) << '\n';
    }
  }
}

}  // namespace ppz::grid
