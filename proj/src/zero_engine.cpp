#include "ppz/zero_engine.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>

namespace ppz {

using mp::Complex;
using mp::Precision;
using mp::Real;

Contour Contour::circle(Real radius, int samples) {
  if (radius <= 0L) throw std::invalid_argument("Contour: radius must be positive");
  Contour c;
  c.kind = Kind::circle;
  c.radii.push_back(std::move(radius));
  c.samples = samples;
  return c;
}

Contour Contour::annulus(Real inner, Real outer, int samples) {
  if (inner <= 0L || !(inner < outer)) throw std::invalid_argument("Contour: need 0 < inner < outer");
  Contour c;
  c.kind = Kind::annulus_boundary;
  c.radii.push_back(std::move(inner));
  c.radii.push_back(std::move(outer));
  c.samples = samples;
  return c;
}

namespace {

struct CirclePoint {
  Real f;   // real_circle_function
  Real im;  // Im q(e^{it})
};

CirclePoint circle_point(const RealPoly& q, int M, const Real& theta) {
  const Precision p = theta.precision();
  Complex z(p);
  sin_cos(z.im, z.re, theta);
  const Complex v = q(z);
  Real s(p), c(p);
  Real mt = theta * static_cast<long>(M);
  sin_cos(s, c, mt);
  Real f = c * v.re;
  f += s * v.im;
  f *= 2L;
  return {std::move(f), v.im};
}

int sign_with_floor(const Real& v, const Real& floor) {
  if (mpfr_cmpabs(v.get(), floor.get()) <= 0) return 0;
  return v.sign();
}

// Modified regula falsi (Illinois) on a bracket with fa, fb of opposite sign.
Real illinois(const std::function<Real(const Real&)>& fn, Real a, Real b, Real fa, Real fb, const Real& tol) {
  int side = 0;
  for (int iter = 0; iter < 400; ++iter) {
    if (mp::abs(b - a) <= tol) break;
    Real c = b - fb * (b - a) / (fb - fa);
    // fall back to bisection when the secant point degenerates
    if (!c.is_finite() || (c - a).sign() == (c - b).sign()) c = (a + b) / 2L;
    Real fc = fn(c);
    if (fc.is_zero()) return c;
    if (fc.sign() == fb.sign()) {
      // c replaces b; keep a and halve fa if this happens twice in a row
      b = std::move(c);
      fb = std::move(fc);
      if (side == -1) fa /= 2L;
      side = -1;
    } else {
      a = std::move(b);
      fa = std::move(fb);
      b = std::move(c);
      fb = std::move(fc);
      side = +1;
    }
  }
  return (a + b) / 2L;
}

}  // namespace

Real real_circle_function(const RealPoly& q, int M, const Real& theta) {
  return circle_point(q, M, theta).f;
}

CircleZeros circle_zeros_by_intervals(const RealPoly& q, int N) {
  if (N < 2 || N % 2 != 0) throw std::invalid_argument("circle_zeros_by_intervals: N must be even and positive");
  const int M = N / 2;
  const Precision prec = q.precision();
  const Precision wp = prec + 32;
  const Real pi = Real::pi(wp);
  const Real two_pi = pi * 2L;
  const Real tol = Real::two_pow(-static_cast<long>(prec) / 2, wp);

  Real scale(wp);
  for (const auto& c : q.coeffs()) scale += mp::abs(c);
  const Real lattice_floor = Real::two_pow(-static_cast<long>(prec) / 2, wp) * scale;
  const Real noise_floor = Real::two_pow(-static_cast<long>(prec) + 16, wp) * scale;

  CircleZeros out;
  out.M = M;
  out.interval_hits.assign(static_cast<size_t>(N), 0);

  const Real step = pi / static_cast<long>(M);
  const auto lattice = [&](int j) { return pi / static_cast<long>(2 * M) + step * static_cast<long>(j); };
  const auto fn = [&](const Real& t) { return circle_point(q, M, t).f; };

  for (int j = 0; j < N; ++j) {
    const Real lo = lattice(j);
    const CirclePoint at_lo = circle_point(q, M, lo);
    if (mpfr_cmpabs(at_lo.im.get(), lattice_floor.get()) <= 0) {
      out.lattice_hits.push_back(j);
      Real a = lo;
      if (a >= two_pi) a -= two_pi;
      out.angles.push_back(std::move(a));
      ++out.interval_hits[static_cast<size_t>(j)];
    }

    // Odd subdivision counts keep theta = 0 and theta = pi (the double zeros
    // at z = +-1) off the sample grid.
    std::vector<Real> found;
    bool imag_changes = false;
    for (int subdiv : {7, 21, 63}) {
      found.clear();
      imag_changes = false;
      Real prev_t = lo;
      Real prev_f = at_lo.f;
      int prev_is = sign_with_floor(at_lo.im, lattice_floor);
      int prev_fs = sign_with_floor(at_lo.f, noise_floor);
      if (prev_is == 0) imag_changes = true;
      for (int s = 1; s <= subdiv; ++s) {
        Real t = lo + step * static_cast<long>(s) / static_cast<long>(subdiv);
        CirclePoint cp = circle_point(q, M, t);
        const int is = sign_with_floor(cp.im, lattice_floor);
        if (is == 0 || (prev_is != 0 && is != prev_is)) imag_changes = true;
        if (is != 0) prev_is = is;
        const int fs = sign_with_floor(cp.f, noise_floor);
        // The far lattice endpoint belongs to the next interval.
        const bool endpoint_hit = (s == subdiv) && fs == 0;
        if (fs != 0 && prev_fs != 0 && fs != prev_fs && !endpoint_hit) {
          found.push_back(illinois(fn, prev_t, t, prev_f, cp.f, tol));
        }
        if (fs != 0) {
          prev_t = t;
          prev_f = std::move(cp.f);
          prev_fs = fs;
        }
      }
      // Without a sign change of Im q the arc holds an odd number of zeros;
      // refine the sampling only where an even count is possible.
      if (!imag_changes) break;
      if (found.size() % 2 == 1) break;
    }
    if (imag_changes) out.skipped_intervals.push_back(j);
    out.certified_by_sign_change += static_cast<int>(found.size());
    out.interval_hits[static_cast<size_t>(j)] += static_cast<int>(found.size());
    for (auto& a : found) {
      if (a >= two_pi) a -= two_pi;
      if (a < 0L) a += two_pi;
      out.angles.push_back(std::move(a));
    }
  }
  std::sort(out.angles.begin(), out.angles.end(), [](const Real& a, const Real& b) { return a < b; });
  return out;
}

namespace {

using cd = std::complex<double>;

std::vector<cd> aberth_starts(int degree) {
  // Split between radii 1/2, 1 and 2, with irrational offsets so no start
  // sits on the real axis or on a symmetric copy of another.
  std::vector<cd> z;
  const int outer = degree / 4;
  const int inner = degree / 4;
  const int mid = degree - outer - inner;
  const auto ring = [&](int count, double radius, double offset) {
    for (int i = 0; i < count; ++i) {
      const double t = 2.0 * std::numbers::pi * (i + offset) / count;
      z.push_back(std::polar(radius, t));
    }
  };
  ring(inner, 0.5, 0.31);
  ring(mid, 1.0, 0.17);
  ring(outer, 2.0, 0.43);
  return z;
}

void aberth_double(const std::vector<double>& c, std::vector<cd>& z) {
  const int n = static_cast<int>(z.size());
  std::vector<bool> done(static_cast<size_t>(n), false);
  for (int iter = 0; iter < 600; ++iter) {
    bool all = true;
    for (int i = 0; i < n; ++i) {
      if (done[i]) continue;
      cd v = 0, d = 0;
      for (auto it = c.rbegin(); it != c.rend(); ++it) {
        d = d * z[i] + v;
        v = v * z[i] + *it;
      }
      if (v == 0.0) {
        done[i] = true;
        continue;
      }
      const cd ratio = v / d;
      cd s = 0;
      for (int j = 0; j < n; ++j)
        if (j != i) s += 1.0 / (z[i] - z[j]);
      const cd corr = ratio / (1.0 - ratio * s);
      if (!std::isfinite(corr.real()) || !std::isfinite(corr.imag())) continue;
      z[i] -= corr;
      if (std::abs(corr) < 1e-14 * std::max(1.0, std::abs(z[i]))) {
        done[i] = true;
      } else {
        all = false;
      }
    }
    if (all) break;
  }
}

}  // namespace

RootRefinement refine_all_roots(const RealPoly& p) {
  const int deg = p.degree();
  if (deg < 1) throw std::invalid_argument("refine_all_roots: degree must be >= 1");
  const Precision prec = p.precision();
  const Precision wp = prec + 64;

  const Real maxc = p.max_abs_coeff();
  std::vector<double> cd_coeffs;
  for (const auto& c : p.coeffs()) cd_coeffs.push_back((c / maxc).to_double());
  const std::vector<cd> starts = aberth_starts(deg);
  std::vector<cd> zd = starts;
  aberth_double(cd_coeffs, zd);

  const RealPoly pw = p.with_precision(wp);
  std::vector<Complex> z;
  z.reserve(static_cast<size_t>(deg));
  for (const auto& v : zd) z.emplace_back(v.real(), v.imag(), wp);

  const Real tol_rel = Real::two_pow(-static_cast<long>(prec) / 2, wp);
  std::vector<bool> active(static_cast<size_t>(deg), true);
  std::vector<Real> last_step(static_cast<size_t>(deg), Real(wp));
  Complex value(wp), deriv(wp);
  Real dr(wp), di(wp), nrm(wp), sre(wp), sim(wp), t(wp);
  const int max_iter = 2 * static_cast<int>(wp) + 200;
  int iter = 0;
  for (; iter < max_iter; ++iter) {
    bool any = false;
    for (int i = 0; i < deg; ++i) {
      if (!active[i]) continue;
      any = true;
      pw.evaluate_with_derivative(z[i], value, deriv);
      if (value.re.is_zero() && value.im.is_zero()) {
        active[i] = false;
        continue;
      }
      const Complex ratio = value / deriv;
      sre.assign(0L);
      sim.assign(0L);
      for (int j = 0; j < deg; ++j) {
        if (j == i) continue;
        mpfr_sub(dr.get(), z[i].re.get(), z[j].re.get(), MPFR_RNDN);
        mpfr_sub(di.get(), z[i].im.get(), z[j].im.get(), MPFR_RNDN);
        mpfr_fmma(nrm.get(), dr.get(), dr.get(), di.get(), di.get(), MPFR_RNDN);
        mpfr_div(t.get(), dr.get(), nrm.get(), MPFR_RNDN);
        sre += t;
        mpfr_div(t.get(), di.get(), nrm.get(), MPFR_RNDN);
        sim -= t;
      }
      Complex denom(Real(1L, wp), Real(wp));
      denom -= ratio * Complex(sre, sim);
      const Complex corr = ratio / denom;
      z[i] -= corr;
      last_step[i] = mp::abs(corr);
      Real bound = tol_rel * mp::max(Real(1L, wp), mp::abs(z[i]));
      if (last_step[i] <= bound) active[i] = false;
    }
    if (!any) break;
  }
  std::vector<Complex> offending;
  for (int i = 0; i < deg; ++i) {
    if (active[i]) offending.emplace_back(starts[i].real(), starts[i].imag(), 64);
  }
  if (!offending.empty()) {
    throw RootRefinementError("refine_all_roots: " + std::to_string(offending.size()) +
                                  " roots did not converge after " + std::to_string(iter) + " iterations",
                              std::move(offending));
  }

  RootRefinement out;
  out.iterations = iter;
  // Cluster by single linkage within 2^(-prec/4).
  const Real cluster_tol = Real::two_pow(-static_cast<long>(prec) / 4, wp);
  std::vector<int> parent(static_cast<size_t>(deg));
  std::iota(parent.begin(), parent.end(), 0);
  const auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int i = 0; i < deg; ++i) {
    for (int j = i + 1; j < deg; ++j) {
      Real d = mp::abs(z[i] - z[j]);
      if (d <= cluster_tol * mp::max(Real(1L, wp), mp::abs(z[i]))) parent[find(i)] = find(j);
    }
  }
  std::vector<int> root_of(static_cast<size_t>(deg));
  for (int i = 0; i < deg; ++i) root_of[i] = find(i);
  std::vector<bool> seen(static_cast<size_t>(deg), false);
  for (int i = 0; i < deg; ++i) {
    const int r = root_of[i];
    if (seen[r]) continue;
    seen[r] = true;
    RootCluster cl;
    cl.center = Complex(wp);
    cl.multiplicity = 0;
    for (int j = 0; j < deg; ++j) {
      if (root_of[j] != r) continue;
      cl.center += z[j];
      ++cl.multiplicity;
    }
    cl.center /= Real(static_cast<long>(cl.multiplicity), wp);
    out.clusters.push_back(std::move(cl));
  }
  out.roots = std::move(z);
  return out;
}

namespace {

Complex circle_point_at(const Real& radius, const Real& t) { return Complex::polar(radius, t); }

Real phase_step(const Complex& a, const Complex& b) {
  // arg(b / a) on the principal branch
  Complex ratio = b * conj(a);
  return arg(ratio);
}

double circle_winding(const AnalyticFn& fn, const Real& radius, int samples, long& evals) {
  const Precision p = radius.precision();
  const Real two_pi = Real::pi(p) * 2L;
  const Real half_pi = Real::pi(p) / 2L;
  double total = 0.0;

  struct Seg {
    Real t0, t1;
    Complex f0, f1;
    int depth;
  };
  const auto eval = [&](const Real& t) {
    ++evals;
    Complex v = fn(circle_point_at(radius, t));
    if (v.re.is_zero() && v.im.is_zero()) throw ContourError("winding_count: function vanishes on the contour");
    return v;
  };

  Complex first = eval(Real(p));
  Complex prev = first;
  Real prev_t(p);
  for (int i = 1; i <= samples; ++i) {
    Real t = two_pi * static_cast<long>(i) / static_cast<long>(samples);
    Complex cur = (i == samples) ? first : eval(t);
    std::vector<Seg> stack{{prev_t, t, prev, cur, 0}};
    while (!stack.empty()) {
      Seg s = std::move(stack.back());
      stack.pop_back();
      Real d = phase_step(s.f0, s.f1);
      if (s.depth >= 48) {
        throw ContourError("winding_count: phase step stays >= pi/2 near t = " + s.t0.to_string(12) +
                           " (possible zero on the contour)");
      }
      Real mid = (s.t0 + s.t1) / 2L;
      Complex fm = eval(mid);
      if (mp::abs(d) < half_pi) {
        // the two halves must agree with the direct step
        const Real d0 = phase_step(s.f0, fm);
        const Real d1 = phase_step(fm, s.f1);
        if (mp::abs(d0) < half_pi && mp::abs(d1) < half_pi && mp::abs(d0 + d1 - d) < 1e-9) {
          total += d.to_double();
          continue;
        }
      }
      // push right half first so the left half is processed first
      stack.push_back({mid, s.t1, fm, s.f1, s.depth + 1});
      stack.push_back({s.t0, mid, s.f0, std::move(fm), s.depth + 1});
    }
    prev = std::move(cur);
    prev_t = std::move(t);
  }
  return total / (2.0 * std::numbers::pi);
}

struct CircleExtremum {
  Real value;
  Real t;
};

CircleExtremum circle_extremum(const std::function<Real(const Real&)>& g, Precision p, int samples, bool maximize) {
  const Real two_pi = Real::pi(p) * 2L;
  std::vector<Real> ts, vs;
  ts.reserve(static_cast<size_t>(samples));
  vs.reserve(static_cast<size_t>(samples));
  for (int i = 0; i < samples; ++i) {
    ts.push_back(two_pi * static_cast<long>(i) / static_cast<long>(samples));
    vs.push_back(g(ts.back()));
  }
  const auto better = [&](const Real& a, const Real& b) { return maximize ? a > b : a < b; };
  std::vector<int> cands;
  for (int i = 0; i < samples; ++i) {
    const Real& l = vs[(i + samples - 1) % samples];
    const Real& r = vs[(i + 1) % samples];
    if (!better(l, vs[i]) && !better(r, vs[i])) cands.push_back(i);
  }
  std::sort(cands.begin(), cands.end(), [&](int a, int b) { return better(vs[a], vs[b]); });
  if (cands.size() > 8) cands.resize(8);

  int best_i = 0;
  for (int i = 1; i < samples; ++i)
    if (better(vs[i], vs[best_i])) best_i = i;
  CircleExtremum best{vs[best_i], ts[best_i]};
  const Real h = two_pi / static_cast<long>(samples);
  const Real inv_phi = (mp::sqrt(Real(5L, p)) - 1L) / 2L;
  for (int i : cands) {
    // golden-section search on [t_i - h, t_i + h]
    Real a = ts[i] - h;
    Real b = ts[i] + h;
    Real c = b - (b - a) * inv_phi;
    Real d = a + (b - a) * inv_phi;
    Real gc = g(c), gd = g(d);
    for (int it = 0; it < 60; ++it) {
      if (better(gc, gd)) {
        b = d;
        d = c;
        gd = gc;
        c = b - (b - a) * inv_phi;
        gc = g(c);
      } else {
        a = c;
        c = d;
        gc = gd;
        d = a + (b - a) * inv_phi;
        gd = g(d);
      }
    }
    if (better(gc, best.value)) best = {gc, c};
    if (better(gd, best.value)) best = {gd, d};
  }
  return best;
}

}  // namespace

WindingResult winding_count(const AnalyticFn& fn, const Contour& contour) {
  WindingResult res;
  const auto one = [&](const Real& r) {
    const double w = circle_winding(fn, r, contour.samples, res.evaluations);
    const double snapped = std::round(w);
    res.snap_distance = std::max(res.snap_distance, std::fabs(w - snapped));
    return static_cast<long>(snapped);
  };
  if (contour.kind == Contour::Kind::circle) {
    res.winding = one(contour.radii.at(0));
  } else {
    const long inner = one(contour.radii.at(0));
    const long outer = one(contour.radii.at(1));
    res.winding = outer - inner;
  }
  if (res.snap_distance >= 0.01) {
    throw ContourError("winding_count: total phase is " + std::to_string(res.snap_distance) +
                       " away from an integer multiple of 2 pi");
  }
  return res;
}

namespace {

template <typename Result>
Result contour_extremum(const AnalyticFn& fn, const Contour& contour, bool maximize) {
  Result best{Real(contour.precision()), Complex(contour.precision())};
  bool have = false;
  for (const Real& r : contour.radii) {
    const auto g = [&](const Real& t) { return abs(fn(circle_point_at(r, t))); };
    CircleExtremum e = circle_extremum(g, r.precision(), contour.samples, maximize);
    const bool take = !have || (maximize ? e.value > best.value : e.value < best.value);
    if (take) {
      best.value = e.value;
      best.point = circle_point_at(r, e.t);
      have = true;
    }
  }
  return best;
}

}  // namespace

BoundaryMin boundary_min(const AnalyticFn& fn, const Contour& contour) {
  return contour_extremum<BoundaryMin>(fn, contour, false);
}

BoundaryMax boundary_max(const AnalyticFn& fn, const Contour& contour) {
  return contour_extremum<BoundaryMax>(fn, contour, true);
}

RoucheReport rouche_compare(const AnalyticFn& f, const AnalyticFn& g, const Contour& contour) {
  const AnalyticFn diff = [&](const Complex& z) { return f(z) - g(z); };
  RoucheReport rep;
  rep.max_difference = boundary_max(diff, contour).value;
  rep.min_reference = boundary_min(g, contour).value;
  rep.verified = rep.max_difference < rep.min_reference;
  if (rep.verified) {
    rep.winding_f = winding_count(f, contour).winding;
    rep.winding_g = winding_count(g, contour).winding;
    rep.windings_equal = *rep.winding_f == *rep.winding_g;
  }
  return rep;
}

AnalyticFn annulus_reference_function() {
  return [](const Complex& z) {
    const Real two_pi = Real::pi(z.precision()) * 2L;
    Complex a = z * two_pi;
    Complex b = inverse(z) * two_pi;
    return sin(a) - sin(b);
  };
}

AnalyticFn q_difference_function(const RealPoly& q) {
  return [q](const Complex& z) { return q(z) - q(inverse(z)); };
}

BoundaryMax sin_approx_sup(const RealPoly& q, const Real& radius, int samples) {
  const AnalyticFn fn = [&q](const Complex& z) {
    const Real two_pi = Real::pi(z.precision()) * 2L;
    return sin(z * two_pi) - q(z);
  };
  return boundary_max(fn, Contour::circle(radius, samples));
}

ImagPartZeros imag_part_zeros(const RealPoly& q, int samples) {
  const Precision p = q.precision();
  const Real two_pi = Real::pi(p) * 2L;
  Real scale(p);
  for (const auto& c : q.coeffs()) scale += mp::abs(c);
  const Real floor = Real::two_pow(-static_cast<long>(p) / 2, p) * scale;
  ImagPartZeros out;
  std::vector<int> signs;
  for (int i = 0; i < samples; ++i) {
    Real t = two_pi * static_cast<long>(i) / static_cast<long>(samples);
    const Real im = q(Complex::polar(Real(1L, p), t)).im;
    signs.push_back(sign_with_floor(im, floor));
  }
  const Real one(1L, p);
  out.at_zero = q(Complex::polar(one, Real(p))).im;
  out.at_pi = q(Complex::polar(one, Real::pi(p))).im;
  int first = 0;
  int prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (first == 0) first = s;
    if (prev != 0 && s != prev) ++out.sign_changes;
    prev = s;
  }
  if (prev != 0 && first != 0 && prev != first) ++out.sign_changes;
  return out;
}

TrivialRootClassification classify_trivial_roots(const std::vector<Complex>& roots, const Real& tol) {
  const Precision p = tol.precision();
  struct Site {
    double x;
    int expected;
    int found;
  };
  std::vector<Site> sites{{0.0, 1, 0}, {1.0, 2, 0}, {-1.0, 2, 0}, {2.0, 1, 0},
                          {-2.0, 1, 0}, {0.5, 1, 0}, {-0.5, 1, 0}};
  TrivialRootClassification out;
  for (const auto& r : roots) {
    bool matched = false;
    for (auto& s : sites) {
      Complex d = r - Complex(s.x, 0.0, p);
      if (abs(d) <= tol) {
        ++s.found;
        matched = true;
        break;
      }
    }
    if (matched) {
      ++out.trivial_count;
    } else {
      out.nontrivial.push_back(r);
    }
  }
  out.multiplicities_ok =
      std::all_of(sites.begin(), sites.end(), [](const Site& s) { return s.found == s.expected; });
  return out;
}

ZeroReport zero_report(int weight, int form_index, const RealPoly& r, const RealPoly& q,
                       const ZeroReportOptions& options) {
  const int w = weight - 2;
  const Precision prec = r.precision();
  ZeroReport rep;
  rep.weight = weight;
  rep.form_index = form_index;
  rep.trivial = trivial_zero_certificate(r, w);
  rep.circle = circle_zeros_by_intervals(q, w);
  rep.n_circle_zeros = static_cast<int>(rep.circle.angles.size());

  const RootRefinement refined = refine_all_roots(r);
  const Real triv_tol = Real::two_pow(-static_cast<long>(prec) / 8, prec);
  const TrivialRootClassification cls = classify_trivial_roots(refined.roots, triv_tol);
  rep.n_refined_trivial = cls.trivial_count;
  rep.trivial_multiplicities_ok = cls.multiplicities_ok;

  const Real threshold(options.circle_threshold, prec);
  const Real near_circle(1e-10, prec);
  const Real two_pi = Real::pi(prec) * 2L;
  rep.max_modulus_deviation = Real(prec);
  rep.max_cross_angle_gap = Real(prec);
  int near_count = 0;
  for (const auto& z : cls.nontrivial) {
    Real dev = mp::abs(abs(z) - 1L);
    if (dev > rep.max_modulus_deviation) rep.max_modulus_deviation = dev;
    if (dev < threshold) {
      ++rep.n_refined_on_circle;
    } else {
      rep.off_circle_roots.push_back(z);
    }
    if (dev < near_circle && !rep.circle.angles.empty()) {
      ++near_count;
      Real a = arg(z);
      if (a < 0L) a += two_pi;
      Real best = two_pi;
      for (const auto& b : rep.circle.angles) {
        Real d = mp::abs(a - b);
        if (d > Real::pi(prec)) d = two_pi - d;
        if (d < best) best = d;
      }
      if (best > rep.max_cross_angle_gap) rep.max_cross_angle_gap = best;
    }
  }
  const int expected = (w - 1) - 9;
  const Real cross_tol = Real::two_pow(-static_cast<long>(prec) / 4, prec);
  rep.accounted = rep.trivial.all_pass() && rep.trivial_multiplicities_ok && rep.n_circle_zeros == expected &&
                  rep.n_refined_on_circle == expected && near_count == expected &&
                  rep.max_cross_angle_gap <= cross_tol;
  return rep;
}

}  // namespace ppz
