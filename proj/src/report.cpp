#include "ppz/report.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "ppz/exact_series.hpp"

namespace ppz::report {

using mp::Complex;
using mp::Precision;
using mp::Real;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

constexpr Precision kContourPrec = 128;

Real half_prec_tol(long prec_bits) { return Real::two_pow(-prec_bits / 2, 64); }

// Runs fn(i) for i in [0, n) on a small pool; results land by index.
template <typename Fn>
void parallel_for(int n, int threads, Fn fn) {
  if (threads <= 0) threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  threads = std::min(threads, n);
  if (threads <= 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (int i = next++; i < n; i = next++) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

Real relative(const Real& diff, const Real& scale) {
  if (scale.is_zero()) return mp::abs(diff);
  return mp::abs(diff) / scale;
}

json config_json(const VerifyConfig& cfg) {
  json c;
  c["weights"] = std::to_string(cfg.weight_min) + ".." + std::to_string(cfg.weight_max);
  c["prec_bits"] = cfg.prec_bits > 0 ? json(std::to_string(cfg.prec_bits)) : json("auto");
  c["n_terms"] = cfg.n_terms > 0 ? json(std::to_string(cfg.n_terms)) : json("auto");
  c["grid"] = {grid::decimal(cfg.grid.xmin), grid::decimal(cfg.grid.xmax), grid::decimal(cfg.grid.ymin),
               grid::decimal(cfg.grid.ymax), std::to_string(cfg.grid.nx), std::to_string(cfg.grid.ny)};
  return c;
}

std::vector<int> primes_up_to(int n) {
  std::vector<bool> comp(static_cast<size_t>(n) + 1, false);
  std::vector<int> out;
  for (int i = 2; i <= n; ++i) {
    if (comp[i]) continue;
    out.push_back(i);
    for (long j = static_cast<long>(i) * i; j <= n; j += i) comp[j] = true;
  }
  return out;
}

json hecke_checks(const Eigenform& f) {
  const int n = f.n_coeffs();
  const int k = f.weight;
  const Precision p = static_cast<Precision>(f.prec_bits);
  Real worst_mult(64), worst_power(64), worst_deligne(64);
  for (int a = 2; a <= n; ++a) {
    for (int b = a + 1; static_cast<long>(a) * b <= n; ++b) {
      if (std::gcd(a, b) != 1) continue;
      const Real& lhs = f.coeff(a * b);
      Real rhs = f.coeff(a) * f.coeff(b);
      Real r = relative(lhs - rhs, mp::abs(lhs) + mp::abs(rhs) + Real(1L, p));
      if (r > worst_mult) worst_mult = Real(r, 64);
    }
  }
  for (int q : primes_up_to(n)) {
    const Real pk1 = mp::pow(Real(static_cast<long>(q), p), k - 1);
    if (static_cast<long>(q) * q <= n) {
      const Real& lhs = f.coeff(q * q);
      Real rhs = f.coeff(q) * f.coeff(q) - pk1;
      Real r = relative(lhs - rhs, mp::abs(lhs) + pk1);
      if (r > worst_power) worst_power = Real(r, 64);
    }
    Real ratio = mp::abs(f.coeff(q)) / (mp::sqrt(pk1) * 2L);
    if (ratio > worst_deligne) worst_deligne = Real(ratio, 64);
  }
  const Real tol = half_prec_tol(f.prec_bits);
  json j;
  j["multiplicativity_residual"] = dec(worst_mult);
  j["prime_square_residual"] = dec(worst_power);
  j["tolerance"] = dec(tol);
  j["deligne_max_ratio"] = dec(worst_deligne);
  j["pass"] = worst_mult <= tol && worst_power <= tol && worst_deligne <= 1L;
  return j;
}

// p - (q(X) + X^w q(1/X)), relative to max |p_j|.
Real reconstruction_residual(const RealPoly& p, const RealPoly& q, int w) {
  const Precision prec = p.precision();
  std::vector<Real> rebuilt(static_cast<size_t>(w) + 1, Real(prec));
  for (int j = 0; j <= q.degree(); ++j) {
    rebuilt[j] += q.coeff(j);
    rebuilt[w - j] += q.coeff(j);
  }
  Real worst(prec);
  for (int j = 0; j <= w; ++j) {
    Real pj = j <= p.degree() ? p.coeff(j) : Real(prec);
    Real d = mp::abs(pj - rebuilt[j]);
    if (d > worst) worst = d;
  }
  return relative(worst, p.max_abs_coeff());
}

bool self_reciprocal_bits(const RealPoly& r, int w) {
  for (int j = 0; j <= w; ++j) {
    const bool lo = j <= r.degree();
    const bool hi = w - j <= r.degree();
    if (!lo && !hi) continue;
    const Real a = lo ? r.coeff(j) : Real(r.precision());
    const Real b = hi ? r.coeff(w - j) : Real(r.precision());
    if (mpfr_equal_p(a.get(), b.get()) == 0) return false;
  }
  return true;
}

json trivial_json(const TrivialZeroCertificate& cert) {
  json arr = json::array();
  for (const auto& c : cert.checks) {
    arr.push_back({{"label", c.label}, {"residual", dec(c.residual)}, {"tolerance", dec(c.tolerance)},
                   {"pass", c.pass}});
  }
  return arr;
}

json zero_json(const ZeroReport& z) {
  const int w = z.weight - 2;
  json j;
  j["expected_circle_zeros"] = w - 10;
  j["n_circle_zeros"] = z.n_circle_zeros;
  j["certified_by_sign_change"] = z.circle.certified_by_sign_change;
  j["lattice_hits"] = z.circle.lattice_hits;
  j["skipped_intervals"] = z.circle.skipped_intervals;
  std::vector<int> multi;
  for (size_t i = 0; i < z.circle.interval_hits.size(); ++i)
    if (z.circle.interval_hits[i] > 1) multi.push_back(static_cast<int>(i));
  j["intervals_with_several_zeros"] = multi;
  j["n_refined_on_circle"] = z.n_refined_on_circle;
  j["n_refined_trivial"] = z.n_refined_trivial;
  j["trivial_multiplicities_ok"] = z.trivial_multiplicities_ok;
  j["max_modulus_deviation"] = dec(z.max_modulus_deviation);
  j["max_cross_angle_gap"] = dec(z.max_cross_angle_gap);
  json off = json::array();
  for (const auto& r : z.off_circle_roots) off.push_back(complex_json(r));
  j["off_circle_roots"] = off;
  j["accounted"] = z.accounted;
  return j;
}

RealPoly at_precision(const RealPoly& p, Precision prec) { return p.with_precision(prec); }

}  // namespace

std::string dec(const Real& x) { return x.to_string(); }

json complex_json(const Complex& z, int digits) { return {z.re.to_string(digits), z.im.to_string(digits)}; }

std::pair<int, int> parse_weight_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    size_t pos = 0;
    if (dots == std::string::npos) {
      const int v = std::stoi(text, &pos);
      if (pos != text.size()) throw std::invalid_argument(text);
      return {v, v};
    }
    const std::string a = text.substr(0, dots), b = text.substr(dots + 2);
    const int lo = std::stoi(a, &pos);
    if (pos != a.size()) throw std::invalid_argument(text);
    const int hi = std::stoi(b, &pos);
    if (pos != b.size()) throw std::invalid_argument(text);
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw std::invalid_argument("weights: expected A..B or A, got '" + text + "'");
  }
}

void validate(const VerifyConfig& cfg) {
  if (cfg.weight_min % 2 != 0 || cfg.weight_max % 2 != 0)
    throw std::invalid_argument("weights must be even");
  if (cfg.weight_min < 12) throw std::invalid_argument("weights must be >= 12");
  if (cfg.weight_max < cfg.weight_min) throw std::invalid_argument("empty weight range");
  if (cfg.prec_bits < 0 || (cfg.prec_bits > 0 && cfg.prec_bits < 64))
    throw std::invalid_argument("prec-bits must be at least 64");
  if (cfg.n_terms < 0) throw std::invalid_argument("terms must be positive");
  if (cfg.grid.nx < 2 || cfg.grid.ny < 2) throw std::invalid_argument("grid needs NX, NY >= 2");
}

long prec_for(const VerifyConfig& cfg, int k) { return cfg.prec_bits > 0 ? cfg.prec_bits : default_prec_bits(k); }

namespace {

std::vector<Eigenform> forms_for(const VerifyConfig& cfg, int k) {
  const long prec = prec_for(cfg, k);
  int n = default_n_coeffs(k);
  const int needed = cfg.n_terms > 0 ? cfg.n_terms : truncation_length(k, prec);
  n = std::max(n, needed);
  return eigenforms(k, n, prec);
}

}  // namespace

Outcome annulus_certificate(const AnnulusOptions& opt) {
  const auto t0 = Clock::now();
  const Precision p = opt.precision;
  const Contour annulus = Contour::annulus(Real(4L, p) / 5L, Real(5L, p) / 4L, opt.samples);
  const AnalyticFn s = annulus_reference_function();
  Outcome out;
  json& j = out.doc;
  j["inner_radius"] = "0.8";
  j["outer_radius"] = "1.25";
  j["precision_bits"] = p;
  try {
    const WindingResult w1 = winding_count(s, annulus);
    const WindingResult w2 = winding_count(s, annulus.with_samples(2 * opt.samples));
    const BoundaryMin bmin = boundary_min(s, annulus);
    j["samples"] = opt.samples;
    j["winding"] = w1.winding;
    j["winding_doubled_sampling"] = w2.winding;
    j["snap_distance"] = grid::decimal(std::max(w1.snap_distance, w2.snap_distance));
    j["evaluations"] = w1.evaluations + w2.evaluations;
    j["boundary_min"] = dec(bmin.value);
    j["boundary_min_at"] = complex_json(bmin.point);
    out.pass = w1.winding == 10 && w2.winding == 10 && bmin.value > 1L;
  } catch (const ContourError& e) {
    j["error"] = e.what();
    out.pass = false;
  }
  j["pass"] = out.pass;
  j["wall_time_seconds"] = grid::decimal(seconds_since(t0));
  return out;
}

Outcome verify_form(const Eigenform& f, int form_index, int dim, const VerifyConfig& cfg) {
  const auto t0 = Clock::now();
  const int k = f.weight;
  const int w = k - 2;
  Outcome out;
  json& j = out.doc;
  j["weight"] = k;
  j["form_index"] = form_index;
  j["dim"] = dim;
  j["prec_bits"] = f.prec_bits;
  j["n_coeffs"] = f.n_coeffs();
  j["t2_eigenvalue"] = dec(f.t2_eigenvalue);
  bool pass = true;
  try {
    const LFunction lf(f, cfg.n_terms);
    j["n_terms"] = lf.n_terms();
    const Real tol = half_prec_tol(f.prec_bits);

    j["hecke"] = hecke_checks(f);
    pass = pass && j["hecke"]["pass"].get<bool>();

    // Independent Gamma route at s against the recurrence at k - s.
    {
      const long sign = (k / 2) % 2 == 0 ? 1 : -1;
      Real worst(64);
      for (int s : {k - 1, (3 * k + 3) / 4, k / 2 + 1}) {
        const LValueRecord rec = completed_lvalue(f, s, lf.n_terms());
        Real mirror = lf.completed(k - s);
        if (sign < 0) mirror = -mirror;
        Real r = relative(rec.completed - mirror, mp::abs(rec.completed));
        if (r > worst) worst = Real(r, 64);
      }
      const bool ok = worst <= tol;
      j["functional_equation"] = {{"residual", dec(worst)}, {"tolerance", dec(tol)}, {"pass", ok}};
      pass = pass && ok;
    }

    {
      const LValueRecord& c = lf.at(k / 2);
      json cv = {{"value", dec(c.value)}, {"tail_bound", dec(c.tail_bound)}};
      if (k % 4 == 2) {
        const bool ok = mp::abs(c.value) <= c.tail_bound;
        cv["forced_zero"] = true;
        cv["pass"] = ok;
        pass = pass && ok;
      } else {
        cv["forced_zero"] = false;
      }
      j["central_value"] = cv;
    }

    {
      const auto rows = check_lvalue_bounds(lf);
      int checked1 = 0, bad1 = 0, bad2 = 0;
      Real worst1(64);
      for (const auto& r : rows) {
        if (r.bound1_ok) {
          ++checked1;
          if (!*r.bound1_ok) ++bad1;
          Real d = mp::abs(r.value - 1L);
          if (d > worst1) worst1 = Real(d, 64);
        }
        if (r.bound2_ok && !*r.bound2_ok) ++bad2;
      }
      Real max_l(64);
      for (const auto& r : rows)
        if (mp::abs(r.value) > max_l) max_l = Real(mp::abs(r.value), 64);
      j["l_value_bounds"] = {{"s_range", {(k + 1) / 2, k - 1}},
                             {"bound_near_one", dec(lvalue_bound_near_one(k))},
                             {"max_distance_from_one", dec(worst1)},
                             {"rows_near_one", checked1},
                             {"violations_near_one", bad1},
                             {"bound_growth", dec(lvalue_bound_growth(k))},
                             {"max_abs_value", dec(max_l)},
                             {"violations_growth", bad2},
                             {"pass", bad1 == 0 && bad2 == 0}};
      pass = pass && bad1 == 0 && bad2 == 0;
    }

    const RealPoly r = odd_period_polynomial(lf);
    const RealPoly p = normalized_p(lf);
    const RealPoly q = q_split(lf);

    {
      const CocycleResidual cr = check_cocycle_relations(r, k);
      const bool ok = cr.s_relation <= tol && cr.u_relation <= tol;
      j["cocycle"] = {{"s_relation", dec(cr.s_relation)},
                      {"u_relation", dec(cr.u_relation)},
                      {"tolerance", dec(tol)},
                      {"pass", ok}};
      pass = pass && ok;
    }
    {
      const bool recip = self_reciprocal_bits(r, w) && self_reciprocal_bits(p, w);
      const Real rec = reconstruction_residual(p, q, w);
      const bool ok = rec <= tol;
      j["self_reciprocal_bitwise"] = recip;
      j["split_reconstruction"] = {{"residual", dec(rec)}, {"tolerance", dec(tol)}, {"pass", ok}};
      pass = pass && recip && ok;
    }

    const ZeroReport zr = zero_report(k, form_index, r, q);
    j["trivial_zeros"] = trivial_json(zr.trivial);
    j["zeros"] = zero_json(zr);
    pass = pass && zr.accounted;

    if (k >= 80) {
      const RealPoly qc = at_precision(q, kContourPrec);
      const Real radius = Real(5L, kContourPrec) / 4L;
      const BoundaryMax sup = sin_approx_sup(qc, radius);
      const bool ok5 = sup.value < Real(0.01, kContourPrec);
      j["sine_approximation"] = {
          {"radius", "1.25"}, {"sup", dec(sup.value)}, {"threshold", "0.01"}, {"pass", ok5}};
      pass = pass && ok5;

      const Contour annulus = Contour::annulus(Real(4L, kContourPrec) / 5L, radius, 512);
      const RoucheReport rr = rouche_compare(q_difference_function(qc), annulus_reference_function(), annulus);
      const ImagPartZeros iz = imag_part_zeros(q);
      const Real imag_tol = half_prec_tol(f.prec_bits) * q.max_abs_coeff();
      const bool at0 = mp::abs(iz.at_zero) <= imag_tol;
      const bool atpi = mp::abs(iz.at_pi) <= imag_tol;
      const bool wind_ok = rr.winding_f && *rr.winding_f <= 10;
      const bool ok6 = rr.verified && rr.windings_equal && wind_ok && at0 && atpi;
      json l6;
      l6["max_difference"] = dec(rr.max_difference);
      l6["min_reference"] = dec(rr.min_reference);
      l6["rouche_verified"] = rr.verified;
      l6["winding_q_difference"] = rr.winding_f ? json(*rr.winding_f) : json(nullptr);
      l6["winding_reference"] = rr.winding_g ? json(*rr.winding_g) : json(nullptr);
      l6["windings_equal"] = rr.windings_equal;
      l6["imag_at_zero"] = dec(iz.at_zero);
      l6["imag_at_pi"] = dec(iz.at_pi);
      l6["imag_tolerance"] = dec(imag_tol);
      l6["imag_sign_changes"] = iz.sign_changes;
      l6["pass"] = ok6;
      j["annulus_comparison"] = l6;
      pass = pass && ok6;
    }
  } catch (const std::exception& e) {
    j["error"] = e.what();
    pass = false;
  }
  j["pass"] = pass;
  j["wall_time_seconds"] = grid::decimal(seconds_since(t0));
  out.pass = pass;
  return out;
}

Outcome run_verify(const VerifyConfig& cfg) {
  validate(cfg);
  const auto t0 = Clock::now();
  std::vector<int> weights;
  for (int k = cfg.weight_min; k <= cfg.weight_max; k += 2) weights.push_back(k);

  struct WeightSlot {
    std::vector<Eigenform> forms;
    std::string error;
  };
  std::vector<WeightSlot> slots(weights.size());
  parallel_for(static_cast<int>(weights.size()), cfg.threads, [&](int i) {
    const int k = weights[i];
    if (cusp_form_dimension(k) == 0) return;
    try {
      slots[i].forms = forms_for(cfg, k);
    } catch (const std::exception& e) {
      slots[i].error = e.what();
    }
  });

  struct Item {
    size_t slot;
    int form;
  };
  std::vector<Item> items;
  for (size_t i = 0; i < slots.size(); ++i)
    for (int f = 0; f < static_cast<int>(slots[i].forms.size()); ++f) items.push_back({i, f});
  // largest weights first keeps the pool busy at the end
  std::stable_sort(items.begin(), items.end(), [&](const Item& a, const Item& b) { return a.slot > b.slot; });
  std::vector<Outcome> results(items.size());
  parallel_for(static_cast<int>(items.size()), cfg.threads, [&](int i) {
    const WeightSlot& s = slots[items[i].slot];
    results[i] = verify_form(s.forms[items[i].form], items[i].form, static_cast<int>(s.forms.size()), cfg);
  });

  Outcome out;
  json& doc = out.doc;
  doc["schema_version"] = kSchemaVersion;
  doc["tool_version"] = kToolVersion;
  doc["command"] = "verify";
  doc["config"] = config_json(cfg);
  const Outcome ls = annulus_certificate();
  doc["annulus_certificate"] = ls.doc;
  bool pass = ls.pass;

  json wlist = json::array();
  for (size_t i = 0; i < weights.size(); ++i) {
    json wj;
    wj["weight"] = weights[i];
    wj["dim"] = cusp_form_dimension(weights[i]);
    if (wj["dim"] == 0) wj["note"] = "no cusp forms of this weight; nothing to verify";
    if (!slots[i].error.empty()) {
      wj["error"] = slots[i].error;
      pass = false;
    }
    json forms = json::array();
    for (size_t r = 0; r < items.size(); ++r) {
      if (items[r].slot != i) continue;
      forms.push_back(results[r].doc);
    }
    std::sort(forms.begin(), forms.end(),
              [](const json& a, const json& b) { return a["form_index"].get<int>() < b["form_index"].get<int>(); });
    for (const auto& f : forms) pass = pass && f["pass"].get<bool>();
    wj["forms"] = forms;
    wlist.push_back(wj);
  }
  doc["weights"] = wlist;
  doc["all_pass"] = pass;
  doc["wall_time_seconds"] = grid::decimal(seconds_since(t0));
  out.pass = pass;
  return out;
}

Outcome run_plotgrid(int k, int form_index, const VerifyConfig& cfg, const std::string& path) {
  if (k < 12 || k % 2 != 0) throw std::invalid_argument("plotgrid: weight must be even and >= 12");
  const int dim = cusp_form_dimension(k);
  if (form_index < 0 || form_index >= dim)
    throw std::invalid_argument("plotgrid: form index " + std::to_string(form_index) + " out of range for dim " +
                                std::to_string(dim));
  const auto forms = forms_for(cfg, k);
  const LFunction lf(forms[static_cast<size_t>(form_index)], cfg.n_terms);
  const RealPoly r = odd_period_polynomial(lf);
  const std::vector<double> vals = grid::log_abs_poly(r, cfg.grid);
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open " + path);
  grid::write_grid_csv(os, cfg.grid, vals);
  if (!os) throw std::runtime_error("write failed: " + path);

  Outcome out;
  json& j = out.doc;
  j["schema_version"] = kSchemaVersion;
  j["tool_version"] = kToolVersion;
  j["command"] = "plotgrid";
  j["weight"] = k;
  j["form_index"] = form_index;
  j["degree"] = r.degree();
  j["grid"] = config_json(cfg)["grid"];
  j["csv"] = path;
  j["kernel"] = grid::kernel_name(grid::avx2_kernel_available() ? grid::Kernel::avx2 : grid::Kernel::scalar);
  if (k == 34) {
    j["note"] =
        "weight 34 read as k = 34 (polynomial degree 31, 22 circle zeros); the reading w = 34 would mean k = 36";
  }
  out.pass = true;
  return out;
}

void write_reference_grid(const grid::GridSpec& g, const std::string& path) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open " + path);
  grid::write_grid_csv(os, g, grid::log_abs_reference(g));
  if (!os) throw std::runtime_error("write failed: " + path);
}

Outcome run_bernoulli(int n, int w, long prec_bits) {
  if (w < 4 || w % 2 != 0) throw std::invalid_argument("bernoulli: w must be even and >= 4");
  if (n <= 0 || n >= w || n % 2 != 0) throw std::invalid_argument("bernoulli: n must be even with 0 < n < w");
  if (prec_bits <= 0) prec_bits = 256;
  const Precision prec = static_cast<Precision>(prec_bits);
  const RealPoly poly = bernoulli_period_polynomial(n, w, prec);
  const RootRefinement rr = refine_all_roots(poly);

  const Real tol = Real::two_pow(-prec_bits / 8, prec);
  const Real threshold(1e-15, prec);
  struct Site {
    const char* label;
    double x;
    int count;
  };
  std::vector<Site> sites{{"0", 0.0, 0},  {"1", 1.0, 0},    {"-1", -1.0, 0}, {"2", 2.0, 0},
                          {"-2", -2.0, 0}, {"1/2", 0.5, 0}, {"-1/2", -0.5, 0}};
  json nontrivial = json::array();
  Real worst(prec);
  bool pass = true;
  int n_nontrivial = 0;
  for (const auto& z : rr.roots) {
    bool trivial = false;
    for (auto& s : sites) {
      if (abs(z - Complex(s.x, 0.0, prec)) <= tol) {
        ++s.count;
        trivial = true;
        break;
      }
    }
    if (trivial) continue;
    ++n_nontrivial;
    const Real dev = mp::abs(abs(z) - 1L);
    if (dev > worst) worst = dev;
    const bool ok = dev < threshold;
    pass = pass && ok;
    nontrivial.push_back({{"root", complex_json(z)}, {"modulus_deviation", dev.to_string(6)}, {"on_circle", ok}});
  }
  json triv = json::object();
  for (const auto& s : sites) triv[s.label] = s.count;

  Outcome out;
  json& j = out.doc;
  j["schema_version"] = kSchemaVersion;
  j["tool_version"] = kToolVersion;
  j["command"] = "bernoulli";
  j["n"] = n;
  j["w"] = w;
  j["prec_bits"] = prec_bits;
  j["degree"] = poly.degree();
  const auto exact = bernoulli_period_polynomial_exact(n, w);
  json coeffs = json::array();
  for (const auto& c : exact) coeffs.push_back(c.get_str());
  j["coefficients"] = coeffs;
  j["trivial_multiplicities"] = triv;
  j["n_nontrivial"] = n_nontrivial;
  j["max_modulus_deviation"] = dec(worst);
  j["threshold"] = "1e-15";
  j["nontrivial_roots"] = nontrivial;
  j["pass"] = pass;
  out.pass = pass;
  return out;
}

Outcome run_eigenforms(const VerifyConfig& cfg, int count) {
  validate(cfg);
  Outcome out;
  json& doc = out.doc;
  doc["schema_version"] = kSchemaVersion;
  doc["tool_version"] = kToolVersion;
  doc["command"] = "eigenforms";
  json wl = json::array();
  for (int k = cfg.weight_min; k <= cfg.weight_max; k += 2) {
    json wj;
    wj["weight"] = k;
    wj["dim"] = cusp_form_dimension(k);
    json fl = json::array();
    if (cusp_form_dimension(k) > 0) {
      const auto forms = forms_for(cfg, k);
      for (size_t i = 0; i < forms.size(); ++i) {
        json a = json::array();
        const int m = std::min(count, forms[i].n_coeffs());
        for (int n = 1; n <= m; ++n) a.push_back(dec(forms[i].coeff(n)));
        fl.push_back({{"form_index", i},
                      {"prec_bits", forms[i].prec_bits},
                      {"t2_eigenvalue", dec(forms[i].t2_eigenvalue)},
                      {"field_degree", forms[i].field_degree},
                      {"coefficients", a}});
      }
    }
    wj["forms"] = fl;
    wl.push_back(wj);
  }
  doc["weights"] = wl;
  out.pass = true;
  return out;
}

Outcome run_lvalues(const VerifyConfig& cfg) {
  validate(cfg);
  Outcome out;
  json& doc = out.doc;
  doc["schema_version"] = kSchemaVersion;
  doc["tool_version"] = kToolVersion;
  doc["command"] = "lvalues";
  bool pass = true;
  json wl = json::array();
  for (int k = cfg.weight_min; k <= cfg.weight_max; k += 2) {
    json wj;
    wj["weight"] = k;
    wj["dim"] = cusp_form_dimension(k);
    json fl = json::array();
    if (cusp_form_dimension(k) > 0) {
      const auto forms = forms_for(cfg, k);
      for (size_t i = 0; i < forms.size(); ++i) {
        const LFunction lf(forms[i], cfg.n_terms);
        json recs = json::array();
        for (const auto& r : lf.records()) {
          json rj{{"s", r.s},
                  {"value", dec(r.value)},
                  {"completed", dec(r.completed)},
                  {"tail_bound", dec(r.tail_bound)}};
          if (r.bound1_ok) {
            rj["near_one_ok"] = *r.bound1_ok;
            pass = pass && *r.bound1_ok;
          }
          if (r.bound2_ok) {
            rj["growth_ok"] = *r.bound2_ok;
            pass = pass && *r.bound2_ok;
          }
          recs.push_back(rj);
        }
        fl.push_back({{"form_index", i}, {"n_terms", lf.n_terms()}, {"values", recs}});
      }
    }
    wj["forms"] = fl;
    wl.push_back(wj);
  }
  doc["weights"] = wl;
  doc["all_pass"] = pass;
  out.pass = pass;
  return out;
}

}  // namespace ppz::report
