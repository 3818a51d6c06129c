// One PASS/FAIL line per acceptance criterion. Thresholds are fixed here,
// independently of the library's own pass flags.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "ppz/exact_series.hpp"
#include "ppz/report.hpp"

using namespace ppz;
using mp::Real;
using report::json;

namespace {

constexpr int kDeskMin = 12;
constexpr int kDeskMax = 120;
constexpr int kLargeMin = 80;
const std::vector<int> kSpotWeights{140, 160, 180, 200};
constexpr double kCircleThreshold = 1e-20;
constexpr double kSineThreshold = 0.01;
constexpr double kBernoulliThreshold = 1e-15;
constexpr double kAnnulusSeconds = 10.0;
constexpr double kDeskSeconds = 3600.0;  // minutes, not hours
constexpr int kAnnulusZeros = 10;
constexpr double kAnnulusMin = 1.0;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

Real num(const json& v) { return Real::from_string(v.get<std::string>(), 2048); }

Real half_prec(long prec) { return Real::two_pow(-prec / 2, 64); }

struct Criterion {
  std::string name;
  bool pass = true;
  std::string detail;
  std::vector<std::string> failures;

  void fail(const std::string& why) {
    pass = false;
    if (failures.size() < 8) failures.push_back(why);
  }
};

std::string where(const json& f) {
  return "k=" + std::to_string(f["weight"].get<int>()) + " form " + std::to_string(f["form_index"].get<int>());
}

struct FormRun {
  int k;
  json doc;
};

}  // namespace

int main() {
  std::vector<Criterion> out;

  // Zero count of sin 2 pi z - sin 2 pi / z in the annulus 4/5 <= |z| <= 5/4.
  {
    Criterion c; c.name = "annulus_zero_count";
    const auto t0 = Clock::now();
    const report::Outcome o = report::annulus_certificate();
    const double secs = seconds_since(t0);
    const json& d = o.doc;
    if (d.contains("error")) {
      c.fail(d["error"].get<std::string>());
    } else {
      if (d["winding"] != kAnnulusZeros) c.fail("winding " + d["winding"].dump());
      if (d["winding_doubled_sampling"] != kAnnulusZeros) c.fail("doubled sampling " + d["winding_doubled_sampling"].dump());
      if (!(num(d["boundary_min"]) > kAnnulusMin)) c.fail("boundary min " + d["boundary_min"].get<std::string>());
      c.detail = "winding=" + d["winding"].dump() + " doubled=" + d["winding_doubled_sampling"].dump() +
                 " min|S|=" + num(d["boundary_min"]).to_string(8);
    }
    if (secs >= kAnnulusSeconds) c.fail("runtime " + std::to_string(secs) + " s");
    c.detail += " time=" + std::to_string(secs) + "s";
    out.push_back(c);
  }

  // Every form for 12 <= k <= 120 plus spot weights; one pipeline run each.
  const auto t_desk = Clock::now();
  std::vector<FormRun> runs;
  std::vector<std::string> build_errors;
  std::vector<int> weights;
  for (int k = kDeskMin; k <= kDeskMax; k += 2) weights.push_back(k);
  weights.insert(weights.end(), kSpotWeights.begin(), kSpotWeights.end());
  for (int k : weights) {
    if (cusp_form_dimension(k) == 0) continue;
    report::VerifyConfig cfg;
    cfg.weight_min = cfg.weight_max = k;
    try {
      const auto forms = eigenforms(k);
      for (size_t i = 0; i < forms.size(); ++i) {
        runs.push_back({k, report::verify_form(forms[i], static_cast<int>(i), static_cast<int>(forms.size()), cfg).doc});
      }
    } catch (const std::exception& e) {
      build_errors.push_back("k=" + std::to_string(k) + ": " + e.what());
    }
    std::fprintf(stderr, "  weight %d done (%.1f s)\n", k, seconds_since(t_desk));
  }
  const double desk_secs = seconds_since(t_desk);
  const auto in_desk = [](int k) { return k >= kDeskMin && k <= kDeskMax; };
  const auto large = [](int k) { return k >= kLargeMin && k <= kDeskMax; };

  // All non-trivial zeros on the unit circle.
  {
    Criterion c; c.name = "unit_circle_zeros";
    for (const auto& e : build_errors) c.fail(e);
    int forms = 0;
    Real worst_dev(64);
    for (const auto& r : runs) {
      const json& f = r.doc;
      ++forms;
      if (f.contains("error")) {
        c.fail(where(f) + ": " + f["error"].get<std::string>());
        continue;
      }
      const long expect_prec = std::max(192L, 6L * r.k);
      if (f["prec_bits"].get<long>() != expect_prec) c.fail(where(f) + ": prec_bits " + f["prec_bits"].dump());
      for (const auto& t : f["trivial_zeros"]) {
        if (!(mp::abs(num(t["residual"])) <= num(t["tolerance"]))) c.fail(where(f) + ": " + t["label"].get<std::string>());
      }
      const json& z = f["zeros"];
      const int expected = (r.k - 3) - 9;
      if (z["n_refined_trivial"] != 9 || z["trivial_multiplicities_ok"] != true)
        c.fail(where(f) + ": trivial roots " + z["n_refined_trivial"].dump());
      if (z["n_refined_on_circle"] != expected) c.fail(where(f) + ": on circle " + z["n_refined_on_circle"].dump());
      if (z["n_circle_zeros"] != expected) c.fail(where(f) + ": bracketed " + z["n_circle_zeros"].dump());
      const Real dev = num(z["max_modulus_deviation"]);
      if (!(dev < kCircleThreshold)) c.fail(where(f) + ": deviation " + dev.to_string(6));
      if (dev > worst_dev) worst_dev = Real(dev, 64);
    }
    if (desk_secs >= kDeskSeconds) c.fail("runtime " + std::to_string(desk_secs) + " s");
    c.detail = std::to_string(forms) + " forms, weights 12..120 + 140,160,180,200, max ||rho|-1|=" +
               worst_dev.to_string(4) + " time=" + std::to_string(static_cast<int>(desk_secs)) + "s";
    out.push_back(c);
  }

  // r for Delta against c X (X^2 - 4)(X^2 - 1/4)(X^2 - 1)^2.
  {
    Criterion c; c.name = "weight12_closed_form";
    const auto forms = eigenforms(12);
    const RealPoly r = odd_period_polynomial(LFunction(forms[0]));
    const std::vector<long> shape{0, 4, 0, -25, 0, 42, 0, -25, 0, 4};
    const Real scale = r.coeff(1) / 4L;
    Real worst(64);
    if (r.degree() != 9) c.fail("degree " + std::to_string(r.degree()));
    for (int i = 0; i <= std::min(9, r.degree()); ++i) {
      const Real target = scale * shape[i];
      if (target.is_zero()) {
        if (!r.coeff(i).is_zero()) c.fail("nonzero even coefficient");
        continue;
      }
      const Real rel = mp::abs(r.coeff(i) - target) / mp::abs(target);
      if (rel > worst) worst = Real(rel, 64);
    }
    if (!(worst < Real::two_pow(-64, 64))) c.fail("relative error " + worst.to_string(4));
    c.detail = "max relative coefficient error " + worst.to_string(4) + " (limit 2^-64)";
    out.push_back(c);
  }

  // |L(s) - 1| <= 4 2^(-k/4) for 4s >= 3k; |L(s)| <= 2 sqrt(k) log 2k + 1 for 2s >= k.
  {
    Criterion c; c.name = "lvalue_bounds";
    int rows = 0;
    for (const auto& r : runs) {
      if (!in_desk(r.k)) continue;
      const json& f = r.doc;
      if (!f.contains("l_value_bounds")) {
        c.fail(where(f) + ": missing");
        continue;
      }
      const json& b = f["l_value_bounds"];
      const double k = r.k;
      const Real b1(4.0 * std::pow(2.0, -k / 4.0), 64);
      const Real b2(2.0 * std::sqrt(k) * std::log(2.0 * k) + 1.0, 64);
      if (!(num(b["max_distance_from_one"]) <= b1)) c.fail(where(f) + ": near-one bound");
      if (!(num(b["max_abs_value"]) <= b2)) c.fail(where(f) + ": growth bound");
      if (b["violations_near_one"] != 0 || b["violations_growth"] != 0) c.fail(where(f) + ": flagged rows");
      rows += r.k / 2;
    }
    c.detail = std::to_string(rows) + " (form, s) rows, zero violations required";
    out.push_back(c);
  }

  // sup |sin 2 pi z - q(z)| on |z| = 5/4 below 0.01 for 80 <= k <= 120.
  {
    Criterion c; c.name = "sine_approximation";
    Real worst(64);
    int n = 0;
    for (const auto& r : runs) {
      if (!large(r.k)) continue;
      const json& f = r.doc;
      if (!f.contains("sine_approximation")) {
        c.fail(where(f) + ": missing");
        continue;
      }
      const Real sup = num(f["sine_approximation"]["sup"]);
      if (!(sup < kSineThreshold)) c.fail(where(f) + ": sup " + sup.to_string(6));
      if (sup > worst) worst = Real(sup, 64);
      ++n;
    }
    if (n == 0) c.fail("no forms checked");
    c.detail = std::to_string(n) + " forms, max sup " + worst.to_string(4) + " (limit 0.01)";
    out.push_back(c);
  }

  // Rouche of q(z) - q(1/z) against S on the annulus; winding <= 10; Im q(e^{it}) = 0 at 0 and pi.
  {
    Criterion c; c.name = "annulus_rouche";
    int n = 0;
    for (const auto& r : runs) {
      if (!large(r.k)) continue;
      const json& f = r.doc;
      if (!f.contains("annulus_comparison")) {
        c.fail(where(f) + ": missing");
        continue;
      }
      const json& a = f["annulus_comparison"];
      if (a["rouche_verified"] != true) c.fail(where(f) + ": comparison fails");
      if (!(num(a["max_difference"]) < num(a["min_reference"]))) c.fail(where(f) + ": difference too large");
      if (a["winding_q_difference"].is_null() || a["winding_q_difference"].get<long>() > kAnnulusZeros)
        c.fail(where(f) + ": winding " + a["winding_q_difference"].dump());
      const Real tol = num(a["imag_tolerance"]);
      if (!(mp::abs(num(a["imag_at_zero"])) <= tol) || !(mp::abs(num(a["imag_at_pi"])) <= tol))
        c.fail(where(f) + ": Im q at 0 or pi");
      ++n;
    }
    if (n == 0) c.fail("no forms checked");
    c.detail = std::to_string(n) + " forms, weights 80..120";
    out.push_back(c);
  }

  // Functional equation, self-reciprocity, cocycle relations, split, Hecke, Deligne, E4^3 - E6^2.
  {
    Criterion c; c.name = "structural_identities";
    for (const auto& r : runs) {
      if (!in_desk(r.k)) continue;
      const json& f = r.doc;
      if (f.contains("error")) continue;  // reported above
      const Real tol = half_prec(f["prec_bits"].get<long>());
      if (!(num(f["functional_equation"]["residual"]) <= tol)) c.fail(where(f) + ": functional equation");
      if (f["self_reciprocal_bitwise"] != true) c.fail(where(f) + ": self-reciprocity");
      if (!(num(f["cocycle"]["s_relation"]) < tol) || !(num(f["cocycle"]["u_relation"]) < tol))
        c.fail(where(f) + ": cocycle");
      if (!(num(f["split_reconstruction"]["residual"]) < tol)) c.fail(where(f) + ": split");
      if (!(num(f["hecke"]["multiplicativity_residual"]) <= tol) || !(num(f["hecke"]["prime_square_residual"]) <= tol))
        c.fail(where(f) + ": multiplicativity");
      if (!(num(f["hecke"]["deligne_max_ratio"]) <= 1L)) c.fail(where(f) + ": Deligne bound");
    }
    const int order = 200;
    const QSeries e4 = eisenstein_qexp(4, order);
    const QSeries e6 = eisenstein_qexp(6, order);
    const QSeries lhs = series_sub(series_pow(e4, 3, order), series_mul(e6, e6));
    if (!(lhs == series_scale(delta_qexp(order), 1728))) c.fail("E4^3 - E6^2 != 1728 Delta");
    c.detail = "tolerance 2^(-prec/2); E4^3 - E6^2 = 1728 Delta exact to q^199";
    out.push_back(c);
  }

  // L(k/2) = 0 when k = 2 mod 4.
  {
    Criterion c; c.name = "central_value";
    int n = 0;
    for (const auto& r : runs) {
      if (!in_desk(r.k) || r.k % 4 != 2) continue;
      const json& f = r.doc;
      if (!f.contains("central_value")) {
        c.fail(where(f) + ": missing");
        continue;
      }
      const json& cv = f["central_value"];
      if (!(mp::abs(num(cv["value"])) <= num(cv["tail_bound"]))) c.fail(where(f) + ": " + cv["value"].get<std::string>());
      ++n;
    }
    c.detail = std::to_string(n) + " forms with k = 2 mod 4";
    out.push_back(c);
  }

  // Roots of the R_n period polynomials off the trivial set lie on |z| = 1.
  {
    Criterion c; c.name = "bernoulli_polynomials";
    int n_polys = 0;
    Real worst(64);
    for (int w : {10, 14, 18, 22}) {
      for (int n = 2; n < w; n += 2) {
        const report::Outcome o = report::run_bernoulli(n, w, 256);
        const Real dev = num(o.doc["max_modulus_deviation"]);
        if (!(dev < kBernoulliThreshold))
          c.fail("n=" + std::to_string(n) + " w=" + std::to_string(w) + ": deviation " + dev.to_string(4));
        if (dev > worst) worst = Real(dev, 64);
        ++n_polys;
      }
    }
    c.detail = std::to_string(n_polys) + " polynomials, max ||rho|-1|=" + worst.to_string(4) + " (limit 1e-15)";
    out.push_back(c);
  }

  bool all = true;
  for (const auto& c : out) {
    std::printf("%s  %-24s %s\n", c.pass ? "PASS" : "FAIL", c.name.c_str(), c.detail.c_str());
    for (const auto& f : c.failures) std::printf("        %s\n", f.c_str());
    all = all && c.pass;
  }
  std::printf("%s\n", all ? "ALL PASS" : "SOME CRITERIA FAILED");
  return all ? 0 : 1;
}
