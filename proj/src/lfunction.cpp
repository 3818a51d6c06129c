#include "ppz/lfunction.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace ppz {

using mp::Precision;
using mp::Real;

namespace {

constexpr long kGuardBits = 32;

Precision working_precision(long prec_bits) { return static_cast<Precision>(prec_bits + kGuardBits); }

bool is_even(int v) { return v % 2 == 0; }

}  // namespace

InsufficientCoefficients::InsufficientCoefficients(int required, int available)
    : std::runtime_error("L-value needs " + std::to_string(required) + " coefficients, eigenform has " +
                         std::to_string(available)),
      required_(required) {}

Real upper_incomplete_gamma_int(int s, const Real& x) {
  if (s < 1) throw std::invalid_argument("upper_incomplete_gamma_int: s must be >= 1");
  const Real ex = mp::exp(-x);
  Real g = ex;            // Gamma(1, x)
  Real xp = x;            // x^j
  for (int j = 1; j < s; ++j) {
    g *= static_cast<long>(j);
    g += xp * ex;
    xp *= x;
  }
  return g;
}

Real lambda_tail_bound(int k, int s, int n_terms) {
  const Precision p = 64;
  const long n1 = static_cast<long>(n_terms) + 1;
  const Real two_pi = Real::pi(p) * 2L;
  const Real x = two_pi * n1;
  const int big = std::max(s, k - s);
  if (x <= Real(static_cast<long>(big), p)) return Real(std::numeric_limits<double>::infinity(), p);
  // rho bounds T(n+1) / T(n) for every n >= N + 1.
  Real rho = mp::pow(Real(1L, p) + Real(1L, p) / Real(n1, p), k / 2) * mp::exp(-two_pi);
  if (rho >= 1L) return Real(std::numeric_limits<double>::infinity(), p);
  // T(n) = 2 n^(k/2) e^-x [1/(x - s + 1) + 1/(x - (k - s) + 1)]
  Real t = mp::pow(Real(n1, p), k / 2) * 2L * mp::exp(-x);
  Real inv = Real(1L, p) / (x - static_cast<long>(s - 1)) + Real(1L, p) / (x - static_cast<long>(k - s - 1));
  t *= inv;
  t /= (1L - rho);
  // Slack for the low-precision rounding of the estimate itself.
  return t * 2L;
}

namespace {

// Turns a Lambda tail bound into an L tail bound: (2 pi)^s / (s-1)!.
Real l_scale(int s, Precision p) {
  Real two_pi = Real::pi(p) * 2L;
  return mp::pow(two_pi, s) / Real::factorial(static_cast<unsigned long>(s - 1), p);
}

}  // namespace

int truncation_length(int k, long prec_bits) {
  const Real target = Real::two_pow(-(prec_bits + 8), 64);
  std::vector<Real> scales;
  for (int s = 1; s < k; ++s) scales.push_back(l_scale(s, 64));
  for (int n = 1;; ++n) {
    bool ok = true;
    for (int s = 1; s < k && ok; ++s) {
      Real t = lambda_tail_bound(k, s, n);
      if (!t.is_finite() || t * scales[s - 1] >= target) ok = false;
    }
    if (ok) return n;
  }
}

LValueRecord completed_lvalue(const Eigenform& f, int s, int n_terms) {
  const int k = f.weight;
  if (s < 1 || s > k - 1) throw std::invalid_argument("completed_lvalue: s out of [1, k-1]");
  if (n_terms <= 0) n_terms = truncation_length(k, f.prec_bits);
  if (n_terms > f.n_coeffs()) throw InsufficientCoefficients(n_terms, f.n_coeffs());
  const Precision wp = working_precision(f.prec_bits);
  const Real two_pi = Real::pi(wp) * 2L;
  const long sign = is_even(k / 2) ? 1 : -1;

  Real lambda(wp);
  for (int n = 1; n <= n_terms; ++n) {
    const Real x = two_pi * static_cast<long>(n);
    Real term = upper_incomplete_gamma_int(s, x) / mp::pow(x, s);
    Real mirror = upper_incomplete_gamma_int(k - s, x) / mp::pow(x, k - s);
    if (sign > 0) {
      term += mirror;
    } else {
      term -= mirror;
    }
    term *= f.coeff(n);
    lambda += term;
  }

  LValueRecord rec;
  rec.s = s;
  rec.n_terms_used = n_terms;
  const Real scale = mp::pow(two_pi, s) / Real::factorial(static_cast<unsigned long>(s - 1), wp);
  rec.value = Real(lambda * scale, static_cast<Precision>(f.prec_bits));
  rec.completed = Real(lambda, static_cast<Precision>(f.prec_bits));
  rec.tail_bound = lambda_tail_bound(k, s, n_terms) * l_scale(s, 64);
  return rec;
}

LFunction::LFunction(const Eigenform& f, int n_terms) : weight_(f.weight) {
  const int k = f.weight;
  if (n_terms <= 0) n_terms = truncation_length(k, f.prec_bits);
  if (n_terms > f.n_coeffs()) throw InsufficientCoefficients(n_terms, f.n_coeffs());
  n_terms_ = n_terms;
  const Precision wp = working_precision(f.prec_bits);
  const Real two_pi = Real::pi(wp) * 2L;

  // acc[s] = sum_n a(n) G(s, 2 pi n), s = 1 .. k-1, with
  // G(1, x) = e^-x / x and G(s+1, x) = (s G(s, x) + e^-x) / x.
  std::vector<Real> acc(static_cast<size_t>(k), Real(wp));
  Real g(wp), ex(wp), x(wp), term(wp);
  for (int n = 1; n <= n_terms; ++n) {
    x.assign(two_pi);
    x *= static_cast<long>(n);
    mpfr_neg(ex.get(), x.get(), MPFR_RNDN);
    mpfr_exp(ex.get(), ex.get(), MPFR_RNDN);
    g.assign(ex);
    g /= x;
    const Real& an = f.coeff(n);
    for (int s = 1; s < k; ++s) {
      term.assign(g);
      term *= an;
      acc[s] += term;
      g *= static_cast<long>(s);
      g += ex;
      g /= x;
    }
  }

  const long sign = is_even(k / 2) ? 1 : -1;
  const Precision out_prec = static_cast<Precision>(f.prec_bits);
  Real scale = two_pi;  // (2 pi)^s / (s-1)!
  records_.reserve(static_cast<size_t>(k - 1));
  for (int s = 1; s < k; ++s) {
    Real lambda = acc[s];
    if (sign > 0) {
      lambda += acc[k - s];
    } else {
      lambda -= acc[k - s];
    }
    LValueRecord rec;
    rec.s = s;
    rec.n_terms_used = n_terms;
    rec.value = Real(lambda * scale, out_prec);
    rec.completed = Real(lambda, out_prec);
    rec.tail_bound = lambda_tail_bound(k, s, n_terms) * l_scale(s, 64);
    if (2 * s >= k) {
      rec.bound2_ok = mp::abs(rec.value) <= lvalue_bound_growth(k);
      if (4 * s >= 3 * k) rec.bound1_ok = mp::abs(rec.value - 1L) <= lvalue_bound_near_one(k);
    }
    records_.push_back(std::move(rec));
    scale *= two_pi;
    scale /= static_cast<long>(s);
  }
}

const LValueRecord& LFunction::at(int s) const {
  if (s < 1 || s >= weight_) throw std::out_of_range("LFunction::at: s out of [1, k-1]");
  return records_[static_cast<size_t>(s - 1)];
}

Real lvalue_bound_near_one(int k, Precision prec) {
  Real b(4L, prec);
  b *= mp::pow(Real(2L, prec), Real(-k, prec) / 4L);
  return b;
}

Real lvalue_bound_growth(int k, Precision prec) {
  Real kk(static_cast<long>(k), prec);
  return mp::sqrt(kk) * 2L * mp::log(kk * 2L) + 1L;
}

std::vector<LValueBoundRow> check_lvalue_bounds(const LFunction& lf) {
  const int k = lf.weight();
  std::vector<LValueBoundRow> rows;
  const Real b1 = lvalue_bound_near_one(k);
  const Real b2 = lvalue_bound_growth(k);
  for (int s = (k + 1) / 2; s <= k - 1; ++s) {
    const Real& v = lf.value(s);
    LValueBoundRow row;
    row.s = s;
    row.value = v;
    row.bound2_ok = mp::abs(v) <= b2;
    if (4 * s >= 3 * k) row.bound1_ok = mp::abs(v - 1L) <= b1;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace ppz
