#include "ppz/period_poly.hpp"

#include <algorithm>
#include <stdexcept>

#include "ppz/exact_series.hpp"

namespace ppz {

using mp::Complex;
using mp::Precision;
using mp::Real;

const char* to_string(Parity p) {
  switch (p) {
    case Parity::odd:
      return "odd";
    case Parity::even:
      return "even";
    case Parity::none:
      return "none";
  }
  return "none";
}

RealPoly::RealPoly(std::vector<Real> coeffs, Parity parity) : coeffs_(std::move(coeffs)), parity_(parity) {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  if (parity_ == Parity::none) return;
  const size_t skip = parity_ == Parity::odd ? 0 : 1;
  for (size_t i = skip; i < coeffs_.size(); i += 2) {
    if (!coeffs_[i].is_zero()) {
      throw std::invalid_argument(std::string("RealPoly: coefficient ") + std::to_string(i) + " breaks " +
                                  to_string(parity_) + " parity");
    }
  }
}

Precision RealPoly::precision() const {
  Precision p = 64;
  for (const auto& c : coeffs_) p = std::max(p, c.precision());
  return p;
}

Real RealPoly::operator()(const Real& x) const {
  Real acc(x.precision());
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Real RealPoly::derivative_at(const Real& x) const {
  Real acc(x.precision());
  for (int i = degree(); i >= 1; --i) {
    acc *= x;
    Real t = coeffs_[static_cast<size_t>(i)] * static_cast<long>(i);
    acc += t;
  }
  return acc;
}

Complex RealPoly::operator()(const Complex& z) const {
  const Precision p = z.precision();
  Complex acc(p);
  Real t(p);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    // acc = acc * z + c
    mpfr_fmms(t.get(), acc.re.get(), z.re.get(), acc.im.get(), z.im.get(), MPFR_RNDN);
    mpfr_fmma(acc.im.get(), acc.re.get(), z.im.get(), acc.im.get(), z.re.get(), MPFR_RNDN);
    mpfr_add(acc.re.get(), t.get(), it->get(), MPFR_RNDN);
  }
  return acc;
}

void RealPoly::evaluate_with_derivative(const Complex& z, Complex& value, Complex& deriv) const {
  const Precision p = z.precision();
  value = Complex(p);
  deriv = Complex(p);
  Real t(p);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    // deriv = deriv * z + value
    mpfr_fmms(t.get(), deriv.re.get(), z.re.get(), deriv.im.get(), z.im.get(), MPFR_RNDN);
    mpfr_fmma(deriv.im.get(), deriv.re.get(), z.im.get(), deriv.im.get(), z.re.get(), MPFR_RNDN);
    mpfr_add(deriv.re.get(), t.get(), value.re.get(), MPFR_RNDN);
    mpfr_add(deriv.im.get(), deriv.im.get(), value.im.get(), MPFR_RNDN);
    // value = value * z + c
    mpfr_fmms(t.get(), value.re.get(), z.re.get(), value.im.get(), z.im.get(), MPFR_RNDN);
    mpfr_fmma(value.im.get(), value.re.get(), z.im.get(), value.im.get(), z.re.get(), MPFR_RNDN);
    mpfr_add(value.re.get(), t.get(), it->get(), MPFR_RNDN);
  }
}

Real RealPoly::max_abs_coeff() const {
  Real m(precision());
  for (const auto& c : coeffs_) {
    if (mpfr_cmpabs(c.get(), m.get()) > 0) m = mp::abs(c);
  }
  return m;
}

RealPoly RealPoly::scaled(const Real& factor) const {
  std::vector<Real> c = coeffs_;
  for (auto& x : c) x *= factor;
  return RealPoly(std::move(c), parity_);
}

RealPoly RealPoly::with_precision(Precision prec) const {
  std::vector<Real> c;
  c.reserve(coeffs_.size());
  for (const auto& x : coeffs_) c.emplace_back(x, prec);
  return RealPoly(std::move(c), parity_);
}

namespace {

using IntPoly = std::vector<mpz_class>;

IntPoly mul_linear(const IntPoly& p, long slope, long intercept) {
  IntPoly out(p.size() + 1);
  for (size_t i = 0; i < p.size(); ++i) {
    out[i] += p[i] * intercept;
    out[i + 1] += p[i] * slope;
  }
  return out;
}

// powers[j] = (cz + d)^j for j <= w
std::vector<IntPoly> linear_powers(long c, long d, int w) {
  std::vector<IntPoly> powers{IntPoly{1}};
  for (int j = 1; j <= w; ++j) powers.push_back(mul_linear(powers.back(), c, d));
  return powers;
}

// Coefficients of (p | m) at precision wp, length w + 1.
std::vector<Real> slash_raw(const std::vector<Real>& p, const Moebius& m, int w, Precision wp) {
  const int n = static_cast<int>(p.size()) - 1;
  std::vector<Real> out(static_cast<size_t>(w) + 1, Real(wp));
  if (n < 0) return out;
  if (n > w) throw std::invalid_argument("slash: degree exceeds weight");
  const auto vpow = linear_powers(m.c, m.d, w);
  // Homogeneous Horner: H = sum_i p_i u^i v^(n-i), u = az + b, v = cz + d.
  std::vector<Real> h{Real(p[static_cast<size_t>(n)], wp)};
  Real t(wp);
  for (int i = n - 1; i >= 0; --i) {
    // h *= (a z + b)
    std::vector<Real> next(h.size() + 1, Real(wp));
    for (size_t j = 0; j < h.size(); ++j) {
      t.assign(h[j]);
      t *= m.b;
      next[j] += t;
      t.assign(h[j]);
      t *= m.a;
      next[j + 1] += t;
    }
    const Real& pi = p[static_cast<size_t>(i)];
    if (!pi.is_zero()) {
      const IntPoly& v = vpow[static_cast<size_t>(n - i)];
      for (size_t j = 0; j < v.size(); ++j) {
        if (v[j] == 0) continue;
        t.assign(pi);
        t *= v[j];
        next[j] += t;
      }
    }
    h = std::move(next);
  }
  // out = h * v^(w - n)
  const IntPoly& tail = vpow[static_cast<size_t>(w - n)];
  for (size_t i = 0; i < h.size(); ++i) {
    if (h[i].is_zero()) continue;
    for (size_t j = 0; j < tail.size(); ++j) {
      if (tail[j] == 0) continue;
      t.assign(h[i]);
      t *= tail[j];
      out[i + j] += t;
    }
  }
  return out;
}

bool preserves_parity(const Moebius& m) { return (m.a == 0 && m.d == 0) || (m.b == 0 && m.c == 0); }


}  // namespace

RealPoly slash(const RealPoly& p, const Moebius& m, int w) {
  if (m.det() != 1) throw std::invalid_argument("slash: matrix must have determinant 1");
  const Precision prec = p.precision();
  std::vector<Real> raw = slash_raw(p.coeffs(), m, w, prec + w + 32);
  const Parity parity = preserves_parity(m) ? p.parity() : Parity::none;
  std::vector<Real> out;
  out.reserve(raw.size());
  for (auto& c : raw) out.emplace_back(c, prec);
  if (parity == Parity::odd || parity == Parity::even) {
    const size_t skip = parity == Parity::odd ? 0 : 1;
    for (size_t i = skip; i < out.size(); i += 2) out[i].assign(0L);
  }
  return RealPoly(std::move(out), parity);
}

std::vector<mpq_class> slash_exact(const std::vector<mpq_class>& p, const Moebius& m, int w) {
  const int n = static_cast<int>(p.size()) - 1;
  std::vector<mpq_class> out(static_cast<size_t>(w) + 1);
  if (n > w) throw std::invalid_argument("slash_exact: degree exceeds weight");
  const auto upow = linear_powers(m.a, m.b, w);
  const auto vpow = linear_powers(m.c, m.d, w);
  for (int i = 0; i <= n; ++i) {
    if (p[static_cast<size_t>(i)] == 0) continue;
    const IntPoly& u = upow[static_cast<size_t>(i)];
    const IntPoly& v = vpow[static_cast<size_t>(w - i)];
    for (size_t a = 0; a < u.size(); ++a) {
      if (u[a] == 0) continue;
      for (size_t b = 0; b < v.size(); ++b) {
        if (v[b] == 0) continue;
        out[a + b] += p[static_cast<size_t>(i)] * u[a] * v[b];
      }
    }
  }
  return out;
}

RealPoly odd_period_polynomial(const LFunction& lf) {
  const int k = lf.weight();
  const int w = k - 2;
  const Precision prec = lf.value(1).precision();
  std::vector<Real> c(static_cast<size_t>(w), Real(prec));
  mpz_class binom;
  // Odd exponents e <= w/2 come from n = w - e >= w/2; the rest mirror them.
  for (int e = 1; 2 * e <= w; e += 2) {
    const int n = w - e;
    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(w), static_cast<unsigned long>(n));
    Real v = lf.completed(n + 1);
    v *= binom;
    if (((n - 1) / 2) % 2 != 0) v.negate();
    c[static_cast<size_t>(e)] = v;
    c[static_cast<size_t>(w - e)] = v;
  }
  return RealPoly(std::move(c), Parity::odd);
}

RealPoly odd_period_polynomial(const Eigenform& f) { return odd_period_polynomial(LFunction(f)); }

Real normalization_factor(int w, Precision prec) {
  // p = 2 pi (-1)^(w/2 + 1) (2 pi)^w / w! * r
  const Real two_pi = Real::pi(prec) * 2L;
  Real f = mp::pow(two_pi, w + 1) / Real::factorial(static_cast<unsigned long>(w), prec);
  if ((w / 2 + 1) % 2 != 0) f.negate();
  return f;
}

RealPoly normalized_p(const LFunction& lf) {
  const RealPoly r = odd_period_polynomial(lf);
  return r.scaled(normalization_factor(lf.weight() - 2, r.precision()));
}

RealPoly q_split(const LFunction& lf) {
  const int w = lf.weight() - 2;
  const Precision prec = lf.value(1).precision();
  const Real two_pi = Real::pi(prec) * 2L;
  std::vector<Real> c(static_cast<size_t>(w / 2) + 1, Real(prec));
  // (-1)^m (2 pi)^(2m+1) / (2m+1)! L_f(w - 2m), 2m + 1 < w/2
  Real power = two_pi;  // (2 pi)^(2m+1) / (2m+1)!
  int m = 0;
  for (; 2 * (2 * m + 1) < w; ++m) {
    Real v = power * lf.value(w - 2 * m);
    if (m % 2 != 0) v.negate();
    c[static_cast<size_t>(2 * m + 1)] = v;
    power *= two_pi;
    power *= two_pi;
    power /= static_cast<long>((2 * m + 2) * (2 * m + 3));
  }
  if ((w / 2) % 2 != 0) {
    // central term, m = (w - 2) / 4, halved
    Real v = power * lf.value(w / 2 + 1);
    v /= 2L;
    if (m % 2 != 0) v.negate();
    c[static_cast<size_t>(w / 2)] = v;
  }
  return RealPoly(std::move(c), Parity::odd);
}

Real CocycleResidual::max(Precision prec) const {
  return Real(mp::max(s_relation, u_relation), prec);
}

CocycleResidual check_cocycle_relations(const RealPoly& p, int k) {
  const int w = k - 2;
  if (p.degree() > w - 1) throw std::invalid_argument("check_cocycle_relations: degree must be <= k - 3");
  const Precision prec = p.precision();
  const Precision wp = prec + w + 32;
  CocycleResidual res{Real(prec), Real(prec)};
  if (p.degree() < 0) return res;

  std::vector<Real> base(static_cast<size_t>(w) + 1, Real(wp));
  for (int i = 0; i <= p.degree(); ++i) base[static_cast<size_t>(i)].assign(p.coeff(i));

  const auto max_abs = [](const std::vector<Real>& v, Precision pr) {
    Real m(pr);
    for (const auto& x : v)
      if (mpfr_cmpabs(x.get(), m.get()) > 0) m = mp::abs(x);
    return m;
  };
  const Real scale = max_abs(base, wp);

  std::vector<Real> s_sum = base;
  const auto ps = slash_raw(p.coeffs(), Moebius::S(), w, wp);
  for (size_t i = 0; i < s_sum.size(); ++i) s_sum[i] += ps[i];

  std::vector<Real> u_sum = base;
  const Moebius u = Moebius::U();
  const auto pu = slash_raw(p.coeffs(), u, w, wp);
  const auto pu2 = slash_raw(p.coeffs(), u * u, w, wp);
  for (size_t i = 0; i < u_sum.size(); ++i) {
    u_sum[i] += pu[i];
    u_sum[i] += pu2[i];
  }
  res.s_relation = Real(max_abs(s_sum, wp) / scale, prec);
  res.u_relation = Real(max_abs(u_sum, wp) / scale, prec);
  return res;
}

bool TrivialZeroCertificate::all_pass() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.pass; });
}

TrivialZeroCertificate trivial_zero_certificate(const RealPoly& r, int w) {
  const Precision prec = r.precision();
  const Precision wp = prec + 32;
  const Real maxc = r.max_abs_coeff();
  const Real eps = Real::two_pow(-static_cast<long>(prec) / 2, wp);
  const RealPoly rp = r.with_precision(wp);

  TrivialZeroCertificate cert;
  const auto add = [&](std::string label, Real residual, const Real& point_abs, long extra) {
    Real tol = eps * maxc;
    if (point_abs > 1L) tol *= mp::pow(point_abs, w);
    tol *= extra;
    TrivialZeroCheck check;
    check.label = std::move(label);
    check.pass = mp::abs(residual) <= tol;
    check.residual = Real(residual, prec);
    check.tolerance = Real(tol, 64);
    cert.checks.push_back(std::move(check));
  };

  const Real zero(wp), one(1L, wp), two(2L, wp), half = Real(1L, wp) / 2L;
  add("P(0)", rp(zero), zero, 1);
  add("P(1)", rp(one), one, 1);
  add("P(-1)", rp(-one), one, 1);
  add("P'(1)", rp.derivative_at(one), one, w);
  add("P'(-1)", rp.derivative_at(-one), one, w);
  add("P(2)", rp(two), two, 1);
  add("P(-2)", rp(-two), two, 1);
  add("P(1/2)", rp(half), half, 1);
  add("P(-1/2)", rp(-half), half, 1);

  const Real p2 = rp(two);
  Real scaled_half = rp(half);
  scaled_half.mul_2exp(w);
  add("P(2) + 2^w P(1/2)", p2 + scaled_half, two, 2);
  add("P(2) - 2^w P(1/2)", p2 - scaled_half, two, 2);
  return cert;
}

namespace {

// B0_m(X) = sum_{i != 1, 0 <= i <= m} C(m, i) B_i X^(m - i)
std::vector<mpq_class> bernoulli_b0(int m) {
  std::vector<mpq_class> out(static_cast<size_t>(m) + 1);
  mpz_class binom;
  for (int i = 0; i <= m; ++i) {
    if (i == 1) continue;
    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(i));
    out[static_cast<size_t>(m - i)] += binom * bernoulli(static_cast<unsigned>(i));
  }
  return out;
}

}  // namespace

std::vector<mpq_class> bernoulli_period_polynomial_exact(int n, int w) {
  if (w < 2 || w % 2 != 0) throw std::invalid_argument("bernoulli_period_polynomial: w must be even and positive");
  if (n <= 0 || n >= w || n % 2 != 0) {
    throw std::invalid_argument("bernoulli_period_polynomial: n must be even with 0 < n < w");
  }
  const int nt = w - n;
  std::vector<mpq_class> bracket(static_cast<size_t>(w) + 1);
  const auto big = bernoulli_b0(nt + 1);
  const auto small = bernoulli_b0(n + 1);
  for (size_t i = 0; i < big.size(); ++i) bracket[i] += big[i] / (nt + 1);
  for (size_t i = 0; i < small.size(); ++i) bracket[i] -= small[i] / (n + 1);

  // bracket | (1 - S)
  const auto bs = slash_exact(bracket, Moebius::S(), w);
  std::vector<mpq_class> out(static_cast<size_t>(w) + 1);
  const int k = w + 2;
  mpq_class factor = 1;
  factor *= mpz_class(1) << static_cast<unsigned>(w);
  if ((k / 2 + n / 2) % 2 != 0) factor = -factor;
  for (size_t i = 0; i < out.size(); ++i) out[i] = (bracket[i] - bs[i]) * factor;
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

RealPoly bernoulli_period_polynomial(int n, int w, Precision prec) {
  const auto exact = bernoulli_period_polynomial_exact(n, w);
  std::vector<Real> c;
  c.reserve(exact.size());
  for (const auto& q : exact) c.emplace_back(q, prec);
  return RealPoly(std::move(c), Parity::odd);
}

Real independence_measure(const std::vector<RealPoly>& polys) {
  if (polys.empty()) return Real(1L, 64);
  Precision prec = 64;
  int len = 0;
  for (const auto& p : polys) {
    prec = std::max(prec, p.precision());
    len = std::max(len, p.degree() + 1);
  }
  const size_t rows = polys.size();
  std::vector<std::vector<Real>> v(rows);
  for (size_t r = 0; r < rows; ++r) {
    const Real scale = polys[r].max_abs_coeff();
    for (int i = 1; i < len; i += 2) {
      Real x(prec);
      if (i <= polys[r].degree()) x = polys[r].coeff(i) / scale;
      v[r].push_back(std::move(x));
    }
  }
  // Gram matrix, then its determinant by elimination.
  std::vector<std::vector<Real>> g(rows, std::vector<Real>(rows, Real(prec)));
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < rows; ++j)
      for (size_t t = 0; t < v[i].size(); ++t) g[i][j] += v[i][t] * v[j][t];
  Real det(1L, prec);
  for (size_t col = 0; col < rows; ++col) {
    size_t piv = col;
    for (size_t r = col + 1; r < rows; ++r)
      if (mp::abs(g[r][col]) > mp::abs(g[piv][col])) piv = r;
    if (g[piv][col].is_zero()) return Real(prec);
    if (piv != col) {
      std::swap(g[piv], g[col]);
      det.negate();
    }
    det *= g[col][col];
    for (size_t r = col + 1; r < rows; ++r) {
      Real f = g[r][col] / g[col][col];
      for (size_t c = col; c < rows; ++c) g[r][c] -= f * g[col][c];
    }
  }
  return mp::sqrt(mp::abs(det));
}

}  // namespace ppz
