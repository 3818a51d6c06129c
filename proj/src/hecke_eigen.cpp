#include "ppz/hecke_eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace ppz {

using mp::Precision;
using mp::Real;

QSeries hecke_apply(const QSeries& series, int m, int k, int out_order) {
  if (m < 1) throw std::invalid_argument("hecke_apply: m must be positive");
  const int in_order = series.order();
  if (out_order <= 0) out_order = (in_order - 1) / m + 1;
  if (in_order < 1 || static_cast<long>(m) * (out_order - 1) >= in_order) {
    throw InsufficientOrder("hecke_apply: need input order > " +
                            std::to_string(static_cast<long>(m) * (out_order - 1)) + " for T_" +
                            std::to_string(m) + ", have " + std::to_string(in_order));
  }
  QSeries out = QSeries::zero(out_order);
  mpz_class dpow;
  for (int n = 0; n < out_order; ++n) {
    const int g = std::gcd(m, n);  // gcd(m, 0) = m
    mpq_class acc = 0;
    for (int d = 1; d <= g; ++d) {
      if (g % d != 0) continue;
      const long idx = static_cast<long>(m) * n / (static_cast<long>(d) * d);
      mpz_ui_pow_ui(dpow.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(k - 1));
      acc += dpow * series[static_cast<int>(idx)];
    }
    out[n] = acc;
  }
  return out;
}

RationalMatrix hecke_matrix(const CuspBasis& basis, int m) {
  const int dim = basis.dim;
  RationalMatrix mat(dim, std::vector<mpq_class>(dim));
  for (int j = 0; j < dim; ++j) {
    const QSeries image = hecke_apply(basis.forms[j], m, basis.weight, dim + 1);
    for (int i = 0; i < dim; ++i) mat[i][j] = image[i + 1];
  }
  return mat;
}

RationalPoly characteristic_polynomial(const RationalMatrix& a) {
  // Faddeev-LeVerrier: M_1 = I, c_{n-1} = -tr(A)
  // M_j = A M_{j-1} + c_{n-j+1} I, c_{n-j} = -tr(A M_j) / j
  const int n = static_cast<int>(a.size());
  RationalPoly c(n + 1);
  c[n] = 1;
  if (n == 0) return c;
  RationalMatrix mk(n, std::vector<mpq_class>(n));
  RationalMatrix amk(n, std::vector<mpq_class>(n));
  for (int i = 0; i < n; ++i) mk[i][i] = 1;
  for (int j = 1; j <= n; ++j) {
    for (int r = 0; r < n; ++r) {
      for (int col = 0; col < n; ++col) {
        mpq_class s = 0;
        for (int t = 0; t < n; ++t) s += a[r][t] * mk[t][col];
        amk[r][col] = s;
      }
    }
    mpq_class tr = 0;
    for (int i = 0; i < n; ++i) tr += amk[i][i];
    c[n - j] = -tr / j;
    mk = amk;
    for (int i = 0; i < n; ++i) mk[i][i] += c[n - j];
  }
  return c;
}

namespace {

void trim(RationalPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

RationalPoly derivative(const RationalPoly& p) {
  RationalPoly d;
  for (size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
  return d;
}

RationalPoly remainder(RationalPoly num, const RationalPoly& den) {
  trim(num);
  const size_t dd = den.size() - 1;
  while (num.size() >= den.size()) {
    const mpq_class factor = num.back() / den.back();
    const size_t shift = num.size() - 1 - dd;
    for (size_t i = 0; i <= dd; ++i) num[shift + i] -= factor * den[i];
    num.pop_back();
    trim(num);
  }
  return num;
}

using IntPoly = std::vector<mpz_class>;

// Positive multiple of p with coprime integer coefficients; signs are kept.
IntPoly primitive_part(const RationalPoly& p) {
  mpz_class l = 1;
  for (const auto& c : p) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  IntPoly out;
  mpz_class g = 0;
  for (const auto& c : p) {
    out.push_back(mpz_class(c.get_num() * (l / c.get_den())));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out.back().get_mpz_t());
  }
  if (g > 1)
    for (auto& c : out) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return out;
}

RationalPoly to_rational(const IntPoly& p) { return RationalPoly(p.begin(), p.end()); }

// Sign of p(num/den) for den > 0, by homogeneous integer Horner.
int sign_at(const IntPoly& p, const mpz_class& num, const mpz_class& den) {
  if (p.empty()) return 0;
  mpz_class acc = p.back();
  mpz_class dp = 1;
  for (size_t i = p.size() - 1; i-- > 0;) {
    dp *= den;
    acc *= num;
    mpz_addmul(acc.get_mpz_t(), p[i].get_mpz_t(), dp.get_mpz_t());
  }
  return sgn(acc);
}

int sign_exact(const IntPoly& p, const mpq_class& x) { return sign_at(p, x.get_num(), x.get_den()); }

int sign_variations(const std::vector<IntPoly>& chain, const mpq_class& x) {
  int count = 0;
  int prev = 0;
  for (const auto& p : chain) {
    const int s = sign_at(p, x.get_num(), x.get_den());
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

}  // namespace

std::vector<RationalInterval> isolate_real_roots(const RationalPoly& p_in) {
  RationalPoly p = p_in;
  trim(p);
  if (p.size() < 2) return {};
  std::vector<IntPoly> chain{primitive_part(p), primitive_part(derivative(p))};
  while (true) {
    RationalPoly r = remainder(to_rational(chain[chain.size() - 2]), to_rational(chain.back()));
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    chain.push_back(primitive_part(r));
  }
  if (chain.back().size() > 1) {
    throw RepeatedEigenvalue("characteristic polynomial has a repeated root (gcd with derivative has degree " +
                             std::to_string(chain.back().size() - 1) + ")");
  }

  // Cauchy bound.
  mpq_class bound = 0;
  for (size_t i = 0; i + 1 < p.size(); ++i) {
    mpq_class r = abs(p[i] / p.back());
    if (r > bound) bound = r;
  }
  bound += 1;
  // round up to a power of two so every bisection point is dyadic
  {
    mpq_class b2 = 1;
    while (b2 < bound) b2 *= 2;
    bound = b2;
  }

  struct Pending {
    mpq_class lo, hi;
    int count;
  };
  std::vector<RationalInterval> out;
  std::vector<Pending> stack{{-bound, bound, sign_variations(chain, -bound) - sign_variations(chain, bound)}};
  while (!stack.empty()) {
    Pending cur = stack.back();
    stack.pop_back();
    if (cur.count == 0) continue;
    if (cur.count == 1) {
      out.push_back({cur.lo, cur.hi});
      continue;
    }
    mpq_class mid = (cur.lo + cur.hi) / 2;
    const int vmid = sign_variations(chain, mid);
    const int left = sign_variations(chain, cur.lo) - vmid;
    stack.push_back({mid, cur.hi, cur.count - left});
    stack.push_back({cur.lo, mid, left});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.hi < b.hi; });
  return out;
}

int default_n_coeffs(int k) { return std::max(2 * k, 64); }
long default_prec_bits(int k) { return std::max(192L, 6L * k); }

namespace {

// Narrows an isolating interval by exact bisection until its width is below
// 2^-bits (relative to max(1, |x|)). Returns true if an exact root was hit.
bool narrow_exact(const RationalPoly& rp, RationalInterval& iv, int bits) {
  if (iv.lo == iv.hi) return true;
  const IntPoly p = primitive_part(rp);
  const int s_hi = sign_exact(p, iv.hi);
  if (s_hi == 0) {
    iv.lo = iv.hi;
    return true;
  }
  mpz_class den = 1;
  den <<= bits;
  const auto tolerance = [&] {
    // relative to the smaller endpoint once the sign is settled
    mpq_class scale = 1;
    if (sgn(iv.lo) == sgn(iv.hi)) scale = std::max(scale, mpq_class(std::min(abs(iv.lo), abs(iv.hi))));
    return mpq_class(scale / den);
  };
  while (iv.hi - iv.lo > tolerance()) {
    mpq_class mid = (iv.lo + iv.hi) / 2;
    const int s = sign_exact(p, mid);
    if (s == 0) {
      iv.lo = iv.hi = mid;
      return true;
    }
    if (s == s_hi) {
      iv.hi = mid;
    } else {
      iv.lo = mid;
    }
  }
  return false;
}

void eval_with_derivative(const std::vector<Real>& c, const Real& x, Real& value, Real& deriv) {
  value.assign(0L);
  deriv.assign(0L);
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    deriv *= x;
    deriv += value;
    value *= x;
    value += *it;
  }
}

// Bits lost to cancellation when evaluating p near the root x.
double root_condition_bits(const RationalPoly& p, const mpq_class& x_exact) {
  const Precision prec = 128;
  const Real x(x_exact, prec);
  const Real ax = mp::abs(x);
  Real sum_abs(prec), value(prec), deriv(prec);
  std::vector<Real> c;
  for (const auto& ci : p) c.emplace_back(ci, prec);
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    sum_abs *= ax;
    sum_abs += mp::abs(*it);
  }
  eval_with_derivative(c, x, value, deriv);
  const double lhs = mp::log2_abs(sum_abs);
  const double rhs = mp::log2_abs(deriv) + std::max(0.0, mp::log2_abs(x));
  return std::max(0.0, lhs - rhs);
}

Real refine_root(const RationalPoly& p, RationalInterval iv, Precision wp) {
  if (narrow_exact(p, iv, 80)) return Real(iv.lo, wp);
  std::vector<Real> c;
  c.reserve(p.size());
  for (const auto& ci : p) c.emplace_back(ci, wp);
  const Real lo(iv.lo, wp), hi(iv.hi, wp);
  Real x(mpq_class((iv.lo + iv.hi) / 2), wp);
  Real value(wp), deriv(wp), step(wp);
  Real tol = mp::max(Real(1L, wp), mp::abs(x));
  tol.mul_2exp(-static_cast<long>(wp) + 4);
  for (int iter = 0; iter < 200; ++iter) {
    eval_with_derivative(c, x, value, deriv);
    if (value.is_zero() || deriv.is_zero()) break;
    step.assign(value);
    step /= deriv;
    Real next = x - step;
    if (next < lo || next > hi) {
      throw std::runtime_error("refine_root: Newton step left the isolating interval near " + x.to_string(20));
    }
    swap(x, next);
    if (mp::abs(step) <= tol) break;
  }
  return x;
}

// Solves (M - lambda I) v = 0 with v[0] = 1 by row-pivoted elimination on
// the remaining columns.
std::vector<Real> eigenvector(const RationalMatrix& m, const Real& lambda, Precision wp) {
  const int d = static_cast<int>(m.size());
  std::vector<Real> v;
  v.emplace_back(1L, wp);
  if (d == 1) return v;
  // Augmented system: columns 1..d-1 unknown, rhs = -column 0.
  std::vector<std::vector<Real>> a(d);
  for (int i = 0; i < d; ++i) {
    for (int j = 1; j < d; ++j) {
      Real e(m[i][j], wp);
      if (i == j) e -= lambda;
      a[i].push_back(std::move(e));
    }
    Real rhs(m[i][0], wp);
    if (i == 0) rhs -= lambda;
    a[i].push_back(-rhs);
  }
  const int cols = d - 1;
  for (int col = 0; col < cols; ++col) {
    int piv = col;
    for (int r = col + 1; r < d; ++r)
      if (mp::abs(a[r][col]) > mp::abs(a[piv][col])) piv = r;
    std::swap(a[piv], a[col]);
    for (int r = col + 1; r < d; ++r) {
      if (a[r][col].is_zero()) continue;
      Real f = a[r][col] / a[col][col];
      for (int c = col; c <= cols; ++c) a[r][c] -= f * a[col][c];
    }
  }
  std::vector<Real> x(cols, Real(wp));
  for (int r = cols - 1; r >= 0; --r) {
    Real s = a[r][cols];
    for (int c = r + 1; c < cols; ++c) s -= a[r][c] * x[c];
    x[r] = s / a[r][r];
  }
  for (auto& xi : x) v.push_back(std::move(xi));
  return v;
}

double log2_abs_q(const mpq_class& q) {
  if (q == 0) return -1e300;
  long en = 0, ed = 0;
  const double mn = mpz_get_d_2exp(&en, q.get_num_mpz_t());
  const double md = mpz_get_d_2exp(&ed, q.get_den_mpz_t());
  return std::log2(std::fabs(mn)) + en - std::log2(md) - ed;
}

double log2_deligne(int n, int k) {
  return std::log2(static_cast<double>(divisor_count(static_cast<unsigned long>(n)))) +
         0.5 * (k - 1) * std::log2(static_cast<double>(n));
}

}  // namespace

std::vector<Eigenform> eigenforms(int k, int n_coeffs, long prec_bits) {
  const int dim = cusp_form_dimension(k);
  if (dim == 0) throw EmptyCuspSpace("eigenforms: S_" + std::to_string(k) + " is zero-dimensional");
  if (n_coeffs < 2) throw std::invalid_argument("eigenforms: need at least two coefficients");
  const int order = std::max(n_coeffs + 1, 2 * dim + 2);
  const CuspBasis basis = cusp_basis(k, order);
  const RationalMatrix t2 = hecke_matrix(basis, 2);
  const RationalPoly chi = characteristic_polynomial(t2);
  const std::vector<RationalInterval> roots = isolate_real_roots(chi);
  if (static_cast<int>(roots.size()) != dim) {
    throw RepeatedEigenvalue("T_2 has " + std::to_string(roots.size()) + " real eigenvalues, expected " +
                             std::to_string(dim));
  }

  // Cancellation budget for a(n) = sum_j v_j form_j[n].
  double growth = 0.0;
  for (int n = 1; n <= n_coeffs; ++n) {
    const double target = log2_deligne(n, k);
    for (int j = 0; j < dim; ++j) {
      const double b = log2_abs_q(basis.forms[j][n]);
      growth = std::max(growth, b + log2_deligne(j + 1, k) - target);
    }
  }
  // Conditioning of the eigenvector solve: entry size over eigenvalue gap.
  double mat_bits = 0.0;
  for (const auto& row : t2)
    for (const auto& e : row) mat_bits = std::max(mat_bits, log2_abs_q(e));
  double min_gap_bits = 1e300;
  for (size_t i = 1; i < roots.size(); ++i) {
    const mpq_class gap = roots[i].lo - roots[i - 1].hi;
    min_gap_bits = std::min(min_gap_bits, gap > 0 ? log2_abs_q(gap) : -64.0);
  }
  const double solve_bits = dim > 1 ? std::max(0.0, mat_bits - min_gap_bits) : 0.0;
  const Precision wp =
      static_cast<Precision>(prec_bits + 48 + std::ceil(growth) + std::ceil(solve_bits) + std::log2(dim) + 1);

  std::vector<Eigenform> out;
  out.reserve(dim);
  for (int idx = 0; idx < dim; ++idx) {
    const mpq_class approx = (roots[idx].lo + roots[idx].hi) / 2;
    const Precision root_wp = wp + static_cast<Precision>(std::ceil(root_condition_bits(chi, approx))) + 16;
    Real lambda(refine_root(chi, roots[idx], root_wp), wp);
    const std::vector<Real> v = eigenvector(t2, lambda, wp);

    Eigenform f;
    f.weight = k;
    f.w = k - 2;
    f.prec_bits = prec_bits;
    f.field_degree = dim;
    f.conjugate_index = idx;
    f.t2_eigenvalue = Real(lambda, static_cast<Precision>(prec_bits));
    f.a.reserve(static_cast<size_t>(n_coeffs) + 1);
    f.a.emplace_back(static_cast<Precision>(prec_bits));
    Real acc(wp), term(wp);
    for (int n = 1; n <= n_coeffs; ++n) {
      acc.assign(0L);
      for (int j = 0; j < dim; ++j) {
        const mpq_class& c = basis.forms[j][n];
        if (c == 0) continue;
        term.assign(v[j]);
        term *= c;
        acc += term;
      }
      f.a.emplace_back(acc, static_cast<Precision>(prec_bits));
    }
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace ppz
