#include "ppz/exact_series.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <shared_mutex>
#include <string>

namespace ppz {

QSeries QSeries::one(int order) {
  QSeries s = zero(order);
  if (order > 0) s[0] = 1;
  return s;
}

QSeries QSeries::truncated(int order) const {
  const int n = std::min(order, this->order());
  return QSeries(std::vector<mpq_class>(coeffs.begin(), coeffs.begin() + n));
}

QSeries series_mul(const QSeries& a, const QSeries& b) {
  const int order = std::min(a.order(), b.order());
  QSeries out = QSeries::zero(order);
  // Integer-valued series are common (E4, E6, Delta); skip the rational
  // canonicalization cost in that case.
  const auto integral = [](const QSeries& s, int n) {
    for (int i = 0; i < n; ++i)
      if (s[i].get_den() != 1) return false;
    return true;
  };
  if (integral(a, order) && integral(b, order)) {
    mpz_class acc;
    for (int n = 0; n < order; ++n) {
      acc = 0;
      for (int i = 0; i <= n; ++i) {
        if (a[i].get_num() == 0) continue;
        mpz_addmul(acc.get_mpz_t(), a[i].get_num_mpz_t(), b[n - i].get_num_mpz_t());
      }
      out[n] = acc;
    }
    return out;
  }
  for (int n = 0; n < order; ++n) {
    mpq_class acc = 0;
    for (int i = 0; i <= n; ++i) {
      if (a[i] == 0) continue;
      acc += a[i] * b[n - i];
    }
    out[n] = acc;
  }
  return out;
}

QSeries series_add(const QSeries& a, const QSeries& b) {
  const int order = std::min(a.order(), b.order());
  QSeries out = QSeries::zero(order);
  for (int n = 0; n < order; ++n) out[n] = a[n] + b[n];
  return out;
}

QSeries series_sub(const QSeries& a, const QSeries& b) {
  const int order = std::min(a.order(), b.order());
  QSeries out = QSeries::zero(order);
  for (int n = 0; n < order; ++n) out[n] = a[n] - b[n];
  return out;
}

QSeries series_scale(const QSeries& a, const mpq_class& s) {
  QSeries out = a;
  for (auto& c : out.coeffs) c *= s;
  return out;
}

QSeries series_pow(const QSeries& a, unsigned e, int order) {
  QSeries result = QSeries::one(std::min(order, a.order()));
  QSeries base = a.truncated(order);
  while (e != 0) {
    if (e & 1U) result = series_mul(result, base);
    e >>= 1U;
    if (e != 0) base = series_mul(base, base);
  }
  return result;
}

mpz_class sigma_power(unsigned long n, unsigned r) {
  if (n == 0) throw std::invalid_argument("sigma_power: n must be positive");
  mpz_class total = 0;
  mpz_class term;
  for (unsigned long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    mpz_ui_pow_ui(term.get_mpz_t(), d, r);
    total += term;
    const unsigned long e = n / d;
    if (e != d) {
      mpz_ui_pow_ui(term.get_mpz_t(), e, r);
      total += term;
    }
  }
  return total;
}

unsigned long divisor_count(unsigned long n) {
  unsigned long count = 0;
  for (unsigned long d = 1; d * d <= n; ++d) {
    if (n % d == 0) count += (d * d == n) ? 1 : 2;
  }
  return count;
}

namespace {

struct BernoulliCache {
  std::shared_mutex mutex;
  // deque: push_back keeps references to earlier entries valid.
  std::deque<mpq_class> values{mpq_class(1)};
};

BernoulliCache& bernoulli_cache() {
  static BernoulliCache cache;
  return cache;
}

}  // namespace

const mpq_class& bernoulli(unsigned n) {
  auto& cache = bernoulli_cache();
  {
    std::shared_lock lock(cache.mutex);
    if (n < cache.values.size()) return cache.values[n];
  }
  std::unique_lock lock(cache.mutex);
  auto& b = cache.values;
  // sum_{j=0}^{m} C(m+1, j) B_j = 0
  while (b.size() <= n) {
    const unsigned m = static_cast<unsigned>(b.size());
    mpq_class acc = 0;
    mpz_class binom = 1;  // C(m+1, 0)
    for (unsigned j = 0; j < m; ++j) {
      acc += binom * b[j];
      binom = binom * (m + 1 - j) / (j + 1);
    }
    mpq_class bm = -acc / (m + 1);
    bm.canonicalize();
    b.push_back(bm);
  }
  return b[n];
}

QSeries eisenstein_qexp(int k, int order) {
  if (k < 4 || k % 2 != 0) throw std::invalid_argument("eisenstein_qexp: weight must be even and >= 4");
  if (order < 1) throw std::invalid_argument("eisenstein_qexp: order must be positive");
  const mpq_class factor = mpq_class(-2 * k) / bernoulli(static_cast<unsigned>(k));
  QSeries e = QSeries::zero(order);
  e[0] = 1;
  for (int n = 1; n < order; ++n) {
    e[n] = factor * sigma_power(static_cast<unsigned long>(n), static_cast<unsigned>(k - 1));
  }
  return e;
}

QSeries delta_qexp(int order) {
  if (order < 1) throw std::invalid_argument("delta_qexp: order must be positive");
  const QSeries e4 = eisenstein_qexp(4, order);
  const QSeries e6 = eisenstein_qexp(6, order);
  const QSeries e4cubed = series_mul(series_mul(e4, e4), e4);
  const QSeries e6sq = series_mul(e6, e6);
  return series_scale(series_sub(e4cubed, e6sq), mpq_class(1, 1728));
}

int cusp_form_dimension(int k) {
  if (k < 12 || k % 2 != 0) return 0;
  if (k % 12 == 2) return k / 12 - 1;
  return k / 12;
}

CuspBasis cusp_basis(int k, int order) {
  if (k < 4 || k % 2 != 0) throw std::invalid_argument("cusp_basis: weight must be even and >= 4");
  CuspBasis basis;
  basis.weight = k;
  basis.dim = cusp_form_dimension(k);
  if (basis.dim == 0) return basis;
  if (order <= basis.dim) {
    throw InsufficientOrder("cusp_basis: order " + std::to_string(order) + " must exceed dim " +
                            std::to_string(basis.dim));
  }

  const QSeries delta = delta_qexp(order);
  const QSeries e4 = eisenstein_qexp(4, order);
  const QSeries e6 = eisenstein_qexp(6, order);
  const QSeries e4cubed = series_pow(e4, 3, order);

  // Delta^a * E4^b * E6^c with 12a + 4b + 6c = k and c in {0, 1}. Each such
  // product starts q^a + ..., so the list is already upper triangular.
  // Walk a downward so b grows by 3 each step and E4^3 can be reused.
  std::vector<QSeries> delta_pows{delta};
  for (int a = 2; a <= basis.dim; ++a) delta_pows.push_back(series_mul(delta_pows.back(), delta));

  std::vector<QSeries> forms(basis.dim);
  QSeries e_part;
  for (int a = basis.dim; a >= 1; --a) {
    const int m = k - 12 * a;
    const int c = (m % 4 == 0) ? 0 : 1;
    const int b = (m - 6 * c) / 4;
    if (a == basis.dim) {
      e_part = series_pow(e4, static_cast<unsigned>(b), order);
      if (c == 1) e_part = series_mul(e_part, e6);
    } else {
      e_part = series_mul(e_part, e4cubed);
    }
    forms[a - 1] = series_mul(delta_pows[a - 1], e_part);
  }

  // Back-substitute so form j is zero at q^(i+1) for every i > j.
  for (int j = basis.dim - 1; j >= 0; --j) {
    for (int i = j + 1; i < basis.dim; ++i) {
      const mpq_class c = forms[j][i + 1];
      if (c == 0) continue;
      for (int n = 0; n < order; ++n) forms[j][n] -= c * forms[i][n];
    }
  }
  basis.forms = std::move(forms);
  return basis;
}

}  // namespace ppz
