#pragma once

// Exact rational q-expansions for level one: Eisenstein series, Delta and an
// echelonized basis of the cusp space S_k. Everything here is exact; all
// results are understood modulo q^order.

#include <gmpxx.h>

#include <stdexcept>
#include <vector>

namespace ppz {

class InsufficientOrder : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct QSeries {
  std::vector<mpq_class> coeffs;  // coeffs[n] is the coefficient of q^n

  QSeries() = default;
  explicit QSeries(std::vector<mpq_class> c) : coeffs(std::move(c)) {}
  static QSeries zero(int order) { return QSeries(std::vector<mpq_class>(order)); }
  static QSeries one(int order);

  int order() const { return static_cast<int>(coeffs.size()); }
  const mpq_class& operator[](int n) const { return coeffs[n]; }
  mpq_class& operator[](int n) { return coeffs[n]; }
  QSeries truncated(int order) const;

  bool operator==(const QSeries&) const = default;
};

QSeries series_mul(const QSeries& a, const QSeries& b);
QSeries series_add(const QSeries& a, const QSeries& b);
QSeries series_sub(const QSeries& a, const QSeries& b);
QSeries series_scale(const QSeries& a, const mpq_class& s);
QSeries series_pow(const QSeries& a, unsigned e, int order);

// sum of d^r over the divisors d of n.
mpz_class sigma_power(unsigned long n, unsigned r);

// Number of divisors of n.
unsigned long divisor_count(unsigned long n);

// B_n with B_1 = -1/2. Cached; safe to call from several threads.
const mpq_class& bernoulli(unsigned n);

// E_k = 1 - (2k / B_k) sum sigma_{k-1}(n) q^n, k even >= 4.
QSeries eisenstein_qexp(int k, int order);

// (E4^3 - E6^2) / 1728.
QSeries delta_qexp(int order);

// Classical dimension of S_k for level one.
int cusp_form_dimension(int k);

struct CuspBasis {
  int weight = 0;
  int dim = 0;
  // forms[j] has coefficient 1 at q^(j+1) and 0 at q^(i+1), i != j, i < dim.
  std::vector<QSeries> forms;

  int order() const { return forms.empty() ? 0 : forms.front().order(); }
};

// Echelonized basis built from Delta^a E4^b E6^c, a >= 1. Requires
// order > dim; throws InsufficientOrder otherwise.
CuspBasis cusp_basis(int k, int order);

}  // namespace ppz
