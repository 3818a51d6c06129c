#pragma once

// Hecke operators on exact q-expansions and real embeddings of the
// normalized eigenforms of level one.

#include <gmpxx.h>

#include <stdexcept>
#include <vector>

#include "ppz/exact_series.hpp"
#include "ppz/mp/real.hpp"

namespace ppz {

using RationalMatrix = std::vector<std::vector<mpq_class>>;
// Coefficients by ascending power.
using RationalPoly = std::vector<mpq_class>;

class RepeatedEigenvalue : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class EmptyCuspSpace : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// b(n) = sum_{d | gcd(m, n)} d^(k-1) a(mn / d^2) for n < out_order.
// out_order <= 0 selects the largest order the input supports.
QSeries hecke_apply(const QSeries& series, int m, int k, int out_order = 0);

// Matrix of T_m in the echelon basis: T_m(form_j) = sum_i M[i][j] form_i.
RationalMatrix hecke_matrix(const CuspBasis& basis, int m);

// Monic characteristic polynomial det(xI - M), ascending coefficients.
RationalPoly characteristic_polynomial(const RationalMatrix& m);

struct RationalInterval {
  mpq_class lo;
  mpq_class hi;  // root lies in (lo, hi], or equals lo == hi
};

// Disjoint isolating intervals for the real roots, ascending. Throws
// RepeatedEigenvalue if the polynomial is not squarefree.
std::vector<RationalInterval> isolate_real_roots(const RationalPoly& p);

struct Eigenform {
  int weight = 0;
  int w = 0;
  long prec_bits = 0;
  // a[n] for 0 <= n <= N; a[0] = 0 and a[1] = 1.
  std::vector<mp::Real> a;
  mp::Real t2_eigenvalue;
  int field_degree = 0;
  int conjugate_index = 0;

  int n_coeffs() const { return static_cast<int>(a.size()) - 1; }
  const mp::Real& coeff(int n) const { return a.at(static_cast<size_t>(n)); }
};

int default_n_coeffs(int k);
long default_prec_bits(int k);

// One eigenform per real embedding, ordered by ascending T_2 eigenvalue.
// Throws EmptyCuspSpace when dim S_k = 0.
std::vector<Eigenform> eigenforms(int k, int n_coeffs, long prec_bits);
inline std::vector<Eigenform> eigenforms(int k) {
  return eigenforms(k, default_n_coeffs(k), default_prec_bits(k));
}

}  // namespace ppz
