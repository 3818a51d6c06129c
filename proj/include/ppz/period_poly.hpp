#pragma once

// Odd period polynomials r_f^-, the rescaled p_f and its small half q_f, the
// weight-w slash action with its two cocycle relations, the trivial-zero
// certificate and the Bernoulli-type period polynomials of the cusp forms R_n.

#include <gmpxx.h>

#include <string>
#include <vector>

#include "ppz/hecke_eigen.hpp"
#include "ppz/lfunction.hpp"
#include "ppz/mp/complex.hpp"
#include "ppz/mp/real.hpp"

namespace ppz {

enum class Parity { odd, even, none };

const char* to_string(Parity p);

class RealPoly {
 public:
  RealPoly() = default;
  // Trailing zero coefficients are trimmed. With Parity::odd (even) every
  // even-indexed (odd-indexed) coefficient must be exactly zero.
  RealPoly(std::vector<mp::Real> coeffs, Parity parity);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Parity parity() const { return parity_; }
  const std::vector<mp::Real>& coeffs() const { return coeffs_; }
  const mp::Real& coeff(int i) const { return coeffs_.at(static_cast<size_t>(i)); }
  mp::Precision precision() const;

  mp::Real operator()(const mp::Real& x) const;
  mp::Complex operator()(const mp::Complex& z) const;
  mp::Real derivative_at(const mp::Real& x) const;
  // Value and derivative in one Horner pass.
  void evaluate_with_derivative(const mp::Complex& z, mp::Complex& value, mp::Complex& deriv) const;

  mp::Real max_abs_coeff() const;
  RealPoly scaled(const mp::Real& factor) const;
  RealPoly with_precision(mp::Precision prec) const;

 private:
  std::vector<mp::Real> coeffs_;
  Parity parity_ = Parity::none;
};

// Projective unimodular matrix acting by
// (p | A)(z) = (cz + d)^w p((az + b) / (cz + d)).
struct Moebius {
  long a = 1, b = 0, c = 0, d = 1;

  static Moebius identity() { return {1, 0, 0, 1}; }
  static Moebius S() { return {0, 1, -1, 0}; }
  static Moebius U() { return {1, -1, 1, 0}; }
  long det() const { return a * d - b * c; }
  Moebius operator*(const Moebius& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
  }
};

RealPoly slash(const RealPoly& p, const Moebius& m, int w);

// Exact rational counterpart of slash for polynomials over Q.
std::vector<mpq_class> slash_exact(const std::vector<mpq_class>& p, const Moebius& m, int w);

// r_f^-(X) = sum_{n odd} (-1)^((n-1)/2) C(w, n) Lambda(n+1) X^(w-n), where
// Lambda(n+1) = n! (2 pi)^(-n-1) L_f(n+1). Built so that c_j and c_(w-j)
// are the same stored value.
RealPoly odd_period_polynomial(const LFunction& lf);
RealPoly odd_period_polynomial(const Eigenform& f);

// Factor turning r_f^- into p_f(X) = sum_m (-1)^m (2 pi X)^(2m+1) L_f(w-2m) / (2m+1)!.
mp::Real normalization_factor(int w, mp::Precision prec);
RealPoly normalized_p(const LFunction& lf);

// q_f with p_f(X) = q_f(X) + X^w q_f(1/X): every odd power below w/2, plus half
// of the X^(w/2) term when w/2 is odd.
RealPoly q_split(const LFunction& lf);

struct CocycleResidual {
  mp::Real s_relation;  // max |coeff of P|(1+S)| / max |coeff of P|
  mp::Real u_relation;  // max |coeff of P|(1+U+U^2)| / max |coeff of P|
  mp::Real max(mp::Precision prec = 64) const;
};

CocycleResidual check_cocycle_relations(const RealPoly& p, int k);

struct TrivialZeroCheck {
  std::string label;
  mp::Real residual;
  mp::Real tolerance;
  bool pass = false;
};

struct TrivialZeroCertificate {
  std::vector<TrivialZeroCheck> checks;  // nine evaluations, then two identities
  bool all_pass() const;
};

// P(0), P(+-1), P'(+-1), P(+-2), P(+-1/2), and P(2) +- 2^w P(1/2). The
// tolerance is 2^(-prec/2) max|c_j| max(1, |x|)^w, times w for derivatives.
TrivialZeroCertificate trivial_zero_certificate(const RealPoly& r, int w);

// Exact odd period polynomial of R_n for even 0 < n < w:
// (-1)^(k/2 + n/2) 2^w [B0_{w-n+1}/(w-n+1) - B0_{n+1}/(n+1)] | (1 - S),
// with B0_m(X) = sum_{i != 1} C(m, i) B_i X^(m-i).
std::vector<mpq_class> bernoulli_period_polynomial_exact(int n, int w);
RealPoly bernoulli_period_polynomial(int n, int w, mp::Precision prec);

// sqrt(det(G)) of the Gram matrix of the row-normalized odd coefficient
// vectors. Zero iff the polynomials are linearly dependent.
mp::Real independence_measure(const std::vector<RealPoly>& polys);

}  // namespace ppz
