#pragma once

// Special values L_f(s) at the integers 1 <= s <= k-1 through the
// incomplete-gamma expansion of the completed L-function
//
//   Lambda(s) = (2 pi)^-s Gamma(s) L_f(s)
//             = sum_n a(n) [ G(s, 2 pi n) + (-1)^(k/2) G(k - s, 2 pi n) ],
//   G(s, x)   = x^-s Gamma(s, x),
//
// with an explicit bound on the truncated tail derived from
// |a(n)| <= d(n) n^((k-1)/2) <= 2 n^(k/2).

#include <optional>
#include <stdexcept>
#include <vector>

#include "ppz/hecke_eigen.hpp"
#include "ppz/mp/real.hpp"

namespace ppz {

class InsufficientCoefficients : public std::runtime_error {
 public:
  InsufficientCoefficients(int required, int available);
  int required() const { return required_; }

 private:
  int required_;
};

// Gamma(s, x) for integer s >= 1 by Gamma(s+1, x) = s Gamma(s, x) + x^s e^-x.
mp::Real upper_incomplete_gamma_int(int s, const mp::Real& x);

// Upper bound for the truncated tail of Lambda(s) when summing n <= n_terms.
// Returns +inf if the explicit estimate does not apply yet (2 pi (N+1) too
// small for the geometric-ratio argument).
mp::Real lambda_tail_bound(int k, int s, int n_terms);

// Smallest N for which the L-value tail bound is below 2^-(prec_bits + 8)
// for every s in [1, k-1].
int truncation_length(int k, long prec_bits);

struct LValueRecord {
  int s = 0;
  mp::Real value;      // L_f(s)
  mp::Real completed;  // Lambda(s)
  mp::Real tail_bound; // bound on |L_f(s) - value| from truncation
  int n_terms_used = 0;
  std::optional<bool> bound1_ok;
  std::optional<bool> bound2_ok;
};

// Fresh single evaluation, independent of LFunction's shared tables.
// n_terms <= 0 picks truncation_length(k, f.prec_bits).
LValueRecord completed_lvalue(const Eigenform& f, int s, int n_terms = 0);

// All values s = 1 .. k-1 computed together; immutable after construction.
class LFunction {
 public:
  explicit LFunction(const Eigenform& f, int n_terms = 0);

  int weight() const { return weight_; }
  int n_terms() const { return n_terms_; }
  const LValueRecord& at(int s) const;
  const mp::Real& value(int s) const { return at(s).value; }
  const mp::Real& completed(int s) const { return at(s).completed; }
  const std::vector<LValueRecord>& records() const { return records_; }

 private:
  int weight_;
  int n_terms_;
  std::vector<LValueRecord> records_;  // records_[s - 1]
};

// |L_f(s) - 1| <= 4 * 2^(-k/4) for s >= 3k/4.
mp::Real lvalue_bound_near_one(int k, mp::Precision prec = 128);
// |L_f(s)| <= 2 sqrt(k) log(2k) + 1 for integer s >= k/2.
mp::Real lvalue_bound_growth(int k, mp::Precision prec = 128);

struct LValueBoundRow {
  int s = 0;
  mp::Real value;
  std::optional<bool> bound1_ok;  // set iff 4s >= 3k
  std::optional<bool> bound2_ok;  // set iff 2s >= k
};

// Every integer s in [k/2, k-1]; violations are reported, never thrown.
std::vector<LValueBoundRow> check_lvalue_bounds(const LFunction& lf);

}  // namespace ppz
