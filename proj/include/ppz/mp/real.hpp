#pragma once

// Thin value-semantic wrapper over mpfr_t. Every Real carries its own
// precision; binary operators produce max(lhs, rhs) precision, compound
// assignment keeps the precision of the target.

#include <mpfr.h>
#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>
#include <utility>

namespace ppz::mp {

using Precision = mpfr_prec_t;

class Real {
 public:
  explicit Real(Precision prec = 64) {
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
  }
  Real(long value, Precision prec) {
    mpfr_init2(v_, prec);
    mpfr_set_si(v_, value, MPFR_RNDN);
  }
  Real(int value, Precision prec) : Real(static_cast<long>(value), prec) {}
  Real(unsigned long value, Precision prec) {
    mpfr_init2(v_, prec);
    mpfr_set_ui(v_, value, MPFR_RNDN);
  }
  Real(double value, Precision prec) {
    mpfr_init2(v_, prec);
    mpfr_set_d(v_, value, MPFR_RNDN);
  }
  Real(const mpz_class& value, Precision prec) {
    mpfr_init2(v_, prec);
    mpfr_set_z(v_, value.get_mpz_t(), MPFR_RNDN);
  }
  Real(const mpq_class& value, Precision prec) {
    mpfr_init2(v_, prec);
    mpfr_set_q(v_, value.get_mpq_t(), MPFR_RNDN);
  }
  // Same value rounded to a new precision.
  Real(const Real& other, Precision prec) {
    mpfr_init2(v_, prec);
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }

  Real(const Real& other) {
    mpfr_init2(v_, other.precision());
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  Real(Real&& other) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, other.v_);
  }
  Real& operator=(const Real& other) {
    if (this != &other) {
      mpfr_set_prec(v_, other.precision());
      mpfr_set(v_, other.v_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& other) noexcept {
    mpfr_swap(v_, other.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  static Real from_string(std::string_view text, Precision prec);
  static Real pi(Precision prec);
  static Real factorial(unsigned long n, Precision prec);
  static Real two_pow(long e, Precision prec);

  Precision precision() const { return mpfr_get_prec(v_); }
  // Keeps the value (rounded) and changes the precision.
  void set_precision(Precision prec) { mpfr_prec_round(v_, prec, MPFR_RNDN); }
  // Assign without changing this object's precision.
  void assign(const Real& other) { mpfr_set(v_, other.v_, MPFR_RNDN); }
  void assign(long value) { mpfr_set_si(v_, value, MPFR_RNDN); }
  void assign(const mpz_class& value) { mpfr_set_z(v_, value.get_mpz_t(), MPFR_RNDN); }
  void assign(const mpq_class& value) { mpfr_set_q(v_, value.get_mpq_t(), MPFR_RNDN); }

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }
  // Shortest decimal string that reads back to the same value at this
  // precision.
  std::string to_string() const;
  // Fixed number of significant digits.
  std::string to_string(int digits) const;

  int sign() const { return mpfr_sgn(v_); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  // Binary exponent e with 0.5 <= |x| / 2^e < 1; meaningless for zero.
  long exponent() const { return mpfr_get_exp(v_); }

  Real& operator+=(const Real& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator-=(const Real& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator*=(const Real& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator/=(const Real& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator+=(long o) { mpfr_add_si(v_, v_, o, MPFR_RNDN); return *this; }
  Real& operator-=(long o) { mpfr_sub_si(v_, v_, o, MPFR_RNDN); return *this; }
  Real& operator*=(long o) { mpfr_mul_si(v_, v_, o, MPFR_RNDN); return *this; }
  Real& operator/=(long o) { mpfr_div_si(v_, v_, o, MPFR_RNDN); return *this; }
  Real& operator*=(const mpz_class& o) { mpfr_mul_z(v_, v_, o.get_mpz_t(), MPFR_RNDN); return *this; }
  Real& operator*=(const mpq_class& o) { mpfr_mul_q(v_, v_, o.get_mpq_t(), MPFR_RNDN); return *this; }
  Real& mul_2exp(long e) { mpfr_mul_2si(v_, v_, e, MPFR_RNDN); return *this; }
  Real& negate() { mpfr_neg(v_, v_, MPFR_RNDN); return *this; }

  friend void swap(Real& a, Real& b) noexcept { mpfr_swap(a.v_, b.v_); }

 private:
  mpfr_t v_;
};

namespace detail {
inline Precision max_prec(const Real& a, const Real& b) {
  return a.precision() > b.precision() ? a.precision() : b.precision();
}
}  // namespace detail

inline Real operator-(const Real& a) {
  Real r(a);
  return r.negate();
}
inline Real operator+(const Real& a, const Real& b) {
  Real r(detail::max_prec(a, b));
  mpfr_add(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}
inline Real operator-(const Real& a, const Real& b) {
  Real r(detail::max_prec(a, b));
  mpfr_sub(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}
inline Real operator*(const Real& a, const Real& b) {
  Real r(detail::max_prec(a, b));
  mpfr_mul(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}
inline Real operator/(const Real& a, const Real& b) {
  Real r(detail::max_prec(a, b));
  mpfr_div(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}
inline Real operator+(Real a, long b) { return a += b; }
inline Real operator-(Real a, long b) { return a -= b; }
inline Real operator*(Real a, long b) { return a *= b; }
inline Real operator/(Real a, long b) { return a /= b; }
inline Real operator+(long a, Real b) { return b += a; }
inline Real operator*(long a, Real b) { return b *= a; }
inline Real operator-(long a, const Real& b) {
  Real r(b.precision());
  mpfr_si_sub(r.get(), a, b.get(), MPFR_RNDN);
  return r;
}
inline Real operator/(long a, const Real& b) {
  Real r(b.precision());
  mpfr_si_div(r.get(), a, b.get(), MPFR_RNDN);
  return r;
}

// A double would silently narrow to long here.
Real operator+(const Real&, double) = delete;
Real operator-(const Real&, double) = delete;
Real operator*(const Real&, double) = delete;
Real operator/(const Real&, double) = delete;
Real operator+(double, const Real&) = delete;
Real operator-(double, const Real&) = delete;
Real operator*(double, const Real&) = delete;
Real operator/(double, const Real&) = delete;

inline bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.get(), b.get()) != 0; }
inline std::partial_ordering operator<=>(const Real& a, const Real& b) {
  if (mpfr_unordered_p(a.get(), b.get())) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.get(), b.get());
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}
inline bool operator==(const Real& a, long b) { return !mpfr_nan_p(a.get()) && mpfr_cmp_si(a.get(), b) == 0; }
inline std::partial_ordering operator<=>(const Real& a, long b) {
  const int c = mpfr_cmp_si(a.get(), b);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}
inline bool operator==(const Real& a, double b) { return !mpfr_nan_p(a.get()) && mpfr_cmp_d(a.get(), b) == 0; }
inline std::partial_ordering operator<=>(const Real& a, double b) {
  const int c = mpfr_cmp_d(a.get(), b);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

Real abs(const Real& x);
Real sqrt(const Real& x);
Real exp(const Real& x);
Real log(const Real& x);
Real log2(const Real& x);
Real log10(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
Real sinh(const Real& x);
Real cosh(const Real& x);
Real atan2(const Real& y, const Real& x);
Real pow(const Real& x, long e);
Real pow(const Real& x, const Real& e);
void sin_cos(Real& s, Real& c, const Real& x);
void sinh_cosh(Real& sh, Real& ch, const Real& x);
Real max(const Real& a, const Real& b);
Real min(const Real& a, const Real& b);

// |x| as a double-valued log2, -inf for zero. Handy for bit budgets.
double log2_abs(const Real& x);

}  // namespace ppz::mp
