#include "ppz/mp/real.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace ppz::mp {

Real Real::from_string(std::string_view text, Precision prec) {
  Real r(prec);
  const std::string buf(text);
  if (mpfr_set_str(r.get(), buf.c_str(), 10, MPFR_RNDN) != 0) {
    throw std::invalid_argument("not a decimal number: " + buf);
  }
  return r;
}

Real Real::pi(Precision prec) {
  Real r(prec);
  mpfr_const_pi(r.get(), MPFR_RNDN);
  return r;
}

Real Real::factorial(unsigned long n, Precision prec) {
  Real r(prec);
  mpfr_fac_ui(r.get(), n, MPFR_RNDN);
  return r;
}

Real Real::two_pow(long e, Precision prec) {
  Real r(1L, prec);
  return r.mul_2exp(e);
}

namespace {

std::string format(mpfr_srcptr v, size_t digits) {
  if (mpfr_nan_p(v)) return "nan";
  if (mpfr_inf_p(v)) return mpfr_sgn(v) > 0 ? "inf" : "-inf";
  if (mpfr_zero_p(v)) return "0";
  mpfr_exp_t exp10 = 0;
  char* raw = mpfr_get_str(nullptr, &exp10, 10, digits, v, MPFR_RNDN);
  std::string mant(raw);
  mpfr_free_str(raw);
  std::string sign;
  if (mant[0] == '-') {
    sign = "-";
    mant.erase(0, 1);
  }
  while (mant.size() > 1 && mant.back() == '0') mant.pop_back();
  // d.ddddde(exp10 - 1)
  std::string out = sign + mant.substr(0, 1);
  if (mant.size() > 1) out += "." + mant.substr(1);
  const long e = static_cast<long>(exp10) - 1;
  if (e != 0) out += "e" + std::to_string(e);
  return out;
}

}  // namespace

std::string Real::to_string() const { return format(v_, 0); }

std::string Real::to_string(int digits) const {
  return format(v_, static_cast<size_t>(digits < 2 ? 2 : digits));
}

#define PPZ_UNARY(name, fn)                     \
  Real name(const Real& x) {                    \
    Real r(x.precision());                      \
    fn(r.get(), x.get(), MPFR_RNDN);            \
    return r;                                   \
  }

PPZ_UNARY(abs, mpfr_abs)
PPZ_UNARY(sqrt, mpfr_sqrt)
PPZ_UNARY(exp, mpfr_exp)
PPZ_UNARY(log, mpfr_log)
PPZ_UNARY(log2, mpfr_log2)
PPZ_UNARY(log10, mpfr_log10)
PPZ_UNARY(sin, mpfr_sin)
PPZ_UNARY(cos, mpfr_cos)
PPZ_UNARY(sinh, mpfr_sinh)
PPZ_UNARY(cosh, mpfr_cosh)

#undef PPZ_UNARY

Real atan2(const Real& y, const Real& x) {
  Real r(detail::max_prec(x, y));
  mpfr_atan2(r.get(), y.get(), x.get(), MPFR_RNDN);
  return r;
}

Real pow(const Real& x, long e) {
  Real r(x.precision());
  mpfr_pow_si(r.get(), x.get(), e, MPFR_RNDN);
  return r;
}

Real pow(const Real& x, const Real& e) {
  Real r(detail::max_prec(x, e));
  mpfr_pow(r.get(), x.get(), e.get(), MPFR_RNDN);
  return r;
}

void sin_cos(Real& s, Real& c, const Real& x) { mpfr_sin_cos(s.get(), c.get(), x.get(), MPFR_RNDN); }

void sinh_cosh(Real& sh, Real& ch, const Real& x) {
  mpfr_sinh_cosh(sh.get(), ch.get(), x.get(), MPFR_RNDN);
}

Real max(const Real& a, const Real& b) { return a < b ? b : a; }
Real min(const Real& a, const Real& b) { return b < a ? b : a; }

double log2_abs(const Real& x) {
  if (x.is_zero()) return -std::numeric_limits<double>::infinity();
  long e = 0;
  const double m = mpfr_get_d_2exp(&e, x.get(), MPFR_RNDN);
  return std::log2(std::fabs(m)) + static_cast<double>(e);
}

}  // namespace ppz::mp
