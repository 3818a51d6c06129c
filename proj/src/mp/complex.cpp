#include "ppz/mp/complex.hpp"

namespace ppz::mp {

Complex Complex::polar(const Real& radius, const Real& angle) {
  Complex z(angle.precision());
  sin_cos(z.im, z.re, angle);
  z.re *= radius;
  z.im *= radius;
  return z;
}

Complex& Complex::operator*=(const Complex& o) {
  // (a + bi)(c + di) = (ac - bd) + (ad + bc)i
  Real ac = re * o.re;
  Real bd = im * o.im;
  Real ad = re * o.im;
  im *= o.re;
  im += ad;
  re.assign(ac);
  re -= bd;
  return *this;
}

Complex& Complex::operator/=(const Complex& o) {
  Complex inv = inverse(o);
  return *this *= inv;
}

Real norm(const Complex& z) {
  Real r = z.re * z.re;
  Real t = z.im * z.im;
  return r += t;
}

Real abs(const Complex& z) {
  Real r(detail::max_prec(z.re, z.im));
  mpfr_hypot(r.get(), z.re.get(), z.im.get(), MPFR_RNDN);
  return r;
}

Real arg(const Complex& z) { return atan2(z.im, z.re); }

Complex inverse(const Complex& z) {
  Real n = norm(z);
  Complex r(z.re / n, -(z.im / n));
  return r;
}

Complex exp(const Complex& z) {
  Real m = ppz::mp::exp(z.re);
  Complex r = Complex::polar(m, z.im);
  return r;
}

Complex sin(const Complex& z) {
  // sin(x + iy) = sin x cosh y + i cos x sinh y
  const Precision p = z.precision();
  Real s(p), c(p), sh(p), ch(p);
  sin_cos(s, c, z.re);
  sinh_cosh(sh, ch, z.im);
  s *= ch;
  c *= sh;
  return Complex(std::move(s), std::move(c));
}

}  // namespace ppz::mp
