#pragma once

// Rectangular complex numbers over Real. No ball or interval semantics.

#include "ppz/mp/real.hpp"

namespace ppz::mp {

struct Complex {
  Real re;
  Real im;

  explicit Complex(Precision prec = 64) : re(prec), im(prec) {}
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  explicit Complex(const Real& r) : re(r), im(r.precision()) {}
  Complex(double r, double i, Precision prec) : re(r, prec), im(i, prec) {}

  static Complex polar(const Real& radius, const Real& angle);

  Precision precision() const { return re.precision(); }
  void set_precision(Precision prec) {
    re.set_precision(prec);
    im.set_precision(prec);
  }

  Complex& operator+=(const Complex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Complex& operator-=(const Complex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  Complex& operator*=(const Complex& o);
  Complex& operator/=(const Complex& o);
  Complex& operator*=(const Real& s) {
    re *= s;
    im *= s;
    return *this;
  }
  Complex& operator/=(const Real& s) {
    re /= s;
    im /= s;
    return *this;
  }
};

inline Complex operator+(Complex a, const Complex& b) { return a += b; }
inline Complex operator-(Complex a, const Complex& b) { return a -= b; }
inline Complex operator*(Complex a, const Complex& b) { return a *= b; }
inline Complex operator/(Complex a, const Complex& b) { return a /= b; }
inline Complex operator*(Complex a, const Real& s) { return a *= s; }
inline Complex operator-(const Complex& a) { return Complex(-a.re, -a.im); }

inline Complex conj(const Complex& z) { return Complex(z.re, -z.im); }
Real norm(const Complex& z);  // |z|^2
Real abs(const Complex& z);
Real arg(const Complex& z);
Complex inverse(const Complex& z);
Complex exp(const Complex& z);
Complex sin(const Complex& z);

}  // namespace ppz::mp
