#include <doctest.h>

#include "ppz/zero_engine.hpp"

using namespace ppz;
using mp::Complex;
using mp::Real;

namespace {

constexpr ppz::mp::Precision kP = 128;

RealPoly poly(std::vector<double> c, Parity parity, ppz::mp::Precision prec = kP) {
  std::vector<Real> v;
  for (double x : c) v.emplace_back(x, prec);
  return RealPoly(std::move(v), parity);
}

Real r(double x) { return Real(x, kP); }

}  // namespace

TEST_CASE("winding of z^3 around the unit circle") {
  const AnalyticFn cube = [](const Complex& z) { return z * z * z; };
  const WindingResult w = winding_count(cube, Contour::circle(r(1.0), 64));
  CHECK(w.winding == 3);
  CHECK(w.snap_distance < 1e-10);
  // coarse sampling must still resolve the phase by bisection
  CHECK(winding_count(cube, Contour::circle(r(1.0), 4)).winding == 3);
}

TEST_CASE("annulus certificate for sin 2 pi z - sin 2 pi / z") {
  const Contour a = Contour::annulus(Real(4L, kP) / 5L, Real(5L, kP) / 4L, 512);
  const AnalyticFn s = annulus_reference_function();
  CHECK(winding_count(s, a).winding == 10);
  CHECK(winding_count(s, a.with_samples(1024)).winding == 10);
  CHECK(boundary_min(s, a).value > 1L);
}

TEST_CASE("a zero on the contour is reported") {
  const AnalyticFn f = [](const Complex& z) { return z - Complex(1.0, 0.0, kP); };
  CHECK_THROWS_AS(winding_count(f, Contour::circle(r(1.0), 64)), ContourError);
  const BoundaryMin m = boundary_min(f, Contour::circle(r(1.0), 256));
  CHECK(m.value < 1e-12);
  CHECK(mp::abs(m.point.re - 1L) < 1e-6);
}

TEST_CASE("Rouche comparison") {
  const AnalyticFn z2 = [](const Complex& z) { return z * z; };
  const AnalyticFn z2p3 = [](const Complex& z) { return z * z + Complex(3.0, 0.0, kP); };
  const RoucheReport bad = rouche_compare(z2, z2p3, Contour::circle(r(1.0), 128));
  CHECK_FALSE(bad.verified);
  CHECK(mp::abs(bad.max_difference - 3L) < 1e-20);
  CHECK(mp::abs(bad.min_reference - 2L) < 1e-20);

  const AnalyticFn near = [](const Complex& z) { return z * z + Complex(0.1, 0.0, kP); };
  const RoucheReport good = rouche_compare(near, z2, Contour::circle(r(1.0), 128));
  CHECK(good.verified);
  CHECK(good.windings_equal);
  CHECK(*good.winding_f == 2);
}

TEST_CASE("simultaneous root refinement") {
  const RootRefinement two = refine_all_roots(poly({-4, 0, 1}, Parity::even));
  REQUIRE(two.roots.size() == 2);
  Real lo = mp::min(two.roots[0].re, two.roots[1].re);
  Real hi = mp::max(two.roots[0].re, two.roots[1].re);
  CHECK(mp::abs(lo + 2L) < 1e-30);
  CHECK(mp::abs(hi - 2L) < 1e-30);

  // X (X^2 - 1)^2 has double roots at +-1
  const RootRefinement dbl = refine_all_roots(poly({0, 1, 0, -2, 0, 1}, Parity::odd));
  REQUIRE(dbl.roots.size() == 5);
  int doubles = 0;
  for (const auto& c : dbl.clusters)
    if (c.multiplicity == 2) ++doubles;
  CHECK(doubles == 2);
  CHECK(dbl.clusters.size() == 3);
}

TEST_CASE("classification of trivial roots") {
  std::vector<Complex> roots;
  for (double x : {0.0, 1.0, 1.0, -1.0, -1.0, 2.0, -2.0, 0.5, -0.5}) roots.emplace_back(x, 0.0, kP);
  roots.push_back(Complex::polar(r(1.0), r(0.3)));
  const auto cls = classify_trivial_roots(roots, r(1e-20));
  CHECK(cls.multiplicities_ok);
  CHECK(cls.trivial_count == 9);
  CHECK(cls.nontrivial.size() == 1);
  roots.pop_back();
  roots.pop_back();
  CHECK_FALSE(classify_trivial_roots(roots, r(1e-20)).multiplicities_ok);
}

TEST_CASE("sine approximation by a truncated Taylor series") {
  std::vector<Real> c(80, Real(kP));
  const Real two_pi = Real::pi(kP) * 2L;
  Real term = two_pi;
  for (int m = 0; 2 * m + 1 < 80; ++m) {
    c[2 * m + 1] = (m % 2 == 0) ? term : Real(-term);
    term *= two_pi * two_pi;
    term /= static_cast<long>((2 * m + 2) * (2 * m + 3));
  }
  const RealPoly taylor(c, Parity::odd);
  CHECK(sin_approx_sup(taylor, Real(5L, kP) / 4L).value < 1e-20);
  const RealPoly zero = poly({0, 0}, Parity::odd);
  // |sin 2 pi z| on |z| = 5/4 peaks on the imaginary axis at sinh(5 pi / 2)
  const Real expected = mp::sinh(Real::pi(kP) * 5L / 2L);
  CHECK(mp::abs(sin_approx_sup(zero, Real(5L, kP) / 4L).value - expected) < expected * Real(1e-12, kP));
}

TEST_CASE("circle function and bracketing") {
  // q(z) = z - z^3 / 4 with w = 8: p = q + z^8 q(1/z)
  const RealPoly q = poly({0, 1, 0, -0.25}, Parity::odd);
  const int w = 8;
  const Real theta = r(0.7);
  const Complex z = Complex::polar(r(1.0), theta);
  Complex p = q(z);
  Complex zw(1.0, 0.0, kP);
  for (int i = 0; i < w; ++i) zw *= z;
  p += zw * q(inverse(z));
  const Complex rot = Complex::polar(r(1.0), -theta * 4L) * p;
  CHECK(mp::abs(rot.re - real_circle_function(q, 4, theta)) < 1e-30);
  CHECK(mp::abs(rot.im) < 1e-30);

  const CircleZeros cz = circle_zeros_by_intervals(q, w);
  CHECK(cz.M == 4);
  CHECK(cz.interval_hits.size() == 8);
  for (size_t i = 1; i < cz.angles.size(); ++i) CHECK(cz.angles[i - 1] < cz.angles[i]);
  for (const auto& a : cz.angles) CHECK(mp::abs(real_circle_function(q, 4, a)) < 1e-15);
  CHECK_THROWS_AS(circle_zeros_by_intervals(q, 7), std::invalid_argument);
}

TEST_CASE("imaginary part of q on the circle") {
  const RealPoly q = poly({0, 1, 0, -0.25}, Parity::odd);
  const ImagPartZeros iz = imag_part_zeros(q, 512);
  CHECK(mp::abs(iz.at_zero) < 1e-30);
  CHECK(mp::abs(iz.at_pi) < 1e-30);
  // sin t - sin(3t)/4 vanishes only at 0 and pi
  CHECK(iz.sign_changes == 2);
}
