#include <doctest.h>

#include "ppz/exact_series.hpp"
#include "ppz/period_poly.hpp"

using namespace ppz;
using mp::Real;

namespace {

RealPoly poly(std::initializer_list<double> c, Parity parity, ppz::mp::Precision prec = 128) {
  std::vector<Real> v;
  for (double x : c) v.emplace_back(x, prec);
  return RealPoly(std::move(v), parity);
}

Real max_rel_diff(const RealPoly& a, const RealPoly& b) {
  Real worst(a.precision());
  const int n = std::max(a.degree(), b.degree());
  for (int i = 0; i <= n; ++i) {
    Real x = i <= a.degree() ? a.coeff(i) : Real(a.precision());
    Real y = i <= b.degree() ? b.coeff(i) : Real(a.precision());
    Real d = mp::abs(x - y);
    if (d > worst) worst = d;
  }
  return worst / a.max_abs_coeff();
}

}  // namespace

TEST_CASE("parity is enforced") {
  CHECK_NOTHROW(poly({0, 1, 0, 3}, Parity::odd));
  CHECK_THROWS_AS(poly({1, 1}, Parity::odd), std::invalid_argument);
  CHECK(poly({0, 1, 0, 0, 0}, Parity::odd).degree() == 1);
}

TEST_CASE("slash action") {
  const RealPoly x = poly({0, 1}, Parity::odd);
  const RealPoly xs = slash(x, Moebius::S(), 2);
  CHECK(xs.degree() == 1);
  CHECK(xs.coeff(1) == -1L);
  // X | U = X^2 - X and X | U^2 = 1 - X at w = 2
  const RealPoly xu = slash(x, Moebius::U(), 2);
  CHECK(xu.coeff(2) == 1L);
  CHECK(xu.coeff(1) == -1L);
  CHECK(xu.coeff(0).is_zero());
  const RealPoly xu2 = slash(x, Moebius::U() * Moebius::U(), 2);
  CHECK(xu2.coeff(0) == 1L);
  CHECK(xu2.coeff(1) == -1L);
  // U has order 3 projectively
  const Moebius u3 = Moebius::U() * Moebius::U() * Moebius::U();
  CHECK(u3.b == 0);
  CHECK(u3.c == 0);
  const std::vector<mpq_class> e{0, 2, 0, mpq_class(1, 3)};
  const auto es = slash_exact(e, Moebius::U(), 6);
  std::vector<Real> rc;
  for (const auto& x : e) rc.emplace_back(x, 256);
  const RealPoly r(std::move(rc), Parity::odd);
  const RealPoly rs = slash(r, Moebius::U(), 6);
  for (int i = 0; i <= 6; ++i) {
    CHECK(mp::abs(rs.coeff(i) - Real(es[i], 256)) < Real::two_pow(-240, 256));
  }
}

TEST_CASE("cocycle residuals detect non-period polynomials") {
  const CocycleResidual cr = check_cocycle_relations(poly({0, 1}, Parity::odd), 4);
  CHECK(cr.s_relation.is_zero());
  CHECK(cr.u_relation > 0.5);
}

TEST_CASE("weight 12 closed form") {
  const auto forms = eigenforms(12);
  const LFunction lf(forms[0]);
  const RealPoly r = odd_period_polynomial(lf);
  REQUIRE(r.degree() == 9);
  // X (X^2 - 4)(X^2 - 1/4)(X^2 - 1)^2 = (4X^9 - 25X^7 + 42X^5 - 25X^3 + 4X) / 4
  const RealPoly shape = poly({0, 4, 0, -25, 0, 42, 0, -25, 0, 4}, Parity::odd, 192);
  const RealPoly scaled = shape.scaled(r.coeff(1) / 4L);
  CHECK(max_rel_diff(r, scaled) < Real::two_pow(-150, 64));
}

TEST_CASE("period polynomial structure") {
  for (int k : {24, 36}) {
    const int w = k - 2;
    for (const auto& f : eigenforms(k)) {
      const LFunction lf(f);
      const RealPoly r = odd_period_polynomial(lf);
      CHECK(r.degree() == w - 1);
      CHECK(r.parity() == Parity::odd);
      for (int j = 1; j < w; j += 2) CHECK(mpfr_equal_p(r.coeff(j).get(), r.coeff(w - j).get()) != 0);
      const Real tol = Real::two_pow(-static_cast<long>(f.prec_bits) / 2, 64);
      const CocycleResidual cr = check_cocycle_relations(r, k);
      CHECK(cr.s_relation <= tol);
      CHECK(cr.u_relation <= tol);
      CHECK(trivial_zero_certificate(r, w).all_pass());

      const RealPoly p = normalized_p(lf);
      const RealPoly q = q_split(lf);
      CHECK(q.degree() <= w / 2);
      std::vector<Real> rebuilt(static_cast<size_t>(w) + 1, Real(p.precision()));
      for (int j = 0; j <= q.degree(); ++j) {
        rebuilt[j] += q.coeff(j);
        rebuilt[w - j] += q.coeff(j);
      }
      CHECK(max_rel_diff(p, RealPoly(rebuilt, Parity::odd)) <= tol);
      // p is r times a constant; leading term of p is 2 pi X L(w)
      const Real two_pi = Real::pi(p.precision()) * 2L;
      CHECK(mp::abs(p.coeff(1) - two_pi * lf.value(w)) <= mp::abs(p.coeff(1)) * tol);
      const Real one(1L, q.precision());
      CHECK(mp::abs(q(one)) <= q.max_abs_coeff() * tol);
      CHECK(mp::abs(q(-one)) <= q.max_abs_coeff() * tol);
    }
  }
}

TEST_CASE("trivial-zero certificate rejects a polynomial with a simple zero at 1") {
  // X (X^2 - 4) at w = 10: P(1) = -3 and P'(1) = -1
  const RealPoly bad = poly({0, -4, 0, 1}, Parity::odd, 192);
  const TrivialZeroCertificate cert = trivial_zero_certificate(bad, 10);
  CHECK_FALSE(cert.all_pass());
  bool saw_derivative = false;
  for (const auto& c : cert.checks) {
    if (c.label == "P'(1)") {
      saw_derivative = true;
      CHECK_FALSE(c.pass);
      CHECK(mp::abs(c.residual) > 0.5);
    }
  }
  CHECK(saw_derivative);
}

TEST_CASE("Bernoulli-type period polynomials") {
  for (int w : {10, 14, 18, 22}) {
    for (int n = 2; n < w; n += 2) {
      const auto e = bernoulli_period_polynomial_exact(n, w);
      REQUIRE(!e.empty());
      for (size_t i = 0; i < e.size(); i += 2) CHECK(e[i] == 0);
      // both cocycle relations hold exactly
      const auto es = slash_exact(e, Moebius::S(), w);
      for (int i = 0; i <= w; ++i) CHECK(es[i] + (i < static_cast<int>(e.size()) ? e[i] : 0) == 0);
      const auto eu = slash_exact(e, Moebius::U(), w);
      const auto eu2 = slash_exact(e, Moebius::U() * Moebius::U(), w);
      for (int i = 0; i <= w; ++i) CHECK(eu[i] + eu2[i] + (i < static_cast<int>(e.size()) ? e[i] : 0) == 0);
      // n and w - n give the same polynomial up to sign
      const auto m = bernoulli_period_polynomial_exact(w - n, w);
      REQUIRE(m.size() == e.size());
      bool same = true, opposite = true;
      for (size_t i = 0; i < e.size(); ++i) {
        same = same && m[i] == e[i];
        opposite = opposite && m[i] == -e[i];
      }
      CHECK((same || opposite));
    }
  }
  CHECK_THROWS_AS(bernoulli_period_polynomial_exact(3, 10), std::invalid_argument);
  CHECK_THROWS_AS(bernoulli_period_polynomial_exact(10, 10), std::invalid_argument);
}

TEST_CASE("conjugate period polynomials are independent") {
  const auto forms = eigenforms(36);
  std::vector<RealPoly> polys;
  for (const auto& f : forms) polys.push_back(odd_period_polynomial(LFunction(f)));
  CHECK(independence_measure(polys) > Real(1e-30, 64));
  std::vector<RealPoly> dup{polys[0], polys[0].scaled(Real(3L, 64))};
  // sqrt of a cancelled Gram determinant: noise near 2^(-prec/2)
  CHECK(independence_measure(dup) < Real(1e-25, 64));
}
