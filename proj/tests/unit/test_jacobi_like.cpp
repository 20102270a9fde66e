#include <random>

#include "../support/forms.hpp"
#include "../support/oracles.hpp"
#include "doctest.h"
#include "symforms/error.hpp"
#include "symforms/jacobi_like.hpp"
#include "symforms/modular.hpp"

using namespace symforms;

namespace {

const std::vector<GroupElt> kGammas{GroupElt::T(), GroupElt::S(), GroupElt::ST()};
const std::vector<Complex> kPoints{{0, 1}, {0.25, 1}, {0, 2}};

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::AssertionFailure;
}

ZPoly zc(long c, int degree = 0) { return ZPoly::monomial(degree, QSeries::constant(c)); }

JLSeries scalar_series(std::vector<long> cs) {
  JLSeries s{0, static_cast<int>(cs.size()), 1, Representation::trivial(), {}};
  for (long c : cs) s.coeffs.push_back({0, Representation::trivial(), {zc(c)}});
  return s;
}

Rational q(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace

TEST_CASE("scalar lifting coefficients") {
  const long order = 15;
  const QSeries d = delta(order);
  JLSeries s = ck_lift_scalar(QuasiElement::delta(), 6, order);
  CHECK(s.weight == 12);
  CHECK(agree_to_order(jl_coefficient(s, 0).components[0], ZPoly(d * PiPoly(inverse_factorial(11)))));
  CHECK(agree_to_order(jl_coefficient(s, 1).components[0], ZPoly(d.derive() * PiPoly(inverse_factorial(12)))));
  CHECK(jl_coefficient(s, 3).weight == 18);
  CHECK(code_of([&] { jl_coefficient(s, 6); }) == ErrorCode::IndexOutOfRange);
  CHECK(code_of([&] { jl_coefficient(s, -1); }) == ErrorCode::IndexOutOfRange);
  CHECK(code_of([&] { ck_lift_scalar(QuasiElement::constant(PiPoly(1)), 4, order); }) == ErrorCode::WeightTooSmall);

  for (const auto& g : {QuasiElement::delta(), QuasiElement::E4(), QuasiElement::E6()}) {
    JLSeries lift = ck_lift_scalar(g, 6, 40);
    CHECK(verify_jl_transform(lift, GroupElt::S(), {0, 1}, 1e-6).pass);
  }
  JLSeries bad = ck_lift_scalar(QuasiElement::E4(), 6, 40);
  bad.exp_sign = -1;
  CHECK_FALSE(verify_jl_transform(bad, GroupElt::S(), {0, 1}, 1e-6).pass);
}

TEST_CASE("vhat lifting") {
  JLSeries s0 = ck_lift_vhat(0, 5);
  CHECK(s0.coeffs[0].components[0] == zc(1));
  for (int j = 1; j < 5; ++j) CHECK(s0.coeffs[j].is_zero());

  JLSeries s1 = ck_lift_vhat(1, 6);
  CHECK(s1.coeffs[0].components[0] == zc(1, 1));
  CHECK(s1.coeffs[0].components[1] == zc(1));
  CHECK(s1.coeffs[1].components[0] == zc(-1));
  CHECK(s1.coeffs[1].components[1] == zc(0));

  JLSeries s2 = ck_lift_vhat(2, 7);
  CHECK(s2.weight == -2);
  CHECK(s2.rep == Representation::symmetric(2));
  const std::vector<std::vector<ZPoly>> expect{
      {zc(2, 2), zc(2, 1), zc(2)}, {zc(-2, 1), zc(-1), zc(0)}, {zc(1), zc(0), zc(0)}};
  for (int j = 0; j < 3; ++j)
    for (int i = 0; i < 3; ++i) CHECK(s2.coeffs[j].components[i] == expect[j][i]);

  for (int n = 0; n <= 4; ++n) {
    JLSeries s = ck_lift_vhat(n, n + 5);
    int nonzero = 0;
    for (const auto& c : s.coeffs) nonzero += !c.is_zero();
    CHECK(nonzero == n + 1);
    for (const auto& g : kGammas)
      for (Complex z : kPoints) CHECK(verify_jl_transform(s, g, z, 1e-8, n).pass);
  }
  // The finite series does not continue the law past X^n.
  CHECK_FALSE(verify_jl_transform(ck_lift_vhat(2, 4), GroupElt::S(), {0, 1}, 1e-8).pass);
}

TEST_CASE("derivative law for vhat") {
  for (int n = 0; n <= 3; ++n)
    for (int nu = 0; nu <= 3; ++nu)
      for (const auto& g : kGammas)
        for (Complex z : kPoints) CHECK(verify_vhat_derivative_law(n, nu, g, z, 1e-9).pass);
  std::mt19937 rng(5);
  for (int i = 0; i < 10; ++i) {
    GroupElt g = oracle::random_elt(rng);
    if (g.act({0.1, 1.3}).imag() < 0.3) continue;
    CHECK(verify_vhat_derivative_law(3, 2, g, {0.1, 1.3}, 1e-9).pass);
  }
}

TEST_CASE("multiplication") {
  JLSeries one = scalar_series({1, 0, 0, 0});
  JLSeries v = ck_lift_vhat(2, 4);
  JLSeries p = jl_multiply(one, v, false);
  for (int j = 0; j < 4; ++j) CHECK(p.coeffs[j].components == v.coeffs[j].components);

  JLSeries a = scalar_series({1, 1, 0, 0}), b = scalar_series({1, -1, 0, 0});
  JLSeries ab = jl_multiply(a, b, false);
  CHECK(ab.coeffs[0].components[0] == zc(1));
  CHECK(ab.coeffs[1].components[0] == zc(0));
  CHECK(ab.coeffs[2].components[0] == zc(-1));
  JLSeries neg = jl_multiply(a, b, true);
  CHECK(neg.coeffs[1].components[0] == zc(-2));
  CHECK(neg.coeffs[2].components[0] == zc(1));
  CHECK(neg.exp_sign == 0);

  CHECK(code_of([&] { jl_multiply(v, one, false); }) == ErrorCode::RankMismatch);
}

TEST_CASE("product coefficients against the closed form") {
  const long order = 12;
  std::mt19937 rng(29);
  for (int n = 1; n <= 3; ++n)
    for (int kappa : {4, 6, 12}) {
      QuasiElement g = forms::random_modular(rng, kappa);
      const QSeries gq = g.to_qexp(order);
      JLSeries prod = jl_multiply(ck_lift_scalar(g, n + 5, order), ck_lift_vhat(n, n + 5), true);
      std::vector<QSeries> gd{gq};
      std::vector<VVForm> vd{v_hat(n)};
      for (int r = 1; r <= n + 4; ++r) {
        gd.push_back(gd.back().derive());
        vd.push_back(vd.back().derive());
      }
      for (int j = 0; j < n + 5; ++j) {
        VVForm want = v_hat(n) * PiPoly(0);
        want.weight = kappa - n + 2 * j;
        for (int r = 0; r <= j; ++r) {
          const long f = n - j + r;
          if (f < 0) continue;
          Rational c = (j % 2 ? q(-1) : q(1)) * Rational(factorial(f)) * inverse_factorial(r) * inverse_factorial(j - r) *
                       inverse_factorial(r + kappa - 1);
          VVForm term = vd[j - r] * gd[r] * PiPoly(c);
          term.weight = want.weight;
          want += term;
        }
        CHECK(agree_to_order(jl_coefficient(prod, j), want));
      }
    }
}

TEST_CASE("lifting route to V") {
  const long order = 12;
  std::mt19937 rng(31);
  for (int n = 1; n <= 3; ++n)
    for (int k = n + 2; k <= 16; k += 2)
      for (int l = 0; l <= n; ++l) {
        const int kappa = k - n + 2 * l;
        if (kappa <= 0) continue;
        QuasiElement g = forms::random_modular(rng, kappa);
        JLSeries prod = jl_multiply(ck_lift_scalar(g, n + 5, order), ck_lift_vhat(n, n + 5), true);
        const int j = n - l;
        Rational c = (j % 2 ? q(-1) : q(1)) * Rational(factorial(kappa + j - 1)) * inverse_factorial(n - j);
        VVForm via_lift = jl_coefficient(prod, j) * PiPoly(c);
        CHECK(via_lift.weight == k);
        CHECK(agree_to_order(via_lift, V_map(g, k, n, l, order)));
      }
}

TEST_CASE("psi extraction equals U") {
  const long order = 10;
  std::mt19937 rng(37);
  for (int n = 1; n <= 3; ++n)
    for (int k : {n + 2, n + 4, 12}) {
      if ((k - n) % 2) continue;
      QuasiPolynomial F = Q_map(forms::random_quasimodular(rng, k + n, n), n);
      JLSeries phi = jl_from_quasi_polynomial(F, n, order);
      CHECK(phi.weight == k - n);
      JLSeries psi = jl_multiply(phi, ck_lift_vhat(n, n + 1), true);
      VVForm u = jl_coefficient(psi, n);
      CHECK(u.weight == k);
      CHECK(agree_to_order(u, U_map(F, n, order)));
    }
}

TEST_CASE("coefficients of cancelled products transform as forms") {
  const long order = 40;
  std::mt19937 rng(41);
  JLSeries prod = jl_multiply(ck_lift_scalar(QuasiElement::E4(), 6, order), ck_lift_scalar(QuasiElement::E6(), 6, order), true);
  CHECK(prod.exp_sign == 0);
  for (int j = 0; j < 6; ++j) {
    VVForm c = jl_coefficient(prod, j);
    for (const auto& g : kGammas)
      for (Complex z : kPoints)
        CHECK(verify_scalar_transform(c.components[0].coeff(0), c.weight, g, z, 1e-8).pass);
  }

  for (int n = 1; n <= 3; ++n) {
    QuasiElement g = forms::random_modular(rng, 12);
    JLSeries vp = jl_multiply(ck_lift_scalar(g, n + 1, order), ck_lift_vhat(n, n + 1), true);
    for (int j = 0; j <= n; ++j) {
      VVForm c = jl_coefficient(vp, j);
      CHECK(c.weight == 12 - n + 2 * j);
      for (const auto& gm : kGammas)
        for (Complex z : kPoints) CHECK(verify_vv_transform(c, gm, z, 1e-8).pass);
    }
  }

  // Φ_F itself satisfies the scalar law through X^n.
  QuasiPolynomial F = Q_map(forms::random_quasimodular(rng, 16, 2), 2);
  JLSeries phi = jl_from_quasi_polynomial(F, 2, order);
  for (const auto& g : kGammas)
    for (Complex z : kPoints) CHECK(verify_jl_transform(phi, g, z, 1e-8).pass);
  // Unlinked coefficients of the right weights do not.
  QuasiPolynomial loose{16, {}};
  for (int r = 0; r <= 2; ++r) loose.coeffs.push_back(forms::random_quasimodular(rng, 16 - 2 * r, 2 - r));
  CHECK_FALSE(verify_jl_transform(jl_from_quasi_polynomial(loose, 2, order), GroupElt::S(), {0, 1}, 1e-8).pass);
}
