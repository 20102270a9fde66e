#include <random>

#include "../support/oracles.hpp"
#include "doctest.h"
#include "symforms/brackets.hpp"
#include "symforms/error.hpp"
#include "symforms/modular.hpp"

using namespace symforms;

namespace {

QSeries from_integers(const std::vector<Integer>& c) {
  std::vector<Rational> r(c.begin(), c.end());
  return QSeries::from_coefficients(r);
}

QSeries random_series(std::mt19937& rng, long order) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::vector<Rational> c;
  for (long e = 0; e < order; ++e) c.emplace_back(num(rng));
  return QSeries::from_coefficients(c);
}

VVForm random_vv(std::mt19937& rng, int n, long order, int zdeg = 2) {
  VVForm out{0, Representation::symmetric(n), {}};
  for (int i = 0; i <= n; ++i) {
    std::vector<QSeries> zc;
    for (int d = 0; d <= zdeg; ++d) zc.push_back(random_series(rng, order));
    out.components.emplace_back(zc);
  }
  return out;
}

ZPoly zc(long c, int degree = 0) { return ZPoly::monomial(degree, QSeries::constant(c)); }

}  // namespace

TEST_CASE("generalized binomial coefficients") {
  CHECK(gen_binom(-1, 2) == 1);
  CHECK(gen_binom(13, 2) == 78);
  CHECK(gen_binom(-2, 1) == -2);
  CHECK(gen_binom(-7, 0) == 1);
  for (long k = -8; k <= 8; ++k) {
    for (long r = 0; r <= 6; ++r) {
      if (k >= 0) CHECK(gen_binom(k, r) == Rational(binomial(k, r)));
      else CHECK(gen_binom(k, r) == Rational(binomial(r - k - 1, r) * (r % 2 ? -1 : 1)));
    }
  }
}

TEST_CASE("classical bracket of E4 and E6") {
  const long order = 20;
  // Direct formula 4·E4·E6' - 6·E4'·E6 on integer coefficient lists.
  std::vector<Integer> e4(order), e6(order), de4(order), de6(order);
  for (long n = 0; n < order; ++n) {
    e4[n] = n == 0 ? 1 : 240 * oracle::sigma(n, 3);
    e6[n] = n == 0 ? 1 : -504 * oracle::sigma(n, 5);
    de4[n] = e4[n] * n;
    de6[n] = e6[n] * n;
  }
  std::vector<Integer> direct(order, 0);
  for (long a = 0; a < order; ++a)
    for (long b = 0; a + b < order; ++b) direct[a + b] += 4 * e4[a] * de6[b] - 6 * de4[a] * e6[b];
  QSeries br = rc_scalar(eisenstein(4, order), eisenstein(6, order), 1, 4, 6);
  for (long n = 0; n < order; ++n) {
    CHECK(br.coeff_at(n, 1) == Rational(direct[n]));
    CHECK(br.coeff_at(n, 0) == 0);
  }
  CHECK(br.coeff_at(0, 1) == 0);
  // Via the Ramanujan identities the bracket is -3456·Π·Δ.
  auto d = oracle::naive_delta(order);
  for (long n = 0; n < order; ++n) CHECK(br.coeff_at(n, 1) == Rational(-3456 * d[n]));
}

TEST_CASE("tensor bracket") {
  VVForm v1 = v_hat(1);
  VVForm t = rc_tensor(v1, v1, 0, -1, -1);
  CHECK(t.rank() == 4);
  CHECK(t.weight == -2);
  CHECK(t.components[0] == zc(1, 2));
  CHECK(t.components[1] == zc(1, 1));
  CHECK(t.components[2] == zc(1, 1));
  CHECK(t.components[3] == zc(1));

  VVForm bad = v1;
  bad.components.pop_back();
  CHECK_THROWS_AS(rc_tensor(bad, v1, 0, -1, -1), Error);
}

TEST_CASE("scalar-vector bracket reproduces the Delta example") {
  const long order = 20;
  QSeries d = delta(order);
  CHECK(bracket_coeff(2, 12, -2, 0) == 78);
  CHECK(bracket_coeff(2, 12, -2, 1) == 13);
  CHECK(bracket_coeff(2, 12, -2, 2) == 1);
  VVForm got = rc_scalar_vector(d, v_hat(2), 2, 12, -2);
  CHECK(got.weight == 14);
  QSeries d1 = d.derive(), d2 = d.derive(2);
  std::vector<ZPoly> expected{
      zc(1, 2) * d2 + zc(2, 1) * d1 * PiPoly(13) + ZPoly(d * PiPoly(156)),
      zc(1, 1) * d2 + ZPoly(d1 * PiPoly(13)),
      ZPoly(d2),
  };
  for (int i = 0; i < 3; ++i) CHECK(agree_to_order(got.components[i], expected[i]));

  VVForm plain = rc_scalar_vector(d, v_hat(2), 0, 12, -2);
  for (int i = 0; i < 3; ++i) CHECK(plain.components[i] == v_hat(2).components[i] * d);
}

TEST_CASE("pairing bracket") {
  VVForm a{4, Representation::trivial(), {ZPoly(eisenstein(4, 10))}};
  VVForm b{6, Representation::trivial(), {ZPoly(eisenstein(6, 10))}};
  CHECK(rc_pair(a, b, 0, 4, 6) == eisenstein(4, 10) * eisenstein(6, 10));
  try {
    rc_pair(u_hat(2), v_hat(2), 0, -2, -2);
    FAIL("expected ResidualZDependence");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ResidualZDependence);
  }
  // The binomially weighted dual pairs to (z - z)^2 = 0.
  CHECK(rc_pair(u_hat_dual(2), v_hat(2), 0, -2, -2).is_zero());
}

TEST_CASE("brackets are bilinear") {
  std::mt19937 rng(53);
  for (int trial = 0; trial < 5; ++trial) {
    VVForm a1 = random_vv(rng, 1, 6), a2 = random_vv(rng, 1, 6), b = random_vv(rng, 2, 6);
    QSeries f1 = random_series(rng, 6), f2 = random_series(rng, 6);
    const PiPoly s(Rational(3, 7));
    for (int w = 0; w <= 3; ++w) {
      CHECK(agree_to_order(rc_tensor(a1 + a2 * s, b, w, 3, -1),
                           rc_tensor(a1, b, w, 3, -1) + rc_tensor(a2, b, w, 3, -1) * s));
      CHECK(agree_to_order(rc_scalar_vector(f1 + f2 * s, b, w, -2, 5),
                           rc_scalar_vector(f1, b, w, -2, 5) + rc_scalar_vector(f2, b, w, -2, 5) * s));
      VVForm p1 = random_vv(rng, 1, 6, 0), p2 = random_vv(rng, 1, 6, 0), p3 = random_vv(rng, 1, 6, 0);
      CHECK(agree_to_order(rc_pair(p1, p2 + p3 * s, w, 2, 2),
                           rc_pair(p1, p2, w, 2, 2) + rc_pair(p1, p3, w, 2, 2) * s));
    }
  }
}

TEST_CASE("scalar specializations agree") {
  std::mt19937 rng(59);
  for (int trial = 0; trial < 5; ++trial) {
    QSeries f = random_series(rng, 8), g = random_series(rng, 8);
    VVForm vf{0, Representation::trivial(), {ZPoly(f)}}, vg{0, Representation::trivial(), {ZPoly(g)}};
    for (int w = 0; w <= 3; ++w) {
      VVForm t = rc_tensor(vf, vg, w, 4, 7);
      VVForm sv = rc_scalar_vector(f, vg, w, 4, 7);
      CHECK(t.components == sv.components);
      CHECK(t.components[0] == ZPoly(rc_scalar(f, g, w, 4, 7)));
    }
  }
}

TEST_CASE("bracket weight law on scalar forms") {
  const long order = 40;
  const QSeries e4 = eisenstein(4, order), e6 = eisenstein(6, order), d = delta(order);
  struct Case {
    QSeries f, g;
    int lam, mu;
  };
  std::vector<Case> cases{{e4, e6, 4, 6}, {e4, d, 4, 12}, {e6, e6, 6, 6}};
  for (const auto& c : cases) {
    for (int w = 0; w <= 3; ++w) {
      QSeries br = rc_scalar(c.f, c.g, w, c.lam, c.mu);
      for (GroupElt g : {GroupElt::T(), GroupElt::S(), GroupElt::ST()})
        for (Complex z : {Complex(0, 1), Complex(0.25, 1), Complex(0, 2)})
          CHECK(verify_scalar_transform(br, c.lam + c.mu + 2 * w, g, z, 1e-8).pass);
      if (w >= 1) CHECK(br.coeff(0).is_zero());
    }
  }
}
