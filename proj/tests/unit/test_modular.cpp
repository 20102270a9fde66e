#include <cmath>
#include <numbers>
#include <thread>

#include "doctest.h"
#include "symforms/error.hpp"
#include "symforms/group.hpp"
#include "symforms/modular.hpp"
#include "symforms/numeric.hpp"

using namespace symforms;

namespace {

// Independent oracles: plain divisor sums and a naive product expansion.
long sigma(long n, int power) {
  long s = 0;
  for (long d = 1; d <= n; ++d)
    if (n % d == 0) s += static_cast<long>(std::pow(static_cast<double>(d), power) + 0.5);
  return s;
}

std::vector<Integer> naive_delta(long order) {
  std::vector<Integer> p(static_cast<std::size_t>(order), 0);
  p[1 % order] = 1;  // q
  for (long n = 1; n < order; ++n)
    for (int rep = 0; rep < 24; ++rep)
      for (long e = order - 1; e >= n; --e) p[static_cast<std::size_t>(e)] -= p[static_cast<std::size_t>(e - n)];
  return p;
}

double rel_err(Complex a, Complex b) { return std::abs(a - b) / std::max(1.0, std::max(std::abs(a), std::abs(b))); }

}  // namespace

TEST_CASE("Eisenstein series coefficients") {
  QSeries e4 = eisenstein(4, 10), e6 = eisenstein(6, 10), e2 = eisenstein(2, 10);
  CHECK(e4.coeff_at(0) == 1);
  CHECK(e4.coeff_at(1) == 240);
  CHECK(e4.coeff_at(2) == 2160);
  CHECK(e6.coeff_at(1) == -504);
  CHECK(e2.coeff_at(1) == -24);
  for (long n = 1; n < 10; ++n) {
    CHECK(e4.coeff_at(n) == 240 * sigma(n, 3));
    CHECK(e6.coeff_at(n) == -504 * sigma(n, 5));
  }
  CHECK_THROWS_AS(eisenstein(8, 5), Error);
  try {
    eisenstein(3, 5);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnsupportedWeight);
  }
}

TEST_CASE("E4 squared equals the convolution of sigma_3 expansions") {
  const long order = 15;
  std::vector<Integer> a(order);
  a[0] = 1;
  for (long n = 1; n < order; ++n) a[static_cast<std::size_t>(n)] = 240 * sigma(n, 3);
  QSeries sq = eisenstein(4, order) * eisenstein(4, order);
  for (long n = 0; n < order; ++n) {
    Integer conv = 0;
    for (long k = 0; k <= n; ++k) conv += a[static_cast<std::size_t>(k)] * a[static_cast<std::size_t>(n - k)];
    CHECK(sq.coeff_at(n) == Rational(conv));
  }
  CHECK(sq.coeff_at(1) == 480);
  CHECK(sq.coeff_at(2) == 61920);
}

TEST_CASE("Delta expansion and the discriminant identity") {
  const long order = 30;
  QSeries d = delta(order);
  auto naive = naive_delta(order);
  for (long n = 0; n < order; ++n) CHECK(d.coeff_at(n) == Rational(naive[static_cast<std::size_t>(n)]));
  CHECK(d.coeff_at(1) == 1);
  CHECK(d.coeff_at(2) == -24);
  QSeries e4 = eisenstein(4, order), e6 = eisenstein(6, order);
  CHECK((e4 * e4 * e4 - e6 * e6 - d * PiPoly(1728)).is_zero());
  CHECK(QuasiElement::delta().to_qexp(order) == d);
}

TEST_CASE("Ramanujan derivatives") {
  const long order = 30;
  CHECK(quasi_derive(QuasiElement::constant(PiPoly(5))).is_zero());
  CHECK(quasi_derive(QuasiElement::E4()).to_qexp(order) == eisenstein(4, order).theta());
  CHECK(quasi_derive(QuasiElement::E6()).to_qexp(order) == eisenstein(6, order).theta());
  CHECK(quasi_derive(QuasiElement::E2()).to_qexp(order) == eisenstein(2, order).theta());
  QuasiElement d = QuasiElement::delta();
  CHECK(quasi_derive(d) == QuasiElement::E2() * d);
  QSeries td = quasi_derive(d).to_qexp(5);
  CHECK(td.coeff_at(1) == 1);
  CHECK(td.coeff_at(2) == -48);
  CHECK(td.coeff_at(3) == 756);
}

TEST_CASE("z-derivatives carry one Π per derivative") {
  QuasiElement d = QuasiElement::delta();
  CHECK(z_derive(d, 0) == d);
  QSeries d1 = z_derive(d, 1).to_qexp(10);
  CHECK(d1 == delta(10).theta() * PiPoly::pi(1));
  QSeries d2 = z_derive(d, 2).to_qexp(10);
  CHECK(d2.coeff(Rational(0)).is_zero());
  CHECK(d2.coeff(Rational(1)) == PiPoly(Rational(1), 2));
  CHECK(z_derive(d, 3).weight() == 18);
  CHECK(z_derive(d, 2).depth() == 2);
}

TEST_CASE("weight and depth grading") {
  QuasiElement x = QuasiElement::E2() * QuasiElement::E4() + QuasiElement::E6();
  QuasiElement y = QuasiElement::E2() * QuasiElement::E2();
  CHECK(x.weight() == 6);
  CHECK((x * y).weight() == 10);
  CHECK((x * y).depth() <= x.depth() + y.depth());
  CHECK_THROWS_AS(x + y, Error);
  CHECK((x * y).to_qexp(12) == x.to_qexp(12) * y.to_qexp(12));
}

TEST_CASE("M_k bases") {
  CHECK(basis_Mk(0).monomials == std::vector<std::pair<int, int>>{{0, 0}});
  CHECK(basis_Mk(12).monomials == std::vector<std::pair<int, int>>{{3, 0}, {0, 2}});
  CHECK(basis_Mk(14).monomials == std::vector<std::pair<int, int>>{{2, 1}});
  CHECK(basis_Mk(2).dimension() == 0);
  CHECK(basis_Mk(-4).dimension() == 0);
  CHECK(basis_Mk(7).dimension() == 0);
  // dim M_k = floor(k/12) + (k mod 12 != 2), k even >= 0.
  for (int k = 0; k <= 60; k += 2) CHECK(basis_Mk(k).dimension() == static_cast<std::size_t>(k / 12 + (k % 12 != 2 ? 1 : 0)));
}

TEST_CASE("recognition of modular and quasimodular expansions") {
  QSeries d = delta(20);
  auto rd = recognize_modular(d, 12);
  REQUIRE(rd.has_value());
  CHECK(*rd == QuasiElement::delta());
  CHECK_FALSE(recognize_modular(d, 14).has_value());
  CHECK_FALSE(recognize_modular(eisenstein(2, 20), 2).has_value());
  auto re2 = recognize_quasimodular(eisenstein(2, 20), 2, 1);
  REQUIRE(re2.has_value());
  CHECK(*re2 == QuasiElement::E2());
  QuasiElement dd = z_derive(QuasiElement::delta(), 2) * PiPoly(Rational(1, 2));
  auto r = recognize_quasimodular(dd.to_qexp(20), 16, 2);
  REQUIRE(r.has_value());
  CHECK(*r == dd);
  CHECK_THROWS_AS(recognize_modular(d.truncated(1), 12), Error);
}

TEST_CASE("numeric evaluation of Eisenstein series and Delta") {
  // Direct summation oracle for E4(2i).
  double direct = 1.0;
  for (long n = 1; n < 40; ++n) direct += 240.0 * static_cast<double>(sigma(n, 3)) * std::exp(-4.0 * std::numbers::pi * n);
  auto v = eval_numeric(eisenstein(4, 40), Complex(0, 2));
  CHECK(v.value.real() > 0);
  CHECK(std::abs(v.value - direct) < 1e-13);
  auto a = eval_numeric(delta(40), Complex(0, 1)), b = eval_numeric(delta(60), Complex(0, 1));
  CHECK(rel_err(a.value, b.value) <= 1e-10);
}

TEST_CASE("modular and quasimodular transformation laws") {
  const std::vector<GroupElt> gammas{GroupElt::T(), GroupElt::S(), GroupElt::ST()};
  const std::vector<Complex> points{Complex(0, 1), Complex(0.25, 1), Complex(0, 2)};
  const long order = 40;
  const std::vector<std::pair<QSeries, int>> forms{{eisenstein(4, order), 4}, {eisenstein(6, order), 6}, {delta(order), 12}};
  for (const auto& g : gammas)
    for (auto z : points) {
      Complex j = cocycle_J(g, z);
      for (const auto& [f, k] : forms) {
        Complex lhs = eval_numeric(f, g.act(z)).value;
        Complex rhs = std::pow(j, k) * eval_numeric(f, z).value;
        CHECK(rel_err(lhs, rhs) <= 1e-10);
      }
      Complex e2g = eval_numeric(eisenstein(2, order), g.act(z)).value;
      Complex e2 = eval_numeric(eisenstein(2, order), z).value;
      Complex corr = 12.0 * g.c().get_d() * j / Complex(0, 2 * std::numbers::pi);
      CHECK(rel_err(e2g, j * j * e2 + corr) <= 1e-10);
    }
}

TEST_CASE("expansion cache is safe under concurrent readers") {
  std::vector<std::thread> threads;
  std::vector<QSeries> results(4);
  for (int t = 0; t < 4; ++t)
    threads.emplace_back([t, &results] { results[static_cast<std::size_t>(t)] = generator_power(4, 3, 25); });
  for (auto& th : threads) th.join();
  for (const auto& r : results) CHECK(r == results[0]);
}
