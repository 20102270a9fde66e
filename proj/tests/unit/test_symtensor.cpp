#include <cmath>
#include <random>

#include "../support/oracles.hpp"
#include "doctest.h"
#include "symforms/error.hpp"
#include "symforms/numeric.hpp"
#include "symforms/symtensor.hpp"

using namespace symforms;

namespace {

RationalMatrix from_rows(const std::vector<std::vector<long>>& rows) {
  RationalMatrix m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

const std::vector<Complex> kPoints{{0, 1}, {0.25, 1}, {0, 2}};

}  // namespace

TEST_CASE("sym_rep agrees with direct binomial expansion") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    GroupElt g = oracle::random_elt(rng);
    for (int n = 0; n <= 4; ++n) {
      auto rows = oracle::sym_rep_by_expansion(g, n);
      SymRepMatrix m = sym_rep(g, n);
      for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) CHECK(m.entries(i, j) == Rational(rows[i][j]));
      CHECK(m.entries.determinant() == 1);
    }
  }
}

TEST_CASE("small symmetric powers") {
  GroupElt g(2, 3, 1, 2);
  CHECK(sym_rep(g, 0).entries == RationalMatrix::identity(1));
  CHECK(sym_rep(g, 1).entries == from_rows({{2, 3}, {1, 2}}));
  CHECK(sym_rep(GroupElt::identity(), 3).entries == RationalMatrix::identity(4));
  CHECK(sym_rep(GroupElt::T(), 2).entries == from_rows({{1, 2, 1}, {0, 1, 1}, {0, 0, 1}}));
}

TEST_CASE("sym_rep is a homomorphism") {
  std::mt19937 rng(37);
  for (int trial = 0; trial < 40; ++trial) {
    GroupElt g = oracle::random_elt(rng), h = oracle::random_elt(rng);
    for (int n = 0; n <= 6; ++n) CHECK(sym_rep(g * h, n).entries == sym_rep(g, n).entries * sym_rep(h, n).entries);
  }
}

TEST_CASE("translation acts on v_hat polynomially") {
  // ρ₂(T)·v̂₂(z) = v̂₂(z+1) = (z² + 2z + 1, z + 1, 1).
  const RationalMatrix t = sym_rep(GroupElt::T(), 2).entries;
  const VVForm v = v_hat(2);
  ZPolyMatrix tm(3, std::vector<ZPoly>(3));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) tm[i][j] = ZPoly(QSeries::constant(t(i, j)));
  auto image = multiply(tm, v.components);
  auto c = [](long x) { return QSeries::constant(x); };
  CHECK(image[0] == ZPoly({c(1), c(2), c(1)}));
  CHECK(image[1] == ZPoly({c(1), c(1)}));
  CHECK(image[2] == ZPoly(c(1)));
}

TEST_CASE("sym_rep(S, 2) on v_hat at i") {
  const Complex i(0, 1);
  const RationalMatrix s = sym_rep(GroupElt::S(), 2).entries;
  std::vector<Complex> v{i * i, i, 1.0};
  std::vector<Complex> expected{1.0, -i, -1.0};
  for (std::size_t r = 0; r < 3; ++r) {
    Complex sum = 0;
    for (std::size_t c = 0; c < 3; ++c) sum += s(r, c).get_d() * v[c];
    CHECK(std::abs(sum - expected[r]) < 1e-14);
  }
}

TEST_CASE("contragredient") {
  CHECK(contragredient(sym_rep(GroupElt::identity(), 3)).entries == RationalMatrix::identity(4));
  std::mt19937 rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    GroupElt g = oracle::random_elt(rng);
    CHECK(contragredient(sym_rep(g, 0)).entries == RationalMatrix::identity(1));
    for (int n = 0; n <= 4; ++n) {
      // In the monomial basis the identity holds up to conjugation by the binomial weights.
      const RationalMatrix b = binomial_weights(n);
      CHECK(contragredient(sym_rep(g, n)).entries == b * sym_rep(g.transpose().inverse(), n).entries * b.inverse());
    }
  }
  // Without the weights it already fails for n = 2.
  CHECK_FALSE(contragredient(sym_rep(GroupElt::T(), 2)).entries ==
              sym_rep(GroupElt::T().transpose().inverse(), 2).entries);
}

TEST_CASE("tensor representations use Kronecker order") {
  Representation r = tensor(Representation::symmetric(1), Representation::symmetric(2));
  CHECK(r.dimension() == 6);
  GroupElt g(2, 1, 1, 1);
  CHECK(r.matrix(g) == kronecker(sym_rep(g, 1).entries, sym_rep(g, 2).entries));
  CHECK(Representation::trivial().matrix(g) == RationalMatrix::identity(1));
}

TEST_CASE("v_hat and u_hat components") {
  CHECK(v_hat(0).components == std::vector<ZPoly>{ZPoly(QSeries::constant(1))});
  CHECK(u_hat(0).components == std::vector<ZPoly>{ZPoly(QSeries::constant(1))});
  VVForm v = v_hat(2), u = u_hat(2);
  CHECK(v.weight == -2);
  CHECK(v.components[0] == ZPoly::monomial(2, QSeries::constant(1)));
  CHECK(v.components[1] == ZPoly::monomial(1, QSeries::constant(1)));
  CHECK(u.components[1] == ZPoly::monomial(1, QSeries::constant(-1)));
  CHECK(u.components[2] == ZPoly::monomial(2, QSeries::constant(1)));
  CHECK(u_hat_dual(2).components[1] == ZPoly::monomial(1, QSeries::constant(-2)));
}

TEST_CASE("v_hat, u_hat and the weighted dual satisfy their laws") {
  std::mt19937 rng(43);
  for (int n = 0; n <= 4; ++n) {
    for (int trial = 0; trial < 5; ++trial) {
      GroupElt g = oracle::random_elt(rng, 2);
      for (Complex z : kPoints) {
        CHECK(verify_vv_transform(v_hat(n), g, z, 1e-9).pass);
        CHECK(verify_vv_transform(u_hat(n), g, z, 1e-9).pass);
        CHECK(verify_vv_transform(u_hat_dual(n), g, z, 1e-9).pass);
      }
    }
  }
  // û₂ does not follow the plain contragredient law in the monomial basis.
  VVForm mislabeled = u_hat(2);
  mislabeled.rep = {{{RepKind::contragredient, 2}}};
  CHECK_FALSE(verify_vv_transform(mislabeled, GroupElt::T(), Complex(0.1, 1), 1e-6).pass);
}

TEST_CASE("v_hat at the fixed point of S and under T") {
  auto rep = verify_vv_transform(v_hat(2), GroupElt::S(), Complex(0, 1), 1e-12);
  CHECK(rep.pass);
  CHECK(rep.max_residual <= 1e-12);
  for (int n = 0; n <= 5; ++n) CHECK(verify_vv_transform(v_hat(n), GroupElt::T(), Complex(0.37, 0.8), 1e-12).pass);
  CHECK_THROWS_AS(verify_vv_transform(v_hat(1), GroupElt::S(), Complex(0, 0.001), 1e-8), Error);
}

TEST_CASE("frame matrix and frame coordinates") {
  for (int n = 0; n <= 4; ++n) {
    ZPolyMatrix id = multiply(frame_matrix(n), frame_matrix_inverse(n));
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= n; ++j) CHECK(id[i][j] == ZPoly(QSeries::constant(i == j ? 1 : 0)));
    FrameCoords fc = frame_coords(v_hat(n));
    for (int i = 0; i < n; ++i) CHECK(fc.entries[i].is_zero());
    CHECK(fc.entries[n] == QSeries::constant(1));
    CHECK(fc.first_nonzero() == static_cast<std::size_t>(n));
  }
  VVForm zero{4, Representation::symmetric(2), std::vector<ZPoly>(3)};
  FrameCoords fz = frame_coords(zero);
  CHECK(!fz.first_nonzero().has_value());
  VVForm bad{0, Representation::symmetric(2), {ZPoly::monomial(1, QSeries::constant(1)), ZPoly(), ZPoly()}};
  try {
    frame_coords(bad);
    FAIL("expected ResidualZDependence");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ResidualZDependence);
  }
}

TEST_CASE("frame conjugation identity") {
  // L_n(γz)^{-1} ρ_n(γ) L_n(z) = ρ_n((J^{-1}, 0; c, J)), checked entrywise.
  std::mt19937 rng(47);
  for (int trial = 0; trial < 10; ++trial) {
    GroupElt g = oracle::random_elt(rng, 3);
    for (Complex z : kPoints) {
      const Complex gz = g.act(z), j = cocycle_J(g, z);
      for (int n = 0; n <= 4; ++n) {
        const std::size_t dim = n + 1;
        auto linv = sym_rep_numeric(1.0, -gz, 0.0, 1.0, n);
        auto l = sym_rep_numeric(1.0, z, 0.0, 1.0, n);
        auto rho = sym_rep_numeric(g.a().get_d(), g.b().get_d(), g.c().get_d(), g.d().get_d(), n);
        auto expected = sym_rep_numeric(1.0 / j, 0.0, g.c().get_d(), j, n);
        auto mul = [&](const std::vector<Complex>& x, const std::vector<Complex>& y) {
          std::vector<Complex> out(dim * dim, 0.0);
          for (std::size_t r = 0; r < dim; ++r)
            for (std::size_t c = 0; c < dim; ++c)
              for (std::size_t k = 0; k < dim; ++k) out[r * dim + c] += x[r * dim + k] * y[k * dim + c];
          return out;
        };
        auto absm = [](std::vector<Complex> x) {
          for (auto& e : x) e = std::abs(e);
          return x;
        };
        auto got = mul(mul(linv, rho), l);
        // Cancellation scale: the same product with absolute values.
        auto bound = mul(mul(absm(linv), absm(rho)), absm(l));
        double scale = 1.0;
        for (auto e : bound) scale = std::max(scale, std::abs(e));
        for (std::size_t k = 0; k < dim * dim; ++k) CHECK(std::abs(got[k] - expected[k]) < 1e-12 * scale);
      }
    }
  }
}
