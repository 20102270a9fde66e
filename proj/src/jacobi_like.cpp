#include "symforms/jacobi_like.hpp"

#include <algorithm>
#include <cmath>

#include "symforms/error.hpp"

namespace symforms {

namespace {

Rational sign(long r) { return r % 2 ? Rational(-1) : Rational(1); }

VVForm scalar_form(const QSeries& s, int weight) { return {weight, Representation::trivial(), {ZPoly(s)}}; }

VVForm zero_like(const VVForm& shape, int weight) {
  VVForm out{weight, shape.rep, std::vector<ZPoly>(shape.rank())};
  for (std::size_t i = 0; i < shape.rank(); ++i) out.components[i] = shape.components[i] * PiPoly();
  return out;
}

std::vector<Complex> eval_vector(const VVForm& F, Complex z, double& tail) {
  std::vector<Complex> out;
  for (const auto& c : F.components) {
    NumericValue v = eval_numeric(c, z);
    out.push_back(v.value);
    tail = std::max(tail, v.tail_bound);
  }
  return out;
}

std::vector<Complex> apply_matrix(const RationalMatrix& m, const std::vector<Complex>& v) {
  std::vector<Complex> out(m.rows(), 0.0);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m(i, j).get_d() * v[j];
  return out;
}

}  // namespace

JLSeries ck_lift_scalar(const QuasiElement& g, int x_order, long order) {
  const int kappa = g.weight();
  if (kappa <= 0) throw Error(ErrorCode::WeightTooSmall, "Cohen-Kuznetsov lifting needs positive weight");
  if (!g.is_modular()) throw Error(ErrorCode::InvalidArgument, "lifting needs a modular form");
  JLSeries out{kappa, x_order, 1, Representation::trivial(), {}};
  QSeries d = g.to_qexp(order);
  for (int j = 0; j < x_order; ++j) {
    if (j > 0) d = d.derive();
    Rational c = inverse_factorial(j) * inverse_factorial(j + kappa - 1);
    out.coeffs.push_back(scalar_form(d * PiPoly(c), kappa + 2 * j));
  }
  return out;
}

JLSeries ck_lift_vhat(int n, int x_order) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative symmetric power");
  JLSeries out{-n, x_order, 1, Representation::symmetric(n), {}};
  VVForm d = v_hat(n);
  for (int j = 0; j < x_order; ++j) {
    if (j > 0) d = d.derive();
    const Rational c = sign(j) * (j <= n ? Rational(factorial(n - j)) : Rational(0)) * inverse_factorial(j);
    VVForm term = d * PiPoly(c);
    term.weight = -n + 2 * j;
    out.coeffs.push_back(term);
  }
  return out;
}

JLSeries jl_from_quasi_polynomial(const QuasiPolynomial& F, int n, long order) {
  if (F.degree() > n) throw Error(ErrorCode::InvalidArgument, "polynomial degree exceeds n");
  const int lam = F.weight - 2 * n;
  JLSeries out{lam, n + 1, 1, Representation::trivial(), {}};
  for (int l = 0; l <= n; ++l) {
    const int r = n - l;
    QSeries phi = QSeries::zero(order);
    if (r <= F.degree()) phi = F.coeffs[static_cast<std::size_t>(r)].to_qexp(order) * PiPoly(Rational(factorial(r)));
    out.coeffs.push_back(scalar_form(phi, lam + 2 * l));
  }
  return out;
}

JLSeries jl_multiply(const JLSeries& a, const JLSeries& b, bool negate_x) {
  if (!a.is_scalar() || a.coeffs.empty() || a.coeffs[0].rank() != 1)
    throw Error(ErrorCode::RankMismatch, "left factor of a Jacobi-like product must be scalar");
  const int x_order = std::min(a.x_order, b.x_order);
  JLSeries out{a.weight + b.weight, x_order, (negate_x ? -a.exp_sign : a.exp_sign) + b.exp_sign, b.rep, {}};
  for (int j = 0; j < x_order; ++j) {
    VVForm sum = zero_like(b.coeffs[0], out.weight + 2 * j);
    for (int i = 0; i <= j; ++i) {
      const ZPoly& s = a.coeffs[static_cast<std::size_t>(i)].components[0];
      const VVForm& v = b.coeffs[static_cast<std::size_t>(j - i)];
      const PiPoly sg(negate_x ? sign(i) : Rational(1));
      for (std::size_t c = 0; c < v.rank(); ++c) sum.components[c] += s * v.components[c] * sg;
    }
    out.coeffs.push_back(sum);
  }
  return out;
}

VVForm jl_coefficient(const JLSeries& s, int j) {
  if (j < 0 || j >= s.x_order || static_cast<std::size_t>(j) >= s.coeffs.size())
    throw Error(ErrorCode::IndexOutOfRange, "X-power " + std::to_string(j) + " outside 0.." + std::to_string(s.x_order - 1));
  VVForm out = s.coeffs[static_cast<std::size_t>(j)];
  out.weight = s.weight + 2 * j;
  return out;
}

TransformReport verify_jl_transform(const JLSeries& s, const GroupElt& g, Complex z, double tol, int max_power) {
  const int top = max_power < 0 ? s.x_order - 1 : std::min(max_power, s.x_order - 1);
  const Complex j = cocycle_J(g, z), kk = cocycle_K(g, z), gz = g.act(z);
  const RationalMatrix rho = s.rep.matrix(g);
  double tail = 0.0;
  std::vector<std::vector<Complex>> base;
  for (int i = 0; i <= top; ++i) base.push_back(apply_matrix(rho, eval_vector(s.coeffs[static_cast<std::size_t>(i)], z, tail)));
  std::vector<Complex> lhs, rhs;
  const Complex jl = std::pow(j, s.weight);
  for (int p = 0; p <= top; ++p) {
    std::vector<Complex> left = eval_vector(s.coeffs[static_cast<std::size_t>(p)], gz, tail);
    const Complex scale = std::pow(j, -2 * p);
    for (std::size_t c = 0; c < left.size(); ++c) {
      Complex right = 0.0;
      for (int i = 0; i <= p; ++i) {
        const double inv = inverse_factorial(p - i).get_d();
        right += std::pow(static_cast<double>(s.exp_sign) * kk, p - i) * inv * base[static_cast<std::size_t>(i)][c];
      }
      lhs.push_back(scale * left[c]);
      rhs.push_back(jl * right);
    }
  }
  return make_report(lhs, rhs, tail, tol);
}

TransformReport verify_vhat_derivative_law(int n, int nu, const GroupElt& g, Complex z, double tol) {
  if (n < 0 || nu < 0) throw Error(ErrorCode::InvalidArgument, "negative index");
  const Complex j = cocycle_J(g, z), kk = cocycle_K(g, z), gz = g.act(z);
  std::vector<VVForm> d{v_hat(n)};
  for (int l = 1; l <= nu; ++l) d.push_back(d.back().derive());
  double tail = 0.0;
  std::vector<Complex> lhs = eval_vector(d[static_cast<std::size_t>(nu)], gz, tail);
  for (auto& x : lhs) x *= std::pow(j, n - 2 * nu);
  const RationalMatrix rho = sym_rep(g, n).entries;
  std::vector<Complex> rhs(lhs.size(), 0.0);
  for (int l = 0; l <= std::min(nu, n); ++l) {
    const Rational c = sign(nu - l) * Rational(factorial(nu)) * Rational(factorial(n - l)) * inverse_factorial(l) *
                       inverse_factorial(nu - l) * inverse_factorial(n - nu);
    if (c == 0) continue;
    std::vector<Complex> v = apply_matrix(rho, eval_vector(d[static_cast<std::size_t>(l)], z, tail));
    for (std::size_t i = 0; i < v.size(); ++i) rhs[i] += c.get_d() * std::pow(kk, nu - l) * v[i];
  }
  return make_report(lhs, rhs, tail, tol);
}

}  // namespace symforms
