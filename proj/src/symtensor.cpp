#include "symforms/symtensor.hpp"

#include <algorithm>
#include <cmath>

#include "symforms/error.hpp"
#include "symforms/numeric.hpp"

namespace symforms {

namespace {

// Coefficient of z1^{n-j} z2^j in (a z1 + b z2)^{n-i} (c z1 + d z2)^i.
template <class T>
T sym_entry(const T& a, const T& b, const T& c, const T& d, int n, int i, int j) {
  T sum = T(0);
  for (int s = std::max(0, j - i); s <= std::min(n - i, j); ++s) {
    T term = T(binomial(n - i, s).get_d()) * T(binomial(i, j - s).get_d());
    for (int e = 0; e < n - i - s; ++e) term *= a;
    for (int e = 0; e < s; ++e) term *= b;
    for (int e = 0; e < i - (j - s); ++e) term *= c;
    for (int e = 0; e < j - s; ++e) term *= d;
    sum += term;
  }
  return sum;
}

Integer int_pow(const Integer& base, int e) {
  Integer out = 1;
  for (int k = 0; k < e; ++k) out *= base;
  return out;
}

void check_n(int n) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative symmetric power");
}

}  // namespace

SymRepMatrix sym_rep(const GroupElt& g, int n) {
  check_n(n);
  const auto dim = static_cast<std::size_t>(n) + 1;
  RationalMatrix m(dim, dim);
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) {
      Integer sum = 0;
      for (int s = std::max(0, j - i); s <= std::min(n - i, j); ++s) {
        sum += binomial(n - i, s) * binomial(i, j - s) * int_pow(g.a(), n - i - s) * int_pow(g.b(), s) *
               int_pow(g.c(), i - (j - s)) * int_pow(g.d(), j - s);
      }
      m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = Rational(sum);
    }
  }
  return {n, std::move(m)};
}

SymRepMatrix contragredient(const SymRepMatrix& m) { return {m.n, m.entries.inverse().transpose()}; }

RationalMatrix binomial_weights(int n) {
  check_n(n);
  RationalMatrix b(static_cast<std::size_t>(n) + 1, static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) b(static_cast<std::size_t>(i), static_cast<std::size_t>(i)) = Rational(binomial(n, i));
  return b;
}

std::vector<Complex> sym_rep_numeric(Complex a, Complex b, Complex c, Complex d, int n) {
  check_n(n);
  std::vector<Complex> out;
  out.reserve(static_cast<std::size_t>((n + 1) * (n + 1)));
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) out.push_back(sym_entry<Complex>(a, b, c, d, n, i, j));
  return out;
}

std::size_t Representation::dimension() const {
  std::size_t dim = 1;
  for (const auto& f : factors) dim *= static_cast<std::size_t>(f.n) + 1;
  return dim;
}

RationalMatrix Representation::matrix(const GroupElt& g) const {
  RationalMatrix out = RationalMatrix::identity(1);
  for (const auto& f : factors) {
    RationalMatrix m;
    switch (f.kind) {
      case RepKind::symmetric: m = sym_rep(g, f.n).entries; break;
      case RepKind::contragredient: m = contragredient(sym_rep(g, f.n)).entries; break;
      case RepKind::symmetric_transpose_inverse: m = sym_rep(g.transpose().inverse(), f.n).entries; break;
    }
    out = kronecker(out, m);
  }
  return out;
}

Representation tensor(const Representation& a, const Representation& b) {
  Representation out = a;
  out.factors.insert(out.factors.end(), b.factors.begin(), b.factors.end());
  return out;
}

bool VVForm::is_zero() const {
  return std::all_of(components.begin(), components.end(), [](const ZPoly& p) { return p.is_zero(); });
}

VVForm VVForm::derive() const {
  VVForm out{weight + 2, rep, {}};
  for (const auto& c : components) out.components.push_back(c.derive());
  return out;
}

VVForm VVForm::truncated(long order) const {
  VVForm out{weight, rep, {}};
  for (const auto& c : components) out.components.push_back(c.truncated(order));
  return out;
}

VVForm& VVForm::operator+=(const VVForm& rhs) {
  if (rank() != rhs.rank()) throw Error(ErrorCode::RankMismatch, "adding vector-valued forms of different rank");
  if (weight != rhs.weight && !is_zero() && !rhs.is_zero())
    throw Error(ErrorCode::WeightMismatch, "adding vector-valued forms of different weight");
  if (is_zero() && !rhs.is_zero()) {
    weight = rhs.weight;
    rep = rhs.rep;
  }
  for (std::size_t i = 0; i < rank(); ++i) components[i] += rhs.components[i];
  return *this;
}

VVForm& VVForm::operator-=(const VVForm& rhs) {
  VVForm neg = rhs;
  for (auto& c : neg.components) c = -c;
  return *this += neg;
}

VVForm& VVForm::operator*=(const QSeries& rhs) {
  for (auto& c : components) c *= rhs;
  return *this;
}

VVForm& VVForm::operator*=(const PiPoly& rhs) {
  for (auto& c : components) c *= rhs;
  return *this;
}

bool agree_to_order(const VVForm& a, const VVForm& b) {
  if (a.rank() != b.rank()) return false;
  for (std::size_t i = 0; i < a.rank(); ++i)
    if (!agree_to_order(a.components[i], b.components[i])) return false;
  return true;
}

VVForm v_hat(int n) {
  check_n(n);
  VVForm out{-n, Representation::symmetric(n), {}};
  for (int i = 0; i <= n; ++i) out.components.push_back(ZPoly::monomial(n - i, QSeries::constant(1)));
  return out;
}

VVForm u_hat(int n) {
  check_n(n);
  VVForm out{-n, {{{RepKind::symmetric_transpose_inverse, n}}}, {}};
  for (int j = 0; j <= n; ++j) out.components.push_back(ZPoly::monomial(j, QSeries::constant(j % 2 ? -1 : 1)));
  return out;
}

VVForm u_hat_dual(int n) {
  check_n(n);
  VVForm out{-n, {{{RepKind::contragredient, n}}}, {}};
  for (int j = 0; j <= n; ++j) {
    Rational c(binomial(n, j));
    if (j % 2) c = -c;
    out.components.push_back(ZPoly::monomial(j, QSeries::constant(c)));
  }
  return out;
}

namespace {

ZPolyMatrix unipotent(int n, int sign) {
  check_n(n);
  const auto dim = static_cast<std::size_t>(n) + 1;
  ZPolyMatrix m(dim, std::vector<ZPoly>(dim));
  for (int i = 0; i <= n; ++i) {
    for (int j = i; j <= n; ++j) {
      Rational c(binomial(n - i, j - i));
      if (sign < 0 && (j - i) % 2) c = -c;
      m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = ZPoly::monomial(j - i, QSeries::constant(c));
    }
  }
  return m;
}

}  // namespace

ZPolyMatrix frame_matrix(int n) { return unipotent(n, 1); }

ZPolyMatrix frame_matrix_inverse(int n) { return unipotent(n, -1); }

ZPolyMatrix multiply(const ZPolyMatrix& a, const ZPolyMatrix& b) {
  const std::size_t inner = b.size();
  ZPolyMatrix out(a.size(), std::vector<ZPoly>(inner ? b[0].size() : 0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != inner) throw Error(ErrorCode::RankMismatch, "matrix shapes do not match");
    for (std::size_t j = 0; j < out[i].size(); ++j)
      for (std::size_t k = 0; k < inner; ++k) out[i][j] += a[i][k] * b[k][j];
  }
  return out;
}

std::vector<ZPoly> multiply(const ZPolyMatrix& a, const std::vector<ZPoly>& v) {
  std::vector<ZPoly> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != v.size()) throw Error(ErrorCode::RankMismatch, "matrix and vector shapes do not match");
    for (std::size_t k = 0; k < v.size(); ++k)
      if (!a[i][k].is_zero()) out[i] += a[i][k] * v[k];
  }
  return out;
}

std::optional<std::size_t> FrameCoords::first_nonzero() const {
  for (std::size_t i = 0; i < entries.size(); ++i)
    if (!entries[i].is_zero()) return i;
  return std::nullopt;
}

FrameCoords frame_coords(const VVForm& F) {
  if (F.rank() == 0) throw Error(ErrorCode::RankMismatch, "empty vector-valued form");
  const int n = static_cast<int>(F.rank()) - 1;
  std::vector<ZPoly> coords = multiply(frame_matrix_inverse(n), F.components);
  FrameCoords out;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (!coords[i].is_z_free())
      throw Error(ErrorCode::ResidualZDependence, "frame coordinate " + std::to_string(i) + " depends on z");
    out.entries.push_back(coords[i].coeff(0));
  }
  return out;
}

TransformReport verify_vv_transform(const VVForm& F, const GroupElt& g, Complex z, double tol) {
  if (F.rep.dimension() != F.rank()) throw Error(ErrorCode::RankMismatch, "representation does not match rank");
  const Complex gz = g.act(z);
  const Complex jk = std::pow(cocycle_J(g, z), -F.weight);
  const RationalMatrix rho = F.rep.matrix(g);
  std::vector<Complex> at_z, lhs, rhs;
  std::vector<double> tail_z;
  double tail = 0.0;
  for (const auto& c : F.components) {
    NumericValue v = eval_numeric(c, z);
    at_z.push_back(v.value);
    tail_z.push_back(v.tail_bound);
    NumericValue w = eval_numeric(c, gz);
    lhs.push_back(jk * w.value);
    tail = std::max(tail, std::abs(jk) * w.tail_bound);
  }
  for (std::size_t i = 0; i < F.rank(); ++i) {
    Complex sum = 0.0;
    double t = 0.0;
    for (std::size_t j = 0; j < F.rank(); ++j) {
      const double r = rho(i, j).get_d();
      sum += r * at_z[j];
      t += std::abs(r) * tail_z[j];
    }
    rhs.push_back(sum);
    tail = std::max(tail, t);
  }
  return make_report(lhs, rhs, tail, tol);
}

}  // namespace symforms
