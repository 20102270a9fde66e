#include "symforms/correspondences.hpp"

#include <algorithm>
#include <cmath>

#include "symforms/brackets.hpp"
#include "symforms/error.hpp"
#include "symforms/modular.hpp"

namespace symforms {

namespace {

Rational sign(long r) { return r % 2 ? Rational(-1) : Rational(1); }

Rational frac(const Integer& num, const Integer& den) {
  Rational out(num, den);
  out.canonicalize();
  return out;
}

void check_power(int n) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative symmetric power");
}

void check_rank(const VVForm& F, int n) {
  if (F.rank() != static_cast<std::size_t>(n) + 1)
    throw Error(ErrorCode::RankMismatch, "expected rank " + std::to_string(n + 1) + ", got " + std::to_string(F.rank()));
}

// Smallest integral truncation order among the components; nullopt when all are exact.
std::optional<long> vv_order(const VVForm& F) {
  std::optional<long> out;
  for (const auto& c : F.components)
    for (const auto& s : c.coeffs()) {
      if (s.is_exact()) continue;
      const long o = s.order_num() / s.den();
      out = out ? std::min(*out, o) : o;
    }
  return out;
}

void check_lambda(int m, int lam) {
  if (m < 0) throw Error(ErrorCode::InvalidArgument, "negative degree bound");
  if (lam <= 2 * m)
    throw Error(ErrorCode::WeightTooSmall, "need lambda > 2m, got lambda = " + std::to_string(lam) + ", m = " + std::to_string(m));
}

void check_coeff_weight(const QuasiElement& f, int expected, const char* what) {
  if (!f.is_zero() && f.weight() != expected)
    throw Error(ErrorCode::WeightMismatch, std::string(what) + " coefficient has weight " + std::to_string(f.weight()) +
                                               ", expected " + std::to_string(expected));
}

}  // namespace

Rational alpha_coeff(int lam, int w, int r, int n) {
  return sign(r) * gen_binom(lam + w - 1, w - r) * gen_binom(w - n - 1, r);
}

VVForm V_map(const QuasiElement& g, int k, int n, int l, long order) {
  check_power(n);
  if (l < 0 || l > n) throw Error(ErrorCode::InvalidArgument, "slot index outside 0..n");
  const int lam = k - n + 2 * l;
  if (!g.is_zero() && (g.weight() != lam || !g.is_modular()))
    throw Error(ErrorCode::WeightMismatch, "V_map needs a modular form of weight " + std::to_string(lam));
  VVForm out = rc_scalar_vector(g.to_qexp(order), v_hat(n), n - l, lam, -n);
  out.weight = k;
  return out;
}

std::vector<QuasiElement> decompose(const VVForm& F, int k, int n) {
  check_power(n);
  check_rank(F, n);
  const std::optional<long> order = vv_order(F);
  if (!order) throw Error(ErrorCode::InsufficientOrder, "decompose needs a truncated expansion");
  std::vector<QuasiElement> out;
  for (int l = 0; l <= n; ++l) out.emplace_back(k - n + 2 * l);

  VVForm rest = F;
  int last = -1;
  while (true) {
    FrameCoords fc;
    try {
      fc = frame_coords(rest);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::ResidualZDependence) throw;
      throw Error(ErrorCode::NotInImage, e.what());
    }
    const auto first = fc.first_nonzero();
    if (!first) break;
    const int t = static_cast<int>(*first);
    if (t <= last) throw Error(ErrorCode::NotInImage, "peeling did not clear frame coordinate " + std::to_string(t));
    last = t;
    const int lam = k - n + 2 * t;
    const Rational c = Rational(factorial(n - t)) * alpha_coeff(lam, n - t, 0, n);
    if (c == 0)
      throw Error(ErrorCode::NotInImage, "frame coordinate " + std::to_string(t) + " is not reached by V (weight " +
                                             std::to_string(lam) + ")");
    const QSeries candidate = fc.entries[static_cast<std::size_t>(t)] * PiPoly(1 / c);
    std::optional<QuasiElement> g = recognize_modular(candidate, lam);
    if (!g) throw Error(ErrorCode::NotInImage, "coordinate " + std::to_string(t) + " is not modular of weight " + std::to_string(lam));
    out[static_cast<std::size_t>(t)] = *g;
    rest -= V_map(*g, k, n, t, *order);
  }
  return out;
}

std::vector<QSeries> W_map(const VVForm& F, int k, int n) {
  check_power(n);
  check_rank(F, n);
  const VVForm dual = u_hat_dual(n);
  std::vector<QSeries> out;
  for (int l = 0; l <= n; ++l) out.push_back(rc_pair(dual, F, l, -n, k));
  return out;
}

VVForm U_map(const QuasiPolynomial& F, int n, long order, bool allow_small_weight) {
  check_power(n);
  const int k = F.weight - n;
  if (k <= n && !allow_small_weight)
    throw Error(ErrorCode::WeightHypothesisViolated, "U_n needs k > n, got k = " + std::to_string(k) + ", n = " + std::to_string(n));
  if (F.degree() > n) throw Error(ErrorCode::InvalidArgument, "polynomial degree exceeds n");
  VVForm out{k, Representation::symmetric(n), std::vector<ZPoly>(static_cast<std::size_t>(n) + 1, ZPoly(QSeries::zero(order)))};
  VVForm dv = v_hat(n);
  for (int l = 0; l <= F.degree(); ++l) {
    if (l > 0) dv = dv.derive();
    const QuasiElement& f = F.coeffs[static_cast<std::size_t>(l)];
    check_coeff_weight(f, F.weight - 2 * l, "quasimodular polynomial");
    if (f.is_zero()) continue;
    const QSeries scaled = f.to_qexp(order) * PiPoly(sign(n) * Rational(factorial(n - l)));
    for (std::size_t i = 0; i < out.rank(); ++i) out.components[i] += dv.components[i] * scaled;
  }
  return out;
}

QuasiPolynomial U_inverse(const VVForm& G, int k, int n, bool allow_small_weight) {
  check_power(n);
  check_rank(G, n);
  if (k <= n && !allow_small_weight)
    throw Error(ErrorCode::WeightHypothesisViolated, "U_n needs k > n, got k = " + std::to_string(k) + ", n = " + std::to_string(n));
  const Rational scale = sign(n) / Rational(factorial(n));
  QuasiPolynomial out{k + n, {}};
  const ZPoly& top = G.components[0];
  if (top.degree() > n) throw Error(ErrorCode::NotInImage, "first component has z-degree above n");
  for (int l = 0; l <= n; ++l) {
    const int w = k + n - 2 * l;
    const QSeries s = top.coeff(n - l) * PiPoly(scale);
    if (s.is_zero()) {
      out.coeffs.emplace_back(w);
      continue;
    }
    std::optional<QuasiElement> f;
    if (w >= 0) f = recognize_quasimodular(s, w, std::min(n - l, w / 2));
    if (!f && w >= 0 && n - l < w / 2) f = recognize_quasimodular(s, w, w / 2);
    if (!f) throw Error(ErrorCode::NotInImage, "coefficient of X^" + std::to_string(l) + " is not quasimodular of weight " + std::to_string(w));
    out.coeffs.push_back(*f);
  }
  const long order = vv_order(G).value_or(30);
  if (!agree_to_order(U_map(out, n, order, allow_small_weight), G))
    throw Error(ErrorCode::NotInImage, "U_n of the recovered polynomial does not reproduce the input");
  return out;
}

QuasiPolynomial Lambda_map(const ModPolynomial& F, int m, int lam) {
  check_lambda(m, lam);
  if (F.degree() > m) throw Error(ErrorCode::InvalidArgument, "polynomial degree exceeds m");
  if (F.weight != lam - 2 * m) throw Error(ErrorCode::WeightMismatch, "modular polynomial weight must be lambda - 2m");
  std::vector<QuasiElement> f;
  for (int r = 0; r <= m; ++r) {
    f.push_back(r <= F.degree() ? F.coeffs[static_cast<std::size_t>(r)] : QuasiElement(F.weight + 2 * r));
    check_coeff_weight(f.back(), F.weight + 2 * r, "modular polynomial");
  }
  QuasiPolynomial out{lam, {}};
  for (int k = 0; k <= m; ++k) {
    QuasiElement sum(lam - 2 * k);
    for (int r = 0; r <= m - k; ++r) {
      const QuasiElement& src = f[static_cast<std::size_t>(m - k - r)];
      if (src.is_zero()) continue;
      const Rational c = frac(1, factorial(k) * factorial(r) * factorial(lam - 2 * k - r - 1));
      sum += z_derive(src, r) * PiPoly(c);
    }
    out.coeffs.push_back(sum);
  }
  return out;
}

ModPolynomial Xi_map(const QuasiPolynomial& F, int m, int lam) {
  check_lambda(m, lam);
  if (F.degree() > m) throw Error(ErrorCode::InvalidArgument, "polynomial degree exceeds m");
  if (F.weight != lam) throw Error(ErrorCode::WeightMismatch, "quasimodular polynomial weight must be lambda");
  std::vector<QuasiElement> f;
  for (int r = 0; r <= m; ++r) {
    f.push_back(r <= F.degree() ? F.coeffs[static_cast<std::size_t>(r)] : QuasiElement(lam - 2 * r));
    check_coeff_weight(f.back(), lam - 2 * r, "quasimodular polynomial");
  }
  ModPolynomial out{lam - 2 * m, {}};
  for (int k = 0; k <= m; ++k) {
    QuasiElement sum(lam - 2 * m + 2 * k);
    const long pre = lam + 2 * k - 2 * m - 1;
    for (int r = 0; r <= k; ++r) {
      const QuasiElement& src = f[static_cast<std::size_t>(m - k + r)];
      if (src.is_zero()) continue;
      const long arg = 2 * k + lam - 2 * m - r - 2;
      // pre·arg! with arg = -1 only occurs for pre = 0; read as pre! = 0! = 1.
      const Integer fact = arg < 0 ? factorial(pre) : Integer(pre) * factorial(arg);
      const Rational c = sign(r) * frac(factorial(m - k + r) * fact, factorial(r));
      sum += z_derive(src, r) * PiPoly(c);
    }
    out.coeffs.push_back(sum);
  }
  return out;
}

QuasiPolynomial Q_map(const QuasiElement& f, int m) {
  if (m < 0) throw Error(ErrorCode::InvalidArgument, "negative degree bound");
  if (f.depth() > m)
    throw Error(ErrorCode::DepthExceeded, "depth " + std::to_string(f.depth()) + " exceeds " + std::to_string(m));
  const int lam = f.weight();
  QuasiPolynomial out{lam, {}};
  for (int r = 0; r <= m; ++r) out.coeffs.emplace_back(lam - 2 * r);
  for (const auto& [mono, c] : f.terms()) {
    for (int j = 0; j <= mono.e2; ++j) {
      Integer twelve_j = 1;
      for (int e = 0; e < j; ++e) twelve_j *= 12;
      const PiPoly coeff = c * PiPoly(Rational(binomial(mono.e2, j) * twelve_j), -j);
      out.coeffs[static_cast<std::size_t>(j)] += QuasiElement::monomial({mono.e2 - j, mono.e4, mono.e6}, coeff);
    }
  }
  return out;
}

QuasiElement Q_inverse(const QuasiPolynomial& F) {
  if (F.coeffs.empty()) return QuasiElement(F.weight);
  return F.coeffs[0];
}

TransformReport verify_quasi_polynomial(const QuasiPolynomial& F, const GroupElt& g, Complex z, double tol, long order) {
  const Complex gz = g.act(z), j = cocycle_J(g, z), kk = cocycle_K(g, z);
  const std::size_t m = F.coeffs.size();
  std::vector<Complex> at_gz, at_z;
  double tail = 0.0;
  for (const auto& f : F.coeffs) {
    const QSeries s = f.to_qexp(order);
    NumericValue a = eval_numeric(s, gz), b = eval_numeric(s, z);
    at_gz.push_back(a.value);
    at_z.push_back(b.value);
    tail = std::max({tail, a.tail_bound, b.tail_bound});
  }
  std::vector<Complex> lhs, rhs;
  const Complex jl = std::pow(j, F.weight);
  for (std::size_t s = 0; s < m; ++s) {
    Complex sum = 0.0;
    for (std::size_t r = s; r < m; ++r)
      sum += at_gz[r] * std::pow(j, 2.0 * static_cast<double>(r)) * binomial(static_cast<long>(r), static_cast<long>(s)).get_d() *
             std::pow(-kk, static_cast<double>(r - s));
    lhs.push_back(sum);
    rhs.push_back(jl * at_z[s]);
  }
  return make_report(lhs, rhs, tail * std::max(1.0, std::abs(jl)), tol);
}

TransformReport verify_mod_polynomial(const ModPolynomial& F, const GroupElt& g, Complex z, double tol, long order) {
  TransformReport out;
  out.pass = true;
  for (std::size_t r = 0; r < F.coeffs.size(); ++r) {
    TransformReport one = verify_scalar_transform(F.coeffs[r].to_qexp(order), F.weight + 2 * static_cast<int>(r), g, z, tol);
    out.residuals.push_back(one.max_residual);
    out.max_residual = std::max(out.max_residual, one.max_residual);
    out.tail_bound = std::max(out.tail_bound, one.tail_bound);
    out.pass = out.pass && one.pass;
  }
  return out;
}

}  // namespace symforms
