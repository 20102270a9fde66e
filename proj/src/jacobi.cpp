#include "symforms/jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <mutex>
#include <numbers>

#include "symforms/correspondences.hpp"
#include "symforms/error.hpp"
#include "symforms/modular.hpp"

namespace symforms {

namespace {

long floor_div(const Rational& x) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q.get_si();
}

QSeries zero_at(long order) { return order == QSeries::kUnbounded ? QSeries() : QSeries::zero(order); }

long min_order(long a, long b) { return std::min(a, b); }

}  // namespace

JacSeries JacSeries::from_qseries(const QSeries& f, int weight, long order) {
  JacSeries out(weight, 0, order);
  out.by_zeta_[0] = f;
  out.clean();
  return out;
}

QSeries JacSeries::coeff(long r) const {
  auto it = by_zeta_.find(r);
  return it == by_zeta_.end() ? zero_at(order_) : it->second;
}

void JacSeries::set_coeff(long r, const QSeries& c) {
  by_zeta_[r] = c;
  clean();
}

void JacSeries::clean() {
  for (auto it = by_zeta_.begin(); it != by_zeta_.end();) {
    if (order_ != QSeries::kUnbounded) it->second = it->second.truncated(order_);
    if (it->second.is_zero()) it = by_zeta_.erase(it);
    else ++it;
  }
}

std::map<Rational, JacSeries::Row> JacSeries::rows() const {
  std::map<Rational, Row> out;
  for (const auto& [r, s] : by_zeta_) {
    for (const auto& [num, c] : s.coeffs()) {
      Rational e(num, s.den());
      e.canonicalize();
      out[e][r] = c;
    }
  }
  return out;
}

JacSeries::Row JacSeries::row(const Rational& q_exponent) const {
  Row out;
  for (const auto& [r, s] : by_zeta_) {
    PiPoly c = s.coeff(q_exponent);
    if (!c.is_zero()) out[r] = c;
  }
  return out;
}

QSeries JacSeries::at_zeta_one() const {
  QSeries out = zero_at(order_);
  for (const auto& entry : by_zeta_) out += entry.second;
  return out;
}

JacSeries JacSeries::truncated(long order) const {
  JacSeries out = *this;
  out.order_ = std::min(order_, order);
  out.clean();
  return out;
}

JacSeries JacSeries::shifted(const Rational& shift) const {
  JacSeries out(weight_, index_, order_);
  if (order_ != QSeries::kUnbounded) out.order_ = floor_div(Rational(order_) + shift);
  for (const auto& [r, s] : by_zeta_) out.by_zeta_[r] = s.shifted(shift);
  out.clean();
  return out;
}

JacSeries JacSeries::times(const QSeries& f, int weight) const {
  long order = order_;
  if (!f.is_exact()) order = std::min(order, floor_div(*f.order()));
  JacSeries out(weight_ + weight, index_, order);
  for (const auto& [r, s] : by_zeta_) out.by_zeta_[r] = s * f;
  out.clean();
  return out;
}

bool JacSeries::is_zeta_symmetric() const {
  for (const auto& [r, s] : by_zeta_)
    if (!agree_to_order(s, coeff(-r))) return false;
  return true;
}

bool JacSeries::satisfies_weak_support() const {
  for (const auto& [e, row] : rows())
    for (const auto& entry : row) {
      const Rational r(entry.first);
      if (r * r > 4 * e * index_ + index_ * index_) return false;
    }
  return true;
}

JacSeries& JacSeries::operator+=(const JacSeries& rhs) {
  if (is_zero() && order_ == QSeries::kUnbounded) {
    weight_ = rhs.weight_;
    index_ = rhs.index_;
  } else if (!rhs.is_zero() && !is_zero() && (weight_ != rhs.weight_ || index_ != rhs.index_)) {
    throw Error(ErrorCode::WeightMismatch, "adding Jacobi series of different weight or index");
  }
  if (is_zero() && !rhs.is_zero()) {
    weight_ = rhs.weight_;
    index_ = rhs.index_;
  }
  order_ = min_order(order_, rhs.order_);
  for (const auto& [r, s] : rhs.by_zeta_) {
    auto it = by_zeta_.find(r);
    if (it == by_zeta_.end()) by_zeta_.emplace(r, s);
    else it->second += s;
  }
  clean();
  return *this;
}

JacSeries& JacSeries::operator-=(const JacSeries& rhs) {
  JacSeries neg = rhs;
  neg *= PiPoly(-1);
  return *this += neg;
}

JacSeries& JacSeries::operator*=(const PiPoly& rhs) {
  for (auto& entry : by_zeta_) entry.second *= rhs;
  clean();
  return *this;
}

JacSeries operator*(const JacSeries& a, const JacSeries& b) {
  JacSeries out(a.weight_ + b.weight_, a.index_ + b.index_, min_order(a.order_, b.order_));
  for (const auto& [r1, s1] : a.by_zeta_) {
    for (const auto& [r2, s2] : b.by_zeta_) {
      QSeries p = s1 * s2;
      auto it = out.by_zeta_.find(r1 + r2);
      if (it == out.by_zeta_.end()) out.by_zeta_.emplace(r1 + r2, std::move(p));
      else it->second += p;
    }
  }
  out.clean();
  return out;
}

bool agree_to_order(const JacSeries& a, const JacSeries& b) {
  std::vector<long> keys;
  for (const auto& entry : a.by_zeta()) keys.push_back(entry.first);
  for (const auto& entry : b.by_zeta()) keys.push_back(entry.first);
  const long order = std::min(a.order(), b.order());
  for (long r : keys) {
    QSeries x = a.coeff(r), y = b.coeff(r);
    if (order != QSeries::kUnbounded) {
      x = x.truncated(order);
      y = y.truncated(order);
    }
    if (!agree_to_order(x, y)) return false;
  }
  return true;
}

NumericValue eval_numeric(const JacSeries& phi, Complex z, Complex w) {
  const Complex two_pi_i(0.0, 2.0 * std::numbers::pi);
  NumericValue out{0.0, 0.0};
  double max_zeta = 1.0;
  for (const auto& [r, s] : phi.by_zeta()) {
    NumericValue c = eval_numeric(s, z);
    const Complex zr = std::exp(two_pi_i * static_cast<double>(r) * w);
    out.value += zr * c.value;
    max_zeta = std::max(max_zeta, std::abs(zr));
    out.tail_bound = std::max(out.tail_bound, c.tail_bound);
  }
  if (phi.order() != QSeries::kUnbounded && phi.is_zero()) {
    const double aq = std::abs(q_of(z));
    out.tail_bound = std::pow(aq, static_cast<double>(phi.order())) / (1.0 - aq);
  }
  out.tail_bound *= max_zeta * static_cast<double>(std::max<std::size_t>(1, phi.by_zeta().size()));
  return out;
}

QSeries eta(long order) {
  if (order < 1) throw Error(ErrorCode::InvalidArgument, "order must be positive");
  std::vector<Integer> p(static_cast<std::size_t>(order), 0);
  p[0] = 1;
  for (long n = 1; n < order; ++n)
    for (long e = order - 1; e >= n; --e) p[static_cast<std::size_t>(e)] -= p[static_cast<std::size_t>(e - n)];
  std::vector<Rational> c(p.begin(), p.end());
  return QSeries::from_coefficients(c, order).shifted(Rational(1, 24)).truncated(order);
}

JacSeries theta_squared(int kind, long order) {
  if (kind < 1 || kind > 4) throw Error(ErrorCode::InvalidArgument, "theta kind must be 1..4");
  if (order < 1) throw Error(ErrorCode::InvalidArgument, "order must be positive");
  const bool half = kind <= 2;
  // Exponents in units of 1/8: (2n+1)²/8 for the half-integral kinds, 4n²/8 otherwise.
  auto exp8 = [&](long n) { return half ? (2 * n + 1) * (2 * n + 1) : 4 * n * n; };
  const long limit = 8 * order;
  long bound = 0;
  while (exp8(bound) < limit || exp8(-bound - 1) < limit) ++bound;
  std::map<long, std::map<long, Integer>> acc;
  for (long n = -bound - 1; n <= bound; ++n) {
    if (exp8(n) >= limit) continue;
    for (long m = -bound - 1; m <= bound; ++m) {
      const long e = exp8(n) + exp8(m);
      if (e >= limit) continue;
      long sign = 1;
      if (kind == 1) sign = ((n + m) % 2 == 0) ? -1 : 1;
      if (kind == 4) sign = ((n + m) % 2 == 0) ? 1 : -1;
      acc[n + m + (half ? 1 : 0)][e] += sign;
    }
  }
  JacSeries out(1, 1, order);
  for (const auto& [r, coeffs] : acc) {
    QSeries s(8, limit);
    for (const auto& [e, c] : coeffs)
      if (c != 0) s.set_coeff(Rational(e, 8), PiPoly(Rational(c)));
    out.set_coeff(r, s);
  }
  return out;
}

namespace {

// (ζ - 2 + ζ⁻¹)∏(1 - qⁿζ)²(1 - qⁿζ⁻¹)²(1 - qⁿ)⁻⁴ on a dense integer grid.
JacSeries phi_minus2_product(long order) {
  const long R = order + 2;
  const auto width = static_cast<std::size_t>(2 * R + 1);
  std::vector<std::vector<Integer>> a(static_cast<std::size_t>(order), std::vector<Integer>(width, 0));
  auto at = [&](long e, long r) -> Integer& { return a[static_cast<std::size_t>(e)][static_cast<std::size_t>(r + R)]; };
  at(0, 1) = 1;
  at(0, 0) = -2;
  at(0, -1) = 1;
  auto times_one_minus = [&](long n, long shift) {
    for (long e = order - 1; e >= n; --e)
      for (long r = R; r >= -R; --r) {
        const long src = r - shift;
        if (src < -R || src > R) continue;
        at(e, r) -= at(e - n, src);
      }
  };
  for (long n = 1; n < order; ++n) {
    for (int rep = 0; rep < 2; ++rep) {
      times_one_minus(n, 1);
      times_one_minus(n, -1);
    }
    for (int rep = 0; rep < 4; ++rep)
      for (long e = n; e < order; ++e)
        for (long r = -R; r <= R; ++r) at(e, r) += at(e - n, r);
  }
  JacSeries out(-2, 1, order);
  for (long r = -R; r <= R; ++r) {
    std::vector<Rational> c;
    bool any = false;
    for (long e = 0; e < order; ++e) {
      c.emplace_back(at(e, r));
      any = any || at(e, r) != 0;
    }
    if (any) out.set_coeff(r, QSeries::from_coefficients(c, order));
  }
  return out;
}

JacSeries phi_zero_theta(long order) {
  JacSeries sum(0, 1, order);
  for (int kind = 2; kind <= 4; ++kind) {
    const JacSeries t = theta_squared(kind, order + 1);
    const QSeries at_one = t.at_zeta_one();
    const Rational lead = *at_one.leading_exponent();
    const QSeries inv = at_one.shifted(-lead).inverse();
    JacSeries ratio = t.shifted(-lead).times(inv, -1);
    ratio.set_index(1);
    ratio.set_weight(0);
    sum += ratio;
  }
  sum *= PiPoly(4);
  return sum.truncated(order);
}

class JacobiCache {
 public:
  template <typename Make>
  const JacSeries& get(std::pair<int, long> key, Make make) {
    {
      std::lock_guard lock(mutex_);
      auto it = entries_.find(key);
      if (it != entries_.end()) return *it->second;
    }
    auto value = std::make_unique<JacSeries>(make());
    std::lock_guard lock(mutex_);
    auto [it, inserted] = entries_.emplace(key, std::move(value));
    return *it->second;
  }

 private:
  std::mutex mutex_;
  std::map<std::pair<int, long>, std::unique_ptr<JacSeries>> entries_;
};

JacobiCache& jacobi_cache() {
  static JacobiCache cache;
  return cache;
}

}  // namespace

const JacSeries& phi_tilde(int which, long order) {
  if (order < 1) throw Error(ErrorCode::InvalidArgument, "order must be positive");
  if (which == -2) return jacobi_cache().get({-2, order}, [&] { return phi_minus2_product(order); });
  if (which == 0) return jacobi_cache().get({0, order}, [&] { return phi_zero_theta(order); });
  throw Error(ErrorCode::UnsupportedWeight, "phi_tilde is defined for weights -2 and 0");
}

JacSeries jacobi_eisenstein(int k, long order) {
  const JacSeries& p0 = phi_tilde(0, order);
  const JacSeries& pm2 = phi_tilde(-2, order);
  JacSeries out;
  if (k == 4) out = p0.times(eisenstein(4, order), 4) - pm2.times(eisenstein(6, order), 6);
  else if (k == 6) out = p0.times(eisenstein(6, order), 6) - pm2.times(generator_power(4, 2, order), 8);
  else throw Error(ErrorCode::UnsupportedWeight, "Jacobi Eisenstein series only for k = 4, 6");
  out *= PiPoly(Rational(1, 12));
  return out;
}

JacSeries P_map(const std::vector<QuasiElement>& f, int n, int k, long order) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative index");
  if (f.size() != static_cast<std::size_t>(n) + 1) throw Error(ErrorCode::RankMismatch, "P needs n + 1 modular forms");
  std::vector<JacSeries> pm{JacSeries::from_qseries(QSeries::constant(1), 0, order)};
  std::vector<JacSeries> p0{pm[0]};
  for (int l = 1; l <= n; ++l) {
    pm.push_back(pm.back() * phi_tilde(-2, order));
    p0.push_back(p0.back() * phi_tilde(0, order));
  }
  JacSeries out(k - n, n, order);
  for (int l = 0; l <= n; ++l) {
    const QuasiElement& g = f[static_cast<std::size_t>(l)];
    if (g.is_zero()) continue;
    if (!g.is_modular() || g.weight() != k - n + 2 * l)
      throw Error(ErrorCode::WeightMismatch, "slot " + std::to_string(l) + " needs a modular form of weight " +
                                                 std::to_string(k - n + 2 * l));
    out += (pm[static_cast<std::size_t>(l)] * p0[static_cast<std::size_t>(n - l)]).times(g.to_qexp(order), g.weight());
  }
  out.set_weight(k - n);
  out.set_index(n);
  return out;
}

JacSeries Psi_map(const VVForm& F, int n, int k, long order) { return P_map(decompose(F, k, n), n, k, order); }

JacobiReport verify_jacobi_transform(const JacSeries& phi, const GroupElt& g, Complex z, Complex w, int mu, int nu,
                                     double tol) {
  const Complex two_pi_i(0.0, 2.0 * std::numbers::pi);
  const double m = phi.index();
  JacobiReport out;
  {
    const Complex j = cocycle_J(g, z), kk = cocycle_K(g, z);
    NumericValue lhs = eval_numeric(phi, g.act(z), w / j);
    NumericValue base = eval_numeric(phi, z, w);
    const Complex factor = std::pow(j, phi.weight()) * std::exp(two_pi_i * m * kk * w * w);
    out.modular = make_report({lhs.value}, {factor * base.value}, std::max(lhs.tail_bound, std::abs(factor) * base.tail_bound), tol);
  }
  {
    NumericValue lhs = eval_numeric(phi, z, w + static_cast<double>(mu) * z + static_cast<double>(nu));
    NumericValue base = eval_numeric(phi, z, w);
    const double sign = (static_cast<long>(2 * m) * (mu + nu)) % 2 == 0 ? 1.0 : -1.0;
    const Complex factor = sign * std::exp(-two_pi_i * m * (static_cast<double>(mu * mu) * z + 2.0 * mu * w));
    out.elliptic = make_report({lhs.value}, {factor * base.value}, std::max(lhs.tail_bound, std::abs(factor) * base.tail_bound), tol);
  }
  out.pass = out.modular.pass && out.elliptic.pass;
  return out;
}

}  // namespace symforms
