#include "symforms/qseries.hpp"

#include <numeric>

#include "symforms/error.hpp"

namespace symforms {
namespace {

constexpr int kMaxDen = 24;

int checked_den(long den) {
  if (den <= 0 || kMaxDen % den != 0)
    throw Error(ErrorCode::InvalidArgument, "exponent denominator " + std::to_string(den) + " does not divide 24");
  return static_cast<int>(den);
}

int common_den(int a, int b) { return checked_den(std::lcm(a, b)); }

// Converts a rational exponent to a numerator over `den`; requires exactness.
long to_num(const Rational& e, int den) {
  Rational scaled = e * den;
  if (scaled.get_den() != 1) throw Error(ErrorCode::InvalidArgument, "exponent not representable over denominator");
  if (!scaled.get_num().fits_slong_p()) throw Error(ErrorCode::InvalidArgument, "exponent out of range");
  return scaled.get_num().get_si();
}

}  // namespace

QSeries::QSeries(int den, long order_num) : den_(checked_den(den)), order_num_(order_num) {
  if (order_num < 0) throw Error(ErrorCode::InvalidArgument, "negative truncation order");
}

QSeries QSeries::zero(long order) { return QSeries(1, order); }

QSeries QSeries::constant(const PiPoly& c) {
  QSeries s;
  if (!c.is_zero()) s.coeffs_.emplace(0, c);
  return s;
}

QSeries QSeries::monomial(const Rational& exponent, const PiPoly& c) {
  if (exponent < 0) throw Error(ErrorCode::InvalidArgument, "negative q-exponent");
  QSeries s(checked_den(exponent.get_den().get_si()), kUnbounded);
  if (!c.is_zero()) s.coeffs_.emplace(to_num(exponent, s.den_), c);
  s.normalize();
  return s;
}

QSeries QSeries::from_coefficients(const std::vector<Rational>& coeffs, std::optional<long> order) {
  QSeries s(1, order.value_or(static_cast<long>(coeffs.size())));
  for (std::size_t n = 0; n < coeffs.size(); ++n) {
    if (static_cast<long>(n) >= s.order_num_) break;
    if (coeffs[n] != 0) s.coeffs_.emplace(static_cast<long>(n), PiPoly(coeffs[n]));
  }
  return s;
}

std::optional<Rational> QSeries::order() const {
  if (is_exact()) return std::nullopt;
  Rational o(order_num_, den_);
  o.canonicalize();
  return o;
}

PiPoly QSeries::coeff(const Rational& exponent) const {
  Rational scaled = exponent * den_;
  if (scaled.get_den() != 1) return PiPoly();
  auto it = coeffs_.find(scaled.get_num().get_si());
  return it == coeffs_.end() ? PiPoly() : it->second;
}

Rational QSeries::coeff_at(long n, int pi_power) const { return coeff(Rational(n)).coeff(pi_power); }

std::optional<Rational> QSeries::leading_exponent() const {
  if (coeffs_.empty()) return std::nullopt;
  Rational e(coeffs_.begin()->first, den_);
  e.canonicalize();
  return e;
}

void QSeries::set_coeff(const Rational& exponent, const PiPoly& c) {
  if (exponent < 0) throw Error(ErrorCode::InvalidArgument, "negative q-exponent");
  int den = common_den(den_, checked_den(exponent.get_den().get_si()));
  if (den != den_) *this = with_den(den);
  long num = to_num(exponent, den_);
  if (num >= order_num_) return;
  if (c.is_zero()) {
    coeffs_.erase(num);
  } else {
    coeffs_[num] = c;
  }
  normalize();
}

QSeries QSeries::with_den(int new_den) const {
  checked_den(new_den);
  if (new_den == den_) return *this;
  if (new_den % den_ != 0) throw Error(ErrorCode::InvalidArgument, "cannot lower exponent denominator");
  const long f = new_den / den_;
  QSeries out(new_den, is_exact() ? kUnbounded : order_num_ * f);
  for (const auto& [num, c] : coeffs_) out.coeffs_.emplace_hint(out.coeffs_.end(), num * f, c);
  return out;
}

QSeries QSeries::lifted(int new_den) const { return with_den(new_den); }

void QSeries::normalize() {
  long g = den_;
  if (!is_exact()) g = std::gcd(g, order_num_);
  for (const auto& entry : coeffs_) {
    if (g == 1) break;
    g = std::gcd(g, entry.first);
  }
  if (g <= 1) return;
  std::map<long, PiPoly> reduced;
  for (auto& [num, c] : coeffs_) reduced.emplace_hint(reduced.end(), num / g, std::move(c));
  coeffs_ = std::move(reduced);
  den_ = static_cast<int>(den_ / g);
  if (!is_exact()) order_num_ /= g;
}

QSeries QSeries::truncated(const Rational& order) const {
  if (order < 0) throw Error(ErrorCode::InvalidArgument, "negative truncation order");
  QSeries out = with_den(common_den(den_, checked_den(order.get_den().get_si())));
  long bound = to_num(order, out.den_);
  if (bound < out.order_num_) out.order_num_ = bound;
  out.coeffs_.erase(out.coeffs_.lower_bound(out.order_num_), out.coeffs_.end());
  out.normalize();
  return out;
}

QSeries QSeries::shifted(const Rational& shift) const {
  QSeries base = with_den(common_den(den_, checked_den(shift.get_den().get_si())));
  long s = to_num(shift, base.den_);
  QSeries out(base.den_, kUnbounded);
  if (!base.is_exact()) {
    if (base.order_num_ + s < 0) throw Error(ErrorCode::InvalidArgument, "shift leaves no exact coefficients");
    out.order_num_ = base.order_num_ + s;
  }
  for (const auto& [num, c] : base.coeffs_) {
    if (num + s < 0) throw Error(ErrorCode::InvalidArgument, "shift produces a negative q-exponent");
    out.coeffs_.emplace_hint(out.coeffs_.end(), num + s, c);
  }
  out.normalize();
  return out;
}

QSeries QSeries::theta() const {
  QSeries out(den_, order_num_);
  for (const auto& [num, c] : coeffs_) {
    if (num == 0) continue;
    Rational e(num, den_);
    e.canonicalize();
    out.coeffs_.emplace_hint(out.coeffs_.end(), num, c * e);
  }
  out.normalize();
  return out;
}

QSeries QSeries::derive(int times) const {
  if (times < 0) throw Error(ErrorCode::InvalidArgument, "negative derivative order");
  QSeries out = *this;
  for (int i = 0; i < times; ++i) {
    out = out.theta();
    for (auto& entry : out.coeffs_) entry.second = entry.second.shifted(1);
  }
  return out;
}

QSeries QSeries::inverse() const {
  if (is_exact()) throw Error(ErrorCode::InvalidArgument, "inverse of an exact series needs a truncation order");
  auto lead = coeffs_.find(0);
  if (lead == coeffs_.end() || !lead->second.is_monomial())
    throw Error(ErrorCode::InvalidArgument, "series inverse needs a single-term constant coefficient");
  const PiPoly b0 = lead->second.inverse();
  std::vector<PiPoly> a(static_cast<std::size_t>(order_num_));
  for (const auto& [num, c] : coeffs_) a[static_cast<std::size_t>(num)] = c;
  std::vector<PiPoly> b(a.size());
  b[0] = b0;
  for (std::size_t n = 1; n < a.size(); ++n) {
    PiPoly acc;
    for (std::size_t k = 1; k <= n; ++k) {
      if (a[k].is_zero() || b[n - k].is_zero()) continue;
      acc += a[k] * b[n - k];
    }
    b[n] = -(b0 * acc);
  }
  QSeries out(den_, order_num_);
  for (std::size_t n = 0; n < b.size(); ++n)
    if (!b[n].is_zero()) out.coeffs_.emplace_hint(out.coeffs_.end(), static_cast<long>(n), b[n]);
  out.normalize();
  return out;
}

QSeries QSeries::pow(unsigned exponent) const {
  QSeries result = QSeries::constant(PiPoly(1));
  QSeries base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

QSeries& QSeries::operator+=(const QSeries& rhs) {
  int den = common_den(den_, rhs.den_);
  if (den != den_) *this = with_den(den);
  const QSeries other = rhs.with_den(den);
  order_num_ = std::min(order_num_, other.order_num_);
  coeffs_.erase(coeffs_.lower_bound(order_num_), coeffs_.end());
  for (const auto& [num, c] : other.coeffs_) {
    if (num >= order_num_) break;
    auto it = coeffs_.find(num);
    if (it == coeffs_.end()) {
      coeffs_.emplace(num, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) coeffs_.erase(it);
    }
  }
  normalize();
  return *this;
}

QSeries& QSeries::operator-=(const QSeries& rhs) { return *this += -rhs; }

QSeries& QSeries::operator*=(const PiPoly& rhs) {
  if (rhs.is_zero()) {
    coeffs_.clear();
    normalize();
    return *this;
  }
  for (auto& entry : coeffs_) entry.second = entry.second * rhs;
  return *this;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
  int den = common_den(a.den_, b.den_);
  const QSeries x = a.with_den(den);
  const QSeries y = b.with_den(den);
  QSeries out(den, std::min(x.order_num_, y.order_num_));
  for (const auto& [ex, cx] : x.coeffs_) {
    if (ex >= out.order_num_) break;
    for (const auto& [ey, cy] : y.coeffs_) {
      long e = ex + ey;
      if (e >= out.order_num_) break;
      PiPoly prod = cx * cy;
      auto it = out.coeffs_.find(e);
      if (it == out.coeffs_.end()) {
        out.coeffs_.emplace(e, std::move(prod));
      } else {
        it->second += prod;
        if (it->second.is_zero()) out.coeffs_.erase(it);
      }
    }
  }
  out.normalize();
  return out;
}

QSeries operator-(QSeries a) {
  for (auto& entry : a.coeffs_) entry.second = -entry.second;
  return a;
}

bool agree_to_order(const QSeries& a, const QSeries& b) {
  QSeries diff = a - b;
  return diff.is_zero();
}

std::optional<Rational> min_order(const QSeries& a, const QSeries& b) {
  auto oa = a.order();
  auto ob = b.order();
  if (!oa) return ob;
  if (!ob) return oa;
  return std::min(*oa, *ob);
}

}  // namespace symforms
