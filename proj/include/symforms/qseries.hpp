#pragma once

#include <limits>
#include <map>
#include <optional>
#include <vector>

#include "symforms/pi_poly.hpp"
#include "symforms/rational.hpp"

namespace symforms {

/// Truncated q-expansion Σ c_e q^e with exponents e = num/den >= 0, den | 24,
/// and coefficients in Q[Π, Π^{-1}]. Coefficients with exponent below the
/// order are exact; nothing is claimed at or above it. An unbounded order
/// marks a finite exact expansion (a polynomial in q).
class QSeries {
 public:
  static constexpr long kUnbounded = std::numeric_limits<long>::max();

  /// The exact zero series.
  QSeries() = default;
  /// Zero series with exponent denominator `den` and bound order_num/den.
  QSeries(int den, long order_num);

  static QSeries zero(long order);
  static QSeries constant(const PiPoly& c);
  static QSeries monomial(const Rational& exponent, const PiPoly& c);
  /// Σ_{n < coeffs.size()} coeffs[n] q^n, exact below `order` (defaults to the size).
  static QSeries from_coefficients(const std::vector<Rational>& coeffs, std::optional<long> order = std::nullopt);

  int den() const noexcept { return den_; }
  long order_num() const noexcept { return order_num_; }
  bool is_exact() const noexcept { return order_num_ == kUnbounded; }
  /// Truncation bound as a true exponent; nullopt when unbounded.
  std::optional<Rational> order() const;

  /// Keyed by exponent numerator (true exponent = key/den); no zero entries.
  const std::map<long, PiPoly>& coeffs() const noexcept { return coeffs_; }
  PiPoly coeff(const Rational& exponent) const;
  /// Rational part at Π^pi_power of the integer exponent n.
  Rational coeff_at(long n, int pi_power = 0) const;
  /// Smallest exponent with nonzero coefficient; nullopt for zero.
  std::optional<Rational> leading_exponent() const;
  bool is_zero() const noexcept { return coeffs_.empty(); }

  /// Sets the coefficient of q^exponent (ignored at or beyond the order).
  void set_coeff(const Rational& exponent, const PiPoly& c);

  QSeries lifted(int new_den) const;
  QSeries truncated(const Rational& order) const;
  QSeries truncated(long order) const { return truncated(Rational(order)); }
  /// Multiplies by q^shift; the shift may be negative when no exponent drops below 0.
  QSeries shifted(const Rational& shift) const;

  /// θ = q d/dq.
  QSeries theta() const;
  /// D = d/dz = Π·θ on q-expansions.
  QSeries derive(int times = 1) const;
  /// Multiplicative inverse; requires a single-term invertible constant coefficient
  /// and a finite order.
  QSeries inverse() const;
  QSeries pow(unsigned exponent) const;

  QSeries& operator+=(const QSeries& rhs);
  QSeries& operator-=(const QSeries& rhs);
  QSeries& operator*=(const PiPoly& rhs);

  friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
  friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
  friend QSeries operator*(const QSeries& a, const QSeries& b);
  friend QSeries operator*(QSeries a, const PiPoly& b) { return a *= b; }
  friend QSeries operator*(const PiPoly& b, QSeries a) { return a *= b; }
  friend QSeries operator-(QSeries a);
  /// Identical storage: same coefficients, order and denominator.
  friend bool operator==(const QSeries& a, const QSeries& b) = default;

 private:
  void normalize();
  QSeries with_den(int new_den) const;

  int den_ = 1;
  long order_num_ = kUnbounded;
  std::map<long, PiPoly> coeffs_;
};

/// True when a and b have equal coefficients below min(order(a), order(b)).
bool agree_to_order(const QSeries& a, const QSeries& b);

/// Minimum of two orders in true exponent units (nullopt = unbounded).
std::optional<Rational> min_order(const QSeries& a, const QSeries& b);

}  // namespace symforms
