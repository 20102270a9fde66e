#pragma once

#include <vector>

#include "symforms/qseries.hpp"

namespace symforms {

/// Polynomial Σ_d c_d(q)·z^d in the formal variable z with q-series coefficients.
/// Holds explicit z-dependence such as the components of ᵗ(z^n, …, z, 1).
class ZPoly {
 public:
  /// The zero polynomial (exact).
  ZPoly() : coeffs_{QSeries()} {}
  ZPoly(QSeries constant);  // NOLINT(google-explicit-constructor)
  explicit ZPoly(std::vector<QSeries> coeffs);

  static ZPoly monomial(int degree, const QSeries& c);

  /// Highest degree with nonzero coefficient; 0 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const QSeries& coeff(int d) const;
  const std::vector<QSeries>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const;
  /// True when only the z^0 coefficient is nonzero.
  bool is_z_free() const { return degree() == 0; }

  /// D = d/dz acting jointly: D(f·z^d) = D(f)·z^d + d·f·z^{d-1}.
  ZPoly derive() const;
  ZPoly truncated(long order) const;

  ZPoly& operator+=(const ZPoly& rhs);
  ZPoly& operator-=(const ZPoly& rhs);
  ZPoly& operator*=(const QSeries& rhs);
  ZPoly& operator*=(const PiPoly& rhs);

  friend ZPoly operator+(ZPoly a, const ZPoly& b) { return a += b; }
  friend ZPoly operator-(ZPoly a, const ZPoly& b) { return a -= b; }
  friend ZPoly operator*(const ZPoly& a, const ZPoly& b);
  friend ZPoly operator*(ZPoly a, const QSeries& b) { return a *= b; }
  friend ZPoly operator*(const QSeries& b, ZPoly a) { return a *= b; }
  friend ZPoly operator*(ZPoly a, const PiPoly& b) { return a *= b; }
  friend ZPoly operator*(const PiPoly& b, ZPoly a) { return a *= b; }
  friend ZPoly operator-(ZPoly a);
  friend bool operator==(const ZPoly& a, const ZPoly& b) = default;

 private:
  void trim();

  std::vector<QSeries> coeffs_;
};

/// Coefficientwise agree_to_order.
bool agree_to_order(const ZPoly& a, const ZPoly& b);

}  // namespace symforms
