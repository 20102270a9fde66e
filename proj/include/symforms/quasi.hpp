#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "symforms/pi_poly.hpp"
#include "symforms/qseries.hpp"

namespace symforms {

/// E2^e2 · E4^e4 · E6^e6.
struct QuasiMonomial {
  int e2 = 0;
  int e4 = 0;
  int e6 = 0;

  int weight() const noexcept { return 2 * e2 + 4 * e4 + 6 * e6; }
  friend auto operator<=>(const QuasiMonomial&, const QuasiMonomial&) = default;
};

/// Homogeneous element of Q[Π^±1][E2, E4, E6]: the quasimodular forms of
/// SL(2, Z). Depth is the E2-degree; depth 0 elements are modular forms.
/// Factors of Π carry no weight.
class QuasiElement {
 public:
  explicit QuasiElement(int weight = 0) : weight_(weight) {}

  static QuasiElement constant(const PiPoly& c);
  static QuasiElement monomial(const QuasiMonomial& m, const PiPoly& c = PiPoly(1));
  static QuasiElement E2() { return monomial({1, 0, 0}); }
  static QuasiElement E4() { return monomial({0, 1, 0}); }
  static QuasiElement E6() { return monomial({0, 0, 1}); }
  /// Δ = (E4³ - E6²)/1728.
  static QuasiElement delta();

  int weight() const noexcept { return weight_; }
  int depth() const;
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_modular() const { return depth() == 0; }
  const std::map<QuasiMonomial, PiPoly>& terms() const noexcept { return terms_; }
  PiPoly coeff(const QuasiMonomial& m) const;

  /// q-expansion exact below `order`.
  QSeries to_qexp(long order) const;

  QuasiElement& operator+=(const QuasiElement& rhs);
  QuasiElement& operator-=(const QuasiElement& rhs);
  QuasiElement& operator*=(const PiPoly& rhs);

  friend QuasiElement operator+(QuasiElement a, const QuasiElement& b) { return a += b; }
  friend QuasiElement operator-(QuasiElement a, const QuasiElement& b) { return a -= b; }
  friend QuasiElement operator*(const QuasiElement& a, const QuasiElement& b);
  friend QuasiElement operator*(QuasiElement a, const PiPoly& b) { return a *= b; }
  friend QuasiElement operator*(const PiPoly& b, QuasiElement a) { return a *= b; }
  friend QuasiElement operator-(QuasiElement a);
  /// Equal terms, and equal weight unless both are zero.
  friend bool operator==(const QuasiElement& a, const QuasiElement& b);

  std::string to_string() const;

 private:
  void add(const QuasiMonomial& m, const PiPoly& c);

  int weight_ = 0;
  std::map<QuasiMonomial, PiPoly> terms_;
};

/// θ = q d/dq via Ramanujan: θE2 = (E2² - E4)/12, θE4 = (E2E4 - E6)/3,
/// θE6 = (E2E6 - E4²)/2, extended as a derivation. Raises weight by 2.
QuasiElement quasi_derive(const QuasiElement& x);
/// D^r = Π^r θ^r.
QuasiElement z_derive(const QuasiElement& x, int r = 1);

/// Power x^e of a quasimodular element.
QuasiElement pow(const QuasiElement& x, unsigned e);

}  // namespace symforms
