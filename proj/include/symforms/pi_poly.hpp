#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "symforms/rational.hpp"

namespace symforms {

// Π stands for the constant 2πi. Expansions of d/dz produce one factor of Π
// per derivative, so coefficients live in Q[Π, Π^{-1}].

/// A single term value·Π^pi_power; zero always has pi_power 0.
struct PiRational {
  Rational value;
  int pi_power = 0;

  PiRational() = default;
  PiRational(Rational v, int p);

  friend bool operator==(const PiRational&, const PiRational&) = default;
};

/// Laurent polynomial in Π with rational coefficients.
class PiPoly {
 public:
  using Term = std::pair<int, Rational>;

  PiPoly() = default;
  PiPoly(const Rational& value, int pi_power = 0);  // NOLINT(google-explicit-constructor)
  PiPoly(long value);                               // NOLINT(google-explicit-constructor)
  PiPoly(const PiRational& term);                   // NOLINT(google-explicit-constructor)

  /// Π^power.
  static PiPoly pi(int power = 1);

  bool is_zero() const noexcept { return terms_.empty(); }
  /// Sorted by pi_power, no zero coefficients.
  const std::vector<Term>& terms() const noexcept { return terms_; }
  Rational coeff(int pi_power) const;
  bool is_monomial() const noexcept { return terms_.size() == 1; }

  /// Multiplies by Π^shift.
  PiPoly shifted(int shift) const;
  /// Multiplicative inverse; only defined for single-term values.
  PiPoly inverse() const;

  /// Substitutes Π = 2πi.
  std::complex<double> evaluate() const;

  PiPoly& operator+=(const PiPoly& rhs);
  PiPoly& operator-=(const PiPoly& rhs);
  PiPoly& operator*=(const Rational& rhs);
  PiPoly& operator*=(const PiPoly& rhs);

  friend PiPoly operator+(PiPoly a, const PiPoly& b) { return a += b; }
  friend PiPoly operator-(PiPoly a, const PiPoly& b) { return a -= b; }
  friend PiPoly operator*(const PiPoly& a, const PiPoly& b);
  friend PiPoly operator*(PiPoly a, const Rational& b) { return a *= b; }
  friend PiPoly operator*(const Rational& b, PiPoly a) { return a *= b; }
  friend PiPoly operator-(PiPoly a);
  friend bool operator==(const PiPoly& a, const PiPoly& b) { return a.terms_ == b.terms_; }

 private:
  void add_term(int pi_power, const Rational& value);

  std::vector<Term> terms_;
};

}  // namespace symforms
