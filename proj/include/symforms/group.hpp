#pragma once

#include <complex>
#include <string>
#include <string_view>

#include "symforms/rational.hpp"

namespace symforms {

using Complex = std::complex<double>;

/// Element (a, b; c, d) of SL(2, Z).
class GroupElt {
 public:
  /// Identity.
  GroupElt() : a_(1), b_(0), c_(0), d_(1) {}
  /// Throws Error(InvalidArgument) unless ad - bc = 1.
  GroupElt(Integer a, Integer b, Integer c, Integer d);

  static GroupElt identity() { return GroupElt(); }
  /// T = (1, 1; 0, 1).
  static GroupElt T() { return GroupElt(1, 1, 0, 1); }
  /// S = (0, -1; 1, 0).
  static GroupElt S() { return GroupElt(0, -1, 1, 0); }
  /// ST = S·T.
  static GroupElt ST() { return S() * T(); }
  /// Parses "a,b,c,d" (also accepts the names T, S, ST, I).
  static GroupElt parse(std::string_view text);

  const Integer& a() const noexcept { return a_; }
  const Integer& b() const noexcept { return b_; }
  const Integer& c() const noexcept { return c_; }
  const Integer& d() const noexcept { return d_; }

  GroupElt inverse() const { return GroupElt(d_, -b_, -c_, a_); }
  GroupElt transpose() const { return GroupElt(a_, c_, b_, d_); }

  /// Möbius action (az + b)/(cz + d).
  Complex act(Complex z) const;

  std::string to_string() const;

  friend GroupElt operator*(const GroupElt& x, const GroupElt& y);
  friend bool operator==(const GroupElt& x, const GroupElt& y) = default;

 private:
  Integer a_, b_, c_, d_;
};

/// 𝔍(γ, z) = cz + d; throws Error(DegeneratePoint) when it vanishes.
Complex cocycle_J(const GroupElt& g, Complex z);
/// 𝔎(γ, z) = c/(cz + d); throws Error(DegeneratePoint) when cz + d = 0.
Complex cocycle_K(const GroupElt& g, Complex z);

}  // namespace symforms
