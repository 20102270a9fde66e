#pragma once

#include <complex>
#include <vector>

#include "symforms/group.hpp"
#include "symforms/qseries.hpp"
#include "symforms/zpoly.hpp"

namespace symforms {

/// Partial sum plus a crude bound |q|^order/(1-|q|) on the omitted tail.
struct NumericValue {
  Complex value;
  double tail_bound = 0.0;
};

/// |q| above which evaluation is refused.
inline constexpr double kMaxAbsQ = 0.95;

/// q = exp(2πi z); throws Error(ImaginaryPartTooSmall) if Im z <= 0 or |q| >= 0.95.
Complex q_of(Complex z);

/// Substitutes Π → 2πi and q → exp(2πi z).
NumericValue eval_numeric(const QSeries& s, Complex z);
/// Σ_d z^d c_d(z); the tail bound is scaled by Σ|z|^d.
NumericValue eval_numeric(const ZPoly& p, Complex z);

struct TransformReport {
  /// Per-component |lhs - rhs| / max(1, ‖lhs‖∞, ‖rhs‖∞).
  std::vector<double> residuals;
  double max_residual = 0.0;
  /// Crude tail bound of the truncated expansions, in the same relative units.
  double tail_bound = 0.0;
  bool pass = false;
};

/// Builds a report from numeric left/right vectors and tail bound.
TransformReport make_report(const std::vector<Complex>& lhs, const std::vector<Complex>& rhs, double tail, double tol);

/// Compares J(γ,z)^{-k} f(γz) with f(z).
TransformReport verify_scalar_transform(const QSeries& f, int weight, const GroupElt& g, Complex z, double tol);

}  // namespace symforms
