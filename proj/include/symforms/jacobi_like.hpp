#pragma once

#include <vector>

#include "symforms/correspondences.hpp"
#include "symforms/numeric.hpp"
#include "symforms/symtensor.hpp"

namespace symforms {

/// Truncated formal series Σ_{j < x_order} Φ_j X^j with vector-valued
/// coefficients (rank 1 and trivial representation for the scalar case).
/// The intended law is Φ(γz, J^{-2}X) = J^λ e^{s·K·X} ρ(γ) Φ(z, X) with
/// s = exp_sign; s = 0 means the coefficients are themselves forms.
struct JLSeries {
  int weight = 0;
  int x_order = 0;
  int exp_sign = 1;
  Representation rep;
  std::vector<VVForm> coeffs;

  bool is_scalar() const { return rep.dimension() == 1; }
};

/// g̃(z, X) = Σ_j D^j g / (j!(j+κ-1)!) X^j for g ∈ M_κ. Throws
/// Error(WeightTooSmall) when κ <= 0.
JLSeries ck_lift_scalar(const QuasiElement& g, int x_order, long order);

/// Φ̃_{v̂_n}(z, X) = Σ_j (-1)^j (n-j)! D^j(v̂_n)/j! X^j; zero beyond X^n.
JLSeries ck_lift_vhat(int n, int x_order);

/// Φ_F = Σ_{ℓ<=n} φ_ℓ X^ℓ with φ_ℓ = (n-ℓ)! f_{n-ℓ}, weight(F) - 2n.
JLSeries jl_from_quasi_polynomial(const QuasiPolynomial& F, int n, long order);

/// a(z, ±X)·b(z, X) with a scalar; weights add and the exponential signs combine.
JLSeries jl_multiply(const JLSeries& a, const JLSeries& b, bool negate_x);

/// X^j coefficient, tagged with weight λ + 2j. Throws Error(IndexOutOfRange)
/// unless 0 <= j < x_order.
VVForm jl_coefficient(const JLSeries& s, int j);

/// Numeric check of the law above on the X^j coefficients, j <= max_power
/// (all stored coefficients when max_power < 0).
TransformReport verify_jl_transform(const JLSeries& s, const GroupElt& g, Complex z, double tol, int max_power = -1);

/// J^{n-2ν} (D^ν v̂_n)(γz) against
/// Σ_ℓ (-1)^{ν-ℓ} ν!(n-ℓ)!/(ℓ!(ν-ℓ)!(n-ν)!) K^{ν-ℓ} ρ_n(γ) D^ℓ v̂_n(z).
TransformReport verify_vhat_derivative_law(int n, int nu, const GroupElt& g, Complex z, double tol);

}  // namespace symforms
