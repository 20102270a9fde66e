#pragma once

#include "symforms/qseries.hpp"
#include "symforms/symtensor.hpp"

namespace symforms {

/// k(k-1)…(k-r+1)/r! for any integer k; 1 when r = 0, 0 when r < 0.
Rational gen_binom(const Integer& k, long r);

/// [φ₁, φ₂]_w^{(λ₁,λ₂)} = Σ_r (-1)^r C(λ₁+w-1, w-r) C(λ₂+w-1, r) φ₁^{(r)} ⊗ φ₂^{(w-r)}.
/// Component (i, j) lands at index i·rank(φ₂) + j. Throws Error(RankMismatch)
/// when a representation dimension disagrees with the component count.
VVForm rc_tensor(const VVForm& phi1, const VVForm& phi2, int w, int lam1, int lam2);

/// [f, φ]_w^{(λ,μ)} = Σ_r (-1)^r C(λ+w-1, w-r) C(μ+w-1, r) f^{(r)} φ^{(w-r)}.
VVForm rc_scalar_vector(const QSeries& f, const VVForm& phi, int w, int lam, int mu);

/// Scalar bracket with the same coefficients.
QSeries rc_scalar(const QSeries& f, const QSeries& g, int w, int lam, int mu);

/// [[φ, ψ]]_w^{(α,β)} = Σ_r (-1)^r C(α+w-1, w-r) C(β+w-1, r) ᵗφ^{(r)} ψ^{(w-r)}.
/// Throws Error(ResidualZDependence) unless every z-power cancels.
QSeries rc_pair(const VVForm& phi, const VVForm& psi, int w, int alpha, int beta);

/// Coefficient (-1)^r C(λ₁+w-1, w-r) C(λ₂+w-1, r) shared by all three brackets.
Rational bracket_coeff(int w, int lam1, int lam2, int r);

}  // namespace symforms
