#pragma once

#include <vector>

#include "symforms/numeric.hpp"
#include "symforms/quasi.hpp"
#include "symforms/symtensor.hpp"

namespace symforms {

/// Σ_r f_r X^r with f_r ∈ M_{weight + 2r}.
struct ModPolynomial {
  int weight = 0;
  std::vector<QuasiElement> coeffs;

  int degree() const noexcept { return static_cast<int>(coeffs.size()) - 1; }
  friend bool operator==(const ModPolynomial&, const ModPolynomial&) = default;
};

/// Σ_r f_r X^r of weight λ with f_r of weight λ - 2r, invariant under
/// (Φ‖_λγ)(z, X) = J^{-λ} Φ(γz, J²(X - K)).
struct QuasiPolynomial {
  int weight = 0;
  std::vector<QuasiElement> coeffs;

  int degree() const noexcept { return static_cast<int>(coeffs.size()) - 1; }
  friend bool operator==(const QuasiPolynomial&, const QuasiPolynomial&) = default;
};

/// α^λ_{w,r} = (-1)^r C(λ+w-1, w-r) C(w-n-1, r).
Rational alpha_coeff(int lam, int w, int r, int n);

/// 𝒱_{k,n,ℓ}(g) = [g, v̂_n]^{(k-n+2ℓ, -n)}_{n-ℓ}, expanded to q-order `order`.
/// Throws Error(WeightMismatch) unless g is modular of weight k - n + 2ℓ.
VVForm V_map(const QuasiElement& g, int k, int n, int l, long order);

/// (g_0, …, g_n) with Σ_ℓ 𝒱_{k,n,ℓ}(g_ℓ) = F, by peeling the lowest nonzero
/// frame coordinate. Throws Error(NotInImage) when a coordinate keeps z or a
/// peeled coefficient is not modular.
std::vector<QuasiElement> decompose(const VVForm& F, int k, int n);

/// ([[B·û_n, F]]_ℓ^{(-n,k)})_{ℓ=0..n}; entry ℓ has weight k - n + 2ℓ.
std::vector<QSeries> W_map(const VVForm& F, int k, int n);

/// 𝒰_n(F) = Σ_ℓ (-1)^n (n-ℓ)! D^ℓ(v̂_n) f_ℓ, a form of weight k = weight(F) - n.
/// Throws Error(WeightHypothesisViolated) when k <= n unless allow_small_weight.
VVForm U_map(const QuasiPolynomial& F, int n, long order, bool allow_small_weight = false);

/// Reads f_ℓ = (-1)^n/n! · [z^{n-ℓ}] G_0, recognizes each as quasimodular and
/// checks 𝒰_n of the result against G. Throws Error(NotInImage) on failure.
QuasiPolynomial U_inverse(const VVForm& G, int k, int n, bool allow_small_weight = false);

/// Λ^m_λ: MP^m_{λ-2m} → QP^m_λ. Throws Error(WeightTooSmall) when λ <= 2m.
QuasiPolynomial Lambda_map(const ModPolynomial& F, int m, int lam);
/// Ξ^m_λ: QP^m_λ → MP^m_{λ-2m}. Throws Error(WeightTooSmall) when λ <= 2m.
ModPolynomial Xi_map(const QuasiPolynomial& F, int m, int lam);

/// Substitutes E2 → E2 + (12/Π)X. Throws Error(DepthExceeded) when depth(f) > m.
QuasiPolynomial Q_map(const QuasiElement& f, int m);
/// F(z, 0).
QuasiElement Q_inverse(const QuasiPolynomial& F);

/// Compares Φ(γz, J²(X - K)) with J^λ Φ(z, X) coefficientwise in X.
TransformReport verify_quasi_polynomial(const QuasiPolynomial& F, const GroupElt& g, Complex z, double tol,
                                        long order);
/// Checks f_r|_{λ+2r}γ = f_r for every coefficient.
TransformReport verify_mod_polynomial(const ModPolynomial& F, const GroupElt& g, Complex z, double tol,
                                      long order);

}  // namespace symforms
