#pragma once

#include <optional>
#include <vector>

#include "symforms/group.hpp"
#include "symforms/linalg.hpp"
#include "symforms/numeric.hpp"
#include "symforms/zpoly.hpp"

namespace symforms {

/// ρ_n(γ) in the monomial basis (z1^n, z1^{n-1}z2, …, z2^n): row i holds the
/// coefficients of (a z1 + b z2)^{n-i}(c z1 + d z2)^i, so that
/// ρ_n(γ)·ᵗ(z1, z2)^n = (γ·ᵗ(z1, z2))^n.
struct SymRepMatrix {
  int n = 0;
  RationalMatrix entries;

  friend bool operator==(const SymRepMatrix&, const SymRepMatrix&) = default;
};

SymRepMatrix sym_rep(const GroupElt& g, int n);
/// Inverse transpose; throws Error(SingularMatrix) if not invertible.
SymRepMatrix contragredient(const SymRepMatrix& m);
/// diag(C(n,0), …, C(n,n)); ᵗρ_n(γ) = B ρ_n(ᵗγ) B^{-1}.
RationalMatrix binomial_weights(int n);

/// ρ_n of an arbitrary complex 2×2 matrix, row-major (n+1)².
std::vector<Complex> sym_rep_numeric(Complex a, Complex b, Complex c, Complex d, int n);

enum class RepKind {
  /// γ ↦ ρ_n(γ)
  symmetric,
  /// γ ↦ ᵗρ_n(γ)^{-1}
  contragredient,
  /// γ ↦ ρ_n(ᵗγ^{-1}); the law satisfied by û_n in the monomial basis.
  symmetric_transpose_inverse,
};

struct RepFactor {
  RepKind kind = RepKind::symmetric;
  int n = 0;

  friend bool operator==(const RepFactor&, const RepFactor&) = default;
};

/// Tensor product of symmetric-power factors; no factors means the trivial
/// one-dimensional representation. Index order is Kronecker.
struct Representation {
  std::vector<RepFactor> factors;

  static Representation trivial() { return {}; }
  static Representation symmetric(int n) { return {{{RepKind::symmetric, n}}}; }

  std::size_t dimension() const;
  RationalMatrix matrix(const GroupElt& g) const;

  friend bool operator==(const Representation&, const Representation&) = default;
};

Representation tensor(const Representation& a, const Representation& b);

/// Vector-valued form of weight k: components are z-polynomials with q-series
/// coefficients.
struct VVForm {
  int weight = 0;
  Representation rep;
  std::vector<ZPoly> components;

  std::size_t rank() const noexcept { return components.size(); }
  bool is_zero() const;
  /// Componentwise D = d/dz.
  VVForm derive() const;
  VVForm truncated(long order) const;

  VVForm& operator+=(const VVForm& rhs);
  VVForm& operator-=(const VVForm& rhs);
  VVForm& operator*=(const QSeries& rhs);
  VVForm& operator*=(const PiPoly& rhs);

  friend VVForm operator+(VVForm a, const VVForm& b) { return a += b; }
  friend VVForm operator-(VVForm a, const VVForm& b) { return a -= b; }
  friend VVForm operator*(VVForm a, const QSeries& b) { return a *= b; }
  friend VVForm operator*(VVForm a, const PiPoly& b) { return a *= b; }
  friend VVForm operator*(const PiPoly& b, VVForm a) { return a *= b; }
};

/// Componentwise agreement below the truncation orders.
bool agree_to_order(const VVForm& a, const VVForm& b);

/// v̂_n = ᵗ(z^n, …, z, 1), weight -n, ρ_n.
VVForm v_hat(int n);
/// û_n = ᵗ(1, -z, …, (-z)^n), weight -n; transforms by ρ_n(ᵗγ^{-1}).
VVForm u_hat(int n);
/// B·û_n = ᵗ(C(n,j)(-z)^j), weight -n; transforms by the contragredient ᵗρ_n(γ)^{-1}.
VVForm u_hat_dual(int n);

using ZPolyMatrix = std::vector<std::vector<ZPoly>>;

/// L_n(z) = ρ_n((1, z; 0, 1)); entry (i, j) = C(n-i, j-i) z^{j-i}.
ZPolyMatrix frame_matrix(int n);
/// L_n(z)^{-1} = ρ_n((1, -z; 0, 1)).
ZPolyMatrix frame_matrix_inverse(int n);
ZPolyMatrix multiply(const ZPolyMatrix& a, const ZPolyMatrix& b);
std::vector<ZPoly> multiply(const ZPolyMatrix& a, const std::vector<ZPoly>& v);

/// Coordinates (f_0, …, f_n) with F = L_n(z)·ᵗ(f_0, …, f_n).
struct FrameCoords {
  std::vector<QSeries> entries;

  /// Index of the first entry that is not identically zero; nullopt if all vanish.
  std::optional<std::size_t> first_nonzero() const;
};

/// Throws Error(ResidualZDependence) when L_n^{-1}F keeps any z-dependence.
FrameCoords frame_coords(const VVForm& F);

/// Compares J(γ,z)^{-k} F(γz) with ρ(γ) F(z) numerically.
TransformReport verify_vv_transform(const VVForm& F, const GroupElt& g, Complex z, double tol);

}  // namespace symforms
