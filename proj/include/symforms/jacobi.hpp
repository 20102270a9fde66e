#pragma once

#include <map>
#include <vector>

#include "symforms/numeric.hpp"
#include "symforms/quasi.hpp"
#include "symforms/symtensor.hpp"

namespace symforms {

/// Σ_{r} c_r(q) ζ^r with q-series coefficients; every coefficient is exact
/// below the common q-order. Only nonzero coefficients are stored.
class JacSeries {
 public:
  using Row = std::map<long, PiPoly>;

  JacSeries() = default;
  JacSeries(int weight, int index, long order) : weight_(weight), index_(index), order_(order) {}
  /// f(q) as an index-0 series.
  static JacSeries from_qseries(const QSeries& f, int weight, long order);

  int weight() const noexcept { return weight_; }
  int index() const noexcept { return index_; }
  long order() const noexcept { return order_; }
  void set_weight(int w) noexcept { weight_ = w; }
  void set_index(int m) noexcept { index_ = m; }

  const std::map<long, QSeries>& by_zeta() const noexcept { return by_zeta_; }
  /// Coefficient of ζ^r (zero at the series order when absent).
  QSeries coeff(long r) const;
  void set_coeff(long r, const QSeries& c);
  bool is_zero() const noexcept { return by_zeta_.empty(); }

  /// q-rows keyed by exponent: q^e ↦ Σ_r c(e, r) ζ^r.
  std::map<Rational, Row> rows() const;
  Row row(const Rational& q_exponent) const;

  /// Substitutes ζ = 1.
  QSeries at_zeta_one() const;
  JacSeries truncated(long order) const;
  /// Multiplies by q^shift.
  JacSeries shifted(const Rational& shift) const;
  /// Multiplies by f(q) and adds `weight` to the weight.
  JacSeries times(const QSeries& f, int weight) const;
  /// True when c(n, r) = c(n, -r) everywhere.
  bool is_zeta_symmetric() const;
  /// True when c(n, r) ≠ 0 only for r² <= 4·n·index + index².
  bool satisfies_weak_support() const;

  JacSeries& operator+=(const JacSeries& rhs);
  JacSeries& operator-=(const JacSeries& rhs);
  JacSeries& operator*=(const PiPoly& rhs);

  friend JacSeries operator+(JacSeries a, const JacSeries& b) { return a += b; }
  friend JacSeries operator-(JacSeries a, const JacSeries& b) { return a -= b; }
  /// Weights and indices add.
  friend JacSeries operator*(const JacSeries& a, const JacSeries& b);
  friend JacSeries operator*(JacSeries a, const PiPoly& b) { return a *= b; }
  friend bool operator==(const JacSeries&, const JacSeries&) = default;

 private:
  void clean();

  int weight_ = 0;
  int index_ = 0;
  long order_ = QSeries::kUnbounded;
  std::map<long, QSeries> by_zeta_;
};

/// Equal coefficients below the smaller order.
bool agree_to_order(const JacSeries& a, const JacSeries& b);

/// Σ c(n,r) qⁿ ζ^r at q = e^{2πiz}, ζ = e^{2πiw}.
NumericValue eval_numeric(const JacSeries& phi, Complex z, Complex w);

/// η = q^{1/24}∏(1 - qⁿ), exact below `order`.
QSeries eta(long order);

/// Squares θ_i(q, ζ)² (integral ζ-powers) with
///   θ₁ = -i Σ (-1)ⁿ q^{(n+½)²/2} ζ^{n+½},  θ₂ = Σ q^{(n+½)²/2} ζ^{n+½},
///   θ₃ = Σ q^{n²/2} ζⁿ,                   θ₄ = Σ (-1)ⁿ q^{n²/2} ζⁿ.
/// Tagged weight 1, index 1.
JacSeries theta_squared(int kind, long order);

/// φ̃₋₂,₁ (which = -2) from the product formula, or φ̃₀,₁ (which = 0) from
/// 4Σ_{i=2,3,4} θ_i(q,ζ)²/θ_i(q,1)². Memoized; safe for concurrent use.
const JacSeries& phi_tilde(int which, long order);

/// E₄,₁ = (E₄φ̃₀,₁ - E₆φ̃₋₂,₁)/12 and E₆,₁ = (E₆φ̃₀,₁ - E₄²φ̃₋₂,₁)/12.
JacSeries jacobi_eisenstein(int k, long order);

/// Σ_ℓ f_ℓ φ̃₋₂,₁^ℓ φ̃₀,₁^{n-ℓ}, weight k - n, index n. Throws
/// Error(WeightMismatch) unless f_ℓ ∈ M_{k-n+2ℓ}.
JacSeries P_map(const std::vector<QuasiElement>& f, int n, int k, long order);

/// P_map ∘ decompose.
JacSeries Psi_map(const VVForm& F, int n, int k, long order);

struct JacobiReport {
  TransformReport modular;
  TransformReport elliptic;
  bool pass = false;
};

/// Residuals of φ(γz, w/J) = J^k e^{2πi·m·K·w²} φ(z, w) and
/// φ(z, w + μz + ν) = (-1)^{2m(μ+ν)} e^{-2πi·m·(μ²z + 2μw)} φ(z, w), m = index.
JacobiReport verify_jacobi_transform(const JacSeries& phi, const GroupElt& g, Complex z, Complex w, int mu, int nu,
                                     double tol);

}  // namespace symforms
