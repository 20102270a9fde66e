#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "symforms/qseries.hpp"
#include "symforms/quasi.hpp"

namespace symforms {

/// E_k for k in {2, 4, 6}: 1 - 24Σσ₁(n)qⁿ, 1 + 240Σσ₃(n)qⁿ, 1 - 504Σσ₅(n)qⁿ.
/// Throws Error(UnsupportedWeight) for other k.
QSeries eisenstein(int k, long order);
/// Δ = q∏(1 - qⁿ)²⁴.
QSeries delta(long order);

/// Cached expansion of E_k^power (k in {2,4,6}); safe for concurrent use.
const QSeries& generator_power(int k, unsigned power, long order);

/// Monomials E4^a E6^b of weight k, ordered by descending a.
struct MkBasis {
  int weight = 0;
  std::vector<std::pair<int, int>> monomials;

  std::size_t dimension() const noexcept { return monomials.size(); }
  QuasiElement element(std::size_t i) const;
};

MkBasis basis_Mk(int k);

/// Cached expansion of E2^e2 E4^e4 E6^e6.
const QSeries& monomial_expansion(const QuasiMonomial& m, long order);

/// Monomials E2^a E4^b E6^c of weight k with a <= max_depth, ordered by (a, descending b).
std::vector<QuasiMonomial> basis_QMk(int k, int max_depth);

/// Writes f as a Q[Π^±1]-combination of the E4/E6 basis of weight k using the
/// coefficients below its order. nullopt when no combination matches every
/// known coefficient. Throws Error(InsufficientOrder) when the truncated basis
/// expansions are linearly dependent.
std::optional<QuasiElement> recognize_modular(const QSeries& f, int k);
/// Same for quasimodular forms of depth <= max_depth.
std::optional<QuasiElement> recognize_quasimodular(const QSeries& f, int k, int max_depth);

}  // namespace symforms
