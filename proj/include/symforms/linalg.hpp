#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "symforms/rational.hpp"

namespace symforms {

// Dense row-major matrix over Q.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  RationalMatrix transpose() const;
  /// Throws Error(SingularMatrix) when not invertible.
  RationalMatrix inverse() const;
  Rational determinant() const;
  std::size_t rank() const;

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

RationalMatrix kronecker(const RationalMatrix& a, const RationalMatrix& b);

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> row_reduce(RationalMatrix& m);

/// Solves m x = rhs exactly. Returns nullopt when inconsistent; when the
/// system is underdetermined, free variables are set to zero.
std::optional<std::vector<Rational>> solve(const RationalMatrix& m, const std::vector<Rational>& rhs);

}  // namespace symforms
