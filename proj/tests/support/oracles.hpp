#pragma once

// Independent brute-force references shared by the unit and acceptance tests.

#include <algorithm>
#include <complex>
#include <random>
#include <vector>

#include "symforms/group.hpp"
#include "symforms/rational.hpp"

namespace oracle {

using symforms::Complex;
using symforms::GroupElt;
using symforms::Integer;

inline long sigma(long n, int power) {
  long s = 0;
  for (long d = 1; d <= n; ++d)
    if (n % d == 0) {
      long t = 1;
      for (int e = 0; e < power; ++e) t *= d;
      s += t;
    }
  return s;
}

// q ∏(1 - q^n)^24 by repeated multiplication of integer polynomials.
inline std::vector<Integer> naive_delta(long order) {
  std::vector<Integer> p(static_cast<std::size_t>(order), 0);
  if (order > 1) p[1] = 1;
  for (long n = 1; n < order; ++n)
    for (int rep = 0; rep < 24; ++rep)
      for (long e = order - 1; e >= n; --e) p[static_cast<std::size_t>(e)] -= p[static_cast<std::size_t>(e - n)];
  return p;
}

inline GroupElt random_elt(std::mt19937& rng, int steps = 5) {
  std::uniform_int_distribution<int> small(-4, 4);
  GroupElt g;
  for (int k = 0; k < steps; ++k) g = g * GroupElt(1, small(rng), 0, 1) * GroupElt::S();
  return g;
}

// Bivariate polynomial in z1, z2 of fixed total degree, indexed by the z2-exponent.
using Binary = std::vector<Integer>;

inline Binary binary_mul(const Binary& x, const Binary& y) {
  Binary out(x.size() + y.size() - 1, 0);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) out[i + j] += x[i] * y[j];
  return out;
}

// Row i is the expansion of (a z1 + b z2)^{n-i}(c z1 + d z2)^i.
inline std::vector<std::vector<Integer>> sym_rep_by_expansion(const GroupElt& g, int n) {
  std::vector<std::vector<Integer>> rows;
  for (int i = 0; i <= n; ++i) {
    Binary p{1};
    for (int k = 0; k < n - i; ++k) p = binary_mul(p, {g.a(), g.b()});
    for (int k = 0; k < i; ++k) p = binary_mul(p, {g.c(), g.d()});
    rows.push_back(p);
  }
  return rows;
}

inline double rel_err(Complex a, Complex b) {
  return std::abs(a - b) / std::max(1.0, std::max(std::abs(a), std::abs(b)));
}

}  // namespace oracle
