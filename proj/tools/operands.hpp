#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "symforms/correspondences.hpp"
#include "symforms/jacobi.hpp"
#include "symforms/jacobi_like.hpp"
#include "symforms/serialize.hpp"

namespace cli {

using namespace symforms;

struct Config {
  long order = 30;
  int x_order = -1;
  double tol = 1e-8;
  bool tol_given = false;
  bool json = false;
  std::string cache_dir;
  bool allow_small_weight = false;
};

struct ScalarForm {
  QSeries series;
  std::optional<int> weight;
};

using Named = std::variant<ScalarForm, JacSeries, VVForm>;

/// Registry lookup (E2, E4, E6, delta, eta, phi-2,1, phi0,1, E4,1, E6,1,
/// vhat(n), uhat(n)), falling back to a quasimodular expression.
Named expand_named(const std::string& name, long order);
Json named_to_json(const Named& x);
Named named_from_json(const Json& j);
std::string describe(const Named& x);

/// "@path" reads JSON from a file.
std::optional<Json> json_operand(const std::string& text);

QuasiElement quasi_operand(const std::string& text);
ScalarForm scalar_operand(const std::string& text, long order);
/// vhat(n), uhat(n), udual(n), V(k,n,l,expr), @file or a scalar expression as rank 1.
VVForm vector_operand(const std::string& text, long order);
JacSeries jacobi_operand(const std::string& text, long order);
/// "f0; f1; …" or @file.
QuasiPolynomial quasi_poly_operand(const std::string& text);
ModPolynomial mod_poly_operand(const std::string& text);

std::string describe(const QuasiPolynomial& F);
std::string describe(const ModPolynomial& F);
std::string describe(const JLSeries& s);

}  // namespace cli
