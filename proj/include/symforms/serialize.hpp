#pragma once

#include <string>

#include "json.hpp"
#include "symforms/correspondences.hpp"
#include "symforms/jacobi.hpp"
#include "symforms/jacobi_like.hpp"

namespace symforms {

using Json = nlohmann::json;

// Rationals travel as "p/q" strings. Malformed input raises Error(ParseError).

Json to_json(const PiPoly& p);
PiPoly pipoly_from_json(const Json& j);

/// {"den", "order", "coeffs": [["exp_num", [["pi_power", "p/q"], …]], …]};
/// "order" is null for an exact expansion.
Json to_json(const QSeries& s);
QSeries qseries_from_json(const Json& j);

/// {"weight", "index", "order", "rows": [["q_exp", [["zeta_pow", coeff], …]], …]}.
Json to_json(const JacSeries& s);
JacSeries jacseries_from_json(const Json& j);

/// {"weight", "rep": [["sym"|"dual"|"sym-ti", n], …], "components": [[z^0 series, z^1 series, …], …]}.
Json to_json(const VVForm& F);
VVForm vvform_from_json(const Json& j);

/// {"weight", "terms": [[[e2, e4, e6], pipoly], …]}.
Json to_json(const QuasiElement& x);
QuasiElement quasi_from_json(const Json& j);

/// {"kind": "quasi"|"mod", "weight", "coeffs": [element, …]}.
Json to_json(const QuasiPolynomial& F);
Json to_json(const ModPolynomial& F);
QuasiPolynomial quasi_polynomial_from_json(const Json& j);
ModPolynomial mod_polynomial_from_json(const Json& j);

/// {"weight", "x_order", "exp_sign", "rep", "coeffs": [vvform, …]}.
Json to_json(const JLSeries& s);
JLSeries jlseries_from_json(const Json& j);

/// Human-readable truncated expansion, e.g. "1 + 240q + 2160q^2 + O(q^3)".
std::string format_series(const QSeries& s);
std::string format_pipoly(const PiPoly& p);

}  // namespace symforms
