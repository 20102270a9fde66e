#pragma once

#include <string_view>

#include "symforms/quasi.hpp"

namespace symforms {

/// Parses a homogeneous quasimodular expression such as "1/2*D(D(delta))" or
/// "E4^3 - 1728*delta". Names: E2, E4, E6, delta, Pi; functions D and theta.
/// Throws Error(ParseError), Error(UnknownName) or Error(WeightMismatch).
QuasiElement parse_quasi(std::string_view text);

}  // namespace symforms
