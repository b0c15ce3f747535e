#pragma once

#include <string_view>

#include "lacunary/sparse_poly.hpp"

namespace lacunary {

/// Parses sums of terms [coef][*][x[^exp]] joined by + and -, where coef is
/// an integer or integer/integer and exp an arbitrary-precision decimal.
/// Whitespace between tokens is ignored; X is accepted for x.
/// Throws ParseError with the offending position.
SparsePoly parse_poly(std::string_view text);

/// Rational literal: integer, a/b, or a decimal such as 0.01.
/// Throws ParseError.
Rational parse_rational(std::string_view text);

}  // namespace lacunary
