#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "etalab/polynomial.hpp"

namespace etalab {

/// Parses polynomial text such as "x*u + y*v", "3/2*x^2" or "(x+y)^2".
/// Positions in errors are reported relative to (line, column) of the first
/// character of text.
RationalPolynomial parse_polynomial(std::string_view text, const std::vector<std::string>& vars,
                                    int line = 1, int column = 1);

}  // namespace etalab
