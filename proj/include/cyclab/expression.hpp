#pragma once

#include <string_view>

#include "cyclab/series.hpp"

namespace cyclab {

// Parses expressions such as "1 - z1*z2", "(1 - z1)*(1 - z2)" or
// "2 - 0.5*z1^2". Grammar: numbers (integer or decimal, optional exponent),
// the variables z1 and z2, binary + - *, unary -, integer powers ^, and
// parentheses. The result is trimmed to its exact bidegree. Throws Error of
// kind Parse with the offending column on malformed input.
BivariateSeries parse_polynomial(std::string_view text);

}  // namespace cyclab
