#pragma once

#include <string_view>

#include "leray/poly.hpp"

namespace leray {

// Grammar: sums and products of rational literals, identifiers from `ring`,
// parentheses and ^ with a non-negative integer exponent. Division is only
// allowed by a nonzero constant. Errors carry "line L, column C".
MultiPoly parse_poly(std::string_view text, const Ring& ring);

}  // namespace leray
