#pragma once

#include "leray/poly.hpp"

namespace leray {

// Multivariate gcd over Q by recursive primitive PRS, normalised with
// primitive_normalize. gcd(0, 0) = 0.
MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b);

// Product of the distinct irreducible factors, p / gcd(p, dp/dx_1, ..., dp/dx_n),
// normalised. Constants map to 1, zero to zero.
MultiPoly squarefree_part(const MultiPoly& p);

}  // namespace leray
