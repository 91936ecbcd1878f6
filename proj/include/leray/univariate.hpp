#pragma once

#include <vector>

#include "leray/rational.hpp"

namespace leray {

// Dense univariate polynomial over Q, ascending coefficients, no trailing zeros.
using UPoly = std::vector<Rational>;

void upoly_trim(UPoly& p);
UPoly upoly_derivative(const UPoly& p);
UPoly upoly_rem(const UPoly& a, const UPoly& b);
UPoly upoly_gcd(UPoly a, UPoly b);  // monic
Rational upoly_eval(const UPoly& p, const Rational& x);

// Number of distinct real roots, by a Sturm sequence.
int sturm_distinct_real_roots(const UPoly& p);

}  // namespace leray
