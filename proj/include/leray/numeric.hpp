#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "leray/poly.hpp"
#include "leray/univariate.hpp"

namespace leray {

// Real roots of a real polynomial (ascending coefficients) from the companion
// eigenvalues, each polished by Newton steps. Roots whose imaginary part
// exceeds imag_tol * (1 + |root|) are dropped. Sorted ascending.
std::vector<double> real_roots(const std::vector<double>& coeffs, double imag_tol = 1e-7);

std::vector<double> to_double(const UPoly& p);

// p restricted to the line c + lambda d, exactly, as a polynomial in lambda.
UPoly restrict_to_line(const MultiPoly& p, std::span<const Rational> c, std::span<const Rational> d);

// |p(x)| / sum |c_a| |x^a|; 0 when the denominator vanishes.
double relative_residual(const MultiPoly& p, std::span<const double> x);

// Random rational with numerator in [-scale * den, scale * den].
Rational random_rational(std::mt19937_64& rng, int scale, int den = 64);

}  // namespace leray
