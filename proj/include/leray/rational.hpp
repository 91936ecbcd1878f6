#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace leray {

using Integer = mpz_class;
using Rational = mpq_class;

// Canonical "num/den" text form; the denominator is always written.
std::string to_string(const Rational& q);
// Short form used in human-readable expressions: "3", "-3/2".
std::string to_short_string(const Rational& q);
// Accepts "n", "n/d", with optional sign. Throws leray::Error on malformed input.
Rational parse_rational(std::string_view text);

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace leray
