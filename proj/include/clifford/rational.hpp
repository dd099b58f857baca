#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace clifford {

// Arbitrary-precision rational. GMP keeps mpq_class canonical (lowest terms,
// positive denominator) after every arithmetic operation.
using Rational = mpq_class;

Rational make_rational(long numerator, long denominator = 1);

// Accepts "n" or "n/d" with an optional leading sign. Throws InvalidArgument.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& value);

}  // namespace clifford
