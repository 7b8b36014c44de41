#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace confhodge {

using Integer = mpz_class;
using Rational = mpq_class;

// Parses "num/den" or "num". Throws ParseError on malformed input or a zero
// denominator.
Rational parse_rational(std::string_view text);

// Canonical "num/den" form; the denominator is always written, even when 1.
std::string format_rational(const Rational& value);

}  // namespace confhodge
