#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace nsmat {

using Int = std::int64_t;
using Integer = mpz_class;
using Rational = mpq_class;

/// base^exp as an exact rational; exp may be negative, base must be nonzero.
Rational rational_pow(const Integer& base, Int exp);

/// Canonical rational string: "p" when the denominator is 1, otherwise
/// "p/q" with q > 1 and the sign on the numerator only.
std::string rational_str(const Rational& value);

/// Parses "p" or "p/q" (optional leading '-'); rejects anything else,
/// including a zero denominator. Result is canonicalized.
Rational parse_rational(const std::string& text);

}  // namespace nsmat
