#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace cdga {

/// Exact rational number. GMP keeps it canonical (lowest terms, positive
/// denominator) after every arithmetic operation.
using Scalar = mpq_class;

/// Parses "p", "-p", "p/q". Decimal and exponent notation are rejected so no
/// floating point value can leak into an algebra. Throws ParseError.
Scalar parse_scalar(std::string_view text);

/// "p" when the denominator is 1, otherwise "p/q".
std::string format_scalar(const Scalar& value);

inline int sign_of(const Scalar& value) { return sgn(value); }

/// (-1)^e for any integer exponent.
inline int koszul(long long exponent) { return (exponent % 2 == 0) ? 1 : -1; }

}  // namespace cdga
