#ifndef QORTHO_SCALAR_HPP
#define QORTHO_SCALAR_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace qortho {

/// Exact rational number. gmpxx keeps every value canonical: lowest terms,
/// positive denominator.
using Scalar = mpq_class;
using Integer = mpz_class;

/// Parses "a", "-a" or "a/b" (decimal digits). Throws ParameterError on
/// malformed input or a zero denominator.
Scalar parse_scalar(std::string_view text);

/// "num/den", or just "num" when the denominator is 1. Round-trips through
/// parse_scalar.
std::string to_string(const Scalar& x);

/// Decimal rendering of x rounded half-away-from-zero to `digits` places.
std::string to_decimal(const Scalar& x, int digits);

/// x^e for any integer e; x must be nonzero when e < 0.
Scalar pow(const Scalar& x, long e);

Scalar abs(const Scalar& x);

int sign(const Scalar& x);

} // namespace qortho

#endif // QORTHO_SCALAR_HPP
