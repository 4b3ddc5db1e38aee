#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace treelap {

// Exact arithmetic backbone. GMP keeps mpq_class values canonical
// (lowest terms, positive denominator) through all arithmetic.
using ZZ = mpz_class;
using QQ = mpq_class;

inline int sign(const QQ& x) { return sgn(x); }
inline int sign(const ZZ& x) { return sgn(x); }

/// Parses "p", "p/q", "a.b", or "2^e" (e possibly negative) into an exact
/// rational. Throws std::invalid_argument on malformed input or q = 0.
QQ parse_rational(std::string_view text);

/// "p/q", or just "p" when the denominator is 1.
std::string rational_to_string(const QQ& x);

/// Fixed-point decimal with `digits` fractional digits, rounding half away
/// from zero. Deterministic; used wherever rationals enter text records.
std::string rational_to_decimal(const QQ& x, int digits);

/// 2^e as an exact rational; e may be negative.
QQ pow2(int e);

/// Ceiling of a/b for small nonnegative integers, b > 0.
inline long ceil_ratio(long a, long b) { return (a + b - 1) / b; }

}  // namespace treelap
