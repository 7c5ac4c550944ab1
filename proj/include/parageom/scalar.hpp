#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace parageom {

/// Exact rational number, always kept in lowest terms with a positive
/// denominator (GMP canonicalizes after every operation).
using Scalar = mpq_class;
using Integer = mpz_class;

/// Parses "p/q", "p", or a decimal-free integer literal. Throws
/// std::invalid_argument on malformed input or a zero denominator.
Scalar parse_scalar(std::string_view text);

/// Serializes as "p/q" (integers become "p/1").
std::string to_string(const Scalar& x);

/// Human form: "p/q", or "p" for integers.
std::string to_pretty(const Scalar& x);

/// Canonicalized p/q (the two-argument mpq_class constructor does not reduce).
inline Scalar frac(long p, long q) {
  Scalar r(p, q);
  r.canonicalize();
  return r;
}

inline bool is_zero(const Scalar& x) { return sgn(x) == 0; }
inline bool is_integer(const Scalar& x) { return x.get_den() == 1; }

/// Exact real cube root when x is the cube of a rational.
bool exact_cube_root(const Scalar& x, Scalar& root);

/// Raises to a non-negative integer power.
Scalar pow(const Scalar& base, unsigned exponent);

}  // namespace parageom
