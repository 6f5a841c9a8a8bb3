#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gapcert {

// Exact rational backed by GMP. Values are kept canonical (reduced, positive
// denominator) by every helper in this header.
using Rational = mpq_class;
using Point = std::vector<Rational>;

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses "p/q" or "p" (optionally signed). Rejects q == 0 and trailing junk.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" text; integers render as "p/1" so the form is uniform.
std::string to_string(const Rational& q);

/// Fixed-point decimal rendering truncated toward zero after `digits` places.
std::string to_decimal(const Rational& q, int digits = 12);

/// Scientific rendering with `sig` significant digits, for tiny values.
std::string to_scientific(const Rational& q, int sig = 10);

double to_double(const Rational& q);

/// 10^k as an exact rational, k may be negative.
Rational pow10(int k);

Rational pow_int(const Rational& base, int exponent);

/// Largest multiple of 2^-bits that is <= q.
Rational floor_dyadic(const Rational& q, unsigned bits);
/// Smallest multiple of 2^-bits that is >= q.
Rational ceil_dyadic(const Rational& q, unsigned bits);

/// Bit length of the denominator.
std::size_t denominator_bits(const Rational& q);

/// Nearest rational with the given denominator (ties round up).
Rational snap(double x, std::int64_t denominator);

/// Exact rational value of a finite double.
Rational from_double(double x);

}  // namespace gapcert
