#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hopoly {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const BigRational& q);
std::string to_string(const BigInt& z);

/// Accepts "p" or "p/q" with optional leading sign. Throws ParseError.
BigRational parse_rational(std::string_view text);

/// num/den in canonical form. mpq_class(num, den) alone does not reduce.
inline BigRational ratio(long num, long den) {
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_integer(const BigRational& q) { return q.get_den() == 1; }
inline bool is_zero(const BigRational& q) { return sgn(q) == 0; }

}  // namespace hopoly
