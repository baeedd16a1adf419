#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace valmon {

using Integer = mpz_class;
using Rational = mpq_class;

/// "p/q" with q omitted when 1.
std::string to_string(const Rational& q);
std::string to_string(const Integer& n);

/// Accepts "p", "p/q", optional leading sign; result is canonicalized.
Rational parse_rational(std::string_view text);

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

Integer floor(const Rational& q);
Integer ceil(const Rational& q);

Integer lcm(const Integer& a, const Integer& b);
Integer gcd(const Integer& a, const Integer& b);

/// Least nonnegative residue of a modulo m (m > 0).
Integer mod(const Integer& a, const Integer& m);

/// Inverse of a modulo m; throws DomainError when gcd(a, m) != 1.
Integer inverse_mod(const Integer& a, const Integer& m);

}  // namespace valmon
