#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "hypergamma/errors.hpp"

namespace hypergamma {

// Exact rational numbers. mpq_class keeps exactly the invariants we need:
// gcd(|num|, den) = 1, den > 0, and zero is 0/1 after canonicalization.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational rational_from_string(const std::string& text);
std::string to_string(const Rational& q);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline bool is_nonpositive_integer(const Rational& q) { return is_integer(q) && q <= 0; }

inline Integer floor_int(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

// q^e for e of either sign; throws ZeroDenominator on 0^negative.
Rational rational_pow(const Rational& q, long e);

// max(|numerator|, denominator), the usual naive height.
Integer height(const Rational& q);

// Positive generator of the fractional ideal (x, y): gcd of numerators over
// lcm of denominators; gcd(0, y) = |y|.
Rational rational_gcd(const Rational& x, const Rational& y);

}  // namespace hypergamma
