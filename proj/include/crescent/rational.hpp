#ifndef CRESCENT_RATIONAL_HPP
#define CRESCENT_RATIONAL_HPP

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace crescent {

// Arbitrary-precision rational, kept canonical (lowest terms, positive
// denominator) by GMP.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Accepts "p/q" or "p" with optional sign. Throws std::invalid_argument on
// garbage or a zero denominator.
Rational parse_rational(const std::string &text);

std::string rational_to_string(const Rational &q);

inline double rational_to_double(const Rational &q) { return q.get_d(); }

inline int rational_sign(const Rational &q) { return sgn(q); }

} // namespace crescent

#endif
