#ifndef CRESCENT_EXACT_SCALAR_HPP
#define CRESCENT_EXACT_SCALAR_HPP

#include <iosfwd>
#include <string>

#include "crescent/rational.hpp"

namespace crescent {

// Element of the field Q[sqrt(3)]: value = rat + s3 * sqrt(3).
//
// This field holds every coordinate the toolkit needs: square-lattice
// points are rational (s3 = 0) and triangular-lattice points have
// y-coordinates that are rational multiples of sqrt(3). Since sqrt(3) is
// irrational, the representation is unique, so equality is componentwise
// and ordering is decidable by comparing rat^2 against 3*s3^2 when the
// component signs disagree.
class ExactScalar {
public:
  ExactScalar() : rat_(0), s3_(0) {}
  ExactScalar(long v) : rat_(v, 1), s3_(0) {} // NOLINT: implicit on purpose
  explicit ExactScalar(Rational rat) : rat_(std::move(rat)), s3_(0) {}
  ExactScalar(Rational rat, Rational s3)
      : rat_(std::move(rat)), s3_(std::move(s3)) {}

  static ExactScalar sqrt3() { return ExactScalar(Rational(0), Rational(1)); }

  const Rational &rat_part() const { return rat_; }
  const Rational &sqrt3_part() const { return s3_; }

  bool is_zero() const { return sgn(rat_) == 0 && sgn(s3_) == 0; }
  bool is_rational() const { return sgn(s3_) == 0; }

  // Sign of the real value; exact.
  int sign() const;

  ExactScalar operator-() const { return ExactScalar(-rat_, -s3_); }
  ExactScalar &operator+=(const ExactScalar &o);
  ExactScalar &operator-=(const ExactScalar &o);
  ExactScalar &operator*=(const ExactScalar &o);
  ExactScalar &operator/=(const ExactScalar &o); // throws on zero divisor

  ExactScalar abs() const { return sign() >= 0 ? *this : -*this; }
  ExactScalar inverse() const;

  double to_double() const;
  std::string to_string() const; // "a", "b*s3", or "a+b*s3" style

  friend ExactScalar operator+(ExactScalar a, const ExactScalar &b) {
    a += b;
    return a;
  }
  friend ExactScalar operator-(ExactScalar a, const ExactScalar &b) {
    a -= b;
    return a;
  }
  friend ExactScalar operator*(ExactScalar a, const ExactScalar &b) {
    a *= b;
    return a;
  }
  friend ExactScalar operator/(ExactScalar a, const ExactScalar &b) {
    a /= b;
    return a;
  }

  friend bool operator==(const ExactScalar &a, const ExactScalar &b) {
    return a.rat_ == b.rat_ && a.s3_ == b.s3_;
  }
  friend bool operator!=(const ExactScalar &a, const ExactScalar &b) {
    return !(a == b);
  }
  friend bool operator<(const ExactScalar &a, const ExactScalar &b) {
    return (a - b).sign() < 0;
  }
  friend bool operator>(const ExactScalar &b, const ExactScalar &a) {
    return a < b;
  }
  friend bool operator<=(const ExactScalar &a, const ExactScalar &b) {
    return !(b < a);
  }
  friend bool operator>=(const ExactScalar &a, const ExactScalar &b) {
    return !(a < b);
  }

private:
  Rational rat_;
  Rational s3_;
};

inline int scalar_sign(const ExactScalar &s) { return s.sign(); }

std::ostream &operator<<(std::ostream &os, const ExactScalar &s);

} // namespace crescent

#endif
