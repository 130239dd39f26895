#include "crescent/exact_scalar.hpp"

#include <ostream>
#include <stdexcept>

namespace crescent {

Rational parse_rational(const std::string &text) {
  if (text.empty())
    throw std::invalid_argument("empty rational literal");
  // mpq_class accepts "p/q"; validate characters first because GMP's
  // parser silently stops at the first bad one.
  for (char c : text) {
    if (!(c == '-' || c == '+' || c == '/' || (c >= '0' && c <= '9')))
      throw std::invalid_argument("bad rational literal: " + text);
  }
  Rational q;
  if (q.set_str(text, 10) != 0)
    throw std::invalid_argument("bad rational literal: " + text);
  if (sgn(q.get_den()) == 0)
    throw std::invalid_argument("zero denominator: " + text);
  q.canonicalize();
  return q;
}

std::string rational_to_string(const Rational &q) { return q.get_str(); }

int ExactScalar::sign() const {
  const int sr = sgn(rat_);
  const int ss = sgn(s3_);
  if (ss == 0)
    return sr;
  if (sr == 0)
    return ss;
  if (sr == ss)
    return sr;
  // Mixed signs: compare rat^2 with 3*s3^2. Equality cannot happen for
  // nonzero parts (it would make sqrt(3) rational).
  Rational lhs = rat_ * rat_;
  Rational rhs = 3 * s3_ * s3_;
  const int c = cmp(lhs, rhs);
  if (c == 0)
    return 0; // unreachable for valid inputs
  // |rat| dominates iff rat^2 > 3*s3^2.
  return c > 0 ? sr : ss;
}

ExactScalar &ExactScalar::operator+=(const ExactScalar &o) {
  rat_ += o.rat_;
  s3_ += o.s3_;
  return *this;
}

ExactScalar &ExactScalar::operator-=(const ExactScalar &o) {
  rat_ -= o.rat_;
  s3_ -= o.s3_;
  return *this;
}

ExactScalar &ExactScalar::operator*=(const ExactScalar &o) {
  // (a + b s)(c + d s) = ac + 3bd + (ad + bc) s, s^2 = 3
  Rational a = rat_, b = s3_;
  rat_ = a * o.rat_ + 3 * b * o.s3_;
  s3_ = a * o.s3_ + b * o.rat_;
  return *this;
}

ExactScalar ExactScalar::inverse() const {
  // 1/(a + b s) = (a - b s) / (a^2 - 3 b^2)
  Rational denom = rat_ * rat_ - 3 * s3_ * s3_;
  if (sgn(denom) == 0)
    throw std::domain_error("division by zero in Q[sqrt3]");
  return ExactScalar(rat_ / denom, -s3_ / denom);
}

ExactScalar &ExactScalar::operator/=(const ExactScalar &o) {
  *this *= o.inverse();
  return *this;
}

double ExactScalar::to_double() const {
  static const double kSqrt3 = 1.7320508075688772935;
  return rat_.get_d() + s3_.get_d() * kSqrt3;
}

std::string ExactScalar::to_string() const {
  if (sgn(s3_) == 0)
    return rat_.get_str();
  std::string s;
  if (sgn(rat_) != 0) {
    s = rat_.get_str();
    if (sgn(s3_) > 0)
      s += "+";
  }
  s += s3_.get_str();
  s += "*s3";
  return s;
}

std::ostream &operator<<(std::ostream &os, const ExactScalar &s) {
  return os << s.to_string();
}

} // namespace crescent
