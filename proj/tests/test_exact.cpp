#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "crescent/exact_scalar.hpp"
#include "oracle_helpers.hpp"

#include <cmath>

using namespace crescent;
using crescent_test::DyadicGen;

TEST_CASE("sign of a + b sqrt3") {
  CHECK(ExactScalar(0).sign() == 0);
  // 2 - sqrt(3) > 0 since 4 > 3
  CHECK(ExactScalar(Rational(2), Rational(-1)).sign() == 1);
  CHECK(ExactScalar(Rational(-2), Rational(1)).sign() == -1);
  CHECK(ExactScalar::sqrt3().sign() == 1);
  // 7/4 vs sqrt(3): 49/16 > 3
  CHECK(ExactScalar(Rational(7, 4), Rational(-1)).sign() == 1);
  CHECK(ExactScalar(Rational(-7, 4), Rational(1)).sign() == -1);
  // 12/7 vs sqrt(3): 144/49 < 3
  CHECK(ExactScalar(Rational(12, 7), Rational(-1)).sign() == -1);
}

TEST_CASE("equality is componentwise") {
  ExactScalar a(Rational(1, 2), Rational(1, 3));
  ExactScalar b(Rational(2, 4), Rational(2, 6));
  CHECK(a == b);
  CHECK(a != ExactScalar(Rational(1, 2), Rational(0)));
}

TEST_CASE("field laws on randomized elements") {
  DyadicGen gen(20240817);
  for (int trial = 0; trial < 300; ++trial) {
    ExactScalar a = gen.scalar(6, 8, true);
    ExactScalar b = gen.scalar(6, 8, true);
    ExactScalar c = gen.scalar(6, 8, true);
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + (-a) == ExactScalar(0));
    CHECK(a * ExactScalar(1) == a);
    if (!b.is_zero()) {
      CHECK(b * b.inverse() == ExactScalar(1));
      CHECK((a / b) * b == a);
    }
  }
}

TEST_CASE("order agrees with double approximation") {
  DyadicGen gen(7);
  for (int trial = 0; trial < 500; ++trial) {
    ExactScalar a = gen.scalar(10, 16, true);
    ExactScalar b = gen.scalar(10, 16, true);
    const double da = a.to_double(), db = b.to_double();
    if (std::fabs(da - db) < 1e-9)
      continue; // too close to trust the float comparison
    CHECK((a < b) == (da < db));
  }
}

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3/4") == Rational(3, 4));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK(parse_rational("6/8") == Rational(3, 4)); // canonicalized
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("a"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
}

TEST_CASE("canonical storage: lowest terms, positive denominator") {
  Rational q(6, -8);
  q.canonicalize();
  CHECK(q.get_num() == -3);
  CHECK(q.get_den() == 4);
}
