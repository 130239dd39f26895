#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "crescent/geometry.hpp"
#include "crescent/json_io.hpp"
#include "oracle_helpers.hpp"

using namespace crescent;
using crescent_test::DyadicGen;

namespace {

NormSpec hexagon_norm() {
  const ExactScalar h(Rational(0), Rational(1, 2)); // sqrt(3)/2
  const ExactScalar half(Rational(1, 2));
  return NormSpec::polygonal({Point(ExactScalar(1), ExactScalar(0)),
                              Point(half, h),
                              Point(-half, h),
                              Point(ExactScalar(-1), ExactScalar(0)),
                              Point(-half, -h),
                              Point(half, -h)});
}

} // namespace

TEST_CASE("distance definitions") {
  const Point o(0, 0), p(1, 3);
  CHECK(distance(NormSpec::linf(), o, p).value == ExactScalar(3));
  CHECK(distance(NormSpec::l1(), o, p).value == ExactScalar(4));
  // L2 carries exact squared values
  const Point a(ExactScalar(1), ExactScalar::sqrt3());
  const Point b(ExactScalar(2), ExactScalar(2) * ExactScalar::sqrt3());
  const DistanceValue d = distance(NormSpec::l2(), a, b);
  CHECK(d.squared);
  CHECK(d.value == ExactScalar(4)); // 1 + 3
}

TEST_CASE("duality transform") {
  CHECK(duality_transform(Point(0, 0)) == Point(0, 0));
  CHECK(duality_transform(Point(1, 0)) == Point(1, 1));
  // |T(v)|_inf = |v|_1 on (2, 3)
  const Point v(2, 3);
  CHECK(gauge(NormSpec::linf(), duality_transform(v)) ==
        gauge(NormSpec::l1(), v));
}

TEST_CASE("duality is an isometry both ways") {
  DyadicGen gen(99);
  for (int trial = 0; trial < 200; ++trial) {
    const Point u = gen.point(), v = gen.point();
    const Point tu = duality_transform(u), tv = duality_transform(v);
    CHECK(gauge(NormSpec::linf(), tu - tv) == gauge(NormSpec::l1(), u - v));
    CHECK(gauge(NormSpec::l1(), tu - tv) ==
          ExactScalar(2) * gauge(NormSpec::linf(), u - v));
  }
}

TEST_CASE("unit circle segments") {
  const auto sq = unit_circle_segments(NormSpec::linf());
  REQUIRE(sq.size() == 4);
  CHECK(sq[0].a == Point(1, -1));
  CHECK(sq[0].b == Point(1, 1));
  const auto diamond = unit_circle_segments(NormSpec::l1());
  REQUIRE(diamond.size() == 4);
  CHECK(diamond[0].a == Point(1, 0));
  CHECK(diamond[0].b == Point(0, 1));
  CHECK(unit_circle_segments(NormSpec::l2()).empty());
  CHECK(unit_circle_segments(hexagon_norm()).size() == 6);
  CHECK_THROWS_AS(unit_circle_segments(NormSpec::lp(3.0)),
                  UnsupportedExactNorm);
}

TEST_CASE("exact predicates refuse Lp") {
  CHECK_THROWS_AS(gauge(NormSpec::lp(2.5), Point(1, 1)),
                  UnsupportedExactNorm);
}

TEST_CASE("polygonal gauge matches Linf on the square polygon") {
  NormSpec square = NormSpec::polygonal(
      {Point(1, 1), Point(-1, 1), Point(-1, -1), Point(1, -1)});
  DyadicGen gen(5);
  for (int trial = 0; trial < 300; ++trial) {
    const Point v = gen.point(6, 8, true);
    CHECK(gauge(square, v) == gauge(NormSpec::linf(), v));
  }
}

TEST_CASE("polygonal gauge on hexagon vertices and edges") {
  NormSpec hex = hexagon_norm();
  for (const Point &v : hex.vertices())
    CHECK(gauge(hex, v) == ExactScalar(1));
  // midpoint of an edge is on the circle too
  const Point mid = ExactScalar(Rational(1, 2)) *
                    (hex.vertices()[0] + hex.vertices()[1]);
  CHECK(gauge(hex, mid) == ExactScalar(1));
  // direction (0, 1) exits through the top edge at (0, sqrt(3)/2)
  CHECK(gauge(hex, Point(0, 1)) ==
        ExactScalar(Rational(0), Rational(2, 3))); // 2/sqrt(3) = 2 sqrt3 / 3
}

TEST_CASE("norm axioms hold on random points") {
  DyadicGen gen(2024);
  const NormSpec norms[] = {NormSpec::l1(), NormSpec::l2(), NormSpec::linf(),
                            hexagon_norm()};
  for (const NormSpec &norm : norms) {
    const bool squared = norm.kind() == NormKind::L2;
    for (int trial = 0; trial < 120; ++trial) {
      const Point x = gen.point(5, 4, true), y = gen.point(5, 4, true);
      const ExactScalar gx = gauge(norm, x);
      CHECK(gx.sign() >= 0);
      CHECK((gx.is_zero() == (x == Point(0, 0))));
      // absolute homogeneity for a rational lambda >= 0
      const ExactScalar lam{gen.rational(0, 12, 4)};
      const ExactScalar expect = squared ? lam * lam * gx : lam * gx;
      CHECK(gauge(norm, lam * x) == expect);
      // triangle inequality (on plain distances; compare squares for L2)
      const ExactScalar gy = gauge(norm, y);
      const ExactScalar gxy = gauge(norm, x + y);
      if (squared) {
        // sqrt(gxy) <= sqrt(gx) + sqrt(gy)
        // <=> gxy <= gx + gy + 2 sqrt(gx gy)
        // <=> (gxy - gx - gy)^2 <= 4 gx gy when the left side is positive
        const ExactScalar excess = gxy - gx - gy;
        if (excess.sign() > 0)
          CHECK(excess * excess <= ExactScalar(4) * gx * gy);
      } else {
        CHECK(gxy <= gx + gy);
      }
    }
  }
}

TEST_CASE("L2 squared ordering agrees with numeric distances") {
  DyadicGen gen(11);
  for (int trial = 0; trial < 300; ++trial) {
    const Point u = gen.point(8, 8, true), v = gen.point(8, 8, true);
    const ExactScalar su = gauge(NormSpec::l2(), u);
    const ExactScalar sv = gauge(NormSpec::l2(), v);
    const double du = std::sqrt(su.to_double());
    const double dv = std::sqrt(sv.to_double());
    if (std::fabs(du - dv) < 1e-9)
      continue;
    CHECK((su < sv) == (du < dv));
  }
}

TEST_CASE("polygon validation") {
  CHECK_THROWS_AS(NormSpec::polygonal({Point(1, 0), Point(-1, 0)}),
                  std::invalid_argument);
  // not centrally symmetric
  CHECK_THROWS_AS(NormSpec::polygonal(
                      {Point(2, 0), Point(0, 1), Point(-1, 0), Point(0, -1)}),
                  std::invalid_argument);
  // clockwise (reversed) ordering rejected
  CHECK_THROWS_AS(NormSpec::polygonal(
                      {Point(1, 1), Point(1, -1), Point(-1, -1), Point(-1, 1)}),
                  std::invalid_argument);
}

TEST_CASE("scalar and configuration JSON round-trips") {
  DyadicGen gen(31337);
  for (int trial = 0; trial < 100; ++trial) {
    const ExactScalar s = gen.scalar(20, 16, true);
    CHECK(scalar_from_json(scalar_to_json(s)) == s);
  }
  Configuration cfg({Point(0, 0), Point(1, 3),
                     Point(ExactScalar(Rational(1, 2)), ExactScalar::sqrt3())},
                    NormSpec::l2());
  Configuration back = configuration_from_json(configuration_to_json(cfg));
  CHECK(back.norm.kind() == NormKind::L2);
  REQUIRE(back.size() == cfg.size());
  for (size_t i = 0; i < cfg.size(); ++i)
    CHECK(back.points[i] == cfg.points[i]);
  // norm flags
  CHECK(norm_from_flag("linf").kind() == NormKind::Linf);
  CHECK(norm_from_flag("lp:2.5").kind() == NormKind::Lp);
  CHECK_THROWS_AS(norm_from_flag("l7"), std::invalid_argument);
}
