#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "crescent/constructors.hpp"
#include "oracle_helpers.hpp"

#include <cmath>

using namespace crescent;
using crescent_test::DyadicGen;

namespace {

NormSpec hexagon_norm() {
  const ExactScalar h(Rational(0), Rational(1, 2));
  const ExactScalar half(Rational(1, 2));
  return NormSpec::polygonal({Point(ExactScalar(1), ExactScalar(0)),
                              Point(half, h),
                              Point(-half, h),
                              Point(ExactScalar(-1), ExactScalar(0)),
                              Point(-half, -h),
                              Point(half, -h)});
}

} // namespace

TEST_CASE("segment construction reproduces the (i, 1/i) family") {
  // right side of the unit square, steps (1, 1/(i+1) - 1/i): position on
  // the segment from (1,-1) to (1,1) is (y + 1) / 2
  std::vector<Rational> choices;
  for (long i = 1; i <= 5; ++i) {
    Rational y = Rational(1, i + 1) - Rational(1, i);
    Rational t = (y + 1) / 2;
    t.canonicalize();
    choices.push_back(t);
  }
  Configuration built = build_segment_norm_linelike(
      NormSpec::linf(), 6, choices, 0,
      Point(ExactScalar(1), ExactScalar(1)));
  Configuration expected = example_perturbed_line(6);
  REQUIRE(built.size() == expected.size());
  for (size_t i = 0; i < built.size(); ++i)
    CHECK(built.points[i] == expected.points[i]);
}

TEST_CASE("segment construction contract on seeded runs") {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    for (const NormSpec &norm : {NormSpec::linf(), NormSpec::l1()}) {
      const int n = 2 + static_cast<int>(seed % 9); // up to 10
      Configuration cfg = build_segment_norm_linelike(norm, n, seed);
      CHECK(is_linelike(cfg).has_value());
      CHECK_FALSE(has_collinear_triple(cfg).has_value());
      // order distances are exactly 1..n-1
      auto d = order_distances(cfg);
      for (int g = 1; g < n; ++g)
        CHECK(d[g - 1].value == ExactScalar(g));
    }
  }
  CHECK_THROWS_AS(build_segment_norm_linelike(NormSpec::l2(), 4, 1ULL),
                  StrictlyConvexNorm);
  CHECK_THROWS_AS(build_segment_norm_linelike(NormSpec::lp(3.0), 4, 1ULL),
                  StrictlyConvexNorm);
}

TEST_CASE("two-point segment construction") {
  Configuration cfg =
      build_segment_norm_linelike(NormSpec::l1(), 2, {Rational(1, 3)});
  CHECK(cfg.size() == 2);
  CHECK(gauge(cfg.norm, cfg.points[1] - cfg.points[0]) == ExactScalar(1));
}

TEST_CASE("arc construction") {
  // epsilon = 0 degenerates to equally spaced collinear points
  auto line = build_arc_linelike(4, 0.0, 0.3, 1.0);
  for (size_t i = 0; i + 1 < line.size(); ++i) {
    const double dx = line[i + 1][0] - line[i][0];
    const double dy = line[i + 1][1] - line[i][1];
    CHECK(std::hypot(dx, dy) == doctest::Approx(1.0));
  }
  CHECK(is_linelike_numeric_ordered(NormSpec::l2(), line, 1e-9));

  // n=5 arc: all points on a common circle, consecutive chords 1
  auto arc = build_arc_linelike(5, 3.14159265358979 / 8, 0.0,
                                3.14159265358979 / 2);
  REQUIRE(arc.size() == 5);
  // circumcenter fit from the first three points
  const double ax = arc[0][0], ay = arc[0][1];
  const double bx = arc[1][0], by = arc[1][1];
  const double cx = arc[2][0], cy = arc[2][1];
  const double d = 2 * (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by));
  const double ux = ((ax * ax + ay * ay) * (by - cy) +
                     (bx * bx + by * by) * (cy - ay) +
                     (cx * cx + cy * cy) * (ay - by)) /
                    d;
  const double uy = ((ax * ax + ay * ay) * (cx - bx) +
                     (bx * bx + by * by) * (ax - cx) +
                     (cx * cx + cy * cy) * (bx - ax)) /
                    d;
  const double r0 = std::hypot(ax - ux, ay - uy);
  for (const auto &p : arc)
    CHECK(std::hypot(p[0] - ux, p[1] - uy) == doctest::Approx(r0).epsilon(1e-9));

  // isosceles line-like triple for any valid epsilon
  auto tri = build_arc_linelike(3, 0.5, 0.2, 2.0);
  CHECK(is_linelike_numeric_ordered(NormSpec::l2(), tri, 1e-9));

  CHECK_THROWS_AS(build_arc_linelike(5, 2.0, 0.0, 1.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(build_arc_linelike(5, 0.1, 1.0, 0.5),
                  std::invalid_argument);
}

TEST_CASE("crescent4 in exact norms") {
  for (const NormSpec &norm :
       {NormSpec::linf(), NormSpec::l1(), NormSpec::l2(), hexagon_norm()}) {
    Configuration cfg = build_crescent4(norm);
    REQUIRE(cfg.size() == 4);
    CHECK(is_strong_crescent(cfg));
    auto m = distance_multiset(cfg);
    REQUIRE(m.size() == 3);
    std::vector<int> counts;
    for (const auto &[dv, c] : m)
      counts.push_back(c);
    std::sort(counts.begin(), counts.end());
    CHECK(counts == std::vector<int>{1, 2, 3});
  }
}

TEST_CASE("crescent4 pattern in norms where the corner construction works") {
  // distances r (x3) > t (x1) > s (x2): the multiplicity-3 value wins
  for (const NormSpec &norm : {NormSpec::l2(), hexagon_norm()}) {
    Configuration cfg = build_crescent4(norm);
    auto m = distance_multiset(cfg);
    std::vector<std::pair<int, ExactScalar>> by_count;
    for (const auto &[dv, c] : m)
      by_count.push_back({c, dv.value});
    std::sort(by_count.begin(), by_count.end(),
              [](const auto &a, const auto &b) { return a.first < b.first; });
    // by_count: multiplicities 1 (t), 2 (s), 3 (r); expect s < t < r
    CHECK(by_count[1].second < by_count[0].second);
    CHECK(by_count[0].second < by_count[2].second);
  }
}

TEST_CASE("crescent4 numeric for Lp") {
  for (double p : {1.5, 2.5, 3.0}) {
    auto pts = build_crescent4_numeric(p);
    REQUIRE(pts.size() == 4);
    auto d = [&](int i, int j) {
      return std::pow(std::pow(std::fabs(pts[i][0] - pts[j][0]), p) +
                          std::pow(std::fabs(pts[i][1] - pts[j][1]), p),
                      1.0 / p);
    };
    // multiset pattern {r:3, s:2, t:1} with r > t > s at 1e-9
    CHECK(d(0, 3) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(d(1, 3) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(d(2, 3) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(d(0, 1) == doctest::Approx(d(1, 2)).epsilon(1e-9));
    CHECK(d(0, 1) + 1e-9 < d(0, 2));
    CHECK(d(0, 2) + 1e-9 < 1.0);
  }
}

TEST_CASE("example families print the published coordinates") {
  Configuration pl = example_perturbed_line(6);
  REQUIRE(pl.size() == 6);
  CHECK(pl.points[0] == Point(ExactScalar(1), ExactScalar(1)));
  CHECK(pl.points[5] ==
        Point(ExactScalar(6), ExactScalar(make_rational(1, 6))));

  Configuration st = example_staircase(5, Rational(1, 2));
  const long num[5][2] = {{0, 0}, {2, 1}, {3, 3}, {5, 4}, {6, 6}};
  for (int i = 0; i < 5; ++i)
    CHECK(st.points[i] == Point(ExactScalar(make_rational(num[i][0], 2)),
                                ExactScalar(make_rational(num[i][1], 2))));

  // xyxy with a=1/4, b=1/2:
  // (0,0), (1,1/4), (3/2,5/4), (5/2,7/4), (11/4,11/4)
  Configuration ce = example_counterexample(4, Rational(1, 4), Rational(1, 2));
  REQUIRE(ce.size() == 5);
  CHECK(ce.points[1] == Point(ExactScalar(1), ExactScalar(make_rational(1, 4))));
  CHECK(ce.points[2] == Point(ExactScalar(make_rational(3, 2)),
                              ExactScalar(make_rational(5, 4))));
  CHECK(ce.points[3] == Point(ExactScalar(make_rational(5, 2)),
                              ExactScalar(make_rational(7, 4))));
  CHECK(ce.points[4] == Point(ExactScalar(make_rational(11, 4)),
                              ExactScalar(make_rational(11, 4))));

  CHECK_THROWS_AS(example_staircase(5, Rational(2)), std::invalid_argument);
  CHECK_THROWS_AS(example_counterexample(4, Rational(1, 2), Rational(1, 4)),
                  std::invalid_argument);
}

TEST_CASE("counterexample families: line-like crescent, not perturbations") {
  // dyadic grid of (a, b) with 0 < a < b < 1
  for (long den : {4L, 8L}) {
    for (long na = 1; na < den; ++na)
      for (long nb = na + 1; nb < den; ++nb) {
        const Rational a = make_rational(na, den), b = make_rational(nb, den);
        for (int len = 2; len <= 5; ++len) {
          Configuration cfg = example_counterexample(len, a, b);
          CHECK(is_linelike_crescent(cfg).has_value());
          CHECK_FALSE(is_perpendicular_perturbation(cfg).has_value());
        }
      }
  }
}

TEST_CASE("lp discrepancy on the explicit four-point circle family") {
  // x1 = (0,1), x2 = (2^-1/p, 2^-1/p), x3 = (1,0), x4 = (2^-1/p, -2^-1/p)
  auto family = [](double p) -> std::vector<NumericPoint> {
    const double c = std::pow(2.0, -1.0 / p);
    return {{0, 1}, {c, c}, {1, 0}, {c, -c}};
  };
  // discrepancy |2^(1/p) - 2^(1-1/p)|, about 0.3275 at p = 3
  const double p = 3.0;
  const double expected =
      std::fabs(std::pow(2.0, 1.0 / p) - std::pow(2.0, 1.0 - 1.0 / p));
  CHECK(lp_discrepancy(family(p), p, false) ==
        doctest::Approx(expected).epsilon(1e-12));
  CHECK(expected == doctest::Approx(0.32748).epsilon(1e-4));
  // and zero at p = 2
  CHECK(lp_discrepancy(family(2.0), 2.0, false) ==
        doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("lp chain search is exact at p = 2") {
  for (int n = 4; n <= 8; ++n) {
    auto res = lp_linelike_search(2.0, n, 64);
    CHECK(res.min_discrepancy <= 1e-12);
  }
}

TEST_CASE("lp chain search discrepancy shrinks as p approaches 2") {
  auto r1 = lp_linelike_search(2.5, 5, 96);
  auto r2 = lp_linelike_search(2.1, 5, 96);
  auto r3 = lp_linelike_search(2.01, 5, 96);
  CHECK(r1.min_discrepancy > r2.min_discrepancy);
  CHECK(r2.min_discrepancy > r3.min_discrepancy);
  CHECK(r3.min_discrepancy < 1e-2);
  CHECK(r1.min_discrepancy > 0);
}

TEST_CASE("free-angle search") {
  // n=3: isosceles triples exist in every norm
  auto tri = lp_linelike_search_free(3.0, 3, 16);
  CHECK(tri.coarse_min <= 1e-12);
  // p=2, n=4: the circular solution hits zero on the coarse grid
  auto circ = lp_linelike_search_free(2.0, 4, 16);
  CHECK(circ.coarse_min <= 1e-12);
  // p=4, n=5: no nondegenerate configuration on the coarse grid
  auto hard = lp_linelike_search_free(4.0, 5, 24);
  CHECK(hard.coarse_min > 1e-3);
}
