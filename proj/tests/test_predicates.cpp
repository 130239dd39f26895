#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "crescent/predicates.hpp"
#include "oracle_helpers.hpp"

using namespace crescent;
using namespace crescent_test;

namespace {

Point rp(long num_x, long num_y, long den = 1) {
  return Point(ExactScalar(make_rational(num_x, den)),
               ExactScalar(make_rational(num_y, den)));
}

Configuration table54(int n) {
  std::vector<std::vector<Point>> rows = {
      {rp(0, 0), rp(0, 1), rp(1, 1), rp(1, 3)},
      {rp(0, 0), rp(0, 1), rp(1, 1), rp(1, 3), rp(2, 4)},
      {rp(0, 0), rp(0, 1), rp(1, 3), rp(2, 1), rp(2, 4), rp(4, 5)},
      {rp(0, 0), rp(0, 4), rp(1, 2), rp(2, 3), rp(3, 1), rp(5, 4), rp(6, 6)},
      {rp(0, 0), rp(0, 6), rp(1, 3), rp(2, 4), rp(3, 2), rp(4, 1), rp(5, 5),
       rp(6, 7)}};
  return Configuration(rows[n - 4], NormSpec::linf());
}

} // namespace

TEST_CASE("collinear3") {
  CHECK(collinear3(rp(0, 0), rp(1, 1), rp(2, 2)));
  CHECK_FALSE(collinear3(rp(0, 0), rp(1, 0), rp(0, 1)));
  // the three collinear points appearing in the alternating family
  // (1, a), (2+b, 1+a+b), (3+2b, 2+a+2b) with a = 1/3, b = 1/2
  const Point p1 = rp(3, 1, 3);   // (1, 1/3)
  const Point p2 = rp(15, 11, 6); // (5/2, 11/6)
  const Point p3 = rp(12, 10, 3); // (4, 10/3)
  CHECK(collinear3(p1, p2, p3));
}

TEST_CASE("concyclic4 Linf: witnessed circle") {
  auto c = concyclic4(NormSpec::linf(), rp(1, 1), rp(2, 2), rp(1, 3),
                      rp(0, 2));
  REQUIRE(c.has_value());
  CHECK(c->center == rp(1, 2));
  CHECK(c->radius.value == ExactScalar(1));
  // every point really is at Chebyshev distance 1 from the center
  for (const Point &p : {rp(1, 1), rp(2, 2), rp(1, 3), rp(0, 2)})
    CHECK(gauge(NormSpec::linf(), p - c->center) == c->radius.value);
}

TEST_CASE("concyclic4 Linf: negative case") {
  CHECK_FALSE(concyclic4(NormSpec::linf(), rp(0, 0), rp(0, 1), rp(1, 1),
                         rp(1, 3))
                  .has_value());
}

TEST_CASE("concyclic4 L2") {
  auto c = concyclic4(NormSpec::l2(), rp(1, 0), rp(0, 1), rp(-1, 0),
                      rp(0, -1));
  REQUIRE(c.has_value());
  CHECK(c->center == rp(0, 0));
  CHECK(c->radius.value == ExactScalar(1)); // squared radius 1
  // collinear quadruple is not concyclic
  CHECK_FALSE(concyclic4(NormSpec::l2(), rp(0, 0), rp(1, 0), rp(2, 0),
                         rp(3, 0))
                  .has_value());
  // generic non-concyclic quadruple
  CHECK_FALSE(
      concyclic4(NormSpec::l2(), rp(0, 0), rp(1, 0), rp(0, 1), rp(2, 2))
          .has_value());
}

TEST_CASE("concyclic4 Linf agrees with the half-integer-center oracle") {
  std::mt19937_64 rng(123);
  std::uniform_int_distribution<long> coord(0, 6);
  for (int set = 0; set < 6; ++set) {
    std::vector<std::array<long, 2>> pts;
    while (pts.size() < 12) {
      std::array<long, 2> p{coord(rng), coord(rng)};
      if (std::find(pts.begin(), pts.end(), p) == pts.end())
        pts.push_back(p);
    }
    for (size_t i = 0; i < pts.size(); ++i)
      for (size_t j = i + 1; j < pts.size(); ++j)
        for (size_t k = j + 1; k < pts.size(); ++k)
          for (size_t l = k + 1; l < pts.size(); ++l) {
            const bool oracle =
                cheb_concyclic4_oracle(pts[i], pts[j], pts[k], pts[l]);
            const bool fast =
                concyclic4(NormSpec::linf(), rp(pts[i][0], pts[i][1]),
                           rp(pts[j][0], pts[j][1]), rp(pts[k][0], pts[k][1]),
                           rp(pts[l][0], pts[l][1]))
                    .has_value();
            CHECK(oracle == fast);
          }
  }
}

TEST_CASE("concyclic4 L1 matches Linf through duality") {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<long> coord(0, 5);
  for (int trial = 0; trial < 400; ++trial) {
    Point p[4];
    bool distinct = true;
    for (auto &q : p)
      q = rp(coord(rng), coord(rng));
    for (int i = 0; i < 4 && distinct; ++i)
      for (int j = i + 1; j < 4; ++j)
        distinct = distinct && !(p[i] == p[j]);
    if (!distinct)
      continue;
    const bool l1 =
        concyclic4(NormSpec::l1(), p[0], p[1], p[2], p[3]).has_value();
    const bool dual = concyclic4(NormSpec::linf(), duality_transform(p[0]),
                                 duality_transform(p[1]),
                                 duality_transform(p[2]),
                                 duality_transform(p[3]))
                          .has_value();
    CHECK(l1 == dual);
  }
}

TEST_CASE("polygonal concyclicity reproduces Linf on the square polygon") {
  NormSpec square = NormSpec::polygonal(
      {Point(1, 1), Point(-1, 1), Point(-1, -1), Point(1, -1)});
  std::mt19937_64 rng(555);
  std::uniform_int_distribution<long> coord(0, 4);
  for (int trial = 0; trial < 150; ++trial) {
    Point p[4];
    bool distinct = true;
    for (auto &q : p)
      q = rp(coord(rng), coord(rng));
    for (int i = 0; i < 4 && distinct; ++i)
      for (int j = i + 1; j < 4; ++j)
        distinct = distinct && !(p[i] == p[j]);
    if (!distinct)
      continue;
    CHECK(concyclic4(square, p[0], p[1], p[2], p[3]).has_value() ==
          concyclic4(NormSpec::linf(), p[0], p[1], p[2], p[3]).has_value());
  }
}

TEST_CASE("has_collinear_triple / has_concyclic_quadruple") {
  // (i, 1/i) points: no collinear triple, no concyclic quadruple
  std::vector<Point> pts;
  for (long i = 1; i <= 6; ++i)
    pts.push_back(Point(ExactScalar(make_rational(i)),
                        ExactScalar(make_rational(1, i))));
  Configuration cfg(pts, NormSpec::linf());
  CHECK_FALSE(has_collinear_triple(cfg).has_value());
  CHECK_FALSE(has_concyclic_quadruple(cfg).has_value());

  // staircase of size 5 has its even-index points on a common line
  std::vector<Point> stair{rp(0, 0), rp(2, 1, 2), rp(3, 3, 2), rp(5, 4, 2),
                           rp(6, 6, 2)};
  Configuration scfg(stair, NormSpec::linf());
  auto triple = has_collinear_triple(scfg);
  REQUIRE(triple.has_value());
  CHECK(*triple == std::array<int, 3>{0, 2, 4});

  Configuration small({rp(0, 0), rp(1, 0), rp(0, 1)}, NormSpec::l2());
  CHECK_FALSE(has_concyclic_quadruple(small).has_value());
}

TEST_CASE("is_linelike basics") {
  // equally spaced collinear points, identity ordering
  Configuration line({rp(0, 0), rp(1, 0), rp(2, 0), rp(3, 0)},
                     NormSpec::l2());
  auto ord = is_linelike(line);
  REQUIRE(ord.has_value());
  CHECK((ord->front() == 0 || ord->front() == 3));

  // perturbed line, ordered by x
  std::vector<Point> pts;
  for (long i = 1; i <= 4; ++i)
    pts.push_back(Point(ExactScalar(make_rational(i)),
                        ExactScalar(make_rational(1, i))));
  Configuration cfg(pts, NormSpec::linf());
  auto ord2 = is_linelike(cfg);
  REQUIRE(ord2.has_value());
  CHECK((ord2->front() == 0 || ord2->front() == 3));

  // generic set is not line-like
  Configuration bad({rp(0, 0), rp(1, 0), rp(0, 1), rp(5, 5)}, NormSpec::l2());
  CHECK_FALSE(is_linelike(bad).has_value());
  CHECK_FALSE(linelike_oracle(bad).has_value());
}

TEST_CASE("is_linelike matches the permutation oracle on random sets") {
  DyadicGen gen(4242);
  const NormSpec norms[] = {NormSpec::linf(), NormSpec::l1(), NormSpec::l2()};
  int hits = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const NormSpec &norm = norms[trial % 3];
    std::vector<Point> pts;
    while (pts.size() < 4) {
      Point p = gen.point(3, 2, false);
      bool fresh = true;
      for (const Point &q : pts)
        fresh = fresh && !(p == q);
      if (fresh)
        pts.push_back(p);
    }
    Configuration cfg(pts, norm);
    const bool fast = is_linelike(cfg).has_value();
    const bool oracle = linelike_oracle(cfg).has_value();
    CHECK(fast == oracle);
    hits += fast ? 1 : 0;
  }
  // a few random quadruples should be line-like, otherwise the test is
  // vacuous (parallelograms on a coarse grid are common)
  CHECK(hits > 0);
}

TEST_CASE("is_linelike is order-insensitive") {
  std::vector<Point> pts;
  for (long i = 1; i <= 5; ++i)
    pts.push_back(Point(ExactScalar(make_rational(i)),
                        ExactScalar(make_rational(1, i))));
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 20; ++trial) {
    std::shuffle(pts.begin(), pts.end(), rng);
    Configuration cfg(pts, NormSpec::linf());
    CHECK(is_linelike(cfg).has_value());
  }
}

TEST_CASE("order_distances") {
  Configuration line({rp(0, 0), rp(1, 0), rp(2, 0), rp(3, 0)},
                     NormSpec::l2());
  auto d = order_distances(line);
  REQUIRE(d.size() == 3);
  CHECK(d[0].value == ExactScalar(1));
  CHECK(d[1].value == ExactScalar(4));
  CHECK(d[2].value == ExactScalar(9));
  CHECK(d[0].squared);

  std::vector<Point> pts;
  for (long i = 1; i <= 4; ++i)
    pts.push_back(Point(ExactScalar(make_rational(i)),
                        ExactScalar(make_rational(1, i))));
  auto d2 = order_distances(Configuration(pts, NormSpec::linf()));
  CHECK(d2[0].value == ExactScalar(1));
  CHECK(d2[1].value == ExactScalar(2));
  CHECK(d2[2].value == ExactScalar(3));

  // the xy triple (0,0), (1,1/4), (5/4,5/4): order distances 1, 5/4
  Configuration xy({rp(0, 0), rp(4, 1, 4), rp(5, 5, 4)}, NormSpec::linf());
  auto d3 = order_distances(xy);
  CHECK(d3[0].value == ExactScalar(1));
  CHECK(d3[1].value == ExactScalar(make_rational(5, 4)));

  Configuration bad({rp(0, 0), rp(1, 0), rp(5, 5), rp(2, 0)}, NormSpec::l2());
  CHECK_THROWS_AS(order_distances(bad), NotLineLike);
}

TEST_CASE("shift equality holds on equally spaced points in every norm") {
  // d(s_i, s_j) = |j - i| d_1 for collinear equally spaced points
  const Point step = rp(3, 2);
  const NormSpec norms[] = {NormSpec::linf(), NormSpec::l1(), NormSpec::l2()};
  for (const NormSpec &norm : norms) {
    std::vector<Point> pts;
    Point cur = rp(1, -1);
    for (int i = 0; i < 6; ++i) {
      pts.push_back(cur);
      cur = cur + step;
    }
    const ExactScalar d1 = gauge(norm, step);
    for (int i = 0; i < 6; ++i)
      for (int j = i + 1; j < 6; ++j) {
        const ExactScalar d = gauge(norm, pts[j] - pts[i]);
        const long g = j - i;
        const ExactScalar factor =
            norm.kind() == NormKind::L2 ? ExactScalar(g * g) : ExactScalar(g);
        CHECK(d == factor * d1);
      }
  }
}

TEST_CASE("distance_multiset and crescent multiplicity") {
  Configuration t4 = table54(4);
  auto m = distance_multiset(t4);
  REQUIRE(m.size() == 3);
  CHECK(m[DistanceValue{ExactScalar(1), false}] == 3);
  CHECK(m[DistanceValue{ExactScalar(2), false}] == 2);
  CHECK(m[DistanceValue{ExactScalar(3), false}] == 1);
  CHECK(is_crescent_multiplicity(t4));

  Configuration two({rp(0, 0), rp(2, 5)}, NormSpec::l1());
  auto m2 = distance_multiset(two);
  REQUIRE(m2.size() == 1);
  CHECK(m2.begin()->second == 1);
  CHECK(is_crescent_multiplicity(two));

  // unit square corners in L2: {1(sq):4, 2(sq):2} is not a crescent set
  Configuration sq({rp(0, 0), rp(1, 0), rp(1, 1), rp(0, 1)}, NormSpec::l2());
  auto m3 = distance_multiset(sq);
  CHECK(m3[DistanceValue{ExactScalar(1), true}] == 4);
  CHECK(m3[DistanceValue{ExactScalar(2), true}] == 2);
  CHECK_FALSE(is_crescent_multiplicity(sq));

  // 3 collinear equally spaced points do satisfy the multiplicity rule
  Configuration line3({rp(0, 0), rp(1, 0), rp(2, 0)}, NormSpec::l2());
  CHECK(is_crescent_multiplicity(line3));
}

TEST_CASE("strong general position") {
  CHECK(in_strong_general_position(table54(5)));

  // parallelogram with |AB| = |BC| = |CD|, |AC| = |BD|: line-like four
  Configuration par({rp(0, 0), rp(1, 0), rp(2, 1), rp(1, 1)}, NormSpec::l2());
  Violation v;
  CHECK_FALSE(in_strong_general_position(par, &v));
  CHECK(v.kind == Violation::Kind::linelike_four);

  Configuration tri({rp(0, 0), rp(1, 0), rp(0, 1)}, NormSpec::l2());
  CHECK(in_strong_general_position(tri));
}

TEST_CASE("published Linf configurations are strong crescents") {
  for (int n = 4; n <= 8; ++n) {
    Configuration cfg = table54(n);
    CHECK(is_strong_crescent(cfg));
  }
}

TEST_CASE("strong crescent transfers through duality to L1") {
  for (int n = 4; n <= 8; ++n) {
    Configuration cfg = table54(n);
    std::vector<Point> image;
    for (const Point &p : cfg.points)
      image.push_back(duality_transform(p));
    CHECK(is_strong_crescent(Configuration(image, NormSpec::l1())));
  }
}

TEST_CASE("line-like crescent recognition") {
  // Table row 8 is a strong crescent but not line-like
  CHECK_FALSE(is_linelike_crescent(table54(8)).has_value());

  // alternating xyx family with a=1/4, b=1/2 (only a matters at size 4)
  Configuration xyx({rp(0, 0), rp(4, 1, 4), rp(5, 5, 4), rp(9, 6, 4)},
                    NormSpec::linf());
  CHECK(is_linelike_crescent(xyx).has_value());

  // staircase of size 5 fails on the collinear triple
  Configuration stair({rp(0, 0), rp(2, 1, 2), rp(3, 3, 2), rp(5, 4, 2),
                       rp(6, 6, 2)},
                      NormSpec::linf());
  CHECK(is_linelike(stair).has_value());
  CHECK_FALSE(is_linelike_crescent(stair).has_value());
}

TEST_CASE("perpendicular perturbation detection") {
  std::vector<Point> pts;
  for (long i = 1; i <= 5; ++i)
    pts.push_back(Point(ExactScalar(make_rational(i)),
                        ExactScalar(make_rational(1, i))));
  auto w = is_perpendicular_perturbation(Configuration(pts, NormSpec::linf()));
  REQUIRE(w.has_value());
  CHECK(w->axis == Axis::horizontal);
  CHECK(w->spacing == ExactScalar(1));

  // xy family: x-coordinates 0, 1, 5/4 are not equally spaced
  Configuration xy({rp(0, 0), rp(4, 1, 4), rp(5, 5, 4)}, NormSpec::linf());
  CHECK_FALSE(is_perpendicular_perturbation(xy).has_value());

  // two points always admit a witness on some axis
  Configuration two({rp(0, 0), rp(0, 3)}, NormSpec::linf());
  auto w2 = is_perpendicular_perturbation(two);
  REQUIRE(w2.has_value());
  CHECK(w2->axis == Axis::vertical);
  CHECK_FALSE(
      is_perpendicular_perturbation(two, Axis::horizontal).has_value());
}

TEST_CASE("parallelogram completion of a line-like triple") {
  // L2 triple A=(0,0), B=(1,0), C=(1,1)
  auto d = complete_linelike4_parallelogram(rp(0, 0), rp(1, 0), rp(1, 1),
                                            NormSpec::l2());
  REQUIRE(d.has_value());
  CHECK(*d == rp(2, 1));
  CHECK(is_linelike_ordered(NormSpec::l2(),
                            {rp(0, 0), rp(1, 0), rp(1, 1), rp(2, 1)}));

  // degenerate collinear equally spaced triple: D extends the line
  auto d2 = complete_linelike4_parallelogram(rp(0, 0), rp(1, 0), rp(2, 0),
                                             NormSpec::l2());
  REQUIRE(d2.has_value());
  CHECK(*d2 == rp(3, 0));

  // Linf triple A=(0,0), B=(1,1/2), C=(2,0): completion verifies
  auto d3 = complete_linelike4_parallelogram(rp(0, 0), rp(2, 1, 2), rp(2, 0),
                                             NormSpec::linf());
  REQUIRE(d3.has_value());
  CHECK(*d3 == rp(6, 1, 2));

  // precondition violated
  CHECK_THROWS_AS(complete_linelike4_parallelogram(rp(0, 0), rp(1, 0),
                                                   rp(3, 0), NormSpec::l2()),
                  std::invalid_argument);
}

TEST_CASE("configuration rejects duplicate points") {
  CHECK_THROWS_AS(Configuration({rp(0, 0), rp(0, 0)}, NormSpec::l2()),
                  std::invalid_argument);
}
