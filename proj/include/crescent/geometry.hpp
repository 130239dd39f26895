#ifndef CRESCENT_GEOMETRY_HPP
#define CRESCENT_GEOMETRY_HPP

#include <optional>
#include <utility>
#include <vector>

#include "crescent/errors.hpp"
#include "crescent/exact_scalar.hpp"

namespace crescent {

struct Point {
  ExactScalar x;
  ExactScalar y;

  Point() = default;
  Point(ExactScalar px, ExactScalar py) : x(std::move(px)), y(std::move(py)) {}
  Point(long px, long py) : x(px), y(py) {}

  friend Point operator+(const Point &a, const Point &b) {
    return {a.x + b.x, a.y + b.y};
  }
  friend Point operator-(const Point &a, const Point &b) {
    return {a.x - b.x, a.y - b.y};
  }
  friend Point operator*(const ExactScalar &k, const Point &p) {
    return {k * p.x, k * p.y};
  }
  friend bool operator==(const Point &a, const Point &b) {
    return a.x == b.x && a.y == b.y;
  }
  friend bool operator!=(const Point &a, const Point &b) { return !(a == b); }
  // Lexicographic; used for canonical forms and deterministic output.
  friend bool operator<(const Point &a, const Point &b) {
    if (a.x != b.x)
      return a.x < b.x;
    return a.y < b.y;
  }
};

inline ExactScalar cross(const Point &a, const Point &b) {
  return a.x * b.y - a.y * b.x;
}

enum class NormKind { L1, L2, Linf, Lp, Polygonal };

// Description of a planar norm. L1/L2/Linf/Polygonal support exact
// predicates; Lp (1 < p < inf, p != 2 typically) is numeric only.
class NormSpec {
public:
  static NormSpec l1() { return NormSpec(NormKind::L1); }
  static NormSpec l2() { return NormSpec(NormKind::L2); }
  static NormSpec linf() { return NormSpec(NormKind::Linf); }
  static NormSpec lp(double p);
  // Vertices must list a convex, centrally symmetric polygon in
  // counterclockwise order with the origin in its interior; validated here.
  static NormSpec polygonal(std::vector<Point> vertices);

  NormKind kind() const { return kind_; }
  double p() const { return p_; }
  const std::vector<Point> &vertices() const { return vertices_; }

  bool exact() const { return kind_ != NormKind::Lp; }
  bool strictly_convex() const {
    return kind_ == NormKind::L2 || kind_ == NormKind::Lp;
  }

  std::string name() const;

private:
  explicit NormSpec(NormKind k) : kind_(k) {}
  NormKind kind_;
  double p_ = 0.0;
  std::vector<Point> vertices_;
};

// Exact distance value. L2 distances are carried as exact *squared*
// values (squared=true); all other exact norms store the distance itself.
// Values from the same norm are totally ordered; mixing flavors is a bug.
struct DistanceValue {
  ExactScalar value;
  bool squared = false;

  friend bool operator==(const DistanceValue &a, const DistanceValue &b) {
    return a.squared == b.squared && a.value == b.value;
  }
  friend bool operator!=(const DistanceValue &a, const DistanceValue &b) {
    return !(a == b);
  }
  friend bool operator<(const DistanceValue &a, const DistanceValue &b) {
    return a.value < b.value;
  }
  friend bool operator>(const DistanceValue &a, const DistanceValue &b) {
    return b < a;
  }
};

// Exact distance in the given norm; throws UnsupportedExactNorm for Lp.
DistanceValue distance(const NormSpec &norm, const Point &p, const Point &q);

// Gauge of the vector v in the norm (exact kinds only). For L2 returns the
// squared Euclidean length.
ExactScalar gauge(const NormSpec &norm, const Point &v);

// Numeric evaluation for every norm kind, including Lp.
double distance_numeric(const NormSpec &norm, double dx, double dy);

// The linear map (x, y) -> (x+y, x-y). Carries L1 distances to Linf
// distances, and Linf distances to twice the L1 distance.
Point duality_transform(const Point &p);

struct Segment {
  Point a;
  Point b;
};

// Maximal line segments of the unit circle. Strictly convex norms yield
// an empty list. Lp is refused.
std::vector<Segment> unit_circle_segments(const NormSpec &norm);

} // namespace crescent

#endif
