#include "crescent/geometry.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace crescent {

NormSpec NormSpec::lp(double p) {
  if (!(p > 1.0) || std::isinf(p))
    throw std::invalid_argument("Lp norm requires finite p > 1");
  NormSpec n(NormKind::Lp);
  n.p_ = p;
  return n;
}

NormSpec NormSpec::polygonal(std::vector<Point> vertices) {
  const size_t n = vertices.size();
  if (n < 4 || n % 2 != 0)
    throw std::invalid_argument(
        "polygonal norm needs an even vertex count >= 4");
  for (size_t i = 0; i < n / 2; ++i) {
    if (vertices[i + n / 2] != Point(-vertices[i].x, -vertices[i].y))
      throw std::invalid_argument("polygon is not centrally symmetric");
  }
  // Strict convexity of the vertex cycle in counterclockwise order. This
  // also forces the origin (the center of symmetry) into the interior.
  for (size_t i = 0; i < n; ++i) {
    const Point &a = vertices[i];
    const Point &b = vertices[(i + 1) % n];
    const Point &c = vertices[(i + 2) % n];
    if (cross(b - a, c - b).sign() <= 0)
      throw std::invalid_argument(
          "polygon vertices must be strictly convex and counterclockwise");
  }
  NormSpec spec(NormKind::Polygonal);
  spec.vertices_ = std::move(vertices);
  return spec;
}

std::string NormSpec::name() const {
  switch (kind_) {
  case NormKind::L1:
    return "l1";
  case NormKind::L2:
    return "l2";
  case NormKind::Linf:
    return "linf";
  case NormKind::Lp: {
    std::ostringstream os;
    os << "lp:" << p_;
    return os.str();
  }
  case NormKind::Polygonal:
    return "polygon";
  }
  return "?";
}

namespace {

// Gauge of v in a polygonal norm: locate the edge whose cone contains v,
// then solve the linear edge equation. For v = g * (point on edge [a,b]):
//   g = cross(b - a, v) / cross(b - a, a)
// The denominator is nonzero because the origin is interior. A vector
// pointing at a vertex satisfies both adjacent edge equations with the
// same g, so ties need no special handling.
ExactScalar polygonal_gauge(const std::vector<Point> &verts, const Point &v) {
  const size_t n = verts.size();
  for (size_t i = 0; i < n; ++i) {
    const Point &a = verts[i];
    const Point &b = verts[(i + 1) % n];
    // Cone test: a x v >= 0 and v x b >= 0 (counterclockwise order).
    if (cross(a, v).sign() >= 0 && cross(v, b).sign() >= 0) {
      Point e = b - a;
      return cross(e, v) / cross(e, a);
    }
  }
  throw std::logic_error("polygonal gauge: direction not located");
}

} // namespace

ExactScalar gauge(const NormSpec &norm, const Point &v) {
  switch (norm.kind()) {
  case NormKind::Linf: {
    ExactScalar ax = v.x.abs(), ay = v.y.abs();
    return ax < ay ? ay : ax;
  }
  case NormKind::L1:
    return v.x.abs() + v.y.abs();
  case NormKind::L2:
    return v.x * v.x + v.y * v.y; // squared
  case NormKind::Polygonal:
    if (v.x.is_zero() && v.y.is_zero())
      return ExactScalar(0);
    return polygonal_gauge(norm.vertices(), v);
  case NormKind::Lp:
    throw UnsupportedExactNorm("exact distance is undefined for Lp norms");
  }
  throw std::logic_error("unreachable");
}

DistanceValue distance(const NormSpec &norm, const Point &p, const Point &q) {
  DistanceValue d;
  d.value = gauge(norm, q - p);
  d.squared = (norm.kind() == NormKind::L2);
  return d;
}

double distance_numeric(const NormSpec &norm, double dx, double dy) {
  const double ax = std::fabs(dx), ay = std::fabs(dy);
  switch (norm.kind()) {
  case NormKind::Linf:
    return std::max(ax, ay);
  case NormKind::L1:
    return ax + ay;
  case NormKind::L2:
    return std::hypot(ax, ay);
  case NormKind::Lp:
    return std::pow(std::pow(ax, norm.p()) + std::pow(ay, norm.p()),
                    1.0 / norm.p());
  case NormKind::Polygonal: {
    if (ax == 0.0 && ay == 0.0)
      return 0.0;
    // Edge-cone location in doubles, mirroring the exact path.
    const auto &verts = norm.vertices();
    const size_t n = verts.size();
    for (size_t i = 0; i < n; ++i) {
      const double a_x = verts[i].x.to_double(), a_y = verts[i].y.to_double();
      const double b_x = verts[(i + 1) % n].x.to_double();
      const double b_y = verts[(i + 1) % n].y.to_double();
      if (a_x * dy - a_y * dx >= -1e-15 && dx * b_y - dy * b_x >= -1e-15) {
        const double ex = b_x - a_x, ey = b_y - a_y;
        return (ex * dy - ey * dx) / (ex * a_y - ey * a_x);
      }
    }
    throw std::logic_error("polygonal gauge (numeric): direction not located");
  }
  }
  throw std::logic_error("unreachable");
}

Point duality_transform(const Point &p) { return {p.x + p.y, p.x - p.y}; }

std::vector<Segment> unit_circle_segments(const NormSpec &norm) {
  switch (norm.kind()) {
  case NormKind::Linf:
    return {{{1, -1}, {1, 1}},
            {{1, 1}, {-1, 1}},
            {{-1, 1}, {-1, -1}},
            {{-1, -1}, {1, -1}}};
  case NormKind::L1:
    return {{{1, 0}, {0, 1}},
            {{0, 1}, {-1, 0}},
            {{-1, 0}, {0, -1}},
            {{0, -1}, {1, 0}}};
  case NormKind::Polygonal: {
    std::vector<Segment> segs;
    const auto &verts = norm.vertices();
    for (size_t i = 0; i < verts.size(); ++i)
      segs.push_back({verts[i], verts[(i + 1) % verts.size()]});
    return segs;
  }
  case NormKind::L2:
    return {};
  case NormKind::Lp:
    throw UnsupportedExactNorm("unit_circle_segments: Lp has no exact path");
  }
  throw std::logic_error("unreachable");
}

} // namespace crescent
