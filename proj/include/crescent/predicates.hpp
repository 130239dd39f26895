#ifndef CRESCENT_PREDICATES_HPP
#define CRESCENT_PREDICATES_HPP

#include <array>
#include <map>
#include <optional>
#include <vector>

#include "crescent/geometry.hpp"

namespace crescent {

// Finite point set with an attached norm. The stored order matters for
// ordered operations (order_distances); set-level predicates ignore it.
struct Configuration {
  std::vector<Point> points;
  NormSpec norm;

  // Throws std::invalid_argument if points are not pairwise distinct.
  Configuration(std::vector<Point> pts, NormSpec n);

  size_t size() const { return points.size(); }
};

using DistanceMultiset = std::map<DistanceValue, int>;

struct NormCircle {
  Point center;
  DistanceValue radius; // > 0; squared for L2
  NormSpec norm;
};

bool collinear3(const Point &p, const Point &q, const Point &r);

// Witness circle of positive radius through all four points, or nullopt.
// L2 uses the concyclicity determinant (collinear quadruples excluded);
// Linf enumerates side assignments of an axis-aligned square; L1 maps
// through duality_transform and back; Polygonal runs the general
// edge-assignment feasibility. Lp throws UnsupportedExactNorm.
std::optional<NormCircle> concyclic4(const NormSpec &norm, const Point &p1,
                                     const Point &p2, const Point &p3,
                                     const Point &p4);

std::optional<std::array<int, 3>>
has_collinear_triple(const Configuration &cfg);

struct ConcyclicWitness {
  std::array<int, 4> indices;
  NormCircle circle;
};
std::optional<ConcyclicWitness>
has_concyclic_quadruple(const Configuration &cfg);

// Ordering under which the configuration has the distance graph of
// equally spaced collinear points: d(p_i, p_j) depends only on |i - j|
// and the order distances d_1..d_{n-1} are pairwise distinct.
//
// The equality classes of a line-like set are forced: the gap-g class
// has exactly n-g pairs, so the class sizes must be {1, .., n-1} and the
// (n-1)-sized class must form a Hamiltonian path, which is unique up to
// reversal. That makes the search deterministic: locate that class,
// extract the path, validate the full shift pattern.
std::optional<std::vector<int>> is_linelike(const Configuration &cfg);

// Validates one specific ordering (points as given).
bool is_linelike_ordered(const NormSpec &norm, const std::vector<Point> &pts);

// d_i = d(p_1, p_{1+i}) for the configuration in its stored order;
// throws NotLineLike if any shift disagrees or values collide.
std::vector<DistanceValue> order_distances(const Configuration &cfg);

DistanceMultiset distance_multiset(const Configuration &cfg);

// Exactly n-1 distinct distances whose multiplicities are {1, .., n-1}.
bool is_crescent_multiplicity(const Configuration &cfg);

struct Violation {
  enum class Kind { none, collinear, concyclic, linelike_four };
  Kind kind = Kind::none;
  std::vector<int> indices;
  std::optional<NormCircle> circle;
};

bool in_strong_general_position(const Configuration &cfg,
                                Violation *violation = nullptr);

bool is_strong_crescent(const Configuration &cfg,
                        Violation *violation = nullptr);

// Line-like with no collinear triple and no concyclic quadruple;
// returns the witness ordering.
std::optional<std::vector<int>> is_linelike_crescent(const Configuration &cfg);

enum class Axis { horizontal, vertical, automatic };

struct PerturbationWitness {
  Axis axis;
  std::vector<int> ordering;
  ExactScalar spacing; // nonzero step of the projected arithmetic progression
};

// The points project onto equally spaced points of a horizontal or
// vertical line: the relevant coordinates form an arithmetic progression
// with nonzero step under the sort-by-coordinate ordering. A coordinate
// tie rejects that axis outright.
std::optional<PerturbationWitness>
is_perpendicular_perturbation(const Configuration &cfg,
                              Axis axis = Axis::automatic);

// Given a line-like triple A, B, C (|AB| = |BC| != |AC|), returns the
// parallelogram completion D = B + (C - A) when A, B, C, D is line-like
// in the norm; non-strictly-convex norms can fail the verification, in
// which case nullopt is returned.
std::optional<Point> complete_linelike4_parallelogram(const Point &a,
                                                      const Point &b,
                                                      const Point &c,
                                                      const NormSpec &norm);

// Weak crescent configurations (size-four line-like parallelograms
// permitted) are recognized nowhere in this toolkit; the flag exists so
// callers fail loudly instead of silently getting the strong semantics.
inline constexpr bool kWeakCrescentSupported = false;

} // namespace crescent

#endif
