#ifndef CRESCENT_CONSTRUCTORS_HPP
#define CRESCENT_CONSTRUCTORS_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "crescent/predicates.hpp"

namespace crescent {

using NumericPoint = std::array<double, 2>;

// Line-like chain in a non-strictly-convex norm: every step is drawn
// from one fixed segment of the unit circle, so any j - i consecutive
// steps sum to (j - i) times a point of that segment and all order
// distances come out as |j - i| exactly.
//
// `choices` hold the per-step position within the segment, each in
// [0, 1]; the result is verified line-like. Throws StrictlyConvexNorm
// when the unit circle has no segment.
Configuration build_segment_norm_linelike(const NormSpec &norm, int n,
                                          const std::vector<Rational> &choices,
                                          int segment_index = 0,
                                          const Point &start = Point(0, 0));

// Same, with segment positions drawn from a seeded generator on a dyadic
// grid; steps that would create a collinear triple are re-drawn.
Configuration build_segment_norm_linelike(const NormSpec &norm, int n,
                                          std::uint64_t seed);

// Unit-step chain whose directions advance by a fixed turn epsilon,
// starting from angle theta1 on a circle of the given radius; the points
// are equally spaced on a common Euclidean circle (a line if epsilon is
// zero). Validated line-like numerically at tolerance `tol`; throws
// std::domain_error on a degenerate parameter choice.
std::vector<NumericPoint> build_arc_linelike(int n, double epsilon,
                                             double theta1, double theta2,
                                             double radius = 1.0,
                                             double tol = 1e-9);

// Size-4 strong crescent configuration in an exact norm, verified before
// returning. Polygonal norms use the unit-circle corner construction
// (three points near a corner, center as the fourth); L2 uses an exact
// rational rotation; L1/Linf use verified lattice configurations because
// the corner pattern provably degenerates in those two norms (see the
// implementation note).
Configuration build_crescent4(const NormSpec &norm);

// Numeric size-4 construction for Lp: center plus three points on the
// unit circle straddling the diagonal. Verified to the tolerance.
std::vector<NumericPoint> build_crescent4_numeric(double p, double tol = 1e-9);

// (i, 1/i) for i = 1..n.
Configuration example_perturbed_line(int n);

// Staircase with growth parameter a in (0, 1): (0,0), (1,a), (1+a,1+a),
// (2+a,1+2a), (2+2a,2+2a), ...
Configuration example_staircase(int n, const Rational &a);

// The alternating families of sizes 3..6 (types xy, xyx, xyxy, xyxyx)
// for 0 < a < b < 1; sizes 3 and 4 only use a.
Configuration example_counterexample(int type_len, const Rational &a,
                                     const Rational &b);

// Max deviation of the pairwise Lp distances from the shift pattern
// d(p_i, p_j) = d(p_1, p_{1+j-i}); optionally normalized by d_1.
double lp_discrepancy(const std::vector<NumericPoint> &pts, double p,
                      bool normalized);

struct LpSearchResult {
  double p = 0;
  int n = 0;
  double min_discrepancy = 0; // normalized by d_1
  double t1 = 0, t2 = 0;      // argmin chain parameters
};

// On-circle ansatz: points on the Lp unit circle at angles t_1, t_2 and
// the chain continuation with equal first-order distances; discrepancy
// of the higher-order distances minimized over a (t1, t2) grid with
// three halving refinement rounds. The grid covers t1 in [0, pi/4)
// (dihedral symmetry of the Lp circle) and t2 - t1 in (0, pi].
LpSearchResult lp_linelike_search(double p, int n, int grid_resolution,
                                  int threads = 1);

struct LpFreeSearchResult {
  double p = 0;
  int n = 0;
  double coarse_min = 0; // over the coarse grid, degenerate cells skipped
  std::vector<double> coarse_angles;
  double refined_min = 0; // after local refinement around the coarse argmin
  std::vector<double> refined_angles;
};

// Free ansatz: unit steps in directions t_1..t_{n-1} (scale fixed to
// d_1 = 1). Cells with a nearly collinear triple or coincident points
// are excluded; refinement can crawl toward the excluded collinear
// valley, so the coarse minimum is the headline value.
LpFreeSearchResult lp_linelike_search_free(double p, int n,
                                           int grid_resolution);

// Shift-pattern check with tolerance for numeric constructions.
bool is_linelike_numeric_ordered(const NormSpec &norm,
                                 const std::vector<NumericPoint> &pts,
                                 double tol);

} // namespace crescent

#endif
