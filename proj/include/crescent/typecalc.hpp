#ifndef CRESCENT_TYPECALC_HPP
#define CRESCENT_TYPECALC_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "crescent/predicates.hpp"

namespace crescent {

// Step classification of an ordered pair in the Chebyshev norm: which
// coordinate dominates and with which signs. The four b-symbols are the
// diagonal (tied) steps.
enum class TypeSymbol : std::uint8_t {
  x,     // |dx| > |dy|, dx > 0
  xp,    // |dx| > |dy|, dx < 0
  y,     // |dy| > |dx|, dy > 0
  yp,    // |dy| > |dx|, dy < 0
  b_xy,  // |dx| = |dy|, dx > 0, dy > 0
  b_xpy, // dx < 0, dy > 0
  b_xpyp,
  b_xyp,
};

using TypeString = std::vector<TypeSymbol>;

inline bool symbol_free(TypeSymbol s) {
  return s == TypeSymbol::x || s == TypeSymbol::xp || s == TypeSymbol::y ||
         s == TypeSymbol::yp;
}

int free_variable_count(const TypeString &t);

// ASCII serialization: x X y Y for the free symbols, A B C D for
// b_xy, b_x'y, b_x'y', b_xy'.
char symbol_to_char(TypeSymbol s);
TypeSymbol symbol_from_char(char c);
std::string type_to_string(const TypeString &t);
TypeString type_from_string(const std::string &s);

TypeSymbol type_of_pair(const Point &p, const Point &q);
TypeString type_of_config(const std::vector<Point> &ordered_points);

// Free variables f_1..f_k, each with |f| < 1.
using FreeAssignment = std::vector<Rational>;

// Canonical coordinates of a type: p_1 = (0,0), each symbol adds its
// unit step, free symbols consume the next f. Throws on |f| >= 1 or a
// length mismatch.
std::vector<Point> coordinates_of_type(const TypeString &t,
                                       const FreeAssignment &f);

enum class TypeReflection { x_axis, y_axis, diag, reverse };

TypeString reflect_type(const TypeString &t, TypeReflection op);

// Closure of {t} under the three axis reflections and reversal; sorted,
// deduplicated. At most 16 strings.
std::vector<TypeString> reflection_orbit(const TypeString &t);

struct SampleOptions {
  // Cap on the full grid size (2*2^m - 1)^k; exceeding it throws
  // ResourceLimit before any work happens.
  double max_assignments = 2e8;
  // Enforce d_2 = 2 exactly on sampled configurations.
  bool require_d2_equal_2 = false;
  // Stop after the first witness.
  bool first_only = false;
};

// Exhaustive dyadic grid sampling: every f in {-1+step, .., 1-step}^k
// whose canonical coordinates form a line-like crescent configuration
// under the given ordering (and whose recomputed type equals t). The
// step must be 1/2^m with m >= 2. An empty result is a semi-decision:
// no witness at this resolution.
std::vector<FreeAssignment> realize_sample(const TypeString &t,
                                           const Rational &grid_step,
                                           const SampleOptions &opts = {});

struct Extension {
  TypeString symbols;
  FreeAssignment witness;
};

// All extensions of t by m symbols that realize, each with one witness.
std::vector<Extension> extend_sample(const TypeString &t, int m,
                                     const Rational &grid_step,
                                     const SampleOptions &opts = {});

// Order distances of a realized type, as exact values.
std::vector<DistanceValue> type_order_distances(const TypeString &t,
                                                const FreeAssignment &f);

// ---- Lemma suite -------------------------------------------------------

struct ClaimResult {
  std::string name;
  bool expect_witnesses;     // positive control claims
  long long strings_checked; // claim strings after orbit expansion
  long long witnesses;
  std::string counterexample_type; // first violating string, if any
  FreeAssignment counterexample;
  bool holds;
};

struct LemmaReport {
  Rational grid_step;
  std::vector<ClaimResult> claims;
  bool all_hold = true;
};

// Samples every non-realizability / non-extendability claim of the
// forbidden-type catalogue (reflection orbits included) and the three
// positive all-diagonal controls.
LemmaReport verify_forbidden_types(const Rational &grid_step);

// Single claim runner, also used to invert claims in sanity tests:
// asserts that `t` has no realization; holds=false carries a witness.
ClaimResult run_emptiness_claim(const std::string &name, const TypeString &t,
                                const Rational &grid_step,
                                bool d2_filter = false);

// ---- Classification harness --------------------------------------------

struct StringVerdict {
  TypeString type;
  bool family_shortcut; // all steps share a coordinate direction, so
                        // every realization is a perturbation; only the
                        // first witness was materialized
  long long witnesses;
  long long nonperturbation_witnesses;
  std::optional<FreeAssignment> sample_witness;
  std::optional<FreeAssignment> sample_nonperturbation;
};

struct ClassificationReport {
  int n = 0;
  Rational grid_step;
  bool symmetry_reduced = false;
  long long strings_enumerated = 0;
  long long strings_pruned = 0;
  long long strings_realizable = 0;
  long long total_nonperturbation = 0;
  std::vector<StringVerdict> realizable;
};

// Enumerates type strings of length n-1 (optionally restricted to an
// alphabet subset), prunes by the forbidden-substring catalogue, samples
// the survivors on the dyadic grid and checks every witness against
// is_perpendicular_perturbation.
ClassificationReport
verify_classification(int n, const Rational &grid_step,
                      const std::vector<TypeSymbol> &alphabet = {});

} // namespace crescent

#endif
