#ifndef CRESCENT_SEARCH_HPP
#define CRESCENT_SEARCH_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "crescent/predicates.hpp"

namespace crescent {

enum class LatticeKind { square, triangular };

// Square: points (a, b) for 0 <= a < width, 0 <= b < height.
// Triangular: points (a + b/2, b*sqrt(3)/2), stored as the integer pair
// (a, b) and converted to exact plane coordinates on demand.
struct LatticeSpec {
  LatticeKind kind = LatticeKind::square;
  int width = 0;
  int height = 0;

  int point_count() const { return width * height; }
  Point plane_point(int a, int b) const;
};

enum class SearchMode { first, all, exhaustive_absence };

// `collinear_only` drops every constraint except the collinear-triple
// prune; it exists so tests can invert the harness and confirm that a
// weakened predicate produces hits.
enum class PruneProfile { full, collinear_only };

struct SearchParams {
  LatticeSpec lattice;
  NormSpec norm = NormSpec::linf();
  int target_size = 0;
  SearchMode mode = SearchMode::first;
  bool symmetry_reduction = true;
  int thread_count = 1;
  std::string checkpoint_path; // empty: no checkpointing
  long long node_cap = 0;      // 0: unlimited; CRESCENT_NODE_CAP overrides
  long long max_units = 0;     // 0: all; otherwise stop after this many
                               // work units (partial, checkpoint-resumable)
  PruneProfile prune_profile = PruneProfile::full;
};

struct PruneCounters {
  long long collinear = 0;
  long long multiplicity = 0;
  long long linelike_four = 0;
  long long concyclic = 0;
  long long symmetry = 0;

  PruneCounters &operator+=(const PruneCounters &o) {
    collinear += o.collinear;
    multiplicity += o.multiplicity;
    linelike_four += o.linelike_four;
    concyclic += o.concyclic;
    symmetry += o.symmetry;
    return *this;
  }
};

using LatticePoints = std::vector<std::array<int, 2>>;

struct SearchResult {
  // Canonical forms, deduplicated and sorted; every entry re-verified
  // with the exact predicates.
  std::vector<LatticePoints> canonical;
  std::vector<Configuration> configurations; // same sets, plane coordinates
  long long raw_hits = 0;                    // before canonical dedup
  long long nodes_expanded = 0;
  long long units_total = 0;
  long long units_done = 0;
  bool complete = true; // false when max_units cut the run short
  PruneCounters prunes;
  double wall_seconds = 0;
};

// Lexicographically minimal representative over the lattice symmetry
// group (dihedral of order 8 for the square lattice, 12 for the
// triangular one) combined with lattice translations.
LatticePoints canonicalize_lattice(LatticePoints pts, LatticeKind kind);

// Same, for a configuration whose points must lie on the lattice;
// throws std::invalid_argument otherwise.
Configuration canonicalize(const Configuration &cfg,
                           const LatticeSpec &lattice);

SearchResult search(const SearchParams &params);

// Exhaustive-absence convenience wrapper; requires mode ==
// exhaustive_absence and returns the full proof-of-search statistics.
SearchResult verify_absence(const SearchParams &params);

} // namespace crescent

#endif
