#ifndef CRESCENT_ERRORS_HPP
#define CRESCENT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace crescent {

// Exact predicates refuse norms without an exact arithmetic path (Lp).
struct UnsupportedExactNorm : std::runtime_error {
  explicit UnsupportedExactNorm(const std::string &what)
      : std::runtime_error(what) {}
};

// Requested an ordering-dependent quantity of a non-line-like ordering.
struct NotLineLike : std::runtime_error {
  explicit NotLineLike(const std::string &what) : std::runtime_error(what) {}
};

// A segment-based construction was asked of a strictly convex norm.
struct StrictlyConvexNorm : std::runtime_error {
  explicit StrictlyConvexNorm(const std::string &what)
      : std::runtime_error(what) {}
};

// Enumeration or search exceeded its configured budget.
struct ResourceLimit : std::runtime_error {
  explicit ResourceLimit(const std::string &what) : std::runtime_error(what) {}
};

struct CheckpointFormatError : std::runtime_error {
  explicit CheckpointFormatError(const std::string &what)
      : std::runtime_error(what) {}
};

} // namespace crescent

#endif
