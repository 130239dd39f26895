#ifndef CRESCENT_SVG_HPP
#define CRESCENT_SVG_HPP

#include <string>

#include "crescent/predicates.hpp"

namespace crescent {

// Distance-graph rendering: one circle per point, one line per point
// pair, lines colored and css-classed ("dc0", "dc1", ...) by distance
// class in increasing distance order. Layout is determined by the
// coordinates alone, so output is deterministic.
std::string render_distance_graph_svg(const Configuration &cfg);

} // namespace crescent

#endif
