#ifndef CRESCENT_JSON_IO_HPP
#define CRESCENT_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "crescent/predicates.hpp"

namespace crescent {

// Wire formats. A scalar is {"a": "p/q", "b": "r/s"} meaning
// p/q + (r/s)*sqrt(3); rationals travel as strings to stay exact. A
// point is [scalar, scalar]. A configuration is
// {"norm": <norm>, "points": [point, ...]} where <norm> is "l1" | "l2" |
// "linf" | {"lp": p} | {"polygon": [point, ...]}.

nlohmann::json scalar_to_json(const ExactScalar &s);
ExactScalar scalar_from_json(const nlohmann::json &j);

nlohmann::json point_to_json(const Point &p);
Point point_from_json(const nlohmann::json &j);

nlohmann::json norm_to_json(const NormSpec &norm);
NormSpec norm_from_json(const nlohmann::json &j);

nlohmann::json configuration_to_json(const Configuration &cfg);
Configuration configuration_from_json(const nlohmann::json &j);

// Command-line norm flags: "l1", "l2", "linf", "lp:<p>", "polygon:<file>"
// (the file holds a JSON list of points).
NormSpec norm_from_flag(const std::string &flag);

nlohmann::json distance_to_json(const DistanceValue &d);
nlohmann::json multiset_to_json(const DistanceMultiset &m);
nlohmann::json violation_to_json(const Violation &v);

} // namespace crescent

#endif
