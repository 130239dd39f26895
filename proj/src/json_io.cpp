#include "crescent/json_io.hpp"

#include <fstream>

namespace crescent {

using json = nlohmann::json;

json scalar_to_json(const ExactScalar &s) {
  return json{{"a", rational_to_string(s.rat_part())},
              {"b", rational_to_string(s.sqrt3_part())}};
}

ExactScalar scalar_from_json(const json &j) {
  if (j.is_string())
    return ExactScalar(parse_rational(j.get<std::string>()));
  if (j.is_number_integer())
    return ExactScalar(make_rational(j.get<long>()));
  if (!j.is_object())
    throw std::invalid_argument("scalar must be an object or string");
  Rational a(0), b(0);
  if (j.contains("a"))
    a = parse_rational(j.at("a").get<std::string>());
  if (j.contains("b"))
    b = parse_rational(j.at("b").get<std::string>());
  return ExactScalar(a, b);
}

json point_to_json(const Point &p) {
  return json::array({scalar_to_json(p.x), scalar_to_json(p.y)});
}

Point point_from_json(const json &j) {
  if (!j.is_array() || j.size() != 2)
    throw std::invalid_argument("point must be a two-element array");
  return Point(scalar_from_json(j[0]), scalar_from_json(j[1]));
}

json norm_to_json(const NormSpec &norm) {
  switch (norm.kind()) {
  case NormKind::L1:
    return "l1";
  case NormKind::L2:
    return "l2";
  case NormKind::Linf:
    return "linf";
  case NormKind::Lp:
    return json{{"lp", norm.p()}};
  case NormKind::Polygonal: {
    json verts = json::array();
    for (const Point &v : norm.vertices())
      verts.push_back(point_to_json(v));
    return json{{"polygon", verts}};
  }
  }
  throw std::logic_error("unreachable");
}

NormSpec norm_from_json(const json &j) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "l1")
      return NormSpec::l1();
    if (s == "l2")
      return NormSpec::l2();
    if (s == "linf")
      return NormSpec::linf();
    throw std::invalid_argument("unknown norm name: " + s);
  }
  if (j.is_object() && j.contains("lp"))
    return NormSpec::lp(j.at("lp").get<double>());
  if (j.is_object() && j.contains("polygon")) {
    std::vector<Point> verts;
    for (const auto &v : j.at("polygon"))
      verts.push_back(point_from_json(v));
    return NormSpec::polygonal(std::move(verts));
  }
  throw std::invalid_argument("unrecognized norm description");
}

json configuration_to_json(const Configuration &cfg) {
  json pts = json::array();
  for (const Point &p : cfg.points)
    pts.push_back(point_to_json(p));
  return json{{"norm", norm_to_json(cfg.norm)}, {"points", pts}};
}

Configuration configuration_from_json(const json &j) {
  if (!j.is_object() || !j.contains("points"))
    throw std::invalid_argument("configuration needs a points array");
  NormSpec norm = j.contains("norm") ? norm_from_json(j.at("norm"))
                                     : NormSpec::linf();
  std::vector<Point> pts;
  for (const auto &p : j.at("points"))
    pts.push_back(point_from_json(p));
  return Configuration(std::move(pts), norm);
}

NormSpec norm_from_flag(const std::string &flag) {
  if (flag == "l1")
    return NormSpec::l1();
  if (flag == "l2")
    return NormSpec::l2();
  if (flag == "linf")
    return NormSpec::linf();
  if (flag.rfind("lp:", 0) == 0)
    return NormSpec::lp(std::stod(flag.substr(3)));
  if (flag.rfind("polygon:", 0) == 0) {
    const std::string path = flag.substr(8);
    std::ifstream in(path);
    if (!in.good())
      throw std::invalid_argument("cannot read polygon file: " + path);
    json j = json::parse(in);
    std::vector<Point> verts;
    for (const auto &v : j)
      verts.push_back(point_from_json(v));
    return NormSpec::polygonal(std::move(verts));
  }
  throw std::invalid_argument("unknown norm flag: " + flag);
}

json distance_to_json(const DistanceValue &d) {
  return json{{"value", scalar_to_json(d.value)},
              {"squared", d.squared},
              {"approx", d.value.to_double()}};
}

json multiset_to_json(const DistanceMultiset &m) {
  json arr = json::array();
  for (const auto &[d, count] : m)
    arr.push_back(json{{"distance", distance_to_json(d)}, {"count", count}});
  return arr;
}

json violation_to_json(const Violation &v) {
  json j;
  switch (v.kind) {
  case Violation::Kind::none:
    j["kind"] = "none";
    break;
  case Violation::Kind::collinear:
    j["kind"] = "collinear_triple";
    break;
  case Violation::Kind::concyclic:
    j["kind"] = "concyclic_quadruple";
    break;
  case Violation::Kind::linelike_four:
    j["kind"] = "linelike_four_subset";
    break;
  }
  j["indices"] = v.indices;
  if (v.circle) {
    j["circle"] = {{"center", point_to_json(v.circle->center)},
                   {"radius", distance_to_json(v.circle->radius)}};
  }
  return j;
}

} // namespace crescent
