#include "crescent/svg.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace crescent {

namespace {

const char *kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                          "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
                          "#bcbd22", "#17becf"};

} // namespace

std::string render_distance_graph_svg(const Configuration &cfg) {
  const int n = static_cast<int>(cfg.size());
  if (n == 0)
    throw std::invalid_argument("empty configuration");

  std::vector<std::pair<double, double>> xy;
  double minx = 1e300, maxx = -1e300, miny = 1e300, maxy = -1e300;
  for (const Point &p : cfg.points) {
    const double x = p.x.to_double(), y = p.y.to_double();
    xy.push_back({x, y});
    minx = std::min(minx, x);
    maxx = std::max(maxx, x);
    miny = std::min(miny, y);
    maxy = std::max(maxy, y);
  }
  const double span = std::max({maxx - minx, maxy - miny, 1e-9});
  const double size = 640.0, margin = 40.0;
  const double scale = (size - 2 * margin) / span;
  auto sx = [&](double x) { return margin + (x - minx) * scale; };
  auto sy = [&](double y) { return size - margin - (y - miny) * scale; };

  // distance classes in increasing order
  std::map<DistanceValue, int> classes;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      classes[distance(cfg.norm, cfg.points[i], cfg.points[j])] = 0;
  int next_id = 0;
  for (auto &[d, id] : classes)
    id = next_id++;

  std::ostringstream os;
  os.precision(3);
  os << std::fixed;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
     << "width=\"" << size << "\" height=\"" << size << "\" viewBox=\"0 0 "
     << size << " " << size << "\">\n";
  os << "  <!-- distance graph: " << n << " points, "
     << n * (n - 1) / 2 << " edges, " << classes.size()
     << " distance classes -->\n";
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const int cls =
          classes[distance(cfg.norm, cfg.points[i], cfg.points[j])];
      os << "  <line class=\"edge dc" << cls << "\" x1=\"" << sx(xy[i].first)
         << "\" y1=\"" << sy(xy[i].second) << "\" x2=\"" << sx(xy[j].first)
         << "\" y2=\"" << sy(xy[j].second) << "\" stroke=\""
         << kPalette[cls % 10] << "\" stroke-width=\"2\"/>\n";
    }
  for (int i = 0; i < n; ++i)
    os << "  <circle class=\"pt\" cx=\"" << sx(xy[i].first) << "\" cy=\""
       << sy(xy[i].second) << "\" r=\"5\" fill=\"#000000\"/>\n";
  os << "</svg>\n";
  return os.str();
}

} // namespace crescent
