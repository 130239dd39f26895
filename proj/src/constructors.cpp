#include "crescent/constructors.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <thread>

namespace crescent {

namespace {

constexpr double kPi = 3.14159265358979323846;

void require_segment_norm(const NormSpec &norm) {
  if (norm.strictly_convex())
    throw StrictlyConvexNorm(
        "unit circle of " + norm.name() + " contains no line segment");
}

} // namespace

Configuration build_segment_norm_linelike(const NormSpec &norm, int n,
                                          const std::vector<Rational> &choices,
                                          int segment_index,
                                          const Point &start) {
  require_segment_norm(norm);
  if (n < 2)
    throw std::invalid_argument("need n >= 2");
  const auto segs = unit_circle_segments(norm);
  if (segs.empty())
    throw StrictlyConvexNorm("no unit circle segments");
  if (segment_index < 0 || segment_index >= static_cast<int>(segs.size()))
    throw std::invalid_argument("segment index out of range");
  if (static_cast<int>(choices.size()) != n - 1)
    throw std::invalid_argument("need n - 1 segment positions");
  const Segment seg = segs[segment_index];
  std::vector<Point> pts{start};
  for (int i = 0; i < n - 1; ++i) {
    const Rational &t = choices[i];
    if (sgn(t) < 0 || cmp(t, 1) > 0)
      throw std::invalid_argument("segment positions must lie in [0, 1]");
    const ExactScalar ts{t};
    Point step = seg.a + ts * (seg.b - seg.a);
    pts.push_back(pts.back() + step);
  }
  Configuration cfg(pts, norm);
  if (!is_linelike_ordered(norm, pts))
    throw std::logic_error("segment construction failed line-like check");
  return cfg;
}

Configuration build_segment_norm_linelike(const NormSpec &norm, int n,
                                          std::uint64_t seed) {
  require_segment_norm(norm);
  if (n < 2)
    throw std::invalid_argument("need n >= 2");
  const auto segs = unit_circle_segments(norm);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> seg_pick(0,
                                              static_cast<int>(segs.size()) -
                                                  1);
  const Segment seg = segs[seg_pick(rng)];
  constexpr long kGrid = 1 << 12;
  std::uniform_int_distribution<long> pos(0, kGrid);

  std::vector<Point> pts{Point(0, 0)};
  for (int i = 1; i < n; ++i) {
    bool placed = false;
    for (int attempt = 0; attempt < 256 && !placed; ++attempt) {
      const ExactScalar t{make_rational(pos(rng), kGrid)};
      Point cand = pts.back() + seg.a + t * (seg.b - seg.a);
      bool bad = false;
      for (size_t a = 0; a < pts.size() && !bad; ++a)
        for (size_t b = a + 1; b < pts.size() && !bad; ++b)
          if (collinear3(pts[a], pts[b], cand))
            bad = true;
      if (!bad) {
        pts.push_back(cand);
        placed = true;
      }
    }
    if (!placed)
      throw ResourceLimit("could not avoid collinear triples");
  }
  Configuration cfg(pts, norm);
  if (!is_linelike_ordered(norm, pts))
    throw std::logic_error("segment construction failed line-like check");
  return cfg;
}

bool is_linelike_numeric_ordered(const NormSpec &norm,
                                 const std::vector<NumericPoint> &pts,
                                 double tol) {
  const int n = static_cast<int>(pts.size());
  if (n < 2)
    return false;
  std::vector<double> dg(n, 0.0);
  for (int g = 1; g < n; ++g) {
    dg[g] = distance_numeric(norm, pts[g][0] - pts[0][0],
                             pts[g][1] - pts[0][1]);
    if (dg[g] <= tol)
      return false;
    for (int i = 1; i + g < n; ++i) {
      const double d = distance_numeric(norm, pts[i + g][0] - pts[i][0],
                                        pts[i + g][1] - pts[i][1]);
      if (std::fabs(d - dg[g]) > tol)
        return false;
    }
  }
  for (int g = 1; g < n; ++g)
    for (int h = g + 1; h < n; ++h)
      if (std::fabs(dg[g] - dg[h]) <= tol)
        return false;
  return true;
}

std::vector<NumericPoint> build_arc_linelike(int n, double epsilon,
                                             double theta1, double theta2,
                                             double radius, double tol) {
  if (n < 2)
    throw std::invalid_argument("need n >= 2");
  if (!(0.0 <= theta1 && theta1 < theta2 && theta2 <= kPi))
    throw std::invalid_argument("need 0 <= theta1 < theta2 <= pi");
  if (n > 2 &&
      !(epsilon >= 0.0 && epsilon <= (theta2 - theta1) / (n - 2) + 1e-15))
    throw std::invalid_argument("epsilon out of range");
  std::vector<NumericPoint> pts;
  pts.push_back({radius * std::cos(theta1), radius * std::sin(theta1)});
  for (int i = 2; i <= n; ++i) {
    const double ang = theta1 + (i - 2) * epsilon;
    const auto &prev = pts.back();
    pts.push_back({prev[0] + std::cos(ang), prev[1] + std::sin(ang)});
  }
  if (!is_linelike_numeric_ordered(NormSpec::l2(), pts, tol))
    throw std::domain_error(
        "arc construction degenerated (chord lengths collide)");
  return pts;
}

namespace {

Configuration verified_strong_crescent(std::vector<Point> pts,
                                       const NormSpec &norm,
                                       const char *what) {
  Configuration cfg(std::move(pts), norm);
  if (!is_strong_crescent(cfg))
    throw std::logic_error(std::string(what) +
                           ": construction failed verification");
  return cfg;
}

} // namespace

Configuration build_crescent4(const NormSpec &norm) {
  switch (norm.kind()) {
  case NormKind::Linf:
    // The corner construction cannot work here: three points of the unit
    // square boundary at pairwise distances below 1 always land, together
    // with the center, on the boundary of a common axis-aligned unit box,
    // so condition "no four on a common circle" fails for every choice.
    // A verified lattice configuration stands in.
    return verified_strong_crescent(
        {Point(0, 0), Point(0, 1), Point(1, 1), Point(1, 3)}, norm,
        "build_crescent4[linf]");
  case NormKind::L1:
    // Duality image of the Linf set; same obstruction applies.
    return verified_strong_crescent(
        {Point(0, 0), Point(1, -1), Point(2, 0), Point(4, -2)}, norm,
        "build_crescent4[l1]");
  case NormKind::L2: {
    // D at the center, A, B, C on the unit circle with B = A rotated by
    // the rational rotation (15/17, 8/17) and C = B rotated again:
    // |AB| = |BC| by isometry, and |AC| = 16/17 < 1 lands between.
    const Rational s17(15, 17), c17(8, 17);
    std::vector<Point> pts{
        Point(1, 0),
        Point(ExactScalar(s17), ExactScalar(c17)),
        Point(ExactScalar(Rational(161, 289)), ExactScalar(Rational(240, 289))),
        Point(0, 0)};
    return verified_strong_crescent(std::move(pts), norm,
                                    "build_crescent4[l2]");
  }
  case NormKind::Polygonal: {
    // Three boundary points clustered near a vertex of the unit circle
    // plus the center. Candidate placements must dodge a family of real
    // obstructions; in particular the half-radius circle centered at
    // B/2 always passes through the center and B, and sweeps up any
    // companion point sitting within half an edge of B. Both a
    // symmetric corner placement and an asymmetric one that straddles
    // the vertex are tried, each verified exactly before returning.
    const auto &verts = norm.vertices();
    const int nv = static_cast<int>(verts.size());
    const ExactScalar one(1);
    auto try_config = [&](const Point &a, const Point &b,
                          const Point &c) -> std::optional<Configuration> {
      const ExactScalar ab = gauge(norm, b - a), bc = gauge(norm, c - b);
      const ExactScalar ac = gauge(norm, c - a);
      if (ab != bc || !(ab < ac) || !(ac < one))
        return std::nullopt;
      Configuration cfg({a, b, c, Point(0, 0)}, norm);
      if (!is_strong_crescent(cfg))
        return std::nullopt;
      return cfg;
    };
    const Rational fractions[] = {Rational(1, 2), Rational(3, 4),
                                  Rational(7, 8), Rational(1, 4),
                                  Rational(5, 12), Rational(2, 5)};
    for (int vi = 0; vi < nv; ++vi) {
      const Point &b = verts[vi];
      const Point &prev = verts[(vi + nv - 1) % nv];
      const Point &next = verts[(vi + 1) % nv];
      const ExactScalar len1 = gauge(norm, prev - b);
      const ExactScalar len2 = gauge(norm, next - b);
      const Point w1{(prev.x - b.x) / len1, (prev.y - b.y) / len1};
      const Point w2{(next.x - b.x) / len2, (next.y - b.y) / len2};
      const ExactScalar g = gauge(norm, w2 - w1);
      if (g > one) {
        const ExactScalar cap = std::min(std::min(len1, len2), g.inverse());
        for (const Rational &f : fractions) {
          const ExactScalar s = cap * ExactScalar(f);
          if (auto cfg = try_config(b + s * w1, b, b + s * w2))
            return *cfg;
        }
      }
      // Straddle the vertex: B sits on the previous edge at distance u
      // short of it, A a further s behind B, C just past the vertex.
      for (const Rational &sfrac :
           {Rational(5, 12), Rational(2, 5), Rational(3, 7)}) {
        const ExactScalar s = ExactScalar(sfrac) * std::min(len1, one);
        for (const Rational &ufrac :
             {Rational(3, 5), Rational(1, 2), Rational(4, 5)}) {
          const ExactScalar u = s * ExactScalar(ufrac);
          const ExactScalar v = s - u;
          if (!(u + s <= len1) || !(v <= len2))
            continue;
          const Point bb = b + u * w1;
          const Point a = b + (u + s) * w1;
          const Point c = b + v * w2;
          if (auto cfg = try_config(a, bb, c))
            return *cfg;
        }
      }
    }
    throw std::domain_error(
        "build_crescent4: no verified placement on this polygon");
  }
  case NormKind::Lp:
    throw UnsupportedExactNorm(
        "build_crescent4: use build_crescent4_numeric for Lp norms");
  }
  throw std::logic_error("unreachable");
}

namespace {

NumericPoint lp_circle_point(double p, double t) {
  const double c = std::cos(t), s = std::sin(t);
  const double x = std::copysign(std::pow(std::fabs(c), 2.0 / p), c);
  const double y = std::copysign(std::pow(std::fabs(s), 2.0 / p), s);
  return {x, y};
}

double lp_dist(double p, const NumericPoint &a, const NumericPoint &b) {
  return std::pow(std::pow(std::fabs(a[0] - b[0]), p) +
                      std::pow(std::fabs(a[1] - b[1]), p),
                  1.0 / p);
}

} // namespace

std::vector<NumericPoint> build_crescent4_numeric(double p, double tol) {
  if (!(p > 1.0) || std::isinf(p))
    throw std::invalid_argument("need finite p > 1");
  for (double delta : {0.5, 0.4, 0.3, 0.25, 0.2, 0.15}) {
    NumericPoint a = lp_circle_point(p, kPi / 4 - delta);
    NumericPoint b = lp_circle_point(p, kPi / 4);
    NumericPoint c = {a[1], a[0]}; // reflection across the diagonal
    NumericPoint d = {0.0, 0.0};
    const double s1 = lp_dist(p, a, b), s2 = lp_dist(p, b, c);
    const double t_ac = lp_dist(p, a, c);
    if (std::fabs(s1 - s2) > tol)
      continue;
    if (!(s1 + 1e-6 < t_ac && t_ac + 1e-6 < 1.0))
      continue;
    const double cr = (b[0] - a[0]) * (c[1] - a[1]) -
                      (b[1] - a[1]) * (c[0] - a[0]);
    if (std::fabs(cr) < 1e-9)
      continue;
    return {a, b, c, d};
  }
  throw std::domain_error("build_crescent4_numeric: no suitable delta");
}

Configuration example_perturbed_line(int n) {
  if (n < 2)
    throw std::invalid_argument("need n >= 2");
  std::vector<Point> pts;
  for (int i = 1; i <= n; ++i)
    pts.emplace_back(ExactScalar(Rational(i)),
                     ExactScalar(Rational(1, i)));
  return Configuration(std::move(pts), NormSpec::linf());
}

Configuration example_staircase(int n, const Rational &a) {
  if (n < 2)
    throw std::invalid_argument("need n >= 2");
  if (sgn(a) <= 0 || cmp(a, 1) >= 0)
    throw std::invalid_argument("need 0 < a < 1");
  const ExactScalar ea{a};
  std::vector<Point> pts;
  for (int i = 0; i < n; ++i) {
    const long k = i / 2;
    ExactScalar base = ExactScalar(k) * (ExactScalar(1) + ea);
    if (i % 2 == 0)
      pts.emplace_back(base, base);
    else
      pts.emplace_back(base + ExactScalar(1), base + ea);
  }
  return Configuration(std::move(pts), NormSpec::linf());
}

Configuration example_counterexample(int type_len, const Rational &a,
                                     const Rational &b) {
  if (type_len < 2 || type_len > 5)
    throw std::invalid_argument("type length must be 2..5");
  if (sgn(a) <= 0 || cmp(a, b) >= 0 || cmp(b, 1) >= 0)
    throw std::invalid_argument("need 0 < a < b < 1");
  const ExactScalar ea{a}, eb{b};
  const ExactScalar one(1);
  std::vector<Point> pts{Point(0, 0)};
  auto step = [&pts](const ExactScalar &dx, const ExactScalar &dy) {
    pts.push_back(pts.back() + Point(dx, dy));
  };
  // Alternating x / y steps; sizes 3 and 4 use the single parameter a,
  // sizes 5 and 6 interleave a and b as printed.
  switch (type_len) {
  case 2: // xy
    step(one, ea);
    step(ea, one);
    break;
  case 3: // xyx
    step(one, ea);
    step(ea, one);
    step(one, ea);
    break;
  case 4: // xyxy
    step(one, ea);
    step(eb, one);
    step(one, eb);
    step(ea, one);
    break;
  case 5: // xyxyx
    step(one, ea);
    step(eb, one);
    step(one, eb);
    step(eb, one);
    step(one, ea);
    break;
  }
  return Configuration(std::move(pts), NormSpec::linf());
}

double lp_discrepancy(const std::vector<NumericPoint> &pts, double p,
                      bool normalized) {
  const int n = static_cast<int>(pts.size());
  if (n < 2)
    return 0.0;
  double worst = 0.0;
  for (int g = 1; g < n; ++g) {
    const double ref = lp_dist(p, pts[0], pts[g]);
    for (int i = 1; i + g < n; ++i)
      worst = std::max(worst, std::fabs(lp_dist(p, pts[i], pts[i + g]) - ref));
  }
  if (normalized)
    worst /= lp_dist(p, pts[0], pts[1]);
  return worst;
}

namespace {

// Next chain angle: smallest t > prev with d(f(t), f(prev)) = d1, found
// by walking until the chord reaches d1 and bisecting.
bool next_chain_angle(double p, double prev, double d1, double walk_step,
                      double *out) {
  const NumericPoint fp = lp_circle_point(p, prev);
  auto chord = [&](double t) { return lp_dist(p, lp_circle_point(p, t), fp); };
  double lo = prev, hi = prev;
  bool bracketed = false;
  for (int k = 0; k < 512; ++k) {
    hi += walk_step;
    if (hi > prev + 1.25 * kPi)
      break;
    if (chord(hi) >= d1) {
      bracketed = true;
      break;
    }
    lo = hi;
  }
  if (!bracketed)
    return false;
  for (int it = 0; it < 80; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (chord(mid) < d1)
      lo = mid;
    else
      hi = mid;
  }
  *out = 0.5 * (lo + hi);
  return true;
}

double chain_discrepancy(double p, int n, double t1, double dt) {
  std::vector<NumericPoint> pts;
  pts.push_back(lp_circle_point(p, t1));
  pts.push_back(lp_circle_point(p, t1 + dt));
  const double d1 = lp_dist(p, pts[0], pts[1]);
  if (d1 < 1e-9)
    return std::numeric_limits<double>::infinity();
  double t_prev = t1 + dt;
  for (int i = 2; i < n; ++i) {
    double t_next;
    if (!next_chain_angle(p, t_prev, d1, std::max(dt / 4, 1e-4), &t_next))
      return std::numeric_limits<double>::infinity();
    pts.push_back(lp_circle_point(p, t_next));
    t_prev = t_next;
  }
  return lp_discrepancy(pts, p, true);
}

} // namespace

LpSearchResult lp_linelike_search(double p, int n, int grid_resolution,
                                  int threads) {
  if (!(p > 1.0) || std::isinf(p))
    throw std::invalid_argument("need finite p > 1");
  if (n < 4)
    throw std::invalid_argument("need n >= 4");
  if (grid_resolution < 16)
    throw std::invalid_argument("grid resolution too small");

  const int n1 = std::max(grid_resolution / 8, 2); // t1 in [0, pi/4)
  const int n2 = std::max(grid_resolution / 2, 4); // dt in (0, pi]
  const double s1 = (kPi / 4) / n1;
  const double s2 = kPi / n2;

  struct Best {
    double disc = std::numeric_limits<double>::infinity();
    double t1 = 0, dt = 0;
  };
  auto better = [](const Best &a, const Best &b) {
    if (a.disc != b.disc)
      return a.disc < b.disc;
    if (a.t1 != b.t1)
      return a.t1 < b.t1;
    return a.dt < b.dt;
  };

  const int nthreads = std::max(1, threads);
  std::vector<Best> partial(nthreads);
  auto worker = [&](int w) {
    Best best;
    for (int i = w; i < n1; i += nthreads) {
      const double t1 = i * s1;
      for (int j = 1; j <= n2; ++j) {
        const double dt = j * s2;
        const double disc = chain_discrepancy(p, n, t1, dt);
        Best cand{disc, t1, dt};
        if (better(cand, best))
          best = cand;
      }
    }
    partial[w] = best;
  };
  if (nthreads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < nthreads; ++w)
      pool.emplace_back(worker, w);
    for (auto &t : pool)
      t.join();
  }
  Best best;
  for (const auto &b : partial)
    if (better(b, best))
      best = b;

  // Local refinement by grid halving.
  double step1 = s1, step2 = s2;
  for (int round = 0; round < 3; ++round) {
    step1 *= 0.5;
    step2 *= 0.5;
    Best local = best;
    for (int di = -2; di <= 2; ++di)
      for (int dj = -2; dj <= 2; ++dj) {
        const double t1 = best.t1 + di * step1;
        const double dt = best.dt + dj * step2;
        if (t1 < 0 || dt <= 0)
          continue;
        Best cand{chain_discrepancy(p, n, t1, dt), t1, dt};
        if (better(cand, local))
          local = cand;
      }
    best = local;
  }

  return LpSearchResult{p, n, best.disc, best.t1, best.dt};
}

namespace {

bool free_cell_degenerate(const std::vector<NumericPoint> &pts) {
  const int n = static_cast<int>(pts.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const double dx = pts[j][0] - pts[i][0], dy = pts[j][1] - pts[i][1];
      if (std::fabs(dx) < 1e-9 && std::fabs(dy) < 1e-9)
        return true;
    }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        const double cr = (pts[j][0] - pts[i][0]) * (pts[k][1] - pts[i][1]) -
                          (pts[j][1] - pts[i][1]) * (pts[k][0] - pts[i][0]);
        if (std::fabs(cr) < 1e-9)
          return true;
      }
  return false;
}

double free_cell_discrepancy(double p, const std::vector<double> &angles) {
  std::vector<NumericPoint> pts{{0.0, 0.0}};
  for (double t : angles) {
    const NumericPoint f = lp_circle_point(p, t);
    pts.push_back({pts.back()[0] + f[0], pts.back()[1] + f[1]});
  }
  if (free_cell_degenerate(pts))
    return std::numeric_limits<double>::infinity();
  return lp_discrepancy(pts, p, true);
}

} // namespace

LpFreeSearchResult lp_linelike_search_free(double p, int n,
                                           int grid_resolution) {
  if (!(p > 1.0) || std::isinf(p))
    throw std::invalid_argument("need finite p > 1");
  if (n < 3)
    throw std::invalid_argument("need n >= 3");
  if (grid_resolution < 8)
    throw std::invalid_argument("grid resolution too small");
  const int k = n - 1;
  const double step = 2 * kPi / grid_resolution;
  // First angle restricted to [0, pi/4] by the dihedral symmetry of the
  // Lp ball; remaining angles sweep the full circle.
  const int first_cells = grid_resolution / 8 + 1;

  std::vector<double> angles(k, 0.0);
  std::vector<int> idx(k, 0);
  LpFreeSearchResult out;
  out.p = p;
  out.n = n;
  out.coarse_min = std::numeric_limits<double>::infinity();

  while (true) {
    for (int i = 0; i < k; ++i)
      angles[i] = idx[i] * step;
    const double disc = free_cell_discrepancy(p, angles);
    if (disc < out.coarse_min) {
      out.coarse_min = disc;
      out.coarse_angles = angles;
    }
    int i = k - 1;
    while (i >= 0) {
      const int limit = (i == 0) ? first_cells : grid_resolution;
      if (++idx[i] < limit)
        break;
      idx[i] = 0;
      --i;
    }
    if (i < 0)
      break;
  }

  out.refined_min = out.coarse_min;
  out.refined_angles = out.coarse_angles;
  double local_step = step;
  for (int round = 0; round < 3; ++round) {
    local_step *= 0.5;
    const std::vector<double> base = out.refined_angles;
    std::vector<int> off(k, -1);
    while (true) {
      std::vector<double> cand = base;
      for (int i = 0; i < k; ++i)
        cand[i] += off[i] * local_step;
      const double disc = free_cell_discrepancy(p, cand);
      if (disc < out.refined_min) {
        out.refined_min = disc;
        out.refined_angles = cand;
      }
      int i = k - 1;
      while (i >= 0 && ++off[i] > 1)
        off[i--] = -1;
      if (i < 0)
        break;
    }
  }
  return out;
}

} // namespace crescent
