#include "crescent/predicates.hpp"

#include <algorithm>
#include <stdexcept>

#include "crescent/feasibility.hpp"

namespace crescent {

Configuration::Configuration(std::vector<Point> pts, NormSpec n)
    : points(std::move(pts)), norm(std::move(n)) {
  for (size_t i = 0; i < points.size(); ++i)
    for (size_t j = i + 1; j < points.size(); ++j)
      if (points[i] == points[j])
        throw std::invalid_argument("configuration points must be distinct");
}

bool collinear3(const Point &p, const Point &q, const Point &r) {
  return cross(q - p, r - p).is_zero();
}

namespace {

void require_exact(const NormSpec &norm, const char *op) {
  if (!norm.exact())
    throw UnsupportedExactNorm(std::string(op) +
                               ": no exact arithmetic for norm " + norm.name());
}

// ---- L2 concyclicity -------------------------------------------------

// Circumcircle of three non-collinear points, from the perpendicular
// bisector equations 2 (Pj - P1) . c = |Pj|^2 - |P1|^2.
NormCircle circumcircle_l2(const Point &p1, const Point &p2, const Point &p3) {
  const ExactScalar ax = p2.x - p1.x, ay = p2.y - p1.y;
  const ExactScalar bx = p3.x - p1.x, by = p3.y - p1.y;
  const ExactScalar ra =
      (p2.x * p2.x + p2.y * p2.y - p1.x * p1.x - p1.y * p1.y);
  const ExactScalar rb =
      (p3.x * p3.x + p3.y * p3.y - p1.x * p1.x - p1.y * p1.y);
  const ExactScalar det = ExactScalar(2) * (ax * by - ay * bx);
  Point c{(ra * by - rb * ay) / det, (ax * rb - bx * ra) / det};
  const Point d = p1 - c;
  return NormCircle{c, {d.x * d.x + d.y * d.y, true}, NormSpec::l2()};
}

std::optional<NormCircle> concyclic4_l2(const Point &p1, const Point &p2,
                                        const Point &p3, const Point &p4) {
  const Point pts[4] = {p1, p2, p3, p4};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      for (int k = j + 1; k < 4; ++k)
        if (collinear3(pts[i], pts[j], pts[k]))
          return std::nullopt; // degenerate: no finite circle
  // Concyclicity determinant | x y x^2+y^2 1 |, reduced by subtracting
  // the last row.
  ExactScalar m[3][3];
  for (int i = 0; i < 3; ++i) {
    m[i][0] = pts[i].x - p4.x;
    m[i][1] = pts[i].y - p4.y;
    m[i][2] = (pts[i].x * pts[i].x + pts[i].y * pts[i].y) -
              (p4.x * p4.x + p4.y * p4.y);
  }
  const ExactScalar det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                          m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                          m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  if (!det.is_zero())
    return std::nullopt;
  return circumcircle_l2(p1, p2, p3);
}

// ---- Linf / L1 concyclicity ------------------------------------------

std::optional<NormCircle> concyclic4_linf(const Point &p1, const Point &p2,
                                          const Point &p3, const Point &p4) {
  std::array<XY<ExactScalar>, 4> pts{{{p1.x, p1.y},
                                      {p2.x, p2.y},
                                      {p3.x, p3.y},
                                      {p4.x, p4.y}}};
  auto sq = common_chebyshev_circle(pts);
  if (!sq)
    return std::nullopt;
  const ExactScalar half = ExactScalar(Rational(1, 2));
  Point center{sq->left + half * sq->side, sq->bottom + half * sq->side};
  return NormCircle{center, {half * sq->side, false}, NormSpec::linf()};
}

std::optional<NormCircle> concyclic4_l1(const Point &p1, const Point &p2,
                                        const Point &p3, const Point &p4) {
  // T = (x+y, x-y) carries L1 distances to Linf distances, so S lies on a
  // common L1 circle iff T(S) lies on a common Linf circle of the same
  // radius, centered at T(center).
  auto img = concyclic4_linf(duality_transform(p1), duality_transform(p2),
                             duality_transform(p3), duality_transform(p4));
  if (!img)
    return std::nullopt;
  const ExactScalar half = ExactScalar(Rational(1, 2));
  Point center{half * (img->center.x + img->center.y),
               half * (img->center.x - img->center.y)};
  return NormCircle{center, img->radius, NormSpec::l1()};
}

// ---- Polygonal concyclicity ------------------------------------------
//
// Unknowns z = (cx, cy, r). A point P assigned to edge [a, b] of the
// unit polygon satisfies (P - c) / r on that edge:
//   equality    e.y cx - e.x cy - cross(e, a) r = -cross(e, P),  e = b - a
//   in-segment  cross(a, P - c) >= 0 and cross(P - c, b) >= 0
// plus r > 0. Equalities are solved by Gaussian elimination; the
// inequalities, projected onto the solution space, go through a small
// exact Fourier-Motzkin feasibility check.

struct IneqRow {
  std::vector<ExactScalar> a; // a . t <= rhs
  ExactScalar rhs;
  bool strict;
};

// Feasible point of a system of <=/< inequalitites in `dim` variables,
// by Fourier-Motzkin elimination of the last variable.
std::optional<std::vector<ExactScalar>>
feasible_point(const std::vector<IneqRow> &rows, int dim) {
  if (dim == 0) {
    for (const auto &r : rows) {
      const int s = r.rhs.sign();
      if (s < 0 || (s == 0 && r.strict))
        return std::nullopt;
    }
    return std::vector<ExactScalar>{};
  }
  const int k = dim - 1;
  std::vector<IneqRow> reduced;
  std::vector<const IneqRow *> uppers, lowers;
  for (const auto &r : rows) {
    const int s = r.a[k].sign();
    if (s == 0) {
      IneqRow copy = r;
      copy.a.resize(k);
      reduced.push_back(std::move(copy));
    } else if (s > 0) {
      uppers.push_back(&r);
    } else {
      lowers.push_back(&r);
    }
  }
  for (const auto *u : uppers)
    for (const auto *l : lowers) {
      IneqRow row;
      row.a.resize(k);
      const ExactScalar mu = -l->a[k]; // > 0
      const ExactScalar ml = u->a[k];  // > 0
      for (int i = 0; i < k; ++i)
        row.a[i] = mu * u->a[i] + ml * l->a[i];
      row.rhs = mu * u->rhs + ml * l->rhs;
      row.strict = u->strict || l->strict;
      reduced.push_back(std::move(row));
    }
  auto sub = feasible_point(reduced, k);
  if (!sub)
    return std::nullopt;
  // Bounds on variable k given the chosen values of the others.
  std::optional<ExactScalar> lo, hi;
  bool lo_strict = false, hi_strict = false;
  for (const auto &r : rows) {
    const int s = r.a[k].sign();
    if (s == 0)
      continue;
    ExactScalar rest = r.rhs;
    for (int i = 0; i < k; ++i)
      rest -= r.a[i] * (*sub)[i];
    ExactScalar bound = rest / r.a[k];
    if (s > 0) {
      if (!hi || bound < *hi) {
        hi = bound;
        hi_strict = r.strict;
      } else if (bound == *hi) {
        hi_strict = hi_strict || r.strict;
      }
    } else {
      if (!lo || bound > *lo) {
        lo = bound;
        lo_strict = r.strict;
      } else if (bound == *lo) {
        lo_strict = lo_strict || r.strict;
      }
    }
  }
  // Elimination already certified lo <= hi (strictly when either bound is
  // strict), so the midpoint is always admissible.
  ExactScalar v;
  const ExactScalar half(Rational(1, 2));
  if (lo && hi) {
    v = half * (*lo + *hi);
  } else if (lo) {
    v = lo_strict ? *lo + ExactScalar(1) : *lo;
  } else if (hi) {
    v = hi_strict ? *hi - ExactScalar(1) : *hi;
  } else {
    v = ExactScalar(0);
  }
  sub->push_back(v);
  return sub;
}

struct EqRow {
  std::array<ExactScalar, 3> a;
  ExactScalar rhs;
};

// Solves the equality system, substitutes into the inequalities and runs
// the feasibility search over the remaining degrees of freedom.
std::optional<std::array<ExactScalar, 3>>
solve_equalities_with_inequalities(std::vector<EqRow> eqs,
                                   const std::vector<IneqRow> &full_ineqs) {
  int pivot_col_of_row[3] = {-1, -1, -1};
  int rank = 0;
  for (int col = 0; col < 3; ++col) {
    int pivot = -1;
    for (size_t r = rank; r < eqs.size(); ++r)
      if (eqs[r].a[col].sign() != 0) {
        pivot = static_cast<int>(r);
        break;
      }
    if (pivot < 0)
      continue;
    std::swap(eqs[rank], eqs[pivot]);
    const ExactScalar p = eqs[rank].a[col];
    for (int c = 0; c < 3; ++c)
      eqs[rank].a[c] /= p;
    eqs[rank].rhs /= p;
    for (size_t r = 0; r < eqs.size(); ++r) {
      if (static_cast<int>(r) == rank)
        continue;
      const ExactScalar f = eqs[r].a[col];
      if (f.is_zero())
        continue;
      for (int c = 0; c < 3; ++c)
        eqs[r].a[c] -= f * eqs[rank].a[c];
      eqs[r].rhs -= f * eqs[rank].rhs;
    }
    pivot_col_of_row[rank] = col;
    ++rank;
  }
  for (size_t r = rank; r < eqs.size(); ++r)
    if (eqs[r].rhs.sign() != 0)
      return std::nullopt; // inconsistent

  bool is_pivot_col[3] = {false, false, false};
  for (int r = 0; r < rank; ++r)
    is_pivot_col[pivot_col_of_row[r]] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < 3; ++c)
    if (!is_pivot_col[c])
      free_cols.push_back(c);
  const int dim = static_cast<int>(free_cols.size());

  // Particular solution (free vars = 0) and kernel basis.
  std::array<ExactScalar, 3> z0{ExactScalar(0), ExactScalar(0),
                                ExactScalar(0)};
  for (int r = 0; r < rank; ++r)
    z0[pivot_col_of_row[r]] = eqs[r].rhs;
  std::vector<std::array<ExactScalar, 3>> kernel;
  for (int f : free_cols) {
    std::array<ExactScalar, 3> k{ExactScalar(0), ExactScalar(0),
                                 ExactScalar(0)};
    k[f] = ExactScalar(1);
    for (int r = 0; r < rank; ++r)
      k[pivot_col_of_row[r]] = -eqs[r].a[f];
    kernel.push_back(k);
  }

  std::vector<IneqRow> projected;
  for (const auto &iq : full_ineqs) {
    IneqRow row;
    row.a.resize(dim);
    for (int j = 0; j < dim; ++j) {
      ExactScalar c(0);
      for (int i = 0; i < 3; ++i)
        c += iq.a[i] * kernel[j][i];
      row.a[j] = c;
    }
    ExactScalar shift(0);
    for (int i = 0; i < 3; ++i)
      shift += iq.a[i] * z0[i];
    row.rhs = iq.rhs - shift;
    row.strict = iq.strict;
    projected.push_back(std::move(row));
  }
  auto t = feasible_point(projected, dim);
  if (!t)
    return std::nullopt;
  std::array<ExactScalar, 3> z = z0;
  for (int j = 0; j < dim; ++j)
    for (int i = 0; i < 3; ++i)
      z[i] += (*t)[j] * kernel[j][i];
  return z;
}

std::optional<NormCircle> concyclic4_polygonal(const NormSpec &norm,
                                               const Point &p1,
                                               const Point &p2,
                                               const Point &p3,
                                               const Point &p4) {
  const auto &verts = norm.vertices();
  const int ne = static_cast<int>(verts.size());
  const Point pts[4] = {p1, p2, p3, p4};

  std::vector<int> edge(4, 0);
  while (true) {
    std::vector<EqRow> eqs;
    std::vector<IneqRow> ineqs;
    for (int i = 0; i < 4; ++i) {
      const Point &a = verts[edge[i]];
      const Point &b = verts[(edge[i] + 1) % ne];
      const Point e = b - a;
      const Point &p = pts[i];
      eqs.push_back(EqRow{{e.y, -e.x, -cross(e, a)},
                          e.y * p.x - e.x * p.y});
      // cross(a, P - c) >= 0  ->  (-a.y) cx + (a.x) cy <= cross(a, P)
      ineqs.push_back(IneqRow{{-a.y, a.x, ExactScalar(0)}, cross(a, p), false});
      // cross(P - c, b) >= 0  ->  (b.y) cx + (-b.x) cy <= cross(P, b)
      ineqs.push_back(IneqRow{{b.y, -b.x, ExactScalar(0)}, cross(p, b), false});
    }
    // r > 0
    ineqs.push_back(
        IneqRow{{ExactScalar(0), ExactScalar(0), ExactScalar(-1)},
                ExactScalar(0), true});

    if (auto z = solve_equalities_with_inequalities(std::move(eqs), ineqs)) {
      Point center{(*z)[0], (*z)[1]};
      return NormCircle{center, {(*z)[2], false}, norm};
    }

    int i = 0;
    while (i < 4 && ++edge[i] == ne) {
      edge[i] = 0;
      ++i;
    }
    if (i == 4)
      break;
  }
  return std::nullopt;
}

// Exact gauge matrix for a configuration; L2 entries are squared.
std::vector<std::vector<ExactScalar>> gauge_matrix(const Configuration &cfg) {
  const size_t n = cfg.size();
  std::vector<std::vector<ExactScalar>> d(n, std::vector<ExactScalar>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      d[i][j] = d[j][i] = gauge(cfg.norm, cfg.points[j] - cfg.points[i]);
  return d;
}

} // namespace

std::optional<NormCircle> concyclic4(const NormSpec &norm, const Point &p1,
                                     const Point &p2, const Point &p3,
                                     const Point &p4) {
  require_exact(norm, "concyclic4");
  const Point pts[4] = {p1, p2, p3, p4};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (pts[i] == pts[j])
        throw std::invalid_argument("concyclic4: points must be distinct");
  switch (norm.kind()) {
  case NormKind::L2:
    return concyclic4_l2(p1, p2, p3, p4);
  case NormKind::Linf:
    return concyclic4_linf(p1, p2, p3, p4);
  case NormKind::L1:
    return concyclic4_l1(p1, p2, p3, p4);
  case NormKind::Polygonal:
    return concyclic4_polygonal(norm, p1, p2, p3, p4);
  default:
    throw std::logic_error("unreachable");
  }
}

std::optional<std::array<int, 3>>
has_collinear_triple(const Configuration &cfg) {
  const int n = static_cast<int>(cfg.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        if (collinear3(cfg.points[i], cfg.points[j], cfg.points[k]))
          return std::array<int, 3>{i, j, k};
  return std::nullopt;
}

std::optional<ConcyclicWitness>
has_concyclic_quadruple(const Configuration &cfg) {
  const int n = static_cast<int>(cfg.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        for (int l = k + 1; l < n; ++l)
          if (auto c = concyclic4(cfg.norm, cfg.points[i], cfg.points[j],
                                  cfg.points[k], cfg.points[l]))
            return ConcyclicWitness{{i, j, k, l}, *c};
  return std::nullopt;
}

namespace {

// Validates the shift pattern for a fixed ordering given the gauge
// matrix; ord may be any permutation of 0..n-1.
bool linelike_pattern_ok(const std::vector<std::vector<ExactScalar>> &d,
                         const std::vector<int> &ord) {
  const int n = static_cast<int>(ord.size());
  std::vector<ExactScalar> dg(n);
  for (int g = 1; g < n; ++g) {
    dg[g] = d[ord[0]][ord[g]];
    if (dg[g].sign() <= 0)
      return false;
    for (int i = 1; i + g < n; ++i)
      if (d[ord[i]][ord[i + g]] != dg[g])
        return false;
  }
  for (int g = 1; g < n; ++g)
    for (int h = g + 1; h < n; ++h)
      if (dg[g] == dg[h])
        return false;
  return true;
}

} // namespace

std::optional<std::vector<int>> is_linelike(const Configuration &cfg) {
  require_exact(cfg.norm, "is_linelike");
  const int n = static_cast<int>(cfg.size());
  if (n < 2)
    return std::nullopt;
  if (n == 2)
    return std::vector<int>{0, 1};

  const auto d = gauge_matrix(cfg);
  std::map<ExactScalar, std::vector<std::pair<int, int>>> classes;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      classes[d[i][j]].push_back({i, j});
  if (static_cast<int>(classes.size()) != n - 1)
    return std::nullopt;
  std::vector<int> sizes;
  const std::vector<std::pair<int, int>> *unit_class = nullptr;
  for (const auto &[val, pairs] : classes) {
    sizes.push_back(static_cast<int>(pairs.size()));
    if (static_cast<int>(pairs.size()) == n - 1)
      unit_class = &pairs;
  }
  std::sort(sizes.begin(), sizes.end());
  for (int i = 0; i < n - 1; ++i)
    if (sizes[i] != i + 1)
      return std::nullopt;

  // The n-1 pairs at the consecutive-gap distance must form a
  // Hamiltonian path; extract it.
  std::vector<std::vector<int>> adj(n);
  for (auto [i, j] : *unit_class) {
    adj[i].push_back(j);
    adj[j].push_back(i);
  }
  int start = -1;
  for (int i = 0; i < n; ++i) {
    if (adj[i].size() > 2 || adj[i].empty())
      return std::nullopt;
    if (adj[i].size() == 1 && start < 0)
      start = i;
  }
  if (start < 0)
    return std::nullopt; // a cycle, not a path
  std::vector<int> ord{start};
  int prev = -1, cur = start;
  while (static_cast<int>(ord.size()) < n) {
    int next = -1;
    for (int nb : adj[cur])
      if (nb != prev) {
        next = nb;
        break;
      }
    if (next < 0)
      return std::nullopt;
    ord.push_back(next);
    prev = cur;
    cur = next;
  }

  if (!linelike_pattern_ok(d, ord))
    return std::nullopt;
  return ord;
}

bool is_linelike_ordered(const NormSpec &norm, const std::vector<Point> &pts) {
  require_exact(norm, "is_linelike_ordered");
  const int n = static_cast<int>(pts.size());
  if (n < 2)
    return false;
  Configuration cfg(pts, norm);
  std::vector<int> ident(n);
  for (int i = 0; i < n; ++i)
    ident[i] = i;
  const auto d = gauge_matrix(cfg);
  return linelike_pattern_ok(d, ident);
}

std::vector<DistanceValue> order_distances(const Configuration &cfg) {
  require_exact(cfg.norm, "order_distances");
  const int n = static_cast<int>(cfg.size());
  if (n < 2)
    throw NotLineLike("order_distances: need at least two points");
  const auto d = gauge_matrix(cfg);
  std::vector<int> ident(n);
  for (int i = 0; i < n; ++i)
    ident[i] = i;
  if (!linelike_pattern_ok(d, ident))
    throw NotLineLike("order_distances: stored ordering is not line-like");
  const bool squared = cfg.norm.kind() == NormKind::L2;
  std::vector<DistanceValue> out;
  for (int g = 1; g < n; ++g)
    out.push_back({d[0][g], squared});
  return out;
}

DistanceMultiset distance_multiset(const Configuration &cfg) {
  require_exact(cfg.norm, "distance_multiset");
  DistanceMultiset m;
  const int n = static_cast<int>(cfg.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      m[distance(cfg.norm, cfg.points[i], cfg.points[j])] += 1;
  return m;
}

bool is_crescent_multiplicity(const Configuration &cfg) {
  const auto m = distance_multiset(cfg);
  const int n = static_cast<int>(cfg.size());
  if (static_cast<int>(m.size()) != n - 1)
    return false;
  std::vector<int> counts;
  for (const auto &[v, c] : m)
    counts.push_back(c);
  std::sort(counts.begin(), counts.end());
  for (int i = 0; i < n - 1; ++i)
    if (counts[i] != i + 1)
      return false;
  return true;
}

bool in_strong_general_position(const Configuration &cfg,
                                Violation *violation) {
  if (auto t = has_collinear_triple(cfg)) {
    if (violation)
      *violation = {Violation::Kind::collinear,
                    {(*t)[0], (*t)[1], (*t)[2]},
                    std::nullopt};
    return false;
  }
  if (auto q = has_concyclic_quadruple(cfg)) {
    if (violation)
      *violation = {Violation::Kind::concyclic,
                    {q->indices[0], q->indices[1], q->indices[2],
                     q->indices[3]},
                    q->circle};
    return false;
  }
  const int n = static_cast<int>(cfg.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        for (int l = k + 1; l < n; ++l) {
          Configuration sub({cfg.points[i], cfg.points[j], cfg.points[k],
                             cfg.points[l]},
                            cfg.norm);
          if (is_linelike(sub)) {
            if (violation)
              *violation = {Violation::Kind::linelike_four,
                            {i, j, k, l},
                            std::nullopt};
            return false;
          }
        }
  if (violation)
    *violation = {};
  return true;
}

bool is_strong_crescent(const Configuration &cfg, Violation *violation) {
  if (!in_strong_general_position(cfg, violation))
    return false;
  return is_crescent_multiplicity(cfg);
}

std::optional<std::vector<int>>
is_linelike_crescent(const Configuration &cfg) {
  auto ord = is_linelike(cfg);
  if (!ord)
    return std::nullopt;
  if (has_collinear_triple(cfg) || has_concyclic_quadruple(cfg))
    return std::nullopt;
  return ord;
}

namespace {

std::optional<PerturbationWitness>
perturbation_on_axis(const Configuration &cfg, Axis axis) {
  const int n = static_cast<int>(cfg.size());
  std::vector<int> ord(n);
  for (int i = 0; i < n; ++i)
    ord[i] = i;
  auto coord = [&](int i) -> const ExactScalar & {
    return axis == Axis::horizontal ? cfg.points[i].x : cfg.points[i].y;
  };
  std::sort(ord.begin(), ord.end(),
            [&](int a, int b) { return coord(a) < coord(b); });
  for (int i = 0; i + 1 < n; ++i)
    if (coord(ord[i]) == coord(ord[i + 1]))
      return std::nullopt; // tie: spacing would be zero
  if (n >= 2) {
    const ExactScalar step = coord(ord[1]) - coord(ord[0]);
    for (int i = 1; i + 1 < n; ++i)
      if (coord(ord[i + 1]) - coord(ord[i]) != step)
        return std::nullopt;
    return PerturbationWitness{axis, ord, step};
  }
  return std::nullopt;
}

} // namespace

std::optional<PerturbationWitness>
is_perpendicular_perturbation(const Configuration &cfg, Axis axis) {
  if (cfg.size() < 2)
    return std::nullopt;
  if (axis == Axis::horizontal || axis == Axis::automatic)
    if (auto w = perturbation_on_axis(cfg, Axis::horizontal))
      return w;
  if (axis == Axis::vertical || axis == Axis::automatic)
    if (auto w = perturbation_on_axis(cfg, Axis::vertical))
      return w;
  return std::nullopt;
}

std::optional<Point> complete_linelike4_parallelogram(const Point &a,
                                                      const Point &b,
                                                      const Point &c,
                                                      const NormSpec &norm) {
  require_exact(norm, "complete_linelike4_parallelogram");
  const ExactScalar ab = gauge(norm, b - a);
  const ExactScalar bc = gauge(norm, c - b);
  const ExactScalar ac = gauge(norm, c - a);
  if (ab != bc || ac == ab)
    throw std::invalid_argument(
        "complete_linelike4_parallelogram: A, B, C is not a line-like triple");
  const Point d = b + (c - a);
  if (d == a || d == b || d == c)
    return std::nullopt;
  if (!is_linelike_ordered(norm, {a, b, c, d}))
    return std::nullopt;
  return d;
}

} // namespace crescent
