#include "crescent/typecalc.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "crescent/feasibility.hpp"

namespace crescent {

int free_variable_count(const TypeString &t) {
  int k = 0;
  for (TypeSymbol s : t)
    if (symbol_free(s))
      ++k;
  return k;
}

char symbol_to_char(TypeSymbol s) {
  switch (s) {
  case TypeSymbol::x:
    return 'x';
  case TypeSymbol::xp:
    return 'X';
  case TypeSymbol::y:
    return 'y';
  case TypeSymbol::yp:
    return 'Y';
  case TypeSymbol::b_xy:
    return 'A';
  case TypeSymbol::b_xpy:
    return 'B';
  case TypeSymbol::b_xpyp:
    return 'C';
  case TypeSymbol::b_xyp:
    return 'D';
  }
  return '?';
}

TypeSymbol symbol_from_char(char c) {
  switch (c) {
  case 'x':
    return TypeSymbol::x;
  case 'X':
    return TypeSymbol::xp;
  case 'y':
    return TypeSymbol::y;
  case 'Y':
    return TypeSymbol::yp;
  case 'A':
    return TypeSymbol::b_xy;
  case 'B':
    return TypeSymbol::b_xpy;
  case 'C':
    return TypeSymbol::b_xpyp;
  case 'D':
    return TypeSymbol::b_xyp;
  default:
    throw std::invalid_argument(std::string("bad type symbol: ") + c);
  }
}

std::string type_to_string(const TypeString &t) {
  std::string s;
  for (TypeSymbol a : t)
    s += symbol_to_char(a);
  return s;
}

TypeString type_from_string(const std::string &s) {
  TypeString t;
  for (char c : s)
    t.push_back(symbol_from_char(c));
  return t;
}

TypeSymbol type_of_pair(const Point &p, const Point &q) {
  const ExactScalar dx = q.x - p.x, dy = q.y - p.y;
  const ExactScalar adx = dx.abs(), ady = dy.abs();
  if (adx == ady) {
    if (adx.is_zero())
      throw std::invalid_argument("type_of_pair: points coincide");
    if (dx.sign() > 0)
      return dy.sign() > 0 ? TypeSymbol::b_xy : TypeSymbol::b_xyp;
    return dy.sign() > 0 ? TypeSymbol::b_xpy : TypeSymbol::b_xpyp;
  }
  if (adx > ady)
    return dx.sign() > 0 ? TypeSymbol::x : TypeSymbol::xp;
  return dy.sign() > 0 ? TypeSymbol::y : TypeSymbol::yp;
}

TypeString type_of_config(const std::vector<Point> &ordered_points) {
  if (ordered_points.size() < 2)
    throw std::invalid_argument("type_of_config: need at least two points");
  TypeString t;
  for (size_t i = 0; i + 1 < ordered_points.size(); ++i)
    t.push_back(type_of_pair(ordered_points[i], ordered_points[i + 1]));
  return t;
}

std::vector<Point> coordinates_of_type(const TypeString &t,
                                       const FreeAssignment &f) {
  if (t.empty())
    throw std::invalid_argument("empty type string");
  if (static_cast<int>(f.size()) != free_variable_count(t))
    throw std::invalid_argument("free assignment length mismatch");
  for (const Rational &v : f)
    if (cmp(abs(v), 1) >= 0)
      throw std::invalid_argument("free variables must satisfy |f| < 1");
  std::vector<Point> pts{Point(0, 0)};
  size_t j = 0;
  const ExactScalar one(1);
  for (TypeSymbol s : t) {
    ExactScalar fv;
    if (symbol_free(s))
      fv = ExactScalar(f[j++]);
    Point d;
    switch (s) {
    case TypeSymbol::x:
      d = Point(one, fv);
      break;
    case TypeSymbol::xp:
      d = Point(-one, fv);
      break;
    case TypeSymbol::y:
      d = Point(fv, one);
      break;
    case TypeSymbol::yp:
      d = Point(fv, -one);
      break;
    case TypeSymbol::b_xy:
      d = Point(one, one);
      break;
    case TypeSymbol::b_xpy:
      d = Point(-one, one);
      break;
    case TypeSymbol::b_xpyp:
      d = Point(-one, -one);
      break;
    case TypeSymbol::b_xyp:
      d = Point(one, -one);
      break;
    }
    pts.push_back(pts.back() + d);
  }
  return pts;
}

namespace {

TypeSymbol reflect_symbol(TypeSymbol s, TypeReflection op) {
  switch (op) {
  case TypeReflection::x_axis:
    switch (s) {
    case TypeSymbol::y:
      return TypeSymbol::yp;
    case TypeSymbol::yp:
      return TypeSymbol::y;
    case TypeSymbol::b_xy:
      return TypeSymbol::b_xyp;
    case TypeSymbol::b_xyp:
      return TypeSymbol::b_xy;
    case TypeSymbol::b_xpy:
      return TypeSymbol::b_xpyp;
    case TypeSymbol::b_xpyp:
      return TypeSymbol::b_xpy;
    default:
      return s;
    }
  case TypeReflection::y_axis:
    switch (s) {
    case TypeSymbol::x:
      return TypeSymbol::xp;
    case TypeSymbol::xp:
      return TypeSymbol::x;
    case TypeSymbol::b_xy:
      return TypeSymbol::b_xpy;
    case TypeSymbol::b_xpy:
      return TypeSymbol::b_xy;
    case TypeSymbol::b_xyp:
      return TypeSymbol::b_xpyp;
    case TypeSymbol::b_xpyp:
      return TypeSymbol::b_xyp;
    default:
      return s;
    }
  case TypeReflection::diag:
    switch (s) {
    case TypeSymbol::x:
      return TypeSymbol::y;
    case TypeSymbol::y:
      return TypeSymbol::x;
    case TypeSymbol::xp:
      return TypeSymbol::yp;
    case TypeSymbol::yp:
      return TypeSymbol::xp;
    case TypeSymbol::b_xpy:
      return TypeSymbol::b_xyp;
    case TypeSymbol::b_xyp:
      return TypeSymbol::b_xpy;
    default:
      return s;
    }
  case TypeReflection::reverse:
    return s;
  }
  return s;
}

} // namespace

TypeString reflect_type(const TypeString &t, TypeReflection op) {
  TypeString out;
  if (op == TypeReflection::reverse) {
    out.assign(t.rbegin(), t.rend());
    return out;
  }
  for (TypeSymbol s : t)
    out.push_back(reflect_symbol(s, op));
  return out;
}

namespace {

std::vector<TypeString> orbit_closure(const TypeString &t,
                                      const std::vector<TypeReflection> &ops) {
  std::set<TypeString> seen{t};
  std::vector<TypeString> frontier{t};
  while (!frontier.empty()) {
    std::vector<TypeString> next;
    for (const auto &s : frontier)
      for (TypeReflection op : ops) {
        TypeString img = reflect_type(s, op);
        if (seen.insert(img).second)
          next.push_back(std::move(img));
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

// The eight symbol symmetries, without reversal. Reversal swaps the two
// ends of a string, so a non-extendability claim about appending symbols
// only transfers to the reversed string as a claim about prepending;
// expanding extension claims over this subgroup keeps them faithful.
std::vector<TypeString> point_symmetry_orbit(const TypeString &t) {
  return orbit_closure(t, {TypeReflection::x_axis, TypeReflection::y_axis,
                           TypeReflection::diag});
}

} // namespace

std::vector<TypeString> reflection_orbit(const TypeString &t) {
  return orbit_closure(t, {TypeReflection::x_axis, TypeReflection::y_axis,
                           TypeReflection::diag, TypeReflection::reverse});
}

// ---- dyadic grid sampler ------------------------------------------------
//
// Coordinates are scaled by 2^m so everything is int64: free values are
// the numerators j with |j| <= 2^m - 1, every step has Chebyshev length
// exactly 2^m, and the line-like / collinear / concyclic checks run
// incrementally as each point is placed. Prefix pruning is exact: a
// sub-configuration of a line-like crescent configuration is itself one.

namespace {

using IPt = std::array<long long, 2>;

inline long long icheb(const IPt &a, const IPt &b) {
  return std::max(std::llabs(a[0] - b[0]), std::llabs(a[1] - b[1]));
}

inline long long icross(const IPt &a, const IPt &b, const IPt &c) {
  return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
}

struct GridSampler {
  TypeString type;
  long long scale = 0;
  SampleOptions opts;
  std::vector<IPt> pts;
  std::vector<long long> dg; // dg[g], g >= 1
  std::vector<int> fvals;
  // cb gets scaled points + free numerators; returns false to stop.
  std::function<bool(const std::vector<IPt> &, const std::vector<int> &)> cb;

  bool place_ok(const IPt &q) const {
    const int idx = static_cast<int>(pts.size());
    for (int i = idx - 1; i >= 1; --i)
      if (icheb(q, pts[i]) != dg[idx - i])
        return false;
    const long long dnew = icheb(q, pts[0]);
    if (dnew <= 0)
      return false;
    for (int g = 1; g < idx; ++g)
      if (dg[g] == dnew)
        return false;
    if (opts.require_d2_equal_2 && idx == 2 && dnew != 2 * scale)
      return false;
    for (int i = 0; i < idx; ++i)
      for (int j = i + 1; j < idx; ++j)
        if (icross(pts[i], pts[j], q) == 0)
          return false;
    for (int i = 0; i < idx; ++i)
      for (int j = i + 1; j < idx; ++j)
        for (int l = j + 1; l < idx; ++l)
          if (chebyshev_concyclic4_fast(pts[i], pts[j], pts[l], q))
            return false;
    return true;
  }

  // returns false when the enumeration should stop entirely
  bool extend(size_t sym) {
    if (sym == type.size())
      return cb(pts, fvals);
    const TypeSymbol s = type[sym];
    long long dx0 = 0, dy0 = 0;
    bool fx = false, fy = false; // which component carries the free value
    switch (s) {
    case TypeSymbol::x:
      dx0 = scale;
      fy = true;
      break;
    case TypeSymbol::xp:
      dx0 = -scale;
      fy = true;
      break;
    case TypeSymbol::y:
      dy0 = scale;
      fx = true;
      break;
    case TypeSymbol::yp:
      dy0 = -scale;
      fx = true;
      break;
    case TypeSymbol::b_xy:
      dx0 = scale;
      dy0 = scale;
      break;
    case TypeSymbol::b_xpy:
      dx0 = -scale;
      dy0 = scale;
      break;
    case TypeSymbol::b_xpyp:
      dx0 = -scale;
      dy0 = -scale;
      break;
    case TypeSymbol::b_xyp:
      dx0 = scale;
      dy0 = -scale;
      break;
    }
    const IPt base = pts.back();
    if (!fx && !fy) {
      const IPt q{base[0] + dx0, base[1] + dy0};
      if (!place_ok(q))
        return true;
      pts.push_back(q);
      if (static_cast<int>(pts.size()) > static_cast<int>(dg.size()))
        dg.push_back(icheb(q, pts[0]));
      const bool cont = extend(sym + 1);
      pts.pop_back();
      dg.resize(pts.size());
      return cont;
    }
    for (long long j = -(scale - 1); j <= scale - 1; ++j) {
      const IPt q{base[0] + (fx ? j : dx0), base[1] + (fy ? j : dy0)};
      if (!place_ok(q))
        continue;
      pts.push_back(q);
      dg.push_back(icheb(q, pts[0]));
      fvals.push_back(static_cast<int>(j));
      const bool cont = extend(sym + 1);
      fvals.pop_back();
      pts.pop_back();
      dg.resize(pts.size());
      if (!cont)
        return false;
    }
    return true;
  }

  void run() {
    pts = {{0, 0}};
    dg = {0}; // dg[0] unused
    fvals.clear();
    extend(0);
  }
};

long long grid_scale_from_step(const Rational &grid_step) {
  // must be 1 / 2^m with m >= 2
  if (sgn(grid_step) <= 0 || grid_step.get_num() != 1)
    throw std::invalid_argument("grid step must be 1/2^m, m >= 2");
  const mpz_class den = grid_step.get_den();
  mpz_class d = den;
  long long scale = 1;
  while (d % 2 == 0 && scale < (1LL << 30)) {
    d /= 2;
    scale *= 2;
  }
  if (d != 1 || scale < 4)
    throw std::invalid_argument("grid step must be 1/2^m, m >= 2");
  return scale;
}

void check_grid_budget(const TypeString &t, long long scale,
                       const SampleOptions &opts) {
  const int k = free_variable_count(t);
  const double total = std::pow(2.0 * scale - 1.0, k);
  if (total > opts.max_assignments)
    throw ResourceLimit("grid too large: " + std::to_string(total) +
                        " assignments exceed the configured cap");
}

FreeAssignment numerators_to_assignment(const std::vector<int> &fvals,
                                        long long scale) {
  FreeAssignment f;
  for (int j : fvals)
    f.push_back(make_rational(j, scale));
  return f;
}

bool scaled_type_matches(const std::vector<IPt> &pts, const TypeString &t) {
  for (size_t i = 0; i + 1 < pts.size(); ++i) {
    const long long dx = pts[i + 1][0] - pts[i][0];
    const long long dy = pts[i + 1][1] - pts[i][1];
    const long long adx = std::llabs(dx), ady = std::llabs(dy);
    TypeSymbol s;
    if (adx > ady)
      s = dx > 0 ? TypeSymbol::x : TypeSymbol::xp;
    else if (ady > adx)
      s = dy > 0 ? TypeSymbol::y : TypeSymbol::yp;
    else if (dx > 0)
      s = dy > 0 ? TypeSymbol::b_xy : TypeSymbol::b_xyp;
    else
      s = dy > 0 ? TypeSymbol::b_xpy : TypeSymbol::b_xpyp;
    if (s != t[i])
      return false;
  }
  return true;
}

} // namespace

std::vector<FreeAssignment> realize_sample(const TypeString &t,
                                           const Rational &grid_step,
                                           const SampleOptions &opts) {
  if (t.empty())
    throw std::invalid_argument("empty type string");
  const long long scale = grid_scale_from_step(grid_step);
  check_grid_budget(t, scale, opts);
  std::vector<FreeAssignment> out;
  GridSampler sampler;
  sampler.type = t;
  sampler.scale = scale;
  sampler.opts = opts;
  sampler.cb = [&](const std::vector<IPt> &pts, const std::vector<int> &f) {
    if (!scaled_type_matches(pts, t))
      return true;
    out.push_back(numerators_to_assignment(f, scale));
    return !opts.first_only;
  };
  sampler.run();
  return out;
}

std::vector<Extension> extend_sample(const TypeString &t, int m,
                                     const Rational &grid_step,
                                     const SampleOptions &opts) {
  if (m < 1)
    throw std::invalid_argument("extension length must be >= 1");
  static const TypeSymbol kAll[8] = {
      TypeSymbol::x,     TypeSymbol::xp,    TypeSymbol::y,
      TypeSymbol::yp,    TypeSymbol::b_xy,  TypeSymbol::b_xpy,
      TypeSymbol::b_xpyp, TypeSymbol::b_xyp};
  std::vector<Extension> found;
  std::vector<int> idx(m, 0);
  while (true) {
    TypeString ext;
    for (int i = 0; i < m; ++i)
      ext.push_back(kAll[idx[i]]);
    TypeString full = t;
    full.insert(full.end(), ext.begin(), ext.end());
    SampleOptions one = opts;
    one.first_only = true;
    auto ws = realize_sample(full, grid_step, one);
    if (!ws.empty())
      found.push_back(Extension{ext, ws.front()});
    int i = m - 1;
    while (i >= 0 && ++idx[i] == 8)
      idx[i--] = 0;
    if (i < 0)
      break;
  }
  return found;
}

std::vector<DistanceValue> type_order_distances(const TypeString &t,
                                                const FreeAssignment &f) {
  Configuration cfg(coordinates_of_type(t, f), NormSpec::linf());
  return order_distances(cfg);
}

// ---- lemma suite ---------------------------------------------------------

namespace {

TypeString ts(const std::string &s) { return type_from_string(s); }

// Runs one emptiness claim over the reflection orbit of each string in
// `bases`, optionally extended by every string in T^m.
ClaimResult run_claim_set(const std::string &name,
                          const std::vector<TypeString> &bases, int extend_m,
                          bool d2_filter, const Rational &grid_step,
                          bool expect_witnesses) {
  ClaimResult res;
  res.name = name;
  res.expect_witnesses = expect_witnesses;
  res.strings_checked = 0;
  res.witnesses = 0;
  res.holds = true;

  // Emptiness claims are reversal-invariant, so the full orbit applies;
  // extension claims expand over the point symmetries only (reversal
  // would turn them into claims about the other end of the string).
  std::set<TypeString> all_strings;
  for (const auto &b : bases)
    for (const auto &img :
         extend_m == 0 ? reflection_orbit(b) : point_symmetry_orbit(b))
      all_strings.insert(img);

  std::vector<TypeString> work;
  if (extend_m == 0) {
    work.assign(all_strings.begin(), all_strings.end());
  } else {
    static const TypeSymbol kAll[8] = {
        TypeSymbol::x,     TypeSymbol::xp,    TypeSymbol::y,
        TypeSymbol::yp,    TypeSymbol::b_xy,  TypeSymbol::b_xpy,
        TypeSymbol::b_xpyp, TypeSymbol::b_xyp};
    for (const auto &base : all_strings) {
      std::vector<int> idx(extend_m, 0);
      while (true) {
        TypeString full = base;
        for (int i = 0; i < extend_m; ++i)
          full.push_back(kAll[idx[i]]);
        work.push_back(full);
        int i = extend_m - 1;
        while (i >= 0 && ++idx[i] == 8)
          idx[i--] = 0;
        if (i < 0)
          break;
      }
    }
  }

  for (const auto &full : work) {
    ++res.strings_checked;
    SampleOptions opts;
    opts.first_only = true;
    opts.require_d2_equal_2 = d2_filter;
    auto ws = realize_sample(full, grid_step, opts);
    if (!ws.empty()) {
      ++res.witnesses;
      if (res.counterexample_type.empty()) {
        res.counterexample_type = type_to_string(full);
        res.counterexample = ws.front();
      }
    }
  }
  res.holds = expect_witnesses ? res.witnesses > 0 : res.witnesses == 0;
  return res;
}

std::vector<TypeString> all_b_strings(int len) {
  static const TypeSymbol kB[4] = {TypeSymbol::b_xy, TypeSymbol::b_xpy,
                                   TypeSymbol::b_xpyp, TypeSymbol::b_xyp};
  std::vector<TypeString> out;
  std::vector<int> idx(len, 0);
  if (len == 0)
    return {TypeString{}};
  while (true) {
    TypeString t;
    for (int i = 0; i < len; ++i)
      t.push_back(kB[idx[i]]);
    out.push_back(t);
    int i = len - 1;
    while (i >= 0 && ++idx[i] == 4)
      idx[i--] = 0;
    if (i < 0)
      break;
  }
  return out;
}

} // namespace

ClaimResult run_emptiness_claim(const std::string &name, const TypeString &t,
                                const Rational &grid_step, bool d2_filter) {
  return run_claim_set(name, {t}, 0, d2_filter, grid_step, false);
}

LemmaReport verify_forbidden_types(const Rational &grid_step) {
  LemmaReport report;
  report.grid_step = grid_step;
  auto add = [&](ClaimResult r) {
    report.all_hold = report.all_hold && r.holds;
    report.claims.push_back(std::move(r));
  };

  add(run_claim_set("diagonal pair AA not realizable", {ts("AA")}, 0, false,
                    grid_step, false));
  add(run_claim_set("diagonal pair AC not realizable", {ts("AC")}, 0, false,
                    grid_step, false));
  add(run_claim_set("xB not 2-extendable", {ts("xB")}, 2, false, grid_step,
                    false));
  {
    std::vector<TypeString> bases;
    static const char kFree[4] = {'x', 'X', 'y', 'Y'};
    for (char s : kFree)
      for (char t2 : kFree)
        bases.push_back(ts(std::string("xX") + s + t2));
    add(run_claim_set("xX followed by two free symbols not realizable", bases,
                      0, false, grid_step, false));
  }
  add(run_claim_set("xyxY not realizable", {ts("xyxY")}, 0, false, grid_step,
                    false));
  add(run_claim_set("xyXy not realizable", {ts("xyXy")}, 0, false, grid_step,
                    false));
  add(run_claim_set("alternating xyxyxy not realizable", {ts("xyxyxy")}, 0,
                    false, grid_step, false));
  add(run_claim_set("alternating-reversing xyXYx not realizable",
                    {ts("xyXYx")}, 0, false, grid_step, false));
  add(run_claim_set("diagonal triple ABC not realizable", {ts("ABC")}, 0,
                    false, grid_step, false));
  add(run_claim_set("every diagonal string of length 4 not realizable",
                    all_b_strings(4), 0, false, grid_step, false));
  // Positive controls from the diagonal classification.
  add(run_claim_set("diagonal A realizable", {ts("A")}, 0, false, grid_step,
                    true));
  add(run_claim_set("diagonal AB realizable", {ts("AB")}, 0, false, grid_step,
                    true));
  add(run_claim_set("diagonal ABA realizable", {ts("ABA")}, 0, false,
                    grid_step, true));
  {
    std::vector<TypeString> bases1, bases2;
    for (int len = 0; len <= 3; ++len)
      for (const auto &core : all_b_strings(len)) {
        TypeString t1 = ts("x");
        t1.insert(t1.end(), core.begin(), core.end());
        TypeString t2 = t1;
        t1.push_back(TypeSymbol::xp);
        t2.push_back(TypeSymbol::y);
        bases1.push_back(t1);
        bases2.push_back(t2);
      }
    add(run_claim_set("x<diagonals>X not 1-extendable given d2=2", bases1, 1,
                      true, grid_step, false));
    add(run_claim_set("x<diagonals>y not 1-extendable given d2=2", bases2, 1,
                      true, grid_step, false));
  }
  {
    static const char kT[5] = {'A', 'B', 'C', 'D', 'x'};
    std::vector<TypeString> bases;
    for (int len = 0; len <= 2; ++len)
      for (const auto &core : all_b_strings(len)) {
        bool ok = true;
        for (TypeSymbol s : core)
          ok = ok &&
               (s == TypeSymbol::b_xy || s == TypeSymbol::b_xyp);
        if (!ok)
          continue;
        for (char t2 : kT) {
          TypeString a = ts("x");
          a.insert(a.end(), core.begin(), core.end());
          a.push_back(TypeSymbol::b_xpy);
          a.push_back(symbol_from_char(t2));
          bases.push_back(a);
          TypeString b = ts(std::string(1, t2) + "x");
          b.insert(b.end(), core.begin(), core.end());
          b.push_back(TypeSymbol::b_xpy);
          bases.push_back(b);
        }
      }
    add(run_claim_set("x<b_xy/b_xy'>B blocks realizability given d2=2", bases,
                      0, true, grid_step, false));
  }
  return report;
}

// ---- classification harness ----------------------------------------------

namespace {

struct PruneEntry {
  TypeString pattern;
  int min_after;  // prune needs >= this many symbols after the occurrence
  int min_before; // .. and >= this many before it
};

std::vector<PruneEntry> build_prune_catalogue() {
  std::vector<PruneEntry> out;
  auto add_empty = [&out](const TypeString &t) {
    for (const auto &img : reflection_orbit(t))
      out.push_back(PruneEntry{img, 0, 0});
  };
  auto add_unextendable = [&out](const TypeString &t, int m) {
    for (const auto &img : point_symmetry_orbit(t)) {
      out.push_back(PruneEntry{img, m, 0});
      TypeString rev(img.rbegin(), img.rend());
      out.push_back(PruneEntry{rev, 0, m});
    }
  };
  add_empty(ts("AA"));
  add_empty(ts("AC"));
  add_unextendable(ts("xB"), 2);
  static const char kFree[4] = {'x', 'X', 'y', 'Y'};
  for (char s : kFree)
    for (char t2 : kFree)
      add_empty(ts(std::string("xX") + s + t2));
  add_empty(ts("xyxY"));
  add_empty(ts("xyXy"));
  add_empty(ts("xyxyxy"));
  add_empty(ts("xyXYx"));
  add_empty(ts("ABC"));
  for (const auto &t : all_b_strings(4))
    out.push_back(PruneEntry{t, 0, 0});
  return out;
}

// Every step of these alphabets moves one full unit in the same
// coordinate direction, so the corresponding coordinates of any
// realization form an arithmetic progression: realizations are
// perpendicular perturbations by construction.
bool perturbation_family(const TypeString &t) {
  auto subset_of = [&t](std::initializer_list<TypeSymbol> allowed) {
    for (TypeSymbol s : t) {
      bool ok = false;
      for (TypeSymbol a : allowed)
        ok = ok || a == s;
      if (!ok)
        return false;
    }
    return true;
  };
  return subset_of({TypeSymbol::x, TypeSymbol::b_xy, TypeSymbol::b_xyp}) ||
         subset_of({TypeSymbol::xp, TypeSymbol::b_xpy, TypeSymbol::b_xpyp}) ||
         subset_of({TypeSymbol::y, TypeSymbol::b_xy, TypeSymbol::b_xpy}) ||
         subset_of({TypeSymbol::yp, TypeSymbol::b_xyp, TypeSymbol::b_xpyp});
}

bool int_perturbation(const std::vector<IPt> &pts) {
  for (int axis = 0; axis < 2; ++axis) {
    std::vector<long long> c;
    for (const auto &p : pts)
      c.push_back(p[axis]);
    std::sort(c.begin(), c.end());
    bool ok = true;
    const long long step = c[1] - c[0];
    if (step == 0)
      ok = false;
    for (size_t i = 1; ok && i + 1 < c.size(); ++i)
      ok = c[i + 1] - c[i] == step;
    if (ok)
      return true;
  }
  return false;
}

} // namespace

ClassificationReport
verify_classification(int n, const Rational &grid_step,
                      const std::vector<TypeSymbol> &alphabet) {
  if (n < 3)
    throw std::invalid_argument("need n >= 3");
  const long long scale = grid_scale_from_step(grid_step);
  const int len = n - 1;

  std::vector<TypeSymbol> alpha = alphabet;
  const bool reduced = alphabet.empty();
  if (alpha.empty())
    alpha = {TypeSymbol::x,     TypeSymbol::xp,    TypeSymbol::y,
             TypeSymbol::yp,    TypeSymbol::b_xy,  TypeSymbol::b_xpy,
             TypeSymbol::b_xpyp, TypeSymbol::b_xyp};

  const auto catalogue = build_prune_catalogue();

  ClassificationReport report;
  report.n = n;
  report.grid_step = grid_step;
  report.symmetry_reduced = reduced;

  std::vector<TypeString> candidates;
  TypeString cur;
  std::function<void(int)> enumerate = [&](int depth) {
    if (depth == len) {
      ++report.strings_enumerated;
      candidates.push_back(cur);
      return;
    }
    for (TypeSymbol s : alpha) {
      // With the full alphabet, the dihedral symmetries of the square act
      // transitively on the free symbols and on the diagonal symbols, so
      // the first symbol can be fixed to a representative of each orbit.
      if (reduced && depth == 0 && s != TypeSymbol::x &&
          s != TypeSymbol::b_xy)
        continue;
      cur.push_back(s);
      bool pruned = false;
      for (const auto &entry : catalogue) {
        const int plen = static_cast<int>(entry.pattern.size());
        if (plen > static_cast<int>(cur.size()))
          continue;
        if (!std::equal(entry.pattern.begin(), entry.pattern.end(),
                        cur.end() - plen))
          continue;
        if (len - static_cast<int>(cur.size()) >= entry.min_after &&
            static_cast<int>(cur.size()) - plen >= entry.min_before) {
          pruned = true;
          break;
        }
      }
      if (pruned) {
        ++report.strings_pruned;
      } else {
        enumerate(depth + 1);
      }
      cur.pop_back();
    }
  };
  enumerate(0);

  for (const auto &t : candidates) {
    StringVerdict verdict;
    verdict.type = t;
    verdict.family_shortcut = perturbation_family(t);
    verdict.witnesses = 0;
    verdict.nonperturbation_witnesses = 0;

    GridSampler sampler;
    sampler.type = t;
    sampler.scale = scale;
    SampleOptions opts;
    opts.first_only = verdict.family_shortcut;
    sampler.opts = opts;
    check_grid_budget(t, scale, opts);
    sampler.cb = [&](const std::vector<IPt> &pts,
                     const std::vector<int> &f) {
      if (!scaled_type_matches(pts, t))
        return true;
      ++verdict.witnesses;
      if (!verdict.sample_witness)
        verdict.sample_witness = numerators_to_assignment(f, scale);
      if (!verdict.family_shortcut && !int_perturbation(pts)) {
        ++verdict.nonperturbation_witnesses;
        if (!verdict.sample_nonperturbation)
          verdict.sample_nonperturbation = numerators_to_assignment(f, scale);
      }
      return !opts.first_only;
    };
    sampler.run();

    if (verdict.witnesses > 0) {
      ++report.strings_realizable;
      report.total_nonperturbation += verdict.nonperturbation_witnesses;
      report.realizable.push_back(std::move(verdict));
    }
  }
  return report;
}

} // namespace crescent
