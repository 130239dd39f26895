#include "crescent/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <climits>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "crescent/feasibility.hpp"

namespace crescent {

using json = nlohmann::json;

Point LatticeSpec::plane_point(int a, int b) const {
  if (kind == LatticeKind::square)
    return Point(a, b);
  // (a + b/2, b * sqrt(3)/2)
  return Point(ExactScalar(make_rational(2 * a + b, 2)),
               ExactScalar(Rational(0), make_rational(b, 2)));
}

namespace {

using Mat = std::array<std::array<long long, 2>, 2>;

Mat mat_mul(const Mat &m, const Mat &n) {
  Mat r{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      r[i][j] = m[i][0] * n[0][j] + m[i][1] * n[1][j];
  return r;
}

// Integer matrices of the point symmetry group in lattice coordinates,
// generated by closure from a rotation and a mirror.
std::vector<Mat> symmetry_group(LatticeKind kind) {
  Mat rot, mirror;
  if (kind == LatticeKind::square) {
    rot = {{{0, -1}, {1, 0}}};    // quarter turn
    mirror = {{{0, 1}, {1, 0}}};  // swap axes
  } else {
    rot = {{{0, -1}, {1, 1}}};    // sixth turn in (a, b) coordinates
    mirror = {{{1, 1}, {0, -1}}}; // reflection across the x-axis
  }
  std::vector<Mat> group{Mat{{{1, 0}, {0, 1}}}};
  bool grew = true;
  while (grew) {
    grew = false;
    for (size_t i = 0; i < group.size(); ++i)
      for (const Mat &g : {rot, mirror}) {
        Mat cand = mat_mul(g, group[i]);
        bool seen = false;
        for (const Mat &m : group)
          seen = seen || m == cand;
        if (!seen) {
          group.push_back(cand);
          grew = true;
        }
      }
  }
  return group;
}

} // namespace

LatticePoints canonicalize_lattice(LatticePoints pts, LatticeKind kind) {
  const auto group = symmetry_group(kind);
  LatticePoints best;
  for (const Mat &g : group) {
    LatticePoints img;
    img.reserve(pts.size());
    long long mina = LLONG_MAX, minb = LLONG_MAX;
    for (const auto &p : pts) {
      const long long a = g[0][0] * p[0] + g[0][1] * p[1];
      const long long b = g[1][0] * p[0] + g[1][1] * p[1];
      mina = std::min(mina, a);
      minb = std::min(minb, b);
      img.push_back({static_cast<int>(a), static_cast<int>(b)});
    }
    for (auto &p : img) {
      p[0] -= static_cast<int>(mina);
      p[1] -= static_cast<int>(minb);
    }
    std::sort(img.begin(), img.end());
    if (best.empty() || img < best)
      best = std::move(img);
  }
  return best;
}

namespace {

std::array<int, 2> lattice_coords_of(const Point &p, LatticeKind kind) {
  auto as_int = [](const Rational &q) -> long long {
    if (q.get_den() != 1)
      throw std::invalid_argument("point is not on the lattice");
    return q.get_num().get_si();
  };
  if (kind == LatticeKind::square) {
    if (!p.x.is_rational() || !p.y.is_rational())
      throw std::invalid_argument("point is not on the square lattice");
    return {static_cast<int>(as_int(p.x.rat_part())),
            static_cast<int>(as_int(p.y.rat_part()))};
  }
  if (sgn(p.y.rat_part()) != 0)
    throw std::invalid_argument("point is not on the triangular lattice");
  const Rational b2 = p.y.sqrt3_part() * 2; // b = 2 * s3(y)
  const long long b = as_int(b2);
  if (!p.x.is_rational())
    throw std::invalid_argument("point is not on the triangular lattice");
  const Rational a2 = p.x.rat_part() * 2 - b2; // 2a = 2x - b
  const long long a2v = as_int(a2);
  if (a2v % 2 != 0)
    throw std::invalid_argument("point is not on the triangular lattice");
  return {static_cast<int>(a2v / 2), static_cast<int>(b)};
}

} // namespace

Configuration canonicalize(const Configuration &cfg,
                           const LatticeSpec &lattice) {
  LatticePoints pts;
  for (const Point &p : cfg.points)
    pts.push_back(lattice_coords_of(p, lattice.kind));
  pts = canonicalize_lattice(std::move(pts), lattice.kind);
  std::vector<Point> plane;
  for (const auto &p : pts)
    plane.push_back(lattice.plane_point(p[0], p[1]));
  return Configuration(std::move(plane), cfg.norm);
}

// ---- engine ---------------------------------------------------------------

namespace {

using IPt = std::array<long long, 2>;

enum class CircleCheck { chebyshev, det_square, det_triangular, exact, none };

struct UnitResult {
  bool done = false;
  std::vector<LatticePoints> hits;
  long long nodes = 0;
  PruneCounters prunes;
};

struct Engine {
  SearchParams P;
  int N = 0, n = 0, width = 0;
  std::vector<IPt> lat;     // lattice coordinates per index
  std::vector<IPt> circ;    // coordinates used by the circle check
  std::vector<long long> circ_z; // x^2+y^2 (scaled) for determinant checks
  CircleCheck ckind = CircleCheck::none;
  std::vector<Point> plane;
  std::vector<uint16_t> dc; // distance class ids, N x N
  int nclasses = 0;
  std::vector<int> next_a0; // next index >= i whose a-coordinate is 0
  long long node_cap = 0;

  std::atomic<long long> nodes_total{0};
  std::atomic<long long> first_hit_unit{LLONG_MAX};

  std::vector<std::pair<int, int>> units;
  std::vector<UnitResult> results;

  explicit Engine(const SearchParams &params) : P(params) { prepare(); }

  void prepare() {
    if (!P.norm.exact())
      throw UnsupportedExactNorm("search requires an exact norm");
    if (P.lattice.width <= 0 || P.lattice.height <= 0)
      throw std::invalid_argument("lattice must be nonempty");
    n = P.target_size;
    if (n < 3)
      throw std::invalid_argument("target size must be at least 3");
    N = P.lattice.point_count();
    if (n > N)
      throw std::invalid_argument("target size exceeds lattice size");
    width = P.lattice.width;

    node_cap = P.node_cap;
    if (const char *env = std::getenv("CRESCENT_NODE_CAP")) {
      char *end = nullptr;
      const long long v = std::strtoll(env, &end, 10);
      if (end && *end == '\0' && v > 0)
        node_cap = v;
    }

    lat.resize(N);
    plane.resize(N);
    for (int b = 0; b < P.lattice.height; ++b)
      for (int a = 0; a < width; ++a) {
        const int idx = b * width + a;
        lat[idx] = {a, b};
        plane[idx] = P.lattice.plane_point(a, b);
      }

    const bool square = P.lattice.kind == LatticeKind::square;
    switch (P.norm.kind()) {
    case NormKind::Linf:
      if (square) {
        ckind = CircleCheck::chebyshev;
        circ = lat;
      } else {
        ckind = CircleCheck::exact;
      }
      break;
    case NormKind::L1:
      if (square) {
        // duality transform turns L1 circles into Chebyshev circles
        ckind = CircleCheck::chebyshev;
        circ.resize(N);
        for (int i = 0; i < N; ++i)
          circ[i] = {lat[i][0] + lat[i][1], lat[i][0] - lat[i][1]};
      } else {
        ckind = CircleCheck::exact;
      }
      break;
    case NormKind::L2:
      if (square) {
        ckind = CircleCheck::det_square;
        circ = lat;
      } else {
        // scale to integers: (x, y) = (X/2, Y*sqrt(3)/2), X = 2a+b, Y = b
        ckind = CircleCheck::det_triangular;
        circ.resize(N);
        for (int i = 0; i < N; ++i)
          circ[i] = {2 * lat[i][0] + lat[i][1], lat[i][1]};
      }
      break;
    default:
      ckind = CircleCheck::exact;
      break;
    }
    if (ckind == CircleCheck::det_square) {
      circ_z.resize(N);
      for (int i = 0; i < N; ++i)
        circ_z[i] = circ[i][0] * circ[i][0] + circ[i][1] * circ[i][1];
    } else if (ckind == CircleCheck::det_triangular) {
      circ_z.resize(N);
      for (int i = 0; i < N; ++i)
        circ_z[i] = circ[i][0] * circ[i][0] + 3 * circ[i][1] * circ[i][1];
    }

    build_distance_classes();

    next_a0.assign(N + 1, N);
    for (int i = N - 1; i >= 0; --i)
      next_a0[i] = (lat[i][0] == 0) ? i : next_a0[i + 1];

    build_units();
    results.assign(units.size(), UnitResult{});
  }

  void build_distance_classes() {
    dc.assign(static_cast<size_t>(N) * N, 0);
    const bool square = P.lattice.kind == LatticeKind::square;
    auto int_value = [&](int i, int j) -> long long {
      const long long da = lat[j][0] - lat[i][0];
      const long long db = lat[j][1] - lat[i][1];
      switch (P.norm.kind()) {
      case NormKind::Linf:
        return std::max(std::llabs(da), std::llabs(db));
      case NormKind::L1:
        return std::llabs(da) + std::llabs(db);
      case NormKind::L2:
        return square ? da * da + db * db : da * da + da * db + db * db;
      default:
        return 0;
      }
    };
    const bool fast = square && P.norm.kind() != NormKind::Polygonal;
    const bool tri_l2 =
        !square && P.norm.kind() == NormKind::L2; // still integral
    if (fast || tri_l2) {
      std::vector<long long> vals;
      for (int i = 0; i < N; ++i)
        for (int j = i + 1; j < N; ++j)
          vals.push_back(int_value(i, j));
      std::sort(vals.begin(), vals.end());
      vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
      nclasses = static_cast<int>(vals.size());
      for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
          if (i == j)
            continue;
          const long long v = int_value(std::min(i, j), std::max(i, j));
          const int id = static_cast<int>(
              std::lower_bound(vals.begin(), vals.end(), v) - vals.begin());
          dc[static_cast<size_t>(i) * N + j] = static_cast<uint16_t>(id);
        }
      return;
    }
    // generic path: exact gauges
    std::map<ExactScalar, int> ids;
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) {
        if (i == j)
          continue;
        const ExactScalar g = gauge(P.norm, plane[j] - plane[i]);
        auto it = ids.find(g);
        int id;
        if (it == ids.end()) {
          id = static_cast<int>(ids.size());
          ids.emplace(g, id);
        } else {
          id = it->second;
        }
        dc[static_cast<size_t>(i) * N + j] = static_cast<uint16_t>(id);
      }
    nclasses = static_cast<int>(ids.size());
  }

  void build_units() {
    for (int i = 0; i < N; ++i) {
      if (P.symmetry_reduction && lat[i][1] != 0)
        break; // row-major order: all later indices have b > 0 as well
      for (int j = i + 1; j < N; ++j)
        units.push_back({i, j});
    }
  }

  struct Ctx {
    std::vector<int> chosen;
    std::vector<int> cnt;
    std::vector<int> nonzero_stack;
    int distinct = 0;
    int col0 = 0;
    long long unit_id = 0;
    UnitResult *out = nullptr;
    long long local_nodes = 0;
    bool stopped = false; // first-mode abort or node cap
    bool capped = false;
  };

  inline uint16_t cls(int i, int j) const {
    return dc[static_cast<size_t>(i) * N + j];
  }

  bool concyclic_with(const Ctx &c, int q) const {
    const auto &ch = c.chosen;
    const int k = static_cast<int>(ch.size());
    switch (ckind) {
    case CircleCheck::chebyshev:
      for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
          for (int l = j + 1; l < k; ++l)
            if (chebyshev_concyclic4_fast(circ[ch[i]], circ[ch[j]],
                                          circ[ch[l]], circ[q]))
              return true;
      return false;
    case CircleCheck::det_square:
    case CircleCheck::det_triangular:
      for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
          for (int l = j + 1; l < k; ++l) {
            const int a = ch[i], b = ch[j], e = ch[l];
            const long long m00 = circ[a][0] - circ[q][0];
            const long long m01 = circ[a][1] - circ[q][1];
            const long long m02 = circ_z[a] - circ_z[q];
            const long long m10 = circ[b][0] - circ[q][0];
            const long long m11 = circ[b][1] - circ[q][1];
            const long long m12 = circ_z[b] - circ_z[q];
            const long long m20 = circ[e][0] - circ[q][0];
            const long long m21 = circ[e][1] - circ[q][1];
            const long long m22 = circ_z[e] - circ_z[q];
            const long long det = m00 * (m11 * m22 - m12 * m21) -
                                  m01 * (m10 * m22 - m12 * m20) +
                                  m02 * (m10 * m21 - m11 * m20);
            if (det == 0)
              return true;
          }
      return false;
    case CircleCheck::exact:
      for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
          for (int l = j + 1; l < k; ++l)
            if (concyclic4(P.norm, plane[ch[i]], plane[ch[j]], plane[ch[l]],
                           plane[q]))
              return true;
      return false;
    case CircleCheck::none:
      return false;
    }
    return false;
  }

  bool linelike4_with(const Ctx &c, int q) const {
    const auto &ch = c.chosen;
    const int k = static_cast<int>(ch.size());
    std::array<std::array<int, 4>, 4> d{};
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j)
        for (int l = j + 1; l < k; ++l) {
          const int ids[4] = {ch[i], ch[j], ch[l], q};
          for (int u = 0; u < 4; ++u)
            for (int v = u + 1; v < 4; ++v)
              d[u][v] = d[v][u] = cls(ids[u], ids[v]);
          if (linelike_four_pattern(d))
            return true;
        }
    return false;
  }

  // Applies the new point to the multiplicity state; returns false and
  // rolls back when a budget is violated.
  bool apply_multiplicity(Ctx &c, int q, int *pushed) {
    *pushed = 0;
    const int budget = n - 1;
    for (size_t idx = 0; idx < c.chosen.size(); ++idx) {
      const int id = cls(c.chosen[idx], q);
      int &slot = c.cnt[id];
      if (slot == 0) {
        if (c.distinct == budget) { // would exceed distinct budget
          rollback_multiplicity(c, q, static_cast<int>(idx), *pushed);
          return false;
        }
        ++c.distinct;
        c.nonzero_stack.push_back(id);
        ++*pushed;
      }
      if (++slot > budget) {
        rollback_multiplicity(c, q, static_cast<int>(idx) + 1, *pushed);
        return false;
      }
    }
    return true;
  }

  void rollback_multiplicity(Ctx &c, int q, int applied, int pushed) {
    for (int idx = applied - 1; idx >= 0; --idx) {
      const int id = cls(c.chosen[idx], q);
      if (--c.cnt[id] == 0)
        --c.distinct;
    }
    for (int i = 0; i < pushed; ++i)
      c.nonzero_stack.pop_back();
  }

  bool greedy_budget_ok(const Ctx &c) const {
    // Sorted multiplicities must embed under distinct targets {1..n-1}.
    std::vector<int> ms;
    ms.reserve(c.nonzero_stack.size());
    for (int id : c.nonzero_stack)
      if (c.cnt[id] > 0)
        ms.push_back(c.cnt[id]);
    std::sort(ms.begin(), ms.end(), std::greater<int>());
    for (size_t i = 0; i < ms.size(); ++i)
      if (ms[i] > n - 1 - static_cast<int>(i))
        return false;
    return true;
  }

  void emit_hit(Ctx &c) {
    LatticePoints pts;
    for (int idx : c.chosen)
      pts.push_back({static_cast<int>(lat[idx][0]),
                     static_cast<int>(lat[idx][1])});
    c.out->hits.push_back(std::move(pts));
    if (P.mode == SearchMode::first) {
      long long cur = first_hit_unit.load(std::memory_order_relaxed);
      while (c.unit_id < cur &&
             !first_hit_unit.compare_exchange_weak(cur, c.unit_id)) {
      }
      c.stopped = true;
    }
  }

  void dfs(Ctx &c, int last) {
    if (c.stopped)
      return;
    const int depth = static_cast<int>(c.chosen.size());
    if (depth == n) {
      // exact final multiset check: counts must be exactly {1, .., n-1}
      std::vector<int> ms;
      for (int id : c.nonzero_stack)
        ms.push_back(c.cnt[id]);
      std::sort(ms.begin(), ms.end());
      if (P.prune_profile == PruneProfile::full) {
        if (static_cast<int>(ms.size()) != n - 1)
          return;
        for (int i = 0; i < n - 1; ++i)
          if (ms[i] != i + 1)
            return;
      }
      emit_hit(c);
      return;
    }
    // Not enough indices left?
    for (int q = last + 1; q <= N - (n - depth); ++q) {
      if (c.stopped)
        return;
      ++c.local_nodes;
      if ((c.local_nodes & 1023) == 0) {
        nodes_total.fetch_add(1024, std::memory_order_relaxed);
        if (node_cap > 0 &&
            nodes_total.load(std::memory_order_relaxed) > node_cap) {
          c.stopped = true;
          c.capped = true;
          return;
        }
        if (P.mode == SearchMode::first &&
            first_hit_unit.load(std::memory_order_relaxed) < c.unit_id) {
          c.stopped = true;
          return;
        }
      }
      // translation touch: some point must sit in column a = 0
      if (P.symmetry_reduction && c.col0 == 0 && lat[q][0] != 0 &&
          next_a0[q + 1] == N) {
        ++c.out->prunes.symmetry;
        continue;
      }
      bool bad = false;
      for (size_t i = 0; i < c.chosen.size() && !bad; ++i)
        for (size_t j = i + 1; j < c.chosen.size() && !bad; ++j) {
          const IPt &A = lat[c.chosen[i]], &B = lat[c.chosen[j]],
                    &Q = lat[q];
          bad = (B[0] - A[0]) * (Q[1] - A[1]) ==
                (B[1] - A[1]) * (Q[0] - A[0]);
        }
      if (bad) {
        ++c.out->prunes.collinear;
        continue;
      }
      if (P.prune_profile == PruneProfile::full) {
        int pushed = 0;
        if (!apply_multiplicity(c, q, &pushed)) {
          ++c.out->prunes.multiplicity;
          continue;
        }
        if (depth + 1 >= n - 2 && !greedy_budget_ok(c)) {
          rollback_multiplicity(c, q, static_cast<int>(c.chosen.size()),
                                pushed);
          ++c.out->prunes.multiplicity;
          continue;
        }
        if (depth >= 3 && linelike4_with(c, q)) {
          rollback_multiplicity(c, q, static_cast<int>(c.chosen.size()),
                                pushed);
          ++c.out->prunes.linelike_four;
          continue;
        }
        if (depth >= 3 && concyclic_with(c, q)) {
          rollback_multiplicity(c, q, static_cast<int>(c.chosen.size()),
                                pushed);
          ++c.out->prunes.concyclic;
          continue;
        }
        c.chosen.push_back(q);
        if (lat[q][0] == 0)
          ++c.col0;
        dfs(c, q);
        if (lat[q][0] == 0)
          --c.col0;
        c.chosen.pop_back();
        rollback_multiplicity(c, q, static_cast<int>(c.chosen.size()),
                              pushed);
      } else {
        c.chosen.push_back(q);
        if (lat[q][0] == 0)
          ++c.col0;
        dfs(c, q);
        if (lat[q][0] == 0)
          --c.col0;
        c.chosen.pop_back();
      }
    }
  }

  void run_unit(size_t u) {
    UnitResult &res = results[u];
    Ctx c;
    c.cnt.assign(nclasses, 0);
    c.unit_id = static_cast<long long>(u);
    c.out = &res;
    const auto [i, j] = units[u];
    // seed the pair through the same machinery
    c.chosen.push_back(i);
    if (lat[i][0] == 0)
      ++c.col0;
    int pushed = 0;
    if (P.prune_profile == PruneProfile::full)
      apply_multiplicity(c, j, &pushed); // a single pair cannot violate
    c.chosen.push_back(j);
    if (lat[j][0] == 0)
      ++c.col0;
    dfs(c, j);
    nodes_total.fetch_add(c.local_nodes & 1023, std::memory_order_relaxed);
    res.nodes = c.local_nodes;
    res.done = !c.capped;
    if (c.capped)
      throw ResourceLimit("search node cap exceeded");
  }
};

std::string params_signature(const SearchParams &P) {
  std::ostringstream os;
  os << (P.lattice.kind == LatticeKind::square ? "square" : "triangular")
     << "|" << P.lattice.width << "x" << P.lattice.height << "|"
     << P.norm.name() << "|n=" << P.target_size << "|mode="
     << static_cast<int>(P.mode) << "|sym=" << P.symmetry_reduction
     << "|prune=" << static_cast<int>(P.prune_profile);
  return os.str();
}

void load_checkpoint(const std::string &path, const std::string &signature,
                     std::vector<UnitResult> &results,
                     const std::vector<std::pair<int, int>> &units) {
  std::ifstream in(path);
  if (!in.good())
    return;
  std::string line;
  bool have_header = false;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty())
      continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::exception &e) {
      throw CheckpointFormatError("checkpoint line " + std::to_string(lineno) +
                                  ": " + e.what());
    }
    if (!have_header) {
      if (!j.contains("format") || j["format"] != "crescent-checkpoint" ||
          !j.contains("signature"))
        throw CheckpointFormatError("checkpoint header missing or malformed");
      if (j["signature"] != signature)
        throw CheckpointFormatError(
            "checkpoint was produced by different search parameters");
      have_header = true;
      continue;
    }
    try {
      const int ui = j.at("u").at(0).get<int>();
      const int uj = j.at("u").at(1).get<int>();
      size_t idx = units.size();
      for (size_t k = 0; k < units.size(); ++k)
        if (units[k].first == ui && units[k].second == uj) {
          idx = k;
          break;
        }
      if (idx == units.size())
        throw CheckpointFormatError("checkpoint unit not in schedule");
      UnitResult &r = results[idx];
      r.done = true;
      r.nodes = j.at("n").get<long long>();
      r.prunes.collinear = j.at("p").at("col").get<long long>();
      r.prunes.multiplicity = j.at("p").at("mul").get<long long>();
      r.prunes.linelike_four = j.at("p").at("ll4").get<long long>();
      r.prunes.concyclic = j.at("p").at("cyc").get<long long>();
      r.prunes.symmetry = j.at("p").at("sym").get<long long>();
      for (const auto &hit : j.at("h")) {
        LatticePoints pts;
        for (const auto &pt : hit)
          pts.push_back({pt.at(0).get<int>(), pt.at(1).get<int>()});
        r.hits.push_back(std::move(pts));
      }
    } catch (const json::exception &e) {
      throw CheckpointFormatError("checkpoint line " + std::to_string(lineno) +
                                  ": " + e.what());
    }
  }
  if (!have_header && lineno > 0)
    throw CheckpointFormatError("checkpoint has no header");
}

void append_unit_line(std::ofstream &out, const std::pair<int, int> &unit,
                      const UnitResult &r) {
  json j;
  j["u"] = {unit.first, unit.second};
  j["n"] = r.nodes;
  j["p"] = {{"col", r.prunes.collinear},
            {"mul", r.prunes.multiplicity},
            {"ll4", r.prunes.linelike_four},
            {"cyc", r.prunes.concyclic},
            {"sym", r.prunes.symmetry}};
  json hits = json::array();
  for (const auto &h : r.hits) {
    json pts = json::array();
    for (const auto &p : h)
      pts.push_back({p[0], p[1]});
    hits.push_back(pts);
  }
  j["h"] = hits;
  out << j.dump() << "\n";
  out.flush();
}

} // namespace

SearchResult search(const SearchParams &params) {
  const auto t0 = std::chrono::steady_clock::now();
  Engine eng(params);

  const std::string signature = params_signature(params);
  const bool checkpointing = !params.checkpoint_path.empty();
  std::ofstream ckpt_out;
  if (checkpointing) {
    load_checkpoint(params.checkpoint_path, signature, eng.results,
                    eng.units);
    bool fresh = true;
    {
      std::ifstream probe(params.checkpoint_path);
      fresh = !probe.good() || probe.peek() == std::ifstream::traits_type::eof();
    }
    ckpt_out.open(params.checkpoint_path, std::ios::app);
    if (!ckpt_out.good())
      throw std::runtime_error("cannot open checkpoint file for writing");
    if (fresh) {
      json header;
      header["format"] = "crescent-checkpoint";
      header["version"] = 1;
      header["signature"] = signature;
      ckpt_out << header.dump() << "\n";
      ckpt_out.flush();
    }
  }

  // pending units, in deterministic order
  std::vector<size_t> pending;
  for (size_t u = 0; u < eng.units.size(); ++u)
    if (!eng.results[u].done)
      pending.push_back(u);
  if (params.max_units > 0 &&
      static_cast<long long>(pending.size()) > params.max_units)
    pending.resize(params.max_units);

  std::atomic<size_t> cursor{0};
  std::mutex ckpt_mutex;
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&]() {
    while (true) {
      const size_t slot = cursor.fetch_add(1);
      if (slot >= pending.size())
        return;
      const size_t u = pending[slot];
      if (params.mode == SearchMode::first &&
          eng.first_hit_unit.load() < static_cast<long long>(u))
        continue; // deterministic early-out; unit can be skipped entirely
      try {
        eng.run_unit(u);
      } catch (...) {
        std::lock_guard<std::mutex> lk(failure_mutex);
        if (!failure)
          failure = std::current_exception();
        return;
      }
      if (checkpointing) {
        std::lock_guard<std::mutex> lk(ckpt_mutex);
        append_unit_line(ckpt_out, eng.units[u], eng.results[u]);
      }
    }
  };
  const int nthreads = std::max(1, params.thread_count);
  if (nthreads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < nthreads; ++t)
      pool.emplace_back(worker);
    for (auto &t : pool)
      t.join();
  }
  if (failure)
    std::rethrow_exception(failure);

  SearchResult out;
  out.units_total = static_cast<long long>(eng.units.size());
  std::set<LatticePoints> canon;
  long long first_unit = eng.first_hit_unit.load();
  for (size_t u = 0; u < eng.units.size(); ++u) {
    const UnitResult &r = eng.results[u];
    if (r.done)
      ++out.units_done;
    out.nodes_expanded += r.nodes;
    out.prunes += r.prunes;
    if (params.mode == SearchMode::first &&
        static_cast<long long>(u) != first_unit)
      continue; // only the earliest unit's hit counts, for determinism
    for (const auto &h : r.hits) {
      ++out.raw_hits;
      canon.insert(canonicalize_lattice(h, params.lattice.kind));
      if (params.mode == SearchMode::first && !canon.empty())
        break;
    }
  }
  out.complete = out.units_done == out.units_total;
  out.canonical.assign(canon.begin(), canon.end());
  for (const auto &pts : out.canonical) {
    std::vector<Point> plane;
    for (const auto &p : pts)
      plane.push_back(params.lattice.plane_point(p[0], p[1]));
    Configuration cfg(std::move(plane), params.norm);
    if (params.prune_profile == PruneProfile::full &&
        !is_strong_crescent(cfg))
      throw std::logic_error("search produced a configuration that fails "
                             "exact re-verification");
    out.configurations.push_back(std::move(cfg));
  }
  out.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return out;
}

SearchResult verify_absence(const SearchParams &params) {
  if (params.mode != SearchMode::exhaustive_absence)
    throw std::invalid_argument("verify_absence requires exhaustive mode");
  return search(params);
}

} // namespace crescent
