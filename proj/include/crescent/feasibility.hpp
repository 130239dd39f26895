#ifndef CRESCENT_FEASIBILITY_HPP
#define CRESCENT_FEASIBILITY_HPP

#include <algorithm>
#include <array>
#include <optional>

namespace crescent {

// Low-level geometric cores shared by the exact predicates and the
// integer fast path of the lattice search. The scalar type S needs
// +, -, *, comparisons and construction from small ints (ExactScalar,
// long long, __int128 all qualify).

template <typename S> struct XY {
  S x;
  S y;
};

template <typename S>
inline S cross3(const XY<S> &a, const XY<S> &b, const XY<S> &c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

template <typename S> struct SquareWitness {
  S left;   // x of the left side
  S bottom; // y of the bottom side
  S side;   // side length = 2r > 0
};

// Common axis-aligned square (Chebyshev circle) through four points.
//
// Enumerates the 4^4 assignments of points to sides {left, right,
// bottom, top}. An assignment reduces to a one-variable feasibility
// problem in the side length w: side equalities pin w or the square's
// position, range inequalities only ever bound w from below, so the
// assignment is feasible iff the pinned/minimal w passes every check
// with w > 0. Corner points satisfy both adjacent side equalities, so
// they are covered by the enumeration without special cases.
template <typename S>
std::optional<SquareWitness<S>> common_chebyshev_circle(
    const std::array<XY<S>, 4> &pts) {
  enum { kLeft = 0, kRight = 1, kBottom = 2, kTop = 3 };
  for (int code = 0; code < 256; ++code) {
    bool have_xl = false, have_xr = false, have_yb = false, have_yt = false;
    S xl{}, xr{}, yb{}, yt{};
    bool have_lr = false, have_bt = false;
    S lr_ymin{}, lr_ymax{}, bt_xmin{}, bt_xmax{};
    bool bad = false;

    for (int i = 0; i < 4 && !bad; ++i) {
      const int side = (code >> (2 * i)) & 3;
      const XY<S> &p = pts[i];
      switch (side) {
      case kLeft:
        if (have_xl && xl != p.x)
          bad = true;
        xl = p.x;
        have_xl = true;
        break;
      case kRight:
        if (have_xr && xr != p.x)
          bad = true;
        xr = p.x;
        have_xr = true;
        break;
      case kBottom:
        if (have_yb && yb != p.y)
          bad = true;
        yb = p.y;
        have_yb = true;
        break;
      case kTop:
        if (have_yt && yt != p.y)
          bad = true;
        yt = p.y;
        have_yt = true;
        break;
      }
      if (side == kLeft || side == kRight) {
        if (!have_lr) {
          lr_ymin = lr_ymax = p.y;
          have_lr = true;
        } else {
          lr_ymin = std::min(lr_ymin, p.y);
          lr_ymax = std::max(lr_ymax, p.y);
        }
      } else {
        if (!have_bt) {
          bt_xmin = bt_xmax = p.x;
          have_bt = true;
        } else {
          bt_xmin = std::min(bt_xmin, p.x);
          bt_xmax = std::max(bt_xmax, p.x);
        }
      }
    }
    if (bad)
      continue;

    bool have_pin = false;
    S pin{};
    if (have_xl && have_xr) {
      pin = xr - xl;
      have_pin = true;
    }
    if (have_yb && have_yt) {
      S pin2 = yt - yb;
      if (have_pin && pin != pin2)
        continue;
      pin = pin2;
      have_pin = true;
    }

    S wlow = S(0); // implicit w > 0 handled at the end
    bool ok = true;
    if (have_bt) {
      if (have_xl) {
        if (xl > bt_xmin)
          ok = false;
        wlow = std::max(wlow, bt_xmax - xl);
      } else if (have_xr) {
        if (xr < bt_xmax)
          ok = false;
        wlow = std::max(wlow, xr - bt_xmin);
      } else {
        wlow = std::max(wlow, bt_xmax - bt_xmin);
      }
    }
    if (have_lr) {
      if (have_yb) {
        if (yb > lr_ymin)
          ok = false;
        wlow = std::max(wlow, lr_ymax - yb);
      } else if (have_yt) {
        if (yt < lr_ymax)
          ok = false;
        wlow = std::max(wlow, yt - lr_ymin);
      } else {
        wlow = std::max(wlow, lr_ymax - lr_ymin);
      }
    }
    if (!ok)
      continue;

    S w{};
    if (have_pin) {
      if (!(pin > S(0)) || pin < wlow)
        continue;
      w = pin;
    } else {
      w = std::max(wlow, S(1));
    }

    S u = have_xl ? xl
                  : (have_xr ? xr - w : (have_bt ? bt_xmax - w : S(0)));
    S s = have_yb ? yb
                  : (have_yt ? yt - w : (have_lr ? lr_ymax - w : S(0)));
    return SquareWitness<S>{u, s, w};
  }
  return std::nullopt;
}

// Existence-only variant of the common-square test, organized as a case
// split instead of an assignment enumeration: if both the left and right
// side carry points the width is pinned to the x-spread (symmetrically
// for y); otherwise at most one side per axis is used and the points
// must share coordinate lines, with the square free to grow. Used on the
// hot paths where no witness is needed.
template <typename S>
bool chebyshev_concyclic4_fast(const std::array<S, 2> &q0,
                               const std::array<S, 2> &q1,
                               const std::array<S, 2> &q2,
                               const std::array<S, 2> &q3) {
  const std::array<S, 2> pts[4] = {q0, q1, q2, q3};
  S minx = q0[0], maxx = q0[0], miny = q0[1], maxy = q0[1];
  for (int i = 1; i < 4; ++i) {
    minx = std::min(minx, pts[i][0]);
    maxx = std::max(maxx, pts[i][0]);
    miny = std::min(miny, pts[i][1]);
    maxy = std::max(maxy, pts[i][1]);
  }

  auto try_axis = [&](int fix, int other, S lo_fix, S hi_fix, S lo_other,
                      S hi_other) {
    // sides perpendicular to `fix` sit at lo_fix / hi_fix; width pinned
    const S w = hi_fix - lo_fix;
    if (!(w > S(0)))
      return false;
    auto validate = [&](S s) {
      for (const auto &p : pts) {
        if (p[fix] == lo_fix || p[fix] == hi_fix) {
          if (p[other] < s || p[other] > s + w)
            return false;
        } else if (p[other] != s && p[other] != s + w) {
          return false;
        }
      }
      return true;
    };
    S vals[2];
    int nvals = 0;
    for (const auto &p : pts) {
      if (p[fix] == lo_fix || p[fix] == hi_fix)
        continue;
      bool known = false;
      for (int v = 0; v < nvals; ++v)
        known = known || vals[v] == p[other];
      if (known)
        continue;
      if (nvals == 2)
        return false;
      vals[nvals++] = p[other];
    }
    if (nvals == 0)
      return hi_other - lo_other <= w;
    if (nvals == 1)
      return validate(vals[0]) || validate(vals[0] - w);
    const S lo = std::min(vals[0], vals[1]);
    const S hi = std::max(vals[0], vals[1]);
    return hi - lo == w && validate(lo);
  };
  if (try_axis(0, 1, minx, maxx, miny, maxy))
    return true;
  if (try_axis(1, 0, miny, maxy, minx, maxx))
    return true;

  // At most one side per axis: a subset shares an x, the rest share a y,
  // and the square can be taken large enough once the side placements
  // leave every point inside.
  for (int mask = 0; mask < 16; ++mask) {
    S chi{}, gamma{};
    bool have_chi = false, have_gamma = false, ok = true;
    for (int i = 0; i < 4 && ok; ++i) {
      if (mask & (1 << i)) {
        if (!have_chi) {
          chi = pts[i][0];
          have_chi = true;
        } else if (pts[i][0] != chi) {
          ok = false;
        }
      } else {
        if (!have_gamma) {
          gamma = pts[i][1];
          have_gamma = true;
        } else if (pts[i][1] != gamma) {
          ok = false;
        }
      }
    }
    if (!ok)
      continue;
    if (!have_chi || !have_gamma)
      return true; // all on one coordinate line
    for (int sxs = 0; sxs < 2; ++sxs)
      for (int sys = 0; sys < 2; ++sys) {
        bool fits = true;
        for (int i = 0; i < 4 && fits; ++i) {
          if (mask & (1 << i)) {
            if (sys == 0 ? pts[i][1] < gamma : pts[i][1] > gamma)
              fits = false;
          } else {
            if (sxs == 0 ? pts[i][0] < chi : pts[i][0] > chi)
              fits = false;
          }
        }
        if (fits)
          return true;
      }
  }
  return false;
}

// Whether six pairwise distances admit an ordering with the equality
// pattern of four equally spaced collinear points: three consecutive
// gaps share one value, the two double gaps share a second value, and
// the full gap is a third value distinct from both. d[a][b] must be
// symmetric; the diagonal is ignored.
template <typename S>
bool linelike_four_pattern(const std::array<std::array<S, 4>, 4> &d) {
  static const int orders[12][4] = {
      {0, 1, 2, 3}, {0, 1, 3, 2}, {0, 2, 1, 3}, {0, 2, 3, 1},
      {0, 3, 1, 2}, {0, 3, 2, 1}, {1, 0, 2, 3}, {1, 0, 3, 2},
      {1, 2, 0, 3}, {1, 3, 0, 2}, {2, 0, 1, 3}, {2, 1, 0, 3}};
  for (const auto &o : orders) {
    const S d1 = d[o[0]][o[1]];
    if (d[o[1]][o[2]] != d1 || d[o[2]][o[3]] != d1)
      continue;
    const S d2 = d[o[0]][o[2]];
    if (d[o[1]][o[3]] != d2 || d2 == d1)
      continue;
    const S d3 = d[o[0]][o[3]];
    if (d3 == d1 || d3 == d2)
      continue;
    return true;
  }
  return false;
}

} // namespace crescent

#endif
