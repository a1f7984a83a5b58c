#ifndef MTD_VERIFY_HPP
#define MTD_VERIFY_HPP

#include <cmath>
#include <cstdint>
#include <optional>
#include <utility>

#include "mtd/layout.hpp"
#include "mtd/tree.hpp"

namespace mtd {

enum class Check { pass, fail, not_applicable };

namespace detail {

using I64 = std::int64_t;

struct Vec {
  I64 x = 0, y = 0;
};

inline I64 cross(Vec a, Vec b) { return a.x * b.y - a.y * b.x; }
inline I64 dot(Vec a, Vec b) { return a.x * b.x + a.y * b.y; }

inline Vec edge_vec(const Drawing& d, Vertex from, Vertex to) {
  return {d.coords[to].x - d.coords[from].x, d.coords[to].y - d.coords[from].y};
}

/// CCW angular order from the positive x-axis, [0, 2pi).
inline bool angle_less(Vec a, Vec b) {
  auto half = [](Vec v) { return (v.y > 0 || (v.y == 0 && v.x > 0)) ? 0 : 1; };
  if (half(a) != half(b)) return half(a) < half(b);
  return cross(a, b) > 0;
}

inline int orient(GridPoint a, GridPoint b, GridPoint c) {
  I64 v = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  return (v > 0) - (v < 0);
}

inline bool on_segment(GridPoint a, GridPoint b, GridPoint c) {
  return orient(a, b, c) == 0 && std::min(a.x, b.x) <= c.x && c.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= c.y && c.y <= std::max(a.y, b.y);
}

inline bool segments_intersect(GridPoint p1, GridPoint p2, GridPoint p3, GridPoint p4) {
  int o1 = orient(p1, p2, p3), o2 = orient(p1, p2, p4);
  int o3 = orient(p3, p4, p1), o4 = orient(p3, p4, p2);
  if (o1 != o2 && o3 != o4) return true;
  return on_segment(p1, p2, p3) || on_segment(p1, p2, p4) || on_segment(p3, p4, p1) ||
         on_segment(p3, p4, p2);
}

/// Open angular arc of width < pi that must contain every direction seen so
/// far on a path; grown minimally, exact integer predicates only.
struct DirectionArc {
  Vec lo, hi;
  bool empty = true;
  bool ok = true;

  void add(Vec d) {
    if (!ok) return;
    if (empty) {
      lo = hi = d;
      empty = false;
      return;
    }
    if (cross(lo, hi) == 0 && dot(lo, hi) > 0) {  // single direction so far
      if (cross(lo, d) == 0 && dot(lo, d) > 0) return;
      if (cross(lo, d) > 0) hi = d;
      else if (cross(d, lo) > 0) lo = d;
      else ok = false;  // opposite direction: span exactly pi
      return;
    }
    if (cross(lo, d) >= 0 && cross(d, hi) >= 0) return;  // inside the arc
    if (cross(hi, d) >= 0 && cross(lo, d) > 0) hi = d;   // extend upward, span < pi
    else if (cross(d, lo) >= 0 && cross(d, hi) > 0) lo = d;
    else ok = false;
  }
};

}  // namespace detail

/// True iff some direction orders the drawn u-v path strictly: sort the
/// path's edge vectors by angle and look for a circular gap exceeding pi.
inline bool monotone_pair(const Drawing& d, const Tree& tree, Vertex u, Vertex v) {
  if (u == v) throw std::invalid_argument("monotone_pair: u == v");
  // path u -> v via parent pointers from a DFS rooted at u
  RootedTree rt = root_at(tree, u);
  std::vector<detail::Vec> dirs;
  for (Vertex w = v; w != u; w = rt.parent[w]) dirs.push_back(detail::edge_vec(d, rt.parent[w], w));
  std::sort(dirs.begin(), dirs.end(), detail::angle_less);
  bool one_direction = true;
  for (std::size_t i = 1; i < dirs.size(); ++i)
    if (!(detail::cross(dirs[0], dirs[i]) == 0 && detail::dot(dirs[0], dirs[i]) > 0))
      one_direction = false;
  if (one_direction) return true;
  for (std::size_t i = 0; i < dirs.size(); ++i) {
    detail::Vec a = dirs[i], b = dirs[(i + 1) % dirs.size()];
    if (detail::cross(a, b) < 0) return true;  // CCW gap from a to b exceeds pi
  }
  return false;
}

struct MonotoneResult {
  bool monotone = true;
  std::optional<std::pair<Vertex, Vertex>> witness;  // first failing pair
};

/// All-pairs monotonicity via one traversal per source, maintaining the
/// minimal direction arc along the root path.
inline MonotoneResult monotone_drawing_report(const Drawing& d, const Tree& tree) {
  const int n = tree.n();
  for (Vertex s = 0; s < n; ++s) {
    struct Frame {
      Vertex v, parent;
      detail::DirectionArc arc;
    };
    std::vector<Frame> stack{{s, -1, {}}};
    while (!stack.empty()) {
      Frame f = stack.back();
      stack.pop_back();
      for (Vertex w : tree.neighbors(f.v)) {
        if (w == f.parent) continue;
        Frame g{w, f.v, f.arc};
        g.arc.add(detail::edge_vec(d, f.v, w));
        if (!g.arc.ok) return {false, std::make_pair(s, w)};
        stack.push_back(std::move(g));
      }
    }
  }
  return {};
}

inline bool monotone_drawing(const Drawing& d, const Tree& tree) {
  return monotone_drawing_report(d, tree).monotone;
}

struct PlanarResult {
  bool planar = true;
  std::optional<std::pair<int, int>> crossing_edges;  // indices into edge_list()
};

/// Exact integer planarity check: no two edges cross, edges sharing an
/// endpoint touch only there, no vertex sits inside a non-incident edge,
/// and all vertex points are distinct.
inline PlanarResult planar_report(const Drawing& d, const Tree& tree) {
  auto edges = tree.edge_list();
  const int n = tree.n();
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (d.coords[u] == d.coords[v]) return {false, std::nullopt};
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      auto [a, b] = edges[i];
      auto [c, e] = edges[j];
      Vertex shared = -1;
      if (a == c || a == e) shared = a;
      else if (b == c || b == e) shared = b;
      if (shared >= 0) {
        Vertex p = (a == shared) ? b : a;
        Vertex q = (c == shared) ? e : c;
        detail::Vec d1 = detail::edge_vec(d, shared, p);
        detail::Vec d2 = detail::edge_vec(d, shared, q);
        if (detail::cross(d1, d2) == 0 && detail::dot(d1, d2) > 0)
          return {false, std::make_pair(static_cast<int>(i), static_cast<int>(j))};
        continue;
      }
      if (detail::segments_intersect(d.coords[a], d.coords[b], d.coords[c], d.coords[e]))
        return {false, std::make_pair(static_cast<int>(i), static_cast<int>(j))};
    }
  for (Vertex v = 0; v < n; ++v)
    for (std::size_t i = 0; i < edges.size(); ++i) {
      auto [a, b] = edges[i];
      if (v == a || v == b) continue;
      if (detail::on_segment(d.coords[a], d.coords[b], d.coords[v]))
        return {false, std::make_pair(static_cast<int>(i), static_cast<int>(i))};
    }
  return {};
}

inline bool planar(const Drawing& d, const Tree& tree) { return planar_report(d, tree).planar; }

struct NssdResult {
  Check state = Check::pass;
  int property = 0;  // 1, 2 or 3 on failure
  Vertex vertex = -1;
};

inline constexpr double kSlopeMargin = 1e-9;

/// Definition-level non-strictly slope-disjoint check. Property 1 compares
/// float slopes against the (exact) range boundaries with a 1e-9 margin;
/// boundary-exact edges (four-quadrant spines) are reported as failures.
/// Properties 2 and 3 are decided exactly on the rational boundaries.
inline NssdResult check_nssd(const Drawing& d, const RootedTree& rt, const AngleAssignment& a) {
  if (d.algorithm == Algo::four_q) return {Check::not_applicable, 0, -1};
  const int n = rt.tree.n();
  if (static_cast<int>(a.size()) != n)
    throw std::invalid_argument("check_nssd: assignment must cover every vertex");

  // P2 / P3, exact
  for (Vertex u = 0; u < n; ++u) {
    const auto& kids = rt.children[u];
    for (Vertex v : kids)
      if (!(a[u].lo <= a[v].lo && a[v].lo < a[v].hi && a[v].hi <= a[u].hi))
        return {Check::fail, 2, v};
    for (std::size_t i = 0; i + 1 < kids.size(); ++i)
      if (!(a[kids[i]].hi <= a[kids[i + 1]].lo)) return {Check::fail, 3, kids[i + 1]};
  }

  // P1: every edge of T_u plus the entering edge strictly inside u's range
  auto slope_of = [&](Vertex from, Vertex to) {
    detail::Vec v = detail::edge_vec(d, from, to);
    return std::atan2(static_cast<double>(v.y), static_cast<double>(v.x));
  };
  for (Vertex u = 0; u < n; ++u) {
    auto inside = [&](double s) {
      return s > a[u].lo.radians + kSlopeMargin && s < a[u].hi.radians - kSlopeMargin;
    };
    if (rt.parent[u] >= 0 && !inside(slope_of(rt.parent[u], u))) return {Check::fail, 1, u};
    std::vector<Vertex> stack{u};
    while (!stack.empty()) {
      Vertex w = stack.back();
      stack.pop_back();
      for (Vertex c : rt.children[w]) {
        if (!inside(slope_of(w, c))) return {Check::fail, 1, u};
        stack.push_back(c);
      }
    }
  }
  return {};
}

/// Theorem bound for the drawing's algorithm, dimensions in grid points.
inline GridDims allowed_dims(Algo algo, int n) {
  switch (algo) {
    case Algo::one_q:
      return {n, n};
    case Algo::two_q:
      if (n % 2 == 1) return {n, (n + 1) / 2};
      return {n + 1, n / 2 + 1};
    default: {
      std::int64_t b = (3LL * (n + 2)) / 4;
      return {b, b};
    }
  }
}

inline bool check_bounds(const Drawing& d, int n) {
  GridDims got = grid_dims(d);
  GridDims allow = allowed_dims(d.algorithm, n);
  return got.width_points <= allow.width_points && got.height_points <= allow.height_points;
}

/// Embedding respect: around each vertex, child edge slopes strictly
/// increase in child-list order. Not applicable to four-quadrant drawings.
inline Check check_embedding(const Drawing& d, const RootedTree& rt) {
  if (d.algorithm == Algo::four_q) return Check::not_applicable;
  for (Vertex u = 0; u < rt.tree.n(); ++u) {
    const auto& kids = rt.children[u];
    for (std::size_t i = 0; i + 1 < kids.size(); ++i) {
      detail::Vec a = detail::edge_vec(d, u, kids[i]);
      detail::Vec b = detail::edge_vec(d, u, kids[i + 1]);
      if (!detail::angle_less(a, b)) return Check::fail;
    }
  }
  return Check::pass;
}

/// Aggregated report over all applicable oracles.
struct VerificationReport {
  MonotoneResult monotone;
  PlanarResult planar;
  NssdResult nssd;
  bool bounds_ok = true;
  GridDims observed, allowed;
  Check embedding = Check::not_applicable;

  bool all_ok() const {
    return monotone.monotone && planar.planar && nssd.state != Check::fail && bounds_ok &&
           embedding != Check::fail;
  }
};

inline VerificationReport verify_drawing(const Drawing& d, const Tree& tree) {
  VerificationReport r;
  r.monotone = monotone_drawing_report(d, tree);
  r.planar = planar_report(d, tree);
  r.observed = grid_dims(d);
  r.allowed = allowed_dims(d.algorithm, tree.n());
  r.bounds_ok = r.observed.width_points <= r.allowed.width_points &&
                r.observed.height_points <= r.allowed.height_points;
  if (d.algorithm != Algo::four_q && d.angles) {
    RootedTree rt = root_at(tree, d.root_used);
    r.nssd = check_nssd(d, rt, *d.angles);
    r.embedding = check_embedding(d, rt);
  } else {
    r.nssd = {Check::not_applicable, 0, -1};
    r.embedding = Check::not_applicable;
  }
  return r;
}

}  // namespace mtd

#endif
