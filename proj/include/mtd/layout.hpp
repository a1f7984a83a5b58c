#ifndef MTD_LAYOUT_HPP
#define MTD_LAYOUT_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "mtd/angle.hpp"
#include "mtd/locator.hpp"
#include "mtd/tree.hpp"

namespace mtd {

struct GridPoint {
  std::int64_t x = 0;
  std::int64_t y = 0;
  friend bool operator==(const GridPoint&, const GridPoint&) = default;
};

enum class Algo { one_q, two_q, four_q };

inline const char* algo_name(Algo a) {
  switch (a) {
    case Algo::one_q: return "1q";
    case Algo::two_q: return "2q";
    default: return "4q";
  }
}

/// A straight-line grid drawing: vertex -> integer point, plus provenance.
/// four_q composites carry no single angle assignment (the two halves live
/// in incompatible frames); their t1_root records the gravity root of T1.
struct Drawing {
  std::vector<GridPoint> coords;
  Algo algorithm = Algo::one_q;
  Vertex root_used = 0;
  std::optional<AngleAssignment> angles;
  std::optional<Vertex> t1_root;
};

/// Bounding-box size measured in grid points per axis.
struct GridDims {
  std::int64_t width_points = 0;
  std::int64_t height_points = 0;
  friend bool operator==(const GridDims&, const GridDims&) = default;
};

inline GridDims grid_dims(const Drawing& d) {
  if (d.coords.empty()) throw std::invalid_argument("grid_dims: empty drawing");
  std::int64_t xmin = d.coords[0].x, xmax = xmin, ymin = d.coords[0].y, ymax = ymin;
  for (const auto& p : d.coords) {
    xmin = std::min(xmin, p.x);
    xmax = std::max(xmax, p.x);
    ymin = std::min(ymin, p.y);
    ymax = std::max(ymax, p.y);
  }
  return {xmax - xmin + 1, ymax - ymin + 1};
}

namespace detail {

/// Shared recursion of the one- and two-quadrant algorithms: place every
/// child at parent + locator(child range). Spine-flagged children (four-
/// quadrant modification only) are hard-placed one unit to the left.
template <typename Locator>
std::vector<GridPoint> place_vertices(const RootedTree& rt, const AngleAssignment& ranges,
                                      Locator&& locate, const std::vector<char>* spine = nullptr) {
  std::vector<GridPoint> pos(rt.tree.n());
  pos[rt.root] = {0, 0};
  for (Vertex u : rt.preorder())
    for (Vertex c : rt.children[u]) {
      GridVector v = (spine && (*spine)[c]) ? GridVector{-1, 0}
                                            : locate(ranges[c].lo, ranges[c].hi);
      pos[c] = {pos[u].x + v.x, pos[u].y + v.y};
    }
  return pos;
}

inline Drawing draw_two_quadrants_rooted(const RootedTree& rt, const std::vector<char>* spine) {
  AngleAssignment ranges = assign_angles(rt, AngleRange::of_pi_fractions(0, 1));
  Drawing d;
  d.coords = place_vertices(
      rt, ranges, [](const Angle& a, const Angle& b) { return locate_q12(a, b); }, spine);
  d.algorithm = Algo::two_q;
  d.root_used = rt.root;
  d.angles = std::move(ranges);
  return d;
}

/// Sorted vertex subset -> induced subtree with vertices relabeled by rank;
/// adjacency order (the embedding) is inherited from the host tree.
struct InducedSubtree {
  Tree tree;
  std::vector<Vertex> to_host;  // local id -> host id
  std::vector<Vertex> to_local; // host id -> local id (-1 outside)
};

inline InducedSubtree induce(const Tree& host, const std::vector<Vertex>& verts) {
  InducedSubtree out;
  out.to_host = verts;
  out.to_local.assign(host.n(), -1);
  for (std::size_t i = 0; i < verts.size(); ++i) out.to_local[verts[i]] = static_cast<Vertex>(i);
  std::vector<std::vector<Vertex>> adj(verts.size());
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (Vertex w : host.neighbors(verts[i]))
      if (out.to_local[w] >= 0) adj[i].push_back(out.to_local[w]);
  out.tree = Tree::from_adjacency(std::move(adj));
  return out;
}

}  // namespace detail

/// Algorithm 1: root at the origin, drawing confined to the first quadrant,
/// embedding respected; grid at most n x n points.
inline Drawing draw_one_quadrant(const RootedTree& rt) {
  AngleAssignment ranges = assign_angles(rt, AngleRange::of_pi_fractions(0, Rational(1, 2)));
  Drawing d;
  d.coords = detail::place_vertices(rt, ranges,
                                    [](const Angle& a, const Angle& b) { return locate_q1(a, b); });
  d.algorithm = Algo::one_q;
  d.root_used = rt.root;
  d.angles = std::move(ranges);
  return d;
}

/// Algorithm 3: re-roots at a gravity root, draws into the upper half plane,
/// embedding respected; grid at most n x (n+1)/2 (odd) or (n+1) x (n/2+1).
inline Drawing draw_two_quadrants(const Tree& tree) {
  RootedTree rt = root_at(tree, gravity_root(tree));
  return detail::draw_two_quadrants_rooted(rt, nullptr);
}

/// Algorithm 4: partition at the gravity root r, draw T1 by the two-quadrant
/// algorithm with the spine toward r laid on the negative X-axis, draw T2 by
/// the one-quadrant algorithm, reflect it below the X-axis and attach it at
/// r. Grid at most floor(3(n+2)/4) per side. Does not respect the embedding.
inline Drawing draw_four_quadrants(const Tree& tree) {
  const int n = tree.n();
  Drawing d;
  d.algorithm = Algo::four_q;
  if (n == 1) {
    d.coords = {{0, 0}};
    return d;
  }
  if (n == 2) {
    d.coords = {{0, 0}, {1, 1}};
    return d;
  }
  Partition part = partition_at_gravity_root(tree);
  const Vertex r = part.shared_root;
  d.root_used = r;

  // T1: gravity-rooted (search starts at r), spine reordered toward r
  detail::InducedSubtree t1 = detail::induce(tree, part.t1_vertices);
  Vertex r1 = gravity_root(t1.tree, t1.to_local[r]);
  SpinedTree spined = apply_spine_reorder(root_at(t1.tree, r1), t1.to_local[r]);
  Drawing d1 = detail::draw_two_quadrants_rooted(spined.rt, &spined.on_spine);
  d.t1_root = t1.to_host[r1];

  // T2: one-quadrant from r, reflected across the X-axis, translated onto
  // r's position in the T1 drawing
  detail::InducedSubtree t2 = detail::induce(tree, part.t2_vertices);
  Drawing d2 = draw_one_quadrant(root_at(t2.tree, t2.to_local[r]));

  d.coords.assign(n, {});
  for (std::size_t i = 0; i < t1.to_host.size(); ++i) d.coords[t1.to_host[i]] = d1.coords[i];
  const GridPoint at_r = d.coords[r];
  for (std::size_t i = 0; i < t2.to_host.size(); ++i) {
    if (t2.to_host[i] == r) continue;
    d.coords[t2.to_host[i]] = {at_r.x + d2.coords[i].x, at_r.y - d2.coords[i].y};
  }
  return d;
}

}  // namespace mtd

#endif
