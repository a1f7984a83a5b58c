#ifndef MTD_ANGLE_HPP
#define MTD_ANGLE_HPP

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "mtd/tree.hpp"

namespace mtd {

using Rational = boost::multiprecision::cpp_rational;

namespace detail {
/// Rational -> double that survives numerators/denominators beyond the
/// double exponent range (deep trees grow them without bound).
inline double rational_to_double(const Rational& q) {
  using BF = boost::multiprecision::cpp_bin_float_50;
  BF num(boost::multiprecision::numerator(q));
  BF den(boost::multiprecision::denominator(q));
  return static_cast<double>(num / den);
}
}  // namespace detail

/// An angle, carried as an exact rational multiple of pi wherever the
/// construction keeps it rational, always with a double mirror in radians.
/// Comparisons between two exact angles (and against rational-pi constants)
/// are decided on the rationals; anything else falls back to the mirrors.
struct Angle {
  Rational pi_factor;  // meaningful only when exact
  double radians = 0.0;
  bool exact = false;

  static Angle from_pi_fraction(Rational q) {
    Angle a;
    a.radians = detail::rational_to_double(q) * std::numbers::pi;
    a.pi_factor = std::move(q);
    a.exact = true;
    return a;
  }
  static Angle from_radians(double r) {
    Angle a;
    a.radians = r;
    return a;
  }

  friend bool operator<(const Angle& a, const Angle& b) {
    if (a.exact && b.exact) return a.pi_factor < b.pi_factor;
    return a.radians < b.radians;
  }
  friend bool operator<=(const Angle& a, const Angle& b) { return !(b < a); }
  friend bool operator==(const Angle& a, const Angle& b) {
    if (a.exact && b.exact) return a.pi_factor == b.pi_factor;
    return a.radians == b.radians;
  }
};

/// a compared against c*pi.
inline int compare_pi_fraction(const Angle& a, const Rational& c) {
  if (a.exact) {
    if (a.pi_factor < c) return -1;
    return a.pi_factor == c ? 0 : 1;
  }
  double cv = detail::rational_to_double(c) * std::numbers::pi;
  if (a.radians < cv) return -1;
  return a.radians == cv ? 0 : 1;
}

/// c*pi - a, preserving exactness.
inline Angle pi_fraction_minus(const Rational& c, const Angle& a) {
  if (a.exact) return Angle::from_pi_fraction(c - a.pi_factor);
  return Angle::from_radians(detail::rational_to_double(c) * std::numbers::pi - a.radians);
}

/// Per-vertex angular sector <a1(u), a2(u)> confining the slopes of all
/// edges inside the subtree of u plus the entering edge.
struct AngleRange {
  Angle lo, hi;

  static AngleRange of_pi_fractions(Rational lo_q, Rational hi_q) {
    return {Angle::from_pi_fraction(std::move(lo_q)), Angle::from_pi_fraction(std::move(hi_q))};
  }
  bool exact() const { return lo.exact && hi.exact; }
  Rational length_pi_factor() const {
    if (!exact()) throw std::logic_error("angle range is not exact");
    return hi.pi_factor - lo.pi_factor;
  }
  double length_radians() const { return hi.radians - lo.radians; }
};

using AngleAssignment = std::vector<AngleRange>;  // indexed by vertex

/// Splits the parent's range among the children, left to right, each child
/// getting a share proportional to its subtree size: the ranges tile the
/// parent range exactly and consecutive children share a boundary.
inline std::vector<AngleRange> assign_child_ranges(const AngleRange& parent_range,
                                                   const std::vector<int>& child_subtree_sizes,
                                                   int parent_subtree_size) {
  if (child_subtree_sizes.empty()) return {};
  long long sum = 0;
  for (int s : child_subtree_sizes) {
    if (s < 1) throw std::invalid_argument("assign_child_ranges: sizes must be >= 1");
    sum += s;
  }
  if (sum != parent_subtree_size - 1)
    throw std::invalid_argument("assign_child_ranges: sizes must sum to parent size - 1");
  if (!parent_range.exact())
    throw std::invalid_argument("assign_child_ranges: parent range must be exact");

  const Rational width = parent_range.length_pi_factor();
  std::vector<AngleRange> out;
  out.reserve(child_subtree_sizes.size());
  Rational cursor = parent_range.lo.pi_factor;
  for (int s : child_subtree_sizes) {
    Rational next = cursor + width * s / (parent_subtree_size - 1);
    out.push_back(AngleRange::of_pi_fractions(cursor, next));
    cursor = std::move(next);
  }
  // last boundary equals the parent's upper boundary exactly by telescoping
  out.back().hi = parent_range.hi;
  return out;
}

/// Recursive range assignment over the whole rooted tree.
inline AngleAssignment assign_angles(const RootedTree& rt, const AngleRange& root_range) {
  AngleAssignment ranges(rt.tree.n());
  ranges[rt.root] = root_range;
  for (Vertex u : rt.preorder()) {
    const auto& kids = rt.children[u];
    if (kids.empty()) continue;
    std::vector<int> sizes;
    sizes.reserve(kids.size());
    for (Vertex c : kids) sizes.push_back(rt.subtree_size[c]);
    auto child_ranges = assign_child_ranges(ranges[u], sizes, rt.subtree_size[u]);
    for (std::size_t i = 0; i < kids.size(); ++i) ranges[kids[i]] = child_ranges[i];
  }
  return ranges;
}

/// Rooted tree whose child lists have been reordered so that the path from
/// the root to `spine_end` runs through last children; the flagged vertices
/// are drawn one unit to the left of their parents (slope pi, length 1).
struct SpinedTree {
  RootedTree rt;
  std::vector<char> on_spine;  // v flagged => edge parent(v)->v is a spine edge
  Vertex spine_end = 0;
};

inline SpinedTree apply_spine_reorder(const RootedTree& t1, Vertex target) {
  if (target < 0 || target >= t1.tree.n())
    throw std::invalid_argument("apply_spine_reorder: target out of range");
  SpinedTree out{t1, std::vector<char>(t1.tree.n(), 0), target};
  for (Vertex v = target; v != out.rt.root; v = out.rt.parent[v]) {
    out.on_spine[v] = 1;
    auto& sib = out.rt.children[out.rt.parent[v]];
    sib.erase(std::find(sib.begin(), sib.end(), v));
    sib.push_back(v);
  }
  return out;
}

}  // namespace mtd

#endif
