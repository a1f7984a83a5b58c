#ifndef MTD_SVG_HPP
#define MTD_SVG_HPP

#include <ostream>
#include <string>

#include "mtd/layout.hpp"
#include "mtd/tree.hpp"

namespace mtd {

inline constexpr int kSvgUnit = 16;  // pixels per grid unit
inline constexpr int kSvgPad = 24;

/// Deterministic SVG rendering of a drawing. Grid unit 16px, y-axis flipped
/// so larger y appears higher on screen. Vertices are circles; the root used
/// by the drawing is marked with a square, a four-quadrant composite's T1
/// gravity root with a diamond. Integer pixel arithmetic only, so the output
/// bytes depend on nothing but the drawing itself.
inline void emit_svg(std::ostream& out, const Drawing& d, const Tree& tree) {
  std::int64_t xmin = d.coords[0].x, xmax = xmin, ymin = d.coords[0].y, ymax = ymin;
  for (const auto& p : d.coords) {
    xmin = std::min(xmin, p.x);
    xmax = std::max(xmax, p.x);
    ymin = std::min(ymin, p.y);
    ymax = std::max(ymax, p.y);
  }
  const std::int64_t w = (xmax - xmin) * kSvgUnit + 2 * kSvgPad;
  const std::int64_t h = (ymax - ymin) * kSvgUnit + 2 * kSvgPad;
  auto px = [&](const GridPoint& p) { return kSvgPad + (p.x - xmin) * kSvgUnit; };
  auto py = [&](const GridPoint& p) { return kSvgPad + (ymax - p.y) * kSvgUnit; };

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << w << " " << h
      << "\" width=\"" << w << "\" height=\"" << h << "\">\n";
  for (std::int64_t gx = xmin; gx <= xmax; ++gx)
    out << "<line x1=\"" << px({gx, 0}) << "\" y1=\"" << kSvgPad << "\" x2=\"" << px({gx, 0})
        << "\" y2=\"" << h - kSvgPad << "\" stroke=\"#eeeeee\"/>\n";
  for (std::int64_t gy = ymin; gy <= ymax; ++gy)
    out << "<line x1=\"" << kSvgPad << "\" y1=\"" << py({0, gy}) << "\" x2=\"" << w - kSvgPad
        << "\" y2=\"" << py({0, gy}) << "\" stroke=\"#eeeeee\"/>\n";
  for (auto [u, v] : tree.edge_list())
    out << "<line x1=\"" << px(d.coords[u]) << "\" y1=\"" << py(d.coords[u]) << "\" x2=\""
        << px(d.coords[v]) << "\" y2=\"" << py(d.coords[v]) << "\" stroke=\"#333333\"/>\n";
  for (std::size_t v = 0; v < d.coords.size(); ++v) {
    const auto& p = d.coords[v];
    bool is_root = static_cast<Vertex>(v) == d.root_used && tree.n() > 1;
    bool is_t1_root = d.t1_root && *d.t1_root == static_cast<Vertex>(v);
    if (is_root)
      out << "<rect x=\"" << px(p) - 5 << "\" y=\"" << py(p) - 5
          << "\" width=\"10\" height=\"10\" fill=\"#c0392b\"/>\n";
    else if (is_t1_root)
      out << "<polygon points=\"" << px(p) << "," << py(p) - 7 << " " << px(p) + 7 << "," << py(p)
          << " " << px(p) << "," << py(p) + 7 << " " << px(p) - 7 << "," << py(p)
          << "\" fill=\"#2980b9\"/>\n";
    else
      out << "<circle cx=\"" << px(p) << "\" cy=\"" << py(p) << "\" r=\"4\" fill=\"#333333\"/>\n";
    out << "<text x=\"" << px(p) + 6 << "\" y=\"" << py(p) - 6 << "\" font-size=\"10\">" << v
        << "</text>\n";
  }
  out << "</svg>\n";
}

}  // namespace mtd

#endif
