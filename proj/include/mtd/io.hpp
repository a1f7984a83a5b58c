#ifndef MTD_IO_HPP
#define MTD_IO_HPP

#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include "mtd/layout.hpp"
#include "mtd/tree.hpp"

namespace mtd {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Tree text format: line 1 holds n, an optional line "root R" follows, then
/// n-1 lines "u v". The edge order fixes each vertex's adjacency order and
/// with it the embedding.
struct TreeFile {
  Tree tree;
  std::optional<Vertex> root;
};

inline TreeFile parse_tree(std::istream& in) {
  auto next_line = [&](std::string& line) {
    while (std::getline(in, line)) {
      auto pos = line.find_first_not_of(" \t\r");
      if (pos != std::string::npos) {
        line = line.substr(pos);
        return true;
      }
    }
    return false;
  };
  std::string line;
  if (!next_line(line)) throw ParseError("tree file: empty input");
  int n = 0;
  {
    std::istringstream ss(line);
    std::string extra;
    if (!(ss >> n) || (ss >> extra)) throw ParseError("tree file: first line must be n");
    if (n < 1) throw ParseError("tree file: n must be >= 1");
  }
  TreeFile out;
  std::vector<std::pair<Vertex, Vertex>> edges;
  while (next_line(line)) {
    std::istringstream ss(line);
    std::string word;
    ss >> word;
    if (word == "root") {
      if (out.root) throw ParseError("tree file: duplicate root line");
      int r = -1;
      std::string extra;
      if (!(ss >> r) || (ss >> extra) || r < 0 || r >= n)
        throw ParseError("tree file: bad root line");
      out.root = r;
      continue;
    }
    int u = -1, v = -1;
    std::string extra;
    std::istringstream es(line);
    if (!(es >> u >> v) || (es >> extra)) throw ParseError("tree file: bad edge line: " + line);
    edges.emplace_back(u, v);
  }
  try {
    out.tree = Tree::from_edges(n, edges);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  return out;
}

inline TreeFile parse_tree_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("tree file: cannot open " + path);
  return parse_tree(in);
}

inline void emit_tree(std::ostream& out, const Tree& tree, std::optional<Vertex> root = {}) {
  out << tree.n() << "\n";
  if (root) out << "root " << *root << "\n";
  // The parser appends neighbors in edge-line order, so an edge may be
  // printed once it is the next unprinted neighbor at both endpoints. The
  // per-vertex order constraints are acyclic on a tree, so this terminates.
  std::vector<std::size_t> cursor(tree.n(), 0);
  int remaining = tree.n() - 1;
  while (remaining > 0) {
    bool progressed = false;
    for (Vertex u = 0; u < tree.n() && remaining > 0; ++u) {
      while (cursor[u] < tree.neighbors(u).size()) {
        Vertex v = tree.neighbors(u)[cursor[u]];
        if (cursor[v] < tree.neighbors(v).size() && tree.neighbors(v)[cursor[v]] == u) {
          out << u << " " << v << "\n";
          ++cursor[u];
          ++cursor[v];
          --remaining;
          progressed = true;
        } else {
          break;
        }
      }
    }
    if (!progressed) throw std::logic_error("emit_tree: inconsistent adjacency order");
  }
}

inline void emit_tree_file(const std::string& path, const Tree& tree,
                           std::optional<Vertex> root = {}) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("tree file: cannot write " + path);
  emit_tree(out, tree, root);
}

/// Coordinates format: n lines "v x y", sorted by v.
inline void emit_coords(std::ostream& out, const std::vector<GridPoint>& coords) {
  for (std::size_t v = 0; v < coords.size(); ++v)
    out << v << " " << coords[v].x << " " << coords[v].y << "\n";
}

inline void emit_coords_file(const std::string& path, const std::vector<GridPoint>& coords) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("coords file: cannot write " + path);
  emit_coords(out, coords);
}

inline std::vector<GridPoint> parse_coords(std::istream& in, int n) {
  std::vector<GridPoint> coords(n);
  std::vector<char> seen(n, 0);
  std::string line;
  int rows = 0;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ss(line);
    long long v = -1, x = 0, y = 0;
    std::string extra;
    if (!(ss >> v >> x >> y) || (ss >> extra) || v < 0 || v >= n || seen[v])
      throw ParseError("coords file: bad line: " + line);
    seen[v] = 1;
    coords[v] = {x, y};
    ++rows;
  }
  if (rows != n) throw ParseError("coords file: expected one line per vertex");
  return coords;
}

/// One CSV row of an enumeration report.
struct ReportRow {
  int n = 0;
  long long tree_id = 0;
  std::string algo;
  std::int64_t width_pts = 0;
  std::int64_t height_pts = 0;
  bool monotone = false;
  bool planar = false;
  bool bound_ok = false;
  std::string embedding_ok;  // "true", "false" or "n/a"
};

inline const char* kCsvHeader =
    "n,tree_id,algo,width_pts,height_pts,monotone,planar,bound_ok,embedding_ok";

inline void emit_csv_row(std::ostream& out, const ReportRow& r) {
  out << r.n << ',' << r.tree_id << ',' << r.algo << ',' << r.width_pts << ',' << r.height_pts
      << ',' << (r.monotone ? "true" : "false") << ',' << (r.planar ? "true" : "false") << ','
      << (r.bound_ok ? "true" : "false") << ',' << r.embedding_ok << "\n";
}

}  // namespace mtd

#endif
