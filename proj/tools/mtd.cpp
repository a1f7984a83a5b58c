// mtd: monotone tree drawing tool.
//
// Subcommands:
//   draw       lay out one tree (1q / 2q / 4q), write coords and/or SVG
//   verify     re-check a coords file against its tree
//   enumerate  run an algorithm over all rooted or free trees of size n
//   gen        write generator trees (path, binary, random)
//
// Tree files carry the embedding: each vertex's adjacency order is the order
// of its first appearances over the edge lines.

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "mtd/mtd.hpp"

namespace {

constexpr int kExitBadInput = 2;
constexpr int kExitVerifyFailed = 3;

mtd::Algo parse_algo(const std::string& s) {
  if (s == "1q") return mtd::Algo::one_q;
  if (s == "2q") return mtd::Algo::two_q;
  if (s == "4q") return mtd::Algo::four_q;
  throw CLI::ValidationError("--algo must be 1q, 2q or 4q");
}

int thread_count() {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("MTD_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<int>(std::min<long>(v, hw));
  }
  return static_cast<int>(hw);
}

mtd::Drawing run_algo(mtd::Algo algo, const mtd::Tree& tree, std::optional<mtd::Vertex> root) {
  switch (algo) {
    case mtd::Algo::one_q: {
      if (!root) throw mtd::ParseError("1q needs a root (root line or --root)");
      return mtd::draw_one_quadrant(mtd::root_at(tree, *root));
    }
    case mtd::Algo::two_q:
      return mtd::draw_two_quadrants(tree);
    default:
      return mtd::draw_four_quadrants(tree);
  }
}

void print_report(const mtd::VerificationReport& r) {
  auto word = [](mtd::Check c) {
    return c == mtd::Check::pass ? "pass" : c == mtd::Check::fail ? "fail" : "n/a";
  };
  std::cout << "monotone:  " << (r.monotone.monotone ? "pass" : "fail");
  if (r.monotone.witness)
    std::cout << "  (pair " << r.monotone.witness->first << "," << r.monotone.witness->second
              << ")";
  std::cout << "\nplanar:    " << (r.planar.planar ? "pass" : "fail") << "\nnssd:      "
            << word(r.nssd.state);
  if (r.nssd.state == mtd::Check::fail)
    std::cout << "  (property " << r.nssd.property << " at vertex " << r.nssd.vertex << ")";
  std::cout << "\nbounds:    " << (r.bounds_ok ? "pass" : "fail") << "  (" << r.observed.width_points
            << "x" << r.observed.height_points << " grid points, allowed "
            << r.allowed.width_points << "x" << r.allowed.height_points << ")"
            << "\nembedding: " << word(r.embedding) << "\n";
}

int cmd_draw(const std::string& algo_s, const std::string& input, std::optional<int> root_flag,
             const std::string& coords_out, const std::string& svg_out, bool verify) {
  mtd::Algo algo = parse_algo(algo_s);
  mtd::TreeFile tf = mtd::parse_tree_file(input);
  std::optional<mtd::Vertex> root = root_flag ? std::optional<mtd::Vertex>(*root_flag) : tf.root;
  if (root && (*root < 0 || *root >= tf.tree.n())) throw mtd::ParseError("root out of range");
  mtd::Drawing d = run_algo(algo, tf.tree, root);
  if (!coords_out.empty()) mtd::emit_coords_file(coords_out, d.coords);
  if (!svg_out.empty()) {
    std::ofstream out(svg_out);
    if (!out) throw std::runtime_error("cannot write " + svg_out);
    mtd::emit_svg(out, d, tf.tree);
  }
  if (coords_out.empty() && svg_out.empty()) mtd::emit_coords(std::cout, d.coords);
  if (verify) {
    mtd::VerificationReport r = mtd::verify_drawing(d, tf.tree);
    print_report(r);
    if (!r.all_ok()) return kExitVerifyFailed;
  }
  return 0;
}

int cmd_verify(const std::string& algo_s, const std::string& input, const std::string& coords_in) {
  mtd::Algo algo = parse_algo(algo_s);
  mtd::TreeFile tf = mtd::parse_tree_file(input);
  std::ifstream in(coords_in);
  if (!in) throw mtd::ParseError("cannot open " + coords_in);
  mtd::Drawing d;
  d.coords = mtd::parse_coords(in, tf.tree.n());
  d.algorithm = algo;
  mtd::VerificationReport r = mtd::verify_drawing(d, tf.tree);
  print_report(r);
  return r.all_ok() ? 0 : kExitVerifyFailed;
}

int cmd_enumerate(int n, const std::string& algo_s, const std::string& report, bool free_trees) {
  mtd::Algo algo = parse_algo(algo_s);
  std::ofstream out(report);
  if (!out) throw std::runtime_error("cannot write " + report);

  // workers pull trees from the shared enumerator and buffer their rows;
  // rows are merged and written in tree_id order afterwards
  std::mutex pull_mu;
  std::optional<mtd::RootedTreeEnumerator> rooted;
  std::optional<mtd::FreeTreeEnumerator> free_enum;
  if (free_trees) free_enum.emplace(n);
  else rooted.emplace(n);
  long long next_id = 0;
  auto pull = [&]() -> std::optional<std::pair<long long, mtd::Tree>> {
    std::lock_guard lk(pull_mu);
    if (free_trees) {
      if (auto t = free_enum->next()) return std::make_pair(next_id++, std::move(*t));
    } else {
      if (auto rt = rooted->next()) return std::make_pair(next_id++, std::move(rt->tree));
    }
    return std::nullopt;
  };

  std::mutex rows_mu;
  std::vector<mtd::ReportRow> rows;
  auto worker = [&]() {
    std::vector<mtd::ReportRow> local;
    while (auto item = pull()) {
      const auto& [id, tree] = *item;
      mtd::Drawing d = run_algo(algo, tree, 0);
      mtd::VerificationReport r = mtd::verify_drawing(d, tree);
      mtd::ReportRow row;
      row.n = tree.n();
      row.tree_id = id;
      row.algo = mtd::algo_name(algo);
      row.width_pts = r.observed.width_points;
      row.height_pts = r.observed.height_points;
      row.monotone = r.monotone.monotone;
      row.planar = r.planar.planar;
      row.bound_ok = r.bounds_ok;
      row.embedding_ok = r.embedding == mtd::Check::not_applicable ? "n/a"
                         : r.embedding == mtd::Check::pass         ? "true"
                                                                   : "false";
      local.push_back(std::move(row));
    }
    std::lock_guard lk(rows_mu);
    rows.insert(rows.end(), std::make_move_iterator(local.begin()),
                std::make_move_iterator(local.end()));
  };

  int workers = thread_count();
  std::vector<std::thread> pool;
  for (int i = 1; i < workers; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::sort(rows.begin(), rows.end(),
            [](const auto& a, const auto& b) { return a.tree_id < b.tree_id; });
  out << mtd::kCsvHeader << "\n";
  std::int64_t max_w = 0, max_h = 0;
  bool all_ok = true;
  for (const auto& row : rows) {
    mtd::emit_csv_row(out, row);
    max_w = std::max(max_w, row.width_pts);
    max_h = std::max(max_h, row.height_pts);
    all_ok = all_ok && row.monotone && row.planar && row.bound_ok && row.embedding_ok != "false";
  }
  out << "# trees=" << rows.size() << " max_dims=" << max_w << "x" << max_h
      << " all_ok=" << (all_ok ? "true" : "false") << "\n";
  std::cout << "trees=" << rows.size() << " max_dims=" << max_w << "x" << max_h
            << " all_ok=" << (all_ok ? "true" : "false") << "\n";
  return all_ok ? 0 : kExitVerifyFailed;
}

int cmd_gen(const std::string& kind, int n, std::uint64_t seed, const std::string& out_path) {
  mtd::Tree t = [&] {
    if (kind == "path") return mtd::gen_path(n);
    if (kind == "binary") {
      int levels = 0, m = 0;
      while (m < n) m = 2 * m + 1, ++levels;
      if (m != n) throw CLI::ValidationError("--kind binary needs n = 2^k - 1");
      return mtd::gen_complete_binary(levels);
    }
    if (kind == "star") return mtd::gen_star(n);
    if (kind == "random") return mtd::gen_random(n, seed);
    throw CLI::ValidationError("--kind must be path, binary, star or random");
  }();
  mtd::emit_tree_file(out_path, t, 0);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Monotone grid drawings of trees.\n"
      "Tree files: line 1 is n, optional line 'root R', then n-1 edge lines 'u v'.\n"
      "The order of a vertex's first appearances over the edge lines is its\n"
      "adjacency (child) order, i.e. the embedding used by 1q and 2q."};
  app.require_subcommand(1);

  std::string algo = "1q", input, coords_out, svg_out, report, kind = "path", gen_out;
  int n = 0;
  std::optional<int> root_flag;
  std::uint64_t seed = 1;
  bool verify = false, rooted_flag = false, free_flag = false;

  auto* draw = app.add_subcommand("draw", "Draw one tree");
  draw->add_option("--algo", algo, "1q, 2q or 4q")->required();
  draw->add_option("--input", input, "tree file")->required();
  draw->add_option("--root", root_flag, "root override for 1q");
  draw->add_option("--coords", coords_out, "coords output file");
  draw->add_option("--svg", svg_out, "SVG output file");
  draw->add_flag("--verify", verify, "run the verification report, exit 3 on failure");

  auto* ver = app.add_subcommand("verify", "Verify a coords file against its tree");
  ver->add_option("--algo", algo, "algorithm whose bound applies")->required();
  ver->add_option("--input", input, "tree file")->required();
  ver->add_option("--coords", coords_out, "coords file to check")->required();

  auto* enu = app.add_subcommand("enumerate", "Drawing campaign over all trees of size n");
  enu->add_option("--n", n, "tree size, at most 14")->required();
  enu->add_option("--algo", algo, "1q, 2q or 4q")->required();
  enu->add_option("--report", report, "CSV output file")->required();
  enu->add_flag("--rooted", rooted_flag, "all rooted trees (default)");
  enu->add_flag("--free", free_flag, "all free trees");

  auto* gen = app.add_subcommand("gen", "Generate a tree file");
  gen->add_option("--kind", kind, "path, binary, star or random")->required();
  gen->add_option("--n", n, "vertex count")->required();
  gen->add_option("--seed", seed, "random seed");
  gen->add_option("--out", gen_out, "output tree file")->required();

  try {
    app.parse(argc, argv);
    if (draw->parsed()) return cmd_draw(algo, input, root_flag, coords_out, svg_out, verify);
    if (ver->parsed()) return cmd_verify(algo, input, coords_out);
    if (enu->parsed()) {
      if (rooted_flag && free_flag) throw CLI::ValidationError("--rooted and --free conflict");
      return cmd_enumerate(n, algo, report, free_flag);
    }
    if (gen->parsed()) return cmd_gen(kind, n, seed, gen_out);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitBadInput;
  } catch (const mtd::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
