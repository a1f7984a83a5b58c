#include <catch2/catch_amalgamated.hpp>
#include <cstdlib>
#include <filesystem>
#include <unistd.h>
#include <fstream>
#include <sstream>

#include "mtd/io.hpp"

namespace fs = std::filesystem;

namespace {

const std::string kCli = MTD_CLI_PATH;

int run(const std::string& args) {
  int status = std::system((kCli + " " + args + " >/dev/null 2>&1").c_str());
  return WEXITSTATUS(status);
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("mtd_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("gen writes the requested trees deterministically") {
  TempDir tmp;
  REQUIRE(run("gen --kind path --n 15 --out " + tmp.file("p.tree")) == 0);
  mtd::TreeFile p = mtd::parse_tree_file(tmp.file("p.tree"));
  CHECK(p.tree.n() == 15);
  REQUIRE(run("gen --kind binary --n 31 --out " + tmp.file("b.tree")) == 0);
  CHECK(mtd::parse_tree_file(tmp.file("b.tree")).tree.n() == 31);
  CHECK(run("gen --kind binary --n 30 --out " + tmp.file("x.tree")) == 2);
  REQUIRE(run("gen --kind random --n 100 --seed 7 --out " + tmp.file("r1.tree")) == 0);
  REQUIRE(run("gen --kind random --n 100 --seed 7 --out " + tmp.file("r2.tree")) == 0);
  CHECK(slurp(tmp.file("r1.tree")) == slurp(tmp.file("r2.tree")));
}

TEST_CASE("draw with verification succeeds on a 15-path") {
  TempDir tmp;
  REQUIRE(run("gen --kind path --n 15 --out " + tmp.file("p.tree")) == 0);
  REQUIRE(run("draw --algo 1q --input " + tmp.file("p.tree") + " --coords " +
              tmp.file("p.coords") + " --verify") == 0);
  std::ifstream in(tmp.file("p.coords"));
  auto coords = mtd::parse_coords(in, 15);
  std::int64_t xmax = 0, ymax = 0;
  for (auto& c : coords) {
    xmax = std::max(xmax, c.x);
    ymax = std::max(ymax, c.y);
  }
  CHECK(xmax == 14);
  CHECK(ymax == 14);
}

TEST_CASE("draw without a root on an unrooted file exits 2") {
  TempDir tmp;
  std::ofstream(tmp.file("t.tree")) << "3\n0 1\n1 2\n";
  CHECK(run("draw --algo 1q --input " + tmp.file("t.tree")) == 2);
  CHECK(run("draw --algo 1q --input " + tmp.file("t.tree") + " --root 1") == 0);
  CHECK(run("draw --algo 1q --input " + tmp.file("t.tree") + " --root 9") == 2);
  CHECK(run("draw --algo 2q --input " + tmp.file("t.tree")) == 0);  // needs no root
  CHECK(run("draw --algo 5q --input " + tmp.file("t.tree")) == 2);
  CHECK(run("draw --algo 1q --input " + tmp.file("missing.tree")) == 2);
  std::ofstream(tmp.file("bad.tree")) << "3\n0 1\n";
  CHECK(run("draw --algo 2q --input " + tmp.file("bad.tree")) == 2);
}

TEST_CASE("svg output is byte-identical across runs") {
  TempDir tmp;
  REQUIRE(run("gen --kind binary --n 31 --out " + tmp.file("b.tree")) == 0);
  REQUIRE(run("draw --algo 4q --input " + tmp.file("b.tree") + " --svg " + tmp.file("a.svg")) == 0);
  REQUIRE(run("draw --algo 4q --input " + tmp.file("b.tree") + " --svg " + tmp.file("b.svg")) == 0);
  std::string a = slurp(tmp.file("a.svg"));
  CHECK(a == slurp(tmp.file("b.svg")));
  CHECK(a.find("<polygon") != std::string::npos);  // diamond marker on the composite
}

TEST_CASE("verify subcommand checks a coords file and flags corruption") {
  TempDir tmp;
  REQUIRE(run("gen --kind random --n 20 --seed 3 --out " + tmp.file("t.tree")) == 0);
  REQUIRE(run("draw --algo 2q --input " + tmp.file("t.tree") + " --coords " +
              tmp.file("t.coords")) == 0);
  CHECK(run("verify --algo 2q --input " + tmp.file("t.tree") + " --coords " +
            tmp.file("t.coords")) == 0);
  // move vertex 0 far away: bound or monotonicity must break
  std::ifstream in(tmp.file("t.coords"));
  auto coords = mtd::parse_coords(in, 20);
  coords[0] = {9999, 9999};
  mtd::emit_coords_file(tmp.file("bad.coords"), coords);
  CHECK(run("verify --algo 2q --input " + tmp.file("t.tree") + " --coords " +
            tmp.file("bad.coords")) == 3);
}

TEST_CASE("enumeration campaign over all 10-vertex rooted trees") {
  TempDir tmp;
  REQUIRE(run("enumerate --n 10 --algo 1q --rooted --report " + tmp.file("r.csv")) == 0);
  std::string csv = slurp(tmp.file("r.csv"));
  CHECK(csv.starts_with(mtd::kCsvHeader));
  CHECK(csv.find("# trees=719 max_dims=10x10 all_ok=true") != std::string::npos);
  std::size_t rows = std::count(csv.begin(), csv.end(), '\n');
  CHECK(rows == 721);  // header + 719 rows + summary
}

TEST_CASE("enumeration campaign over all 10-vertex free trees, composite algorithm") {
  TempDir tmp;
  REQUIRE(run("enumerate --n 10 --algo 4q --free --report " + tmp.file("f.csv")) == 0);
  std::string csv = slurp(tmp.file("f.csv"));
  CHECK(csv.find("# trees=106 max_dims=7x8 all_ok=true") != std::string::npos);
  CHECK(csv.find(",false") == std::string::npos);
}

TEST_CASE("single-vertex campaign and flag validation") {
  TempDir tmp;
  REQUIRE(run("enumerate --n 1 --algo 1q --report " + tmp.file("one.csv")) == 0);
  std::string csv = slurp(tmp.file("one.csv"));
  CHECK(csv.find("1,0,1q,1,1,true,true,true,") != std::string::npos);
  CHECK(run("enumerate --n 99 --algo 1q --report " + tmp.file("x.csv")) == 2);
  CHECK(run("enumerate --n 5 --algo 1q --rooted --free --report " + tmp.file("x.csv")) == 2);
  CHECK(run("enumerate --algo 1q --report " + tmp.file("x.csv")) == 2);
  CHECK(run("nonsense") == 2);
}

TEST_CASE("campaign output is identical under a thread cap") {
  TempDir tmp;
  REQUIRE(run("enumerate --n 9 --algo 2q --free --report " + tmp.file("a.csv")) == 0);
  int status = std::system(("MTD_THREADS=1 " + kCli + " enumerate --n 9 --algo 2q --free --report " +
                            tmp.file("b.csv") + " >/dev/null 2>&1")
                               .c_str());
  REQUIRE(WEXITSTATUS(status) == 0);
  CHECK(slurp(tmp.file("a.csv")) == slurp(tmp.file("b.csv")));
}
