#if HOFFDIG_HAVE_CLI

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "hoffdig/bgw.hpp"
#include "hoffdig/biangular.hpp"
#include "hoffdig/hadamard.hpp"
#include "hoffdig/hoffman.hpp"
#include "hoffdig/io.hpp"
#include "hoffdig_cli/cli.hpp"

using namespace hoffdig;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run hoffdig_run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("hoffdig_cli_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

std::string replace_all(std::string s, const std::string& from, const std::string& to) {
  for (std::size_t pos = 0; (pos = s.find(from, pos)) != std::string::npos; pos += to.size()) s.replace(pos, from.size(), to);
  return s;
}

// Compares against tests/golden/<name>; HOFFDIG_UPDATE_GOLDEN=1 rewrites the file instead.
void check_golden(const std::string& name, const std::string& text) {
  const fs::path path = fs::path(HOFFDIG_GOLDEN_DIR) / name;
  if (std::getenv("HOFFDIG_UPDATE_GOLDEN")) {
    std::ofstream(path) << text;
    return;
  }
  std::ifstream in(path);
  REQUIRE_MESSAGE(in.good(), "missing golden file " << path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == text);
}

}  // namespace

TEST_CASE("cli: sylvester then verify hadamard") {
  const fs::path dir = scratch("sylvester");
  const auto c = hoffdig_run({"construct", "sylvester", "--k", "2", "--out-dir", dir.string()});
  CHECK(c.code == 0);
  check_golden("construct_sylvester_k2.txt", replace_all(c.out, dir.string(), "OUT"));
  CHECK(io::read_mat1(dir / "H.mat") == sylvester(2).matrix());

  const auto v = hoffdig_run({"verify", "hadamard", (dir / "H.mat").string()});
  CHECK(v.code == 0);
  const auto bush = hoffdig_run({"verify", "skew-bush", (dir / "H.mat").string()});
  CHECK(bush.code == 1);
  check_golden("verify_skew_bush_sylvester.txt", bush.out);
}

TEST_CASE("cli: drad160 pipeline") {
  const fs::path dir = scratch("drad160");
  const auto c = hoffdig_run({"construct", "drad160", "--out-dir", dir.string()});
  CHECK(c.code == 0);
  check_golden("construct_drad160.txt", replace_all(c.out, dir.string(), "OUT"));

  const auto lib = drad160();
  CHECK(io::read_mat1(dir / "G.mat") == lib.g);
  for (std::size_t i = 0; i <= 5; ++i) CHECK(io::read_mat1(dir / ("A" + std::to_string(i) + ".mat")) == lib.scheme.mat(i));
  CHECK(from_table(io::read_bgw1(dir / "W.bgw")) == w10());
  CHECK(io::read_gmat1(dir / "P.mat") == class5_expected(2).P);
  CHECK(io::read_partition(dir / "blocks.txt") == consecutive_blocks(160, 16));

  const std::string a1 = (dir / "A1.mat").string();
  const auto v = hoffdig_run({"verify", "drad", a1});
  CHECK(v.code == 0);
  CHECK(v.out.find("(160,54,18)") != std::string::npos);
  check_golden("verify_drad_a1.txt", v.out);

  const auto h = hoffdig_run({"hoffman", a1, "--partition", (dir / "blocks.txt").string()});
  CHECK(h.code == 0);
  check_golden("hoffman_a1_partition.txt", h.out);

  const auto s = hoffdig_run({"spectrum", a1});
  CHECK(s.code == 0);
  check_golden("spectrum_a1.txt", s.out);

  const auto vs = hoffdig_run({"verify", "scheme", dir.string()});
  CHECK(vs.code == 0);
  const auto se = hoffdig_run({"scheme", "eigen", dir.string(), "--seed", "7"});
  CHECK(se.code == 0);
  CHECK(se.out.find("pass  matches P.mat up to row order") != std::string::npos);

  const auto bgw = hoffdig_run({"verify", "bgw", (dir / "W.bgw").string()});
  CHECK(bgw.code == 0);
  CHECK(bgw.out.find("BGW(10,9,8) over C_8") != std::string::npos);
  const auto bgw_wrong = hoffdig_run({"verify", "bgw", (dir / "W.bgw").string(), "--lambda", "16"});
  CHECK(bgw_wrong.code == 1);
}

TEST_CASE("cli: class5 from files reproduces drad160") {
  const fs::path dir = scratch("class5");
  io::write_bgw1(dir / "W.bgw", to_table(w10()));
  io::write_mat1(dir / "H4.mat", sylvester(2).matrix());
  const auto c = hoffdig_run({"construct", "class5", "--n", "2", "--bgw", (dir / "W.bgw").string(), "--hadamard",
                              (dir / "H4.mat").string(), "--out-dir", (dir / "out").string()});
  CHECK(c.code == 0);
  CHECK(io::read_mat1(dir / "out" / "G.mat") == drad160().g);

  io::write_bgw1(dir / "printed.bgw", to_table(w10_as_printed()));
  const auto p = hoffdig_run({"construct", "class5", "--n", "2", "--bgw", (dir / "printed.bgw").string(), "--hadamard",
                              (dir / "H4.mat").string(), "--out-dir", (dir / "printed").string()});
  CHECK(p.code == 1);
  CHECK(p.out.find("FAIL  G^T = -G") != std::string::npos);
}

TEST_CASE("cli: biangular json report") {
  const fs::path dir = scratch("biangular");
  const auto c = hoffdig_run({"--json", "construct", "biangular", "--n", "4", "--variant", "skew", "--out-dir", dir.string()});
  CHECK(c.code == 0);
  check_golden("construct_biangular_skew4.json", replace_all(c.out, dir.string(), "OUT"));
  const auto b = biangular_skew(sylvester(2));
  CHECK(io::read_mat1(dir / "M.mat") == b.m);
  const auto rel = biangular_relations(b);
  for (std::size_t i = 0; i < rel.size(); ++i) CHECK(io::read_mat1(dir / ("A" + std::to_string(i) + ".mat")) == rel[i]);
  CHECK(hoffdig_run({"verify", "scheme", dir.string()}).code == 0);
}

TEST_CASE("cli: skew-bush round trip") {
  const fs::path dir = scratch("skewbush");
  CHECK(hoffdig_run({"construct", "skew-bush", "--n", "1", "--out-dir", dir.string()}).code == 0);
  CHECK(io::read_mat1(dir / "H.mat") == order4_skew_bush().base().matrix());
  CHECK(hoffdig_run({"convert", "h2d", (dir / "H.mat").string(), "--out-dir", (dir / "d").string()}).code == 0);
  CHECK(io::read_mat1(dir / "d" / "A.mat") == skew_bush_to_drad(order4_skew_bush()).digraph.adjacency());
  CHECK(hoffdig_run({"convert", "d2h", (dir / "d" / "A.mat").string(), "--partition", (dir / "d" / "parts.txt").string(),
                     "--out-dir", (dir / "h").string()})
            .code == 0);
  CHECK(io::read_mat1(dir / "h" / "H.mat") == io::read_mat1(dir / "H.mat"));

  std::ofstream(dir / "bad_parts.txt") << "0 2\n1 3\n";
  const auto bad = hoffdig_run({"convert", "d2h", (dir / "d" / "A.mat").string(), "--partition",
                                (dir / "bad_parts.txt").string(), "--out-dir", (dir / "x").string()});
  CHECK(bad.code == 1);
}

TEST_CASE("cli: hoffman with a coclique file") {
  const fs::path dir = scratch("coclique");
  IntMatrix a(4, 4);
  a(0, 2) = a(2, 1) = a(1, 3) = a(3, 0) = 1;
  io::write_mat1(dir / "c4.mat", a);
  std::ofstream(dir / "good.txt") << "0 1\n";
  std::ofstream(dir / "arc.txt") << "0 2\n";
  std::ofstream(dir / "small.txt") << "0\n";
  const auto good = hoffdig_run({"hoffman", (dir / "c4.mat").string(), "--coclique", (dir / "good.txt").string()});
  CHECK(good.code == 0);
  check_golden("hoffman_c4_coclique.txt", good.out);
  CHECK(hoffdig_run({"hoffman", (dir / "c4.mat").string(), "--coclique", (dir / "arc.txt").string()}).code == 1);
  CHECK(hoffdig_run({"hoffman", (dir / "c4.mat").string(), "--coclique", (dir / "small.txt").string()}).code == 1);

  IntMatrix two(4, 4);
  two(0, 1) = two(1, 0) = two(2, 3) = two(3, 2) = 1;
  io::write_mat1(dir / "two.mat", two);
  const auto nc = hoffdig_run({"hoffman", (dir / "two.mat").string()});
  CHECK(nc.code == 1);
  CHECK(nc.out.find("not strongly connected") != std::string::npos);
}

TEST_CASE("cli: usage and input errors exit with 2") {
  CHECK(hoffdig_run({}).code == 2);
  const auto unknown = hoffdig_run({"frobnicate"});
  CHECK(unknown.code == 2);
  CHECK(unknown.err.find("unknown subcommand 'frobnicate'") != std::string::npos);
  CHECK(hoffdig_run({"verify", "frobnicate", "x"}).code == 2);
  CHECK(hoffdig_run({"construct", "sylvester"}).code == 2);
  CHECK(hoffdig_run({"construct", "biangular", "--n", "4", "--variant", "hermitian"}).code == 2);
  CHECK(hoffdig_run({"verify", "hadamard", "/nonexistent/H.mat"}).code == 2);

  const fs::path dir = scratch("errors");
  std::ofstream(dir / "bad.mat") << "2 2\n1 x\n0 0\n";
  const auto bad = hoffdig_run({"--json", "spectrum", (dir / "bad.mat").string()});
  CHECK(bad.code == 2);
  CHECK(bad.out.find("\"status\": \"error\"") != std::string::npos);
  CHECK(bad.err.find(":2:3:") != std::string::npos);

  CHECK(hoffdig_run({"construct", "biangular", "--n", "12", "--out-dir", dir.string()}).code == 2);
}

TEST_CASE("cli: output is deterministic") {
  const fs::path a = scratch("det_a"), b = scratch("det_b");
  const auto x = hoffdig_run({"construct", "biangular", "--n", "8", "--variant", "symmetric", "--out-dir", a.string()});
  const auto y = hoffdig_run({"construct", "biangular", "--n", "8", "--variant", "symmetric", "--out-dir", b.string()});
  CHECK(x.code == 0);
  CHECK(replace_all(x.out, a.string(), "OUT") == replace_all(y.out, b.string(), "OUT"));
  const auto e1 = hoffdig_run({"scheme", "eigen", a.string()});
  const auto e2 = hoffdig_run({"scheme", "eigen", a.string()});
  CHECK(e1.out == e2.out);
}

#endif
