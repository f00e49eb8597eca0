#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "orp/io.hpp"

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout + stderr
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(ORP_CLI_PATH) + " " + args + " 2>&1";
  std::array<char, 4096> buf{};
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  while (fgets(buf.data(), buf.size(), pipe)) r.output += buf.data();
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string fixture(const std::string& name) {
  return std::string(ORP_FIXTURE_DIR) + "/" + name;
}

fs::path temp_file(const std::string& name, const std::string& content) {
  fs::path p = fs::temp_directory_path() / name;
  std::ofstream(p) << content;
  return p;
}

std::string first_line(const std::string& text) {
  return text.substr(0, text.find('\n'));
}

}  // namespace

TEST_CASE("solve clique fixture") {
  auto r = run_cli("solve --kind clique --instance " + fixture("clique-k4.txt") +
                   " --parents " + fixture("clique-k4-parents.txt"));
  CHECK(r.exit_code == 0);
  CHECK(first_line(r.output) == "objective 7");
  CHECK(r.output.find("1 1 0 1") != std::string::npos);
}

TEST_CASE("identical parents echo the parent") {
  auto parents = temp_file("orp-cli-same-parents.txt", "parents\n1 0 1 0\n1 0 1 0\n");
  auto r = run_cli("solve --kind clique --instance " + fixture("clique-k4.txt") + " --parents " +
                   parents.string());
  CHECK(r.exit_code == 0);
  CHECK(first_line(r.output) == "objective 4");
  CHECK(r.output.find("1 0 1 0") != std::string::npos);
}

TEST_CASE("malformed instance exits 2") {
  auto bad = temp_file("orp-cli-bad.txt", "graph oops\n");
  auto r = run_cli("solve --kind clique --instance " + bad.string() + " --parents " +
                   fixture("clique-k4-parents.txt"));
  CHECK(r.exit_code == 2);
}

TEST_CASE("infeasible parents exit 3") {
  auto parents = temp_file("orp-cli-infeasible-parents.txt", "parents\n0 0 1 1\n0 1 0 1\n");
  auto r = run_cli("solve --kind clique --instance " + fixture("clique-k4.txt") + " --parents " +
                   parents.string());
  CHECK(r.exit_code == 3);
}

TEST_CASE("verify matches on the bundled fixtures") {
  for (const char* pair : {"clique clique-k4", "sched sched-blocks", "tsp tsp-six"}) {
    std::istringstream in(pair);
    std::string kind, base;
    in >> kind >> base;
    auto r = run_cli("verify --kind " + kind + " --instance " + fixture(base + ".txt") +
                     " --parents " + fixture(base + "-parents.txt"));
    CHECK(r.exit_code == 0);
    CHECK(r.output.rfind("MATCH", 0) == 0);
  }
}

TEST_CASE("corrupted solver output mismatches with exit 5") {
  auto r = run_cli("verify --corrupt --kind clique --instance " + fixture("clique-k4.txt") +
                   " --parents " + fixture("clique-k4-parents.txt"));
  CHECK(r.exit_code == 5);
  CHECK(r.output.rfind("MISMATCH", 0) == 0);
}

TEST_CASE("oracle guard exits 4") {
  // 11 vertices exceeds the tour oracle guard
  std::ostringstream inst;
  inst << "tsp 11 sym\n";
  for (int i = 0; i < 11; ++i) {
    for (int j = 0; j < 11; ++j) inst << (j ? " " : "") << (i == j ? 0 : 1);
    inst << '\n';
  }
  std::ostringstream parents;
  parents << "parents\n";
  for (int i = 1; i <= 11; ++i) parents << (i > 1 ? " " : "") << i;
  parents << '\n';
  for (int i = 11; i >= 1; --i) parents << (i < 11 ? " " : "") << i;
  parents << '\n';
  auto fi = temp_file("orp-cli-tsp11.txt", inst.str());
  auto fp = temp_file("orp-cli-tsp11-parents.txt", parents.str());
  auto r = run_cli("verify --kind tsp --instance " + fi.string() + " --parents " + fp.string());
  CHECK(r.exit_code == 4);
}

TEST_CASE("sched solve with and without the processing-time constant") {
  auto plain = run_cli("solve --kind sched --instance " + fixture("sched-blocks.txt") +
                       " --parents " + fixture("sched-blocks-parents.txt"));
  CHECK(plain.exit_code == 0);
  auto cmax = run_cli("solve --cmax --kind sched --instance " + fixture("sched-blocks.txt") +
                      " --parents " + fixture("sched-blocks-parents.txt"));
  CHECK(cmax.exit_code == 0);
  // processing times in the fixture sum to 7
  std::istringstream a(first_line(plain.output)), b(first_line(cmax.output));
  std::string word;
  long va, vb;
  a >> word >> va;
  b >> word >> vb;
  CHECK(vb == va + 7);
}

TEST_CASE("gen setcover-hard produces the doubled instance") {
  fs::path dir = fs::temp_directory_path();
  std::string out_i = (dir / "orp-cli-hard.txt").string();
  std::string out_p = (dir / "orp-cli-hard-parents.txt").string();
  auto g = run_cli("gen --generator setcover-hard --identity 3 --out-instance " + out_i +
                   " --out-parents " + out_p);
  CHECK(g.exit_code == 0);

  // emitted files round-trip bit-exactly
  std::string text = orp::io::read_file(out_i);
  auto inst = orp::io::parse_set_system(text);
  CHECK(orp::io::write_set_system(inst) == text);
  CHECK(inst.n == 6);
  std::string ptext = orp::io::read_file(out_p);
  auto [p1, p2] = orp::io::parse_parents_binary(ptext, 6);
  CHECK(orp::io::write_parents_binary(p1, p2) == ptext);

  auto s = run_cli("solve --kind cover --instance " + out_i + " --parents " + out_p);
  CHECK(s.exit_code == 0);
  CHECK(first_line(s.output) == "objective 3");

  auto v = run_cli("verify --kind cover --instance " + out_i + " --parents " + out_p);
  CHECK(v.exit_code == 0);
  CHECK(v.output.rfind("MATCH", 0) == 0);
}

TEST_CASE("gen sched-random and tsp-random emit valid files") {
  fs::path dir = fs::temp_directory_path();
  std::string si = (dir / "orp-cli-sched.txt").string();
  std::string sp = (dir / "orp-cli-sched-parents.txt").string();
  auto g1 = run_cli("gen --generator sched-random --k 7 --seed 1 --out-instance " + si +
                    " --out-parents " + sp);
  CHECK(g1.exit_code == 0);
  std::string stext = orp::io::read_file(si);
  auto sinst = orp::io::parse_sched(stext);
  CHECK(orp::io::write_sched(sinst) == stext);
  CHECK(sinst.k == 7);
  auto [q1, q2] = orp::io::parse_parents_sequence(orp::io::read_file(sp), 7);
  CHECK(orp::sched::is_permutation(q1, 7));
  CHECK(orp::sched::is_permutation(q2, 7));

  std::string ti = (dir / "orp-cli-tsp.txt").string();
  std::string tp = (dir / "orp-cli-tsp-parents.txt").string();
  auto g2 = run_cli("gen --generator tsp-random --n 6 --seed 2 --out-instance " + ti +
                    " --out-parents " + tp);
  CHECK(g2.exit_code == 0);
  std::string ttext = orp::io::read_file(ti);
  auto tinst = orp::io::parse_tsp(ttext);
  CHECK(orp::io::write_tsp(tinst) == ttext);
  CHECK(tinst.symmetric);
  for (int i = 0; i < tinst.n; ++i) {
    for (int j = 0; j < tinst.n; ++j) CHECK(tinst.dist[i][j] == tinst.dist[j][i]);
  }

  auto bad = run_cli("gen --generator tsp-random --n 1");
  CHECK(bad.exit_code == 2);
}

TEST_CASE("bench emits one csv row per size") {
  auto r = run_cli("bench --kind clique --sizes 8,16 --seed 3");
  CHECK(r.exit_code == 0);
  std::istringstream in(r.output);
  std::string line;
  std::getline(in, line);
  CHECK(line == "kind,n,d_or_q,micros");
  int rows = 0;
  while (std::getline(in, line)) {
    if (!line.empty()) rows += 1;
  }
  CHECK(rows == 2);

  auto sched = run_cli("bench --kind sched --sizes 4,6,8 --seed 3");
  CHECK(sched.exit_code == 0);
  std::istringstream sin(sched.output);
  rows = 0;
  while (std::getline(sin, line)) {
    if (!line.empty()) rows += 1;
  }
  CHECK(rows == 4);  // header + 3

  auto empty = run_cli("bench --kind clique --sizes '' --seed 1");
  CHECK(empty.exit_code == 0);
  CHECK(first_line(empty.output) == "kind,n,d_or_q,micros");
}

TEST_CASE("ga subcommand reaches the fixture optimum and writes history") {
  fs::path cfg = temp_file("orp-cli-ga.cfg",
                           "problem = clique\n"
                           "instance = " + fixture("clique-k4.txt") + "\n"
                           "pop = 10\npc = 1.0\npm = 0.05\ngens = 50\nseed = 1\n");
  fs::path hist = fs::temp_directory_path() / "orp-cli-ga-history.csv";
  auto r = run_cli("ga --config " + cfg.string() + " --history " + hist.string());
  CHECK(r.exit_code == 0);
  CHECK(first_line(r.output) == "objective 7");
  std::ifstream h(hist);
  std::string line;
  std::getline(h, line);
  CHECK(line == "generation,best,mean");
  int rows = 0;
  while (std::getline(h, line)) {
    if (!line.empty()) rows += 1;
  }
  CHECK(rows == 51);
}

TEST_CASE("ga accepts an optional parent pair in the config") {
  fs::path cfg = temp_file("orp-cli-ga-parents.cfg",
                           "problem = clique\n"
                           "instance = " + fixture("clique-k4.txt") + "\n"
                           "parents = " + fixture("clique-k4-parents.txt") + "\n"
                           "pop = 4\npc = 1.0\npm = 0\ngens = 1\nseed = 2\n");
  auto r = run_cli("ga --config " + cfg.string());
  CHECK(r.exit_code == 0);
  // the seeded parents recombine to the optimum in the very first generation
  CHECK(first_line(r.output) == "objective 7");
}

TEST_CASE("gen graph-random output round-trips") {
  fs::path dir = fs::temp_directory_path();
  std::string gi = (dir / "orp-cli-graph.txt").string();
  std::string gpp = (dir / "orp-cli-graph-parents.txt").string();
  auto g = run_cli("gen --generator graph-random --n 8 --p 0.5 --seed 5 --out-instance " + gi +
                   " --out-parents " + gpp);
  CHECK(g.exit_code == 0);
  std::string text = orp::io::read_file(gi);
  auto inst = orp::io::parse_graph(text);
  CHECK(orp::io::write_graph(inst) == text);
  auto v = run_cli("verify --kind clique --instance " + gi + " --parents " + gpp);
  CHECK(v.exit_code == 0);
}

TEST_CASE("usage errors exit 2") {
  auto r = run_cli("solve --kind nonsense --instance a --parents b");
  CHECK(r.exit_code == 2);
  auto r2 = run_cli("frobnicate");
  CHECK(r2.exit_code == 2);
}
