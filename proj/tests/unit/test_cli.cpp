#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <map>
#include <sys/wait.h>

#include "fixtures.hpp"

using namespace pathloc;
using namespace pathloc::testing;

namespace {

std::map<std::string, std::string> kv(const std::string& out) {
  std::map<std::string, std::string> m;
  std::istringstream in(out);
  std::string line;
  while (std::getline(in, line)) {
    const auto eq = line.find(" = ");
    if (eq != std::string::npos) m[line.substr(0, eq)] = line.substr(eq + 3);
  }
  return m;
}

int shell(const std::string& cmd) {
  const int status = std::system((cmd + " >/dev/null 2>&1").c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string data(const std::string& name) { return std::string(PATHLOC_TEST_DATA) + "/" + name; }

}  // namespace

TEST(Cli, SectionOnTheIncomingArrow) {
  const RunResult r = run("section", read_data("arrow_into_x.quiver"));
  ASSERT_EQ(r.exit_code, kExitOk) << r.err;
  const auto m = kv(r.out);
  EXPECT_EQ(m.at("section.S_x.basis"), "x,alpha");
  EXPECT_EQ(m.at("section.S_x.dim"), "2");
  EXPECT_EQ(m.at("section.S_x.finite"), "true");
}

TEST(Cli, InfiniteSectionReportsItsWitness) {
  const RunResult r = run("section", read_data("chain_loop.quiver"));
  ASSERT_EQ(r.exit_code, kExitOk) << r.err;
  const auto m = kv(r.out);
  EXPECT_EQ(m.at("section.S_1.finite"), "false");
  EXPECT_EQ(m.at("section.S_1.witness"), "l");
}

TEST(Cli, PredecessorsOfAPath) {
  RunOptions opts;
  opts.n = 2;
  opts.vertex = "x";
  const auto m = kv(run("predecessors", read_data("path_full.quiver"), opts).out);
  EXPECT_EQ(m.at("is_predecessor.y.x"), "2");
  const auto f = kv(run("predecessors", read_data("path_finite.quiver"), opts).out);
  EXPECT_EQ(f.at("is_predecessor.y.x"), "false");
}

TEST(Cli, BatteriesAndVerifySucceedOnEveryDataFile) {
  for (const auto& entry : std::filesystem::directory_iterator(PATHLOC_TEST_DATA)) {
    const std::string text = read_data(entry.path().filename().string());
    for (const char* cmd : {"check-left-semicentral", "check-right-semicentral", "check-central", "verify"}) {
      const RunResult r = run(cmd, text);
      EXPECT_EQ(r.exit_code, kExitOk) << cmd << " " << entry.path() << "\n" << r.out << r.err;
    }
  }
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("no-such-command", read_data("arrow_into_x.quiver")).exit_code, kExitUsage);
  EXPECT_EQ(run("loewy", "quiver\nvertex\n").exit_code, kExitUsage);
  EXPECT_EQ(run("loewy", "quiver\nvertex x\nvertex x\ncoalgebra full\n").exit_code, kExitSemantic);
  RunOptions bad;
  bad.modules = {"Q_x"};
  EXPECT_EQ(run("loewy", read_data("arrow_into_x.quiver"), bad).exit_code, kExitUsage);
  RunOptions ghost;
  ghost.vertex = "ghost";
  EXPECT_EQ(run("section", read_data("arrow_into_x.quiver"), ghost).exit_code, kExitUsage);
  // Infinitely many cells cannot be listed.
  EXPECT_EQ(run("quotient", read_data("cycle_torsion.quiver")).exit_code, kExitCapacity);
  const RunResult r = run("localize", read_data("cycle_torsion.quiver"));
  EXPECT_EQ(r.exit_code, kExitOk) << r.err;
  EXPECT_EQ(kv(r.out).at("localize.cells.finite"), "false");
}

TEST(Cli, OutputIsDeterministic) {
  const std::string text = read_data("kronecker_paths.quiver");
  for (const std::string& cmd : commands()) {
    const RunResult a = run(cmd, text);
    const RunResult b = run(cmd, text);
    EXPECT_EQ(a.out, b.out) << cmd;
    EXPECT_EQ(a.exit_code, b.exit_code) << cmd;
  }
}

TEST(Cli, DotFileMarksTorsion) {
  const auto path = std::filesystem::temp_directory_path() / "pathloc_cli_test.dot";
  RunOptions opts;
  opts.dot_path = path.string();
  ASSERT_EQ(run("localize", read_data("arrow_into_x.quiver"), opts).exit_code, kExitOk);
  std::ifstream f(path);
  std::stringstream s;
  s << f.rdbuf();
  const std::string dot = s.str();
  EXPECT_NE(dot.find("\"x\" [fillcolor=white"), std::string::npos) << dot;
  EXPECT_NE(dot.find("\"y\" [fillcolor=black"), std::string::npos) << dot;
  EXPECT_NE(dot.find("\"y\" -> \"x\" [label=\"alpha\"]"), std::string::npos) << dot;
  std::filesystem::remove(path);
}

#ifdef PATHLOC_CLI
TEST(Cli, BinaryExitCodes) {
  const std::string bin = PATHLOC_CLI;
  EXPECT_EQ(shell(bin + " section " + data("arrow_into_x.quiver")), 0);
  EXPECT_EQ(shell(bin + " section - < " + data("arrow_into_x.quiver")), 0);
  EXPECT_EQ(shell(bin + " section /nonexistent/file"), 1);
  EXPECT_EQ(shell(bin + " bogus " + data("arrow_into_x.quiver")), 1);
  EXPECT_EQ(shell(bin + " loewy " + data("arrow_into_x.quiver") + " -n 0"), 1);
  EXPECT_EQ(shell(bin + " quotient " + data("cycle_torsion.quiver")), 3);
  EXPECT_EQ(shell("printf 'quiver\\nvertex x\\nvertex x\\n' | " + bin + " loewy -"), 2);
}
#endif
