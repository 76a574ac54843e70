#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "pathloc/problem.hpp"

namespace {

int read_input(const std::string& path, std::string& text) {
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
    return 0;
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) {
    std::cerr << "error: cannot read '" << path << "'\n";
    return pathloc::kExitUsage;
  }
  std::ostringstream buf;
  buf << f.rdbuf();
  text = buf.str();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Localization of pointed path coalgebras"};
  app.require_subcommand(1);

  std::string input;
  pathloc::RunOptions opts;
  std::string dot;

  for (const std::string& name : pathloc::commands()) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("problem", input, "problem file, or - for stdin")->required();
    sub->add_option("--vertex", opts.vertex, "restrict to one vertex");
    sub->add_option("-n,--depth", opts.n, "layer depth")->check(CLI::PositiveNumber);
    sub->add_option("--module", opts.modules, "module spec: S_v, E_v, E_v/n, comma-joined for sums");
    sub->add_option("--dot", dot, "write the quiver as Graphviz DOT");
    sub->add_flag("--no-oracle", opts.no_oracle, "skip linear-algebra cross-checks");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : pathloc::kExitUsage;
  }

  std::string text;
  if (int code = read_input(input, text)) return code;
  if (!dot.empty()) opts.dot_path = dot;

  const std::string command = app.get_subcommands().front()->get_name();
  const pathloc::RunResult r = pathloc::run(command, text, opts);
  std::cout << r.out;
  std::cerr << r.err;
  return r.exit_code;
}
