#pragma once

// Problem files and the command runner behind the command-line tool.
//
//   quiver
//   vertex <id>
//   arrow <id> : <src> -> <tgt>
//   coalgebra full | coalgebra paths <path> ... | coalgebra basis <path> ...
//   localize <id> ...
//   cap <integer>
//
// '#' starts a comment. A <path> is a vertex id (trivial path) or arrow
// ids joined by '*', composed left to right. `paths` closes its list
// under subpaths and records a notice; `basis` must already be closed.
// Vertex and arrow ids share one namespace. Without `localize`, X is
// every vertex.

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pathloc/coalgebra.hpp"
#include "pathloc/localization.hpp"

namespace pathloc {

struct Problem {
  std::shared_ptr<const Quiver> quiver;
  CoalgebraPtr coalgebra;
  std::vector<VertexId> localize;  // empty when not declared
  std::size_t cap = 16;
  /// Informational messages produced while parsing.
  std::vector<std::string> notices;

  /// X, defaulting to every vertex.
  std::vector<VertexId> torsion_free() const;
  LocalizationContext context() const;
};

/// Throws SyntaxError or SemanticError with a 1-based position.
Problem parse_problem(std::string_view text);

/// Canonical text: explicit bases are printed closed and sorted, so the
/// output parses back to an equal problem with no notices.
std::string print_problem(const Problem& p);

bool equivalent(const Problem& a, const Problem& b);

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitSemantic = 2;
inline constexpr int kExitCapacity = 3;
inline constexpr int kExitVerify = 4;

struct RunOptions {
  /// Restricts per-vertex commands to one vertex.
  std::optional<std::string> vertex;
  /// Layer depth for predecessors and Loewy reports.
  std::size_t n = 1;
  /// Module specs: "S_v", "E_v", "E_v/n", comma-joined for direct sums.
  std::vector<std::string> modules;
  /// Graphviz output path; written after a successful run.
  std::optional<std::string> dot_path;
  /// Turn off the linear-algebra cross-checks.
  bool no_oracle = false;
};

struct RunResult {
  int exit_code = kExitOk;
  std::string out;
  std::string err;
};

const std::vector<std::string>& commands();

/// Parses `text` and runs one command. Never throws for library errors;
/// they become exit codes with a message on `err`.
RunResult run(const std::string& command, std::string_view text, const RunOptions& opts = {});

}  // namespace pathloc
