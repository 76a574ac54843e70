#pragma once

#include <fstream>
#include <initializer_list>
#include <sstream>
#include <memory>
#include <string>
#include <tuple>
#include <vector>

#include "pathloc/coalgebra.hpp"
#include "pathloc/problem.hpp"
#include "pathloc/quiver.hpp"

namespace pathloc::testing {

/// Vertices in order, then arrows (label, source, target) by label.
inline std::shared_ptr<Quiver> quiver(std::initializer_list<const char*> vertices,
                                      std::initializer_list<std::tuple<const char*, const char*, const char*>> arrows) {
  auto q = std::make_shared<Quiver>();
  for (const char* v : vertices) q->add_vertex(v);
  for (const auto& [a, s, t] : arrows) q->add_arrow(a, q->vertex(s), q->vertex(t));
  return q;
}

inline CoalgebraPtr full(std::shared_ptr<const Quiver> q) { return share(PathCoalgebra::full(std::move(q))); }

/// The span of `paths` ("x", "a*b", ...), closed under subpaths.
inline CoalgebraPtr spanned(const std::shared_ptr<const Quiver>& q, std::initializer_list<const char*> paths) {
  std::vector<Path> gens;
  for (const char* p : paths) gens.push_back(q->parse_path(p));
  return share(PathCoalgebra::finite(q, close_under_subpaths(*q, gens)));
}

inline std::vector<std::string> formatted(const Quiver& q, const std::vector<Path>& paths) {
  std::vector<std::string> out;
  for (const Path& p : paths) out.push_back(q.format(p));
  return out;
}

inline std::string read_data(const std::string& name) {
  std::ifstream f(std::string(PATHLOC_TEST_DATA) + "/" + name);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

inline Problem load(const std::string& name) { return parse_problem(read_data(name)); }

}  // namespace pathloc::testing
