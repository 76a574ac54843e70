#include "brute.hpp"

namespace pathloc::testing {

Matrix arrow_matrix(const PathCoalgebra& c) {
  const Quiver& q = c.quiver();
  Matrix m(q.vertex_count(), std::vector<std::size_t>(q.vertex_count(), 0));
  for (ArrowId a : q.arrows()) {
    if (c.contains(q.path({a}))) ++m[index(q.source(a))][index(q.target(a))];
  }
  return m;
}

std::vector<Path> basis_paths(const PathCoalgebra& c, std::size_t max_len) {
  const Quiver& q = c.quiver();
  std::vector<Path> out;
  // Breadth-first extension by one arrow; a subpath-closed basis never
  // needs a non-member prefix.
  std::vector<Path> frontier;
  for (VertexId v : q.vertices()) frontier.push_back(Path::trivial(v));
  for (std::size_t len = 0; len <= max_len && !frontier.empty(); ++len) {
    std::vector<Path> next;
    for (const Path& p : frontier) {
      if (!c.contains(p)) continue;
      out.push_back(p);
      for (ArrowId a : q.out_arrows(p.target())) next.push_back(p.then(q.path({a})));
    }
    frontier = std::move(next);
  }
  return out;
}

Matrix length_n_paths(const PathCoalgebra& c, std::size_t n, std::size_t max_len) {
  const std::size_t k = c.quiver().vertex_count();
  Matrix m(k, std::vector<std::size_t>(k, 0));
  if (n > max_len) return m;
  for (const Path& p : basis_paths(c, max_len)) {
    if (p.length() == n) ++m[index(p.source())][index(p.target())];
  }
  return m;
}

bool walk_exists(const Matrix& m, std::size_t y, std::size_t x, std::size_t n,
                 const std::vector<bool>& inner) {
  if (n == 0) return false;
  std::vector<bool> at(m.size(), false);
  at[y] = true;
  for (std::size_t step = 1; step <= n; ++step) {
    std::vector<bool> next(m.size(), false);
    for (std::size_t u = 0; u < m.size(); ++u) {
      if (!at[u]) continue;
      if (step > 1 && !inner[u]) continue;
      for (std::size_t v = 0; v < m.size(); ++v) next[v] = next[v] || m[u][v] > 0;
    }
    at = std::move(next);
  }
  return at[x];
}

std::vector<std::size_t> paths_into_by_powers(const Quiver& q, std::size_t max_len) {
  const std::size_t n = q.vertex_count();
  Matrix adj(n, std::vector<std::size_t>(n, 0));
  for (ArrowId a : q.arrows()) ++adj[index(q.source(a))][index(q.target(a))];
  Matrix power(n, std::vector<std::size_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) power[i][i] = 1;
  std::vector<std::size_t> total(n, 1);
  for (std::size_t k = 1; k <= max_len; ++k) {
    Matrix next(n, std::vector<std::size_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t l = 0; l < n; ++l) {
        if (!power[i][l]) continue;
        for (std::size_t j = 0; j < n; ++j) next[i][j] += power[i][l] * adj[l][j];
      }
    }
    power = std::move(next);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) total[j] += power[i][j];
    }
  }
  return total;
}

std::vector<bool> on_cycle(const Quiver& q, const std::vector<bool>& allowed) {
  // v is on a cycle iff v reaches itself in >= 1 step through allowed
  // vertices; quadratic is fine at test sizes.
  const std::size_t n = q.vertex_count();
  std::vector<bool> out(n, false);
  for (std::size_t s = 0; s < n; ++s) {
    if (!allowed[s]) continue;
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack{s};
    while (!stack.empty() && !out[s]) {
      const std::size_t u = stack.back();
      stack.pop_back();
      for (ArrowId a : q.out_arrows(vertex_at(u))) {
        const std::size_t v = index(q.target(a));
        if (v == s) out[s] = true;
        if (allowed[v] && !seen[v]) {
          seen[v] = true;
          stack.push_back(v);
        }
      }
    }
  }
  return out;
}

std::vector<bool> reaches(const Quiver& q, VertexId target, const std::vector<bool>& allowed) {
  std::vector<bool> out(q.vertex_count(), false);
  std::vector<VertexId> stack{target};
  while (!stack.empty()) {
    const VertexId u = stack.back();
    stack.pop_back();
    for (ArrowId a : q.in_arrows(u)) {
      const VertexId v = q.source(a);
      if (!allowed[index(v)] || out[index(v)]) continue;
      out[index(v)] = true;
      stack.push_back(v);
    }
  }
  return out;
}

}  // namespace pathloc::testing
