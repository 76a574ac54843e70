#include "pathloc/extquiver.hpp"

#include <numeric>

#include "pathloc/errors.hpp"

namespace pathloc {

void ExtQuiver::add(VertexId from, VertexId to, std::size_t multiplicity) {
  if (index(from) >= vertex_count_ || index(to) >= vertex_count_) {
    throw DomainError("Ext-quiver arrow outside the vertex set");
  }
  if (multiplicity > 0) arrows_[{from, to}] += multiplicity;
}

std::size_t ExtQuiver::multiplicity(VertexId from, VertexId to) const {
  auto it = arrows_.find({from, to});
  return it == arrows_.end() ? 0 : it->second;
}

std::vector<VertexId> ExtQuiver::successors(VertexId v) const {
  std::vector<VertexId> out;
  for (const auto& [e, m] : arrows_) {
    if (e.first == v) out.push_back(e.second);
  }
  return out;
}

std::vector<VertexId> ExtQuiver::predecessors(VertexId v) const {
  std::vector<VertexId> out;
  for (const auto& [e, m] : arrows_) {
    if (e.second == v) out.push_back(e.first);
  }
  return out;
}

ExtQuiver ext_quiver(const PathCoalgebra& c) {
  ExtQuiver g(c.quiver().vertex_count());
  for (ArrowId a : c.basis_arrows()) g.add(c.quiver().source(a), c.quiver().target(a));
  return g;
}

namespace {

// counts[s] = number of length-`len` paths of KQ from s into x, advanced
// one length at a time.
class FullPathCounter {
 public:
  FullPathCounter(const Quiver& q, VertexId x) : q_(q), counts_(q.vertex_count(), 0) {
    counts_[index(x)] = 1;
  }
  void step() {
    std::vector<std::size_t> next(q_.vertex_count(), 0);
    for (ArrowId a : q_.arrows()) next[index(q_.source(a))] += counts_[index(q_.target(a))];
    counts_ = std::move(next);
  }
  const std::vector<std::size_t>& counts() const { return counts_; }

 private:
  const Quiver& q_;
  std::vector<std::size_t> counts_;
};

}  // namespace

PredecessorReport n_predecessors(const PathCoalgebra& c, VertexId x, std::size_t n) {
  c.quiver().check(x);
  if (n == 0) throw DomainError("n-predecessors need n >= 1");
  PredecessorReport report{n, {}};
  if (c.is_full()) {
    FullPathCounter counter(c.quiver(), x);
    for (std::size_t k = 0; k < n; ++k) counter.step();
    for (VertexId v : c.quiver().vertices()) {
      if (std::size_t k = counter.counts()[index(v)]; k > 0) report.entries[v] = k;
    }
    return report;
  }
  for (const Path& p : c.paths_into(x)) {
    if (p.length() == n) ++report.entries[p.source()];
  }
  return report;
}

std::optional<std::size_t> is_predecessor(const PathCoalgebra& c, VertexId y, VertexId x) {
  c.quiver().check(y);
  c.quiver().check(x);
  if (c.is_full()) {
    const std::size_t bound = c.quiver().vertex_count() + c.quiver().arrow_count();
    FullPathCounter counter(c.quiver(), x);
    for (std::size_t n = 1; n <= bound; ++n) {
      counter.step();
      if (counter.counts()[index(y)] > 0) return n;
    }
    return std::nullopt;
  }
  std::optional<std::size_t> best;
  for (const Path& p : c.paths_into(x)) {
    if (p.length() >= 1 && p.source() == y && (!best || p.length() < *best)) best = p.length();
  }
  return best;
}

bool gamma_path_exists(const ExtQuiver& g, VertexId y, VertexId x, std::size_t len,
                       const std::function<bool(VertexId)>& intermediate_ok) {
  if (len == 0) return y == x;
  std::vector<bool> current(g.vertex_count(), false);
  current[index(y)] = true;
  for (std::size_t step = 1; step <= len; ++step) {
    std::vector<bool> next(g.vertex_count(), false);
    for (const auto& [e, m] : g.arrows()) {
      if (current[index(e.first)]) next[index(e.second)] = true;
    }
    if (step < len) {
      for (std::size_t v = 0; v < next.size(); ++v) {
        if (next[v] && !intermediate_ok(vertex_at(v))) next[v] = false;
      }
    }
    current = std::move(next);
  }
  return current[index(x)];
}

bool gamma_reachable(const ExtQuiver& g, VertexId y, VertexId x) {
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<VertexId> stack = g.successors(y);
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    if (seen[index(v)]) continue;
    seen[index(v)] = true;
    if (v == x) return true;
    for (VertexId w : g.successors(v)) stack.push_back(w);
  }
  return false;
}

std::vector<std::size_t> weak_components(const ExtQuiver& g) {
  std::vector<std::size_t> parent(g.vertex_count());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  std::function<std::size_t(std::size_t)> find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& [e, m] : g.arrows()) parent[find(index(e.first))] = find(index(e.second));
  // Relabel roots densely in vertex order.
  std::vector<std::size_t> label(g.vertex_count(), g.vertex_count());
  std::vector<std::size_t> out(g.vertex_count());
  std::size_t next = 0;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const std::size_t r = find(v);
    if (label[r] == g.vertex_count()) label[r] = next++;
    out[v] = label[r];
  }
  return out;
}

}  // namespace pathloc
