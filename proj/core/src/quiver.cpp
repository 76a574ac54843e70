#include "pathloc/quiver.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include <boost/container_hash/hash.hpp>

#include "pathloc/errors.hpp"

namespace pathloc {

// ---------------------------------------------------------------- Path

Path Path::trivial(VertexId v) {
  Path p;
  p.vertices_.push_back(v);
  return p;
}

Path Path::subpath(std::size_t first, std::size_t last) const {
  if (first > last || last > length()) {
    throw DomainError("subpath bounds out of range");
  }
  Path p;
  p.arrows_.assign(arrows_.begin() + static_cast<std::ptrdiff_t>(first),
                   arrows_.begin() + static_cast<std::ptrdiff_t>(last));
  p.vertices_.assign(vertices_.begin() + static_cast<std::ptrdiff_t>(first),
                     vertices_.begin() + static_cast<std::ptrdiff_t>(last) + 1);
  return p;
}

Path Path::then(const Path& other) const {
  if (target() != other.source()) {
    throw DomainError("paths are not composable");
  }
  Path p = *this;
  p.arrows_.insert(p.arrows_.end(), other.arrows_.begin(), other.arrows_.end());
  p.vertices_.insert(p.vertices_.end(), other.vertices_.begin() + 1, other.vertices_.end());
  return p;
}

std::strong_ordering operator<=>(const Path& a, const Path& b) {
  if (auto c = a.length() <=> b.length(); c != 0) return c;
  if (auto c = std::lexicographical_compare_three_way(a.arrows_.begin(), a.arrows_.end(),
                                                      b.arrows_.begin(), b.arrows_.end());
      c != 0) {
    return c;
  }
  return std::lexicographical_compare_three_way(a.vertices_.begin(), a.vertices_.end(),
                                                b.vertices_.begin(), b.vertices_.end());
}

std::size_t PathHash::operator()(const Path& p) const noexcept {
  std::size_t seed = index(p.source());
  for (ArrowId a : p.arrows()) boost::hash_combine(seed, index(a));
  return seed;
}

// -------------------------------------------------------------- Quiver

VertexId Quiver::add_vertex(std::string label) {
  if (vertex_index_.contains(label)) {
    throw DomainError("duplicate vertex id '" + label + "'");
  }
  const VertexId v = vertex_at(vertex_labels_.size());
  vertex_index_.emplace(label, v);
  vertex_labels_.push_back(std::move(label));
  in_.emplace_back();
  out_.emplace_back();
  return v;
}

ArrowId Quiver::add_arrow(std::string label, VertexId source, VertexId target) {
  check(source);
  check(target);
  if (arrow_index_.contains(label)) {
    throw DomainError("duplicate arrow id '" + label + "'");
  }
  const ArrowId a = arrow_at(arrows_.size());
  arrow_index_.emplace(label, a);
  arrows_.push_back(Arrow{std::move(label), source, target});
  out_[index(source)].push_back(a);
  in_[index(target)].push_back(a);
  return a;
}

std::vector<VertexId> Quiver::vertices() const {
  std::vector<VertexId> vs;
  vs.reserve(vertex_count());
  for (std::size_t i = 0; i < vertex_count(); ++i) vs.push_back(vertex_at(i));
  return vs;
}

std::vector<ArrowId> Quiver::arrows() const {
  std::vector<ArrowId> as;
  as.reserve(arrow_count());
  for (std::size_t i = 0; i < arrow_count(); ++i) as.push_back(arrow_at(i));
  return as;
}

void Quiver::check(VertexId v) const {
  if (index(v) >= vertex_count()) {
    throw DomainError("unknown vertex #" + std::to_string(index(v)));
  }
}

void Quiver::check(ArrowId a) const {
  if (index(a) >= arrow_count()) {
    throw DomainError("unknown arrow #" + std::to_string(index(a)));
  }
}

const std::string& Quiver::label(VertexId v) const {
  check(v);
  return vertex_labels_[index(v)];
}

const std::string& Quiver::label(ArrowId a) const { return arrow(a).label; }

const Arrow& Quiver::arrow(ArrowId a) const {
  check(a);
  return arrows_[index(a)];
}

std::optional<VertexId> Quiver::find_vertex(std::string_view label) const {
  auto it = vertex_index_.find(std::string(label));
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<ArrowId> Quiver::find_arrow(std::string_view label) const {
  auto it = arrow_index_.find(std::string(label));
  if (it == arrow_index_.end()) return std::nullopt;
  return it->second;
}

VertexId Quiver::vertex(std::string_view label) const {
  if (auto v = find_vertex(label)) return *v;
  throw DomainError("unknown vertex '" + std::string(label) + "'");
}

ArrowId Quiver::arrow_id(std::string_view label) const {
  if (auto a = find_arrow(label)) return *a;
  throw DomainError("unknown arrow '" + std::string(label) + "'");
}

std::span<const ArrowId> Quiver::in_arrows(VertexId v) const {
  check(v);
  return in_[index(v)];
}

std::span<const ArrowId> Quiver::out_arrows(VertexId v) const {
  check(v);
  return out_[index(v)];
}

Path Quiver::path(std::span<const ArrowId> arrows) const {
  if (arrows.empty()) {
    throw DomainError("a path given by arrows needs at least one arrow");
  }
  Path p;
  p.vertices_.push_back(source(arrows.front()));
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    const Arrow& a = arrow(arrows[i]);
    if (a.source != p.vertices_.back()) {
      throw DomainError("arrows '" + label(arrows[i - 1]) + "' and '" + a.label +
                        "' are not composable");
    }
    p.arrows_.push_back(arrows[i]);
    p.vertices_.push_back(a.target);
  }
  return p;
}

Path Quiver::parse_path(std::string_view text) const {
  if (text.find('*') == std::string_view::npos) {
    if (auto v = find_vertex(text)) return Path::trivial(*v);
    if (auto a = find_arrow(text)) return path({*a});
    throw DomainError("unknown vertex or arrow '" + std::string(text) + "'");
  }
  std::vector<ArrowId> arrows;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t star = std::min(text.find('*', start), text.size());
    arrows.push_back(arrow_id(text.substr(start, star - start)));
    start = star + 1;
  }
  return path(arrows);
}

std::string Quiver::format(const Path& p) const {
  if (p.is_trivial()) return label(p.source());
  std::string out;
  for (ArrowId a : p.arrows()) {
    if (!out.empty()) out += '*';
    out += label(a);
  }
  return out;
}

Quiver Quiver::opposite() const {
  Quiver q;
  for (const auto& l : vertex_labels_) q.add_vertex(l);
  for (const Arrow& a : arrows_) q.add_arrow(a.label, a.target, a.source);
  return q;
}

bool operator==(const Quiver& a, const Quiver& b) {
  if (a.vertex_labels_ != b.vertex_labels_ || a.arrows_.size() != b.arrows_.size()) return false;
  for (std::size_t i = 0; i < a.arrows_.size(); ++i) {
    const Arrow& x = a.arrows_[i];
    const Arrow& y = b.arrows_[i];
    if (x.label != y.label || x.source != y.source || x.target != y.target) return false;
  }
  return true;
}

// ---------------------------------------------------------- algorithms

void walk_paths_into(const Quiver& q, VertexId target, std::size_t max_len,
                     const std::function<bool(const Path&)>& visit) {
  q.check(target);
  // Explicit stack; each entry is a path to be visited.
  std::vector<Path> stack{Path::trivial(target)};
  while (!stack.empty()) {
    Path p = std::move(stack.back());
    stack.pop_back();
    if (!visit(p) || p.length() == max_len) continue;
    const auto in = q.in_arrows(p.source());
    for (auto it = in.rbegin(); it != in.rend(); ++it) {
      stack.push_back(q.path({*it}).then(p));
    }
  }
}

std::vector<Path> enumerate_paths(const Quiver& q, VertexId target, std::size_t max_len) {
  std::vector<Path> out;
  walk_paths_into(q, target, max_len, [&](const Path& p) {
    out.push_back(p);
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Path> enumerate_paths_from(const Quiver& q, VertexId source, std::size_t max_len) {
  q.check(source);
  std::vector<Path> out;
  std::vector<Path> frontier{Path::trivial(source)};
  for (std::size_t len = 0; !frontier.empty(); ++len) {
    std::vector<Path> next;
    for (const Path& p : frontier) {
      out.push_back(p);
      if (len == max_len) continue;
      for (ArrowId a : q.out_arrows(p.target())) next.push_back(p.then(q.path({a})));
    }
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_acyclic(const Quiver& q) {
  // Kahn's algorithm; loops keep their vertex's in-degree positive.
  std::vector<std::size_t> indegree(q.vertex_count(), 0);
  for (ArrowId a : q.arrows()) ++indegree[index(q.target(a))];
  std::deque<VertexId> ready;
  for (VertexId v : q.vertices()) {
    if (indegree[index(v)] == 0) ready.push_back(v);
  }
  std::size_t removed = 0;
  while (!ready.empty()) {
    const VertexId v = ready.front();
    ready.pop_front();
    ++removed;
    for (ArrowId a : q.out_arrows(v)) {
      if (--indegree[index(q.target(a))] == 0) ready.push_back(q.target(a));
    }
  }
  return removed == q.vertex_count();
}

namespace {

// Shortest cycle through `start` using only allowed vertices, by BFS over
// arrows; parent arrows reconstruct the walk.
std::optional<Path> cycle_through(const Quiver& q, VertexId start,
                                  const std::function<bool(VertexId)>& allowed) {
  if (!allowed(start)) return std::nullopt;
  std::vector<std::optional<ArrowId>> parent(q.vertex_count());
  std::vector<bool> seen(q.vertex_count(), false);
  std::deque<VertexId> queue{start};
  seen[index(start)] = true;
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop_front();
    for (ArrowId a : q.out_arrows(v)) {
      const VertexId w = q.target(a);
      if (w == start) {
        std::vector<ArrowId> arrows{a};
        for (VertexId u = v; u != start;) {
          const ArrowId pa = *parent[index(u)];
          arrows.push_back(pa);
          u = q.source(pa);
        }
        std::reverse(arrows.begin(), arrows.end());
        return q.path(arrows);
      }
      if (seen[index(w)] || !allowed(w)) continue;
      seen[index(w)] = true;
      parent[index(w)] = a;
      queue.push_back(w);
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<Path> find_cycle(const Quiver& q, const std::function<bool(VertexId)>& allowed,
                               std::optional<VertexId> through) {
  if (through) return cycle_through(q, *through, allowed);
  for (VertexId v : q.vertices()) {
    if (auto c = cycle_through(q, v, allowed)) return c;
  }
  return std::nullopt;
}

std::vector<bool> reachable(const Quiver& q, const std::vector<VertexId>& from,
                            const std::function<bool(VertexId)>& allowed, bool backwards) {
  std::vector<bool> seen(q.vertex_count(), false);
  std::deque<VertexId> queue;
  for (VertexId v : from) {
    q.check(v);
    if (!seen[index(v)]) {
      seen[index(v)] = true;
      queue.push_back(v);
    }
  }
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop_front();
    const auto step = backwards ? q.in_arrows(v) : q.out_arrows(v);
    for (ArrowId a : step) {
      const VertexId w = backwards ? q.source(a) : q.target(a);
      if (seen[index(w)] || !allowed(w)) continue;
      seen[index(w)] = true;
      queue.push_back(w);
    }
  }
  return seen;
}

namespace {

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string export_dot(const Quiver& q, const std::map<VertexId, Fill>& fills) {
  std::ostringstream os;
  os << "digraph Q {\n";
  os << "  node [shape=circle, style=filled, fixedsize=false];\n";
  for (VertexId v : q.vertices()) {
    auto it = fills.find(v);
    if (it == fills.end()) {
      throw DomainError("no fill given for vertex '" + q.label(v) + "'");
    }
    os << "  " << dot_quote(q.label(v));
    if (it->second == Fill::Black) {
      os << " [fillcolor=black, fontcolor=white];\n";
    } else {
      os << " [fillcolor=white, fontcolor=black];\n";
    }
  }
  for (ArrowId a : q.arrows()) {
    const Arrow& arr = q.arrow(a);
    os << "  " << dot_quote(q.label(arr.source)) << " -> " << dot_quote(q.label(arr.target))
       << " [label=" << dot_quote(arr.label) << "];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace pathloc
