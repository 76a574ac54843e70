#include "pathloc/coalgebra.hpp"

#include <algorithm>
#include <set>

#include "pathloc/errors.hpp"

namespace pathloc {

namespace {

// Longest path length in an acyclic quiver.
std::size_t longest_path(const Quiver& q) {
  std::vector<std::optional<std::size_t>> memo(q.vertex_count());
  std::function<std::size_t(VertexId)> depth = [&](VertexId v) -> std::size_t {
    if (memo[index(v)]) return *memo[index(v)];
    std::size_t best = 0;
    for (ArrowId a : q.in_arrows(v)) best = std::max(best, depth(q.source(a)) + 1);
    memo[index(v)] = best;
    return best;
  };
  std::size_t best = 0;
  for (VertexId v : q.vertices()) best = std::max(best, depth(v));
  return best;
}

}  // namespace

PathCoalgebra PathCoalgebra::full(std::shared_ptr<const Quiver> q) {
  if (!q || q->vertex_count() == 0) throw DomainError("a quiver needs at least one vertex");
  PathCoalgebra c;
  c.quiver_ = std::move(q);
  c.full_ = true;
  c.finite_dim_ = is_acyclic(*c.quiver_);
  if (c.finite_dim_) c.max_length_ = longest_path(*c.quiver_);
  return c;
}

PathCoalgebra PathCoalgebra::finite(std::shared_ptr<const Quiver> q, std::vector<Path> basis) {
  if (!q || q->vertex_count() == 0) throw DomainError("a quiver needs at least one vertex");
  PathCoalgebra c;
  c.quiver_ = std::move(q);
  c.full_ = false;
  c.finite_dim_ = true;
  c.by_target_.resize(c.quiver_->vertex_count());
  c.by_source_.resize(c.quiver_->vertex_count());
  std::size_t longest = 0;
  for (Path& p : basis) {
    for (VertexId v : p.vertices()) c.quiver_->check(v);
    for (ArrowId a : p.arrows()) c.quiver_->check(a);
    if (!c.members_.insert(p).second) continue;
    longest = std::max(longest, p.length());
    c.by_target_[index(p.target())].push_back(p);
    c.by_source_[index(p.source())].push_back(p);
  }
  for (auto& v : c.by_target_) std::sort(v.begin(), v.end());
  for (auto& v : c.by_source_) std::sort(v.begin(), v.end());
  c.max_length_ = longest;
  return c;
}

std::size_t PathCoalgebra::dimension() const {
  if (!full_) return members_.size();
  if (!finite_dim_) {
    auto cycle = find_cycle(*quiver_, [](VertexId) { return true; });
    throw CapacityError("path coalgebra is infinite-dimensional", quiver_->format(*cycle));
  }
  return basis().size();
}

bool PathCoalgebra::contains(const Path& p) const {
  if (full_) {
    for (VertexId v : p.vertices()) {
      if (index(v) >= quiver_->vertex_count()) return false;
    }
    return true;
  }
  return members_.contains(p);
}

std::vector<Path> PathCoalgebra::basis(std::optional<std::size_t> max_len) const {
  std::vector<Path> out;
  for (VertexId v : quiver_->vertices()) {
    auto into = paths_into(v, max_len ? max_len : (full_ ? max_length_ : std::nullopt));
    out.insert(out.end(), into.begin(), into.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Path> PathCoalgebra::paths_into(VertexId x, std::optional<std::size_t> max_len) const {
  quiver_->check(x);
  if (!full_) {
    const auto& all = by_target_[index(x)];
    if (!max_len) return all;
    std::vector<Path> out;
    for (const Path& p : all) {
      if (p.length() <= *max_len) out.push_back(p);
    }
    return out;
  }
  if (!max_len) {
    if (auto w = infinite_into_witness(x)) {
      throw CapacityError("E_" + quiver_->label(x) + " is infinite-dimensional; a cap is required",
                          quiver_->format(*w));
    }
    max_len = quiver_->vertex_count();
  }
  return enumerate_paths(*quiver_, x, *max_len);
}

std::vector<Path> PathCoalgebra::paths_from(VertexId x, std::optional<std::size_t> max_len) const {
  quiver_->check(x);
  if (!full_) {
    const auto& all = by_source_[index(x)];
    if (!max_len) return all;
    std::vector<Path> out;
    for (const Path& p : all) {
      if (p.length() <= *max_len) out.push_back(p);
    }
    return out;
  }
  if (!max_len) {
    if (auto w = infinite_from_witness(x)) {
      throw CapacityError("paths from " + quiver_->label(x) + " are infinite in number",
                          quiver_->format(*w));
    }
    max_len = quiver_->vertex_count();
  }
  return enumerate_paths_from(*quiver_, x, *max_len);
}

std::vector<ArrowId> PathCoalgebra::basis_arrows() const {
  if (full_) return quiver_->arrows();
  std::vector<ArrowId> out;
  for (const Path& p : members_) {
    if (p.length() == 1) out.push_back(p.arrows()[0]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<Path> PathCoalgebra::infinite_into_witness(VertexId x) const {
  if (!full_ || finite_dim_) return std::nullopt;
  auto reaches = reachable(*quiver_, {x}, [](VertexId) { return true; }, /*backwards=*/true);
  return find_cycle(*quiver_, [&](VertexId v) { return reaches[index(v)]; });
}

std::optional<Path> PathCoalgebra::infinite_from_witness(VertexId x) const {
  if (!full_ || finite_dim_) return std::nullopt;
  auto reached = reachable(*quiver_, {x}, [](VertexId) { return true; });
  return find_cycle(*quiver_, [&](VertexId v) { return reached[index(v)]; });
}

bool operator==(const PathCoalgebra& a, const PathCoalgebra& b) {
  if (&a == &b) return true;
  if (a.full_ != b.full_) return false;
  if (a.quiver_ != b.quiver_ && !(*a.quiver_ == *b.quiver_)) return false;
  return a.full_ || a.members_ == b.members_;
}

// ------------------------------------------------------------------ free

ValidationReport validate(const PathCoalgebra& c) {
  ValidationReport report;
  if (c.is_full()) return report;
  std::set<Path> missing;
  for (VertexId v : c.quiver().vertices()) {
    const Path t = Path::trivial(v);
    if (!c.contains(t)) missing.insert(t);
  }
  for (const Path& p : c.basis()) {
    for (std::size_t i = 0; i <= p.length(); ++i) {
      for (std::size_t j = i; j <= p.length(); ++j) {
        if (i == 0 && j == p.length()) continue;
        Path s = p.subpath(i, j);
        if (!c.contains(s)) missing.insert(std::move(s));
      }
    }
  }
  report.missing.assign(missing.begin(), missing.end());
  return report;
}

std::vector<Path> close_under_subpaths(const Quiver& q, const std::vector<Path>& generators) {
  std::set<Path> closed;
  for (VertexId v : q.vertices()) closed.insert(Path::trivial(v));
  for (const Path& p : generators) {
    for (std::size_t i = 0; i <= p.length(); ++i) {
      for (std::size_t j = i; j <= p.length(); ++j) closed.insert(p.subpath(i, j));
    }
  }
  return {closed.begin(), closed.end()};
}

std::vector<GradedSlice> injective_basis(const PathCoalgebra& c, VertexId x,
                                         std::optional<std::size_t> max_deg) {
  const auto paths = c.paths_into(x, max_deg);
  std::size_t top = max_deg.value_or(0);
  for (const Path& p : paths) top = std::max(top, p.length());
  std::vector<GradedSlice> slices;
  for (std::size_t d = 0; d <= top; ++d) slices.push_back(GradedSlice{d, {}});
  for (const Path& p : paths) slices[p.length()].paths.push_back(p);
  return slices;
}

bool is_hereditary(const PathCoalgebra& c) { return c.is_full(); }

namespace {

Path reversed(const Quiver& op, const Path& p) {
  if (p.is_trivial()) return p;
  std::vector<ArrowId> arrows(p.arrows().rbegin(), p.arrows().rend());
  return op.path(arrows);
}

}  // namespace

PathCoalgebra opposite(const PathCoalgebra& c) {
  auto op = std::make_shared<const Quiver>(c.quiver().opposite());
  if (c.is_full()) return PathCoalgebra::full(op);
  std::vector<Path> basis;
  for (const Path& p : c.basis()) basis.push_back(reversed(*op, p));
  return PathCoalgebra::finite(op, std::move(basis));
}

PathCoalgebra intersection(const PathCoalgebra& a, const PathCoalgebra& b) {
  if (!(a.quiver() == b.quiver())) throw DomainError("intersection needs a common quiver");
  if (a.is_full()) return b;
  if (b.is_full()) return a;
  std::vector<Path> common;
  for (const Path& p : a.basis()) {
    if (b.contains(p)) common.push_back(p);
  }
  return PathCoalgebra::finite(a.quiver_ptr(), std::move(common));
}

}  // namespace pathloc
