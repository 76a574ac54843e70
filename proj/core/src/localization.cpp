#include "pathloc/localization.hpp"

#include <algorithm>
#include <set>

#include "pathloc/errors.hpp"

namespace pathloc {

// ------------------------------------------------------------ CellQuiver

Path CellQuiver::lift(const Path& cell_path) const {
  Path out = Path::trivial(to_c.at(index(cell_path.source())));
  for (ArrowId a : cell_path.arrows()) out = out.then(cells.at(index(a)));
  return out;
}

Path CellQuiver::descend(const Path& c_path) const {
  const auto verts = c_path.vertices();
  auto start = from_c.at(index(verts.front()));
  if (!start || !from_c.at(index(verts.back()))) {
    throw DomainError("only paths between torsion-free vertices descend to eCe");
  }
  std::vector<ArrowId> arrows;
  std::size_t last = 0;
  for (std::size_t i = 1; i < verts.size(); ++i) {
    if (!from_c.at(index(verts[i]))) continue;
    auto it = cell_index.find(c_path.subpath(last, i));
    if (it == cell_index.end()) throw DomainError("path segment is not a cell");
    arrows.push_back(it->second);
    last = i;
  }
  return arrows.empty() ? Path::trivial(*start) : quiver->path(arrows);
}

VertexMultiset CellQuiver::to_c_labels(const VertexMultiset& m) const {
  VertexMultiset out;
  for (const auto& [v, k] : m) out[to_c.at(index(v))] += k;
  return out;
}

// --------------------------------------------------- LocalizationContext

namespace {

// Torsion vertices reachable from X by a nonempty path whose vertices
// after the first are all torsion.
std::vector<bool> torsion_reach_from_x(const LocalizationContext& ctx) {
  const Quiver& q = ctx.quiver();
  std::vector<VertexId> seeds;
  for (VertexId x : ctx.torsion_free()) {
    for (ArrowId a : q.out_arrows(x)) {
      if (ctx.is_torsion(q.target(a))) seeds.push_back(q.target(a));
    }
  }
  auto out = reachable(q, seeds, [&](VertexId v) { return ctx.is_torsion(v); });
  return out;
}

// Torsion vertices from which some vertex of `targets` is reached by a
// nonempty path whose vertices before the last are all torsion.
std::vector<bool> torsion_reach_into(const LocalizationContext& ctx,
                                     const std::vector<VertexId>& targets) {
  const Quiver& q = ctx.quiver();
  std::vector<VertexId> seeds;
  for (VertexId x : targets) {
    for (ArrowId a : q.in_arrows(x)) {
      if (ctx.is_torsion(q.source(a))) seeds.push_back(q.source(a));
    }
  }
  return reachable(q, seeds, [&](VertexId v) { return ctx.is_torsion(v); }, /*backwards=*/true);
}

bool interior_torsion(const LocalizationContext& ctx, const Path& p) {
  const auto verts = p.vertices();
  for (std::size_t i = 1; i + 1 < verts.size(); ++i) {
    if (!ctx.is_torsion(verts[i])) return false;
  }
  return true;
}

// Cells of a full path coalgebra: DFS from each X-vertex through torsion
// vertices that can still return to X, stopping at the first X-vertex.
// Finite by the caller's check.
std::vector<Path> full_cells(const LocalizationContext& ctx, const std::vector<bool>& returns) {
  const Quiver& q = ctx.quiver();
  std::vector<Path> out;
  std::function<void(const Path&)> grow = [&](const Path& p) {
    for (ArrowId a : q.out_arrows(p.target())) {
      const VertexId t = q.target(a);
      if (ctx.in_x(t)) {
        out.push_back(p.then(q.path({a})));
      } else if (returns[index(t)]) {
        grow(p.then(q.path({a})));
      }
    }
  };
  for (VertexId x : ctx.torsion_free()) grow(Path::trivial(x));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

LocalizationContext::LocalizationContext(CoalgebraPtr c, std::vector<VertexId> x, std::size_t cap)
    : coalgebra_(std::move(c)) {
  if (!coalgebra_) throw DomainError("localization without a coalgebra");
  const Quiver& q = coalgebra_->quiver();
  if (auto report = validate(*coalgebra_); !report.ok()) {
    throw DomainError("coalgebra basis is not subpath-closed: missing '" +
                      q.format(report.missing.front()) + "'");
  }
  if (x.empty()) throw DomainError("the torsion-free set X must be nonempty");
  in_x_.assign(q.vertex_count(), false);
  for (VertexId v : x) {
    q.check(v);
    in_x_[index(v)] = true;
  }
  for (VertexId v : q.vertices()) (in_x_[index(v)] ? x_ : torsion_).push_back(v);
  cap_ = std::max(cap, q.vertex_count());

  // Cells are infinite exactly when a torsion cycle sits on a torsion
  // route from X back to X.
  if (coalgebra_->is_full()) {
    const auto fwd = torsion_reach_from_x(*this);
    const auto bwd = torsion_reach_into(*this, x_);
    auto cycle = find_cycle(q, [&](VertexId v) {
      return is_torsion(v) && fwd[index(v)] && bwd[index(v)];
    });
    if (cycle) {
      cells_witness_ = q.format(*cycle);
      return;
    }
  }

  auto cq = std::make_shared<CellQuiver>();
  auto quiver = std::make_shared<Quiver>();
  cq->from_c.assign(q.vertex_count(), std::nullopt);
  for (VertexId v : x_) {
    cq->from_c[index(v)] = quiver->add_vertex(q.label(v));
    cq->to_c.push_back(v);
  }
  std::vector<Path> cells;
  if (coalgebra_->is_full()) {
    cells = full_cells(*this, torsion_reach_into(*this, x_));
  } else {
    for (const Path& p : coalgebra_->basis()) {
      if (p.length() >= 1 && in_x(p.source()) && in_x(p.target()) && interior_torsion(*this, p)) {
        cells.push_back(p);
      }
    }
  }
  for (const Path& p : cells) {
    const ArrowId a = quiver->add_arrow(q.format(p), *cq->from_c[index(p.source())],
                                        *cq->from_c[index(p.target())]);
    cq->cell_index.emplace(p, a);
    cq->cells.push_back(p);
  }
  cq->quiver = quiver;
  if (coalgebra_->is_full()) {
    cq->coalgebra = share(PathCoalgebra::full(quiver));
  } else {
    std::vector<Path> basis;
    for (const Path& p : coalgebra_->basis()) {
      if (in_x(p.source()) && in_x(p.target())) basis.push_back(cq->descend(p));
    }
    cq->coalgebra = share(PathCoalgebra::finite(quiver, std::move(basis)));
  }
  cells_ = std::move(cq);
}

std::optional<std::size_t> LocalizationContext::cap_for(VertexId v) const {
  if (coalgebra_->infinite_into_witness(v)) return cap_;
  return std::nullopt;
}

const CellQuiver& LocalizationContext::cells() const {
  if (!cells_) {
    throw CapacityError("eCe has infinitely many cells", cells_witness_);
  }
  return *cells_;
}

const CellQuiver& localized_coalgebra(const LocalizationContext& ctx) { return ctx.cells(); }

// ------------------------------------------------------------------- T

PathComodule quotient_T(const LocalizationContext& ctx, const PathComodule& m) {
  if (m.coalgebra() != ctx.coalgebra() && !(*m.coalgebra() == *ctx.coalgebra())) {
    throw DomainError("comodule is over a different coalgebra");
  }
  const CellQuiver& cq = ctx.cells();
  std::vector<Component> out;
  for (const Component& comp : m.components()) {
    // Group by the tail from the last X-vertex.
    std::map<Path, Component> by_tail;
    auto place = [&](const Path& p, bool killed) {
      const auto verts = p.vertices();
      std::size_t last = verts.size();
      while (last > 0 && !ctx.in_x(verts[last - 1])) --last;
      if (last == 0 || !ctx.in_x(verts.front())) return;  // source torsion
      const std::size_t i = last - 1;
      Path tail = p.subpath(i, p.length());
      Path head = cq.descend(p.subpath(0, i));
      auto it = by_tail.try_emplace(tail, Component{*cq.from_c[index(tail.source())], {}, {}}).first;
      it->second.present.insert(head);
      if (killed) it->second.killed.insert(std::move(head));
    };
    for (const Path& p : comp.present) place(p, comp.killed.contains(p));
    for (auto& [tail, c] : by_tail) out.push_back(std::move(c));
  }
  return PathComodule::trusted(cq.coalgebra, std::move(out));
}

// ------------------------------------------------------------------- S

SectionResult section_on_simple(const LocalizationContext& ctx, VertexId x) {
  const Quiver& q = ctx.quiver();
  q.check(x);
  if (!ctx.in_x(x)) throw DomainError("S(S_x) needs x in X, got '" + q.label(x) + "'");
  SectionResult r;
  r.generators = "x and the basis paths into " + q.label(x) +
                 " whose source and strict intermediates are torsion";
  std::set<Path> present;
  if (ctx.coalgebra()->is_full()) {
    const auto bwd = torsion_reach_into(ctx, {x});
    if (auto cycle = find_cycle(q, [&](VertexId v) { return ctx.is_torsion(v) && bwd[index(v)]; })) {
      r.finite = false;
      r.witness = std::move(cycle);
      return r;
    }
    walk_paths_into(q, x, q.vertex_count(), [&](const Path& p) {
      if (p.is_trivial() || ctx.is_torsion(p.source())) {
        present.insert(p);
        return true;
      }
      return false;
    });
  } else {
    for (const Path& p : ctx.coalgebra()->paths_into(x)) {
      const auto verts = p.vertices();
      if (std::all_of(verts.begin(), verts.end() - 1, [&](VertexId v) { return ctx.is_torsion(v); })) {
        present.insert(p);
      }
    }
  }
  r.comodule = PathComodule::trusted(ctx.coalgebra(), {Component{x, std::move(present), {}}});
  return r;
}

PathComodule section_on_injective(const LocalizationContext& ctx, VertexId x,
                                  std::optional<std::size_t> cap) {
  ctx.quiver().check(x);
  if (!ctx.in_x(x)) throw DomainError("S(E_x) needs x in X, got '" + ctx.quiver().label(x) + "'");
  return injective(ctx.coalgebra(), x, cap);
}

PathComodule torsion_subcomodule(const LocalizationContext& ctx, const PathComodule& m) {
  std::vector<Component> out;
  for (std::size_t i = 0; i < m.components().size(); ++i) {
    const Component& comp = m.components()[i];
    Component sub{comp.anchor, comp.killed, comp.killed};
    for (const Path& p : m.surviving(i)) {
      bool torsion = true;
      for (std::size_t j = 0; j <= p.length() && torsion; ++j) {
        const Path t = p.terminal(j);
        if (!comp.killed.contains(t) && ctx.in_x(t.source())) torsion = false;
      }
      if (torsion) sub.present.insert(p);
    }
    out.push_back(std::move(sub));
  }
  return PathComodule::trusted(m.coalgebra(), std::move(out));
}

VertexMultiset torsion_path_sources(const LocalizationContext& ctx, VertexId x, std::size_t n) {
  const Quiver& q = ctx.quiver();
  q.check(x);
  VertexMultiset out;
  if (n == 0) {
    out[x] = 1;
    return out;
  }
  if (ctx.coalgebra()->is_full()) {
    walk_paths_into(q, x, n, [&](const Path& p) {
      if (p.is_trivial()) return true;
      if (!ctx.is_torsion(p.source())) return false;
      if (p.length() == n) ++out[p.source()];
      return true;
    });
    return out;
  }
  for (const Path& p : ctx.coalgebra()->paths_into(x, n)) {
    if (p.length() != n) continue;
    const auto verts = p.vertices();
    if (std::all_of(verts.begin(), verts.end() - 1, [&](VertexId v) { return ctx.is_torsion(v); })) {
      ++out[p.source()];
    }
  }
  return out;
}

VertexMultiset section_predecessor_layers(const LocalizationContext& ctx, VertexId x,
                                          std::size_t n) {
  SectionResult s = section_on_simple(ctx, x);
  if (!s.finite) return torsion_path_sources(ctx, x, n);
  return socle_series(*s.comodule).layer(n + 1);
}

// ------------------------------------------------------------------- H

ColocalizationVerdict colocalizing_exists(const LocalizationContext& ctx) {
  ColocalizationVerdict v;
  if (!ctx.coalgebra()->is_full()) return v;
  const auto fwd = torsion_reach_from_x(ctx);
  if (auto cycle = find_cycle(ctx.quiver(), [&](VertexId w) { return ctx.is_torsion(w) && fwd[index(w)]; })) {
    v.exists = false;
    v.witness = std::move(cycle);
  }
  return v;
}

HSimple h_on_simple(const LocalizationContext& ctx, VertexId x) {
  const Quiver& q = ctx.quiver();
  q.check(x);
  if (!ctx.in_x(x)) throw DomainError("H(S_x) needs x in X, got '" + q.label(x) + "'");
  if (auto v = colocalizing_exists(ctx); !v.exists) {
    throw UnsupportedContext("H does not exist: eC is not quasi-finite (torsion cycle " +
                             q.format(*v.witness) + ")");
  }
  HSimple h{x, {Path::trivial(x)}};
  auto tail_ok = [&](const Path& p) {
    const auto verts = p.vertices();
    return std::all_of(verts.begin() + 1, verts.end(), [&](VertexId v) { return ctx.is_torsion(v); });
  };
  if (ctx.coalgebra()->is_full()) {
    std::function<void(const Path&)> grow = [&](const Path& p) {
      for (ArrowId a : q.out_arrows(p.target())) {
        if (!ctx.is_torsion(q.target(a))) continue;
        Path next = p.then(q.path({a}));
        h.basis.push_back(next);
        grow(next);
      }
    };
    grow(Path::trivial(x));
  } else {
    for (const Path& p : ctx.coalgebra()->paths_from(x)) {
      if (p.length() >= 1 && tail_ok(p)) h.basis.push_back(p);
    }
  }
  std::sort(h.basis.begin(), h.basis.end());
  return h;
}

std::size_t h_dimension_from_quotients(const LocalizationContext& ctx, VertexId x) {
  const CellQuiver& cq = ctx.cells();
  const VertexId cx = *cq.from_c.at(index(x));
  std::size_t dim = 1;
  for (VertexId y : ctx.torsion()) {
    // Tails are torsion-internal, so |Q0| bounds every socle class.
    std::optional<std::size_t> cap;
    if (ctx.cap_for(y)) cap = ctx.quiver().vertex_count();
    const PathComodule ey = injective(ctx.coalgebra(), y, cap);
    dim += hom_dim_simple_into(quotient_T(ctx, ey), cx);
  }
  return dim;
}

}  // namespace pathloc
