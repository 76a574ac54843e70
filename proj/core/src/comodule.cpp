#include "pathloc/comodule.hpp"

#include <algorithm>

#include "pathloc/errors.hpp"

namespace pathloc {

namespace {

bool terminal_closed_in(const std::set<Path>& paths, const std::set<Path>& within) {
  for (const Path& p : paths) {
    for (std::size_t j = 0; j < p.length(); ++j) {
      if (!within.contains(p.terminal(j))) return false;
    }
  }
  return true;
}

}  // namespace

PathComodule::PathComodule(CoalgebraPtr c, std::vector<Component> components)
    : coalgebra_(std::move(c)), components_(std::move(components)) {
  if (!coalgebra_) throw DomainError("comodule without a coalgebra");
  const Quiver& q = coalgebra_->quiver();
  for (const Component& comp : components_) {
    q.check(comp.anchor);
    for (const Path& p : comp.present) {
      if (p.target() != comp.anchor) {
        throw DomainError("path '" + q.format(p) + "' does not end at anchor '" +
                          q.label(comp.anchor) + "'");
      }
      if (!coalgebra_->contains(p)) {
        throw DomainError("path '" + q.format(p) + "' is not in the coalgebra basis");
      }
    }
    if (!terminal_closed_in(comp.present, comp.present)) {
      throw DomainError("present paths are not closed under terminal subpaths");
    }
    if (!std::includes(comp.present.begin(), comp.present.end(), comp.killed.begin(),
                       comp.killed.end())) {
      throw DomainError("killed paths must be present");
    }
    if (!terminal_closed_in(comp.killed, comp.killed)) {
      throw DomainError("killed paths are not closed under terminal subpaths");
    }
  }
}

PathComodule PathComodule::trusted(CoalgebraPtr c, std::vector<Component> components) {
  PathComodule m;
  m.coalgebra_ = std::move(c);
  m.components_ = std::move(components);
  return m;
}

std::size_t PathComodule::dimension() const {
  std::size_t d = 0;
  for (const Component& c : components_) d += c.present.size() - c.killed.size();
  return d;
}

std::vector<Path> PathComodule::surviving(std::size_t component) const {
  const Component& c = components_.at(component);
  std::vector<Path> out;
  std::set_difference(c.present.begin(), c.present.end(), c.killed.begin(), c.killed.end(),
                      std::back_inserter(out));
  return out;
}

std::size_t PathComodule::layer(std::size_t component, const Path& p) const {
  const Component& c = components_.at(component);
  for (std::size_t j = 0; j <= p.length(); ++j) {
    if (!c.killed.contains(p.terminal(j))) return p.length() - j + 1;
  }
  throw DomainError("layer() asked for a killed class");
}

bool operator==(const PathComodule& a, const PathComodule& b) {
  if (a.coalgebra_ != b.coalgebra_ && !(*a.coalgebra_ == *b.coalgebra_)) return false;
  if (a.components_.size() != b.components_.size()) return false;
  for (std::size_t i = 0; i < a.components_.size(); ++i) {
    if (a.components_[i].anchor != b.components_[i].anchor) return false;
    if (a.surviving(i) != b.surviving(i)) return false;
  }
  return true;
}

VertexMultiset LoewySeries::layer(std::size_t n) const {
  if (n == 0 || n > layers.size()) return {};
  return layers[n - 1];
}

std::size_t LoewySeries::dimension() const {
  std::size_t d = 0;
  for (const auto& l : layers) {
    for (const auto& [v, k] : l) d += k;
  }
  return d;
}

PathComodule simple(CoalgebraPtr c, VertexId x) {
  c->quiver().check(x);
  Component comp{x, {Path::trivial(x)}, {}};
  return PathComodule(std::move(c), {std::move(comp)});
}

PathComodule injective(CoalgebraPtr c, VertexId x, std::optional<std::size_t> cap) {
  auto paths = c->paths_into(x, cap);
  Component comp{x, std::set<Path>(paths.begin(), paths.end()), {}};
  return PathComodule::trusted(std::move(c), {std::move(comp)});
}

LoewySeries socle_series(const PathComodule& m) {
  LoewySeries s;
  for (std::size_t i = 0; i < m.components().size(); ++i) {
    for (const Path& p : m.surviving(i)) {
      const std::size_t n = m.layer(i, p);
      if (s.layers.size() < n) s.layers.resize(n);
      ++s.layers[n - 1][p.source()];
    }
  }
  return s;
}

PathComodule quotient_by_socle(const PathComodule& m, std::size_t n) {
  std::vector<Component> comps(m.components().begin(), m.components().end());
  for (std::size_t i = 0; i < comps.size(); ++i) {
    for (const Path& p : m.surviving(i)) {
      if (m.layer(i, p) <= n) comps[i].killed.insert(p);
    }
  }
  return PathComodule::trusted(m.coalgebra(), std::move(comps));
}

PathComodule socle_part(const PathComodule& m, std::size_t n) {
  std::vector<Component> comps;
  for (std::size_t i = 0; i < m.components().size(); ++i) {
    const Component& c = m.components()[i];
    Component sub{c.anchor, c.killed, c.killed};
    for (const Path& p : m.surviving(i)) {
      if (m.layer(i, p) <= n) sub.present.insert(p);
    }
    comps.push_back(std::move(sub));
  }
  return PathComodule::trusted(m.coalgebra(), std::move(comps));
}

PathComodule direct_sum(std::span<const PathComodule> parts) {
  if (parts.empty()) throw DomainError("direct_sum of nothing has no coalgebra");
  std::vector<Component> comps;
  for (const PathComodule& m : parts) {
    if (m.coalgebra() != parts.front().coalgebra() &&
        !(*m.coalgebra() == *parts.front().coalgebra())) {
      throw DomainError("direct_sum over different coalgebras");
    }
    comps.insert(comps.end(), m.components().begin(), m.components().end());
  }
  return PathComodule::trusted(parts.front().coalgebra(), std::move(comps));
}

std::size_t hom_dim_simple_into(const PathComodule& m, VertexId y) {
  const auto soc = socle_series(m).layer(1);
  auto it = soc.find(y);
  return it == soc.end() ? 0 : it->second;
}

VertexMultiset multiset_union(const VertexMultiset& a, const VertexMultiset& b) {
  VertexMultiset out = a;
  for (const auto& [v, k] : b) out[v] += k;
  return out;
}

bool multiset_included(const VertexMultiset& a, const VertexMultiset& b) {
  for (const auto& [v, k] : a) {
    auto it = b.find(v);
    if (it == b.end() || it->second < k) return false;
  }
  return true;
}

}  // namespace pathloc
