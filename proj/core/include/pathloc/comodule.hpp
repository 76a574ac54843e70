#pragma once

// Right comodules that are path-set subquotients of finite direct sums of
// indecomposable injectives E_x.
//
// A component is anchored at a vertex a and holds a set `present` of basis
// paths ending at a, closed under terminal subpaths, and a terminal-closed
// subset `killed`. It stands for span(present) / span(killed). The
// coaction of a surviving class p is
//   rho(p) = sum over p = u * v with v surviving of  v (x) u.

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "pathloc/coalgebra.hpp"

namespace pathloc {

/// Vertex multiset: vertex -> multiplicity (never zero).
using VertexMultiset = std::map<VertexId, std::size_t>;

struct Component {
  VertexId anchor;
  std::set<Path> present;
  std::set<Path> killed;
};

class PathComodule {
 public:
  /// Checks every component invariant; throws DomainError on violation.
  PathComodule(CoalgebraPtr c, std::vector<Component> components);

  static PathComodule zero(CoalgebraPtr c) { return PathComodule(std::move(c), {}); }
  /// No checks; for constructions that preserve the invariants by design.
  static PathComodule trusted(CoalgebraPtr c, std::vector<Component> components);

  const CoalgebraPtr& coalgebra() const noexcept { return coalgebra_; }
  std::span<const Component> components() const noexcept { return components_; }

  std::size_t dimension() const;
  bool is_zero() const { return dimension() == 0; }

  /// Surviving classes (present minus killed) of one component, sorted.
  std::vector<Path> surviving(std::size_t component) const;

  /// 1-based Loewy layer of a surviving class: Soc^n contains p iff
  /// layer(p) <= n.
  std::size_t layer(std::size_t component, const Path& p) const;

  /// Same coalgebra and, component by component, the same anchors and
  /// surviving classes. Surviving classes determine the subquotient.
  friend bool operator==(const PathComodule& a, const PathComodule& b);

 private:
  PathComodule() = default;
  CoalgebraPtr coalgebra_;
  std::vector<Component> components_;
};

struct LoewySeries {
  /// layers[n-1] = simple summands of Soc^n M / Soc^(n-1) M, labelled by
  /// vertex. Trailing empty layers are never stored.
  std::vector<VertexMultiset> layers;

  std::size_t loewy_length() const noexcept { return layers.size(); }
  /// Layer n (1-based); empty past the Loewy length.
  VertexMultiset layer(std::size_t n) const;
  std::size_t dimension() const;

  friend bool operator==(const LoewySeries&, const LoewySeries&) = default;
};

/// S_x: the class of the trivial path at x.
PathComodule simple(CoalgebraPtr c, VertexId x);

/// E_x, truncated to paths of length <= cap when a cap is given (the
/// truncation is Soc^(cap+1) E_x). Throws CapacityError for an infinite
/// E_x without a cap.
PathComodule injective(CoalgebraPtr c, VertexId x, std::optional<std::size_t> cap = std::nullopt);

LoewySeries socle_series(const PathComodule& m);

/// M / Soc^n M.
PathComodule quotient_by_socle(const PathComodule& m, std::size_t n);

/// Soc^n M as a subcomodule of M.
PathComodule socle_part(const PathComodule& m, std::size_t n);

/// Component concatenation. Throws DomainError for mixed coalgebras.
PathComodule direct_sum(std::span<const PathComodule> parts);

/// dim Hom(S_y, M): the multiplicity of y in Soc M.
std::size_t hom_dim_simple_into(const PathComodule& m, VertexId y);

/// Union of multisets (multiplicities add).
VertexMultiset multiset_union(const VertexMultiset& a, const VertexMultiset& b);
/// a <= b pointwise.
bool multiset_included(const VertexMultiset& a, const VertexMultiset& b);

}  // namespace pathloc
