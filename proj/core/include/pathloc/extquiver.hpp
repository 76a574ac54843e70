#pragma once

// The right Ext-quiver of a path-spanned coalgebra and predecessor
// geometry. For pointed C every End(S_x) is the ground field, so
// dim Ext^1(S_y, S_x) is the number of basis arrows y -> x, and the
// n-predecessors of S_x (the socle of E_x / Soc^n E_x) are counted by
// basis paths of length n into x.

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "pathloc/coalgebra.hpp"

namespace pathloc {

class ExtQuiver {
 public:
  explicit ExtQuiver(std::size_t vertex_count) : vertex_count_(vertex_count) {}

  void add(VertexId from, VertexId to, std::size_t multiplicity = 1);

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  /// (from, to) -> multiplicity, only entries >= 1.
  const std::map<std::pair<VertexId, VertexId>, std::size_t>& arrows() const noexcept {
    return arrows_;
  }
  std::size_t multiplicity(VertexId from, VertexId to) const;
  bool has_arrow(VertexId from, VertexId to) const { return multiplicity(from, to) > 0; }
  std::vector<VertexId> successors(VertexId v) const;
  std::vector<VertexId> predecessors(VertexId v) const;

  friend bool operator==(const ExtQuiver&, const ExtQuiver&) = default;

 private:
  std::size_t vertex_count_;
  std::map<std::pair<VertexId, VertexId>, std::size_t> arrows_;
};

struct PredecessorReport {
  std::size_t n;
  /// y -> r_y, the number of length-n basis paths from y into x.
  std::map<VertexId, std::size_t> entries;
  friend bool operator==(const PredecessorReport&, const PredecessorReport&) = default;
};

ExtQuiver ext_quiver(const PathCoalgebra& c);

PredecessorReport n_predecessors(const PathCoalgebra& c, VertexId x, std::size_t n);

/// Smallest n >= 1 for which y is an n-predecessor of x, if any.
/// Finite bases are searched up to their longest path, KQ up to
/// |Q0| + |Q1|.
std::optional<std::size_t> is_predecessor(const PathCoalgebra& c, VertexId y, VertexId x);

/// Is there a path y -> ... -> x in g of exactly `len` arrows whose strict
/// intermediate vertices all satisfy `intermediate_ok`?
bool gamma_path_exists(const ExtQuiver& g, VertexId y, VertexId x, std::size_t len,
                       const std::function<bool(VertexId)>& intermediate_ok);

/// Is there a path of any positive length from y to x in g?
bool gamma_reachable(const ExtQuiver& g, VertexId y, VertexId x);

/// Weakly connected components of g, as a component index per vertex.
std::vector<std::size_t> weak_components(const ExtQuiver& g);

}  // namespace pathloc
