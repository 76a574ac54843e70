#pragma once

// Pointed coalgebras presented as path-spanned subcoalgebras of KQ.
//
// The span of a set of paths is a subcoalgebra of KQ exactly when the set
// is closed under taking contiguous subpaths (trivial paths included).
// Comultiplication, used by the oracle, is
//   delta(p) = sum over factorizations p = u * v of  v (x) u
// with the terminal factor on the left, which makes "paths ending at x"
// a right coideal: the injective comodule E_x.

#include <cstddef>
#include <memory>
#include <optional>
#include <unordered_set>
#include <vector>

#include "pathloc/quiver.hpp"

namespace pathloc {

class PathCoalgebra;
using CoalgebraPtr = std::shared_ptr<const PathCoalgebra>;

class PathCoalgebra {
 public:
  /// KQ itself: every path of q. Never materialized.
  static PathCoalgebra full(std::shared_ptr<const Quiver> q);
  /// The span of an explicit finite path set. Not validated here; see
  /// validate() and close_under_subpaths().
  static PathCoalgebra finite(std::shared_ptr<const Quiver> q, std::vector<Path> basis);

  const Quiver& quiver() const noexcept { return *quiver_; }
  const std::shared_ptr<const Quiver>& quiver_ptr() const noexcept { return quiver_; }

  bool is_full() const noexcept { return full_; }
  /// Finite basis, or KQ over an acyclic quiver.
  bool is_finite_dimensional() const noexcept { return finite_dim_; }
  /// Length of the longest basis path; nullopt when infinite-dimensional.
  std::optional<std::size_t> max_length() const noexcept { return max_length_; }
  std::size_t dimension() const;

  bool contains(const Path& p) const;

  /// Every basis path of length <= max_len (all of them when max_len is
  /// nullopt and the coalgebra is finite-dimensional), sorted.
  std::vector<Path> basis(std::optional<std::size_t> max_len = std::nullopt) const;
  /// Basis paths ending at x, sorted. Throws CapacityError when this set is
  /// infinite and no cap is given.
  std::vector<Path> paths_into(VertexId x, std::optional<std::size_t> max_len = std::nullopt) const;
  /// Basis paths starting at x, sorted. Same capacity rule.
  std::vector<Path> paths_from(VertexId x, std::optional<std::size_t> max_len = std::nullopt) const;
  /// Basis paths of length exactly one.
  std::vector<ArrowId> basis_arrows() const;

  /// A cycle that reaches x, witnessing that E_x is infinite-dimensional.
  std::optional<Path> infinite_into_witness(VertexId x) const;
  std::optional<Path> infinite_from_witness(VertexId x) const;

  friend bool operator==(const PathCoalgebra& a, const PathCoalgebra& b);

 private:
  PathCoalgebra() = default;

  std::shared_ptr<const Quiver> quiver_;
  bool full_ = false;
  bool finite_dim_ = true;
  std::optional<std::size_t> max_length_;
  std::unordered_set<Path, PathHash> members_;
  std::vector<std::vector<Path>> by_target_;  // sorted, finite basis only
  std::vector<std::vector<Path>> by_source_;
};

inline CoalgebraPtr share(PathCoalgebra c) { return std::make_shared<const PathCoalgebra>(std::move(c)); }

struct ValidationReport {
  /// Subpaths (including trivial paths) required by the subcoalgebra
  /// condition but absent from the basis, sorted.
  std::vector<Path> missing;
  bool ok() const noexcept { return missing.empty(); }
};

ValidationReport validate(const PathCoalgebra& c);

/// Smallest subpath-closed set containing `generators` and every trivial
/// path of q, sorted.
std::vector<Path> close_under_subpaths(const Quiver& q, const std::vector<Path>& generators);

struct GradedSlice {
  std::size_t degree;
  std::vector<Path> paths;
  friend bool operator==(const GradedSlice&, const GradedSlice&) = default;
};

/// Degrees 0..max_deg of E_x, the basis paths ending at x graded by length.
/// Without max_deg the slices run up to the longest such path.
std::vector<GradedSlice> injective_basis(const PathCoalgebra& c, VertexId x,
                                         std::optional<std::size_t> max_deg = std::nullopt);

/// KQ is hereditary; proper path-spanned subcoalgebras are treated as not.
bool is_hereditary(const PathCoalgebra& c);

/// The same coalgebra over the opposite quiver (every basis path reversed).
PathCoalgebra opposite(const PathCoalgebra& c);

/// Intersection of two finite bases over the same quiver.
PathCoalgebra intersection(const PathCoalgebra& a, const PathCoalgebra& b);

}  // namespace pathloc
