#pragma once

// Localization of a path-spanned coalgebra C at the idempotent e attached
// to a vertex subset X. A vertex is torsion iff it lies outside X.
//
// The quotient category is comodules over eCe, itself path-spanned over
// the cell quiver: vertices X, one arrow per "cell" (a basis path between
// X-vertices whose strict intermediates are torsion). On path comodules
// the functors act as follows.
//   T(M) = Me keeps the classes whose source lies in X. A class p factors
//        uniquely as q * w with w starting at the last X-vertex of p; the
//        tail w selects the eCe-component and q is read as a cell path.
//   S(S_x) = S_x []_{eCe} Ce is spanned by x and the basis paths into x
//        whose source and strict intermediates are torsion.
//   H(S_x) = Hom_{eCe}(S_x, eC)^* has a basis indexed by x and the basis
//        paths out of x whose later vertices are all torsion.

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pathloc/coalgebra.hpp"
#include "pathloc/comodule.hpp"
#include "pathloc/extquiver.hpp"

namespace pathloc {

/// The quiver of eCe together with the translation to and from C.
struct CellQuiver {
  std::shared_ptr<const Quiver> quiver;
  std::vector<VertexId> to_c;                    // cell vertex -> vertex of C
  std::vector<std::optional<VertexId>> from_c;   // vertex of C -> cell vertex
  std::vector<Path> cells;                       // cell arrow -> path of C
  std::map<Path, ArrowId> cell_index;            // path of C -> cell arrow
  CoalgebraPtr coalgebra;                        // eCe

  /// The path of C spelled by a cell path.
  Path lift(const Path& cell_path) const;
  /// A path of C whose endpoints lie in X, cut at its X-vertices. Throws
  /// DomainError if a segment is not a known cell.
  Path descend(const Path& c_path) const;
  /// Relabels a multiset of cell vertices by vertices of C.
  VertexMultiset to_c_labels(const VertexMultiset& m) const;
};

class LocalizationContext {
 public:
  /// Throws DomainError if c is not subpath-closed or X is empty or has
  /// an unknown vertex. `cap` bounds truncations of infinite injectives
  /// and is raised to at least |Q0|.
  LocalizationContext(CoalgebraPtr c, std::vector<VertexId> x, std::size_t cap = 16);

  const CoalgebraPtr& coalgebra() const noexcept { return coalgebra_; }
  const Quiver& quiver() const noexcept { return coalgebra_->quiver(); }
  bool in_x(VertexId v) const { return in_x_.at(index(v)); }
  bool is_torsion(VertexId v) const { return !in_x(v); }
  const std::vector<VertexId>& torsion_free() const noexcept { return x_; }
  const std::vector<VertexId>& torsion() const noexcept { return torsion_; }
  std::size_t cap() const noexcept { return cap_; }
  /// Cap to use for E_v: nullopt when E_v is finite-dimensional.
  std::optional<std::size_t> cap_for(VertexId v) const;

  /// The cell quiver; throws CapacityError when there are infinitely many
  /// cells.
  const CellQuiver& cells() const;

 private:
  CoalgebraPtr coalgebra_;
  std::vector<VertexId> x_;
  std::vector<VertexId> torsion_;
  std::vector<bool> in_x_;
  std::size_t cap_;
  std::shared_ptr<const CellQuiver> cells_;
  std::string cells_witness_;
};

/// eCe as a cell quiver.
const CellQuiver& localized_coalgebra(const LocalizationContext& ctx);

/// T(M) as a path comodule over eCe.
PathComodule quotient_T(const LocalizationContext& ctx, const PathComodule& m);

struct SectionResult {
  bool finite = true;
  std::optional<PathComodule> comodule;  // S(S_x) as a subcomodule of E_x
  std::optional<Path> witness;           // torsion cycle when infinite
  std::string generators;
};

/// S(S_x) for x in X.
SectionResult section_on_simple(const LocalizationContext& ctx, VertexId x);

/// S(E-bar_x) = E_x, truncated at `cap` when given.
PathComodule section_on_injective(const LocalizationContext& ctx, VertexId x,
                                  std::optional<std::size_t> cap = std::nullopt);

/// The largest subcomodule of M killed by T.
PathComodule torsion_subcomodule(const LocalizationContext& ctx, const PathComodule& m);

/// Soc(S(S_x) / Soc^n S(S_x)) as a multiset of vertices of C.
VertexMultiset section_predecessor_layers(const LocalizationContext& ctx, VertexId x,
                                          std::size_t n);

/// Sources of the length-n basis paths into x whose source and strict
/// intermediates are torsion, counted with multiplicity.
VertexMultiset torsion_path_sources(const LocalizationContext& ctx, VertexId x, std::size_t n);

struct ColocalizationVerdict {
  bool exists = true;
  std::optional<Path> witness;  // torsion cycle reachable from X
};

/// Does H exist, i.e. is eC quasi-finite over eCe?
ColocalizationVerdict colocalizing_exists(const LocalizationContext& ctx);

struct HSimple {
  VertexId x;
  /// x itself, then the basis paths out of x with all later vertices
  /// torsion, sorted.
  std::vector<Path> basis;
  std::size_t dimension() const noexcept { return basis.size(); }
  bool is_simple() const noexcept { return basis.size() == 1; }
};

/// H(S_x). Throws UnsupportedContext when H does not exist.
HSimple h_on_simple(const LocalizationContext& ctx, VertexId x);

/// 1 + sum over torsion y of the multiplicity of x in Soc T(E_y).
std::size_t h_dimension_from_quotients(const LocalizationContext& ctx, VertexId x);

}  // namespace pathloc
