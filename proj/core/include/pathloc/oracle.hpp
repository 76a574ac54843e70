#pragma once

// Brute-force linear model of comodules, used to cross-check every
// combinatorial shortcut.
//
// A LinearComodule over a path-spanned coalgebra D stores, for each basis
// vector i, rho(i) as a list of terms (j, c, k) meaning k * (j (x) c) with
// c a basis path of D. The construction checks the counit and
// coassociativity laws exactly against
//   delta(c) = sum over c = u * v of  v (x) u.
// Every basis vector must be homogeneous: the trivial-path part of rho(i)
// is exactly i (x) e_w for one vertex w, the weight of i.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "pathloc/coalgebra.hpp"
#include "pathloc/comodule.hpp"
#include "pathloc/linalg.hpp"
#include "pathloc/localization.hpp"

namespace pathloc {

struct Term {
  std::size_t index;
  Path c;
  Rational coef;
};

class LinearComodule {
 public:
  /// Throws InternalError when a law fails, a path is not in the
  /// coalgebra, or a basis vector is not homogeneous.
  LinearComodule(CoalgebraPtr c, std::vector<std::vector<Term>> coaction);

  const CoalgebraPtr& coalgebra() const noexcept { return coalgebra_; }
  std::size_t dimension() const noexcept { return coaction_.size(); }
  const std::vector<Term>& coaction(std::size_t i) const { return coaction_.at(i); }
  VertexId weight(std::size_t i) const { return weights_.at(i); }
  const std::vector<VertexId>& weights() const noexcept { return weights_; }

 private:
  CoalgebraPtr coalgebra_;
  std::vector<std::vector<Term>> coaction_;
  std::vector<VertexId> weights_;
};

/// Basis = surviving classes, component by component.
LinearComodule realize(const PathComodule& m);

/// H(S_x) on the basis phi_p with rho(phi_u) = sum over p = u * v in the
/// basis of phi_p (x) v.
LinearComodule realize(const LocalizationContext& ctx, const HSimple& h);

struct MorphismSpace {
  std::size_t domain_dim = 0;
  std::size_t codomain_dim = 0;
  /// Each morphism f flattened as f[a][b] at column a * domain_dim + b,
  /// where a indexes the codomain basis and b the domain basis. RREF.
  std::vector<SparseVec> basis;
  std::size_t dimension() const noexcept { return basis.size(); }
};

MorphismSpace hom_space(const LinearComodule& m, const LinearComodule& n);
std::size_t hom_dim(const LinearComodule& m, const LinearComodule& n);

/// RREF basis of Soc M = rho^-1(M (x) D_0).
std::vector<SparseVec> socle_subspace(const LinearComodule& m);
/// The subcomodule on an RREF basis. Throws InternalError if the span is
/// not a subcomodule.
LinearComodule subcomodule(const LinearComodule& m, const std::vector<SparseVec>& rref);
/// M / W for an RREF basis of a subcomodule W.
LinearComodule quotient(const LinearComodule& m, const std::vector<SparseVec>& rref);

/// Loewy series by iterating socles of quotients.
LoewySeries socle_series(const LinearComodule& m);

/// Iso test: equal dimension and an invertible random element of the
/// morphism space (rank taken modulo a 61-bit prime, fixed seed).
bool is_isomorphic(const LinearComodule& a, const LinearComodule& b);

/// A value computed at cap k and k + 1; empty when the two disagree.
struct Stabilized {
  std::optional<std::size_t> value;
  std::size_t cap = 0;
};
Stabilized stabilize(const std::function<std::size_t(std::size_t)>& at_cap, std::size_t cap);

/// dim Hom(S_y, E_x / Soc E_x), with the socle taken by the oracle. An
/// infinite E_x is truncated at `cap` and `cap + 1`.
Stabilized ext1_dim(const CoalgebraPtr& c, VertexId y, VertexId x, std::size_t cap = 4);

/// T(M) = Me with coaction (id (x) pi)rho, pi: C -> eCe.
LinearComodule quotient_functor(const LocalizationContext& ctx, const LinearComodule& m);

/// Ce as a right C-comodule with its left eCe-coaction folded into the
/// cotensor kernel N []_{eCe} Ce. Throws CapacityError for infinite Ce.
LinearComodule cotensor_section(const LocalizationContext& ctx, const LinearComodule& n);

/// eC as a right eCe-comodule (the realization of T(C)). Throws
/// CapacityError for infinite eC.
LinearComodule ec_over_ece(const LocalizationContext& ctx);

/// Hom_{eCe}(N, eC)^* with the C-coaction dual to the left coaction of eC.
LinearComodule h_finite(const LocalizationContext& ctx, const LinearComodule& n);

}  // namespace pathloc
