#pragma once

// Stability and semicentrality of the idempotent attached to X, each
// decided by a battery of conditions that are equivalent in theory and are
// all evaluated here, independently, so that any disagreement surfaces.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pathloc/extquiver.hpp"
#include "pathloc/localization.hpp"

namespace pathloc {

enum class ClauseState { True, False, Skipped };

struct Clause {
  std::string label;
  ClauseState state = ClauseState::Skipped;
  std::string evidence;  // first counterexample, or why it was skipped
};

struct EquivalenceBattery {
  std::string name;
  std::vector<Clause> clauses;

  /// Conjunction of the evaluated clauses.
  bool verdict() const;
  /// All evaluated clauses share one value.
  bool coherent() const;
  const Clause* find(const std::string& label) const;
};

/// Data about C that does not depend on X, shared across contexts.
struct CoalgebraFacts {
  ExtQuiver gamma{0};
  /// predecessor[y][x] = is_predecessor(c, y, x).
  std::vector<std::vector<std::optional<std::size_t>>> predecessor;
  /// hom_injectives[u][v] = dim Hom(E_u, E_v) from the oracle; present only
  /// for finite-dimensional C with every E_v of dimension <= the limit.
  std::optional<std::vector<std::vector<std::size_t>>> hom_injectives;
};

CoalgebraFacts coalgebra_facts(const CoalgebraPtr& c, bool with_oracle = true,
                               std::size_t oracle_limit = 200);

/// eC = eCe, stability and their graph forms.
EquivalenceBattery is_left_semicentral(const LocalizationContext& ctx,
                                       const CoalgebraFacts* facts = nullptr);
/// Ce = eCe and its graph, functor and torsion-part forms.
EquivalenceBattery is_right_semicentral(const LocalizationContext& ctx,
                                        const CoalgebraFacts* facts = nullptr);
/// Both semicentral, with the component forms. When central, an extra
/// clause checks that Gamma of eCe is Gamma of C restricted to X. The two
/// semicentral batteries are recomputed unless given.
EquivalenceBattery is_central(const LocalizationContext& ctx,
                              const CoalgebraFacts* facts = nullptr,
                              const EquivalenceBattery* left = nullptr,
                              const EquivalenceBattery* right = nullptr);

}  // namespace pathloc
