#pragma once

// The invariant battery: every structural law the library relies on,
// evaluated on one coalgebra or one localization context. Each check is
// computed two ways (combinatorially and by an independent route, often
// the linear oracle) and compared.

#include <cstddef>
#include <string>
#include <vector>

#include "pathloc/localization.hpp"
#include "pathloc/properties.hpp"

namespace pathloc {

enum class CheckState { Passed, Failed, Skipped };

struct Check {
  std::string name;
  CheckState state = CheckState::Passed;
  std::string detail;  // first failure, or why it was skipped
};

struct VerifyReport {
  std::vector<Check> checks;
  std::size_t failures() const;
  std::size_t skipped() const;
};

struct VerifyOptions {
  bool oracle = true;
  /// Oracle comparisons only touch comodules of at most this dimension.
  std::size_t oracle_limit = 200;
  /// Largest n for per-layer checks.
  std::size_t max_layer = 3;
  /// Optional precomputed facts for C and for its opposite.
  const CoalgebraFacts* facts = nullptr;
  const CoalgebraFacts* opposite_facts = nullptr;
};

/// Laws of C alone: socle layers, quotient and subcomodule socle laws,
/// predecessor geometry, Ext^1 and Rad against the oracle.
void check_coalgebra(const CoalgebraPtr& c, VerifyReport& report, const VerifyOptions& opts = {});

/// Combinatorial laws of T, S, t and H for one context.
void check_localization(const LocalizationContext& ctx, VerifyReport& report,
                        const VerifyOptions& opts = {});

/// Coherence of the three batteries, central => semicentral, and
/// left/right duality under the opposite quiver.
void check_batteries(const LocalizationContext& ctx, VerifyReport& report,
                     const VerifyOptions& opts = {});

/// T, S and H against the oracle's e-action, cotensor kernel and
/// Hom(-, eC)^*.
void check_oracle_localization(const LocalizationContext& ctx, VerifyReport& report,
                               const VerifyOptions& opts = {});

/// All of the above.
VerifyReport verify(const LocalizationContext& ctx, const VerifyOptions& opts = {});

}  // namespace pathloc
