#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dpllkit/cnf.hpp"

namespace dpllkit {

enum class CheckFailure {
  // DPLL side conditions
  kConflictMissing,       // Conflict without the empty clause in the context
  kUnitClauseMissing,     // Unit(l) without [l] in the context
  kLiteralNotInValuation, // Elim/Red literal not in the valuation
  kLiteralNotInClause,    // Elim: l not in C; Red: complement(l) not in C
  kClauseNotInFormula,    // Elim/Red clause not in the context
  kInconsistentContext,   // valuation contains a literal and its complement
  // Resolution side conditions
  kPremiseIndex,          // Sub index out of range
  kSubsumption,           // Sub premise is not a subset of the conclusion
  kPivotLeft,             // complement(pivot) missing from the left premise
  kPivotRight,            // pivot missing from the right premise
  kResolventMismatch,     // stored conclusion differs from the resolvent
};

// Kebab-case name used in diagnostics, e.g. "unit-clause-missing".
std::string_view to_string(CheckFailure reason);

struct CheckFailureInfo {
  // Child indices from the root: 0 for a unary child or left branch, 1 for
  // the right branch.
  std::vector<std::size_t> path;
  CheckFailure reason;
  // Context reconstructed at the offending node. For resolution proofs the
  // valuation is empty and the formula lists the node's premises.
  Valuation valuation;
  Formula formula;
  std::string detail;
};

struct CheckReport {
  std::optional<CheckFailureInfo> failure;

  bool valid() const { return !failure.has_value(); }
  explicit operator bool() const { return valid(); }
};

std::string describe(const CheckReport &report);

}  // namespace dpllkit
