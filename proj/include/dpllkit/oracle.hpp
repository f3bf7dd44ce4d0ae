#pragma once

// Truth-table semantics. Deliberately naive: this is the ground truth the
// solver, both checkers and the translator are compared against.

#include <cstddef>
#include <optional>
#include <stdexcept>

#include "dpllkit/cnf.hpp"

namespace dpllkit {

inline constexpr std::size_t kDefaultOracleCap = 24;

// Reads DPLLKIT_ORACLE_CAP, falling back to kDefaultOracleCap when unset or
// unparsable.
std::size_t oracle_cap_from_env();

class OracleCapExceeded : public std::runtime_error {
 public:
  OracleCapExceeded(std::size_t vars, std::size_t cap);
  std::size_t variable_count() const { return vars_; }

 private:
  std::size_t vars_;
};

struct OracleVerdict {
  // Set iff satisfiable.
  std::optional<Assignment> witness;

  bool satisfiable() const { return witness.has_value(); }
};

// Enumerates assignments over vars_of(d) in ascending binary order (lowest
// variable id most significant, false before true) and returns the first
// model found.
OracleVerdict brute_force_sat(const Formula &d,
                              std::size_t cap = kDefaultOracleCap);

// Is there a model of both g and d? Works for inconsistent g as well.
OracleVerdict compatible(const Valuation &g, const Formula &d,
                         std::size_t cap = kDefaultOracleCap);

}  // namespace dpllkit
