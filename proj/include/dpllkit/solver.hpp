#pragma once

// Proof-producing DPLL search.
//
// The search state is a triple (G, D, T): the valuation built so far, the
// pending clauses, and the "clean" clauses that share no variable with G and
// can therefore only be touched by a split. Each step inspects the head of
// D and either
//
//   - closes the branch (empty clause),
//   - propagates a unit clause or reduces it against G,
//   - strips a literal falsified by G from a longer clause,
//   - drops a clause satisfied by G,
//   - or files the clause under T,
//
// and splits on the first literal of T once D runs dry. Every step strictly
// decreases the pair (measure(G, D, T), |D|).

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <variant>

#include "dpllkit/cnf.hpp"
#include "dpllkit/dpll_proof.hpp"

namespace dpllkit {

enum class SolverMode {
  kWitness,  // build the model or the refutation
  kDecide,   // same search, verdict only
};

struct SolverConfig {
  SolverMode mode = SolverMode::kWitness;
  // Check the termination measure and the search-state preconditions on
  // every recursive call.
  bool assert_measure = false;
  // One line per recursive call, written to trace_stream (std::clog if null).
  bool trace = false;
  std::ostream *trace_stream = nullptr;
};

struct SolverStats {
  std::uint64_t calls = 0;
  std::uint64_t splits = 0;
  std::uint64_t measure_checks = 0;
  std::uint64_t max_depth = 0;
};

// Raised when a recursive call fails to decrease (measure, |D|).
class MeasureViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Raised when a search state violates its preconditions: empty clause among
// the clean clauses, inconsistent valuation, or a clean clause touching the
// valuation.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class Verdict {
 public:
  static Verdict sat(Assignment model) { return Verdict(std::move(model)); }
  static Verdict unsat(DpllDerivation proof) {
    return Verdict(std::move(proof));
  }

  bool is_sat() const { return std::holds_alternative<Assignment>(outcome_); }
  const Assignment &model() const { return std::get<Assignment>(outcome_); }
  const DpllDerivation &proof() const {
    return std::get<DpllDerivation>(outcome_);
  }

 private:
  explicit Verdict(std::variant<Assignment, DpllDerivation> v)
      : outcome_(std::move(v)) {}
  std::variant<Assignment, DpllDerivation> outcome_;
};

struct SolveResult {
  bool satisfiable = false;
  // Present in witness mode only.
  std::optional<Verdict> verdict;
  SolverStats stats;
};

SolveResult solve(const Formula &d, const SolverConfig &cfg = {});

// Shorthands for the two modes.
Verdict solve_witness(const Formula &d);
bool decide(const Formula &d);

// Search from an arbitrary state. Requires: no empty clause in t, g
// consistent, vars_of(g) and vars_of(t) disjoint (InvariantViolation
// otherwise). An unsat proof refutes g against formula_union(d, t).
SolveResult solve_aux(const Valuation &g, const Formula &d, const Formula &t,
                      const SolverConfig &cfg = {});

// Model making every literal of g true; other variables are true.
// Throws std::invalid_argument for inconsistent g.
Assignment complete_model(const Valuation &g);

// First literal of the first clean clause. Throws std::invalid_argument if t
// is empty or starts with the empty clause.
Literal choose_split(const Formula &t);

}  // namespace dpllkit
